"""Concrete geometry: realization, gluing, symmetry axes, assemblies."""

from .assembly import (
    ASSEMBLY_TARGETS,
    Assembly,
    AssemblyError,
    Dihedral,
    Mesh,
    TriangleFace,
    assemble,
    dihedrals,
    expected_face_census,
    expected_triangle_census,
    export_obj,
    export_patch,
    triangle_family,
)
from .axes import AxisFrame, face_axis_class, icosahedron_vertices
from .placement import (
    AmbiguityError,
    CongruenceError,
    GlueError,
    PlacedTile,
    face_correspondences,
    glue,
    realize,
)
from .schemes import CMVolume, EdgeScheme, cm_volume, edge_scheme

__all__ = [
    "ASSEMBLY_TARGETS",
    "AmbiguityError",
    "Assembly",
    "AssemblyError",
    "AxisFrame",
    "CMVolume",
    "CongruenceError",
    "Dihedral",
    "EdgeScheme",
    "GlueError",
    "Mesh",
    "PlacedTile",
    "TriangleFace",
    "assemble",
    "cm_volume",
    "dihedrals",
    "edge_scheme",
    "expected_face_census",
    "expected_triangle_census",
    "export_obj",
    "export_patch",
    "face_axis_class",
    "face_correspondences",
    "glue",
    "icosahedron_vertices",
    "realize",
    "triangle_family",
]
