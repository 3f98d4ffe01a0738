"""Assembled tile clusters: dodecahedron, icosahedron and the composites.

assemble() instantiates a precomputed dissection (see _wiring) as a list
of PlacedTiles, verifies that no two tetrahedra overlap, classifies every
tetrahedron face as internal wall or outer boundary, and fuses coplanar
boundary triangles into the polygonal faces of the outer hull.

Boundary detection is a coverage test, not face matching: a face is on
the boundary iff a probe point pushed slightly outward along its normal
lies in no tetrahedron of the cluster.  Matching faces pairwise would
misread the quadrilateral contact walls whose two sides are triangulated
along different diagonals.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import catalog
from ..catalog import TileKind
from ..golden import GoldenRational, embed
from . import _wiring
from .placement import PlacedTile, _wound_outward

__all__ = [
    "Mesh",
    "TriangleFace",
    "Dihedral",
    "Assembly",
    "AssemblyError",
    "ASSEMBLY_TARGETS",
    "assemble",
    "dihedrals",
    "triangle_family",
    "export_obj",
    "export_patch",
]

ASSEMBLY_TARGETS = ("d1", "i1", "E", "C", "T1", "T2", "T3", "T3bar", "T4")


class AssemblyError(RuntimeError):
    """The tile set is not a packing (overlap or inconsistent wiring)."""


@dataclass(frozen=True, eq=False)
class Mesh:
    """Polygonal outer surface: shared vertices, outward-wound faces.

    provenance[i] lists the names of the tile instances whose triangles
    were fused into face i.
    """

    vertices: np.ndarray
    faces: tuple[tuple[int, ...], ...]
    provenance: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def counts(self) -> tuple[int, int, int]:
        """(N0, N1, N2): vertices, edges, faces."""
        return len(self.vertices), len(self.edges()), len(self.faces)

    def edges(self) -> list[tuple[int, int]]:
        seen = set()
        for f in self.faces:
            for i in range(len(f)):
                a, b = f[i], f[(i + 1) % len(f)]
                seen.add((min(a, b), max(a, b)))
        return sorted(seen)

    def face_points(self, i: int) -> np.ndarray:
        return self.vertices[list(self.faces[i])]

    def face_edge_lengths(self, i: int) -> tuple[float, ...]:
        pts = self.face_points(i)
        n = len(pts)
        return tuple(float(np.linalg.norm(pts[(k + 1) % n] - pts[k])) for k in range(n))

    def face_normal(self, i: int) -> np.ndarray:
        """Unit normal by the cyclic (Newell) sum; outward for hull faces."""
        pts = self.face_points(i)
        n = np.zeros(3)
        for k in range(len(pts)):
            a, b = pts[k], pts[(k + 1) % len(pts)]
            n += np.cross(a, b)
        return n / np.linalg.norm(n)

    def face_planarity(self, i: int) -> float:
        """Largest distance of a face vertex from the face's mean plane."""
        pts = self.face_points(i)
        n = self.face_normal(i)
        d = (pts - pts.mean(axis=0)) @ n
        return float(np.max(np.abs(d)))

    def volume(self) -> float:
        """Enclosed volume by the divergence theorem (faces wound outward)."""
        total = 0.0
        for f in self.faces:
            p0 = self.vertices[f[0]]
            for k in range(1, len(f) - 1):
                total += float(np.linalg.det(np.stack(
                    [p0, self.vertices[f[k]], self.vertices[f[k + 1]]])))
        return total / 6.0

    def face_census(self, ndigits: int = 6) -> Counter:
        """Counter of (side count, sorted rounded edge lengths)."""
        out: Counter = Counter()
        for i in range(len(self.faces)):
            lens = tuple(sorted(round(x, ndigits) for x in self.face_edge_lengths(i)))
            out[(len(lens), lens)] += 1
        return out


@dataclass(frozen=True, eq=False)
class TriangleFace:
    """One tetrahedron face inside an assembly, with its owner's name."""

    owner: str
    points: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.points, dtype=float)
        p.setflags(write=False)
        object.__setattr__(self, "points", p)

    def edge_lengths(self) -> tuple[float, float, float]:
        p = self.points
        return (float(np.linalg.norm(p[1] - p[0])),
                float(np.linalg.norm(p[2] - p[1])),
                float(np.linalg.norm(p[0] - p[2])))

    def normal(self) -> np.ndarray:
        n = np.cross(self.points[1] - self.points[0], self.points[2] - self.points[0])
        return n / np.linalg.norm(n)


@dataclass(frozen=True)
class Dihedral:
    """Interior angle along one mesh edge; None when the edge is open."""

    edge: tuple[int, int]
    faces: tuple[int, ...]
    angle: float | None


def triangle_family(lengths, tol: float = 1e-9) -> str:
    """'equilateral', 'robinson' (ratio 1:1:tau or 1:tau:tau) or 'other'."""
    a, b, c = sorted(float(x) for x in lengths)
    tau = embed(GoldenRational(0, 1))
    if c - a <= tol * max(c, 1.0):
        return "equilateral"
    if abs(b - a) <= tol and abs(c - tau * a) <= tol * max(c, 1.0):
        return "robinson"
    if abs(c - b) <= tol and abs(b - tau * a) <= tol * max(c, 1.0):
        return "robinson"
    return "other"


def expected_face_census(kind: TileKind | str, ndigits: int = 6) -> Counter:
    """The cataloged post-merge face census in Mesh.face_census() form."""
    out: Counter = Counter()
    for spec in catalog.record(kind).faces:
        lens = tuple(sorted(round(embed(e), ndigits) for e in spec.edges))
        out[(len(lens), lens)] += spec.multiplicity
    return out


def expected_triangle_census(kind: TileKind | str, ndigits: int = 6) -> Counter:
    """The cataloged pre-merge triangle census (composite kinds only)."""
    out: Counter = Counter()
    for spec in catalog.record(kind).premerge_triangles:
        lens = tuple(sorted(round(embed(e), ndigits) for e in spec.edges))
        out[lens] += spec.multiplicity
    return out


# ---------------------------------------------------------------------------
# wiring interpretation


def _exact_point(triple) -> tuple[GoldenRational, ...]:
    return tuple(GoldenRational(an * bd, bn * ad, ad * bd) for (an, ad), (bn, bd) in triple)


def _float_point(triple) -> np.ndarray:
    return np.array([embed(c) for c in _exact_point(triple)])


_SOURCES = {
    "d1": (_wiring.D1_COORDS, _wiring.D1_TETS, None),
    "i1": (_wiring.I1_COORDS, _wiring.I1_TETS, None),
    "T1": (_wiring.D1_COORDS, _wiring.D1_TETS, range(4, 10)),
    "T2": (_wiring.D1_COORDS, _wiring.D1_TETS, (0, 1)),
    "T4": (_wiring.D1_COORDS, _wiring.D1_TETS, (10, 11, 12)),
    "E": (_wiring.D1_COORDS, _wiring.D1_TETS, (4, 5, 6)),
    "C": (_wiring.D1_COORDS, _wiring.D1_TETS, (7, 8, 9)),
    "T3": (_wiring.I1_COORDS, _wiring.T3_TETS, None),
    "T3bar": (_wiring.I1_COORDS, _wiring.I1_TETS, _wiring.I1_T3BAR),
}

_TET_FACES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


# ---------------------------------------------------------------------------
# geometric predicates


def _tet_axes(verts: np.ndarray) -> tuple[list[np.ndarray], list[np.ndarray]]:
    a, b, c, d = verts
    edges = [b - a, c - a, d - a, c - b, d - b, d - c]
    axes = [np.cross(b - a, c - a), np.cross(b - a, d - a),
            np.cross(c - a, d - a), np.cross(c - b, d - b)]
    return edges, axes


def _tets_overlap(v1: np.ndarray, v2: np.ndarray, tol: float) -> bool:
    """True if the interiors intersect (separating axis test)."""
    e1, f1 = _tet_axes(v1)
    e2, f2 = _tet_axes(v2)
    axes = f1 + f2 + [np.cross(a, b) for a in e1 for b in e2]
    for ax in axes:
        n = np.linalg.norm(ax)
        if n < 1e-12:
            continue
        ax = ax / n
        p1 = v1 @ ax
        p2 = v2 @ ax
        if min(p1.max() - p2.min(), p2.max() - p1.min()) <= tol:
            return False
    return True


def _point_in_tets(point: np.ndarray, inverses, origins, tol: float) -> bool:
    for inv, org in zip(inverses, origins):
        x = inv @ (point - org)
        if x.min() >= -tol and x.sum() <= 1.0 + tol:
            return True
    return False


# ---------------------------------------------------------------------------
# coplanar fusion of boundary triangles


def _merge_cycles(fa: tuple[int, ...], fb: tuple[int, ...]) -> tuple[int, ...] | None:
    """Union of two consistently wound polygons sharing exactly one edge."""
    edges_a = {(fa[i], fa[(i + 1) % len(fa)]) for i in range(len(fa))}
    shared = [e for e in edges_a if (e[1], e[0]) in
              {(fb[i], fb[(i + 1) % len(fb)]) for i in range(len(fb))}]
    if len(shared) != 1:
        return None
    i, j = shared[0]
    ka = fa.index(i)
    # rotate fb so it starts at i (the vertex after j in fb)
    kb = fb.index(i)
    path = [fb[(kb + s) % len(fb)] for s in range(len(fb))]  # i ... j
    merged = list(fa[:ka + 1]) + path[1:-1] + list(fa[ka + 1:])
    if len(set(merged)) != len(merged):
        return None
    return tuple(merged)


def _drop_collinear(cycle: tuple[int, ...], points: np.ndarray, tol: float) -> tuple[int, ...]:
    out = list(cycle)
    changed = True
    while changed and len(out) > 3:
        changed = False
        for k in range(len(out)):
            p_prev = points[out[k - 1]]
            p_cur = points[out[k]]
            p_next = points[out[(k + 1) % len(out)]]
            if np.linalg.norm(np.cross(p_cur - p_prev, p_next - p_cur)) <= tol:
                out.pop(k)
                changed = True
                break
    return tuple(out)


def _fuse_coplanar(faces: list[tuple[int, ...]], owners: list[set[str]],
                   points: np.ndarray, tol: float) -> tuple[list, list]:
    faces = list(faces)
    owners = [set(o) for o in owners]

    def plane(f):
        pts = points[list(f)]
        n = np.cross(pts[1] - pts[0], pts[2] - pts[0])
        n = n / np.linalg.norm(n)
        return n, float(pts[0] @ n)

    changed = True
    while changed:
        changed = False
        for a in range(len(faces)):
            na, da = plane(faces[a])
            for b in range(a + 1, len(faces)):
                nb, db = plane(faces[b])
                if abs(float(na @ nb)) < 1.0 - 1e-9:
                    continue
                if abs(da - float(na @ nb) * db) > tol:
                    continue
                if float(na @ nb) < 0:
                    continue  # opposite-facing coplanar faces never fuse
                merged = _merge_cycles(faces[a], faces[b])
                if merged is None:
                    continue
                faces[a] = merged
                owners[a] |= owners[b]
                del faces[b]
                del owners[b]
                changed = True
                break
            if changed:
                break
    faces = [_drop_collinear(f, points, tol) for f in faces]
    return faces, owners


# ---------------------------------------------------------------------------
# the assembly itself


@dataclass(frozen=True, eq=False)
class Assembly:
    """A verified packing of fundamental tetrahedra with its outer hull."""

    target: str
    tiles: tuple[PlacedTile, ...]
    labels: tuple[str, ...]
    points: np.ndarray
    exact_points: tuple[tuple[GoldenRational, ...], ...]
    mesh: Mesh
    walls: tuple[TriangleFace, ...]
    boundary_triangles: tuple[TriangleFace, ...]
    groups: tuple[tuple[str, tuple[int, ...], str], ...]

    def volume_exact(self) -> GoldenRational:
        """Sum of the cataloged volumes of the constituent tetrahedra."""
        total = GoldenRational(0)
        for t in self.tiles:
            total = total + catalog.record(t.kind).volume
        return total

    def tile_volume_sum(self) -> float:
        return float(sum(t.volume() for t in self.tiles))

    def fundamental_counts(self) -> dict[TileKind, int]:
        out: dict[TileKind, int] = {}
        for t in self.tiles:
            out[t.kind] = out.get(t.kind, 0) + 1
        return {k: out[k] for k in sorted(out, key=lambda s: s.value)}


def _build(target: str, tol: float) -> Assembly:
    coords, tets, subset = _SOURCES[target]
    if subset is not None:
        tets = [tets[i] for i in subset]

    labels = tuple(coords)
    index = {lab: k for k, lab in enumerate(labels)}
    exact_points = tuple(_exact_point(coords[lab]) for lab in labels)
    points = np.array([[embed(c) for c in p] for p in exact_points])

    tiles = []
    counters: dict[str, int] = {}
    tet_vert_idx = []
    for kind_name, labs in tets:
        kind = TileKind(kind_name)
        idx = tuple(index[l] for l in labs)
        verts = points[list(idx)]
        det = float(np.linalg.det(np.stack([verts[1] - verts[0],
                                            verts[2] - verts[0],
                                            verts[3] - verts[0]])))
        seq = counters.get(kind_name, 0)
        counters[kind_name] = seq + 1
        tiles.append(PlacedTile(
            kind=kind, vertices=verts,
            faces=_wound_outward(verts, _TET_FACES),
            parity=1 if det > 0 else -1,
            name=f"{kind_name}-{seq}"))
        tet_vert_idx.append(idx)

    # no two tetrahedra may share interior volume
    for a in range(len(tiles)):
        for b in range(a + 1, len(tiles)):
            if _tets_overlap(tiles[a].vertices, tiles[b].vertices, tol):
                raise AssemblyError(
                    f"{target}: tiles {tiles[a].name} and {tiles[b].name} overlap")

    # classify each tetrahedron face by the outward probe test
    inverses = []
    origins = []
    for t in tiles:
        a = t.vertices[0]
        m = np.stack([t.vertices[1] - a, t.vertices[2] - a, t.vertices[3] - a], axis=1)
        inverses.append(np.linalg.inv(m))
        origins.append(a)

    eps = 1e-6
    boundary: list[tuple[int, tuple[int, int, int]]] = []  # (tile index, label indices)
    walls: list[TriangleFace] = []
    for ti, t in enumerate(tiles):
        vert_ids = tet_vert_idx[ti]
        for f in t.faces:
            tri_ids = tuple(vert_ids[k] for k in f)
            pts = points[list(tri_ids)]
            n = np.cross(pts[1] - pts[0], pts[2] - pts[0])
            n = n / np.linalg.norm(n)
            probe = pts.mean(axis=0) + eps * n
            if _point_in_tets(probe, inverses, origins, tol):
                walls.append(TriangleFace(owner=tiles[ti].name, points=pts))
            else:
                boundary.append((ti, tri_ids))

    boundary_triangles = tuple(
        TriangleFace(owner=tiles[ti].name, points=points[list(tri)])
        for ti, tri in boundary)

    fused, owner_sets = _fuse_coplanar(
        [tri for _, tri in boundary],
        [{tiles[ti].name} for ti, _ in boundary],
        points, tol)

    # compact the vertex array to the ones the hull actually uses
    used = sorted({i for f in fused for i in f})
    remap = {old: new for new, old in enumerate(used)}
    mesh = Mesh(
        vertices=points[used],
        faces=tuple(tuple(remap[i] for i in f) for f in fused),
        provenance=tuple(tuple(sorted(o)) for o in owner_sets))

    groups: tuple = ()
    if target == "d1":
        groups = tuple((kind, tuple(ids), region) for kind, ids, region in _wiring.D1_GROUPS)

    return Assembly(
        target=target, tiles=tuple(tiles), labels=labels, points=points,
        exact_points=exact_points, mesh=mesh, walls=tuple(walls),
        boundary_triangles=boundary_triangles, groups=groups)


@lru_cache(maxsize=None)
def assemble(target: str, tol: float = 1e-9) -> Assembly:
    """Instantiate one of the precomputed clusters; see ASSEMBLY_TARGETS."""
    if target not in _SOURCES:
        raise KeyError(f"unknown assembly target {target!r}; choose from {ASSEMBLY_TARGETS}")
    return _build(target, tol)


def dihedrals(mesh: Mesh) -> list[Dihedral]:
    """Interior dihedral angle along every mesh edge.

    The angle between two faces is pi minus the angle of their outward
    normals.  Edges with one incident face are reported with angle None
    rather than treated as an error.
    """
    incident: dict[tuple[int, int], list[int]] = {}
    for fi, f in enumerate(mesh.faces):
        for i in range(len(f)):
            a, b = f[i], f[(i + 1) % len(f)]
            incident.setdefault((min(a, b), max(a, b)), []).append(fi)
    out = []
    for edge in sorted(incident):
        fs = incident[edge]
        if len(fs) == 2:
            n1, n2 = mesh.face_normal(fs[0]), mesh.face_normal(fs[1])
            cosang = max(-1.0, min(1.0, float(n1 @ n2)))
            angle = math.pi - math.acos(cosang)
        else:
            angle = None
        out.append(Dihedral(edge=edge, faces=tuple(fs), angle=angle))
    return out


# ---------------------------------------------------------------------------
# exports


def export_obj(assembly: Assembly) -> str:
    """Wavefront OBJ text: one named object per tile, faces wound outward."""
    lines = [f"# {assembly.target}: {len(assembly.tiles)} tetrahedra"]
    offset = 0
    for t in assembly.tiles:
        lines.append(f"o {t.name}")
        for v in t.vertices:
            lines.append("v " + " ".join(f"{x:.17g}" for x in v))
        for f in t.faces:
            lines.append("f " + " ".join(str(i + 1 + offset) for i in f))
        offset += len(t.vertices)
    return "\n".join(lines) + "\n"


def export_patch(assembly: Assembly) -> dict:
    """JSON-ready description: tiles with parities plus the merged hull."""
    return {
        "frame": "icosa-half-integer",
        "target": assembly.target,
        "tiles": [
            {
                "kind": t.kind.value,
                "name": t.name,
                "parity": t.parity,
                "vertices": [[float(x) for x in v] for v in t.vertices],
            }
            for t in assembly.tiles
        ],
        "hull": {
            "vertices": [[float(x) for x in v] for v in assembly.mesh.vertices],
            "faces": [list(f) for f in assembly.mesh.faces],
            "provenance": [list(p) for p in assembly.mesh.provenance],
        },
    }
