"""Static data model of the thirteen cataloged shapes.

Six fundamental tetrahedra t1..t6 with edges in {1, tau}, the composite
tiles E, C, T1..T4 built by gluing fundamentals on equilateral faces, the
T3bar variant (one t5 of T3 re-seated by a 120 degree turn), and the
standard polyhedron inventories (unit icosahedron and dodecahedron, their
tau-scaled versions) expressed in both fundamental and composite tiles.

Volumes are exact GoldenRationals; every composite volume equals the sum
of its composition, and every composite satisfies Euler's relation
N0 - N1 + N2 = 2.  Face censuses are stored post-merge: coplanar glued
triangles are fused, e.g. the four trapezoids of T1 or the base pentagon
of T3.  The raw triangle census before merging is kept as auxiliary data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .golden import ONE, TAU, GoldenRational

__all__ = [
    "TileKind",
    "FaceSpec",
    "TileRecord",
    "Inventory",
    "record",
    "expand_to_fundamental",
    "total_volume",
    "all_records",
    "inventory",
    "INVENTORY_TARGETS",
    "CATALOG_ORDER",
]


class TileKind(str, Enum):
    t1 = "t1"
    t2 = "t2"
    t3 = "t3"
    t4 = "t4"
    t5 = "t5"
    t6 = "t6"
    E = "E"
    C = "C"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T3bar = "T3bar"
    T4 = "T4"

    @property
    def is_fundamental(self) -> bool:
        return self.value.startswith("t")

    def __str__(self) -> str:
        return self.value


CATALOG_ORDER = [
    TileKind.t1, TileKind.t2, TileKind.t3, TileKind.t4, TileKind.t5, TileKind.t6,
    TileKind.E, TileKind.C,
    TileKind.T1, TileKind.T2, TileKind.T3, TileKind.T4, TileKind.T3bar,
]

_SHAPE_SIDES = {"triangle": 3, "trapezoid": 4, "pentagon": 5}


@dataclass(frozen=True)
class FaceSpec:
    """A congruence class of faces: shape, edge multiset, multiplicity.

    axis_class records which symmetry axis the face is normal to when the
    tile sits inside an icosahedrally symmetric assembly: Robinson triangles
    (edge ratios (1,1,tau) or (1,tau,tau) at any scale) are normal to 5-fold
    axes, equilateral triangles to 3-fold axes.
    """

    shape: str
    edges: tuple[GoldenRational, ...]
    multiplicity: int = 1
    axis_class: str = field(default="", compare=False)

    def __post_init__(self):
        if self.shape not in _SHAPE_SIDES:
            raise ValueError(f"unknown face shape {self.shape!r}")
        if len(self.edges) != _SHAPE_SIDES[self.shape]:
            raise ValueError(f"{self.shape} needs {_SHAPE_SIDES[self.shape]} edges")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if not self.axis_class:
            object.__setattr__(self, "axis_class", _axis_class_of(self.shape, self.edges))

    def edge_names(self) -> str:
        return "(" + ",".join(_edge_name(e) for e in self.edges) + ")"


def _edge_name(e: GoldenRational) -> str:
    if e == ONE:
        return "1"
    if e == TAU:
        return "tau"
    if e == TAU * TAU:
        return "tau^2"
    return str(e)


def _axis_class_of(shape: str, edges: tuple[GoldenRational, ...]) -> str:
    if shape != "triangle":
        return "none"
    lens = sorted(edges)
    a, b, c = lens
    if a == b == c:
        return "three-fold"
    # Robinson shapes: (x, x, tau*x) or (x, tau*x, tau*x)
    if a == b and c == a * TAU:
        return "five-fold"
    if b == c and b == a * TAU:
        return "five-fold"
    return "none"


@dataclass(frozen=True)
class TileRecord:
    kind: TileKind
    faces: tuple[FaceSpec, ...]
    volume: GoldenRational
    composition: tuple[tuple[TileKind, int], ...] = ()
    N0: int | None = None
    N1: int | None = None
    N2: int | None = None
    premerge_triangles: tuple[FaceSpec, ...] = ()

    def __post_init__(self):
        if not self.kind.is_fundamental:
            if None in (self.N0, self.N1, self.N2):
                raise ValueError(f"{self.kind}: composite records need N0/N1/N2")
            if self.N0 - self.N1 + self.N2 != 2:
                raise ValueError(f"{self.kind}: Euler relation violated")

    def face_count(self) -> int:
        return sum(f.multiplicity for f in self.faces)

    def composition_dict(self) -> dict[TileKind, int]:
        return dict(self.composition)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.value,
            "faces": [
                {
                    "shape": f.shape,
                    "edges": [e.to_json() for e in f.edges],
                    "multiplicity": f.multiplicity,
                    "axis_class": f.axis_class,
                }
                for f in self.faces
            ],
            "volume": self.volume.to_json(),
            "composition": {k.value: n for k, n in self.composition},
        }
        if self.N0 is not None:
            out["N0"], out["N1"], out["N2"] = self.N0, self.N1, self.N2
        return out


@dataclass(frozen=True)
class Inventory:
    """A named multiset of tiles making up a target polyhedron."""

    target: str
    counts: tuple[tuple[TileKind, int], ...]

    def __post_init__(self):
        for kind, n in self.counts:
            if n <= 0:
                raise ValueError(f"{self.target}: count for {kind} must be positive")

    def counts_dict(self) -> dict[TileKind, int]:
        return dict(self.counts)


_TAU2 = TAU * TAU
_T = TAU


def _tri(*edges) -> tuple[GoldenRational, ...]:
    return tuple(edges)


def _face(shape, edges, mult) -> FaceSpec:
    return FaceSpec(shape, tuple(edges), mult)


_TRAP = (ONE, ONE, ONE, _T)  # isosceles trapezoid from a (1,1,tau) and a (1,tau,tau)
_PENT = (ONE,) * 5

_E111 = _tri(ONE, ONE, ONE)
_ETTT = _tri(_T, _T, _T)
_R11T = _tri(ONE, ONE, _T)
_R1TT = _tri(ONE, _T, _T)
_RTT2 = _tri(_T, _T, _TAU2)


def _records() -> dict[TileKind, TileRecord]:
    twelfth = GoldenRational(1, 0, 12)
    vols = {
        TileKind.t1: twelfth,
        TileKind.t2: TAU * twelfth,
        TileKind.t3: TAU * twelfth,
        TileKind.t4: _TAU2 * twelfth,
        TileKind.t5: _TAU2 * twelfth,
        TileKind.t6: TAU * _TAU2 * twelfth,
    }
    recs: dict[TileKind, TileRecord] = {}
    recs[TileKind.t1] = TileRecord(
        TileKind.t1,
        (_face("triangle", _E111, 2), _face("triangle", _R11T, 2)),
        vols[TileKind.t1],
    )
    recs[TileKind.t2] = TileRecord(
        TileKind.t2,
        (_face("triangle", _E111, 1), _face("triangle", _R11T, 2), _face("triangle", _R1TT, 1)),
        vols[TileKind.t2],
    )
    recs[TileKind.t3] = TileRecord(
        TileKind.t3,
        (_face("triangle", _ETTT, 1), _face("triangle", _R11T, 3)),
        vols[TileKind.t3],
    )
    recs[TileKind.t4] = TileRecord(
        TileKind.t4,
        (_face("triangle", _E111, 1), _face("triangle", _R1TT, 3)),
        vols[TileKind.t4],
    )
    recs[TileKind.t5] = TileRecord(
        TileKind.t5,
        (_face("triangle", _ETTT, 1), _face("triangle", _R11T, 1), _face("triangle", _R1TT, 2)),
        vols[TileKind.t5],
    )
    recs[TileKind.t6] = TileRecord(
        TileKind.t6,
        (_face("triangle", _ETTT, 2), _face("triangle", _R1TT, 2)),
        vols[TileKind.t6],
    )

    def vol_of(comp):
        return sum((vols[k] * n for k, n in comp), GoldenRational(0))

    # E: two t4 matched on the two equilateral faces of a t1 (nonconvex octahedron)
    comp_E = ((TileKind.t4, 2), (TileKind.t1, 1))
    recs[TileKind.E] = TileRecord(
        TileKind.E,
        (_face("triangle", _R1TT, 6), _face("triangle", _R11T, 2)),
        vol_of(comp_E), comp_E, 6, 12, 8,
        premerge_triangles=(_face("triangle", _R1TT, 6), _face("triangle", _R11T, 2)),
    )
    # C: a t6 sandwiched between two t3 on its (tau,tau,tau) faces
    comp_C = ((TileKind.t3, 2), (TileKind.t6, 1))
    recs[TileKind.C] = TileRecord(
        TileKind.C,
        (_face("triangle", _R11T, 6), _face("triangle", _R1TT, 2)),
        vol_of(comp_C), comp_C, 6, 12, 8,
        premerge_triangles=(_face("triangle", _R11T, 6), _face("triangle", _R1TT, 2)),
    )
    # T1 = E + C, C inserted between the legs of E on two (1,tau,tau) faces
    comp_T1 = ((TileKind.E, 1), (TileKind.C, 1))
    recs[TileKind.T1] = TileRecord(
        TileKind.T1,
        (_face("triangle", _R11T, 4), _face("trapezoid", _TRAP, 4)),
        vols[TileKind.t1] + 2 * vols[TileKind.t4] + 2 * vols[TileKind.t3] + vols[TileKind.t6],
        comp_T1, 8, 14, 8,
        premerge_triangles=(_face("triangle", _R11T, 8), _face("triangle", _R1TT, 4)),
    )
    comp_T2 = ((TileKind.t2, 1), (TileKind.t4, 1))
    recs[TileKind.T2] = TileRecord(
        TileKind.T2,
        (_face("triangle", _R1TT, 2), _face("triangle", _RTT2, 2)),
        vol_of(comp_T2), comp_T2, 4, 6, 4,
        premerge_triangles=(_face("triangle", _R11T, 2), _face("triangle", _R1TT, 4)),
    )
    comp_T3 = ((TileKind.t5, 2), (TileKind.t6, 1))
    recs[TileKind.T3] = TileRecord(
        TileKind.T3,
        (_face("triangle", _R1TT, 5), _face("pentagon", _PENT, 1)),
        vol_of(comp_T3), comp_T3, 6, 10, 6,
        premerge_triangles=(_face("triangle", _R11T, 2), _face("triangle", _R1TT, 6)),
    )
    # T3bar: same three tiles, one t5 re-seated by a 120 degree turn about its
    # base axis; the pentagon never forms and two trapezoids appear instead
    recs[TileKind.T3bar] = TileRecord(
        TileKind.T3bar,
        (_face("triangle", _R1TT, 4), _face("trapezoid", _TRAP, 2)),
        vol_of(comp_T3), comp_T3, 6, 10, 6,
        premerge_triangles=(_face("triangle", _R11T, 2), _face("triangle", _R1TT, 6)),
    )
    comp_T4 = ((TileKind.t3, 1), (TileKind.t6, 1), (TileKind.t5, 1))
    recs[TileKind.T4] = TileRecord(
        TileKind.T4,
        (_face("triangle", _R11T, 3), _face("triangle", _R1TT, 3), _face("trapezoid", _TRAP, 1)),
        vol_of(comp_T4), comp_T4, 6, 11, 7,
        premerge_triangles=(_face("triangle", _R11T, 4), _face("triangle", _R1TT, 4)),
    )
    return recs


_RECORDS = _records()


def _validate_catalog():
    # composite volume must equal the exact sum over its composition
    for rec in _RECORDS.values():
        if rec.kind.is_fundamental:
            continue
        if total_volume(dict(rec.composition)) != rec.volume:
            raise AssertionError(f"{rec.kind}: volume differs from composition sum")


def record(kind: TileKind | str) -> TileRecord:
    """The full static record for one tile kind."""
    kind = TileKind(kind)
    return _RECORDS[kind]


def all_records() -> list[TileRecord]:
    """All thirteen records in stable catalog order."""
    return [_RECORDS[k] for k in CATALOG_ORDER]


def _as_counts(inv) -> dict[TileKind, int]:
    if isinstance(inv, Inventory):
        return inv.counts_dict()
    if isinstance(inv, dict):
        return {TileKind(k): int(n) for k, n in inv.items()}
    return {TileKind(k): int(n) for k, n in inv}


def expand_to_fundamental(inv) -> dict[TileKind, int]:
    """Recursively replace composite kinds by their compositions.

    Fundamental kinds pass through; the result maps only t1..t6.
    """
    out: dict[TileKind, int] = {}
    stack = [(kind, n) for kind, n in _as_counts(inv).items()]
    while stack:
        kind, n = stack.pop()
        if kind.is_fundamental:
            out[kind] = out.get(kind, 0) + n
        else:
            for sub, m in record(kind).composition:
                stack.append((sub, n * m))
    return {k: out[k] for k in sorted(out, key=lambda t: t.value)}


def total_volume(inv) -> GoldenRational:
    """Exact sum of count * volume over a tile multiset."""
    total = GoldenRational(0)
    for kind, n in _as_counts(inv).items():
        total = total + record(kind).volume * n
    return total


_INVENTORIES = {
    "i1": Inventory("i1", ((TileKind.t1, 7), (TileKind.t2, 6), (TileKind.t5, 2), (TileKind.t6, 1))),
    "itau": Inventory("itau", ((TileKind.t1, 1), (TileKind.t2, 8), (TileKind.t3, 10),
                               (TileKind.t4, 10), (TileKind.t5, 16), (TileKind.t6, 3))),
    "d1-fundamental": Inventory("d1-fundamental", ((TileKind.t1, 3), (TileKind.t2, 4),
                                                   (TileKind.t3, 10), (TileKind.t4, 10),
                                                   (TileKind.t5, 4), (TileKind.t6, 7))),
    "d1-composite": Inventory("d1-composite", ((TileKind.T1, 3), (TileKind.T2, 4), (TileKind.T4, 4))),
    "dtau-composite": Inventory("dtau-composite", ((TileKind.T1, 7), (TileKind.T2, 18),
                                                   (TileKind.T3, 14), (TileKind.T4, 10))),
}

INVENTORY_TARGETS = tuple(_INVENTORIES)

_validate_catalog()


def inventory(target: str) -> Inventory:
    """One of the named inventories: i1, itau, d1-fundamental, d1-composite, dtau-composite."""
    try:
        return _INVENTORIES[target]
    except KeyError:
        raise KeyError(f"unknown inventory target {target!r}; choose from {INVENTORY_TARGETS}")
