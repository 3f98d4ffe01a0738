"""Precomputed assembly wiring: exact vertex coordinates and
tetrahedron lists for the unit dodecahedron, the unit icosahedron,
and the composite tiles carved out of them.

Coordinates are pairs ((an, ad), (bn, bd)) meaning an/ad + (bn/bd)*tau,
in frames whose symmetry axes are those of AxisFrame.canonical().
Generated once from the assembly search; do not edit by hand."""

D1_COORDS = {
    "v0": (((0,1),(1,2)),((0,1),(1,2)),((0,1),(1,2))),
    "v1": (((0,1),(0,1)),((1,2),(1,2)),((1,2),(0,1))),
    "v2": (((0,1),(0,1)),((1,2),(1,2)),((-1,2),(0,1))),
    "v3": (((0,1),(1,2)),((0,1),(1,2)),((0,1),(-1,2))),
    "v4": (((1,2),(1,2)),((1,2),(0,1)),((0,1),(0,1))),
    "w0": (((1,2),(0,1)),((0,1),(0,1)),((1,2),(1,2))),
    "w1": (((0,1),(-1,2)),((0,1),(1,2)),((0,1),(1,2))),
    "w2": (((0,1),(-1,2)),((0,1),(1,2)),((0,1),(-1,2))),
    "w3": (((1,2),(0,1)),((0,1),(0,1)),((-1,2),(-1,2))),
    "w4": (((1,2),(1,2)),((-1,2),(0,1)),((0,1),(0,1))),
    "u0": (((-1,2),(0,1)),((0,1),(0,1)),((-1,2),(-1,2))),
    "u1": (((0,1),(1,2)),((0,1),(-1,2)),((0,1),(-1,2))),
    "u2": (((0,1),(1,2)),((0,1),(-1,2)),((0,1),(1,2))),
    "u3": (((-1,2),(0,1)),((0,1),(0,1)),((1,2),(1,2))),
    "u4": (((-1,2),(-1,2)),((1,2),(0,1)),((0,1),(0,1))),
    "f0": (((0,1),(-1,2)),((0,1),(-1,2)),((0,1),(-1,2))),
    "f1": (((0,1),(0,1)),((-1,2),(-1,2)),((-1,2),(0,1))),
    "f2": (((0,1),(0,1)),((-1,2),(-1,2)),((1,2),(0,1))),
    "f3": (((0,1),(-1,2)),((0,1),(-1,2)),((0,1),(1,2))),
    "f4": (((-1,2),(-1,2)),((-1,2),(0,1)),((0,1),(0,1))),
    "P0": (((0,1),(0,1)),((-1,2),(1,2)),((1,2),(0,1))),
    "P2": (((0,1),(0,1)),((-1,2),(1,2)),((-1,2),(0,1))),
    "B": (((1,2),(-1,2)),((-1,2),(0,1)),((0,1),(0,1))),
}

D1_TETS = [
    ("t2", ('v0', 'w0', 'w1', 'P0')),
    ("t4", ('v0', 'w0', 'w4', 'P0')),
    ("t2", ('v3', 'w2', 'w3', 'P2')),
    ("t4", ('v3', 'w3', 'w4', 'P2')),
    ("t4", ('v0', 'v2', 'v3', 'P2')),
    ("t1", ('v2', 'v3', 'w2', 'P2')),
    ("t4", ('v2', 'w1', 'w2', 'P2')),
    ("t3", ('v0', 'v1', 'v2', 'w1')),
    ("t6", ('v0', 'v2', 'w1', 'P2')),
    ("t3", ('v0', 'w1', 'P0', 'P2')),
    ("t3", ('v0', 'v3', 'v4', 'w4')),
    ("t6", ('v0', 'v3', 'w4', 'P0')),
    ("t5", ('v3', 'w4', 'P0', 'P2')),
    ("t2", ('f1', 'f2', 'f4', 'B')),
    ("t4", ('w4', 'f1', 'f2', 'B')),
    ("t2", ('f4', 'P0', 'P2', 'B')),
    ("t4", ('w4', 'P0', 'P2', 'B')),
    ("t4", ('w0', 'f2', 'f3', 'B')),
    ("t1", ('f2', 'f3', 'f4', 'B')),
    ("t4", ('w1', 'f3', 'f4', 'B')),
    ("t3", ('w0', 'w1', 'u3', 'f3')),
    ("t6", ('w0', 'w1', 'f3', 'B')),
    ("t3", ('w0', 'w1', 'P0', 'B')),
    ("t4", ('w2', 'f0', 'f4', 'B')),
    ("t1", ('f0', 'f1', 'f4', 'B')),
    ("t4", ('w3', 'f0', 'f1', 'B')),
    ("t3", ('w2', 'w3', 'u0', 'f0')),
    ("t6", ('w2', 'w3', 'f0', 'B')),
    ("t3", ('w2', 'w3', 'P2', 'B')),
    ("t3", ('w0', 'w4', 'u2', 'f2')),
    ("t6", ('w0', 'w4', 'f2', 'P0')),
    ("t5", ('w4', 'f2', 'P0', 'B')),
    ("t3", ('w1', 'w2', 'u4', 'f4')),
    ("t6", ('w1', 'w2', 'f4', 'P2')),
    ("t5", ('w1', 'f4', 'P0', 'P2')),
    ("t3", ('w3', 'w4', 'u1', 'f1')),
    ("t6", ('w3', 'w4', 'f1', 'P2')),
    ("t5", ('w4', 'f1', 'P2', 'B')),
]

D1_GROUPS = [
    ("T2", (0, 1), "cap"),
    ("T2", (2, 3), "cap"),
    ("T1", (4, 5, 6, 7, 8, 9), "cap"),
    ("T4", (10, 11, 12), "cap"),
    ("T2", (13, 14), "frustum"),
    ("T2", (15, 16), "frustum"),
    ("T1", (17, 18, 19, 20, 21, 22), "frustum"),
    ("T1", (23, 24, 25, 26, 27, 28), "frustum"),
    ("T4", (29, 30, 31), "frustum"),
    ("T4", (32, 33, 34), "frustum"),
    ("T4", (35, 36, 37), "frustum"),
]

I1_COORDS = {
    "i0": (((0,1),(0,1)),((1,2),(0,1)),((0,1),(1,2))),
    "i1": (((1,2),(0,1)),((0,1),(1,2)),((0,1),(0,1))),
    "i2": (((0,1),(1,2)),((0,1),(0,1)),((1,2),(0,1))),
    "i3": (((0,1),(0,1)),((1,2),(0,1)),((0,1),(-1,2))),
    "i4": (((1,2),(0,1)),((0,1),(-1,2)),((0,1),(0,1))),
    "i5": (((0,1),(-1,2)),((0,1),(0,1)),((1,2),(0,1))),
    "i6": (((0,1),(0,1)),((-1,2),(0,1)),((0,1),(1,2))),
    "i7": (((-1,2),(0,1)),((0,1),(1,2)),((0,1),(0,1))),
    "i8": (((0,1),(1,2)),((0,1),(0,1)),((-1,2),(0,1))),
    "i9": (((0,1),(0,1)),((-1,2),(0,1)),((0,1),(-1,2))),
    "i10": (((-1,2),(0,1)),((0,1),(-1,2)),((0,1),(0,1))),
    "i11": (((0,1),(-1,2)),((0,1),(0,1)),((-1,2),(0,1))),
}

I1_TETS = [
    ("t2", ('i0', 'i1', 'i2', 'i3')),
    ("t1", ('i0', 'i1', 'i3', 'i7')),
    ("t5", ('i0', 'i2', 'i3', 'i4')),
    ("t1", ('i0', 'i2', 'i4', 'i6')),
    ("t6", ('i0', 'i3', 'i4', 'i5')),
    ("t2", ('i0', 'i3', 'i5', 'i7')),
    ("t2", ('i0', 'i4', 'i5', 'i6')),
    ("t1", ('i1', 'i2', 'i3', 'i8')),
    ("t2", ('i2', 'i3', 'i4', 'i8')),
    ("t5", ('i3', 'i4', 'i5', 'i9')),
    ("t1", ('i3', 'i4', 'i8', 'i9')),
    ("t1", ('i3', 'i5', 'i7', 'i11')),
    ("t2", ('i3', 'i5', 'i9', 'i11')),
    ("t1", ('i4', 'i5', 'i6', 'i10')),
    ("t2", ('i4', 'i5', 'i9', 'i10')),
    ("t1", ('i5', 'i9', 'i10', 'i11')),
]

# The t5+t6+t5 triple inside the icosahedron carries two coplanar
# triangle pairs (trapezoid faces): it is the re-seated variant.  Turning
# its second t5 by +120 degrees about the shared base axis moves the apex
# from i9 to i10 and fuses the base into a planar pentagon instead.
I1_T3BAR = (2, 4, 9)

T3_TETS = [
    ("t5", ('i0', 'i2', 'i3', 'i4')),
    ("t6", ('i0', 'i3', 'i4', 'i5')),
    ("t5", ('i3', 'i4', 'i5', 'i10')),
]

