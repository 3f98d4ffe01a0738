"""Substitution matrix, spectral data, decomposition ledger."""

from __future__ import annotations

import dataclasses
import random

import pytest

from icotile import inflation
from icotile.golden import GoldenRational, embed, tau_pow

TAU3 = tau_pow(3)
ZERO = GoldenRational(0)


def test_matrix_rows():
    assert inflation.M.rows == ((1, 2, 2, 2), (0, 2, 1, 0), (1, 2, 1, 1), (1, 1, 1, 1))
    assert inflation.M.det == 1
    assert inflation.M.trace == 5
    assert inflation.M[0, 3] == 2


def _matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
        for i in range(4))


def test_matrix_powers():
    ident = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    assert inflation.M.power(0) == ident
    assert inflation.M.power(1) == inflation.M.rows
    rng = random.Random(3)
    for _ in range(40):
        a = rng.randint(0, 9)
        b = rng.randint(0, 9)
        assert inflation.M.power(a + b) == _matmul(inflation.M.power(a),
                                                   inflation.M.power(b))
    with pytest.raises(ValueError):
        inflation.M.power(-1)


def test_primitivity_and_determinant():
    def det4(m):
        # Laplace expansion along the first row
        def det3(r):
            return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                    - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                    + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))
        total = 0
        for j in range(4):
            minor = [[m[i][k] for k in range(4) if k != j] for i in range(1, 4)]
            total += (-1) ** j * m[0][j] * det3(minor)
        return total

    assert any(x == 0 for row in inflation.M.power(1) for x in row)
    for n in range(2, 12):
        p = inflation.M.power(n)
        assert all(x > 0 for row in p for x in row)
        assert det4(p) == 1


def test_count_vectors():
    c = inflation.CountVector((1, 2, 3, 4))
    assert list(c) == [1, 2, 3, 4]
    assert c[2] == 3
    assert c.scaled(3).c == (3, 6, 9, 12)
    assert (c + inflation.CountVector.unit(0)).c == (2, 2, 3, 4)
    with pytest.raises(ValueError):
        inflation.CountVector((1, 2, 3))
    with pytest.raises(ValueError):
        inflation.CountVector((1, 2, 3, -4))


def test_substitution_rows_are_matrix_rows():
    for i in range(4):
        got = inflation.inflate_counts(inflation.CountVector.unit(i), 1)
        assert got.c == inflation.M.rows[i]


def test_inflate_example():
    got = inflation.inflate_counts(inflation.CountVector.unit(1), 3)
    assert got.c == (5, 21, 12, 6)
    assert got.total_volume() == tau_pow(12) / 12


def test_volume_conservation_every_order():
    rng = random.Random(17)
    vectors = [inflation.CountVector.unit(i) for i in range(4)]
    vectors += [inflation.CountVector(tuple(rng.randint(0, 50) for _ in range(4)))
                for _ in range(10)]
    for c in vectors:
        base = c.total_volume()
        for n in range(0, 21):
            got = inflation.inflate_counts(c, n).total_volume()
            assert got == tau_pow(3 * n) * base


def test_composite_volume_balance():
    vols = inflation.composite_volumes()
    assert vols == tuple(GoldenRational(a, b, 12)
                         for a, b in ((4, 6), (1, 2), (3, 4), (2, 4)))
    for i in range(4):
        rhs = sum((vols[j] * inflation.M.rows[i][j] for j in range(4)), ZERO)
        assert TAU3 * vols[i] == rhs


def test_char_poly_and_cayley_hamilton():
    coeffs = inflation.char_poly()
    assert coeffs == (1, -5, 2, 5, 1)
    powers = [inflation.M.power(k) for k in range(5)]
    for i in range(4):
        for j in range(4):
            acc = sum(c * powers[4 - k][i][j] for k, c in enumerate(coeffs))
            assert acc == 0


def test_eigenvalues():
    sd = inflation.pf_vectors()
    exact = (tau_pow(3), tau_pow(1), -tau_pow(-1), -tau_pow(-3))
    coeffs = inflation.char_poly()
    assert len(sd.eigenvalues) == 4
    for lam, ex in zip(sd.eigenvalues, exact):
        assert lam == pytest.approx(embed(ex), abs=1e-12)
        residue = sum(c * lam ** (4 - k) for k, c in enumerate(coeffs))
        assert abs(residue) < 1e-9
    mags = [abs(x) for x in sd.eigenvalues]
    assert mags == sorted(mags, reverse=True)
    # the golden identities behind the printed values
    assert sd.eigenvalues[0] == pytest.approx(2 + 5**0.5, abs=1e-12)
    assert sd.eigenvalues[0] * sd.eigenvalues[3] == pytest.approx(-1, abs=1e-12)
    assert sd.eigenvalues[1] * sd.eigenvalues[2] == pytest.approx(-1, abs=1e-12)


def test_pf_vectors_exact_and_printed():
    sd = inflation.pf_vectors()
    right, left = inflation._exact_pf_raw()
    for i in range(4):
        r = sum((right[j] * inflation.M.rows[i][j] for j in range(4)), ZERO)
        assert r == TAU3 * right[i]
        l = sum((left[j] * inflation.M.rows[j][i] for j in range(4)), ZERO)
        assert l == TAU3 * left[i]
    assert sum(sd.exact_right_pf, ZERO) == GoldenRational(1)
    assert sum(sd.exact_left_pf, ZERO) == GoldenRational(1)
    printed_right = (0.3820, 0.1180, 0.2639, 0.2361)
    printed_left = (0.1338, 0.4331, 0.2677, 0.1654)
    for got, want in zip(sd.right_pf, printed_right):
        assert abs(got - want) < 5e-5
    for got, want in zip(sd.left_pf, printed_left):
        assert abs(got - want) < 5e-5


def test_count_frequencies_converge_to_left_pf():
    sd = inflation.pf_vectors()

    def deviation(n):
        c = inflation.inflate_counts(inflation.CountVector.unit(0), n)
        total = sum(c.c)
        return max(abs(x / total - l) for x, l in zip(c.c, sd.left_pf))

    d15 = deviation(15)
    assert d15 < 2e-7
    assert deviation(20) < 1e-8
    # geometric decay at rate tau^(-2)
    ratio = deviation(14) / d15
    assert abs(ratio - embed(tau_pow(2))) < 0.1 * embed(tau_pow(2))


def test_projection_matrix():
    P = inflation.projection_matrix()
    thirtieths = (
        ((4, 2), (4, 12), (8, 4), (-4, 8)),
        ((-1, 2), (4, 2), (-2, 4), (6, -2)),
        ((5, 0), (0, 10), (10, 0), (-10, 10)),
        ((-2, 4), (8, 4), (-4, 8), (12, -4)),
    )
    want = tuple(tuple(GoldenRational(a, b, 30) for a, b in row)
                 for row in thirtieths)
    assert P == want
    for i in range(4):
        for j in range(4):
            acc = sum((P[i][k] * P[k][j] for k in range(4)), ZERO)
            assert acc == P[i][j]
    # rank one: every 2x2 minor vanishes
    for i in range(3):
        for j in range(3):
            assert P[i][j] * P[i + 1][j + 1] == P[i][j + 1] * P[i + 1][j]
    # trace of a rank-1 projection is 1
    assert sum((P[i][i] for i in range(4)), ZERO) == GoldenRational(1)


def test_projection_is_matrix_power_limit():
    P = [[embed(x) for x in row] for row in inflation.projection_matrix()]

    def err(n):
        Mn = inflation.M.power(n)
        scale = embed(tau_pow(3 * n))
        return max(abs(Mn[i][j] / scale - P[i][j])
                   for i in range(4) for j in range(4))

    errs = [err(n) for n in range(4, 13)]
    assert errs == sorted(errs, reverse=True)
    assert errs[-1] < 1e-5
    t2 = embed(tau_pow(2))
    for a, b in zip(errs, errs[1:]):
        assert abs(a / b - t2) < 0.1 * t2


def test_ledger_entries_verify():
    entries = inflation.dodecahedron_ledger()
    assert len(entries) == 7
    names = [d.name for d in entries]
    assert names == ["T1^(2)", "T2^(3)", "T3^(2)", "T4^(2)",
                     "T2^(4)", "T1^(4)", "d(tau^10)"]
    for d in entries:
        rep = inflation.verify_decomposition(d)
        assert rep.count_consistent
        assert rep.volume_consistent
        assert rep.ok


def test_ledger_big_entry_volume():
    big = inflation.dodecahedron_ledger()[-1]
    assert big.name == "d(tau^10)"
    counts = {(p.block, p.order): p.count for p in big.parts}
    assert counts == {
        ("d1", 0): 432139, ("dtau", 0): 92850,
        ("T1", 0): 1064050, ("T2", 0): 6341550,
        ("T3", 0): 4720730, ("T4", 0): 1064050,
    }
    vol = sum((p.volume() for p in big.parts), ZERO)
    assert vol == GoldenRational(47287176, 76512258, 12)
    assert vol == tau_pow(30) * GoldenRational(24, 42, 12)


def test_ledger_mutations_detected():
    rng = random.Random(29)
    entries = inflation.dodecahedron_ledger()
    for d in entries:
        for _ in range(6):
            i = rng.randrange(len(d.parts))
            delta = rng.choice([-1, 1, 2, 7])
            part = d.parts[i]
            if part.count + delta < 0:
                delta = 1
            bad = dataclasses.replace(part, count=part.count + delta)
            mutant = dataclasses.replace(
                d, parts=d.parts[:i] + (bad,) + d.parts[i + 1:])
            assert not inflation.verify_decomposition(mutant).ok


def test_part_validation():
    with pytest.raises(ValueError):
        inflation.Part(block="T7", order=1, count=1)
    with pytest.raises(ValueError):
        inflation.Part(block="T2", order=-1, count=1)
    with pytest.raises(ValueError):
        inflation.Part(block="T2", order=1, count=-1)
    with pytest.raises(ValueError):
        inflation.Part(block="d1", order=2, count=1)
    p = inflation.Part(block="T2", order=3, count=2)
    assert p.counts().c == (10, 42, 24, 12)
    assert p.label() == "2 T2^(3)"
    assert inflation.Part(block="d1", order=0, count=1).counts().c == (3, 4, 0, 4)


def test_decomposition_describe():
    first = inflation.dodecahedron_ledger()[0]
    text = first.describe()
    assert text.startswith("T1^(2) = ")
    assert "d(1)" in text
    assert "4 T3" in text


def test_spectral_json():
    blob = inflation.pf_vectors().to_json()
    assert set(blob) == {"eigenvalues", "right_pf", "left_pf",
                         "exact_right_pf", "exact_left_pf", "projection"}
    assert len(blob["projection"]) == 4
    # (4+6tau)/(10+16tau) reduces to 2-tau in canonical form
    assert blob["exact_right_pf"][0] == {"a": "2", "b": "-1", "den": "1"}
