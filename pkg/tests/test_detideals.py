import random
from itertools import combinations

import pytest

from detkit.combinat import MinorIndex, PfaffianIndex
from detkit.detideals import (
    column_grading,
    constrained_minor_ideal,
    constrained_pfaffian_ideal,
    constrained_symmetric_ideal,
    entry,
    entry_poly,
    generic_matrix,
    ideal_of_minors,
    ideal_of_pfaffians,
    intersect_components,
    matrix_ring,
    minor_components,
    minor_poly,
    monomials_of_weighted_degree,
    pfaffian_components,
    pfaffian_poly,
    pfaffian_row_component,
    skew_block_grading,
    skew_matrix,
    symmetric_components,
    symmetric_matrix,
    truncated_ideal,
    truncated_ideal_graded,
    truncation_rank,
    variable_table,
)
from detkit.groebner import (
    ideal_equal,
    ideal_height,
    ideal_member,
    krull_dimension,
    normal_form,
)
from detkit.poly import QQ, PrimeField, weighted_degree
from helpers import assert_reduced_basis, det_by_permanents, pfaffian_by_matchings

FP = PrimeField(32003)


# -- layout and entries -----------------------------------------------------------


def test_variable_layout():
    assert variable_table(generic_matrix(2, 3)).names == (
        "x[1,1]", "x[1,2]", "x[1,3]", "x[2,1]", "x[2,2]", "x[2,3]",
    )
    assert variable_table(symmetric_matrix(3)).names == (
        "y[1,1]", "y[1,2]", "y[1,3]", "y[2,2]", "y[2,3]", "y[3,3]",
    )
    assert variable_table(skew_matrix(4)).names == (
        "z[1,2]", "z[1,3]", "z[1,4]", "z[2,3]", "z[2,4]", "z[3,4]",
    )


def test_matrix_spec_validation():
    with pytest.raises(ValueError):
        generic_matrix(0, 2)
    with pytest.raises(ValueError):
        symmetric_matrix(0)
    with pytest.raises(ValueError):
        skew_matrix(1)
    from detkit.detideals import MatrixSpec

    with pytest.raises(ValueError):
        MatrixSpec("symmetric", 2, 3)
    with pytest.raises(ValueError):
        MatrixSpec("hermitian", 2, 2)


def test_entry_mirroring_and_signs():
    sym = symmetric_matrix(3)
    assert entry(sym, 2, 1) == entry(sym, 1, 2)
    skw = skew_matrix(3)
    s12 = entry(skw, 1, 2)
    s21 = entry(skw, 2, 1)
    assert s12[0] == 1 and s21 == (-1, s12[1])
    assert entry(skw, 2, 2) == (0, None)
    with pytest.raises(ValueError):
        entry(sym, 4, 1)
    ring = matrix_ring(skw, QQ)
    assert entry_poly(ring, skw, 2, 1) == -ring.var(entry(skw, 1, 2)[1])
    assert entry_poly(ring, skw, 3, 3) == ring.zero


# -- minors against the permutation-sum oracle ---------------------------------------


def _entries(ring, ms, rows, cols):
    return [[entry_poly(ring, ms, i, j) for j in cols] for i in rows]


@pytest.mark.parametrize("shape", ["generic", "symmetric", "skew"])
def test_minor_poly_matches_permutation_sum(shape):
    if shape == "generic":
        ms = generic_matrix(3, 4)
    elif shape == "symmetric":
        ms = symmetric_matrix(4)
    else:
        ms = skew_matrix(4)
    ring = matrix_ring(ms, QQ)
    rng = random.Random(17)
    seen = 0
    for size in (1, 2, 3):
        for _ in range(4):
            rows = tuple(sorted(rng.sample(range(1, ms.m + 1), size)))
            cols = tuple(sorted(rng.sample(range(1, ms.n + 1), size)))
            got = minor_poly(ring, ms, MinorIndex(rows, cols))
            want = det_by_permanents(_entries(ring, ms, rows, cols))
            assert got == want, (rows, cols)
            seen += 1
    assert seen == 12


def test_two_by_two_dets_written_out():
    gen = generic_matrix(2, 2)
    ring = matrix_ring(gen, QQ)
    x11, x12, x21, x22 = (ring.var(i) for i in range(4))
    d = minor_poly(ring, gen, MinorIndex((1, 2), (1, 2)))
    assert d == x11 * x22 - x12 * x21
    sym = symmetric_matrix(2)
    sring = matrix_ring(sym, QQ)
    y11, y12, y22 = (sring.var(i) for i in range(3))
    assert minor_poly(sring, sym, MinorIndex((1, 2), (1, 2))) == y11 * y22 - y12 * y12
    skw = skew_matrix(2)
    zring = matrix_ring(skw, QQ)
    z12 = zring.var(0)
    assert minor_poly(zring, skw, MinorIndex((1, 2), (1, 2))) == z12 * z12


def test_symmetric_minor_transpose_equal():
    sym = symmetric_matrix(4)
    ring = matrix_ring(sym, QQ)
    ix = MinorIndex((1, 3), (2, 4))
    assert minor_poly(ring, sym, ix) == minor_poly(ring, sym, ix.transpose())


def test_skew_odd_principal_minors_vanish():
    skw = skew_matrix(5)
    ring = matrix_ring(skw, QQ)
    for rows in combinations(range(1, 6), 3):
        assert not minor_poly(ring, skw, MinorIndex(rows, rows))


def test_minor_out_of_range():
    ms = generic_matrix(2, 2)
    ring = matrix_ring(ms, QQ)
    with pytest.raises(ValueError):
        minor_poly(ring, ms, MinorIndex((1, 3), (1, 2)))


# -- Pfaffians -------------------------------------------------------------------------


def test_pfaffian_written_out():
    ms = skew_matrix(4)
    ring = matrix_ring(ms, QQ)
    z12, z13, z14, z23, z24, z34 = (ring.var(i) for i in range(6))
    pf = pfaffian_poly(ring, ms, PfaffianIndex((1, 2, 3, 4)))
    assert pf == z12 * z34 - z13 * z24 + z14 * z23
    assert pfaffian_poly(ring, ms, PfaffianIndex((2, 4))) == z24


def test_pfaffian_matches_matching_sum():
    ms = skew_matrix(6)
    ring = matrix_ring(ms, FP)
    for rows in [(1, 2, 3, 4), (2, 3, 5, 6), (1, 3, 4, 6), (1, 2, 3, 4, 5, 6)]:
        got = pfaffian_poly(ring, ms, PfaffianIndex(rows))
        want = pfaffian_by_matchings(rows, lambda i, j: entry_poly(ring, ms, i, j))
        assert got == want, rows


def test_pfaffian_squares_to_determinant():
    ms = skew_matrix(6)
    ring = matrix_ring(ms, FP)
    for rows in [(1, 2), (1, 2, 3, 4), (2, 3, 4, 6), (1, 2, 3, 4, 5, 6)]:
        pf = pfaffian_poly(ring, ms, PfaffianIndex(rows))
        det = minor_poly(ring, ms, MinorIndex(rows, rows))
        assert pf * pf == det, rows


def test_pfaffian_requires_skew():
    ms = generic_matrix(4, 4)
    ring = matrix_ring(ms, QQ)
    with pytest.raises(ValueError):
        pfaffian_poly(ring, ms, PfaffianIndex((1, 2)))


# -- ideal builders ---------------------------------------------------------------------


def test_ideal_of_minors_edges_and_counts():
    ms = generic_matrix(2, 3)
    ring = matrix_ring(ms, QQ)
    assert ideal_of_minors(ring, ms, 0).is_unit()
    assert ideal_of_minors(ring, ms, 3).is_zero()
    I = ideal_of_minors(ring, ms, 2)
    assert len(I.gens) == 3
    assert_reduced_basis(I.groebner())
    # the three 2-minors already form the reduced basis; leads are the
    # antidiagonal products
    names = ring.table.names
    lead_strs = {
        "*".join(names[p] for p, _ in g.lm.exps) for g in I.groebner()
    }
    assert lead_strs == {"x[1,2]*x[2,1]", "x[1,3]*x[2,1]", "x[1,3]*x[2,2]"}


def test_ideal_of_minors_with_limits():
    ms = generic_matrix(3, 3)
    ring = matrix_ring(ms, QQ)
    I = ideal_of_minors(ring, ms, 1, row_limit=2)
    assert len(I.gens) == 6
    J = ideal_of_minors(ring, ms, 2, row_limit=2, col_limit=2)
    assert len(J.gens) == 1
    assert ideal_of_minors(ring, ms, 2, row_limit=1).is_zero()


def test_ideal_of_pfaffians_edges():
    ms = skew_matrix(5)
    ring = matrix_ring(ms, QQ)
    assert ideal_of_pfaffians(ring, ms, 0).is_unit()
    assert ideal_of_pfaffians(ring, ms, 6).is_zero()
    with pytest.raises(ValueError):
        ideal_of_pfaffians(ring, ms, 3)
    I = ideal_of_pfaffians(ring, ms, 4)
    assert len(I.gens) == 5


def test_pfaffian_row_component_even_and_odd():
    ms = skew_matrix(4)
    ring = matrix_ring(ms, QQ)
    even = pfaffian_row_component(ring, ms, 2, 2)
    assert [str(g) for g in even.gens] == ["z[1,2]"]
    odd = pfaffian_row_component(ring, ms, 1, 2)
    got = {str(g) for g in odd.gens}
    assert got == {"z[1,2]", "z[1,3]", "z[1,4]", "z[2,3]", "z[2,4]"}
    assert pfaffian_row_component(ring, ms, 0, 2).is_unit()
    # even r=4 with R=2: no 4-subset of the first two rows, so nothing
    assert pfaffian_row_component(ring, ms, 4, 2).is_zero()


def test_odd_component_equals_union_over_extra_row():
    # the odd-r component has two equivalent descriptions; check they agree
    ms = skew_matrix(6)
    ring = matrix_ring(ms, QQ)
    r, R = 3, 4
    built = {str(g) for g in pfaffian_row_component(ring, ms, r, R).gens}
    union = set()
    for k in range(R + 1, ms.n + 1):
        avail = tuple(range(1, R + 1)) + (k,)
        for rs in combinations(sorted(avail), r + 1):
            union.add(str(pfaffian_poly(ring, ms, PfaffianIndex(rs))))
    assert built == union


# -- constrained ideals -------------------------------------------------------------------


def test_constrained_minor_ideal_counts_and_membership():
    ms = generic_matrix(3, 3)
    ring = matrix_ring(ms, QQ)
    J = constrained_minor_ideal(ring, ms, 2, R=(1,), r=(1,))
    # rows must include row 1: (1,2) and (1,3) with all 3 column pairs
    assert len(J.gens) == 6
    full = constrained_minor_ideal(ring, ms, 2)
    assert len(full.gens) == 9
    assert ideal_equal(full, ideal_of_minors(ring, ms, 2))
    outside = minor_poly(ring, ms, MinorIndex((2, 3), (1, 2)))
    assert ideal_member(outside, full)
    assert not ideal_member(outside, J)
    assert constrained_minor_ideal(ring, ms, 0).is_unit()
    assert constrained_minor_ideal(ring, ms, 4).is_zero()


def test_constrained_ideal_block_validation():
    ms = generic_matrix(3, 3)
    ring = matrix_ring(ms, QQ)
    with pytest.raises(ValueError):
        constrained_minor_ideal(ring, ms, 2, R=(2, 2), r=(1, 1))
    with pytest.raises(ValueError):
        constrained_minor_ideal(ring, ms, 2, R=(4,), r=(1,))
    with pytest.raises(ValueError):
        constrained_minor_ideal(ring, ms, 2, R=(2,), r=(1, 1))


def test_small_decomposition_by_hand():
    # 3x3, t=2, one row block (R=1, r=1): the constrained ideal must be the
    # intersection of all 2-minors with the entries of row 1
    ms = generic_matrix(3, 3)
    ring = matrix_ring(ms, FP)
    J = constrained_minor_ideal(ring, ms, 2, R=(1,), r=(1,))
    comps = minor_components(ring, ms, 2, R=(1,), r=(1,))
    assert [name for name, _ in comps] == ["minors(2)", "minors(1,rows<=1)"]
    rhs = intersect_components(ring, comps)
    assert ideal_equal(J, rhs)


def test_component_names():
    ms = generic_matrix(3, 4)
    ring = matrix_ring(ms, QQ)
    comps = minor_components(ring, ms, 2, R=(1, 2), r=(1, 2), C=(3,), c=(1,))
    assert [name for name, _ in comps] == [
        "minors(2)",
        "minors(1,rows<=1)",
        "minors(2,rows<=2)",
        "minors(1,cols<=3)",
    ]
    sk = skew_matrix(5)
    sring = matrix_ring(sk, QQ)
    pcomps = pfaffian_components(sring, sk, 4, R=(2,), r=(2,))
    assert [name for name, _ in pcomps] == ["pfaffians(4)", "pfaffians(2,rows<=2)"]


def test_constrained_symmetric_doset_filter():
    ms = symmetric_matrix(3)
    ring = matrix_ring(ms, FP)
    full = constrained_symmetric_ideal(ring, ms, 2, R=(2,), r=(1,))
    doset = constrained_symmetric_ideal(ring, ms, 2, R=(2,), r=(1,), doset_only=True)
    assert len(doset.gens) < len(full.gens)
    assert ideal_equal(full, doset)
    names = [n for n, _ in symmetric_components(ring, ms, 2, R=(2,), r=(1,))]
    assert names == ["minors(2)", "minors(1,rows<=2)"]
    with pytest.raises(ValueError):
        constrained_symmetric_ideal(ring, generic_matrix(3, 3), 2)


def test_constrained_pfaffian_ideal():
    ms = skew_matrix(5)
    ring = matrix_ring(ms, FP)
    J = constrained_pfaffian_ideal(ring, ms, 4, R=(2,), r=(2,))
    # 4-subsets containing both rows 1 and 2: {1,2,a,b} with a<b in 3..5
    assert len(J.gens) == 3
    with pytest.raises(ValueError):
        constrained_pfaffian_ideal(ring, ms, 3)
    assert constrained_pfaffian_ideal(ring, ms, 6).is_zero()
    assert constrained_pfaffian_ideal(ring, ms, 0).is_unit()


# -- classical heights -----------------------------------------------------------------


def test_heights_of_unconstrained_ideals():
    cases = [
        (generic_matrix(2, 2), 2, 1),
        (generic_matrix(2, 3), 2, 2),
        (generic_matrix(3, 3), 2, 4),
        (generic_matrix(3, 3), 3, 1),
    ]
    for ms, t, expected in cases:
        ring = matrix_ring(ms, FP)
        I = ideal_of_minors(ring, ms, t)
        assert ideal_height(I) == expected, (ms, t)
        assert expected == (ms.m - t + 1) * (ms.n - t + 1)


def test_height_of_symmetric_minors():
    ms = symmetric_matrix(3)
    ring = matrix_ring(ms, FP)
    assert ideal_height(ideal_of_minors(ring, ms, 2)) == 3
    assert ideal_height(ideal_of_minors(ring, ms, 3)) == 1


def test_height_of_pfaffians():
    for n, size, expected in [(4, 4, 1), (5, 4, 3), (4, 2, 6), (5, 2, 10)]:
        ms = skew_matrix(n)
        ring = matrix_ring(ms, FP)
        I = ideal_of_pfaffians(ring, ms, size)
        assert ideal_height(I) == expected, (n, size)
        p = size // 2
        assert expected == (n - 2 * p + 1) * (n - 2 * p + 2) // 2


def test_dimension_of_generic_minors():
    ms = generic_matrix(2, 3)
    ring = matrix_ring(ms, FP)
    assert krull_dimension(ideal_of_minors(ring, ms, 2)) == 4


# -- gradings and truncation ----------------------------------------------------------


def test_column_grading_weights():
    ms = generic_matrix(2, 3)
    g = column_grading(ms, 1, 1, 2)
    assert g.weights == (1, 2, 2, 1, 2, 2)
    with pytest.raises(ValueError):
        column_grading(ms, 1, 2, 2)
    with pytest.raises(ValueError):
        column_grading(ms, 4, 1, 2)
    with pytest.raises(ValueError):
        column_grading(skew_matrix(3), 1, 1, 2)


def test_minor_weighted_degree_formula():
    ms = generic_matrix(3, 4)
    ring = matrix_ring(ms, QQ)
    a, p, q = 2, 1, 3
    g = column_grading(ms, a, p, q)
    rng = random.Random(23)
    for _ in range(10):
        size = rng.randint(1, 3)
        rows = tuple(sorted(rng.sample(range(1, 4), size)))
        cols = tuple(sorted(rng.sample(range(1, 5), size)))
        f = minor_poly(ring, ms, MinorIndex(rows, cols))
        inside = sum(1 for j in cols if j <= a)
        assert weighted_degree(g, f) == p * inside + q * (size - inside)


def test_skew_grading_weights_and_pfaffian_degree():
    ms = skew_matrix(5)
    ring = matrix_ring(ms, QQ)
    R, p, q = 2, 1, 2
    g = skew_block_grading(ms, R, p, q)
    # z[1,2] inside, z[1,3] straddles, z[3,4] outside
    t = variable_table(ms)
    assert g.weights[t.position("z[1,2]")] == 2 * p
    assert g.weights[t.position("z[1,3]")] == p + q
    assert g.weights[t.position("z[3,4]")] == 2 * q
    for rows in [(1, 2, 3, 4), (1, 3, 4, 5), (2, 3, 4, 5), (3, 4), (1, 2)]:
        f = pfaffian_poly(ring, ms, PfaffianIndex(rows))
        inside = sum(1 for i in rows if i <= R)
        assert weighted_degree(g, f) == p * inside + q * (len(rows) - inside)


def test_truncation_rank_values():
    assert truncation_rank(2, 1, 2, 2) == 2
    assert truncation_rank(2, 1, 2, 3) == 1
    assert truncation_rank(2, 1, 2, 4) == 0
    assert truncation_rank(4, 1, 2, 7) == 1
    with pytest.raises(ValueError):
        truncation_rank(2, 2, 2, 3)


def test_truncated_ideal_filter_vs_graded_reference():
    ms = generic_matrix(2, 3)
    ring = matrix_ring(ms, FP)
    I = ideal_of_minors(ring, ms, 2)
    g = column_grading(ms, 1, 1, 2)
    for d in (2, 3, 4, 5):
        fast = truncated_ideal(I, g, d)
        slow = truncated_ideal_graded(I, g, d)
        assert ideal_equal(fast, slow), d
    assert truncated_ideal(I, g, 2).is_zero()
    assert len(truncated_ideal(I, g, 3).gens) == 2
    assert len(truncated_ideal(I, g, 4).gens) == 3


def test_truncation_rejects_inhomogeneous_generator():
    ms = generic_matrix(2, 2)
    ring = matrix_ring(ms, QQ)
    g = column_grading(ms, 1, 1, 2)
    from detkit.groebner import IdealHandle

    bad = IdealHandle(ring, [ring.var(0) + ring.var(1)])
    with pytest.raises(ValueError):
        truncated_ideal(bad, g, 5)
    with pytest.raises(ValueError):
        truncated_ideal_graded(bad, g, 5)


def test_monomials_of_weighted_degree():
    ms = generic_matrix(2, 2)
    g = column_grading(ms, 1, 1, 2)
    for e in range(5):
        monos = monomials_of_weighted_degree(g, e)
        assert len(set(monos)) == len(monos)
        for m in monos:
            assert g.monomial_degree(m) == e
    from detkit.poly import GradingSpec

    uni = GradingSpec.uniform(variable_table(ms))
    # stars and bars: C(e + 3, 3) monomials of degree e in 4 variables
    from math import comb

    for e in range(4):
        assert len(monomials_of_weighted_degree(uni, e)) == comb(e + 3, 3)