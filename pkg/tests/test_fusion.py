from fractions import Fraction

import pytest

from wba.algebra import AlgebraElement, iota, jm_element
from wba.diagrams import Shape, d_gen, s_gen
from wba.errors import CancellationFailure, NonGenericH, ParityViolation
from wba.fusion import (
    DEFAULT_H,
    AlgebraRat,
    ScalarRat,
    baxter_factor,
    evaluate_step,
    fusion_idempotent,
    fusion_with_minimal_prefactor,
    h_is_generic,
    identity_checks,
    minimal_prefactor,
    second_fusion_idempotent,
    step_function,
    step_prefactor,
    sym_group_idempotent,
)
from wba.scalars import DELTA, ONE, ZERO, affine
from wba.tableaux import enumerate_tableaux, exponents, parse_tableau
from wba.upoly import UniPoly

S11 = Shape(1, 1)
S22 = Shape(2, 2)

GOLDEN_SPEC = "L+1,1;L+2,1;L-2,1;L-1,1"


def one(shape):
    return AlgebraElement.one(shape)


def elem(d):
    return AlgebraElement.from_diagram(d)


def golden_element():
    s1, d, s3 = elem(s_gen(S22, 1)), elem(d_gen(S22)), elem(s_gen(S22, 3))
    proj = one(S22) - s1
    return (proj * d * s1 * s3 * d * proj).scale(
        (2 * DELTA * (DELTA - 1)).inverse()
    )


def test_baxter_factor_crossing():
    # s_{1,2}(u) = 1 - s_{1,2}/u as (u*1 - s_12)/u
    f = baxter_factor(S22, "s", 1, 2, ZERO, 1)
    assert f.num.coeffs == (-elem(s_gen(S22, 1)), one(S22))
    assert f.den.coeffs == (ZERO, ONE)


def test_baxter_factor_contraction():
    f = baxter_factor(S11, "d", 1, 2, ZERO, 1)
    assert f.num.coeffs == (-elem(d_gen(S11)), one(S11))
    assert f.den.coeffs == (ZERO, ONE)


def test_baxter_factor_parity_guard():
    with pytest.raises(ParityViolation):
        baxter_factor(S22, "s", 1, 3, ZERO, 1)
    with pytest.raises(ParityViolation):
        baxter_factor(S22, "d", 1, 2, ZERO, 1)


def test_unitarity_as_rational_identity():
    # s(u) s(-u) = (u^2 - 1)/u^2, checked at a rational point
    u = affine(Fraction(5, 3))
    f = one(S22) - elem(s_gen(S22, 1)).scale(u.inverse())
    g = one(S22) - elem(s_gen(S22, 1)).scale((-u).inverse())
    assert f * g == one(S22).scale((u * u - 1) / (u * u))


def test_contraction_unitarity_expansion():
    # (1 - d/u)(1 - d/(delta - u)) = 1; oracle: expand with d^2 = delta*d
    u = affine(Fraction(2, 7))
    d = elem(d_gen(S11))
    lhs = (one(S11) - d.scale(u.inverse())) * (one(S11) - d.scale((DELTA - u).inverse()))
    assert lhs == one(S11)


def test_sym_group_idempotent_rank_one():
    t = parse_tableau("L+1,1;L-1,1", S11)
    assert sym_group_idempotent(t) == one(S11)


@pytest.mark.parametrize(
    "spec,sign",
    [("L+1,1;L+1,2;R+1,1;R+1,2", 1), ("L+1,1;L+2,1;R+1,1;R+1,2", -1)],
)
def test_sym_group_idempotent_rank_two(spec, sign):
    # oracle: JM interpolation (x_2 - a)/(c_2 - a) with the other eigenvalue a
    t = parse_tableau(spec, S22)
    expected = (one(S22) + elem(s_gen(S22, 1)).scale(affine(sign))).scale(
        affine(Fraction(1, 2))
    )
    x2 = jm_element(S22, 2)
    a = affine(-sign)
    interp = (x2 - one(S22).scale(a)).scale((affine(sign) - a).inverse())
    assert sym_group_idempotent(t) == expected == interp


def test_step_function_single_contraction():
    t = parse_tableau("L+1,1;L-1,1", S11)
    psi = step_function(S11, t.contents(), 2)
    assert psi.num.coeffs == (-elem(d_gen(S11)), one(S11))
    assert psi.den.coeffs == (ZERO, ONE)


def test_step_function_ordered_product():
    # two contractions, descending: d_{2,3}(c_2 + u) d_{1,3}(c_1 + u)
    t = parse_tableau(GOLDEN_SPEC, S22)
    contents = t.contents()
    psi = step_function(S22, contents, 3)
    oracle = baxter_factor(S22, "d", 2, 3, contents[1], 1) * baxter_factor(
        S22, "d", 1, 3, contents[0], 1
    )
    assert psi.num == oracle.num and psi.den == oracle.den
    assert psi.num.degree == 2


def test_step_function_after_wall_three_factors():
    t = parse_tableau(GOLDEN_SPEC, S22)
    contents = t.contents()
    psi = step_function(S22, contents, 4)
    oracle = (
        baxter_factor(S22, "d", 2, 4, contents[1], 1)
        * baxter_factor(S22, "d", 1, 4, contents[0], 1)
        * baxter_factor(S22, "s", 3, 4, contents[2], -1)
    )
    assert psi.num == oracle.num and psi.den == oracle.den


def _rat_equal(z: ScalarRat, num_coeffs, den_coeffs):
    return z.num == UniPoly(num_coeffs, ZERO) and z.den == UniPoly(den_coeffs, ZERO)


def test_step_prefactor_first_after_wall_step():
    t = parse_tableau("L+1,1;L-1,1", S11)
    z = step_prefactor(S11, t.contents(), 2)
    # u/(u - delta)
    assert _rat_equal(z, [ZERO, ONE], [-DELTA, ONE])


def test_step_prefactor_with_square_factors():
    t = parse_tableau(GOLDEN_SPEC, S22)
    z = step_prefactor(S22, t.contents(), 4)
    # (u - 0)/(u - delta) * (u - 1)^2 / ((u - 1)^2 - 1)
    num = UniPoly([ZERO, ONE], ZERO) * UniPoly([-ONE, ONE], ZERO) * UniPoly([-ONE, ONE], ZERO)
    sq = UniPoly([-ONE, ONE], ZERO)
    den = UniPoly([-DELTA, ONE], ZERO) * (sq * sq - UniPoly([ONE], ZERO))
    assert z.num == num and z.den == den


def test_step_prefactor_before_wall():
    # k = 2 with c_1 = 0, c_2 = -1: (u + 1)/u * u^2/(u^2 - 1)
    z = step_prefactor(Shape(2, 1), (ZERO, -ONE, ONE), 2)
    num = UniPoly([ONE, ONE], ZERO) * UniPoly([ZERO, ZERO, ONE], ZERO)
    den = UniPoly([ZERO, ONE], ZERO) * UniPoly([-ONE, ZERO, ONE], ZERO)
    assert z.num == num and z.den == den


def test_evaluate_step_reaches_contraction_leaf():
    t = parse_tableau("L+1,1;L-1,1", S11)
    psi = step_function(S11, t.contents(), 2)
    z = step_prefactor(S11, t.contents(), 2)
    e = evaluate_step(one(S11), psi, z, ZERO)
    assert e == elem(d_gen(S11)).scale(ONE / DELTA)


def test_evaluate_step_other_leaf_cancels_pole():
    t = parse_tableau("L+1,1;R+1,1", S11)
    psi = step_function(S11, t.contents(), 2)
    z = step_prefactor(S11, t.contents(), 2)
    e = evaluate_step(one(S11), psi, z, DELTA)
    assert e == one(S11) - elem(d_gen(S11)).scale(ONE / DELTA)


def test_evaluate_step_degenerate_passthrough():
    psi = AlgebraRat.one(S11)
    z = ScalarRat.one()
    e = elem(d_gen(S11)) + one(S11)
    assert evaluate_step(e, psi, z, affine(7)) == e


def test_golden_idempotent():
    t = parse_tableau(GOLDEN_SPEC, S22)
    assert fusion_idempotent(t) == golden_element()


@pytest.mark.parametrize(
    "spec,expected_sign",
    [("L+1,1;L-1,1", +1), ("L+1,1;R+1,1", -1)],
)
def test_fusion_leaves_11(spec, expected_sign):
    t = parse_tableau(spec, S11)
    d_over = elem(d_gen(S11)).scale(ONE / DELTA)
    expected = d_over if expected_sign > 0 else one(S11) - d_over
    assert fusion_idempotent(t) == expected


@pytest.mark.parametrize("r,s", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_idempotent_system_small_shapes(r, s):
    shape = Shape(r, s)
    tableaux = enumerate_tableaux(shape)
    elements = [fusion_idempotent(t) for t in tableaux]
    total = AlgebraElement.zero(shape)
    for t, e in zip(tableaux, elements):
        assert e * e == e
        assert iota(e) == e
        for k, c in enumerate(t.contents(), 1):
            x = jm_element(shape, k)
            assert x * e == e * x == e.scale(c)
            assert e * x * e == e.scale(c)
        total = total + e
    assert total == one(shape)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j:
                assert (a * b).is_zero


def test_minimal_prefactor_addition_only_is_trivial():
    t = parse_tableau("L+1,1;L+1,2;R+1,1;R+1,2", S22)
    assert all(p == 0 for _, _, p in minimal_prefactor(t))
    e, diag = fusion_with_minimal_prefactor(t)
    assert not diag.result_is_zero
    assert diag.matches_idempotent


def test_minimal_prefactor_golden_run():
    t = parse_tableau(GOLDEN_SPEC, S22)
    data = minimal_prefactor(t)
    assert [(k, p) for k, _, p in data] == [(3, 1), (4, 0)]
    e, diag = fusion_with_minimal_prefactor(t)
    assert [s.exponent for s in diag.steps] == [0, 1, 0]
    assert diag.matches_idempotent and not diag.result_is_zero


def test_minimal_prefactor_negative_control():
    t = parse_tableau(GOLDEN_SPEC, S22)
    with pytest.raises(CancellationFailure):
        fusion_with_minimal_prefactor(t, override_exponents={3: 0})


@pytest.mark.parametrize("r,s", [(1, 2), (2, 1), (2, 2), (1, 3)])
def test_minimal_prefactor_all_tableaux(r, s):
    shape = Shape(r, s)
    for t in enumerate_tableaux(shape):
        _, diag = fusion_with_minimal_prefactor(t)
        assert diag.matches_idempotent, t
        assert not diag.result_is_zero, t


def test_minimal_prefactor_pole_type_exponent():
    # the first path with a -1 exponent: left shape (2,1), all three cells
    # removed; the final removal meets a double pole that the 1/(u - c)
    # minimal factor plus the numerator zero cancel exactly
    shape = Shape(3, 3)
    t = parse_tableau("L+1,1;L+1,2;L+2,1;L-1,2;L-2,1;L-1,1", shape)
    assert exponents(t) == (0, 0, 0, 1, 1, -1)
    e, diag = fusion_with_minimal_prefactor(t)
    assert [(s.exponent, s.pole_order) for s in diag.steps] == [
        (0, 0), (0, 0), (1, 1), (1, 1), (-1, 2),
    ]
    assert diag.matches_idempotent and not diag.result_is_zero
    # withholding the pole-type factor leaves the prefactor leftover singular
    with pytest.raises(CancellationFailure):
        fusion_with_minimal_prefactor(t, override_exponents={6: 0})


def test_second_procedure_small_example():
    t = parse_tableau("L+1,1;L-1,1", S11)
    assert second_fusion_idempotent(t, DEFAULT_H) == elem(d_gen(S11)).scale(ONE / DELTA)


def test_second_procedure_golden_both_variants():
    t = parse_tableau(GOLDEN_SPEC, S22)
    g = golden_element()
    assert second_fusion_idempotent(t) == g
    assert second_fusion_idempotent(t, mirror=True) == g


def test_second_procedure_random_h_values():
    t = parse_tableau(GOLDEN_SPEC, S22)
    g = golden_element()
    for h in (affine(Fraction(1, 3), 2), affine(Fraction(-2, 5), 5), affine(Fraction(7, 2), -1)):
        assert h_is_generic(S22, t.contents(), h)
        assert second_fusion_idempotent(t, h) == g
        assert second_fusion_idempotent(t, h, mirror=True) == g


def test_non_generic_h_is_refused():
    t = parse_tableau("L+1,1;L-1,1", S11)
    # 2*c_2 - h = 0 at h = 0
    assert not h_is_generic(S11, t.contents(), ZERO)
    with pytest.raises(NonGenericH):
        second_fusion_idempotent(t, ZERO)


def test_identity_battery_22():
    report = identity_checks(S22, seed=11, points=4)
    assert report["all_pass"]
    assert report["yang_baxter_contractions"]["instances"] > 0
    assert report["uniform_yang_baxter"]["instances"] > 0


def test_identity_battery_23_has_crossing_triples():
    report = identity_checks(Shape(2, 3), seed=5, points=2)
    assert report["all_pass"]
    assert report["yang_baxter_crossings"]["instances"] > 0
