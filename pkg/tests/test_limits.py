import pytest

from skein_homfly.errors import LimitDoesNotExist, NonCoprime
from skein_homfly.exact import LaurentQT, q_bracket
from skein_homfly.partitions import Partition
from skein_homfly.special import (
    SpecialPolynomial,
    alexander_torus,
    compose_q_power,
    delta_basis,
    format_delta_basis,
    special_H,
    special_delta,
)
from skein_homfly.torus import DisjointUnion, TorusLinkSpec, UnknotSpec

P = Partition

TREFOIL = TorusLinkSpec(2, 3, 1, (P((1,)),))
H1_TREFOIL = LaurentQT({(0, -2): 2, (0, -4): -1})


def test_H_single_box_trefoil():
    result = special_H(TREFOIL)
    assert isinstance(result, SpecialPolynomial)
    assert result.kind == "H" and result.variable == "t"
    assert result.value == H1_TREFOIL


def test_H_odd_family_single_box():
    for k in (1, 2, 3):
        spec = TorusLinkSpec(2, 2 * k + 1, 1, (P((1,)),))
        assert special_H(spec).value == LaurentQT({(0, -2 * k): k + 1, (0, -2 * k - 2): -k})


def test_H_two_box_is_square():
    spec = TorusLinkSpec(2, 3, 1, (P((2,)),))
    assert special_H(spec).value == H1_TREFOIL * H1_TREFOIL


def test_H_unknot_is_one():
    for lam in (P((1,)), P((2, 1)), P((3, 2))):
        assert special_H(UnknotSpec((lam,))).value == LaurentQT.one()


def test_H_multiplicative_on_disjoint_unions():
    union = DisjointUnion((TREFOIL, UnknotSpec((P((2,)),))))
    got = special_H(union).value
    assert got == H1_TREFOIL  # unknot factor contributes 1


def test_H_of_single_box_links_is_one():
    for k in (1, 2, 3):
        spec = TorusLinkSpec(1, k, 2, (P((1,)), P((1,))))
        assert special_H(spec).value == LaurentQT.one()


def test_H_of_multistrand_links_splits_over_components():
    # both components of the 2-component (2,3)-cable are single-box trefoils
    spec = TorusLinkSpec(2, 3, 2, (P((1,)), P((1,))))
    assert special_H(spec).value == H1_TREFOIL * H1_TREFOIL
    # mixed color sizes weight each component by its box count
    spec = TorusLinkSpec(3, 2, 2, (P((2,)), P((1,))))
    assert special_H(spec).value == H1_TREFOIL ** 3


# -- the dual limit ------------------------------------------------------


def test_delta_single_box_is_alexander():
    result = special_delta(TREFOIL)
    assert result.kind == "delta" and result.variable == "q"
    assert result.value == LaurentQT({(2, 0): 1, (0, 0): -1, (-2, 0): 1})
    assert result.value == alexander_torus(2, 3, 1)


def test_delta_two_box_rescales():
    spec = TorusLinkSpec(2, 3, 1, (P((2,)),))
    assert special_delta(spec).value == alexander_torus(2, 3, 2)
    assert alexander_torus(2, 3, 2) == compose_q_power(alexander_torus(2, 3, 1), 2)


def test_delta_hooks_on_other_knots():
    for m, n in ((2, 5), (3, 4)):
        for hook in (P((2, 1)), P((3, 1))):
            spec = TorusLinkSpec(m, n, 1, (hook,))
            assert special_delta(spec).value == alexander_torus(m, n, hook.size), (m, n, hook)


def test_delta_counterexample_value():
    spec = TorusLinkSpec(2, 3, 1, (P((2, 2)),))
    value = special_delta(spec).value
    const, coeffs = delta_basis(value)
    assert const == 5
    assert coeffs == {4: -4, 6: -1, 8: 3, 10: 2, 12: -2, 14: -1, 16: 1}
    assert value != compose_q_power(alexander_torus(2, 3, 1), 4)
    # the two sides already differ at the q^4 coefficient
    assert value.terms.get((4, 0), 0) == -4
    assert compose_q_power(alexander_torus(2, 3, 1), 4).terms.get((4, 0), 0) == 0


def test_delta_limit_missing_for_links():
    hopf = TorusLinkSpec(1, 1, 2, (P((1,)), P((1,))))
    with pytest.raises(LimitDoesNotExist):
        special_delta(hopf)


# -- torus Alexander polynomials -------------------------------------------


def test_alexander_values():
    assert alexander_torus(2, 3, 1) == LaurentQT({(2, 0): 1, (0, 0): -1, (-2, 0): 1})
    assert alexander_torus(2, 1, 1) == LaurentQT.one()
    with pytest.raises(NonCoprime):
        alexander_torus(2, 4, 1)
    with pytest.raises(ValueError):
        alexander_torus(2, 3, 0)


def test_alexander_at_one_is_one():
    from skein_homfly.exact import RationalQT, limit_at_one

    for m, n in ((2, 3), (2, 5), (3, 4), (3, 5)):
        assert limit_at_one(RationalQT(alexander_torus(m, n, 1)), "q") == LaurentQT.one()


# -- display basis -----------------------------------------------------------


def test_delta_basis_round_trip():
    p = LaurentQT({(4, 0): -7, (-4, 0): -7, (0, 0): 8, (6, 0): 1, (-6, 0): 1})
    const, coeffs = delta_basis(p)
    assert const == 8 and coeffs == {4: -7, 6: 1}
    assert format_delta_basis(p) == "8 - 7*D_4 + D_6"


def test_delta_basis_unit_coefficients_and_zero():
    assert format_delta_basis(LaurentQT.zero()) == "0"
    assert format_delta_basis(LaurentQT.from_int(3)) == "3"
    p = LaurentQT({(2, 0): -1, (-2, 0): -1})
    assert format_delta_basis(p) == "-D_2"


def test_delta_basis_rejects_asymmetric():
    with pytest.raises(ValueError):
        delta_basis(q_bracket(2))
    with pytest.raises(ValueError):
        delta_basis(LaurentQT({(1, 1): 1, (-1, -1): 1}))


def test_counterexample_formatted():
    spec = TorusLinkSpec(2, 3, 1, (P((2, 2)),))
    value = special_delta(spec).value
    assert (
        format_delta_basis(value)
        == "5 - 4*D_4 - D_6 + 3*D_8 + 2*D_10 - 2*D_12 - D_14 + D_16"
    )
