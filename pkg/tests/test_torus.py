import pytest

from skein_homfly.errors import NonCoprime
from skein_homfly.exact import LaurentQT, RationalQT, delta, q_bracket, t_power
from skein_homfly.hecke import normalized_homfly_of_closure, torus_braid_word
from skein_homfly.partitions import Partition, partitions_of
from skein_homfly.schur import unknot_value
from skein_homfly.torus import (
    ColoredInvariant,
    DisjointUnion,
    TorusLinkSpec,
    UnknotSpec,
    colored_homfly,
    colored_homfly_disjoint_union,
    colored_homfly_torus,
    colored_homfly_unknot,
    framing_eigenvalue,
    uncolored_homfly_torus_knot,
)

P = Partition


def _mono(c, qe, te):
    return RationalQT(LaurentQT.monomial(c, qe, te))


def s_star(*parts):
    return unknot_value(P(parts))


def test_framing_eigenvalues():
    assert framing_eigenvalue(P((1,))) == LaurentQT.monomial(1, 0, 1)
    assert framing_eigenvalue(P((2,))) == LaurentQT.monomial(1, 2, 2)
    assert framing_eigenvalue(P((1, 1))) == LaurentQT.monomial(1, -2, 2)


# -- torus knots, single box through two boxes --------------------------


def test_odd_torus_knot_single_box():
    for k in (1, 2, 3):
        n = 2 * k + 1
        w = colored_homfly_torus(TorusLinkSpec(2, n, 1, (P((1,)),))).value
        expected = _mono(1, n, -n) * s_star(2) - _mono(1, -n, -n) * s_star(1, 1)
        assert w == expected, k


def test_odd_torus_knot_two_row():
    for k in (1, 2, 3):
        n = 2 * k + 1
        w = colored_homfly_torus(TorusLinkSpec(2, n, 1, (P((2,)),))).value
        expected = (
            _mono(1, 2 * n, -2 * n) * s_star(4)
            - _mono(1, -2 * n, -2 * n) * s_star(3, 1)
            + _mono(1, -4 * n, -2 * n) * s_star(2, 2)
        )
        assert w == expected, k


def test_odd_torus_knot_two_column():
    # the column color is forced by the q -> q^-1 symmetry from the row color
    for k in (1, 2, 3):
        n = 2 * k + 1
        w = colored_homfly_torus(TorusLinkSpec(2, n, 1, (P((1, 1)),))).value
        expected = (
            _mono(1, 4 * n, -2 * n) * s_star(2, 2)
            - _mono(1, 2 * n, -2 * n) * s_star(2, 1, 1)
            + _mono(1, -2 * n, -2 * n) * s_star(1, 1, 1, 1)
        )
        assert w == expected, k


def test_even_torus_link_single_boxes():
    for k in (1, 2, 3):
        w = colored_homfly_torus(TorusLinkSpec(1, k, 2, (P((1,)), P((1,))))).value
        expected = _mono(1, 2 * k, 0) * s_star(2) + _mono(1, -2 * k, 0) * s_star(1, 1)
        assert w == expected, k


def test_even_torus_link_mixed_colors():
    for k in (1, 2):
        w = colored_homfly_torus(TorusLinkSpec(1, k, 2, (P((2,)), P((1,))))).value
        expected = _mono(1, 4 * k, 0) * s_star(3) + _mono(1, -2 * k, 0) * s_star(2, 1)
        assert w == expected, k


# -- uncolored normalization ---------------------------------------------


def test_uncolored_closed_form():
    for k in (1, 2, 3):
        n = 2 * k + 1
        _, p = uncolored_homfly_torus_knot(2, n)
        expected = RationalQT(q_bracket(n + 1), q_bracket(2)) * _mono(1, 0, -n + 1) - RationalQT(
            q_bracket(n - 1), q_bracket(2)
        ) * _mono(1, 0, -n - 1)
        assert p == expected, k
        w, _ = uncolored_homfly_torus_knot(2, n)
        assert w == delta() * expected


def test_uncolored_q_to_one_limit():
    from skein_homfly.exact import limit_at_one

    for k in (1, 2, 3):
        _, p = uncolored_homfly_torus_knot(2, 2 * k + 1)
        limit = limit_at_one(p, "q")
        assert limit == LaurentQT({(0, -2 * k): k + 1, (0, -2 * k - 2): -k})


def test_torus_knot_index_symmetry():
    _, p23 = uncolored_homfly_torus_knot(2, 3)
    _, p32 = uncolored_homfly_torus_knot(3, 2)
    assert p23 == p32


def test_non_coprime_rejected():
    with pytest.raises(NonCoprime):
        TorusLinkSpec(2, 4, 1, (P((1,)),))
    with pytest.raises(NonCoprime):
        uncolored_homfly_torus_knot(2, 4)


def test_color_count_checked():
    with pytest.raises(ValueError):
        TorusLinkSpec(2, 3, 2, (P((1,)),))


# -- unknot paths ----------------------------------------------------------


def test_unknot_spec_matches_unknot_value():
    spec = UnknotSpec((P((2, 1)),))
    assert colored_homfly_unknot(spec).value == unknot_value(P((2, 1)))
    assert colored_homfly(spec).value == unknot_value(P((2, 1)))


def test_degenerate_torus_spec_matches_unknot():
    for lam in (P((1,)), P((2,)), P((2, 1))):
        w = colored_homfly_torus(TorusLinkSpec(1, 0, 1, (lam,))).value
        assert w == unknot_value(lam)


def test_framing_independence_of_unknot_family():
    # T(1, n) is an unknot for every n; the normalization must kill the twist
    for n in (-2, -1, 1, 2, 5):
        w = colored_homfly_torus(TorusLinkSpec(1, n, 1, (P((2, 1)),))).value
        assert w == unknot_value(P((2, 1)))


# -- disjoint unions ---------------------------------------------------------


def test_disjoint_union_of_unknots():
    one = UnknotSpec((P((1,)),))
    inv = colored_homfly_disjoint_union((one, one))
    assert inv.value == delta() * delta()


def test_disjoint_union_product():
    a = TorusLinkSpec(2, 3, 1, (P((1,)),))
    b = UnknotSpec((P((2,)),))
    union = colored_homfly_disjoint_union((a, b))
    assert union.value == colored_homfly_torus(a).value * unknot_value(P((2,)))
    assert union.spec.all_colors() == (P((1,)), P((2,)))


def test_disjoint_union_singleton():
    a = TorusLinkSpec(2, 3, 1, (P((1,)),))
    assert colored_homfly_disjoint_union((a,)).value == colored_homfly_torus(a).value


def test_disjoint_union_rejects_links():
    hopf = TorusLinkSpec(1, 1, 2, (P((1,)), P((1,))))
    with pytest.raises(ValueError):
        DisjointUnion((hopf,))


# -- cross checks against the trace oracle -----------------------------------


def test_single_box_link_specialization():
    # W with all single-box colors = t^(2k) * delta * P for the (2, 2k) links
    for k in (1, 2, 3):
        w = colored_homfly_torus(TorusLinkSpec(1, k, 2, (P((1,)), P((1,))))).value
        p = normalized_homfly_of_closure(torus_braid_word(2, 2 * k))
        assert w == RationalQT(t_power(2 * k)) * delta() * p, k


def test_mirror_image_by_negative_twists():
    w_pos = colored_homfly_torus(TorusLinkSpec(2, 3, 1, (P((2,)),))).value
    w_neg = colored_homfly_torus(TorusLinkSpec(2, -3, 1, (P((2,)),))).value
    assert w_neg == w_pos.substituted(q="q^-1", t="t^-1")


# -- integrality ---------------------------------------------------------------


def test_integral_q_exponents_small_grid():
    specs = []
    for m, n in ((2, 3), (2, 5), (3, 4)):
        for size in range(1, 4):
            for lam in partitions_of(size):
                specs.append(TorusLinkSpec(m, n, 1, (lam,)))
    for spec in specs:
        value = colored_homfly_torus(spec).value
        assert value.num.has_integral_q_exponents(), spec
        assert value.den.has_integral_q_exponents(), spec


def test_invariant_dataclass_carries_spec():
    spec = TorusLinkSpec(2, 3, 1, (P((1,)),))
    inv = colored_homfly_torus(spec)
    assert isinstance(inv, ColoredInvariant)
    assert inv.spec == spec
