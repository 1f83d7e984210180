"""The finite quotient ring: normal forms, duality pairing, the twist."""

import pytest

from frozen import NF_X1_CUBED_N2
from uschub.permutations import Permutation, all_perms
from uschub.polyring import ONE, Polynomial, ZERO, parse_text, x
from uschub.specialize import g_classical
from uschub.uring import (
    RingElement,
    check_diagonal_vanishing,
    check_orthogonality,
    inner_product,
    multiply_expand,
    normal_form,
    omega,
    schubert_basis_expand,
    staircase_rank_report,
    universal_ring,
)

S1 = Permutation((2, 1))
S2 = Permutation((1, 3, 2))
ID = Permutation.identity()


def _xp(i: int) -> Polynomial:
    return Polynomial.var(x(i))


# -- normal forms ---------------------------------------------------------------

def test_relations_at_n1():
    assert normal_form(_xp(1) + _xp(2), 1) == RingElement.zero(1)
    assert normal_form(_xp(1) ** 2, 1) == normal_form(parse_text("g1[1]"), 1)


def test_x1_cubed_at_n2():
    reduced = normal_form(_xp(1) ** 3, 2)
    assert set(reduced.coeffs) == set(NF_X1_CUBED_N2)
    for exps, text in NF_X1_CUBED_N2.items():
        assert reduced.coefficient(exps) == parse_text(text)


def test_normal_form_is_idempotent():
    samples = [
        _xp(1) ** 3,
        _xp(2) ** 2 * _xp(3),
        parse_text("g1[1]") * _xp(1) + _xp(3) ** 2,
        (_xp(1) + _xp(2) + _xp(3)) ** 2,
    ]
    for p in samples:
        e = normal_form(p, 2)
        assert normal_form(e.to_polynomial(), 2) == e


def test_normal_form_is_a_ring_map():
    ring = universal_ring(2)
    pairs = [
        (_xp(1), _xp(1) ** 2),
        (_xp(1) + _xp(2), _xp(2) * _xp(3)),
        (_xp(3) ** 2, parse_text("g1[1]") + _xp(1) * _xp(2)),
    ]
    for p, q in pairs:
        direct = normal_form(p * q, 2)
        staged = ring.multiply(normal_form(p, 2), normal_form(q, 2))
        assert direct == staged


def test_reduction_commutes_with_dropping_brackets():
    # killing g[j >= 1] first or last lands on the same classical image
    samples = [_xp(1) ** 3, _xp(1) ** 2 * _xp(2), (_xp(1) + _xp(3)) ** 2]
    for p in samples:
        late = g_classical(normal_form(p, 2).to_polynomial())
        early = g_classical(normal_form(g_classical(p), 2).to_polynomial())
        assert g_classical(normal_form(late, 2).to_polynomial()) == g_classical(
            normal_form(early, 2).to_polynomial()
        )


def test_element_validation():
    with pytest.raises(ValueError):
        RingElement(2, {(1, 0): ONE})
    with pytest.raises(ValueError):
        RingElement(2, {(3, 0, 0): ONE})
    with pytest.raises(ValueError):
        RingElement(2, {(0, 0, 1): ONE})
    with pytest.raises(ValueError):
        RingElement(1, {(0, 0): ONE}) + RingElement.zero(2)


def test_staircase_rank():
    for n in (1, 2):
        report = staircase_rank_report(n)
        assert report["full_rank"] is True
        assert report["top_degree"] == n * (n + 1) // 2
    dims = [row["dimension"] for row in staircase_rank_report(2)["degrees"]]
    assert dims == [1, 2, 3, 4]


# -- the basis and its products ----------------------------------------------------

def test_basis_expansion_inverts_the_basis():
    ring = universal_ring(2)
    for w in all_perms(3):
        assert schubert_basis_expand(ring.schubert(w)) == {w: ONE}


def test_quantum_flavored_products():
    assert {w: p.text() for w, p in multiply_expand(S1, S1, 2).items()} == {
        Permutation((3, 1, 2)): "1",
        ID: "g1[1]",
    }
    assert multiply_expand(S1, S2, 2) == {
        Permutation((2, 3, 1)): ONE,
        Permutation((3, 1, 2)): ONE,
    }
    assert {w: p.text() for w, p in multiply_expand(S2, S2, 2).items()} == {
        Permutation((2, 3, 1)): "1",
        ID: "g2[1]",
    }
    assert multiply_expand(S2, S1, 2) == multiply_expand(S1, S2, 2)


def test_top_cell_products_leave_the_window():
    ring = universal_ring(2)
    w0 = Permutation((3, 2, 1))
    product = ring.multiply(ring.schubert(w0), ring.schubert(S1))
    expansion = schubert_basis_expand(product)
    for w, coeff in expansion.items():
        assert coeff.degree() + w.length() == w0.length() + 1


# -- the pairing --------------------------------------------------------------------

def test_inner_product_unit():
    one = normal_form(ONE, 1)
    x1 = normal_form(_xp(1), 1)
    assert inner_product(one, x1) == ONE
    assert inner_product(one, one) == ZERO


def test_inner_product_routes_agree():
    ring = universal_ring(2)
    elements = [
        normal_form(ONE, 2),
        normal_form(_xp(1), 2),
        normal_form(_xp(1) * _xp(2), 2),
        ring.schubert(Permutation((3, 2, 1))),
        ring.schubert(Permutation((2, 3, 1))),
    ]
    for a in elements:
        for b in elements:
            assert ring.inner_product(a, b) == ring.inner_product_w0(a, b)


# -- the twist ----------------------------------------------------------------------

def test_omega_values():
    assert omega(_xp(1), 1) == -_xp(2)
    assert omega(parse_text("g1[1]"), 2) == parse_text("g2[1]")
    assert omega(parse_text("g1[2]"), 2) == parse_text("-g1[2]")


def test_omega_is_an_involution():
    samples = [
        _xp(1) ** 2 + _xp(3),
        parse_text("g1[1]") * _xp(2),
        parse_text("g2[1] - g1[2]"),
    ]
    for p in samples:
        assert omega(omega(p, 2), 2) == p


def test_omega_rejects_out_of_range():
    with pytest.raises(ValueError):
        omega(_xp(3), 1)
    with pytest.raises(ValueError):
        omega(parse_text("g3[2]"), 2)


# -- the verification sweeps ---------------------------------------------------------

def test_orthogonality_small():
    for n in (1, 2):
        report = check_orthogonality(n)
        assert report["failures"] == []
        assert report["checked"] == (len(list(all_perms(n + 1)))) ** 2


def test_diagonal_vanishing_small():
    report = check_diagonal_vanishing(2)
    assert report["failures"] == []
    assert report["checked"] == 5
