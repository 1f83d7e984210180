"""Determinantal formulas, the expression census, rewriting, loci, pushforwards."""

import pytest

from frozen import (
    CENSUS_FAILURES,
    CENSUS_HITS,
    CENSUS_TOTAL,
    DET19_WITNESSES,
    VEXILLARY_S5,
)
from uschub.formulas import (
    DetSpec,
    RankProfile,
    product_family,
    det19_census,
    det19_search,
    det_D,
    dominant_formula,
    member_two_term,
    f_poly,
    grassmannian_det,
    gysin_check,
    lemma42_reduced,
    locus_formula,
    product_rule,
    remark47_first_sum,
    render_locus,
    rewrite_no_squares,
    split_by_g,
)
from uschub.permutations import Permutation, all_perms
from uschub.polyring import ONE, Polynomial, ZERO, cpoly, parse_text, x, y
from uschub.schubert import schubert_expand_M, universal_cy, universal_single
from uschub.specialize import FlagProfile, classical_specialize, to_g_form


# -- entry polynomials and determinants ------------------------------------------

def test_f_poly_values():
    assert f_poly(0, 2, 1, 0) == ONE
    assert f_poly(-1, 2, 1, 0) == ZERO
    assert f_poly(1, 1, 1, 0) == parse_text("c1(1) - y1")
    assert f_poly(1, 2, 3, 1) == parse_text("c1(3) - y2 - y3")


def test_det_D_values():
    assert det_D(1, 1, 0) == parse_text("c1(1) - y1")
    for k in (1, 2, 3):
        for b in (0, 1, 2):
            assert det_D(k, 0, b) == ONE


def test_det_D_classical_product():
    # D(k, n, 0) classically becomes the full difference product
    for k in (1, 2):
        for n in (1, 2, 3):
            expected = ONE
            for p in range(1, n + 1):
                for qq in range(1, k + 1):
                    expected = expected * (Polynomial.var(x(p)) - Polynomial.var(y(qq)))
            assert classical_specialize(det_D(k, n, 0)) == expected


def test_reduced_det_at_k1_is_det_D():
    for a in (1, 2, 3):
        for b in (0, 1):
            assert lemma42_reduced(1, a, b, {(1, 1)}) == det_D(1, a, b)


def test_reduced_det_under_a_flag_context():
    # profile (2, 4): the only surviving bracket variable is g1[3]
    nonzero = {(1, 3)}
    kill = {}
    for poly in (det_D(2, 2, 0), lemma42_reduced(2, 2, 0, nonzero)):
        for v in to_g_form(poly).variables():
            if v.kind == "g" and v.j >= 1 and (v.i, v.j) not in nonzero:
                kill[v] = ZERO
    reduced = to_g_form(lemma42_reduced(2, 2, 0, nonzero)).substitute(kill)
    full = to_g_form(det_D(2, 2, 0)).substitute(kill)
    assert reduced == full


def test_reduced_det_rejects_a_band_violation():
    with pytest.raises(ValueError):
        lemma42_reduced(2, 1, 3, {(1, 1)})


def test_dominant_formula():
    assert dominant_formula(FlagProfile((3,))) == ONE
    assert dominant_formula(FlagProfile((1, 2))) == parse_text("c1(1) - y1")
    for top in (2, 3):
        for mask in range(1, 1 << top):
            profile = FlagProfile(tuple(i for i in range(1, top + 1) if mask & (1 << (i - 1))))
            w0 = profile.longest_member()
            assert dominant_formula(profile) == universal_cy(w0, profile.top - 1)


def test_grassmannian_determinant():
    assert grassmannian_det(Permutation.identity()) == ONE
    assert grassmannian_det(Permutation((2, 1))) == parse_text("c1(1) - y1")
    for w in all_perms(4):
        if w.is_grassmannian():
            assert grassmannian_det(w) == universal_cy(w, max(w.size - 1, 1))


# -- the one-determinant search ----------------------------------------------------

def test_detspec_shape():
    spec = DetSpec((2,), (3,))
    assert spec.determinant() == cpoly(2, 3)
    assert spec.label() == "D_{2}(3)"
    kron = DetSpec((1, 0), (2, 0)).matrix()
    assert kron[1] == [ZERO, ONE]


def test_search_finds_the_known_witnesses():
    for word, (a, b) in DET19_WITNESSES.items():
        sigma, spec = det19_search(Permutation(word), 4)
        assert (spec.a, spec.b) == (a, b)
        assert spec.determinant() == universal_single(Permutation(word), 4).to_polynomial("c")


def test_search_witnesses_are_unique_for_the_printed_three():
    for word in ((5, 1, 4, 2, 3), (3, 5, 1, 2, 4), (3, 2, 5, 1, 4)):
        hits = det19_search(Permutation(word), 4, exhaustive=True)
        assert len(hits) == 1


def test_search_absence():
    assert det19_search(Permutation((1, 5, 3, 2, 4)), 4) is None
    assert det19_search(Permutation((1, 5, 3, 2, 4)), 4, exhaustive=True) == []


def test_census_of_s4_is_complete():
    records = det19_census(3)
    assert len(records) == 24
    assert all(rec["spec"] is not None for rec in records)


def test_census_of_s5_pinned():
    records = det19_census(4)
    assert len(records) == CENSUS_TOTAL
    failures = {tuple(rec["w"]) for rec in records if rec["spec"] is None}
    assert failures == CENSUS_FAILURES
    assert sum(1 for rec in records if rec["spec"] is not None) == CENSUS_HITS
    vexillary_failures = sum(1 for wt in failures if Permutation(wt).is_vexillary())
    assert vexillary_failures == 6
    assert sum(1 for w in all_perms(5) if w.is_vexillary()) == VEXILLARY_S5


def test_census_hits_verify():
    for rec in det19_census(3):
        spec = DetSpec(tuple(rec["spec"]["a"]), tuple(rec["spec"]["b"]))
        w = Permutation(rec["w"])
        assert spec.determinant() == universal_single(w, 3).to_polynomial("c")


# -- the product rule ------------------------------------------------------------

def test_family_membership_data():
    assert [(w.word, a, b) for w, a, b in product_family(1, 1, 1)] == [((), 1, 2)]
    assert [(w.word, a, b) for w, a, b in product_family(1, 2, 2)] == [((2, 1), 1, 3)]
    for (i, j, k) in ((1, 1, 3), (2, 1, 3), (2, 2, 4)):
        for w, a, b in product_family(i, j, k):
            assert a < b
            assert a + b == 2 * k + 3 - (i + j)
            assert a <= k + 1 - max(i, j)
            assert w.is_grassmannian()


def test_two_term_form_matches_the_member_polynomials():
    for k in (2, 3, 4):
        for w, a, b in product_family(1, 1, k) + product_family(2, 1, k):
            assert member_two_term(a, b, k) == universal_single(w, k).to_polynomial("c")


def test_product_rule_holds_in_g():
    for k in range(0, 4):
        for i in range(0, k + 1):
            for j in range(0, k + 1):
                assert product_rule(i, j, k).equal_in_g


def test_product_rule_example_112():
    report = product_rule(1, 1, 2)
    assert report.lhs == cpoly(1, 2) * cpoly(1, 2)
    assert report.rhs == parse_text("c1(2)*c1(3) + c2(2) - c2(3) + g2[1]")


def test_zero_index_collapses_the_rule():
    report = product_rule(0, 2, 3)
    assert to_g_form(report.rhs) == to_g_form(cpoly(2, 3))


def test_first_sum_values():
    assert remark47_first_sum(0, 0, 2) == ONE
    assert remark47_first_sum(1, 0, 1) == cpoly(1, 1)


def test_first_sum_is_the_family_sum():
    for k in range(0, 4):
        for i in range(0, k + 1):
            for j in range(0, k + 1):
                total = ZERO
                for w, _, _ in product_family(i + 1, j + 1, k + 1):
                    total = total + universal_single(w, k + 1).to_polynomial("c")
                assert remark47_first_sum(i, j, k) == total


def test_classically_only_the_first_sum_survives():
    from uschub.polyring import elementary_sym

    for k in range(1, 4):
        for i in range(0, k + 1):
            for j in range(0, k + 1):
                reduced = classical_specialize(remark47_first_sum(i, j, k))
                expected = elementary_sym(i, k, kind="x") * elementary_sym(j, k, kind="x")
                assert reduced == expected


# -- square elimination ------------------------------------------------------------

def _no_same_point_squares(p):
    for mono in p.terms():
        seen = set()
        for v, e in mono:
            if v.kind != "c":
                continue
            if e > 1 or v.j in seen:
                return False
            seen.add(v.j)
    return True


def test_rewrite_squares_away():
    samples = [
        cpoly(1, 1) * cpoly(1, 1),
        cpoly(2, 2) * cpoly(1, 2) + cpoly(1, 1),
        cpoly(2, 3) * cpoly(2, 3) * cpoly(1, 1),
        (cpoly(1, 2) + cpoly(2, 2)) * (cpoly(1, 2) - cpoly(2, 2)),
    ]
    for p in samples:
        flat = rewrite_no_squares(p)
        assert _no_same_point_squares(flat)
        assert to_g_form(flat) == to_g_form(p)
        assert rewrite_no_squares(flat) == flat


def test_rewrite_rejects_other_kinds():
    with pytest.raises(ValueError):
        rewrite_no_squares(parse_text("d1(1)"))


def test_square_expansion_in_the_schubert_basis():
    flat = rewrite_no_squares(cpoly(1, 1) * cpoly(1, 1))
    slices = {}
    for gpart, el in split_by_g(flat, 2).items():
        gtext = Polynomial({gpart: 1}).text()
        slices[gtext] = schubert_expand_M(el)
    assert slices == {
        "1": {Permutation((3, 1, 2)): 1},
        "g1[1]": {Permutation.identity(): 1},
    }


# -- loci and pushforwards -----------------------------------------------------------

def test_locus_strict_example():
    profile = RankProfile((2,), (2,))
    p = locus_formula(Permutation((1, 3, 2)), profile)
    assert p == parse_text("c1(2) - d1(2)")
    assert render_locus(p, profile) == "c1(E1) - c1(F1)"


def test_locus_requires_containment():
    with pytest.raises(ValueError):
        locus_formula(Permutation((2, 1)), RankProfile((2,), (2,)))


def test_locus_interval_mode_snaps_points():
    w = Permutation((2, 3, 1))
    # d1(2) snaps down to d1(1); d2(2) snaps to d2(1) which vanishes
    p = locus_formula(w, RankProfile((2,), (1,)), mode="interval")
    assert p == parse_text("-c1(2)*d1(1) + c2(2) + d1(1)^2")
    full = locus_formula(w, RankProfile((2,), (1, 2)), mode="interval")
    assert full == parse_text("-c1(2)*d1(1) + c2(2) + d1(1)*d1(2) - d2(2)")
    with pytest.raises(ValueError):
        locus_formula(Permutation((1, 3, 2)), RankProfile((1, 3), (1, 3)), mode="interval")


def test_locus_strict_on_every_covering_profile_of_s4():
    subsets = [tuple(i for i in range(1, 4) if mask & (1 << (i - 1))) for mask in range(1, 8)]
    for w in all_perms(4):
        for A in subsets:
            for B in subsets:
                profile = RankProfile(A, B)
                if profile.contains_codiagram(w):
                    locus_formula(w, profile)


def test_gysin_sweep():
    for k in range(0, 5):
        for i in range(0, k + 1):
            assert gysin_check(k, i)
    with pytest.raises(ValueError):
        gysin_check(2, 3)
