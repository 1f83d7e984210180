"""Determinantal formulas, the product rule, locus classes, Gysin check.

Everything here is built from two determinant shapes and one family of
Grassmannian index sets:

  * f_m(k, a, b) = sum_p (-1)^p c_{m-p}(a) h_p(y_{b+1}..y_{b+k}) and the
    k x k determinants D(k, a, b) assembled from them; products of these
    give the dominant mixed polynomials, and row-constant variants are
    valid in suitably degenerate g-contexts.
  * C(a, b), the matrix with entries c_{a_i+j-i}(b_i) and Kronecker rows
    where a_i = 0, searched over row orders to express single universal
    polynomials as one determinant.
  * product_family(i, j, k), the Grassmannian permutations entering the product
    rule for c_i(k) c_j(k), together with the explicit two-term forms of
    their polynomials that make the rule effective for rewriting.

The locus emitter renames evaluation points to bundle tags in rendered
output only; the underlying polynomial algebra never changes kinds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .permutations import Permutation, all_perms
from .polyring import (
    ONE,
    ZERO,
    Monomial,
    Polynomial,
    Variable,
    complete_sym,
    cpoly,
    dpoly,
    g,
    x,
)
from .schubert import MElement, universal_double, universal_single
from .specialize import FlagProfile


# -- f and D ------------------------------------------------------------------

def f_poly(m: int, k: int, a: int, b: int) -> Polynomial:
    """Alternating convolution of c(a) against h over the window y_{b+1}..y_{b+k}."""
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    total = ZERO
    for p in range(0, m + 1):
        term = cpoly(m - p, a) * complete_sym(p, k, offset=b, kind="y")
        if p % 2:
            term = -term
        total = total + term
    return total


def _det(mat: list[list[Polynomial]]) -> Polynomial:
    n = len(mat)
    if n == 0:
        return ONE
    if n == 1:
        return mat[0][0]
    total = ZERO
    for col in range(n):
        entry = mat[0][col]
        if not entry:
            continue
        minor = [row[:col] + row[col + 1:] for row in mat[1:]]
        term = entry * _det(minor)
        total = total + (term if col % 2 == 0 else -term)
    return total


def det_D(k: int, a: int, b: int) -> Polynomial:
    """The k x k determinant with (i, j) entry f_{a+j-i}(k, a+k-i, b)."""
    if k < 1:
        raise ValueError("window size k must be positive")
    mat = [
        [f_poly(a + j - i, k, a + k - i, b) for j in range(1, k + 1)]
        for i in range(1, k + 1)
    ]
    return _det(mat)


def lemma42_reduced(k: int, a: int, b: int, nonzero: set[tuple[int, int]]) -> Polynomial:
    """Row-constant variant of det_D, valid when the g-context is degenerate.

    nonzero lists the (i, j) with j >= 1 whose g_i[j] survive the
    context's substitution; the variant needs all of them to miss the
    band a < i+j < a+k, and raises otherwise.
    """
    for (i, j) in nonzero:
        if j >= 1 and a < i + j < a + k:
            raise ValueError(
                f"g{i}[{j}] lies in the band {a} < i+j < {a + k}; reduction invalid"
            )
    mat = [
        [f_poly(a + j - i, k, a, b) for j in range(1, k + 1)]
        for i in range(1, k + 1)
    ]
    return _det(mat)


def dominant_formula(profile: FlagProfile) -> Polynomial:
    """Product of determinants for the longest member of the profile."""
    total = ONE
    for i in range(1, profile.l):
        total = total * det_D(
            profile.k_(i + 1), profile.n_(i), profile.top - profile.n_(i + 1)
        )
    return total


def grassmannian_det(w: Permutation) -> Polynomial:
    """One determinant for a Grassmannian permutation's mixed polynomial."""
    r, lam, mu, phi = w.grassmannian_data()
    if not mu:
        return ONE
    mat = [
        [f_poly(mu[i - 1] + j - i, phi[i - 1], r + j - 1, 0) for j in range(1, len(mu) + 1)]
        for i in range(1, len(mu) + 1)
    ]
    return _det(mat)


# -- one-determinant search ----------------------------------------------------

@dataclass(frozen=True)
class DetSpec:
    """Row data for the matrix C(a, b): top indices a, evaluation points b."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def matrix(self) -> list[list[Polynomial]]:
        n = len(self.a)
        mat: list[list[Polynomial]] = []
        for i in range(1, n + 1):
            if self.a[i - 1] == 0:
                mat.append([ONE if j == i else ZERO for j in range(1, n + 1)])
            else:
                mat.append([cpoly(self.a[i - 1] + j - i, self.b[i - 1]) for j in range(1, n + 1)])
        return mat

    def determinant(self) -> Polynomial:
        return _det(self.matrix())

    def label(self) -> str:
        return (
            "D_{" + ",".join(map(str, self.a)) + "}(" + ",".join(map(str, self.b)) + ")"
        )


def det19_search(w: Permutation, n: int, exhaustive: bool = False):
    """Row orders sigma making det C(a, b) equal w's single polynomial.

    a = (code_{sigma(1)}, ..., code_{sigma(n)}) and b = sigma itself.
    Returns the lex-first (sigma, DetSpec) or None; with exhaustive=True,
    the list of all matches.
    """
    code = w.code_tail(n)
    target = universal_single(w, n).to_polynomial("c")
    found = []
    for sigma in all_perms(n):
        st = sigma.as_tuple(n)
        spec = DetSpec(tuple(code[p - 1] for p in st), st)
        if spec.determinant() == target:
            if not exhaustive:
                return (sigma, spec)
            found.append((sigma, spec))
    return found if exhaustive else None


def det19_census(n: int) -> list[dict]:
    """One record per w in S_{n+1}: the lex-first expression or null."""
    out = []
    for w in all_perms(n + 1):
        hit = det19_search(w, n)
        out.append({
            "w": list(w.as_tuple(n + 1)),
            "sigma": list(hit[0].as_tuple(n)) if hit else None,
            "spec": {"a": list(hit[1].a), "b": list(hit[1].b)} if hit else None,
        })
    return out


# -- the product rule -----------------------------------------------------------

def product_family(i: int, j: int, k: int) -> list[tuple[Permutation, int, int]]:
    """Grassmannian w in S_{k+1} with descent at k-1 entering the rule.

    Members are fixed by (a, b) = (w(k), w(k+1)) with a < b,
    a <= k+1-max(i,j) and a+b = 2k+3-(i+j); the remaining values fill
    positions 1..k-1 in increasing order.  The pair (a, b) = (k, k+1)
    yields the identity and is kept: the degenerate case carries the
    rule's pure-g terms.
    """
    out = []
    s = 2 * k + 3 - (i + j)
    for a in range(1, min(k + 1 - max(i, j), k + 1) + 1):
        b = s - a
        if b <= a or b > k + 1:
            continue
        rest = [v for v in range(1, k + 2) if v not in (a, b)]
        word = rest + [a, b]
        out.append((Permutation(word), a, b))
    return out


def member_two_term(a: int, b: int, k: int) -> Polynomial:
    """Two-term form of the polynomial of the product_family member with data (a, b)."""
    return cpoly(k - a, k - 1) * cpoly(k + 1 - b, k) - cpoly(k - b, k - 1) * cpoly(k + 1 - a, k)


def member_two_term_shifted(a: int, b: int, k: int, p: int) -> Polynomial:
    """Two-term form after interchanging the values k-p and k."""
    return (
        cpoly(k - a - p, k - 1 - p) * cpoly(k + 1 - b, k)
        - cpoly(k - b - p, k - 1 - p) * cpoly(k + 1 - a, k)
    )


@dataclass
class ProductRuleReport:
    i: int
    j: int
    k: int
    lhs: Polynomial
    rhs: Polynomial
    equal_in_g: bool
    first_terms: list[tuple[Permutation, Polynomial]] = field(default_factory=list)
    second_terms: list[tuple[Permutation, Polynomial]] = field(default_factory=list)
    correction_terms: dict[int, list[tuple[Permutation, Polynomial]]] = field(default_factory=dict)


def product_rule(i: int, j: int, k: int) -> ProductRuleReport:
    """Both sides of the rule for c_i(k) c_j(k), checked in the g variables."""
    if not (0 <= i <= k and 0 <= j <= k):
        raise ValueError("need 0 <= i, j <= k")
    lhs = cpoly(i, k) * cpoly(j, k)
    first_terms = [(w, member_two_term(a, b, k + 1)) for (w, a, b) in product_family(i + 1, j + 1, k + 1)]
    second_terms = [(w, member_two_term(a, b, k)) for (w, a, b) in product_family(i, j, k)]
    correction: dict[int, list[tuple[Permutation, Polynomial]]] = {}
    for p in range(1, k):
        terms = []
        for (w, a, b) in product_family(i, j, k):
            if w(k - p) > w(k):
                u = w * Permutation.t(k - p, k)
                terms.append((u, member_two_term_shifted(a, b, k, p)))
        if terms:
            correction[p] = terms
    rhs = ZERO
    for _, poly in first_terms:
        rhs = rhs + poly
    if second_terms:
        gk1 = Polynomial.var(g(k, 1))
        for _, poly in second_terms:
            rhs = rhs + gk1 * poly
    for p, terms in correction.items():
        gp = Polynomial.var(g(k - p, p + 1))
        for _, poly in terms:
            rhs = rhs + gp * poly
    from .specialize import to_g_form

    equal = to_g_form(lhs) == to_g_form(rhs)
    return ProductRuleReport(i, j, k, lhs, rhs, equal, first_terms, second_terms, correction)


def remark47_first_sum(i: int, j: int, k: int) -> Polynomial:
    """Closed form of the rule's leading sum:
    sum_{l>=0} c_{i-l}(k+1) c_{j+l}(k) - sum_{l>=1} c_{i-l}(k) c_{j+l}(k+1)."""
    total = ZERO
    for l in range(0, i + 1):
        total = total + cpoly(i - l, k + 1) * cpoly(j + l, k)
    for l in range(1, i + 1):
        total = total - cpoly(i - l, k) * cpoly(j + l, k + 1)
    return total


# -- square elimination -----------------------------------------------------------

def _pair_replacement(i: int, j: int, k: int) -> Polynomial:
    """Right side of the rule for c_i(k) c_j(k), in the proof's explicit form."""
    rhs = ZERO
    for (_, a, b) in product_family(i + 1, j + 1, k + 1):
        rhs = rhs + member_two_term(a, b, k + 1)
    gk1 = Polynomial.var(g(k, 1))
    for (_, a, b) in product_family(i, j, k):
        rhs = rhs + gk1 * member_two_term(a, b, k)
    for p in range(1, k):
        gp = Polynomial.var(g(k - p, p + 1))
        for (w, a, b) in product_family(i, j, k):
            if w(k - p) > w(k):
                rhs = rhs + gp * member_two_term_shifted(a, b, k, p)
    return rhs


def rewrite_no_squares(p: Polynomial, n: int | None = None, budget: int = 10**6) -> Polynomial:
    """Eliminate all same-point products c_i(k) c_j(k) with i, j >= 1.

    Repeatedly replaces the offending pair with the largest (k, i, j)
    by the explicit right side of the product rule; the result lives in
    c and g variables, with every monomial's c-part square-free across
    evaluation points.  The step budget guards the termination argument.
    """
    for v in p.variables():
        if v.kind not in ("c", "g"):
            raise ValueError("rewrite_no_squares expects a polynomial in c (and g)")
        if n is not None and v.kind == "c" and v.j > n:
            raise ValueError(f"c-point {v.j} exceeds the stated bound {n}")
    work = p
    steps = 0
    while True:
        best = None
        for mono, _ in work.terms().items():
            by_point: dict[int, list[int]] = {}
            for v, e in mono:
                if v.kind == "c":
                    by_point.setdefault(v.j, []).extend([v.i] * e)
            for point, tops in by_point.items():
                if len(tops) >= 2:
                    tops.sort(reverse=True)
                    cand = (point, tops[0], tops[1])
                    if best is None or cand > best:
                        best = cand
        if best is None:
            return work
        steps += 1
        if steps > budget:
            raise RuntimeError("square elimination exceeded its step budget")
        k, i, j = best
        replacement = _pair_replacement(i, j, k)
        updated = ZERO
        for mono, coeff in work.terms().items():
            counts = {v: e for v, e in mono}
            ci = Variable("c", i, k, i)
            cj = Variable("c", j, k, j)
            have = counts.get(ci, 0) >= 1 and (
                counts.get(cj, 0) >= (2 if i == j else 1)
            )
            if not have:
                updated = updated + Polynomial({mono: coeff})
                continue
            counts[ci] -= 1
            counts[cj] -= 1
            rest = tuple(sorted(
                ((v, e) for v, e in counts.items() if e),
                key=lambda t: t[0].sort_key(),
            ))
            updated = updated + Polynomial({rest: coeff}) * replacement
        work = updated


def split_by_g(p: Polynomial, n: int) -> dict[Monomial, MElement]:
    """View a square-free c/g polynomial as g-monomial -> code combination."""
    out: dict[Monomial, MElement] = {}
    for gpart, cof in p.coefficients_by("g").items():
        out[gpart] = MElement.from_polynomial(cof, n, "c")
    return out


# -- degeneracy locus emitter -------------------------------------------------------

@dataclass(frozen=True)
class RankProfile:
    """Strictly increasing rank lists for the two sides of a bundle chain."""

    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        for name, ranks in (("A", self.A), ("B", self.B)):
            if not ranks or any(b <= a for a, b in zip(ranks, ranks[1:])) or ranks[0] < 1:
                raise ValueError(f"rank list {name} must be strictly increasing and positive")

    def contains_codiagram(self, w: Permutation) -> bool:
        n = max(w.size - 1, 1)
        As, Bs = set(self.A), set(self.B)
        return all(i in As and j in Bs for (i, j) in w.codiagram(n))

    def covers_descents(self, w: Permutation) -> bool:
        return (
            w.has_descents_only_in(self.A)
            and w.inverse().has_descents_only_in(self.B)
        )


def locus_formula(w: Permutation, profile: RankProfile, mode: str = "strict") -> Polynomial:
    """Chern-class formula for the degeneracy locus of w over a rank profile.

    Strict mode requires the codiagram inside A x B, and the mixed
    polynomial then only mentions admissible evaluation points.
    Interval mode only needs descents of w in A and of w inverse in B;
    points are snapped down to the profile (dropping those below the
    range, capping those above).
    """
    n = max(w.size - 1, 1)
    p = universal_double(w, n)
    if mode == "strict":
        if not profile.contains_codiagram(w):
            raise ValueError(f"codiagram of {w} is not inside A x B")
        As, Bs = set(profile.A), set(profile.B)
        for v in p.variables():
            if v.kind == "c" and v.j not in As:
                raise AssertionError("occurrence outside A contradicts the containment")
            if v.kind == "d" and v.j not in Bs:
                raise AssertionError("occurrence outside B contradicts the containment")
        return p
    if mode != "interval":
        raise ValueError(f"unknown mode {mode!r}")
    if not profile.covers_descents(w):
        raise ValueError(f"descents of {w} or its inverse escape the profile")
    mapping: dict[Variable, Polynomial] = {}
    for v in p.variables():
        if v.kind == "c":
            snapped = _snap(v.j, profile.A)
            mapping[v] = cpoly(v.i, snapped) if snapped else ZERO
        elif v.kind == "d":
            snapped = _snap(v.j, profile.B)
            mapping[v] = dpoly(v.i, snapped) if snapped else ZERO
    return p.substitute(mapping) if mapping else p


def _snap(k: int, ranks: tuple[int, ...]) -> int | None:
    if k < ranks[0]:
        return None
    best = ranks[0]
    for r in ranks:
        if r <= k:
            best = r
    return best


def render_locus(p: Polynomial, profile: RankProfile) -> str:
    """Text form with evaluation points renamed to bundle tags E_p / F_q."""
    epos = {a: idx for idx, a in enumerate(profile.A, start=1)}
    fpos = {b: idx for idx, b in enumerate(profile.B, start=1)}
    if not p:
        return "0"
    chunks: list[str] = []
    for mono, coeff in p.sorted_terms():
        names = []
        for v, e in mono:
            if v.kind == "c":
                tag = f"c{v.i}(E{epos[v.j]})"
            elif v.kind == "d":
                tag = f"c{v.i}(F{fpos[v.j]})"
            else:
                tag = v.text()
            names.append(tag + (f"^{e}" if e > 1 else ""))
        body = "*".join(names)
        mag = abs(coeff)
        piece = body if (mag == 1 and body) else (f"{mag}*{body}" if body else str(mag))
        if not chunks:
            chunks.append(piece if coeff > 0 else "-" + piece)
        else:
            chunks.append((" + " if coeff > 0 else " - ") + piece)
    return "".join(chunks)


# -- projective-bundle pushforward check ------------------------------------------

def gysin_check(k: int, i: int) -> bool:
    """Pushforward of c_k(K-dual twisted) c_i(H) along a hyperplane bundle.

    K has rank k (classes kept as c_a(k)); G has rank k+1 (classes kept
    as d_b(k+1)); the hyperplane class is carried by x_1.  The linear
    pushforward sends x_1^{k+r} to (-1)^r s_r(G) with s the inverse
    Chern series, and lower powers to zero.  True when the result is
    c_i(K).
    """
    if not 0 <= i <= k:
        raise ValueError("need 0 <= i <= k")
    zeta = Polynomial.var(x(1))
    top = ZERO
    for a in range(0, k + 1):
        top = top + (-1) ** a * cpoly(a, k) * zeta ** (k - a)
    ch = ZERO
    for b in range(0, i + 1):
        ch = ch + (-1) ** b * dpoly(i - b, k + 1) * zeta ** b
    prod = top * ch

    max_r = i
    segre: list[Polynomial] = [ONE]
    for r in range(1, max_r + 1):
        s = ZERO
        for t in range(1, min(r, k + 1) + 1):
            s = s - dpoly(t, k + 1) * segre[r - t]
        segre.append(s)

    pushed = ZERO
    for zpart, cof in prod.coefficients_by("x").items():
        m = zpart[0][1] if zpart else 0
        if m < k:
            continue
        pushed = pushed + (-1) ** (m - k) * cof * segre[m - k]
    return pushed == cpoly(i, k)
