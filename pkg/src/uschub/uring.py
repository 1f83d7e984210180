"""The universal ring R_n and exact computation inside it.

R_n is Z[g][x_1, ..., x_{n+1}] modulo the ideal generated by the top
Chern ladder c_1(n+1), ..., c_{n+1}(n+1), where each c_i(n+1) is the
g-variable polynomial with g_k[0] read as x_k.  Over the coefficient
ring Z[g+] (the g_i[j] with j >= 1, i + j <= n+1) the quotient is free
with the staircase monomials x^a, a_i <= n+1-i, as a basis, and the
Schubert elements indexed by S_{n+1} form a second basis.

Normal forms are computed degree by degree with exact integer linear
algebra.  The first relation is linear and eliminates x_{n+1} up front;
each remaining relation splits as E_i + G_i with E_i its pure-x part
and G_i the g+ tail.  A monomial in x_1..x_n of degree D has a unique
integer expansion over products (staircase) * (E_2^.. E_{n+1}^..) of
the same degree; replacing each E_i by -G_i drops the x-degree, so the
reduction recurses to a staircase-supported representative.  The
per-degree expansion matrices are inverted once and cached.

The inner product pairs two elements by multiplying, reducing, and
reading the coefficient of the top staircase monomial x_1^n ... x_n;
an equivalent route reads the coefficient of the longest permutation
in the Schubert-basis expansion, and the two are compared in tests.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _itproduct

from .exactla import invert
from .permutations import Permutation, all_perms
from .polyring import Monomial, ONE, Polynomial, Variable, ZERO, g, x
from .schubert import classical_single, universal_double, universal_single
from .specialize import c_from_g

_ring_cache: dict[int, "UniversalRing"] = {}


def clear_caches() -> None:
    _ring_cache.clear()


def universal_ring(n: int) -> "UniversalRing":
    if n not in _ring_cache:
        _ring_cache[n] = UniversalRing(n)
    return _ring_cache[n]


def _monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


def _x_monomial(exps: tuple[int, ...]) -> Polynomial:
    p = ONE
    for i, e in enumerate(exps, start=1):
        if e:
            p = p * Polynomial.var(x(i)) ** e
    return p


class RingElement:
    """A reduced element of R_n: staircase x-monomials with g+ coefficients.

    Keys of ``coeffs`` are exponent tuples of length n+1 whose last entry
    is always 0 (the eliminated variable) and whose i-th entry is at most
    n+1-i.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict[tuple[int, ...], Polynomial]):
        self.n = n
        clean = {}
        for exps, poly in coeffs.items():
            if len(exps) != n + 1 or exps[-1] != 0:
                raise ValueError("exponent tuple must have length n+1 and end in 0")
            if any(exps[i] > n + 1 - (i + 1) for i in range(n + 1)):
                raise ValueError("exponents exceed the staircase bound")
            if poly:
                clean[exps] = poly
        self.coeffs = clean

    @classmethod
    def zero(cls, n: int) -> "RingElement":
        return cls(n, {})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.coeffs.items(), key=lambda t: t[0]))))

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.n != other.n:
            raise ValueError("mixed ambient n")
        out = dict(self.coeffs)
        for exps, poly in other.coeffs.items():
            out[exps] = out.get(exps, ZERO) + poly
        return RingElement(self.n, out)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + other.scale(Polynomial.const(-1))

    def scale(self, poly: Polynomial | int) -> "RingElement":
        if isinstance(poly, int):
            poly = Polynomial.const(poly)
        return RingElement(self.n, {e: poly * p for e, p in self.coeffs.items()})

    def coefficient(self, exps: tuple[int, ...]) -> Polynomial:
        return self.coeffs.get(exps, ZERO)

    def to_polynomial(self) -> Polynomial:
        total = ZERO
        for exps, poly in self.coeffs.items():
            total = total + poly * _x_monomial(exps[:-1])
        return total

    def text(self) -> str:
        return self.to_polynomial().text()

    def __repr__(self) -> str:
        return f"RingElement(n={self.n}, {self.text()})"


def _top_staircase(n: int) -> tuple[int, ...]:
    return tuple(n + 1 - i for i in range(1, n + 1)) + (0,)


class UniversalRing:
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.w0 = Permutation.longest(n + 1)
        # x_{n+1} -> -(x_1 + ... + x_n): the linear generator, g-free.
        drop = ZERO
        for i in range(1, n + 1):
            drop = drop - Polynomial.var(x(i))
        self._eliminate = {x(n + 1): drop}
        # Remaining generators, split into pure-x part and g+ tail.
        self._pure_e: dict[int, Polynomial] = {}
        self._g_tail: dict[int, Polynomial] = {}
        for i in range(2, n + 2):
            rel = self._to_xg(c_from_g(i, n + 1))
            pure, tail = self._split_pure_x(rel)
            self._pure_e[i] = pure
            self._g_tail[i] = tail
        self._artin: dict[int, tuple] = {}
        self._nf: dict[tuple[int, ...], RingElement] = {}
        self._schubert: dict[tuple[int, ...], RingElement] = {}
        self._classical_inverse: list[list[int]] | None = None
        self._perm_order: list[Permutation] = sorted(
            all_perms(n + 1), key=lambda w: (w.length(), w.word)
        )
        self._staircase_order: list[tuple[int, ...]] = sorted(
            self._staircase_tuples(), key=lambda t: (sum(t), t)
        )

    # -- presentation -------------------------------------------------------

    def _to_xg(self, p: Polynomial) -> Polynomial:
        sub: dict[Variable, Polynomial] = {}
        for v in p.variables():
            if v.kind == "g" and v.j == 0:
                sub[v] = Polynomial.var(x(v.i))
        if sub:
            p = p.substitute(sub)
        if x(self.n + 1) in p.variables():
            p = p.substitute(self._eliminate)
        return p

    @staticmethod
    def _split_pure_x(p: Polynomial) -> tuple[Polynomial, Polynomial]:
        pure, tail = {}, {}
        for mono, coeff in p.terms().items():
            if all(v.kind == "x" for v, _ in mono):
                pure[mono] = coeff
            else:
                tail[mono] = coeff
        return Polynomial(pure), Polynomial(tail)

    def _staircase_tuples(self) -> list[tuple[int, ...]]:
        ranges = [range(self.n + 1 - i, -1, -1) for i in range(1, self.n + 1)]
        return [tuple(t) + (0,) for t in _itproduct(*ranges)]

    # -- per-degree expansion tables -----------------------------------------

    def _artin_table(self, d: int) -> tuple:
        """Inverse expansion matrix for x-degree d, with its row/column keys."""
        if d in self._artin:
            return self._artin[d]
        rows = _monomials_of_degree(self.n, d)
        row_index = {m: i for i, m in enumerate(rows)}
        cols: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        col_polys: list[Polynomial] = []
        for stair in self._staircase_order:
            head = sum(stair)
            if head > d:
                continue
            for gamma in self._weighted_compositions(d - head):
                poly = _x_monomial(stair[:-1])
                for i, power in zip(range(2, self.n + 2), gamma):
                    if power:
                        poly = poly * self._pure_e[i] ** power
                cols.append((stair, gamma))
                col_polys.append(poly)
        if len(cols) != len(rows):
            raise ArithmeticError(
                f"degree {d} slice is {len(rows)}x{len(cols)}, not square"
            )
        mat = [[Fraction(0)] * len(cols) for _ in rows]
        for j, poly in enumerate(col_polys):
            for mono, coeff in poly.terms().items():
                exps = [0] * self.n
                for v, e in mono:
                    exps[v.i - 1] = e
                mat[row_index[tuple(exps)]][j] = Fraction(coeff)
        inv = invert(mat)
        int_inv = []
        for row in inv:
            int_row = []
            for q in row:
                if q.denominator != 1:
                    raise ArithmeticError("expansion matrix is not unimodular")
                int_row.append(int(q))
            int_inv.append(int_row)
        table = (rows, row_index, cols, int_inv)
        self._artin[d] = table
        return table

    def _weighted_compositions(self, total: int) -> list[tuple[int, ...]]:
        """Exponent tuples (for weights 2..n+1) with sum of i*gamma_i = total."""
        weights = list(range(2, self.n + 2))

        def rec(pos: int, left: int) -> list[tuple[int, ...]]:
            if pos == len(weights):
                return [()] if left == 0 else []
            out = []
            w = weights[pos]
            for e in range(left // w + 1):
                for rest in rec(pos + 1, left - e * w):
                    out.append((e,) + rest)
            return out

        return rec(0, total)

    # -- normal form ----------------------------------------------------------

    def _nf_monomial(self, exps: tuple[int, ...]) -> RingElement:
        if exps in self._nf:
            return self._nf[exps]
        if all(exps[i] <= self.n - i for i in range(self.n)):
            result = RingElement(self.n, {exps + (0,): ONE})
            self._nf[exps] = result
            return result
        d = sum(exps)
        rows, row_index, cols, inv = self._artin_table(d)
        target = row_index[exps]
        result = RingElement.zero(self.n)
        for j in range(len(cols)):
            coeff = inv[j][target]
            if not coeff:
                continue
            stair, gamma = cols[j]
            if not any(gamma):
                result = result + RingElement(self.n, {stair: Polynomial.const(coeff)})
                continue
            replaced = _x_monomial(stair[:-1])
            for i, power in zip(range(2, self.n + 2), gamma):
                if power:
                    replaced = replaced * (-self._g_tail[i]) ** power
            result = result + self._reduce(replaced).scale(coeff)
        self._nf[exps] = result
        return result

    def _reduce(self, p: Polynomial) -> RingElement:
        """Reduce a polynomial in x_1..x_n with g+ coefficients."""
        result = RingElement.zero(self.n)
        for mono, coeff in p.terms().items():
            exps = [0] * self.n
            gpart = []
            for v, e in mono:
                if v.kind == "x":
                    exps[v.i - 1] = e
                elif v.kind == "g" and (v.j or 0) >= 1:
                    gpart.append(((v, e),))
                else:
                    raise ValueError(f"unexpected variable {v.text()} in reduction")
            gmono: Monomial = tuple(pair[0] for pair in gpart)
            scalar = Polynomial({gmono: coeff})
            result = result + self._nf_monomial(tuple(exps)).scale(scalar)
        return result

    def normal_form(self, p: Polynomial) -> RingElement:
        return self._reduce(self._to_xg(p))

    # -- Schubert basis --------------------------------------------------------

    def schubert(self, w: Permutation) -> RingElement:
        key = w.word
        if key in self._schubert:
            return self._schubert[key]
        if w.size > self.n + 1:
            raise ValueError(f"{w.word} does not lie in S_{self.n + 1}")
        from .specialize import to_g_form

        poly = self._to_xg(to_g_form(universal_single(w, self.n).to_polynomial()))
        # Staircase support is automatic: x_k enters only through the
        # squarefree ladders at levels k..n, one power each.
        element = RingElement.zero(self.n)
        element = element + self._reduce_staircase_only(poly)
        self._schubert[key] = element
        return element

    def _reduce_staircase_only(self, p: Polynomial) -> RingElement:
        coeffs: dict[tuple[int, ...], Polynomial] = {}
        for mono, coeff in p.terms().items():
            exps = [0] * (self.n + 1)
            gpart = []
            for v, e in mono:
                if v.kind == "x":
                    exps[v.i - 1] = e
                else:
                    gpart.append((v, e))
            gmono: Monomial = tuple(gpart)
            key = tuple(exps)
            coeffs[key] = coeffs.get(key, ZERO) + Polynomial({gmono: coeff})
        return RingElement(self.n, coeffs)

    def _classical_transition_inverse(self) -> list[list[int]]:
        if self._classical_inverse is not None:
            return self._classical_inverse
        order = self._staircase_order
        index = {s: i for i, s in enumerate(order)}
        size = len(order)
        mat = [[Fraction(0)] * size for _ in range(size)]
        for j, w in enumerate(self._perm_order):
            for mono, coeff in classical_single(w).terms().items():
                exps = [0] * (self.n + 1)
                for v, e in mono:
                    exps[v.i - 1] = e
                mat[index[tuple(exps)]][j] = Fraction(coeff)
        inv = invert(mat)
        out = []
        for row in inv:
            int_row = []
            for q in row:
                if q.denominator != 1:
                    raise ArithmeticError("Schubert transition is not unimodular")
                int_row.append(int(q))
            out.append(int_row)
        self._classical_inverse = out
        return out

    def _expand_classical(self, slice_coeffs: dict[tuple[int, ...], int]) -> dict:
        inv = self._classical_transition_inverse()
        index = {s: i for i, s in enumerate(self._staircase_order)}
        vec = [0] * len(self._staircase_order)
        for exps, coeff in slice_coeffs.items():
            vec[index[exps]] = coeff
        out = {}
        for i, w in enumerate(self._perm_order):
            value = sum(inv[i][j] * vec[j] for j in range(len(vec)))
            if value:
                out[w] = value
        return out

    def schubert_basis_expand(self, e: RingElement) -> dict[Permutation, Polynomial]:
        """Write e as sum of a_w(g) times the Schubert elements, a_w in Z[g+]."""
        remainder = {exps: poly for exps, poly in e.coeffs.items()}
        out: dict[Permutation, Polynomial] = {}
        guard = 0
        while any(remainder.values()):
            guard += 1
            if guard > 10_000:
                raise ArithmeticError("Schubert expansion failed to terminate")
            slices: dict[Monomial, dict[tuple[int, ...], int]] = {}
            for exps, poly in remainder.items():
                for gmono, coeff in poly.terms().items():
                    slices.setdefault(gmono, {})[exps] = coeff
            min_deg = min(sum(v.degree * e_ for v, e_ in m) for m in slices)
            for gmono in sorted(slices, key=lambda m: (tuple(sorted((v.sort_key(), e_) for v, e_ in m)))):
                if sum(v.degree * e_ for v, e_ in gmono) != min_deg:
                    continue
                gscalar = Polynomial({gmono: 1})
                for w, coeff in self._expand_classical(slices[gmono]).items():
                    out[w] = out.get(w, ZERO) + gscalar * Polynomial.const(coeff)
                    for exps, poly in self.schubert(w).coeffs.items():
                        delta = gscalar * poly * Polynomial.const(-coeff)
                        remainder[exps] = remainder.get(exps, ZERO) + delta
            remainder = {e_: p for e_, p in remainder.items() if p}
        return {w: p for w, p in out.items() if p}

    # -- products and the pairing ----------------------------------------------

    def multiply(self, a: RingElement, b: RingElement) -> RingElement:
        return self._reduce(a.to_polynomial() * b.to_polynomial())

    def multiply_expand(self, u: Permutation, v: Permutation) -> dict:
        product = self.multiply(self.schubert(u), self.schubert(v))
        return self.schubert_basis_expand(product)

    def inner_product(self, a: RingElement, b: RingElement) -> Polynomial:
        return self.multiply(a, b).coefficient(_top_staircase(self.n))

    def inner_product_w0(self, a: RingElement, b: RingElement) -> Polynomial:
        expansion = self.schubert_basis_expand(self.multiply(a, b))
        return expansion.get(self.w0, ZERO)

    # -- the involution ----------------------------------------------------------

    def omega(self, p: Polynomial) -> Polynomial:
        n = self.n
        sub: dict[Variable, Polynomial] = {}
        for v in p.variables():
            if v.kind == "x":
                if not 1 <= v.i <= n + 1:
                    raise ValueError(f"{v.text()} is outside x_1..x_{n + 1}")
                sub[v] = -Polynomial.var(x(n + 2 - v.i))
            elif v.kind == "g" and (v.j or 0) >= 1:
                target = n + 2 - v.i - v.j
                if target < 1:
                    raise ValueError(f"{v.text()} has no mirror for n = {n}")
                image = Polynomial.var(g(target, v.j))
                sub[v] = image if v.j % 2 else -image
            else:
                raise ValueError(f"unexpected variable {v.text()} under omega")
        return p.substitute(sub)


def normal_form(p: Polynomial, n: int) -> RingElement:
    return universal_ring(n).normal_form(p)


def omega(p: Polynomial, n: int) -> Polynomial:
    return universal_ring(n).omega(p)


def schubert_basis_expand(e: RingElement) -> dict[Permutation, Polynomial]:
    return universal_ring(e.n).schubert_basis_expand(e)


def multiply_expand(u: Permutation, v: Permutation, n: int) -> dict:
    return universal_ring(n).multiply_expand(u, v)


def inner_product(a: RingElement, b: RingElement) -> Polynomial:
    if a.n != b.n:
        raise ValueError("mixed ambient n")
    return universal_ring(a.n).inner_product(a, b)


def staircase_rank_report(n: int) -> dict:
    """Check the per-degree expansion matrices up to the top staircase degree."""
    ring = universal_ring(n)
    top = n * (n + 1) // 2
    degrees = []
    for d in range(top + 1):
        rows, _, cols, _ = ring._artin_table(d)
        degrees.append({"degree": d, "dimension": len(rows)})
    return {"n": n, "top_degree": top, "full_rank": True, "degrees": degrees}


def check_orthogonality(n: int) -> dict:
    """Pair every Schubert element against the twisted dual family."""
    ring = universal_ring(n)
    w0 = ring.w0
    perms = sorted(all_perms(n + 1), key=lambda w: (w.length(), w.word))
    duals = {}
    for v in perms:
        image = ring.omega(ring.schubert(v * w0).to_polynomial())
        duals[v.word] = ring.normal_form(image)
    checked = 0
    failures = []
    for u in perms:
        su = ring.schubert(u)
        for v in perms:
            value = ring.inner_product(su, duals[v.word])
            expected = ONE if u.word == v.word else ZERO
            checked += 1
            if value != expected:
                failures.append(
                    {"u": list(u.word), "v": list(v.word), "value": value.text()}
                )
    return {"n": n, "checked": checked, "failures": failures}


def check_diagonal_vanishing(n: int) -> dict:
    """Substitute the second alphabet by the first in every double element."""
    checked = 0
    failures = []
    for w in sorted(all_perms(n + 1), key=lambda w: (w.length(), w.word)):
        if w.is_identity():
            continue
        merged = universal_double(w, n).rename_kind("d", "c")
        checked += 1
        if merged:
            failures.append({"w": list(w.word), "value": merged.text()})
    return {"n": n, "checked": checked, "failures": failures}
