"""Schubert polynomials: classical, and the universal forms in Chern classes.

Four flavours are constructed here, all exact:

  * classical_single(w)       in Z[x_1, x_2, ...]
  * classical_double(w)       in Z[x; y]
  * universal_single(w, n)    an integer combination of bounded codes
                              (i_1, ..., i_n), i_k <= k, standing for the
                              products c_{i_1}(1) ... c_{i_n}(n)
  * universal_cy(w, n) /      mixed forms with a second alphabet, in
    universal_double(w, n)    Z[c; y] and Z[c; d] respectively

The classical polynomials come from the divided-difference ladder that
starts at the dominant staircase monomial.  The universal single form is
obtained by rewriting the classical polynomial in the triangular basis
of products e_{i_1}(x_1) e_{i_2}(x_1,x_2) ... and renaming e_i of the
first k variables to c_i(k); an independent route applies the code-level
ladder operator directly and must agree.

Codes are converted to and from permutations via the count
code_tail(w)_k = #{j <= k : w(j) > w(k+1)}, which is also the key to
expanding an arbitrary code combination in the Schubert basis: the code
of w is the lexicographically largest code in the expansion of w's
polynomial and carries coefficient 1, so leading-term peeling
terminates.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _itproduct

from .exactla import invert
from .permutations import Permutation
from .polyring import (
    ONE,
    ZERO,
    Polynomial,
    cpoly,
    divide_by_difference,
    dpoly,
    elementary_sym,
    x,
    y,
)

_classical_single_cache: dict[tuple[int, ...], Polynomial] = {}
_classical_double_cache: dict[tuple[int, ...], Polynomial] = {}
_universal_single_cache: dict[tuple[tuple[int, ...], int], "MElement"] = {}
_universal_inductive_cache: dict[tuple[tuple[int, ...], int], "MElement"] = {}
_universal_cy_cache: dict[tuple[tuple[int, ...], int], Polynomial] = {}
_universal_double_cache: dict[tuple[tuple[int, ...], int], Polynomial] = {}
_e_basis_cache: dict[tuple[int, int], tuple] = {}


def clear_caches() -> None:
    for cache in (
        _classical_single_cache,
        _classical_double_cache,
        _universal_single_cache,
        _universal_inductive_cache,
        _universal_cy_cache,
        _universal_double_cache,
        _e_basis_cache,
    ):
        cache.clear()


# -- divided differences ---------------------------------------------------

def divided_difference(p: Polynomial, k: int, kind: str = "x") -> Polynomial:
    """(p - s_k p) / (v_k - v_{k+1}) in the chosen degree-1 family."""
    mk = x if kind == "x" else y
    a, b = mk(k), mk(k + 1)
    swapped = p.substitute({a: Polynomial.var(b), b: Polynomial.var(a)})
    return divide_by_difference(p - swapped, a, b)


# -- classical polynomials -------------------------------------------------

def classical_single(w: Permutation) -> Polynomial:
    """Schubert polynomial of w in the x variables."""
    key = w.word
    hit = _classical_single_cache.get(key)
    if hit is not None:
        return hit
    if w.is_identity():
        result = ONE
    else:
        m = w.size
        top = Permutation.longest(m)
        if w == top:
            result = ONE
            for i in range(1, m):
                result = result * (Polynomial.var(x(i)) ** (m - i))
        else:
            k = next(k for k in range(1, m) if w(k) < w(k + 1))
            result = divided_difference(classical_single(w * Permutation.s(k)), k)
    _classical_single_cache[key] = result
    return result


def classical_double(w: Permutation) -> Polynomial:
    """Double Schubert polynomial of w in x and y."""
    key = w.word
    hit = _classical_double_cache.get(key)
    if hit is not None:
        return hit
    if w.is_identity():
        result = ONE
    else:
        m = w.size
        top = Permutation.longest(m)
        if w == top:
            result = ONE
            for i in range(1, m):
                for j in range(1, m + 1 - i):
                    result = result * (Polynomial.var(x(i)) - Polynomial.var(y(j)))
        else:
            k = next(k for k in range(1, m) if w(k) < w(k + 1))
            result = divided_difference(classical_double(w * Permutation.s(k)), k)
    _classical_double_cache[key] = result
    return result


# -- code combinations -------------------------------------------------------

class MElement:
    """Integer combination of bounded codes of a fixed length n.

    A code (i_1, ..., i_n) with 0 <= i_k <= k stands for the product
    c_{i_1}(1) c_{i_2}(2) ... c_{i_n}(n), with c_0(k) read as 1.  The
    class is purely additive; products belong to the polynomial side.
    """

    __slots__ = ("codes", "n")

    def __init__(self, codes: dict[tuple[int, ...], int], n: int):
        clean: dict[tuple[int, ...], int] = {}
        for code, coeff in codes.items():
            if len(code) != n:
                raise ValueError(f"code {code} does not have length {n}")
            for k, ik in enumerate(code, start=1):
                if not 0 <= ik <= k:
                    raise ValueError(f"code {code} breaks the bound i_{k} <= {k}")
            if coeff:
                clean[code] = coeff
        self.codes = clean
        self.n = n

    @classmethod
    def zero(cls, n: int) -> "MElement":
        return cls({}, n)

    @classmethod
    def single_code(cls, code: tuple[int, ...]) -> "MElement":
        return cls({code: 1}, len(code))

    def pad(self, n: int) -> "MElement":
        if n < self.n:
            raise ValueError("cannot shrink a code combination")
        ext = (0,) * (n - self.n)
        return MElement({code + ext: v for code, v in self.codes.items()}, n)

    def __add__(self, other: "MElement") -> "MElement":
        if self.n != other.n:
            raise ValueError("length mismatch")
        acc = dict(self.codes)
        for code, v in other.codes.items():
            acc[code] = acc.get(code, 0) + v
        return MElement(acc, self.n)

    def __sub__(self, other: "MElement") -> "MElement":
        if self.n != other.n:
            raise ValueError("length mismatch")
        acc = dict(self.codes)
        for code, v in other.codes.items():
            acc[code] = acc.get(code, 0) - v
        return MElement(acc, self.n)

    def __rmul__(self, scalar: int) -> "MElement":
        return MElement({code: scalar * v for code, v in self.codes.items()}, self.n)

    def __neg__(self) -> "MElement":
        return MElement({code: -v for code, v in self.codes.items()}, self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MElement)
            and self.n == other.n
            and self.codes == other.codes
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.codes.items())))

    def __bool__(self) -> bool:
        return bool(self.codes)

    def partial(self, k: int) -> "MElement":
        """The ladder operator indexed k, acting on code entries k-1 and k.

        With (a, b) the entries at positions k-1 and k (a = 0 when
        k = 1), the image of [a, b] is

            sum_{i>=0} [a+i, b-1-i] - sum_{i>=1} [b-1-i, a+i]   if a >= b-1,
            sum_{i>=0} [b-1+i, a-i] - sum_{i>=1} [a-i, b-1+i]   if a <= b-2,

        where a pair leaves the grid (entry at k-1 outside 0..k-1 or at
        k outside 0..k) it is dropped.
        """
        if not 1 <= k <= self.n:
            raise ValueError(f"operator index {k} outside 1..{self.n}")
        out: dict[tuple[int, ...], int] = {}
        for code, coeff in self.codes.items():
            a = code[k - 2] if k >= 2 else 0
            b = code[k - 1]
            pairs: list[tuple[int, int, int]] = []
            if a >= b - 1:
                for i in range(0, b):
                    pairs.append((a + i, b - 1 - i, 1))
                for i in range(1, b):
                    pairs.append((b - 1 - i, a + i, -1))
            else:
                for i in range(0, a + 1):
                    pairs.append((b - 1 + i, a - i, 1))
                for i in range(1, a + 1):
                    pairs.append((a - i, b - 1 + i, -1))
            for p_, q_, s_ in pairs:
                if p_ < 0 or q_ < 0 or p_ > k - 1 or q_ > k:
                    continue
                if k >= 2:
                    nc = code[: k - 2] + (p_, q_) + code[k:]
                else:
                    if p_ != 0:
                        continue
                    nc = (q_,) + code[1:]
                out[nc] = out.get(nc, 0) + s_ * coeff
        return MElement(out, self.n)

    def to_polynomial(self, kind: str = "c") -> Polynomial:
        make = cpoly if kind == "c" else dpoly
        total = ZERO
        for code, coeff in self.codes.items():
            term = Polynomial.const(coeff)
            for alpha, i in enumerate(code, start=1):
                if i:
                    term = term * make(i, alpha)
            total = total + term
        return total

    @classmethod
    def from_polynomial(cls, p: Polynomial, n: int, kind: str = "c") -> "MElement":
        codes: dict[tuple[int, ...], int] = {}
        for mono, coeff in p.terms().items():
            code = [0] * n
            for v, e in mono:
                if v.kind != kind or e != 1:
                    raise ValueError(f"monomial {mono} is not a plain code product")
                if v.j > n or code[v.j - 1]:
                    raise ValueError(f"monomial {mono} is not a plain code product")
                code[v.j - 1] = v.i
            key = tuple(code)
            codes[key] = codes.get(key, 0) + coeff
        return cls(codes, n)

    def text(self) -> str:
        if not self.codes:
            return "0"
        chunks: list[str] = []
        for code in sorted(self.codes, reverse=True):
            coeff = self.codes[code]
            body = "[" + ",".join(map(str, code)) + "]"
            mag = abs(coeff)
            piece = body if mag == 1 else f"{mag}*{body}"
            if not chunks:
                chunks.append(piece if coeff > 0 else "-" + piece)
            else:
                chunks.append((" + " if coeff > 0 else " - ") + piece)
        return "".join(chunks)

    def __repr__(self) -> str:
        return self.text()


# -- elementary-product basis change ----------------------------------------

def _codes_of_degree(n: int, d: int) -> list[tuple[int, ...]]:
    out = [
        code
        for code in _itproduct(*(range(k + 1) for k in range(1, n + 1)))
        if sum(code) == d
    ]
    out.sort()
    return out


def _staircase_exponents(n: int, d: int) -> list[tuple[int, ...]]:
    out = [
        j
        for j in _itproduct(*(range(n + 2 - k) for k in range(1, n + 1)))
        if sum(j) == d
    ]
    out.sort()
    return out


def _e_basis(n: int, d: int):
    """Codes, staircase exponents and the integer inverse transition at degree d."""
    key = (n, d)
    hit = _e_basis_cache.get(key)
    if hit is not None:
        return hit
    codes = _codes_of_degree(n, d)
    monos = _staircase_exponents(n, d)
    if len(codes) != len(monos):
        raise RuntimeError(f"basis size mismatch at n={n}, d={d}")
    index = {j: r for r, j in enumerate(monos)}
    mat = [[0] * len(codes) for _ in monos]
    for col, code in enumerate(codes):
        prod = ONE
        for alpha, i in enumerate(code, start=1):
            if i:
                prod = prod * elementary_sym(i, alpha)
        for mono, coeff in prod.terms().items():
            exps = [0] * n
            for v, e in mono:
                exps[v.i - 1] = e
            mat[index[tuple(exps)]][col] = coeff
    inv = invert(mat)
    for row in inv:
        for entry in row:
            if entry.denominator != 1:
                raise RuntimeError(f"transition at n={n}, d={d} is not unimodular")
    inv_int = [[int(entry) for entry in row] for row in inv]
    result = (codes, monos, inv_int)
    _e_basis_cache[key] = result
    return result


def e_expand(p: Polynomial, n: int) -> MElement:
    """Write p in the basis of products e_{i_1}(x_1)...e_{i_n}(x_1..x_n).

    p must be an integer polynomial in x_1..x_n supported on exponents
    j_k <= n+1-k; the expansion is then unique with integer
    coefficients, returned as the code combination.
    """
    for v in p.variables():
        if v.kind != "x" or v.i > n:
            raise ValueError(f"e_expand needs a polynomial in x_1..x_{n}")
    out: dict[tuple[int, ...], int] = {}
    for deg, part in p.homogeneous_parts().items():
        codes, monos, inv = _e_basis(n, deg)
        index = {j: r for r, j in enumerate(monos)}
        b = [0] * len(monos)
        for mono, coeff in part.terms().items():
            exps = [0] * n
            for v, e in mono:
                exps[v.i - 1] = e
            row = index.get(tuple(exps))
            if row is None:
                raise ValueError(f"monomial {mono} lies outside the staircase for n={n}")
            b[row] = coeff
        for col, code in enumerate(codes):
            a = sum(inv[col][r] * b[r] for r in range(len(b)))
            if a:
                out[code] = a
    return MElement(out, n)


# -- universal single form ---------------------------------------------------

def universal_single(w: Permutation, n: int | None = None) -> MElement:
    """The code combination of w, via the elementary-product rewrite."""
    if n is None:
        n = max(w.size - 1, 1)
    key = (w.word, n)
    hit = _universal_single_cache.get(key)
    if hit is not None:
        return hit
    if w.size > n + 1:
        raise ValueError(f"{w} does not fit in S_{n + 1}")
    result = e_expand(classical_single(w), n)
    _universal_single_cache[key] = result
    return result


def universal_single_inductive(w: Permutation, n: int | None = None) -> MElement:
    """The same combination, built by the ladder operator from the top code."""
    if n is None:
        n = max(w.size - 1, 1)
    key = (w.word, n)
    hit = _universal_inductive_cache.get(key)
    if hit is not None:
        return hit
    if w.size > n + 1:
        raise ValueError(f"{w} does not fit in S_{n + 1}")
    top = Permutation.longest(n + 1)
    if w == top:
        result = MElement.single_code(tuple(range(1, n + 1)))
    else:
        k = next(k for k in range(1, n + 1) if w(k) < w(k + 1))
        result = universal_single_inductive(w * Permutation.s(k), n).partial(k)
    _universal_inductive_cache[key] = result
    return result


# -- universal double forms ---------------------------------------------------

def universal_cy(w: Permutation, n: int | None = None) -> Polynomial:
    """The mixed form in c and y, from the dominant product by y-ladders.

    The top element of S_{n+1} gets
    prod_{i=1}^{n} sum_{j=0}^{i} c_{i-j}(i) (-y_{n+1-i})^j, and each
    step down multiplies by -1 and applies the y divided difference at
    a position k whose value k sits left of k+1.
    """
    if n is None:
        n = max(w.size - 1, 1)
    key = (w.word, n)
    hit = _universal_cy_cache.get(key)
    if hit is not None:
        return hit
    if w.size > n + 1:
        raise ValueError(f"{w} does not fit in S_{n + 1}")
    top = Permutation.longest(n + 1)
    if w == top:
        result = ONE
        for i in range(1, n + 1):
            factor = ZERO
            yv = Polynomial.var(y(n + 1 - i))
            for j in range(0, i + 1):
                factor = factor + cpoly(i - j, i) * ((-1) ** j) * (yv ** j)
            result = result * factor
    else:
        inv = w.inverse()
        k = next(k for k in range(1, n + 1) if inv(k) < inv(k + 1))
        result = -divided_difference(universal_cy(Permutation.s(k) * w, n), k, kind="y")
    _universal_cy_cache[key] = result
    return result


def universal_double(w: Permutation, n: int | None = None) -> Polynomial:
    """The mixed form in c and d: sum of (-1)^{l(v)} S_u(c) S_v(d) over
    factorizations u(i) = v(w(i)) with l(u) = l(w) - l(v)."""
    if n is None:
        n = max(w.size - 1, 1)
    key = (w.word, n)
    hit = _universal_double_cache.get(key)
    if hit is not None:
        return hit
    if w.size > n + 1:
        raise ValueError(f"{w} does not fit in S_{n + 1}")
    lw = w.length()
    total = ZERO
    from .permutations import all_perms

    for v in all_perms(n + 1):
        lv = v.length()
        if lv > lw:
            continue
        u = v * w
        if u.length() != lw - lv:
            continue
        term = (
            universal_single(u, n).to_polynomial("c")
            * universal_single(v, n).to_polynomial("d")
        )
        total = total + (-1) ** lv * term
    _universal_double_cache[key] = total
    return total


def d_to_y(p: Polynomial) -> Polynomial:
    """Substitute every d_i(j) by the elementary symmetric e_i(y_1..y_j)."""
    mapping = {
        v: elementary_sym(v.i, v.j, kind="y")
        for v in p.variables()
        if v.kind == "d"
    }
    return p.substitute(mapping)


# -- Schubert-basis expansion -------------------------------------------------

def schubert_expand_M(el: MElement) -> dict[Permutation, int]:
    """Expand a code combination in the basis of single universal forms.

    Peels the lexicographically largest code; that code belongs to a
    unique permutation and carries coefficient 1 in that permutation's
    combination, so each step strictly lowers the leading code.
    """
    rest = dict(el.codes)
    out: dict[Permutation, int] = {}
    while rest:
        code = max(rest)
        coeff = rest.pop(code)
        w = Permutation.from_code_tail(code)
        out[w] = coeff
        s = universal_single(w, el.n)
        assert s.codes.get(code) == 1, "leading code is not unital"
        for cd, cf in s.codes.items():
            if cd == code:
                continue
            assert cd < code, "expansion produced a larger code"
            v = rest.get(cd, 0) - coeff * cf
            if v:
                rest[cd] = v
            elif cd in rest:
                del rest[cd]
    return out


def schubert_expand_polynomial(p: Polynomial, n: int, kind: str = "c") -> dict[Permutation, int]:
    """Expand a polynomial in plain code products into the Schubert basis."""
    return schubert_expand_M(MElement.from_polynomial(p, n, kind))
