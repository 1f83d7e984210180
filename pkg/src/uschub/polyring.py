"""Exact sparse polynomial arithmetic in tagged variable families.

All coefficients are arbitrary-precision Python ints, so every operation
is exact.  Variables come from seven indexed families:

    c_i(j), d_i(j)    1 <= i <= j, graded degree i
    g_i[j], h_i[j]    i >= 1, j >= 0, graded degree j + 1
    x_i, y_i          i >= 1, graded degree 1
    q_i               i >= 1, caller-assigned degree (2 by default)

The conventions c_0(j) = 1 and c_i(j) = 0 for i < 0 or i > j are applied
by the expression-level constructors :func:`cpoly` and friends; a raw
:class:`Variable` always has indices inside the legal range.

A monomial is a sorted tuple of (variable, exponent) pairs and a
polynomial is a dict from monomials to nonzero ints.  Polynomials are
treated as immutable values.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

KINDS = "cdghxyq"
_KIND_RANK = {k: r for r, k in enumerate(KINDS)}
_PAIRED = frozenset("cdgh")


class ExactDivisionError(ArithmeticError):
    """Raised when a supposedly exact polynomial division leaves a remainder."""


@dataclass(frozen=True)
class Variable:
    """One tagged symbol.  Ordering is kind rank, then indices, then degree."""

    kind: str
    i: int
    j: int | None
    degree: int

    def sort_key(self) -> tuple[int, int, int, int]:
        return (_KIND_RANK[self.kind], self.i, -1 if self.j is None else self.j, self.degree)

    def __lt__(self, other: "Variable") -> bool:
        return self.sort_key() < other.sort_key()

    def text(self) -> str:
        if self.kind in ("c", "d"):
            return f"{self.kind}{self.i}({self.j})"
        if self.kind in ("g", "h"):
            return f"{self.kind}{self.i}[{self.j}]"
        return f"{self.kind}{self.i}"

    def latex(self) -> str:
        if self.kind in ("c", "d"):
            return f"{self.kind}_{{{self.i}}}({self.j})"
        if self.kind in ("g", "h"):
            return f"{self.kind}_{{{self.i}}}[{self.j}]"
        return f"{self.kind}_{{{self.i}}}"

    def __repr__(self) -> str:
        return self.text()


def c(i: int, j: int) -> Variable:
    if not 1 <= i <= j:
        raise ValueError(f"c-variable needs 1 <= i <= j, got c{i}({j})")
    return Variable("c", i, j, i)


def d(i: int, j: int) -> Variable:
    if not 1 <= i <= j:
        raise ValueError(f"d-variable needs 1 <= i <= j, got d{i}({j})")
    return Variable("d", i, j, i)


def g(i: int, j: int) -> Variable:
    if i < 1 or j < 0:
        raise ValueError(f"g-variable needs i >= 1, j >= 0, got g{i}[{j}]")
    return Variable("g", i, j, j + 1)


def h(i: int, j: int) -> Variable:
    if i < 1 or j < 0:
        raise ValueError(f"h-variable needs i >= 1, j >= 0, got h{i}[{j}]")
    return Variable("h", i, j, j + 1)


def x(i: int) -> Variable:
    if i < 1:
        raise ValueError(f"x-variable needs i >= 1, got x{i}")
    return Variable("x", i, None, 1)


def y(i: int) -> Variable:
    if i < 1:
        raise ValueError(f"y-variable needs i >= 1, got y{i}")
    return Variable("y", i, None, 1)


def q(i: int, degree: int = 2) -> Variable:
    if i < 1 or degree < 1:
        raise ValueError(f"q-variable needs i >= 1 and a positive degree, got q{i} deg {degree}")
    return Variable("q", i, None, degree)


Monomial = tuple[tuple[Variable, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc: dict[Variable, int] = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items(), key=lambda p: p[0].sort_key()))


def _mono_degree(m: Monomial) -> int:
    return sum(v.degree * e for v, e in m)


def _mono_key(m: Monomial):
    return (_mono_degree(m), tuple((v.sort_key(), e) for v, e in m))


class Polynomial:
    """Immutable sparse polynomial with int coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({(): 1})

    @classmethod
    def const(cls, n: int) -> "Polynomial":
        return cls({(): n})

    @classmethod
    def var(cls, v: Variable) -> "Polynomial":
        return cls({((v, 1),): 1})

    # -- basic queries -------------------------------------------------

    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def variables(self) -> set[Variable]:
        return {v for m in self._terms for v, _ in m}

    def degree(self) -> int:
        """Graded degree; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {_mono_degree(m) for m in self._terms}
        return len(degs) <= 1

    def homogeneous_parts(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict[Monomial, int]] = {}
        for m, co in self._terms.items():
            parts.setdefault(_mono_degree(m), {})[m] = co
        return {deg: Polynomial(t) for deg, t in sorted(parts.items())}

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.const(other)
        return None

    def __add__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, co in o._terms.items():
            acc[m] = acc.get(m, 0) + co
        return Polynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -co for m, co in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, co in o._terms.items():
            acc[m] = acc.get(m, 0) - co
        return Polynomial(acc)

    def __rsub__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial({m: co * other for m, co in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial()
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers are not defined")
        result = Polynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- structural operations ------------------------------------------

    def substitute(self, mapping: dict[Variable, "Polynomial | int"]) -> "Polynomial":
        """Ring homomorphism sending each mapped variable to its image.

        Unmapped variables pass through unchanged.
        """
        imgs = {v: (p if isinstance(p, Polynomial) else Polynomial.const(p))
                for v, p in mapping.items()}
        out = Polynomial()
        for m, co in self._terms.items():
            kept: list[tuple[Variable, int]] = []
            factor = Polynomial.const(co)
            for v, e in m:
                img = imgs.get(v)
                if img is None:
                    kept.append((v, e))
                else:
                    factor = factor * (img ** e)
                    if not factor:
                        break
            if not factor:
                continue
            base = Polynomial({tuple(kept): 1})
            out = out + base * factor
        return out

    def rename_kind(self, src: str, dst: str) -> "Polynomial":
        """Send one paired family to another, e.g. every c_i(j) -> d_i(j)."""
        if src not in _PAIRED or dst not in _PAIRED:
            raise ValueError("rename_kind only applies to the c/d/g/h families")
        acc: dict[Monomial, int] = {}
        for m, co in self._terms.items():
            nm = tuple(sorted(
                ((Variable(dst, v.i, v.j, v.degree) if v.kind == src else v, e)
                 for v, e in m),
                key=lambda p: p[0].sort_key(),
            ))
            acc[nm] = acc.get(nm, 0) + co
        return Polynomial(acc)

    def swap_kinds(self, a: str, b: str) -> "Polynomial":
        """Exchange two paired families in one pass, e.g. c <-> d."""
        if a not in _PAIRED or b not in _PAIRED:
            raise ValueError("swap_kinds only applies to the c/d/g/h families")
        trade = {a: b, b: a}
        acc: dict[Monomial, int] = {}
        for m, co in self._terms.items():
            nm = tuple(sorted(
                ((Variable(trade.get(v.kind, v.kind), v.i, v.j, v.degree), e)
                 for v, e in m),
                key=lambda p: p[0].sort_key(),
            ))
            acc[nm] = acc.get(nm, 0) + co
        return Polynomial(acc)

    def coefficient_of(self, mono: Monomial) -> "Polynomial":
        """Exact coefficient of ``mono`` viewed as a polynomial in its variables.

        Terms must match the exponent of every variable of ``mono``
        exactly; all other variables ride along symbolically.
        """
        want = dict(mono)
        picked = set(want)
        acc: dict[Monomial, int] = {}
        for m, co in self._terms.items():
            proj = {v: e for v, e in m if v in picked}
            if proj != want:
                continue
            rest = tuple((v, e) for v, e in m if v not in picked)
            acc[rest] = acc.get(rest, 0) + co
        return Polynomial(acc)

    def coefficients_by(self, kinds: str) -> dict[Monomial, "Polynomial"]:
        """Split into {monomial in the given kinds: cofactor polynomial}."""
        out: dict[Monomial, dict[Monomial, int]] = {}
        for m, co in self._terms.items():
            part = tuple((v, e) for v, e in m if v.kind in kinds)
            rest = tuple((v, e) for v, e in m if v.kind not in kinds)
            out.setdefault(part, {})[rest] = co
        return {part: Polynomial(t) for part, t in out.items()}

    # -- printing and parsing -------------------------------------------

    def text(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for m, co in self.sorted_terms():
            body = "*".join(v.text() + (f"^{e}" if e > 1 else "") for v, e in m)
            mag = abs(co)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if not chunks:
                chunks.append(piece if co > 0 else "-" + piece)
            else:
                chunks.append((" + " if co > 0 else " - ") + piece)
        return "".join(chunks)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for m, co in self.sorted_terms():
            body = " ".join(v.latex() + (f"^{{{e}}}" if e > 1 else "") for v, e in m)
            mag = abs(co)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag} {body}"
            if not chunks:
                chunks.append(piece if co > 0 else "-" + piece)
            else:
                chunks.append((" + " if co > 0 else " - ") + piece)
        return "".join(chunks)

    def to_json(self) -> dict:
        terms = []
        for m, co in self.sorted_terms():
            vars_out = []
            for v, e in m:
                entry: dict = {"kind": v.kind, "i": v.i}
                if v.j is not None:
                    entry["j"] = v.j
                if v.kind == "q":
                    entry["degree"] = v.degree
                entry["exp"] = e
                vars_out.append(entry)
            terms.append({"coeff": str(co), "vars": vars_out})
        return {"terms": terms}

    def __repr__(self) -> str:
        return self.text()


ZERO = Polynomial.zero()
ONE = Polynomial.one()


# -- convention-aware expression constructors ----------------------------

def cpoly(i: int, j: int) -> Polynomial:
    """c_i(j) with the conventions c_0 = 1 and out-of-range = 0."""
    if i == 0:
        return ONE
    if i < 0 or i > j:
        return ZERO
    return Polynomial.var(c(i, j))


def dpoly(i: int, j: int) -> Polynomial:
    if i == 0:
        return ONE
    if i < 0 or i > j:
        return ZERO
    return Polynomial.var(d(i, j))


def elementary_sym(i: int, k: int, kind: str = "x") -> Polynomial:
    """e_i over the first k variables of a degree-1 family."""
    if kind not in ("x", "y"):
        raise ValueError("elementary_sym expects the x or y family")
    if i == 0:
        return ONE
    if i < 0 or i > k:
        return ZERO
    mk = x if kind == "x" else y
    acc: dict[Monomial, int] = {}
    for combo in combinations(range(1, k + 1), i):
        m = tuple((mk(idx), 1) for idx in combo)
        acc[m] = 1
    return Polynomial(acc)


def complete_sym(p: int, k: int, offset: int = 0, kind: str = "y") -> Polynomial:
    """h_p over the window of k variables starting after ``offset``."""
    if kind not in ("x", "y"):
        raise ValueError("complete_sym expects the x or y family")
    if p == 0:
        return ONE
    if p < 0 or k <= 0:
        return ZERO
    mk = x if kind == "x" else y
    acc: dict[Monomial, int] = {}
    for combo in combinations_with_replacement(range(offset + 1, offset + k + 1), p):
        counts: dict[int, int] = {}
        for idx in combo:
            counts[idx] = counts.get(idx, 0) + 1
        m = tuple((mk(idx), e) for idx, e in sorted(counts.items()))
        acc[m] = acc.get(m, 0) + 1
    return Polynomial(acc)


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<cd>[cd])(?P<cdi>\d+)\((?P<cdj>\d+)\)"
    r"|(?P<gh>[gh])(?P<ghi>\d+)\[(?P<ghj>\d+)\]"
    r"|(?P<xyq>[xyq])(?P<xyqi>\d+)"
    r"|(?P<num>\d+)"
    r"|(?P<op>[+\-*^])"
    r")"
)


def _tokenize(s: str) -> list:
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m:
            if s[pos:].strip() == "":
                break
            raise ValueError(f"cannot parse polynomial text near {s[pos:pos+12]!r}")
        pos = m.end()
        if m.group("cd"):
            tokens.append(("var", (c if m.group("cd") == "c" else d)(int(m.group("cdi")), int(m.group("cdj")))))
        elif m.group("gh"):
            tokens.append(("var", (g if m.group("gh") == "g" else h)(int(m.group("ghi")), int(m.group("ghj")))))
        elif m.group("xyq"):
            fam = m.group("xyq")
            mk = {"x": x, "y": y, "q": q}[fam]
            tokens.append(("var", mk(int(m.group("xyqi")))))
        elif m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


def parse_text(s: str) -> Polynomial:
    """Inverse of :meth:`Polynomial.text` (q-degrees read as the default)."""
    tokens = _tokenize(s)
    if not tokens:
        raise ValueError("empty polynomial text")
    result = ZERO
    idx = 0
    n = len(tokens)
    while idx < n:
        sign = 1
        while idx < n and tokens[idx] == ("op", "+") or idx < n and tokens[idx] == ("op", "-"):
            if tokens[idx][1] == "-":
                sign = -sign
            idx += 1
        if idx >= n:
            raise ValueError("dangling sign in polynomial text")
        term = Polynomial.const(sign)
        expect_factor = True
        while idx < n:
            kind, val = tokens[idx]
            if kind == "num" and expect_factor:
                term = term * val
                idx += 1
            elif kind == "var" and expect_factor:
                exp = 1
                idx += 1
                if idx + 1 < n and tokens[idx] == ("op", "^") and tokens[idx + 1][0] == "num":
                    exp = tokens[idx + 1][1]
                    idx += 2
                term = term * (Polynomial.var(val) ** exp)
            elif kind == "op" and val == "*":
                idx += 1
                expect_factor = True
                continue
            else:
                break
            expect_factor = False
        result = result + term
    return result


def parse_json(data: dict | str) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_json`."""
    if isinstance(data, str):
        data = json.loads(data)
    acc: dict[Monomial, int] = {}
    for t in data["terms"]:
        coeff = int(t["coeff"])
        pairs: list[tuple[Variable, int]] = []
        for v in t["vars"]:
            kind = v["kind"]
            if kind in ("c", "d"):
                var = (c if kind == "c" else d)(v["i"], v["j"])
            elif kind in ("g", "h"):
                var = (g if kind == "g" else h)(v["i"], v["j"])
            elif kind == "x":
                var = x(v["i"])
            elif kind == "y":
                var = y(v["i"])
            elif kind == "q":
                var = q(v["i"], v.get("degree", 2))
            else:
                raise ValueError(f"unknown variable kind {kind!r}")
            pairs.append((var, v["exp"]))
        m = tuple(sorted(pairs, key=lambda p: p[0].sort_key()))
        acc[m] = acc.get(m, 0) + coeff
    return Polynomial(acc)


# -- exact division by a variable difference -------------------------------

def divide_by_difference(p: Polynomial, a: Variable, b: Variable) -> Polynomial:
    """Exact quotient p / (a - b); raises if the division leaves a remainder.

    Works by synthetic division in ``a``: the coefficients of the
    quotient are built by a Horner sweep, and the final carry must
    vanish.
    """
    by_exp: dict[int, dict[Monomial, int]] = {}
    for m, co in p.terms().items():
        e = 0
        rest: list[tuple[Variable, int]] = []
        for v, ve in m:
            if v == a:
                e = ve
            else:
                rest.append((v, ve))
        by_exp.setdefault(e, {})
        key = tuple(rest)
        by_exp[e][key] = by_exp[e].get(key, 0) + co
    if not by_exp:
        return ZERO
    coeffs = {e: Polynomial(t) for e, t in by_exp.items()}
    top = max(coeffs)
    bpoly = Polynomial.var(b)
    quo: dict[int, Polynomial] = {}
    carry = ZERO
    for e in range(top, 0, -1):
        qe = coeffs.get(e, ZERO) + carry
        quo[e - 1] = qe
        carry = bpoly * qe
    remainder = coeffs.get(0, ZERO) + carry
    if remainder:
        raise ExactDivisionError("division by variable difference left a remainder")
    apoly = Polynomial.var(a)
    out = ZERO
    for e, qe in quo.items():
        out = out + qe * (apoly ** e)
    return out
