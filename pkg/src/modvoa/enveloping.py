"""PBW normal forms in universal enveloping algebras, centrality tests, the
symmetrization identities for p-fold products, and restricted enveloping algebras.

A PBW monomial is a tuple of generators sorted non-decreasingly under the
generator order of :mod:`modvoa.liealg`; repeated generators encode exponents.
"""
from __future__ import annotations

import sys
from itertools import permutations
from math import factorial

from .liealg import FiniteLieAlgebra, LieAlgebra, LieElement, StructureConstants, add_into
from .report import Report

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class EnvelopingAlgebra:
    """U(g) for a LieAlgebra, optionally with central generators specialized
    to scalars (e.g. ``{("c",): 2}``)."""

    def __init__(self, lie: LieAlgebra, central_values: dict | None = None):
        self.lie = lie
        self.p = lie.p
        self.central_values = {g: int(v) % self.p for g, v in (central_values or {}).items()}
        self._cache: dict = {}

    def mul_gen(self, g, mono: tuple) -> dict:
        """Normal form of g * mono for a sorted monomial."""
        key = (g, mono)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if g in self.central_values:
            val = self.central_values[g]
            res = {mono: val} if val else {}
        elif not mono or g <= mono[0]:
            res = {(g,) + mono: 1}
        else:
            p = self.p
            head, rest = mono[0], mono[1:]
            res = {}
            for m, c in self.mul_gen(g, rest).items():
                add_into(res, self.mul_gen(head, m), c, p)
            for x, cx in self.lie.bracket_gens(g, head).items():
                for m, c in self.mul_gen(x, rest).items():
                    v = (res.get(m, 0) + cx * c) % p
                    if v:
                        res[m] = v
                    else:
                        res.pop(m, None)
        self._cache[key] = res
        return res

    def apply_word(self, word, terms: dict) -> dict:
        """word (left to right) times an element given as {mono: coeff}."""
        out = dict(terms)
        for g in reversed(tuple(word)):
            nxt: dict = {}
            for m, c in out.items():
                add_into(nxt, self.mul_gen(g, m), c, self.p)
            out = nxt
        return out

    def straighten(self, word) -> "UEAElement":
        return UEAElement(self, self.apply_word(word, {(): 1}))

    def one(self) -> "UEAElement":
        return UEAElement(self, {(): 1})

    def gen(self, g) -> "UEAElement":
        return self.straighten((g,))

    def from_lie(self, x: LieElement) -> "UEAElement":
        out: dict = {}
        for g, c in x.terms.items():
            add_into(out, self.mul_gen(g, ()), c, self.p)
        return UEAElement(self, out)

    def multiply(self, u: "UEAElement", v: "UEAElement") -> "UEAElement":
        if u.algebra is not self or v.algebra is not self:
            raise ValueError("operands belong to different enveloping algebras")
        out: dict = {}
        for m, c in u.terms.items():
            add_into(out, self.apply_word(m, v.terms), c, self.p)
        return UEAElement(self, out)

    def degree(self, mono: tuple) -> int:
        return sum(self.lie.degree(g) for g in mono)

    def fmt_mono(self, mono: tuple) -> str:
        if not mono:
            return "1"
        parts = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            name = self.lie.fmt(mono[i])
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


class UEAElement:
    """Element of U(g) in PBW normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: EnvelopingAlgebra, terms: dict):
        self.algebra = algebra
        p = algebra.p
        self.terms = {m: c % p for m, c in terms.items() if c % p}

    def _same(self, other):
        if not isinstance(other, UEAElement) or other.algebra is not self.algebra:
            raise ValueError("mismatched enveloping algebras")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        add_into(out, other.terms, 1, self.algebra.p)
        return UEAElement(self.algebra, out)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.terms)
        add_into(out, other.terms, -1, self.algebra.p)
        return UEAElement(self.algebra, out)

    def __neg__(self):
        return UEAElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return self.algebra.multiply(self, other)
        return UEAElement(self.algebra, {m: c * int(other) for m, c in self.terms.items()})

    def __rmul__(self, scalar):
        return UEAElement(self.algebra, {m: c * int(scalar) for m, c in self.terms.items()})

    def __pow__(self, e: int):
        out = self.algebra.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {self.algebra.degree(m) for m in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        fmt = self.algebra.fmt_mono
        return " + ".join(f"{c}*{fmt(m)}" for m, c in sorted(self.terms.items()))


def straighten(algebra: EnvelopingAlgebra, word) -> UEAElement:
    return algebra.straighten(word)


def multiply(u: UEAElement, v: UEAElement) -> UEAElement:
    return u.algebra.multiply(u, v)


def commutator(u: UEAElement, v: UEAElement) -> UEAElement:
    return u * v - v * u


def is_central(z: UEAElement, generators) -> tuple[bool, dict | None]:
    """Whether [g, z] = 0 for every generator g listed (a window certificate only:
    the Lie algebra may have generators outside the supplied list)."""
    algebra = z.algebra
    for g in generators:
        gz = algebra.gen(g)
        comm = commutator(gz, z)
        if comm:
            return False, {"generator": algebra.lie.fmt(g), "commutator": repr(comm)}
    return True, None


def nested_bracket(items: list) -> UEAElement:
    acc = items[0]
    for x in items[1:]:
        acc = commutator(acc, x)
    return acc


def _product(items: list) -> UEAElement:
    acc = items[0]
    for x in items[1:]:
        acc = acc * x
    return acc


def cmn_identity_check(a: list) -> Report:
    """Full symmetrization over S_p against left-nested brackets with sigma(1)=1."""
    algebra = a[0].algebra
    p = algebra.p
    report = Report("cmn", {"p": int(p), "elements": [repr(x) for x in a]})
    if len(a) != p:
        raise ValueError(f"need exactly p={int(p)} elements")
    lhs = UEAElement(algebra, {})
    rhs = UEAElement(algebra, {})
    for sigma in permutations(range(p)):
        lhs = lhs + _product([a[i] for i in sigma])
        if sigma[0] == 0:
            rhs = rhs + nested_bracket([a[i] for i in sigma])
    report.add("symmetrized product equals nested brackets", lhs == rhs,
               None if lhs == rhs else {"lhs": repr(lhs), "rhs": repr(rhs)}, p=p)
    return report


def multiset_maps(r: list):
    """All tau: {1..p} -> {1..t} taking value i exactly r_i times (0-based values)."""
    r = list(r)
    total = sum(r)
    out = []

    def rec(prefix, remaining):
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for i, left in enumerate(remaining):
            if left:
                remaining[i] -= 1
                prefix.append(i)
                rec(prefix, remaining)
                prefix.pop()
                remaining[i] += 1

    rec([], r)
    return out


def cmn_multiset_check(a: list, r: list) -> Report:
    algebra = a[0].algebra
    p = algebra.p
    if len(a) != len(r) or any(x < 1 for x in r) or sum(r) != p or not 1 <= len(r) <= p:
        raise ValueError("multiplicities must be positive, one per element, and sum to p")
    maps = multiset_maps(r)
    expected = factorial(p)
    for x in r:
        expected //= factorial(x)
    lhs = UEAElement(algebra, {})
    rhs = UEAElement(algebra, {})
    for tau in maps:
        lhs = lhs + _product([a[i] for i in tau])
        if tau[0] == 0:
            rhs = rhs + nested_bracket([a[i] for i in tau])
    lhs = lhs * r[0]
    report = Report("cmn-multiset", {"p": int(p), "r": list(r), "elements": [repr(x) for x in a]})
    report.add("|T(r)| is the multinomial coefficient", len(maps) == expected,
               None, size=len(maps), expected=expected)
    report.add("r_1 * sum over T(r) of products equals nested brackets with tau(1)=1",
               lhs == rhs, None if lhs == rhs else {"lhs": repr(lhs), "rhs": repr(rhs)}, p=p)
    return report


class RestrictedEnveloping:
    """u(g) = U(g)/(x^p - x^[p]); basis: PBW monomials with every exponent < p."""

    def __init__(self, structure: StructureConstants):
        if structure.p_map is None:
            raise ValueError("restricted quotient needs a p-mapping table")
        self.structure = structure
        self.lie = FiniteLieAlgebra(structure)
        self.uea = EnvelopingAlgebra(self.lie)
        self.p = structure.p
        self._mul_cache: dict = {}

    @property
    def dimension(self) -> int:
        return self.p ** self.structure.dim

    def basis(self) -> list:
        d, p = self.structure.dim, self.p
        out = [()]
        for i in range(d):
            out = [m + (("x", i),) * e for m in out for e in range(p)]
        return out

    def reduce(self, terms: dict) -> dict:
        """Rewrite p-th powers x^p as x^[p] until every exponent is < p."""
        p = self.p
        out: dict = {}
        todo = dict(terms)
        while todo:
            mono, c = todo.popitem()
            pos = _first_power(mono, p)
            if pos is None:
                add_into(out, {mono: 1}, c, p)
                continue
            g = mono[pos]
            prefix, suffix = mono[:pos], mono[pos + p:]
            for y, cy in self.lie.p_map_gen(g).items():
                piece = self.uea.apply_word(prefix + (y,), {suffix: 1})
                add_into(todo, piece, c * cy, p)
        return out

    def multiply(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for m, c in u.items():
            for n, d in v.items():
                key = (m, n)
                hit = self._mul_cache.get(key)
                if hit is None:
                    hit = self.reduce(self.uea.apply_word(m, {n: 1}))
                    self._mul_cache[key] = hit
                add_into(out, hit, c * d, self.p)
        return out

    def gen(self, name: str) -> dict:
        return {(("x", self.structure.index(name)),): 1}

    def power(self, u: dict, e: int) -> dict:
        out = {(): 1}
        for _ in range(e):
            out = self.multiply(out, u)
        return out

    def fmt(self, terms: dict) -> str:
        if not terms:
            return "0"
        return " + ".join(f"{c}*{self.uea.fmt_mono(m)}" for m, c in sorted(terms.items()))


def _first_power(mono: tuple, p: int):
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        if j - i >= p:
            return i
        i = j
    return None


def restricted_quotient(structure: StructureConstants) -> RestrictedEnveloping:
    return RestrictedEnveloping(structure)
