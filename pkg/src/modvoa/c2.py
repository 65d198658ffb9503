"""C_2 subspaces, the commutative algebra V/C_2(V) and truncated C_2-cofiniteness checks.

Every u_{-2-k} v with u, v homogeneous is homogeneous of degree
deg u + deg v + k + 1, so the span is computed degree by degree exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .liealg import StructureConstants, VirasoroAlgebra
from .linalg import RowSpace
from .modes import vertex_operators
from .report import Report
from .vacuum import (VACUUM, GradedSubspace, HighestWeightModule, IdealDescription,
                     affine_vacuum, ideal_graded_span, virasoro_vacuum)


def c2_span(V: HighestWeightModule, config=None, extra: GradedSubspace | None = None) -> GradedSubspace:
    """C_2(V) through the truncation degree; ``extra`` (an ideal) is added first,
    which yields C_2 of the quotient vertex algebra as a subspace of V."""
    top = V.max_degree if config is None else config.max_degree
    ops = vertex_operators(V)
    sub = GradedSubspace(V)
    if extra is not None:
        for row in extra.space.basis():
            sub.add(row)
    for d in range(2, top + 1):
        for du in range(1, d):
            for dv in range(0, d - du):
                k = d - du - dv - 1
                for u in V.basis(du):
                    for v in V.basis(dv):
                        vec = ops.mode_key(u, -2 - k, v)
                        if vec:
                            sub.add(dict(vec), top_degree=d)
    return sub


@dataclass
class C2Quotient:
    """V/C_2(V) through degree N with the product u.v = u_{-1}v on coset representatives."""
    module: HighestWeightModule
    sub: GradedSubspace
    basis: dict = field(default_factory=dict)
    table: dict = field(default_factory=dict)

    @property
    def dims(self) -> list:
        return [len(self.basis.get(d, [])) for d in range(self.module.max_degree + 1)]

    def reduce(self, vec: dict) -> dict:
        return self.sub.reduce(vec)

    def product(self, a: dict, b: dict) -> dict:
        ops = vertex_operators(self.module)
        return self.reduce(ops.mode_raw(a, -1, b))

    def power(self, a: dict, e: int) -> dict:
        out = {VACUUM: 1}
        for _ in range(e):
            out = self.product(a, out)
        return out


def c2_quotient_algebra(V: HighestWeightModule, config=None, sub: GradedSubspace | None = None):
    """(C2Quotient, Report) with the product table and its algebra checks."""
    sub = sub or c2_span(V, config)
    top = V.max_degree if config is None else config.max_degree
    quotient = C2Quotient(V, sub)
    for d in range(top + 1):
        quotient.basis[d] = [k for k in V.basis(d) if k not in sub.space.rows]
    cosets = [(d, k) for d in range(top + 1) for k in quotient.basis[d]]
    for (da, a), (db, b) in combinations_with_replacement(cosets, 2):
        if da + db <= top:
            quotient.table[(a, b)] = quotient.product({a: 1}, {b: 1})
    report = Report("c2-algebra", {**V.params, "max_degree": top, "dims": quotient.dims})
    bad = [(a, b) for (a, b), ab in quotient.table.items() if ab != quotient.product({b: 1}, {a: 1})]
    report.add("product is commutative on the table", not bad, _fmt_pairs(V, bad))
    bad = [k for _, k in cosets if quotient.product({VACUUM: 1}, {k: 1}) != {k: 1}]
    report.add("the vacuum coset is the identity", not bad, [V.fmt_key(k) for k in bad[:3]] or None)
    bad = []
    for (da, a), (db, b) in combinations_with_replacement(cosets, 2):
        for dc, c in cosets:
            if da + db + dc > top or not da or not db or not dc:
                continue
            lhs = quotient.product(quotient.table[(a, b)], {c: 1})
            rhs = quotient.product({a: 1}, quotient.product({b: 1}, {c: 1}))
            if lhs != rhs:
                bad.append((a, b, c))
    report.add("product is associative on the table", not bad, _fmt_pairs(V, bad))
    bad = []
    for d in range(top + 1):
        zs = sub.component_basis(d)[:4]
        for z in zs:
            for db, b in cosets[:12]:
                if d + db > top:
                    continue
                if quotient.product(z, {b: 1}) or quotient.product({b: 1}, z):
                    bad.append((d, b))
    report.add("product is independent of coset representatives", not bad,
               [[d, V.fmt_key(b)] for d, b in bad[:3]] or None)
    return quotient, report


def _fmt_pairs(V, bad):
    if not bad:
        return None
    return [[V.fmt_key(k) for k in t] for t in bad[:3]]


def check_c2_ideal(V: HighestWeightModule, sub: GradedSubspace, samples: int = 20, seed: int = 0) -> Report:
    """a_{-n} C_2 is contained in C_2 for n >= 0 on sampled a and C_2 elements."""
    rng = random.Random(seed)
    ops = vertex_operators(V)
    top = V.max_degree
    report = Report("c2-ideal", {**V.params, "samples": samples, "seed": seed})
    bad = []
    zs = [(d, z) for d in range(2, top) for z in sub.component_basis(d)]
    checked = 0
    for _ in range(samples):
        if not zs:
            break
        d, z = rng.choice(zs)
        pool = [k for e in range(1, top - d + 1) for k in V.basis(e)]
        if not pool:
            continue
        a = rng.choice(pool)
        n = rng.randint(0, top - d - V.degree(a))
        img = ops.mode_raw({a: 1}, -1 - n, z)
        checked += 1
        if not sub.contains(img):
            bad.append([V.fmt_key(a), n, V.fmt(z)])
    report.add("a_(-1-n) maps C_2 into C_2", not bad, bad[:3] or None, checked=checked)
    return report


def verify_c2_cofinite(V0, config=None) -> Report:
    """V0 is (vacuum module, ideal subspace).  Checks the p-th power relations
    and that the expected monomials span each computed degree of V0/C_2(V0)."""
    V, ideal = V0
    p = V.p
    top = V.max_degree if config is None else config.max_degree
    virasoro = isinstance(V.lie, VirasoroAlgebra)
    gen_degree = 2 if virasoro else 1
    if top < p * gen_degree:
        raise ValueError(f"truncation {top} is below p * generator degree = {p * gen_degree}")
    sub = c2_span(V, config, extra=ideal)
    quotient, table_report = c2_quotient_algebra(V, config, sub)
    report = Report("c2", {**V.params, "max_degree": top, "quotient_dims": quotient.dims})
    report.extend(table_report)
    if virasoro:
        gens = [("omega", {((("L", -2),), 0): 1})]
    else:
        names = V.lie.structure.names
        gens = [(n, {((("a", -1, i),), 0): 1}) for i, n in enumerate(names)]
    for name, g in gens:
        report.add(f"{name}-bar^{int(p)} = 0 in V0/C2", not quotient.power(g, p), None)
    ok = True
    witness = []
    for d in range(top + 1):
        span = RowSpace(p)
        for mono in _bounded_monomials(len(gens), d // gen_degree if d % gen_degree == 0 else -1, p):
            vec = {VACUUM: 1}
            for i, e in enumerate(mono):
                for _ in range(e):
                    vec = quotient.product(gens[i][1], vec)
            if vec:
                span.add(vec)
        if span.rank != quotient.dims[d]:
            ok = False
            witness.append({"degree": d, "monomial_rank": span.rank, "quotient_dim": quotient.dims[d]})
    bound = p if virasoro else p ** len(gens)
    report.add("monomials with exponents < p span every computed degree", ok, witness or None)
    report.add(f"dim V0/C2 through degree {top} is at most {bound}",
               sum(quotient.dims) <= bound, None, total=sum(quotient.dims))
    return report


def _bounded_monomials(n: int, total: int, p: int) -> list:
    """Exponent vectors of length n summing to total with entries < p."""
    if total < 0:
        return []
    out = []

    def rec(prefix, left):
        if len(prefix) == n - 1:
            if left < p:
                out.append(tuple(prefix) + (left,))
            return
        for e in range(min(left, p - 1) + 1):
            rec(prefix + [e], left - e)

    rec([], total)
    return out


def virasoro_v0(p, c, max_degree: int, mu: int = 0):
    V = virasoro_vacuum(p, c, max_degree)
    return V, ideal_graded_span(V, IdealDescription("I", mu=mu))


def affine_v0(structure: StructureConstants, level, max_degree: int, chi: dict | None = None):
    V = affine_vacuum(structure, level, max_degree)
    return V, ideal_graded_span(V, IdealDescription("J", chi=chi or {}))
