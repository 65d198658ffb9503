"""Zhu algebra computations: the products a*b and a o_n b, reduction of classes
[v] to canonical form with explicit O(V) certificates, the classification
checks for the p-center quotients, and irreducible u(sl_2)-modules.

O(V) is not graded, so congruences are never decided by truncated linear
algebra on O(V).  Each reduction produces a finite list of triples (a, n, b)
whose combination of a o_n b is re-summed with the iterate formula and compared
with v minus the canonical representative, term by term.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .enveloping import EnvelopingAlgebra, RestrictedEnveloping, UEAElement
from .liealg import (AffineAlgebra, FiniteLieAlgebra, StructureConstants, VirasoroAlgebra,
                     add_into, sl2_structure)
from .linalg import RowSpace, solve_combination
from .modes import vertex_operators
from .report import Report
from .scalars import Prime, binom_mod
from .vacuum import (VACUUM, HighestWeightModule, IdealDescription, ModuleVector, QuotientModule,
                     affine_vacuum, ideal_graded_span, pcenter_generators, apply_central,
                     virasoro_vacuum)


# -- products -------------------------------------------------------------

def _homogeneous_parts(module, terms: dict) -> dict:
    parts: dict = {}
    for k, c in terms.items():
        parts.setdefault(module.degree(k), {})[k] = c
    return parts


def star_raw(V: HighestWeightModule, a: dict, b: dict) -> dict:
    ops = vertex_operators(V)
    out: dict = {}
    for da, part in _homogeneous_parts(V, a).items():
        for i in range(da + 1):
            coeff = binom_mod(da, i, V.p)
            if coeff:
                add_into(out, ops.mode_raw(part, i - 1, b), coeff, V.p)
    return out


def circ_raw(V: HighestWeightModule, a: dict, n: int, b: dict) -> dict:
    ops = vertex_operators(V)
    out: dict = {}
    for da, part in _homogeneous_parts(V, a).items():
        for i in range(da + 1):
            coeff = binom_mod(da, i, V.p)
            if coeff:
                add_into(out, ops.mode_raw(part, i - n - 2, b), coeff, V.p)
    return out


def star(a: ModuleVector, b: ModuleVector, config=None) -> ModuleVector:
    return ModuleVector(a.module, star_raw(a.module, a.terms, b.terms))


def circ(a: ModuleVector, n: int, b: ModuleVector, config=None) -> ModuleVector:
    if n < 0:
        raise ValueError("n must be >= 0")
    return ModuleVector(a.module, circ_raw(a.module, a.terms, n, b.terms))


# -- certificates -----------------------------------------------------------

@dataclass
class OVCertificate:
    """Terms (a, n, b, coeff) with sum coeff * (a o_n b) equal to ``claimed``."""
    module: HighestWeightModule
    terms: list = field(default_factory=list)
    claimed: dict = field(default_factory=dict)

    def resum(self) -> dict:
        out: dict = {}
        for a, n, b, coeff in self.terms:
            add_into(out, circ_raw(self.module, a, n, b), coeff, self.module.p)
        return out

    def verify(self) -> bool:
        return self.resum() == self.claimed

    def __len__(self):
        return len(self.terms)

    def describe(self, limit: int = 5) -> list:
        fmt = self.module.fmt
        return [{"a": fmt(a), "n": n, "b": fmt(b), "coeff": c} for a, n, b, c in self.terms[:limit]]


def _certificate_candidates(V: HighestWeightModule, top: int):
    """Explicit elements of O(V) of top degree <= top: g o_n b for the
    generating states g and basis vectors b, and b o_0 1 = (D + deg b) b."""
    p = V.p
    virasoro = isinstance(V.lie, VirasoroAlgebra)
    cands = []
    if virasoro:
        gens = [(2, (("L", -2),), lambda n: [("L", -n - 3), ("L", -n - 2), ("L", -n - 1)], (1, 2, 1))]
    else:
        gens = [(1, (("a", -1, i),), (lambda n, i=i: [("a", -n - 2, i), ("a", -n - 1, i)]), (1, 1))
                for i in range(V.lie.structure.dim)]
    for dg, word, modes, coeffs in gens:
        state = {(word, 0): 1}
        for db in range(0, top - dg):
            for key in V.basis(db):
                for n in range(0, top - dg - db):
                    vec: dict = {}
                    for g, c in zip(modes(n), coeffs):
                        add_into(vec, V.act_gen(g, key), c, p)
                    if vec:
                        cands.append(((state, n, {key: 1}), vec))
    dgen = ("L", -1) if virasoro else None
    for db in range(1, top):
        for key in V.basis(db):
            if virasoro:
                vec = dict(V.act_gen(dgen, key))
            else:
                vec = _affine_d1(V, key)
            add_into(vec, {key: 1}, db, p)
            if vec:
                cands.append((({key: 1}, 0, {VACUUM: 1}), vec))
    return cands


def _affine_d1(V, key) -> dict:
    from .modes import hasse_on_pbw
    return hasse_on_pbw(V, 1, {key: 1})


def _certify(V: HighestWeightModule, target: dict) -> OVCertificate | None:
    if not target:
        return OVCertificate(V, [], {})
    top = max(V.degree(k) for k in target)
    cands = _certificate_candidates(V, top)
    sol = solve_combination([vec for _, vec in cands], target, V.p)
    if sol is None:
        return None
    terms = [(cands[i][0][0], cands[i][0][1], cands[i][0][2], c) for i, c in sorted(sol.items())]
    return OVCertificate(V, terms, dict(target))


# -- Virasoro ----------------------------------------------------------------

class ZhuPolyVir:
    """Polynomial in x = [omega] over F_p (coefficient list, lowest degree first)."""

    def __init__(self, coeffs, p):
        self.p = Prime(p)
        cs = [int(c) % self.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ZhuPolyVir([x + y for x, y in zip(a, b)], self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return ZhuPolyVir([c * other for c in self.coeffs], self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ZhuPolyVir(out, self.p)

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + other * (-1)

    def __eq__(self, other):
        return isinstance(other, ZhuPolyVir) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def mod_frobenius(self) -> "ZhuPolyVir":
        """Remainder modulo x^p - x."""
        p = self.p
        cs = list(self.coeffs)
        for d in range(len(cs) - 1, p - 1, -1):
            c = cs[d]
            if c:
                cs[d] = 0
                cs[d - p + 1] += c
        return ZhuPolyVir(cs, p)

    def divisible_by_frobenius(self) -> bool:
        return not self.mod_frobenius().coeffs

    def evaluate(self, x: int) -> int:
        return sum(c * pow(x, i, self.p) for i, c in enumerate(self.coeffs)) % self.p

    @classmethod
    def x_power(cls, k, p):
        return cls([0] * k + [1], p)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                mon = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                parts.append(mon if c == 1 and i else f"{c}*{mon}" if i else str(c))
        return " + ".join(parts)

    def to_json_value(self):
        return repr(self)


def zhu_poly_vir(V: HighestWeightModule, vec: dict, _memo=None) -> ZhuPolyVir:
    """The polynomial f with [v] = f([omega]) in A(V_Vir(c,0)), from the rules
    [L(-n)u] = -2[L(-n+1)u] - [L(-n+2)u] (n >= 3), [L(-1)u] = -deg(u)[u],
    [L(0)u] = deg(u)[u] and [L(-2)u] = ([omega] + deg u)[u]."""
    p = V.p
    memo = V.__dict__.setdefault("_zhu_memo", {})
    total = ZhuPolyVir([], p)
    for key, c in vec.items():
        total = total + _poly_key(V, key, memo) * c
    return total


def _poly_key(V, key, memo) -> ZhuPolyVir:
    hit = memo.get(key)
    if hit is not None:
        return hit
    p = V.p
    mono = key[0]
    if not mono:
        res = ZhuPolyVir([1], p)
    else:
        n = -mono[0][1]
        rest = (mono[1:], 0)
        drest = V.degree(rest)
        if n == 2:
            res = _poly_key(V, rest, memo) * ZhuPolyVir([drest, 1], p)
        else:
            res = _poly_mode(V, 1 - n, rest, drest, memo) * (-2) - _poly_mode(V, 2 - n, rest, drest, memo)
    memo[key] = res
    return res


def _poly_mode(V, m, rest, drest, memo) -> ZhuPolyVir:
    """Polynomial of L(m) rest for m <= 0."""
    if m == 0:
        return _poly_key(V, rest, memo) * drest
    if m == -1:
        return _poly_key(V, rest, memo) * (-drest)
    return zhu_poly_vir(V, V.act_gen(("L", m), rest))


def representative_vir(V: HighestWeightModule, poly: ZhuPolyVir) -> dict:
    """sum_k f_k (L(-2) + L(-1))^k 1."""
    p = V.p
    out: dict = {}
    cur = {VACUUM: 1}
    for k, c in enumerate(poly.coeffs):
        if k:
            nxt = V.act_raw(("L", -2), cur)
            add_into(nxt, V.act_raw(("L", -1), cur), 1, p)
            cur = nxt
        add_into(out, cur, c, p)
    return out


def reduce_vir(v, config=None):
    """(f, certificate) with [v] = f([omega]) and v - f^ = sum coeff (a o_n b)."""
    V = v.module
    terms = v.terms
    poly = zhu_poly_vir(V, terms)
    target = dict(terms)
    add_into(target, representative_vir(V, poly), -1, V.p)
    cert = _certify(V, target)
    if cert is None:
        raise ArithmeticError(f"no O(V) certificate found for {V.fmt(terms)} - ({poly})")
    return poly, cert


# -- affine ----------------------------------------------------------------

def zhu_uea_affine(V: HighestWeightModule, vec: dict, uea: EnvelopingAlgebra) -> UEAElement:
    """Image in U(g) via [a(-n)u] = (-1)^{n-1}[u][a]."""
    memo = V.__dict__.setdefault("_zhu_affine_memo", {})
    out: dict = {}
    for key, c in vec.items():
        add_into(out, _uea_key(V, key, uea, memo), c, V.p)
    return UEAElement(uea, out)


def _uea_key(V, key, uea, memo) -> dict:
    hit = memo.get(key)
    if hit is not None:
        return hit
    mono = key[0]
    if not mono:
        res = {(): 1}
    else:
        g = mono[0]
        n, i = -g[1], g[2]
        rest = _uea_key(V, (mono[1:], 0), uea, memo)
        res = {}
        sign = -1 if (n - 1) % 2 else 1
        for m, c in rest.items():
            add_into(res, uea.apply_word(m + (("x", i),), {(): 1}), sign * c, V.p)
    memo[key] = res
    return res


def representative_affine(V: HighestWeightModule, elem: UEAElement) -> dict:
    """PBW monomial x_1 ... x_r is represented by x_r(-1) ... x_1(-1) 1."""
    out: dict = {}
    for mono, c in elem.terms.items():
        word = tuple(("a", -1, g[1]) for g in reversed(mono))
        add_into(out, V.apply_word_raw(word, {VACUUM: 1}), c, V.p)
    return out


def _affine_uea(V):
    uea = V.__dict__.get("_zhu_uea")
    if uea is None:
        uea = EnvelopingAlgebra(FiniteLieAlgebra(V.lie.structure))
        V.__dict__["_zhu_uea"] = uea
    return uea


def reduce_affine(v, config=None):
    V = v.module
    uea = _affine_uea(V)
    image = zhu_uea_affine(V, v.terms, uea)
    target = dict(v.terms)
    add_into(target, representative_affine(V, image), -1, V.p)
    cert = _certify(V, target)
    if cert is None:
        raise ArithmeticError(f"no O(V) certificate found for {V.fmt(v.terms)}")
    return image, cert


# -- verification suites ----------------------------------------------------

def verify_zhu_vir(p, c, nmax: int, samples: int = 20, seed: int = 0) -> Report:
    p = Prime(p)
    top = nmax * p
    V = virasoro_vacuum(p, c, top)
    report = Report("zhu-vir", {"p": int(p), "c": int(c) % p, "nmax": nmax, "max_degree": top})
    frob = ZhuPolyVir([0, -1] + [0] * (p - 2) + [1], p)
    for n in range(2, nmax + 1):
        vec = {}
        add_into(vec, V.apply_word_raw((("L", -n),) * p, {VACUUM: 1}), 1, p)
        if n % p == 0:
            add_into(vec, V.act_gen(("L", -n * p), VACUUM), -1, p)
        poly, cert = reduce_vir(ModuleVector(V, vec))
        expected = frob * ((-1) ** (p * n) * (n - 1))
        report.add(f"[(L(-{n})^p - d L(-{n * p}))1] = (-1)^(pn)(n-1)(x^p - x), n={n}", poly == expected,
                   None if poly == expected else {"got": repr(poly), "expected": repr(expected)},
                   n=n, polynomial=repr(poly))
        ok = cert.verify()
        report.add(f"certificate for n={n} re-sums exactly", ok, None, n=n, terms=len(cert))
    poly, cert = reduce_vir(ModuleVector(V, V.apply_word_raw((("L", -2),) * p, {VACUUM: 1})))
    report.add(f"[L(-2)^{int(p)} 1] = x^{int(p)} - x", poly == frob and cert.verify(), None,
               polynomial=repr(poly))

    rng = random.Random(seed)
    sub = ideal_graded_span(V, IdealDescription("I"))
    bad = []
    checked = 0
    gens = pcenter_generators(V, IdealDescription("I"))
    for _ in range(samples):
        dz, parts, label = rng.choice(gens)
        room = top - dz
        d = rng.randint(0, room)
        basis = V.basis(d)
        if not basis:
            continue
        key = rng.choice(basis)
        vec = apply_central(V, parts, {key: 1})
        poly, cert = reduce_vir(ModuleVector(V, vec))
        checked += 1
        if not (poly.divisible_by_frobenius() and cert.verify()):
            bad.append({"generator": label, "u": V.fmt({key: 1}), "poly": repr(poly)})
    report.add("classes of ideal elements lie in (x^p - x)F[x]", not bad, bad[:3] or None,
               samples=checked)

    table_ok = True
    basis = [ZhuPolyVir.x_power(k, p) for k in range(p)]
    for a, b, cc in product(basis, repeat=3):
        if ((a * b).mod_frobenius() * cc).mod_frobenius() != (a * (b * cc).mod_frobenius()).mod_frobenius():
            table_ok = False
        if (a * b).mod_frobenius() != (b * a).mod_frobenius():
            table_ok = False
    for a in basis:
        if (a * ZhuPolyVir([1], p)).mod_frobenius() != a:
            table_ok = False
    report.add("F[x]/(x^p - x) table is associative, commutative and unital", table_ok, None)

    omega = {((("L", -2),), 0): 1}
    bad = []
    lim = min(6, top - 2)
    pool = [k for d in range(lim + 1) for k in V.basis(d)]
    for _ in range(samples):
        key = rng.choice(pool)
        lhs = zhu_poly_vir(V, star_raw(V, omega, {key: 1}))
        rhs = zhu_poly_vir(V, {key: 1}) * ZhuPolyVir([0, 1], p)
        if lhs != rhs:
            bad.append(V.fmt({key: 1}))
    report.add("[omega * v] = x [v] on random v of degree <= 6", not bad, bad[:3] or None,
               samples=samples)
    return report


def verify_zhu_affine(structure: StructureConstants, level, nmax: int = 1, samples: int = 10,
                      seed: int = 0) -> Report:
    p = structure.p
    top = nmax * p
    V = affine_vacuum(structure, level, top)
    uea = _affine_uea(V)
    u = RestrictedEnveloping(structure)
    report = Report("zhu-affine", {"p": int(p), "level": int(level) % p, "nmax": nmax,
                                   "basis": structure.names})
    relations = []
    for m in range(1, nmax + 1):
        for i, name in enumerate(structure.names):
            vec = V.apply_word_raw((("a", -m, i),) * p, {VACUUM: 1})
            for k, cc in structure.p_map[i].items():
                add_into(vec, V.act_gen(("a", -m * p, k), VACUUM), -cc, p)
            image, cert = reduce_affine(ModuleVector(V, vec))
            xp = uea.straighten((("x", i),) * p)
            pm = UEAElement(uea, {(("x", k),): cc for k, cc in structure.p_map[i].items()})
            expected = (xp - pm) * ((-1) ** (m - 1))
            report.add(f"[({name}(-{m})^p - {name}^[p](-{m * p}))1] = (-1)^(n-1)({name}^p - {name}^[p]), n={m}",
                       image == expected and cert.verify(),
                       None if image == expected else {"got": repr(image), "expected": repr(expected)},
                       generator=name, n=m, image=repr(image), certificate_terms=len(cert))
            relations.append(image)
    killed = all(not u.reduce(r.terms) for r in relations)
    report.add("images of the ideal generators vanish in u(g)", killed, None)
    span = RowSpace(p)
    for r in relations:
        span.add({m: c for m, c in r.terms.items()})
    expected_span = RowSpace(p)
    for i in range(structure.dim):
        vec = dict(uea.straighten((("x", i),) * p).terms)
        for k, cc in structure.p_map[i].items():
            add_into(vec, {(("x", k),): 1}, -cc, p)
        expected_span.add(vec)
    same = all(expected_span.contains(r) for r in span.basis()) and \
        all(span.contains(r) for r in expected_span.basis())
    report.add("relations span {x^p - x^[p]} (the defining relations of u(g))", same, None)

    rng = random.Random(seed)
    bad = []
    pool = [k for d in range(0, 3) for k in V.basis(d)]
    for _ in range(samples):
        a, b = rng.choice(pool), rng.choice(pool)
        if V.degree(a) + V.degree(b) > top:
            continue
        lhs = zhu_uea_affine(V, star_raw(V, {a: 1}, {b: 1}), uea)
        rhs = zhu_uea_affine(V, {a: 1}, uea) * zhu_uea_affine(V, {b: 1}, uea)
        if lhs != rhs:
            bad.append([V.fmt({a: 1}), V.fmt({b: 1})])
    report.add("reduction is multiplicative against *", not bad, bad[:3] or None, samples=samples)
    return report


# -- modules and classification --------------------------------------------

def omega_W_action_check(W: QuotientModule, vacuum: HighestWeightModule | None = None,
                         samples: int = 6) -> Report:
    """W(0) lies in Omega(W), and [u] acts on W(0) as u_{deg u - 1}, matching
    the canonical image of [u] (a polynomial in [omega], or an element of U(g))."""
    M = W.module
    p = M.p
    report = Report("omega-action", {"module": W.name, **M.params})
    from .vacuum import omega_membership
    tops = [((), j) for j in range(M.top_dim)]
    report.add("W(0) is contained in Omega(W)",
               all(omega_membership({t: 1}, W) for t in tops), None)
    if isinstance(M.lie, VirasoroAlgebra):
        V = vacuum or virasoro_vacuum(p, M.central_values.get(("c",), 0), 6, algebra=M.lie)
        ops = vertex_operators(V, M)
        lam = M.params.get("weight", 0)
        omega = {((("L", -2),), 0): 1}
        got = W.reduce(ops.mode_raw(omega, 1, {tops[0]: 1}))
        report.add("[omega] acts on W(0) by lambda", got == ({tops[0]: lam} if lam else {}), None,
                   weight=lam)
        bad = []
        for d in range(2, min(V.max_degree, 6) + 1):
            for key in V.basis(d)[:samples]:
                poly = zhu_poly_vir(V, {key: 1})
                got = W.reduce(ops.mode_raw({key: 1}, d - 1, {tops[0]: 1}))
                val = poly.evaluate(lam)
                if got != ({tops[0]: val} if val else {}):
                    bad.append(V.fmt({key: 1}))
        report.add("u_{deg u - 1} acts on W(0) as f(lambda) with [u] = f([omega])", not bad,
                   bad[:3] or None)
        return report
    structure = M.lie.structure
    V = vacuum or affine_vacuum(structure, M.central_values.get(("k",), 0), 3, algebra=M.lie)
    ops = vertex_operators(V, M)
    uea = _affine_uea(V)
    bad = []
    for i in range(structure.dim):
        for t in tops:
            got = W.reduce(ops.mode_raw({((("a", -1, i),), 0): 1}, 0, {t: 1}))
            want = W.reduce(M.act_gen(("a", 0, i), t))
            if got != want:
                bad.append([structure.names[i], t[1]])
    report.add("[a] acts on W(0) as a(0), i.e. as a on U", not bad, bad[:3] or None)
    bad = []
    for d in range(1, min(V.max_degree, 3) + 1):
        for key in V.basis(d)[:samples]:
            image = zhu_uea_affine(V, {key: 1}, uea)
            for t in tops:
                got = W.reduce(ops.mode_raw({key: 1}, d - 1, {t: 1}))
                want: dict = {}
                for mono, c in image.terms.items():
                    word = tuple(("a", 0, g[1]) for g in mono)
                    add_into(want, M.apply_word_raw(word, {t: 1}), c, p)
                if got != W.reduce(want):
                    bad.append(V.fmt({key: 1}))
        report.add(f"u_(deg u - 1) acts on U as the image of [u] in U(g) (degree {d})",
                   not bad, bad[:3] or None)
    return report


def sl2_irreducible_action(p, weight: int) -> dict:
    """Matrices of e, f, h (indices 0, 1, 2) on L(weight), basis f^k v, k <= weight."""
    p = Prime(p)
    d = weight + 1
    e = [[0] * d for _ in range(d)]
    f = [[0] * d for _ in range(d)]
    h = [[0] * d for _ in range(d)]
    for k in range(d):
        h[k][k] = (weight - 2 * k) % p
        if k + 1 < d:
            f[k + 1][k] = 1
        if k >= 1:
            e[k - 1][k] = k * (weight - k + 1) % p
    return {0: e, 1: f, 2: h}


def _matvec(m, v, p):
    return [sum(m[r][s] * v[s] for s in range(len(v))) % p for r in range(len(m))]


def highest_weight_module_u_sl2(u: RestrictedEnveloping, weight: int):
    """u(sl2) / left ideal (e, h - weight, f^(weight+1)); returns (dimension, left-ideal space)."""
    p = u.p
    gens = [u.gen("e"), {(("x", 2),): 1, (): -weight % p}, u.power(u.gen("f"), weight + 1)]
    space = RowSpace(p)
    for b in u.basis():
        for g in gens:
            space.add(u.multiply({b: 1}, g))
    return u.dimension - space.rank, space


def classify_irreducibles_u_sl2(p) -> Report:
    p = Prime(p)
    structure = sl2_structure(p)
    u = RestrictedEnveloping(structure)
    report = Report("classify-u-sl2", {"p": int(p)})
    report.add("dim u(sl2) = p^3", len(u.basis()) == p ** 3, None, dimension=len(u.basis()))
    relations_ok = (not u.power(u.gen("e"), p) and not u.power(u.gen("f"), p)
                    and u.power(u.gen("h"), p) == u.gen("h"))
    report.add("e^p = f^p = 0 and h^p = h in u(sl2)", relations_ok, None)
    spectra = []
    dims = []
    for lam in range(p):
        dim_quot, _ = highest_weight_module_u_sl2(u, lam)
        mats = sl2_irreducible_action(p, lam)
        d = lam + 1
        ok_rel = _check_sl2_relations(mats, d, p)
        irreducible = _all_vectors_cyclic(u, mats, d, p)
        spectra.append(tuple(sorted(mats[2][k][k] for k in range(d))))
        dims.append(d)
        report.add(f"L({lam}) is a u(sl2)-module of dimension {d}", ok_rel and dim_quot == d, None,
                   weight=lam, dimension=d, cyclic_quotient_dimension=dim_quot)
        report.add(f"L({lam}) is irreducible (every nonzero vector is cyclic)", irreducible, None,
                   weight=lam)
    report.add("the modules are pairwise non-isomorphic (distinct h-spectra)",
               len(set(spectra)) == p, None, spectra=[list(s) for s in spectra])
    report.add(f"exactly {int(p)} irreducibles with dimensions 1..p", dims == list(range(1, p + 1)),
               None, dims=dims)
    return report


def _check_sl2_relations(mats, d, p) -> bool:
    structure = sl2_structure(p)
    from .vacuum import _check_action
    try:
        _check_action(structure, mats)
    except ValueError:
        return False

    def power(m, k):
        out = [[int(r == s) for s in range(d)] for r in range(d)]
        for _ in range(k):
            out = [[sum(out[r][t] * m[t][s] for t in range(d)) % p for s in range(d)] for r in range(d)]
        return out

    zero = [[0] * d for _ in range(d)]
    return power(mats[0], p) == zero and power(mats[1], p) == zero and power(mats[2], p) == mats[2]


def _all_vectors_cyclic(u: RestrictedEnveloping, mats, d, p) -> bool:
    """Exhaustive over projective points: u(sl2) v spans the module for every v != 0."""
    words = []
    for mono in u.basis():
        words.append([g[1] for g in mono])
    for vec in product(range(p), repeat=d):
        first = next((x for x in vec if x), None)
        if first != 1:
            continue
        space = RowSpace(p)
        for word in words:
            w = list(vec)
            for idx in reversed(word):
                w = _matvec(mats[idx], w, p)
            space.add({i: x for i, x in enumerate(w) if x})
            if space.rank == d:
                break
        if space.rank != d:
            return False
    return True
