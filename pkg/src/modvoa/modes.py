"""Vertex-operator modes on truncated vacuum modules and their modules.

Modes are computed by recursion on the leading PBW factor of the state with
the iterate formula

    (g_{-k} u)_m w = sum_{i>=0} binom(k+i-1, i) [ g_{-k-i}(u_{m+i} w)
                                                - (-1)^k u_{m-k-i}(g_i w) ],

where g is the generating field (omega for Virasoro with omega_j = L(j-1), and
a in g for affine algebras with a_j = a(j)), together with 1_m = d_{m,-1}.
Intermediate vectors are exact at every degree; only the final result is
checked against the truncation degree.
"""
from __future__ import annotations

from .liealg import VirasoroAlgebra, add_into
from .report import Report
from .scalars import binom_mod
from .vacuum import VACUUM, HighestWeightModule, ModuleVector, TruncationOverflow


class VertexOperators:
    """Mode actions Y(v, x)_n of states v of a vacuum module V on a module W."""

    def __init__(self, vacuum: HighestWeightModule, target: HighestWeightModule | None = None):
        self.V = vacuum
        self.W = target or vacuum
        self.p = vacuum.p
        self.virasoro = isinstance(vacuum.lie, VirasoroAlgebra)
        self._cache: dict = {}

    # -- generator data ------------------------------------------------------
    def _split(self, g):
        """For a creation generator return (k, field-mode factory)."""
        if self.virasoro:
            return -g[1] - 1, lambda j: ("L", j - 1)
        i = g[2]
        return -g[1], lambda j, i=i: ("a", j, i)

    def _mode_lowering_bound(self, i: int, dw: int) -> bool:
        """Whether g_i can be nonzero on degree dw."""
        shift = i - 1 if self.virasoro else i
        return shift <= dw

    # -- core recursion ------------------------------------------------------
    def mode_key(self, vkey, m: int, wkey) -> dict:
        ck = (vkey, m, wkey)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        mono, _ = vkey
        W, p = self.W, self.p
        dv = self.V.degree(vkey)
        dw = W.degree(wkey)
        if dv + dw - m - 1 < 0:
            res = {}
        elif not mono:
            res = {wkey: 1} if m == -1 else {}
        else:
            g, u = mono[0], (mono[1:], 0)
            k, field = self._split(g)
            du = dv - (k + 1 if self.virasoro else k)
            sign = -1 if k % 2 else 1
            res = {}
            i = 0
            while m + i <= du + dw - 1:
                coeff = binom_mod(k + i - 1, i, p)
                if coeff:
                    inner = self.mode_key(u, m + i, wkey)
                    if inner:
                        add_into(res, W.act_raw(field(-k - i), inner), coeff, p)
                i += 1
            i = 0
            while self._mode_lowering_bound(i, dw):
                coeff = binom_mod(k + i - 1, i, p)
                if coeff:
                    gw = W.act_gen(field(i), wkey)
                    for key, c in gw.items():
                        add_into(res, self.mode_key(u, m - k - i, key), -sign * coeff * c, p)
                i += 1
        self._cache[ck] = res
        return res

    def mode_raw(self, v: dict, m: int, w: dict) -> dict:
        out: dict = {}
        p = self.p
        for vk, cv in v.items():
            for wk, cw in w.items():
                add_into(out, self.mode_key(vk, m, wk), cv * cw, p)
        return out

    def mode(self, v, m: int, w, check: bool = True) -> ModuleVector:
        vt = v.terms if isinstance(v, ModuleVector) else v
        wt = w.terms if isinstance(w, ModuleVector) else w
        if check:
            top = max((self.V.degree(a) for a in vt), default=0) + \
                max((self.W.degree(b) for b in wt), default=0) - m - 1
            if top > self.W.max_degree and self.mode_raw(vt, m, wt):
                raise TruncationOverflow(f"mode result reaches degree {top} > {self.W.max_degree}")
        return ModuleVector(self.W, self.mode_raw(vt, m, wt))

    def d_raw(self, k: int, v: dict) -> dict:
        """D^(k) v = v_{-k-1} 1 (target must be the vacuum module itself)."""
        return self.mode_raw(v, -k - 1, {VACUUM: 1})


_operator_cache: dict = {}


def vertex_operators(V: HighestWeightModule, W: HighestWeightModule | None = None) -> VertexOperators:
    key = (id(V), id(W or V))
    ops = _operator_cache.get(key)
    if ops is None or ops.V is not V or ops.W is not (W or V):
        ops = VertexOperators(V, W)
        _operator_cache[key] = ops
    return ops


def mode_act(v: ModuleVector, n: int, w: ModuleVector, config=None) -> ModuleVector:
    """Y(v, x)_n applied to w, where v lies in a vacuum module and w in a module."""
    ops = vertex_operators(v.module, w.module)
    if config is not None and config.max_degree != w.module.max_degree:
        saved = w.module.max_degree
        w.module.max_degree = config.max_degree
        try:
            return ops.mode(v, n, w)
        finally:
            w.module.max_degree = saved
    return ops.mode(v, n, w)


def d_operator(k: int, v: ModuleVector, config=None) -> ModuleVector:
    if k < 0:
        raise ValueError("k must be >= 0")
    return mode_act(v, -k - 1, v.module.vacuum(), config)


def hasse_on_pbw(V: HighestWeightModule, k: int, vec: dict) -> dict:
    """D^(k) on PBW vectors through the Lie-algebra Hasse action and the
    coproduct D^(k)(xy) = sum_i D^(k-i)x D^(i)y, with D^(k)1 = d_{k,0} 1."""
    out: dict = {}
    p = V.p
    for key, c in vec.items():
        add_into(out, _hasse_key(V, k, key[0]), c, p)
    return out


def _hasse_key(V, k, mono, _cache={}):
    ck = (id(V), k, mono)
    hit = _cache.get(ck)
    if hit is not None:
        return hit
    if not mono:
        res = {VACUUM: 1} if k == 0 else {}
    else:
        g, rest = mono[0], mono[1:]
        res = {}
        for i in range(k + 1):
            tail = _hasse_key(V, i, rest)
            if not tail:
                continue
            for h, ch in V.lie.hasse_gen(k - i, g).items():
                add_into(res, V.act_raw(h, tail), ch, V.p)
    _cache[ck] = res
    return res


# -- identity checks -------------------------------------------------------

def _key_degree(module, vec):
    return max((module.degree(k) for k in vec), default=0)


def check_skew_symmetry(u, v, window, config=None, cap=None) -> Report:
    """u_n v = sum_{j>=0} (-1)^{n+j+1} D^(j)(v_{n+j} u) for n in the window."""
    V = u.module
    ops = vertex_operators(V)
    p = V.p
    cap = V.max_degree if cap is None else cap
    report = Report("skew-symmetry", {"u": repr(u), "v": repr(v), "window": list(window)})
    du, dv = _key_degree(V, u.terms), _key_degree(V, v.terms)
    bad, done, skipped = [], 0, 0
    for n in range(window[0], window[1] + 1):
        if du + dv - n - 1 > cap:
            skipped += 1
            continue
        lhs = ops.mode_raw(u.terms, n, v.terms)
        rhs: dict = {}
        j = 0
        while dv + du - n - j - 1 >= 0:
            inner = ops.mode_raw(v.terms, n + j, u.terms)
            if inner:
                add_into(rhs, ops.d_raw(j, inner), (-1) ** (n + j + 1), p)
            j += 1
        done += 1
        if lhs != rhs:
            bad.append({"n": n, "lhs": V.fmt(lhs), "rhs": V.fmt(rhs)})
    report.add("skew symmetry Y(u,x)v = e^{xD}Y(v,-x)u", not bad, bad[:3] or None,
               coefficients=done, skipped_above_cap=skipped, cap=cap)
    return report


def check_conjugation(v, window, zmax: int, probes, config=None, cap=None) -> Report:
    """sum_{a+b=r} (-1)^b D^(a) v_n D^(b) w = (D^(r) v)_n w = binom(r-n-1, r) v_{n-r} w."""
    V = v.module
    ops = vertex_operators(V)
    p = V.p
    cap = V.max_degree if cap is None else cap
    report = Report("conjugation", {"v": repr(v), "window": list(window), "zmax": zmax})
    dv = _key_degree(V, v.terms)
    bad, done, skipped = [], 0, 0
    for w in probes:
        wt = w.terms if isinstance(w, ModuleVector) else w
        dw = _key_degree(V, wt)
        for r in range(zmax + 1):
            dvr = ops.d_raw(r, v.terms)
            for n in range(window[0], window[1] + 1):
                if dv + dw + r - n - 1 > cap:
                    skipped += 1
                    continue
                lhs: dict = {}
                for b in range(r + 1):
                    inner = ops.mode_raw(v.terms, n, ops.d_raw(b, wt))
                    add_into(lhs, ops.d_raw(r - b, inner), (-1) ** b, p)
                middle = ops.mode_raw(dvr, n, wt)
                right = {k: c * binom_mod(r - n - 1, r, p) % p
                         for k, c in ops.mode_raw(v.terms, n - r, wt).items()}
                right = {k: c for k, c in right.items() if c}
                done += 1
                if not (lhs == middle == right):
                    bad.append({"r": r, "n": n, "w": V.fmt(wt)})
    report.add("conjugation e^{zD}Y(v,x)e^{-zD} = Y(e^{zD}v,x) = e^{z d/dx}Y(v,x)", not bad,
               bad[:3] or None, coefficients=done, skipped_above_cap=skipped, cap=cap)
    return report


def check_commutator(a, b, window, probes, config=None, cap=None) -> Report:
    """[a_m, b_n] w = sum_i binom(m, i) (a_i b)_{m+n-i} w."""
    V = a.module
    ops = vertex_operators(V)
    p = V.p
    cap = V.max_degree if cap is None else cap
    report = Report("commutator", {"a": repr(a), "b": repr(b), "window": list(window)})
    da, db = _key_degree(V, a.terms), _key_degree(V, b.terms)
    bad, done, skipped = [], 0, 0
    for w in probes:
        wt = w.terms if isinstance(w, ModuleVector) else w
        dw = _key_degree(V, wt)
        for m in range(window[0], window[1] + 1):
            for n in range(window[0], window[1] + 1):
                if da + db + dw - m - n - 2 > cap or max(db + dw - n - 1, da + dw - m - 1) > cap:
                    skipped += 1
                    continue
                lhs = ops.mode_raw(a.terms, m, ops.mode_raw(b.terms, n, wt))
                add_into(lhs, ops.mode_raw(b.terms, n, ops.mode_raw(a.terms, m, wt)), -1, p)
                rhs: dict = {}
                i = 0
                while da + db - i - 1 >= 0:
                    coeff = binom_mod(m, i, p)
                    if coeff:
                        aib = ops.mode_raw(a.terms, i, b.terms)
                        if aib:
                            add_into(rhs, ops.mode_raw(aib, m + n - i, wt), coeff, p)
                    i += 1
                done += 1
                if lhs != rhs:
                    bad.append({"m": m, "n": n, "w": V.fmt(wt)})
    report.add("Borcherds commutator formula", not bad, bad[:3] or None,
               coefficients=done, skipped_above_cap=skipped, cap=cap)
    return report


def jacobi_sides(ops: VertexOperators, u: dict, v: dict, w: dict, m: int, n: int, k: int):
    V, p = ops.V, ops.p
    du, dv, dw = (_key_degree(V, x) for x in (u, v, w))
    lhs: dict = {}
    i = 0
    while True:
        live = False
        coeff = (-1) ** i * binom_mod(m, i, p)
        if dv + dw - k - i - 1 >= 0:
            live = True
            if coeff:
                add_into(lhs, ops.mode_raw(u, m + n - i, ops.mode_raw(v, k + i, w)), coeff, p)
        if du + dw - n - i - 1 >= 0:
            live = True
            if coeff:
                add_into(lhs, ops.mode_raw(v, m + k - i, ops.mode_raw(u, n + i, w)),
                         -coeff * (-1) ** m, p)
        if not live or (m >= 0 and i >= m):
            break
        i += 1
    rhs: dict = {}
    i = 0
    while du + dv - m - i - 1 >= 0:
        coeff = binom_mod(n, i, p)
        if coeff:
            uv = ops.mode_raw(u, m + i, v)
            if uv:
                add_into(rhs, ops.mode_raw(uv, n + k - i, w), coeff, p)
        i += 1
    return lhs, rhs


def check_jacobi_coefficient(u, v, w, window, config=None, cap=None) -> Report:
    V = u.module
    ops = vertex_operators(V)
    cap = V.max_degree if cap is None else cap
    report = Report("jacobi", {"u": repr(u), "v": repr(v), "w": repr(w), "window": list(window)})
    du, dv, dw = (_key_degree(V, x.terms) for x in (u, v, w))
    bad, done, skipped = [], 0, 0
    rng = range(window[0], window[1] + 1)
    for m in rng:
        for n in rng:
            for k in rng:
                top = du + dv + dw - m - n - k - 2
                inner = max(dv + dw - k - 1, du + dw - n - 1, du + dv - m - 1)
                if top > cap or inner > cap:
                    skipped += 1
                    continue
                lhs, rhs = jacobi_sides(ops, u.terms, v.terms, w.terms, m, n, k)
                done += 1
                if lhs != rhs:
                    bad.append({"m": m, "n": n, "k": k})
    report.add("coefficient form of the Jacobi identity", not bad, bad[:3] or None,
               coefficients=done, skipped_above_cap=skipped, cap=cap)
    return report


def _power(ops, vec_terms, m, times, w):
    out = w
    for _ in range(times):
        out = ops.mode_raw(vec_terms, m, out)
        if not out:
            break
    return out


def check_power_field(a, n: int, window: int, probes, config=None, cap=None) -> Report:
    """Y((a_{-n})^p 1, x) = sum_j binom(n+j-1, j)(a_{-n-j})^p x^{jp}
                           + sum_j (-1)^{n-1} binom(n+j-1, j)(a_j)^p x^{(-n-j)p}
    as operators, for a with a_i a in F1 (i >= 0)."""
    V = a.module
    ops = vertex_operators(V)
    p = V.p
    cap = 10 ** 9 if cap is None else cap
    report = Report("power-field", {"a": repr(a), "n": n, "window": window, "p": int(p)})
    da = _key_degree(V, a.terms)
    ok_pre = True
    for i in range(0, 2 * da + 1):
        prod = ops.mode_raw(a.terms, i, a.terms)
        if any(k != VACUUM for k in prod):
            ok_pre = False
    report.add("precondition a_i a in F1 for i >= 0", ok_pre, None)
    if not ok_pre:
        return report
    state = _power(ops, a.terms, -n, p, {VACUUM: 1})
    ds = _key_degree(V, state)
    bad, zero_bad, done = [], [], 0
    for w in probes:
        wt = w.terms if isinstance(w, ModuleVector) else w
        dw = _key_degree(V, wt)
        for r in range(-window, window + 1):
            if ds + dw + r > cap:
                continue
            lhs = ops.mode_raw(state, -r - 1, wt)
            rhs: dict = {}
            if r % p == 0:
                q = r // p
                if q >= 0:
                    add_into(rhs, _power(ops, a.terms, -n - q, p, wt), binom_mod(n + q - 1, q, p), p)
                j = -n - q
                if j >= 0:
                    add_into(rhs, _power(ops, a.terms, j, p, wt),
                             (-1) ** (n - 1) * binom_mod(n + j - 1, j, p), p)
            done += 1
            if lhs != rhs:
                (bad if r % p == 0 else zero_bad).append({"r": r, "w": V.fmt(wt)})
    report.add("coefficients x^r with p | r match the p-th power formula", not bad, bad[:3] or None,
               coefficients=done)
    report.add("coefficients x^r with p not dividing r vanish", not zero_bad, zero_bad[:3] or None)
    return report


def pcenter_state(V: HighestWeightModule, n: int) -> dict:
    """(L_{-n}^p - d_{p|n} L_{-np}) 1 in the Virasoro vacuum module."""
    p = V.p
    vec = V.apply_word_raw((("L", -n),) * p, {VACUUM: 1})
    if n % p == 0:
        add_into(vec, V.act_gen(("L", -n * p), VACUUM), -1, p)
    return vec


def _pcenter_operator(V, idx: int, w: dict) -> dict:
    """(L_idx^p - d_{p|idx} L_{idx p}) w."""
    p = V.p
    out = V.apply_word_raw((("L", idx),) * p, w)
    if idx % p == 0:
        add_into(out, V.act_raw(("L", idx * p), w), -1, p)
    return out


def check_virasoro_pcenter_field(n: int, V: HighestWeightModule, window: int, probes,
                                 cap=None) -> Report:
    """Coefficientwise check of the field of (L_{-n}^p - d L_{-np})1 on probe vectors."""
    p = V.p
    ops = vertex_operators(V)
    cap = 10 ** 9 if cap is None else cap
    state = pcenter_state(V, n)
    ds = n * p
    report = Report("pcenter-field", {"n": n, "p": int(p), "window": window,
                                      "c": V.params.get("c")})
    bad, zero_bad, done = [], [], 0
    for w in probes:
        wt = w.terms if isinstance(w, ModuleVector) else w
        dw = _key_degree(V, wt)
        for r in range(-window, window + 1):
            if ds + dw + r > cap:
                continue
            lhs = ops.mode_raw(state, -r - 1, wt)
            rhs: dict = {}
            if r % p == 0:
                q = r // p
                if q >= 0:
                    coeff = (-1) ** q * binom_mod(-n + 1, q, p)
                    add_into(rhs, _pcenter_operator(V, -n - q, wt), coeff, p)
                j = -n + 1 - q
                if j >= 0:
                    coeff = (-1) ** ((-n - j) % 2) * binom_mod(-n + 1, j, p)
                    add_into(rhs, _pcenter_operator(V, j - 1, wt), coeff, p)
            done += 1
            if lhs != rhs:
                (bad if r % p == 0 else zero_bad).append({"r": r, "w": V.fmt(wt)})
    report.add(f"field of (L(-{n})^p - d L(-{n}p))1: coefficients with p | r", not bad,
               bad[:3] or None, coefficients=done, n=n)
    report.add(f"field of (L(-{n})^p - d L(-{n}p))1: coefficients with p not dividing r vanish",
               not zero_bad, zero_bad[:3] or None, n=n)
    return report


def check_pcenter_hasse_values(n: int, mmax: int, V: HighestWeightModule) -> Report:
    """D^(m) of the p-center vector: (-1)^k binom(-n+1, k)(L_{-n-k}^p - d ...)1 if m = kp, else 0."""
    p = V.p
    ops = vertex_operators(V)
    state = pcenter_state(V, n)
    report = Report("pcenter-hasse", {"n": n, "p": int(p), "mmax": mmax})
    bad = []
    for m in range(mmax + 1):
        lhs = ops.d_raw(m, state)
        if m % p == 0:
            k = m // p
            rhs = {kk: c * (-1) ** k * binom_mod(-n + 1, k, p) % p
                   for kk, c in pcenter_state(V, n + k).items()}
            rhs = {kk: c for kk, c in rhs.items() if c}
        else:
            rhs = {}
        if lhs != rhs:
            bad.append({"m": m, "lhs": V.fmt(lhs), "rhs": V.fmt(rhs)})
    report.add(f"D^(m) values on (L(-{n})^p - d L(-{n}p))1", not bad, bad[:3] or None,
               n=n, mmax=mmax)
    return report
