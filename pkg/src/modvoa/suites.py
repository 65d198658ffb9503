"""Verification suites and tables shared by the command line and the acceptance tests."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .c2 import affine_v0, c2_quotient_algebra, c2_span, check_c2_ideal, verify_c2_cofinite, virasoro_v0
from .enveloping import (EnvelopingAlgebra, UEAElement, cmn_identity_check, cmn_multiset_check,
                         is_central)
from .liealg import (AffineAlgebra, StructureConstants, VirasoroAlgebra, load_structure_file,
                     sl2_structure, verify_b_module_lie, verify_restricted_axioms)
from .modes import (check_commutator, check_conjugation, check_pcenter_hasse_values,
                    check_jacobi_coefficient, check_power_field, check_skew_symmetry,
                    check_virasoro_pcenter_field, vertex_operators)
from .report import Report
from .scalars import Prime, verify_appendix_identities, verify_lucas_congruences
from .vacuum import (VACUUM, IdealDescription, ModuleVector, affine_vacuum, build_graded_module,
                     ideal_graded_span, maximal_graded_submodule, maximal_submodule_by_monomials,
                     omega_membership, virasoro_vacuum)
from .zhu import (classify_irreducibles_u_sl2, omega_W_action_check, sl2_irreducible_action,
                  verify_zhu_affine, verify_zhu_vir)

SUITES = ("appendix", "lucas", "restricted", "cmn", "pcenter-field", "zhu-vir", "zhu-affine",
          "c2", "singular", "axioms")


@dataclass
class RunConfig:
    p: int = 3
    algebra: str = "virasoro"
    c: int = 0
    level: int = 0
    mu: int = 0
    chi: dict = field(default_factory=dict)
    max_degree: int = 9
    suite: str = "all"
    output: str = "text"
    seed: int = 0
    structure_file: str | None = None

    def __post_init__(self):
        self.p = Prime(self.p)
        if self.algebra not in ("virasoro", "sl2", "custom"):
            raise ValueError(f"unknown algebra {self.algebra!r}")
        if self.algebra == "custom" and not self.structure_file:
            raise ValueError("algebra 'custom' needs a structure file")
        if self.algebra == "virasoro" and self.chi:
            raise ValueError("chi applies to affine algebras only")
        if self.algebra != "virasoro" and self.mu:
            raise ValueError("mu applies to the Virasoro algebra only")
        if self.max_degree < 0:
            raise ValueError("max degree must be non-negative")
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")

    @property
    def virasoro(self) -> bool:
        return self.algebra == "virasoro"

    def structure(self) -> StructureConstants:
        if self.structure_file:
            s = load_structure_file(self.structure_file, validate=False)
            if s.p != self.p:
                raise ValueError(f"structure file is over F_{int(s.p)}, not F_{int(self.p)}")
            return s
        return sl2_structure(self.p)

    def describe(self) -> dict:
        out = {"p": int(self.p), "algebra": self.algebra, "max_degree": self.max_degree,
               "seed": self.seed}
        if self.virasoro:
            out.update(c=self.c % self.p, mu=self.mu % self.p)
        else:
            out.update(level=self.level % self.p, chi=dict(self.chi))
        if self.structure_file:
            out["structure_file"] = self.structure_file
        return out


def _merge(name: str, cfg: RunConfig, reports) -> Report:
    out = Report(name, cfg.describe())
    for r in reports:
        for check in r.checks:
            check.params = {"from": r.suite, **check.params}
        out.extend(r)
    return out


# -- individual suites --------------------------------------------------------

def suite_appendix(cfg: RunConfig) -> Report:
    r = verify_appendix_identities(cfg.p, range(-12, 13), range(-12, 13), range(0, 11))
    return _merge("appendix", cfg, [r])


def suite_lucas(cfg: RunConfig) -> Report:
    return _merge("lucas", cfg, [verify_lucas_congruences(cfg.p, 25, 25)])


def suite_restricted(cfg: RunConfig) -> Report:
    if cfg.virasoro:
        vir = VirasoroAlgebra(cfg.p)
        reports = [verify_restricted_axioms(vir, {"window": (-8, 8), "random": 10, "seed": cfg.seed}),
                   verify_b_module_lie(vir, {"window": (-6, 6), "kmax": 6})]
    else:
        structure = cfg.structure()
        reports = [verify_restricted_axioms(structure, {"random": 20, "seed": cfg.seed})]
        if structure.p_map is not None and not any(c.status != "PASS" for c in reports[0].checks):
            reports.append(verify_b_module_lie(AffineAlgebra(structure), {"window": (-4, 4), "kmax": 5}))
    return _merge("restricted", cfg, reports)


def _pcenter_uea(U: EnvelopingAlgebra, n: int) -> UEAElement:
    p = U.p
    z = U.straighten((("L", -n),) * p)
    if n % p == 0:
        z = z - U.gen(("L", -n * p))
    return z


def centrality_report(p, ns, srange=(-6, 6)) -> Report:
    U = EnvelopingAlgebra(VirasoroAlgebra(p))
    report = Report("centrality", {"p": int(p), "n": list(ns), "s": list(srange)})
    gens = [("L", s) for s in range(srange[0], srange[1] + 1)]
    for n in ns:
        ok, witness = is_central(_pcenter_uea(U, n), gens)
        report.add(f"[L(s), L(-{n})^p - d L(-{n}p)] = 0 in U(Vir)", ok, witness, n=n)
    return report


def random_vir_elements(U: EnvelopingAlgebra, count: int, rng: random.Random, window=4) -> list:
    p = U.p
    out = []
    for _ in range(count):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[("L", rng.randint(-window, window))] = rng.randrange(1, p)
        if rng.random() < 0.5:
            terms[("c",)] = rng.randrange(1, p)
        out.append(UEAElement(U, {(g,): c for g, c in terms.items()}))
    return out


def suite_cmn(cfg: RunConfig) -> Report:
    p = cfg.p
    rng = random.Random(cfg.seed)
    ns = list(range(2, max(2, 12 // p) + 1))
    reports = [centrality_report(p, ns)]
    U = EnvelopingAlgebra(VirasoroAlgebra(p))
    tuples = 25 if p == 3 else 3
    bad = []
    for t in range(tuples):
        elems = random_vir_elements(U, p, rng)
        r = cmn_identity_check(elems)
        if not r.ok:
            bad.append({"tuple": t, "elements": [repr(x) for x in elems]})
    cm = Report("cmn", {"p": int(p), "tuples": tuples, "seed": cfg.seed})
    cm.add(f"symmetrization over S_{int(p)} equals nested brackets on random tuples", not bad,
           bad[:3] or None, tuples=tuples)
    reports.append(cm)
    for r_vec in ((p - 1, 1), (1, p - 1)):
        elems = random_vir_elements(U, 2, rng)
        reports.append(cmn_multiset_check(elems, list(r_vec)))
    return _merge("cmn", cfg, reports)


def suite_pcenter_field(cfg: RunConfig) -> Report:
    reports = []
    if cfg.virasoro:
        N = cfg.max_degree
        V = virasoro_vacuum(cfg.p, cfg.c, N)
        probes = [{k: 1} for d in range(N + 1) for k in V.basis(d)]
        for n in (2, 3):
            reports.append(check_virasoro_pcenter_field(n, V, N, probes))
            reports.append(check_pcenter_hasse_values(n, 3 * cfg.p, V))
    else:
        structure = cfg.structure()
        N = min(cfg.max_degree, 5)
        V = affine_vacuum(structure, cfg.level, N)
        probes = [{k: 1} for d in range(N + 1) for k in V.basis(d)]
        for i, name in enumerate(structure.names):
            a = ModuleVector(V, {((("a", -1, i),), 0): 1})
            reports.append(check_power_field(a, 1, 6, probes))
    return _merge("pcenter-field", cfg, reports)


def suite_zhu_vir(cfg: RunConfig) -> Report:
    p = cfg.p
    nmax = max(2, cfg.max_degree // p)
    reports = [verify_zhu_vir(p, cfg.c, nmax, seed=cfg.seed)]
    for lam in range(p):
        W = build_graded_module("virasoro", {"c": cfg.c, "weight": lam}, 6, p=p)
        reports.append(omega_W_action_check(W))
    return _merge("zhu-vir", cfg, reports)


def suite_zhu_affine(cfg: RunConfig) -> Report:
    structure = cfg.structure()
    reports = [verify_zhu_affine(structure, cfg.level, 1, seed=cfg.seed)]
    if structure.names == ["e", "f", "h"]:
        reports.append(classify_irreducibles_u_sl2(cfg.p))
        for lam in range(cfg.p):
            W = build_graded_module("affine", {"level": cfg.level,
                                               "action": sl2_irreducible_action(cfg.p, lam)},
                                    3, structure=structure)
            reports.append(omega_W_action_check(W))
    return _merge("zhu-affine", cfg, reports)


def suite_c2(cfg: RunConfig) -> Report:
    """Cofiniteness is checked for V0 (mu = 0, chi = 0) whatever the flags say."""
    p = cfg.p
    if cfg.virasoro:
        N = max(cfg.max_degree, 2 * p)
        V0 = virasoro_v0(p, cfg.c, N)
        V = V0[0]
        full = c2_span(V)
        _, table = c2_quotient_algebra(V, sub=full)
        shape = Report("c2-shape", {"p": int(p), "max_degree": N})
        dims = [len(V.basis(d)) - full.dims[d] for d in range(N + 1)]
        expected = [1 if d % 2 == 0 else 0 for d in range(N + 1)]
        shape.add("V_Vir/C2 has dimension 1 in even degrees and 0 in odd degrees", dims == expected,
                  None, dims=dims)
        reports = [table, shape, check_c2_ideal(V, full, seed=cfg.seed), verify_c2_cofinite(V0)]
    else:
        structure = cfg.structure()
        N = min(max(cfg.max_degree, p), p + 1)
        V0 = affine_v0(structure, cfg.level, N)
        reports = [verify_c2_cofinite(V0), check_c2_ideal(V0[0], c2_span(V0[0]), seed=cfg.seed)]
    return _merge("c2", cfg, reports)


def singular_vector_report(structure: StructureConstants, level: int) -> Report:
    """e(-1)^(l+1) 1 for the highest-root vector e of sl2-type data (index 0)."""
    p = structure.p
    ell = level % p
    N = ell + 1
    V = affine_vacuum(structure, ell, N)
    report = Report("singular", {"p": int(p), "level": ell})
    e = structure.index("e") if "e" in structure.names else 0
    f = structure.index("f") if "f" in structure.names else 1
    v = V.apply_word_raw((("a", -1, e),) * (ell + 1), {VACUUM: 1})
    report.add(f"e(0) kills e(-1)^{ell + 1} 1", not V.act_raw(("a", 0, e), v), None)
    report.add(f"f(1) kills e(-1)^{ell + 1} 1", not V.act_raw(("a", 1, f), v), None)
    report.add("all positive modes kill it (a(1), a(2) for every basis a)", omega_membership(v, V), None)
    J = maximal_graded_submodule(V)
    report.add(f"e(-1)^{ell + 1} 1 lies in the raising radical J at degree {ell + 1}",
               J.contains(v), None, J_dims=J.dims)
    if ell >= 1:
        u = V.apply_word_raw((("a", -1, e),) * ell, {VACUUM: 1})
        report.add(f"e(-1)^{ell} 1 is not in J", not J.contains(u), None)
    return report


def radical_oracle_report(V) -> Report:
    J = maximal_graded_submodule(V)
    oracle = maximal_submodule_by_monomials(V, V.max_degree)
    report = Report("radical", {**V.params, "max_degree": V.max_degree})
    report.add("raising radical agrees with the monomial-annihilator oracle", J.dims == oracle, None,
               J_dims=J.dims, oracle_dims=oracle)
    return report


def suite_singular(cfg: RunConfig) -> Report:
    if cfg.virasoro:
        V = virasoro_vacuum(cfg.p, cfg.c, min(cfg.max_degree, 9))
        return _merge("singular", cfg, [radical_oracle_report(V)])
    structure = cfg.structure()
    reports = [singular_vector_report(structure, cfg.level)]
    reports.append(radical_oracle_report(affine_vacuum(structure, cfg.level, min(cfg.max_degree, 3))))
    return _merge("singular", cfg, reports)


def axiom_report(V, triples: int = 100, max_state_degree: int = 5, window=(-4, 4),
                 seed: int = 0, cap: int | None = None) -> Report:
    """Skew symmetry, conjugation, the commutator formula and the coefficient
    Jacobi identity on seeded random homogeneous triples.  Coefficients whose
    output or intermediate degree exceeds ``cap`` are skipped and counted; the
    default cap is large enough that nothing in the window is skipped."""
    rng = random.Random(seed)
    p = V.p
    if cap is None:
        cap = 3 * max_state_degree + 3 * max(abs(window[0]), abs(window[1]))
    pool = {d: V.basis(d) for d in range(max_state_degree + 1)}
    pool = {d: b for d, b in pool.items() if b}

    def rand_vec():
        d = rng.choice(sorted(pool))
        keys = rng.sample(pool[d], min(len(pool[d]), rng.randint(1, 2)))
        return ModuleVector(V, {k: rng.randrange(1, p) for k in keys})

    names = ("skew symmetry", "conjugation", "Borcherds commutator formula", "coefficient Jacobi")
    totals = {n: [0, 0] for n in names}
    bad = {n: [] for n in names}
    for t in range(triples):
        u, v, w = rand_vec(), rand_vec(), rand_vec()
        parts = (check_skew_symmetry(u, v, window, cap=cap),
                 check_conjugation(u, window, 2, [w], cap=cap),
                 check_commutator(u, v, window, [w], cap=cap),
                 check_jacobi_coefficient(u, v, w, window, cap=cap))
        for name, r in zip(names, parts):
            check = r.checks[0]
            totals[name][0] += check.params["coefficients"]
            totals[name][1] += check.params["skipped_above_cap"]
            if check.status != "PASS":
                bad[name].append({"triple": t, "u": repr(u), "v": repr(v), "w": repr(w),
                                  "witness": check.witness})
    report = Report("axioms", {**V.params, "triples": triples, "max_state_degree": max_state_degree,
                               "window": list(window), "seed": seed, "cap": cap})
    for name in names:
        report.add(name, not bad[name], bad[name][:2] or None, coefficients=totals[name][0],
                   skipped_above_cap=totals[name][1])
    return report


def suite_axioms(cfg: RunConfig, triples: int = 100) -> Report:
    """Virasoro runs uncapped; affine coefficients above degree 8 are skipped for time."""
    if cfg.virasoro:
        V = virasoro_vacuum(cfg.p, cfg.c, cfg.max_degree)
        return _merge("axioms", cfg, [axiom_report(V, triples, seed=cfg.seed)])
    V = affine_vacuum(cfg.structure(), cfg.level, min(cfg.max_degree, 6))
    return _merge("axioms", cfg, [axiom_report(V, triples, seed=cfg.seed, cap=8)])


SUITE_RUNNERS = {
    "appendix": suite_appendix,
    "lucas": suite_lucas,
    "restricted": suite_restricted,
    "cmn": suite_cmn,
    "pcenter-field": suite_pcenter_field,
    "zhu-vir": suite_zhu_vir,
    "zhu-affine": suite_zhu_affine,
    "c2": suite_c2,
    "singular": suite_singular,
    "axioms": suite_axioms,
}

_VIRASORO_ONLY = {"cmn", "zhu-vir"}
_AFFINE_ONLY = {"zhu-affine"}


def applicable_suites(cfg: RunConfig) -> list:
    if cfg.suite != "all":
        return [cfg.suite]
    skip = _AFFINE_ONLY if cfg.virasoro else _VIRASORO_ONLY
    return [s for s in SUITES if s not in skip]


def run_suites(cfg: RunConfig) -> list:
    return [SUITE_RUNNERS[name](cfg) for name in applicable_suites(cfg)]


# -- tables ---------------------------------------------------------------------

def dims_table(cfg: RunConfig) -> dict:
    """Graded dimensions of V, the chosen p-center ideal, V0 = V/ideal, the raising
    radical J and L = V/J.  For a non-graded ideal the ideal column is the
    top-degree filtration count."""
    N = cfg.max_degree
    if cfg.virasoro:
        V = virasoro_vacuum(cfg.p, cfg.c, N)
        ideal = IdealDescription("I", mu=cfg.mu % cfg.p)
        label = "I_mu"
    else:
        V = affine_vacuum(cfg.structure(), cfg.level, N)
        ideal = IdealDescription("J", chi={k: v % cfg.p for k, v in cfg.chi.items()})
        label = "J_chi"
    sub = ideal_graded_span(V, ideal)
    J = maximal_graded_submodule(V)
    vd = V.dims()
    rows = []
    for d in range(N + 1):
        rows.append({"degree": d, "V": vd[d], label: sub.dims[d], "V0": vd[d] - sub.dims[d],
                     "J": J.dims[d], "L": vd[d] - J.dims[d]})
    return {"columns": ["degree", "V", label, "V0", "J", "L"], "rows": rows,
            "params": cfg.describe(), "ideal_graded": ideal.is_graded()}


def classify_table(cfg: RunConfig) -> dict:
    p = cfg.p
    N = min(cfg.max_degree, 6)
    rows = []
    if cfg.virasoro:
        for lam in range(p):
            W = build_graded_module("virasoro", {"c": cfg.c, "weight": lam}, N, p=p)
            rows.append({"module": f"L_Vir({cfg.c % p},{lam})", "weight": lam, "top_dim": 1,
                         "dims": W.dims()})
        columns = ["module", "weight", "top_dim", "dims"]
    else:
        structure = cfg.structure()
        if structure.names != ["e", "f", "h"]:
            raise ValueError("classification is implemented for sl2")
        N = min(N, 3)
        for lam in range(p):
            W = build_graded_module("affine", {"level": cfg.level,
                                               "action": sl2_irreducible_action(p, lam)},
                                    N, structure=structure)
            rows.append({"module": f"L({cfg.level % p},L({lam}))", "weight": lam, "top_dim": lam + 1,
                         "dims": W.dims()})
        columns = ["module", "weight", "top_dim", "dims"]
    return {"columns": columns, "rows": rows, "params": {**cfg.describe(), "table_degree": N}}
