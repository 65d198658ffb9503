"""Degree-truncated highest-weight modules: vacuum modules of the Virasoro and
affine algebras, (generalized) Verma modules, p-center ideals, quotients and
maximal graded submodules.

A basis vector is a key ``(mono, j)``: ``mono`` is a sorted tuple of creation
generators and ``j`` indexes a basis vector of the degree-0 space (always 0 for
vacuum modules).  Vectors are dictionaries ``{key: residue}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .liealg import (CENTRAL_C, CENTRAL_K, AffineAlgebra, LieAlgebra, StructureConstants,
                     VirasoroAlgebra, add_into)
from .linalg import RowSpace, kernel
from .scalars import FpScalar, Prime

VACUUM = ((), 0)


class TruncationOverflow(ValueError):
    """Raised when a requested result would live above the truncation degree."""


@dataclass(frozen=True)
class TruncationConfig:
    max_degree: int
    parameter: int = 0

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")


class HighestWeightModule:
    """Module induced from a finite-dimensional degree-0 space.

    ``creation(g)`` says whether g is a lowering generator kept in PBW words;
    ``top_action(g, j)`` gives the action of a non-creation generator on the
    j-th degree-0 basis vector as ``{j': coeff}``.
    """

    def __init__(self, lie: LieAlgebra, creation, top_action, top_dim: int,
                 central_values: dict, max_degree: int, kind: str, params: dict):
        self.lie = lie
        self.p = lie.p
        self.creation = creation
        self.top_action = top_action
        self.top_dim = top_dim
        self.central_values = {g: int(v) % self.p for g, v in central_values.items()}
        self.max_degree = max_degree
        self.kind = kind
        self.params = params
        self._cache: dict = {}
        self._basis: dict = {}

    # -- basic structure -------------------------------------------------
    def degree(self, key) -> int:
        return sum(-g[1] for g in key[0])

    def creation_generators(self, d: int) -> list:
        """Creation generators of degree exactly d."""
        if isinstance(self.lie, VirasoroAlgebra):
            g = ("L", -d)
            return [g] if self.creation(g) else []
        return [g for g in (("a", -d, i) for i in range(self.lie.structure.dim)) if self.creation(g)]

    def basis(self, d: int) -> list:
        if d in self._basis:
            return self._basis[d]
        if d < 0:
            return []
        monos = _multisets(self, d)
        keys = [(m, j) for m in monos for j in range(self.top_dim)]
        keys.sort()
        self._basis[d] = keys
        return keys

    def dims(self, max_degree: int | None = None) -> list:
        n = self.max_degree if max_degree is None else max_degree
        return [len(self.basis(d)) for d in range(n + 1)]

    # -- action -------------------------------------------------------------
    def act_gen(self, g, key) -> dict:
        """g . key with no truncation check (results are exact at any degree)."""
        ck = (g, key)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        mono, j = key
        p = self.p
        if g in self.central_values:
            val = self.central_values[g]
            res = {key: val} if val else {}
        elif self.creation(g) and (not mono or g <= mono[0]):
            res = {((g,) + mono, j): 1}
        elif not mono:
            res = {((), jj): c for jj, c in self.top_action(g, j).items() if c % p}
        else:
            head, rest = mono[0], (mono[1:], j)
            res = {}
            for k, c in self.act_gen(g, rest).items():
                add_into(res, self.act_gen(head, k), c, p)
            for x, cx in self.lie.bracket_gens(g, head).items():
                for k, c in self.act_gen(x, rest).items():
                    v = (res.get(k, 0) + cx * c) % p
                    if v:
                        res[k] = v
                    else:
                        res.pop(k, None)
        self._cache[ck] = res
        return res

    def act_raw(self, g, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            add_into(out, self.act_gen(g, key), c, self.p)
        return out

    def apply_word_raw(self, word, vec: dict) -> dict:
        out = vec
        for g in reversed(tuple(word)):
            out = self.act_raw(g, out)
        return out

    def check_degree(self, vec: dict):
        for key in vec:
            if self.degree(key) > self.max_degree:
                raise TruncationOverflow(
                    f"result has degree {self.degree(key)} > truncation {self.max_degree}")

    def act(self, g, vec) -> "ModuleVector":
        terms = vec.terms if isinstance(vec, ModuleVector) else vec
        top = max((self.degree(k) for k in terms), default=0)
        if top + self.lie.degree(g) > self.max_degree:
            raise TruncationOverflow(
                f"{self.lie.fmt(g)} raises degree {top} above truncation {self.max_degree}")
        return ModuleVector(self, self.act_raw(g, terms))

    def vector(self, word=(), j: int = 0, coeff: int = 1) -> "ModuleVector":
        """word applied (left to right) to the j-th degree-0 basis vector."""
        return ModuleVector(self, {k: c * coeff for k, c in
                                   self.apply_word_raw(word, {((), j): 1}).items()})

    def vacuum(self) -> "ModuleVector":
        return ModuleVector(self, {VACUUM: 1})

    def fmt_key(self, key) -> str:
        mono, j = key
        parts = []
        i = 0
        while i < len(mono):
            k = i
            while k < len(mono) and mono[k] == mono[i]:
                k += 1
            name = self.lie.fmt(mono[i])
            parts.append(name if k - i == 1 else f"{name}^{k - i}")
            i = k
        top = "1" if self.top_dim == 1 and self.kind.endswith("vacuum") else f"v{j}"
        return "".join(parts) + top

    def fmt(self, vec: dict) -> str:
        if not vec:
            return "0"
        return " + ".join(f"{c}*{self.fmt_key(k)}" for k, c in sorted(vec.items()))


def _multisets(module: HighestWeightModule, d: int) -> list:
    """Sorted creation monomials of total degree d."""
    gens = []
    for k in range(1, d + 1):
        gens.extend((k, g) for g in module.creation_generators(k))
    gens.sort(key=lambda kg: kg[1])
    out = []

    def rec(start, remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for idx in range(start, len(gens)):
            k, g = gens[idx]
            if k <= remaining:
                prefix.append(g)
                rec(idx, remaining - k, prefix)
                prefix.pop()

    rec(0, d, [])
    return out


class ModuleVector:
    """Vector of a truncated module in its PBW-on-top basis."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms: dict):
        self.module = module
        p = module.p
        self.terms = {k: c % p for k, c in terms.items() if c % p}

    def _same(self, other):
        if not isinstance(other, ModuleVector) or other.module is not self.module:
            raise ValueError("vectors of different modules")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        add_into(out, other.terms, 1, self.module.p)
        return ModuleVector(self.module, out)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.terms)
        add_into(out, other.terms, -1, self.module.p)
        return ModuleVector(self.module, out)

    def __neg__(self):
        return ModuleVector(self.module, {k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        return ModuleVector(self.module, {k: c * int(scalar) for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {self.module.degree(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("vector is not homogeneous")
        return degs.pop() if degs else 0

    def coefficient(self, key) -> FpScalar:
        return FpScalar(self.terms.get(key, 0), self.module.p)

    def __repr__(self):
        return self.module.fmt(self.terms)


# -- module constructors -----------------------------------------------------

def virasoro_vacuum(p, c, max_degree: int, algebra: VirasoroAlgebra | None = None):
    """V_Vir(c, 0): L_n 1 = 0 for n >= -1 and c acting as the scalar c."""
    lie = algebra or VirasoroAlgebra(p)
    return HighestWeightModule(
        lie, lambda g: g[0] == "L" and g[1] <= -2, lambda g, j: {}, 1,
        {CENTRAL_C: int(c)}, max_degree, "virasoro-vacuum", {"p": int(lie.p), "c": int(c) % lie.p})


def virasoro_verma(p, c, weight, max_degree: int, algebra: VirasoroAlgebra | None = None):
    """M_Vir(c, lambda) with L_0 v = lambda v and L_n v = 0 for n >= 1."""
    lie = algebra or VirasoroAlgebra(p)
    lam = int(weight) % lie.p

    def top(g, j):
        return {0: lam} if g == ("L", 0) and lam else {}

    return HighestWeightModule(
        lie, lambda g: g[0] == "L" and g[1] <= -1, top, 1, {CENTRAL_C: int(c)}, max_degree,
        "virasoro-verma", {"p": int(lie.p), "c": int(c) % lie.p, "weight": lam})


def affine_vacuum(structure: StructureConstants, level, max_degree: int,
                  algebra: AffineAlgebra | None = None):
    """V_g^(l, 0): a(n) 1 = 0 for n >= 0 and k acting as l."""
    lie = algebra or AffineAlgebra(structure)
    return HighestWeightModule(
        lie, lambda g: g[0] == "a" and g[1] <= -1, lambda g, j: {}, 1,
        {CENTRAL_K: int(level)}, max_degree, "affine-vacuum",
        {"p": int(lie.p), "level": int(level) % lie.p})


def affine_generalized_verma(structure: StructureConstants, level, action: dict, max_degree: int,
                             algebra: AffineAlgebra | None = None):
    """M(l, U) where U is given by matrices ``action[i][row][col]`` of the basis
    elements of g (columns are input basis vectors of U)."""
    lie = algebra or AffineAlgebra(structure)
    p = lie.p
    dim_u = len(next(iter(action.values()))) if action else 1
    mats = {i: [[int(x) % p for x in row] for row in m] for i, m in action.items()}

    def top(g, j):
        if g[0] == "a" and g[1] == 0:
            m = mats.get(g[2])
            if m is None:
                return {}
            return {r: m[r][j] for r in range(dim_u) if m[r][j]}
        return {}

    return HighestWeightModule(
        lie, lambda g: g[0] == "a" and g[1] <= -1, top, dim_u, {CENTRAL_K: int(level)},
        max_degree, "affine-generalized-verma",
        {"p": int(p), "level": int(level) % p, "top_dim": dim_u})


def vacuum_basis(module: HighestWeightModule, config: TruncationConfig | None = None) -> dict:
    n = module.max_degree if config is None else config.max_degree
    return {d: module.basis(d) for d in range(n + 1)}


def act(mode, v, config: TruncationConfig | None = None):
    module = v.module
    if config is not None and config.max_degree != module.max_degree:
        saved = module.max_degree
        module.max_degree = config.max_degree
        try:
            return module.act(mode, v)
        finally:
            module.max_degree = saved
    return module.act(mode, v)


# -- subspaces ---------------------------------------------------------------

class GradedSubspace:
    """A subspace of a truncated module, stored as one reduced row space.

    ``dims[d]`` is the dimension of the degree-d component for graded
    subspaces, and the increment of the top-degree filtration otherwise.
    """

    def __init__(self, module: HighestWeightModule, graded: bool = True):
        self.module = module
        self.space = RowSpace(module.p)
        self.graded = graded
        self.dims = [0] * (module.max_degree + 1)

    def add(self, vec: dict, top_degree: int | None = None) -> bool:
        if not vec:
            return False
        grew = self.space.add(vec)
        if grew:
            d = top_degree if top_degree is not None else max(self.module.degree(k) for k in vec)
            if d < len(self.dims):
                self.dims[d] += 1
        return grew

    def contains(self, vec) -> bool:
        terms = vec.terms if isinstance(vec, ModuleVector) else vec
        return self.space.contains(terms)

    def reduce(self, vec: dict) -> dict:
        return self.space.reduce(vec)

    def component_basis(self, d: int) -> list:
        return [r for r in self.space.basis()
                if {self.module.degree(k) for k in r} == {d}]


@dataclass
class IdealDescription:
    family: str
    mu: int = 0
    chi: dict = field(default_factory=dict)
    generators: list = field(default_factory=list)

    def is_graded(self) -> bool:
        if self.family == "I":
            return self.mu == 0
        if self.family == "J":
            return all(v == 0 for v in self.chi.values())
        return True


def pcenter_generators(module: HighestWeightModule, ideal: IdealDescription) -> list:
    """Central generators of I_mu or J_chi of degree <= max_degree, as triples
    (degree, [(coeff, word), ...], label); the empty word stands for the scalar 1."""
    p = module.p
    out = []
    if ideal.family == "I":
        n = 2
        while n * p <= module.max_degree:
            parts = [(1, (("L", -n),) * p)]
            if n % p == 0:
                parts.append((-1, (("L", -n * p),)))
            if n == 2 and ideal.mu % p:
                parts.append((-pow(ideal.mu, p, p), ()))
            out.append((n * p, parts, f"L(-{n})^{int(p)}"))
            n += 1
    elif ideal.family == "J":
        lie = module.lie
        names = lie.structure.names
        m = 1
        while m * p <= module.max_degree:
            for i, name in enumerate(names):
                parts = [(1, (("a", -m, i),) * p)]
                for k, c in lie.structure.p_map[i].items():
                    parts.append((-c, (("a", -m * p, k),)))
                chi = int(ideal.chi.get(name, 0)) % p
                if m == 1 and chi:
                    parts.append((-pow(chi, p, p), ()))
                out.append((m * p, parts, f"{name}(-{m})^{int(p)}"))
            m += 1
    return out


def apply_central(module: HighestWeightModule, parts, vec: dict) -> dict:
    out: dict = {}
    for coeff, word in parts:
        add_into(out, module.apply_word_raw(word, vec), coeff, module.p)
    return out


def ideal_graded_span(module: HighestWeightModule, ideal: IdealDescription,
                      config: TruncationConfig | None = None) -> GradedSubspace:
    """Components of I_mu / J_chi up to the truncation degree, using that the
    generators are central: the span is {z u : z a generator, u a basis vector}."""
    n = module.max_degree if config is None else config.max_degree
    if ideal.family == "custom":
        return submodule_closure(module, ideal.generators)
    sub = GradedSubspace(module, graded=ideal.is_graded())
    gens = pcenter_generators(module, ideal)
    for d in range(n + 1):
        for dz, parts, _ in gens:
            if dz > d:
                continue
            for key in module.basis(d - dz):
                sub.add(apply_central(module, parts, {key: 1}), top_degree=d)
    return sub


def submodule_closure(module: HighestWeightModule, vectors) -> GradedSubspace:
    """Submodule generated by homogeneous vectors, closed under every generator
    whose result stays within the truncation (iterative closure)."""
    sub = GradedSubspace(module)
    n = module.max_degree
    queue = []
    for v in vectors:
        terms = v.terms if isinstance(v, ModuleVector) else v
        if sub.add(terms):
            queue.append(terms)
    gens = _all_generators(module)
    while queue:
        vec = queue.pop()
        d = max(module.degree(k) for k in vec)
        for g in gens:
            dg = module.lie.degree(g)
            if d + dg > n or d + dg < 0:
                continue
            img = module.act_raw(g, vec)
            if img and sub.add(img):
                queue.append(img)
    return sub


def _all_generators(module: HighestWeightModule) -> list:
    n = module.max_degree
    lie = module.lie
    if isinstance(lie, VirasoroAlgebra):
        return [("L", k) for k in range(-n, n + 1)]
    return [("a", k, i) for k in range(-n, n + 1) for i in range(lie.structure.dim)]


def raising_generators(module: HighestWeightModule, d: int) -> list:
    """Generators of degree -k for 1 <= k <= d."""
    lie = module.lie
    if isinstance(lie, VirasoroAlgebra):
        return [("L", k) for k in range(1, d + 1)]
    return [("a", k, i) for k in range(1, d + 1) for i in range(lie.structure.dim)]


class QuotientModule:
    """A truncated module modulo a subspace, with canonical coset representatives."""

    def __init__(self, module: HighestWeightModule, sub: GradedSubspace, name: str = "quotient"):
        self.module = module
        self.sub = sub
        self.p = module.p
        self.name = name
        self.max_degree = module.max_degree

    def dims(self) -> list:
        amb = self.module.dims()
        return [a - s for a, s in zip(amb, self.sub.dims)]

    def reduce(self, vec) -> dict:
        terms = vec.terms if isinstance(vec, ModuleVector) else vec
        return self.sub.reduce(terms)

    def act(self, g, vec) -> dict:
        terms = vec.terms if isinstance(vec, ModuleVector) else vec
        return self.reduce(self.module.act(g, terms).terms)

    def is_zero(self, vec) -> bool:
        return not self.reduce(vec)

    def quotient_basis(self, d: int) -> list:
        """Basis keys of degree d that are not pivots of the subspace."""
        return [k for k in self.module.basis(d) if k not in self.sub.space.rows]


def quotient_module(module: HighestWeightModule, sub: GradedSubspace, name="quotient") -> QuotientModule:
    return QuotientModule(module, sub, name)


def maximal_graded_submodule(module: HighestWeightModule,
                             config: TruncationConfig | None = None) -> GradedSubspace:
    """Largest graded submodule meeting degree 0 trivially, computed per degree as
    J_(d) = {w : x w in J for every raising generator x}.

    This equals the common kernel of all pure-raising PBW monomials of total
    degree d: any element of U x applied to w decomposes as lowering * zero-mode
    * raising, and only the raising part of degree exactly d can reach degree 0.
    """
    n = module.max_degree if config is None else config.max_degree
    sub = GradedSubspace(module)
    for d in range(1, n + 1):
        keys = module.basis(d)
        images = []
        gens = raising_generators(module, d)
        for key in keys:
            img = {}
            for gi, g in enumerate(gens):
                for k, c in sub.reduce(module.act_gen(g, key)).items():
                    img[(gi, k)] = c
            images.append(img)
        for combo in kernel(images, module.p):
            sub.add({keys[i]: c for i, c in combo.items()}, top_degree=d)
    return sub


def maximal_submodule_by_monomials(module: HighestWeightModule, max_degree: int) -> list:
    """Oracle: per-degree dimension of the common kernel of every pure-raising
    PBW monomial of total degree d (no recursion through lower degrees)."""
    dims = [0]
    lie = module.lie
    for d in range(1, max_degree + 1):
        keys = module.basis(d)
        words = _raising_monomials(lie, d)
        images = []
        for key in keys:
            img = {}
            for wi, word in enumerate(words):
                for k, c in module.apply_word_raw(word, {key: 1}).items():
                    img[(wi, k)] = c
            images.append(img)
        dims.append(len(kernel(images, module.p)))
    return dims


def _raising_monomials(lie, d: int) -> list:
    if isinstance(lie, VirasoroAlgebra):
        gens = [(k, ("L", k)) for k in range(1, d + 1)]
    else:
        gens = [(k, ("a", k, i)) for k in range(1, d + 1) for i in range(lie.structure.dim)]
    out = []

    def rec(start, remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for idx in range(start, len(gens)):
            k, g = gens[idx]
            if k <= remaining:
                prefix.append(g)
                rec(idx, remaining - k, prefix)
                prefix.pop()

    rec(0, d, [])
    return out


def omega_membership(v, module=None) -> bool:
    """Whether a homogeneous v is annihilated by all positive modes: by L(1), L(2)
    for Virasoro (they generate the positive part) and by a(1), a(2) for every
    basis element a of g.  A vector killed by these generators is killed by all
    modes u_n with n >= deg u, by induction on the length of u."""
    terms = v.terms if isinstance(v, ModuleVector) else v
    module = module or v.module
    base = module.module if isinstance(module, QuotientModule) else module
    degs = {base.degree(k) for k in terms}
    if len(degs) > 1:
        raise ValueError("omega_membership needs a homogeneous vector")
    if isinstance(base.lie, VirasoroAlgebra):
        gens = [("L", 1), ("L", 2)]
    else:
        gens = [("a", n, i) for n in (1, 2) for i in range(base.lie.structure.dim)]
    for g in gens:
        img = base.act_raw(g, terms)
        if isinstance(module, QuotientModule):
            img = module.reduce(img)
        if img:
            return False
    return True


def build_graded_module(algebra: str, params: dict, max_degree: int, p=None,
                        structure: StructureConstants | None = None) -> QuotientModule:
    """L_Vir(c, lambda) (algebra='virasoro', params c, weight) or L(l, U)
    (algebra='affine', params level, action) truncated at max_degree."""
    if algebra == "virasoro":
        module = virasoro_verma(p, params.get("c", 0), params.get("weight", 0), max_degree)
        name = "L_Vir(c,lambda)"
    elif algebra == "virasoro-vacuum":
        module = virasoro_vacuum(p, params.get("c", 0), max_degree)
        name = "L_Vir(c,0)"
    elif algebra == "affine":
        action = params.get("action")
        if action is None:
            module = affine_vacuum(structure, params.get("level", 0), max_degree)
        else:
            _check_action(structure, action)
            module = affine_generalized_verma(structure, params.get("level", 0), action, max_degree)
        name = "L(l,U)"
    else:
        raise ValueError(f"unknown algebra {algebra}")
    return QuotientModule(module, maximal_graded_submodule(module), name)


def _check_action(structure: StructureConstants, action: dict):
    """U must be a g-module: rho([x_i, x_j]) = [rho(x_i), rho(x_j)]."""
    p = structure.p
    dim = len(next(iter(action.values())))

    def mat(vec):
        out = [[0] * dim for _ in range(dim)]
        for i, c in vec.items():
            for r in range(dim):
                for s in range(dim):
                    out[r][s] = (out[r][s] + c * action[i][r][s]) % p
        return out

    def mul(a, b):
        return [[sum(a[r][k] * b[k][s] for k in range(dim)) % p for s in range(dim)]
                for r in range(dim)]

    for i in range(structure.dim):
        for j in range(structure.dim):
            lhs = mat(structure.bracket_basis(i, j))
            a, b = action[i], action[j]
            ab, ba = mul(a, b), mul(b, a)
            rhs = [[(ab[r][s] - ba[r][s]) % p for s in range(dim)] for r in range(dim)]
            if lhs != rhs:
                raise ValueError(f"inconsistent module action at ({i},{j})")
