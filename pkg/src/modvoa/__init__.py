"""Exact computations with modular Virasoro and affine vertex algebras over F_p:
restricted Lie structure, PBW straightening, truncated vacuum modules, vertex
operator modes, Zhu algebras with O(V) certificates and C_2 quotients."""

from .report import Check, Report
from .scalars import FpScalar, Prime, fp_binomial, lucas_binomial
from .liealg import (AffineAlgebra, FiniteLieAlgebra, LieElement, StructureConstants,
                     VirasoroAlgebra, load_structure_file, sl2_structure)
from .enveloping import EnvelopingAlgebra, RestrictedEnveloping, UEAElement
from .vacuum import (HighestWeightModule, ModuleVector, QuotientModule, TruncationConfig,
                     TruncationOverflow, affine_generalized_verma, affine_vacuum, build_graded_module,
                     virasoro_vacuum, virasoro_verma)
from .modes import d_operator, mode_act
from .zhu import OVCertificate, ZhuPolyVir, circ, reduce_affine, reduce_vir, star
from .c2 import C2Quotient, c2_quotient_algebra, c2_span, verify_c2_cofinite

__version__ = "0.1.0"
