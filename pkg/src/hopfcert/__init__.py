"""Exact computations with semisimple Hopf algebras given by structure constants."""
from .corpus import CayleyTable, builtin, dual_group_algebra, group_algebra
from .forms import (
    FormReport,
    FrobeniusCertificate,
    frobenius_certificate,
    lattice_basis_hnf,
    theorem2_replay,
    weak_form_check,
)
from .hopf import (
    Element,
    HopfData,
    TensorSquare,
    antipode_apply,
    change_of_basis,
    check_axioms,
    comultiply,
    load_hopf,
    multiply,
)
from .integrals import find_integral, nu_tensor
from .scalars import Cyc, SubringSpec, in_subring, p_valuation
from .wedderburn import (
    BlockData,
    Character,
    center_basis,
    centrality_certificate,
    char_inner_product,
    decompose_center,
    idempotent_from_character,
    simple_module_matrices,
)

__version__ = "0.1.0"
