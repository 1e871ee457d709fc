"""Formation residuals, quotient membership and F-subnormality for finite
permutation groups."""

from .errors import CapabilityError, InputError, InternalError, ResiduaError, ResourceError, caps
from .perm import Permutation
from .groups import (
    NormalSection,
    PermGroup,
    agemo_derived,
    build_group,
    centralizer_section,
    commutator,
    contains,
    core,
    derived_subgroup,
    intersection,
    join,
    normal_closure,
    normalizer,
    o_p,
    order,
    primes_of,
    sylow,
    trivial_group,
)
from .modules import FpModule, Subspace, chop, hom_space, radical, section_to_module, semisimple_decompose, spin
from .series import (
    Decomposition,
    SeriesChain,
    chief_series,
    composition_series_through,
    minimal_subnormal_over,
    nonabelian_decomposition,
    nonabelian_residual,
    p_decomposition,
)
from .formations import (
    ChiefFunction,
    baer_local_formation,
    builtin,
    canonical_local_residual,
    complement,
    evaluate,
    join_formations,
    local_formation,
    meet,
    member,
    member_mod,
    quasi,
    residual,
    residual_part,
)
from .subnormal import DescentTrace, is_f_subnormal, is_k_f_subnormal, is_subnormal, sylow_subnorm_class
from .expr import parse_formation
from .io import load_corpus, parse_group_text, read_group_file

__version__ = "0.1.0"
