"""Exact verification and construction of monoidal algebra structures.

Two strict monoidal backends: free modules over the rationals with exact
dense linear algebra, and bimodules over a fixed finite-dimensional base
ring with the balanced tensor product taken as an explicit quotient.  On
top of both sit checkers and builders for monoids, comonoids, modules,
comodules, entwining cells, wreaths, cowreaths, distributive laws,
bimonoids and base-ring compatibility.
"""

__version__ = "0.1.0"

from .algebra import (
    ComoduleData, ComonoidData, ModuleData, MonoidData, check_comodule,
    check_comonoid, check_comonoid_morphism, check_module, check_monoid,
    check_monoid_morphism, trivial_comonoid, trivial_monoid,
)
from .bimodcat import (
    BaseRing, BimodContext, Bimodule, WordMap, check_base_ring,
    check_bimodule, flatten, r_tensor, regular_bimodule, trivial_ring,
)
from .bimonoid import (
    CoringCompatData, DoubleDL, check_bimonoid, check_coring_compat,
    check_double_dl, induced_structures,
)
from .entwine import (
    EM_KINDS, EmCell, EmMorphism, action_from_entwining,
    check_em_morphism, check_em_object, coaction_from_entwining,
    em_identity, em_tensor, em_vertical, entwining_from_action,
    entwining_from_coaction,
)
from .errors import (
    DimensionMismatch, HypothesisFailed, KindMismatch, MissingRole,
    NotBalanced, PreconditionFailed, SchemaError, UnknownDemo, WreathkitError,
)
from .exactlin import (
    KMOD, AxiomReport, CheckOutcome, FreeModule, LinMap, Residual, compose,
    identity, inverse, kernel_basis, lin, lin_from_cols, lin_from_entries,
    map_equal, rank, rref, swap_map, tensor_map, tensor_many, tensor_obj,
    zero_map,
)
from .structfile import StructureFile, emit, parse, parse_file, parse_obj
from .wreathcore import (
    CowreathData, WreathData, check_comonoid_dl, check_cowreath,
    check_monoid_dl, check_wreath, cowreath_product, dl_to_cowreath,
    dl_to_wreath, universal_cowreath_morphism, universal_wreath_morphism,
    wreath_product,
)
from .zoo import DEMO_NAMES, build_demo
