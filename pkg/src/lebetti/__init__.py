"""Le cycles, Le numbers, and Milnor-fiber betti-number windows for
polynomial hypersurface singularities, in exact arithmetic."""

from .bounds import (
    BoundReport,
    OneDimComponent,
    Verdict,
    Window,
    build_report,
    chain_complex_constraints,
    main_theorem_bounds,
    monodromy_image_window,
    one_dim_relations,
)
from .cycles import Cycle, intersect_hypersurface, local_degree, split_by_locus
from .errors import (
    Budget,
    BudgetExceededError,
    DualityHypothesisError,
    ExponentOverflowError,
    LebettiError,
    NonGenericityError,
    ParseError,
    VariableMismatchError,
)
from .fields import GF, QQ
from .groebner import (
    INFINITE,
    IdealBasis,
    MonomialOrder,
    dimension,
    grevlex,
    ideals_equal,
    intersection,
    local_dimension,
    local_multiplicity,
    local_order,
    quotient,
    saturation,
)
from .lenumbers import (
    LeInput,
    LeResult,
    critical_locus,
    le_cascade,
    milnor_number_isolated,
)
from .perv import (
    MonodromyQuadruple,
    SelfDualWitness,
    betti_from_quadruple,
    rank_data,
    sandwich_bound,
    sandwich_trials,
    self_dual,
)
from .poly import Polynomial, Ring, parse

__version__ = "0.1.0"
