"""Workbench for a conjunctive process calculus over logic labelled
transition systems: state-graph construction with an inconsistency
predicate, the ready-simulation refinement preorder, model checking of the
safety fragment, and the translations between formulas and processes."""

from .errors import (
    AlphabetTooLarge,
    EmptyListError,
    LltsvError,
    NotInFragmentError,
    ParseError,
    StateLimitExceeded,
    UnknownActionError,
)
from .llts import (
    BuildLimits,
    LltsGraph,
    ValidationReport,
    act_stable,
    build_graph,
    compute_F,
    eps_stable,
    export,
    validate,
)
from .refine import (
    RefinementVerdict,
    SimRelation,
    equiv,
    largest_stable_sim,
    refines,
    refines_bool,
    refines_forall,
    refines_forall_until,
)
from .actl import consequence, satisfies
from .syntax import (
    TAU,
    Alphabet,
    Formula,
    Term,
    ceil,
    delta,
    eta,
    gen_conj,
    gen_disj,
    gen_ext_choice,
    in_minus_fragment,
    normalize,
    parse_formula,
    parse_term,
    print_formula,
    print_term,
)
from .translate import GaloisReport, char_formula, char_process, verify_galois
from .fixedpoint import (
    ApproximantChain,
    ceil_characterization,
    check_fixed_point,
    check_rec_equiv,
    eta_iterate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
