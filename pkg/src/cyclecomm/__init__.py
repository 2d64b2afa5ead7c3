"""Express even permutations as commutators of two n-cycles, with brute-force certification."""

from .composer import add_fixed_point, stitch
from .constructions import IrreducibleClass, build_irreducible, irreducible_classes, special
from .errors import (
    CommutatorError,
    ConstructionFailed,
    DegreeTooLarge,
    DegreeTooSmall,
    InconsistentProgression,
    InternalExhaustion,
    InvalidPermutation,
    NotConjugate,
    NotEvenClass,
    NotInTable,
    OutOfFamily,
    PatternSyntaxError,
    PermutationSyntaxError,
)
from .pattern import expand, expand_family, parse_pattern
from .perm import (
    CycleType,
    Permutation,
    commutator,
    compose,
    conjugate,
    cycle_decomposition,
    cycle_type,
    find_conjugator,
    identity,
    inverse,
    is_even,
    is_n_cycle,
    shift,
)
from .planner import execute, plan, render
from .solver import NotEven, Reason, Verdict, Witness, verify, witness_for_class, witness_for_perm

__version__ = "0.1.0"
