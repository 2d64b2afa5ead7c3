"""Express an even permutation as the commutator of two n-cycles."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CommutatorError, DegreeTooSmall, NotEvenClass
from .planner import UNREACHABLE, check_class, execute, plan
from .perm import (
    CycleType,
    Permutation,
    commutator,
    conjugate,
    cycle_type,
    find_conjugator,
    is_even,
    is_n_cycle,
    shift,
)


class NotEven(NotEvenClass):
    pass


@dataclass(frozen=True)
class Witness:
    """``tau`` and ``pi`` are n-cycles with ``commutator(tau, pi) == rho``."""

    tau: Permutation
    pi: Permutation
    rho: Permutation

    @property
    def n(self) -> int:
        return self.rho.n

    @property
    def cls(self) -> CycleType:
        return cycle_type(self.rho)


class Reason(str, Enum):
    OK = "OK"
    DEGREE_MISMATCH = "DegreeMismatch"
    TAU_NOT_N_CYCLE = "TauNotNCycle"
    PI_NOT_N_CYCLE = "PiNotNCycle"
    TARGET_MISMATCH = "TargetMismatch"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Reason

    def __bool__(self) -> bool:
        return self.ok


def verify(w: Witness) -> Verdict:
    """Exact check: both arguments are n-cycles and the image arrays of [tau, pi] and rho agree."""
    if not (w.tau.n == w.pi.n == w.rho.n):
        return Verdict(False, Reason.DEGREE_MISMATCH)
    if not is_n_cycle(w.tau):
        return Verdict(False, Reason.TAU_NOT_N_CYCLE)
    if not is_n_cycle(w.pi):
        return Verdict(False, Reason.PI_NOT_N_CYCLE)
    if commutator(w.tau, w.pi) != w.rho:
        return Verdict(False, Reason.TARGET_MISMATCH)
    return Verdict(True, Reason.OK)


def _checked(w: Witness) -> Witness:
    verdict = verify(w)
    if not verdict:
        raise CommutatorError(f"internal error: solver produced an invalid witness ({verdict.reason.value})")
    return w


def _oracle_witness(n: int, c: CycleType) -> Witness:
    from .oracle import find_pi

    pi = find_pi(n, c)
    if pi is None:
        raise DegreeTooSmall(n, UNREACHABLE.get(n))
    tau = shift(n)
    return _checked(Witness(tau, pi, commutator(tau, pi)))


def witness_for_class(n: int, c: CycleType | tuple[int, ...], brute_force_small: bool = False) -> Witness:
    """Witness with ``tau = shift(n)`` whose commutator has cycle type c.

    With ``brute_force_small`` the degrees 1, 3, 4, 5 are searched exhaustively
    instead of rejected; the search fails exactly on the unreachable classes.
    """
    if not isinstance(c, CycleType):
        c = CycleType(tuple(c))
    if c.n != n:
        raise ValueError(f"class {c} has degree {c.n}, not {n}")
    if not c.is_even:
        raise NotEvenClass(f"{c} has an odd number of even parts")
    if brute_force_small and n in (1, 3, 4, 5):
        return _oracle_witness(n, c)
    check_class(c)
    tau = shift(n)
    pi = execute(plan(c))
    return _checked(Witness(tau, pi, commutator(tau, pi)))


def witness_for_perm(rho: Permutation, brute_force_small: bool = False) -> Witness:
    """Witness (tau, pi, rho) for an arbitrary even permutation rho."""
    if not is_even(rho):
        raise NotEven(f"{rho} is an odd permutation")
    w = witness_for_class(rho.n, cycle_type(rho), brute_force_small)
    phi = find_conjugator(w.rho, rho)
    return _checked(Witness(conjugate(w.tau, phi), conjugate(w.pi, phi), rho))
