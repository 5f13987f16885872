"""Exhaustive desk-scale checks for one-error codes.

Error enumeration order is part of the public contract: weight ascending,
then acting positions ascending, then factors in the order X < Y < Z, the
identity first.  Witness pairs and reports are therefore reproducible.
The bound arithmetic is exact big-integer throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .pauli import PauliOperator, adjoint, identity, multiply
from .stabilizer import (
    InvalidCodeError,
    StabilizerCode,
    contains,
    syndrome,
    validate,
)

_FACTORS = ("X", "Y", "Z")
_FACTOR_XZ = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


def iter_weight_errors(n: int, w: int) -> Iterator[PauliOperator]:
    """All sign-+1 Pauli products of exact weight ``w``, in canonical order."""
    if w == 0:
        yield identity(n)
        return
    for positions in combinations(range(n), w):
        for factors in product(_FACTORS, repeat=w):
            x = 0
            z = 0
            for pos, f in zip(positions, factors):
                xb, zb = _FACTOR_XZ[f]
                x |= xb << pos
                z |= zb << pos
            yield PauliOperator(n, x, z, 1)


@dataclass(frozen=True)
class ErrorSet:
    """All weight <= ``max_weight`` errors on ``n`` qubits, identity first."""

    n: int
    max_weight: int
    members: tuple[PauliOperator, ...]

    def __len__(self) -> int:
        return len(self.members)


def enumerate_errors(n: int, t: int) -> ErrorSet:
    """Deterministic enumeration of all errors of weight at most ``t``.

    For t = 1 the count is 3n + 1.
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    if not 0 <= t <= n:
        raise ValueError(f"max weight {t} out of range for {n} qubits")
    members: list[PauliOperator] = []
    for w in range(t + 1):
        members.extend(iter_weight_errors(n, w))
    return ErrorSet(n, t, tuple(members))


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of the weight-1 syndrome distinctness check.

    ``ok`` means every collision (if any) was excused by group membership;
    ``degenerate`` flags that at least one excusal was used.  A failing
    report always carries the first offending pair in enumeration order.
    """

    ok: bool
    degenerate: bool
    distinct_count: int
    error_count: int
    witness: tuple[PauliOperator, PauliOperator] | None
    degenerate_pairs: tuple[tuple[PauliOperator, PauliOperator], ...]


def verify_distance3(code: StabilizerCode, allow_degenerate: bool = False) -> DistanceReport:
    """Check that all 3n+1 weight-<=1 errors have distinct syndromes.

    With ``allow_degenerate`` a colliding pair (E, F) is excused when
    adjoint(E).F lies in the group (the two errors then act identically on
    the codespace); any excusal marks the code as degenerate.
    """
    report = validate(code)
    if not report.ok:
        raise InvalidCodeError(report)
    errors = enumerate_errors(code.n, 1).members
    seen: dict[int, PauliOperator] = {}
    excused: list[tuple[PauliOperator, PauliOperator]] = []
    for e in errors:
        key = syndrome(code, e).as_int()
        first = seen.get(key)
        if first is None:
            seen[key] = e
            continue
        if allow_degenerate and contains(code, multiply(adjoint(first), e)):
            excused.append((first, e))
            continue
        return DistanceReport(
            False, bool(excused), len(seen), len(errors), (first, e), tuple(excused)
        )
    return DistanceReport(True, bool(excused), len(seen), len(errors), None, tuple(excused))


def distance(code: StabilizerCode, max_weight: int) -> int | None:
    """Smallest weight of an operator commuting with the group but outside it.

    Searches weights 1..max_weight; returns None when no such operator
    exists in that range.  Both sign assignments of each candidate are
    checked against the group, since membership is sign-sensitive.
    """
    report = validate(code)
    if not report.ok:
        raise InvalidCodeError(report)
    if max_weight > code.n:
        raise ValueError(f"max weight {max_weight} exceeds qubit count {code.n}")
    for w in range(1, max_weight + 1):
        for p in iter_weight_errors(code.n, w):
            if syndrome(code, p).is_zero:
                negated = PauliOperator(p.n, p.x, p.z, -1)
                if not contains(code, p) and not contains(code, negated):
                    return w
    return None


class BoundStatus(enum.Enum):
    VIOLATED = "violated"
    SATISFIED = "satisfied"
    SATURATED = "saturated"

    def __str__(self) -> str:
        return self.value


def hamming_bound(n: int, k: int) -> BoundStatus:
    """Compare (3n+1) * 2^k against 2^n with exact integers.

    SATURATED (equality) identifies a perfect one-error code.
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    if not 0 <= k <= n:
        raise ValueError(f"encoded qubit count {k} out of range for n={n}")
    lhs = (3 * n + 1) << k
    rhs = 1 << n
    if lhs > rhs:
        return BoundStatus.VIOLATED
    if lhs == rhs:
        return BoundStatus.SATURATED
    return BoundStatus.SATISFIED


def is_perfect(n: int, k: int) -> bool:
    return hamming_bound(n, k) is BoundStatus.SATURATED


def best_k(n: int) -> int | None:
    """Largest k with (3n+1) * 2^k <= 2^n, or None when even k=0 fails."""
    if n < 1:
        raise ValueError("need at least one qubit")
    lhs = 3 * n + 1
    rhs = 1 << n
    if lhs > rhs:
        return None
    k = 0
    while (lhs << (k + 1)) <= rhs:
        k += 1
    return k


def perfect_length(j: int) -> int:
    """Qubit count of the j-th perfect one-error code: 5, 21, 85, 341, ...

    The j-th code has n = (4^(j+1) - 1) / 3 and 2j + 2 generators, so the
    bound saturates: (3n + 1) * 2^(n - 2j - 2) = 4^(j+1) * 2^(n-2j-2) = 2^n.
    """
    if j < 1:
        raise ValueError("perfect codes are indexed from 1")
    return (4 ** (j + 1) - 1) // 3
