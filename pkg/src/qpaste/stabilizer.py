"""Stabilizer groups given by generator lists.

A code is an ordered list of commuting, independent, square-to-+1 Pauli
products, all with sign +1.  Generators are kept in the given order and
never silently re-echeloned: the syndrome bit order is the generator
order.  A canonical (row-reduced) basis is available separately for
group-level comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import gf2
from .pauli import PauliOperator, commutes, identity, multiply, y_count


class InvalidCodeError(ValueError):
    """An operation required a valid code but validation failed."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        lines = "; ".join(str(v) for v in report.violations)
        super().__init__(f"invalid stabilizer code: {lines}")


def _pack(p: PauliOperator) -> int:
    """Symplectic row bitset: x part in the low n bits, z part above."""
    return p.x | (p.z << p.n)


class StabilizerCode:
    """Ordered generator list over a fixed qubit count.

    Construction checks only shape (equal lengths, +1 signs); the group
    invariants are checked by :func:`validate` so that broken inputs can be
    reported rather than refused.  Instances are immutable; the GF(2)
    elimination cache used for membership tests is built eagerly.
    """

    def __init__(self, generators: Iterable[PauliOperator], n: int | None = None):
        gens = tuple(generators)
        if n is None:
            if not gens:
                raise ValueError("qubit count required for an empty generator list")
            n = gens[0].n
        for i, g in enumerate(gens, start=1):
            if g.n != n:
                raise ValueError(f"generator {i} acts on {g.n} qubits, expected {n}")
            if g.sign != 1:
                raise ValueError(f"generator {i} must have sign +1")
        self.n = n
        self.generators = gens
        self._elim = gf2.Eliminator(2 * n, [_pack(g) for g in gens])

    @property
    def a(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        """Bit-exact equality: same qubit count and same ordered rows."""
        if not isinstance(other, StabilizerCode):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    def __repr__(self) -> str:
        return f"StabilizerCode(n={self.n}, a={self.a})"


@dataclass(frozen=True)
class Violation:
    """One failed generator-set invariant; indices are 1-based."""

    kind: str  # "anticommute" | "square" | "rank"
    rows: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} {self.rows}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class CodeParameters:
    """n physical qubits, a generators, k = n - a encoded qubits.

    ``t`` is the verified correctable weight; it stays None until a
    distance check has been run.
    """

    n: int
    a: int
    k: int
    t: int | None = None


@dataclass(frozen=True)
class Syndrome:
    """Commutation bit per generator, in generator order."""

    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        if len(self.bits) != len(other.bits):
            raise ValueError("syndrome lengths differ")
        return Syndrome(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def as_int(self) -> int:
        """Bits packed into an int, generator i at bit i."""
        out = 0
        for i, b in enumerate(self.bits):
            out |= b << i
        return out

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)


def validate(code: StabilizerCode) -> ValidationReport:
    """Check commutation, squaring to +1 and GF(2) independence.

    Returns a report rather than raising, so invalid inputs can be
    diagnosed; violations name the offending generator rows (1-based).
    """
    violations: list[Violation] = []
    gens = code.generators
    for i, g in enumerate(gens, start=1):
        if y_count(g) & 1:
            violations.append(
                Violation("square", (i,), f"generator {i} squares to -1 (odd Y count)")
            )
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if commutes(gens[i], gens[j]):
                violations.append(
                    Violation(
                        "anticommute",
                        (i + 1, j + 1),
                        f"generators {i + 1} and {j + 1} anticommute",
                    )
                )
    if code._elim.dependent:
        r = code._elim.rank
        for idx in code._elim.dependent:
            violations.append(
                Violation(
                    "rank",
                    (idx + 1,),
                    f"generator {idx + 1} is a product of earlier ones, rank {r} < {code.a}",
                )
            )
    return ValidationReport(not violations, tuple(violations))


def syndrome(code: StabilizerCode, error: PauliOperator) -> Syndrome:
    """Commutation vector of ``error`` against each generator.

    Linear under operator products: syndrome(E.F) = syndrome(E) XOR
    syndrome(F).  The identity error maps to all-zero.
    """
    if error.n != code.n:
        raise ValueError(f"error acts on {error.n} qubits, code has {code.n}")
    return Syndrome(tuple(commutes(g, error) for g in code.generators))


def _replay(code: StabilizerCode, combination: int) -> PauliOperator:
    """Sign-exact product of the generators selected by the bitmask."""
    acc = identity(code.n)
    i = 0
    while combination:
        if combination & 1:
            acc = multiply(acc, code.generators[i])
        combination >>= 1
        i += 1
    return acc


def contains(code: StabilizerCode, p: PauliOperator) -> bool:
    """Group membership, sign included.

    Solves the GF(2) system for the bit part, then replays the generator
    product to check that the accumulated sign matches ``p.sign``.
    """
    if p.n != code.n:
        raise ValueError(f"operator acts on {p.n} qubits, code has {code.n}")
    combination = code._elim.solve(_pack(p))
    if combination is None:
        return False
    return _replay(code, combination).sign == p.sign


def parameters(code: StabilizerCode) -> CodeParameters:
    """Code parameters; requires a valid code."""
    report = validate(code)
    if not report.ok:
        raise InvalidCodeError(report)
    return CodeParameters(code.n, code.a, code.n - code.a)


def canonical_generators(code: StabilizerCode) -> tuple[PauliOperator, ...]:
    """Row-reduced generator basis with signs replayed from the originals.

    Canonical for the generated group, so two codes generate the same
    group exactly when their canonical generators coincide.
    """
    pairs = gf2.rref([_pack(g) for g in code.generators], 2 * code.n)
    out = []
    for _, combination in pairs:
        out.append(_replay(code, combination))
    return tuple(out)


def group_equal(first: StabilizerCode, second: StabilizerCode) -> bool:
    """Whether two generator lists generate the same signed group."""
    if first.n != second.n:
        return False
    return canonical_generators(first) == canonical_generators(second)


def pack_symplectic(p: PauliOperator) -> int:
    """Public packing helper for callers doing their own GF(2) work."""
    return _pack(p)
