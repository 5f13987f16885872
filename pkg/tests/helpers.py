"""Shared test utilities: independent oracles and code samplers.

The oracles here deliberately avoid the package's bit-packed paths: dense
matrices are built with numpy kron from plain strings, commutation is
counted character by character, and span membership uses a numpy mod-2
elimination.  They exist to cross-check the fast implementation.
"""

from __future__ import annotations

import random

import numpy as np

from qpaste.catalog import builtin, hamming_class
from qpaste.pauli import PauliOperator, commutes
from qpaste.stabilizer import StabilizerCode
from qpaste.pasting import PaddedCode, augment
from qpaste import gf2

MAT = {
    "I": np.array([[1, 0], [0, 1]], dtype=int),
    "X": np.array([[0, 1], [1, 0]], dtype=int),
    "Y": np.array([[0, -1], [1, 0]], dtype=int),
    "Z": np.array([[1, 0], [0, -1]], dtype=int),
}


def dense(text: str) -> np.ndarray:
    """Dense matrix of a Pauli string, first character acting on qubit 1.

    Qubit 1 is the least significant bit of the basis index, matching the
    package's statevector convention, so kron factors go last-to-first.
    """
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        text = text[1:]
    out = np.array([[1]], dtype=int)
    for ch in text:
        out = np.kron(MAT[ch], out)
    return sign * out


def char_commutes(a: str, b: str) -> int:
    """1 when the strings anticommute: odd count of differing non-I pairs."""
    assert len(a) == len(b)
    clashes = sum(1 for p, q in zip(a, b) if p != "I" and q != "I" and p != q)
    return clashes & 1


def char_syndrome(generators: list[str], error: str) -> str:
    return "".join(str(char_commutes(g, error)) for g in generators)


def np_gf2_rank(matrix: np.ndarray) -> int:
    work = matrix.copy() % 2
    rank = 0
    rows, cols = work.shape
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if work[r, c]:
                pivot = r
                break
        if pivot is None:
            continue
        work[[rank, pivot]] = work[[pivot, rank]]
        for r in range(rows):
            if r != rank and work[r, c]:
                work[r] = (work[r] + work[rank]) % 2
        rank += 1
    return rank


def string_symplectic(text: str) -> np.ndarray:
    """Concatenated (x | z) 0/1 vector of a Pauli string."""
    n = len(text)
    row = np.zeros(2 * n, dtype=int)
    for i, ch in enumerate(text):
        if ch in "XY":
            row[i] = 1
        if ch in "ZY":
            row[n + i] = 1
    return row


def np_in_span(rows: list[str], candidate: str) -> bool:
    base = np.array([string_symplectic(r) for r in rows])
    stacked = np.vstack([base, string_symplectic(candidate)])
    return np_gf2_rank(stacked) == np_gf2_rank(base)


def random_pauli(rng: random.Random, n: int) -> PauliOperator:
    return PauliOperator(n, rng.getrandbits(n), rng.getrandbits(n), rng.choice((1, -1)))


def random_valid_code(rng: random.Random, n: int, a: int) -> StabilizerCode:
    """Rejection-sample a commuting, independent, square-to-+1 generator set."""
    rows: list[PauliOperator] = []
    packed: list[int] = []
    while len(rows) < a:
        x = rng.getrandbits(n)
        z = rng.getrandbits(n)
        p = PauliOperator(n, x, z, 1)
        if (x & z).bit_count() & 1:
            continue
        if any(commutes(p, q) for q in rows):
            continue
        if gf2.rank(packed + [x | (z << n)], 2 * n) != len(rows) + 1:
            continue
        rows.append(p)
        packed.append(x | (z << n))
    return StabilizerCode(rows, n)


def random_mixer(rng: random.Random, m: int) -> list[int]:
    """Random m x m GF(2) matrix rows with the matrix and its successor invertible."""
    while True:
        rows = [rng.getrandbits(m) for _ in range(m)]
        if gf2.rank(rows, m) != m:
            continue
        if gf2.rank([row ^ (1 << r) for r, row in enumerate(rows)], m) != m:
            continue
        return rows


def permute_qubits(code: StabilizerCode, perm: list[int]) -> StabilizerCode:
    """Relabel qubits: new position j takes the factor of old position perm[j]."""
    rows = []
    for g in code.generators:
        x = 0
        z = 0
        for j, old in enumerate(perm):
            x |= ((g.x >> old) & 1) << j
            z |= ((g.z >> old) & 1) << j
        rows.append(PauliOperator(code.n, x, z, 1))
    return StabilizerCode(rows, code.n)


def shuffled_qubits(rng: random.Random, code: StabilizerCode) -> StabilizerCode:
    perm = list(range(code.n))
    rng.shuffle(perm)
    return permute_qubits(code, perm)


def repeat_qubit(code: StabilizerCode, q: int) -> StabilizerCode:
    """Append a copy of qubit ``q`` through an inner repetition pair.

    X on the repeated qubit becomes XX across the pair, Z stays on the
    original column, and a ZZ generator ties the pair together.  The
    result is a valid code with a syndrome collision between the two Z
    errors that is excused by the new generator, i.e. a degenerate code.
    """
    n = code.n
    rows = []
    for g in code.generators:
        xq = (g.x >> q) & 1
        rows.append(PauliOperator(n + 1, g.x | (xq << n), g.z, 1))
    rows.append(PauliOperator(n + 1, 0, (1 << q) | (1 << n), 1))
    return StabilizerCode(rows, n + 1)


def degenerate_code6() -> StabilizerCode:
    return repeat_qubit(builtin("code5"), 0)


def paste_sample(rng: random.Random, index: int) -> tuple[PaddedCode, object]:
    """A precondition-satisfying (larger, smaller) pair, cycling scenarios.

    Mixes catalog codes, randomized members of the n=2^m family and
    qubit-permuted variants, with placeholder padding on either side.
    """
    scenario = index % 6
    if scenario == 0:
        larger = augment(builtin("code8"), 1, "append")
        smaller = shuffled_qubits(rng, builtin("code5"))
    elif scenario == 1:
        larger = augment(hamming_class(3, mixer=random_mixer(rng, 3)), 1, "append")
        smaller = shuffled_qubits(rng, builtin("code5"))
    elif scenario == 2:
        larger = PaddedCode(hamming_class(4, mixer=random_mixer(rng, 4)).generators)
        smaller = shuffled_qubits(rng, builtin("code5"))
    elif scenario == 3:
        larger = augment(hamming_class(4, mixer=random_mixer(rng, 4)), 1, "append")
        smaller = hamming_class(3, mixer=random_mixer(rng, 3))
    elif scenario == 4:
        larger = augment(shuffled_qubits(rng, builtin("code8")), 2, "append")
        smaller = shuffled_qubits(rng, builtin("code8"))
    else:
        larger = augment(hamming_class(4, mixer=random_mixer(rng, 4)), 1, "append")
        smaller = augment(shuffled_qubits(rng, builtin("code5")), 1, "prepend")
    return larger, smaller
