import itertools

import pytest

from qpaste.catalog import builtin
from qpaste.pauli import format_pauli, parse_pauli
from qpaste.stabilizer import InvalidCodeError, StabilizerCode, syndrome
from qpaste.verification import (
    BoundStatus,
    best_k,
    distance,
    enumerate_errors,
    hamming_bound,
    is_perfect,
    perfect_length,
    verify_distance3,
)

from helpers import char_syndrome, degenerate_code6, np_in_span


def from_strings(*rows):
    return StabilizerCode([parse_pauli(r) for r in rows])


def test_error_counts():
    assert len(enumerate_errors(13, 1)) == 40
    assert len(enumerate_errors(5, 1)) == 16
    assert len(enumerate_errors(2, 2)) == 16
    assert all(len(enumerate_errors(n, 1)) == 3 * n + 1 for n in range(1, 30))


def test_error_order_frozen():
    members = [format_pauli(e) for e in enumerate_errors(2, 1).members]
    assert members == ["II", "XI", "YI", "ZI", "IX", "IY", "IZ"]
    weight2 = [format_pauli(e) for e in enumerate_errors(2, 2).members[7:10]]
    assert weight2 == ["XX", "XY", "XZ"]


def test_error_range_checks():
    with pytest.raises(ValueError):
        enumerate_errors(3, 4)
    with pytest.raises(ValueError):
        enumerate_errors(3, -1)


def test_verify_code13():
    report = verify_distance3(builtin("code13"))
    assert report.ok and not report.degenerate
    assert report.distinct_count == 40 and report.error_count == 40
    assert report.witness is None


def test_verify_code5_perfect():
    code = builtin("code5")
    report = verify_distance3(code)
    assert report.ok and report.distinct_count == 16
    seen = {syndrome(code, e).as_int() for e in enumerate_errors(5, 1).members}
    assert seen == set(range(16))


def test_verify_single_generator_code():
    report = verify_distance3(from_strings("ZZ"))
    assert not report.ok
    # First collision in enumeration order: X on qubit 1, then Y on qubit 1,
    # both anticommuting with the only generator.
    e, f = report.witness
    assert (format_pauli(e), format_pauli(f)) == ("XI", "YI")


def test_verify_degenerate_code():
    code = degenerate_code6()
    strict = verify_distance3(code)
    assert not strict.ok
    loose = verify_distance3(code, allow_degenerate=True)
    assert loose.ok and loose.degenerate
    pairs = [(format_pauli(a), format_pauli(b)) for a, b in loose.degenerate_pairs]
    assert pairs == [("ZIIIII", "IIIIIZ")]


def test_verify_requires_valid_code():
    with pytest.raises(InvalidCodeError):
        verify_distance3(from_strings("X", "Z"))
    with pytest.raises(InvalidCodeError):
        distance(from_strings("X", "Z"), 2)


def test_distance_small_codes():
    assert distance(from_strings("ZZ"), 2) == 1  # Z on one qubit commutes, not a member
    assert distance(builtin("code5"), 3) == 3
    assert distance(builtin("code5"), 2) is None
    assert distance(builtin("code13"), 3) == 3
    assert distance(builtin("code13"), 2) is None


def test_distance_code5_vs_full_enumeration_oracle():
    # Independent route: all 4^5 Pauli strings, character-level commutation
    # and numpy span membership.
    rows = [format_pauli(g) for g in builtin("code5").generators]
    best = None
    for factors in itertools.product("IXYZ", repeat=5):
        s = "".join(factors)
        w = sum(1 for ch in s if ch != "I")
        if w == 0 or (best is not None and w >= best):
            continue
        if any(int(b) for b in char_syndrome(rows, s)):
            continue
        if not np_in_span(rows, s):
            best = w
    assert best == 3


def test_distance_code13_vs_restricted_oracle():
    rows = [format_pauli(g) for g in builtin("code13").generators]
    found = None
    for w in (1, 2, 3):
        for positions in itertools.combinations(range(13), w):
            for factors in itertools.product("XYZ", repeat=w):
                chars = ["I"] * 13
                for pos, f in zip(positions, factors):
                    chars[pos] = f
                s = "".join(chars)
                if any(int(b) for b in char_syndrome(rows, s)):
                    continue
                if not np_in_span(rows, s):
                    found = w
                    break
            if found:
                break
        if found:
            break
    assert found == 3


def test_distance_range_check():
    with pytest.raises(ValueError):
        distance(builtin("code5"), 6)


def test_cross_check_distance3_formulations():
    # For nondegenerate inputs the two formulations agree.
    for code in (builtin("code5"), builtin("code8"), builtin("code13")):
        report = verify_distance3(code)
        no_low_logical = distance(code, 2) is None
        nonzero = all(
            not syndrome(code, e).is_zero
            for e in enumerate_errors(code.n, 1).members[1:]
        )
        assert report.ok == (no_low_logical and nonzero)
    bad = from_strings("ZZ")
    assert not verify_distance3(bad).ok
    assert distance(bad, 2) == 1


def test_hamming_bound_examples():
    assert hamming_bound(13, 7) is BoundStatus.SATISFIED
    assert not is_perfect(13, 7)
    assert hamming_bound(5, 1) is BoundStatus.SATURATED
    assert hamming_bound(21, 15) is BoundStatus.SATURATED
    assert hamming_bound(85, 77) is BoundStatus.SATURATED
    assert hamming_bound(341, 331) is BoundStatus.SATURATED
    assert hamming_bound(5, 2) is BoundStatus.VIOLATED
    assert (3 * 5 + 1) * 2**1 == 2**5
    assert (3 * 21 + 1) * 2**15 == 2**21


def test_best_k():
    assert best_k(13) == 7
    assert (3 * 13 + 1) * 2**7 <= 2**13 < (3 * 13 + 1) * 2**8
    assert best_k(5) == 1
    assert best_k(4) == 0
    assert best_k(3) is None
    assert best_k(341) == 331


def test_perfect_lengths():
    assert [perfect_length(j) for j in range(1, 5)] == [5, 21, 85, 341]
    for j in range(1, 8):
        n = perfect_length(j)
        assert hamming_bound(n, n - (2 * j + 2)) is BoundStatus.SATURATED
    with pytest.raises(ValueError):
        perfect_length(0)


def test_bound_range_checks():
    with pytest.raises(ValueError):
        hamming_bound(5, 6)
    with pytest.raises(ValueError):
        hamming_bound(5, -1)
    with pytest.raises(ValueError):
        best_k(0)
