"""Built-in codes and the two constructed one-error families.

The three built-ins are the classic 5-qubit perfect code, the 8-qubit
code encoding three qubits, and the 13-qubit code obtained by pasting the
5-qubit code onto the augmented 8-qubit one.  The 13-qubit generator list
here is the golden reference the pasting operation must reproduce
bit-exactly, row order included.

Every catalog or constructed code is checked at build time (validation,
weight-1 syndrome distinctness, expected parameters) and construction
fails loudly if anything is off.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .pauli import PauliOperator, parse_pauli
from .stabilizer import StabilizerCode, validate
from .pasting import paste
from .verification import hamming_bound, BoundStatus, verify_distance3

_CODE5_ROWS = (
    "XXZIZ",
    "ZXXZI",
    "IZXXZ",
    "ZIZXX",
)

_CODE8_ROWS = (
    "XXXXXXXX",
    "ZZZZZZZZ",
    "XIXIZYZY",
    "XIYZXIYZ",
    "XZIYIYXZ",
)

_CODE13_ROWS = (
    "XXXXXXXXIIIII",
    "ZZZZZZZZIIIII",
    "XIXIZYZYXXZIZ",
    "XIYZXIYZZXXZI",
    "XZIYIYXZIZXXZ",
    "IIIIIIIIZIZXX",
)

_BUILTIN_ROWS = {"code5": _CODE5_ROWS, "code8": _CODE8_ROWS, "code13": _CODE13_ROWS}
_BUILTIN_PARAMS = {"code5": (5, 4), "code8": (8, 5), "code13": (13, 6)}

# One primitive polynomial per degree, coefficients as a bitmask including
# the leading term (e.g. degree 4: x^4 + x + 1 -> 0b10011).  Fixed so the
# constructed codes are identical across runs and platforms.
_PRIMITIVE_POLY = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
}

_cache: dict[object, StabilizerCode] = {}
_cache_lock = threading.Lock()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: StabilizerCode
    provenance: str  # "builtin" | "pasted" | "constructed-family"
    n: int
    a: int
    k: int


def _checked(code: StabilizerCode, n: int, a: int, context: str) -> StabilizerCode:
    """Bail out if a catalog code fails its own correctness conditions."""
    if code.n != n or code.a != a:
        raise RuntimeError(
            f"{context}: got (n={code.n}, a={code.a}), expected (n={n}, a={a})"
        )
    report = validate(code)
    if not report.ok:
        raise RuntimeError(f"{context}: validation failed: {report.violations}")
    d3 = verify_distance3(code, allow_degenerate=False)
    if not d3.ok:
        raise RuntimeError(f"{context}: weight-1 syndromes not distinct: {d3.witness}")
    return code


def builtin(name: str) -> StabilizerCode:
    """One of the shipped codes: "code5", "code8" or "code13"."""
    rows = _BUILTIN_ROWS.get(name)
    if rows is None:
        known = ", ".join(sorted(_BUILTIN_ROWS))
        raise ValueError(f"unknown catalog code {name!r} (known: {known})")
    with _cache_lock:
        code = _cache.get(name)
        if code is None:
            n, a = _BUILTIN_PARAMS[name]
            code = _checked(
                StabilizerCode([parse_pauli(r) for r in rows]), n, a, name
            )
            _cache[name] = code
        return code


def _multiply_by_x(value: int, m: int, poly: int) -> int:
    """One step of multiplication by x in GF(2)[x] mod the degree-m poly."""
    value <<= 1
    if (value >> m) & 1:
        value ^= poly
    return value & ((1 << m) - 1)


def _mixer_images(m: int, mixer: Sequence[int] | None) -> list[int]:
    """Image L(v) for every label v, either from the fixed polynomial
    table (multiplication by x) or from explicit matrix rows."""
    size = 1 << m
    if mixer is None:
        poly = _PRIMITIVE_POLY.get(m)
        if poly is None:
            raise ValueError(f"no default mixing polynomial for degree {m}")
        return [_multiply_by_x(v, m, poly) for v in range(size)]
    rows = list(mixer)
    if len(rows) != m:
        raise ValueError(f"mixer needs {m} rows, got {len(rows)}")
    images = []
    for v in range(size):
        image = 0
        for r, row in enumerate(rows):
            image |= ((row & v).bit_count() & 1) << r
        images.append(image)
    return images


def hamming_class(m: int, mixer: Sequence[int] | None = None) -> StabilizerCode:
    """The n = 2^m code with m + 2 generators (k = n - m - 2), m >= 3.

    Qubits are labeled by the m-bit vectors v in integer order.  Rows 1
    and 2 are the all-X and all-Z products; row 2+r puts a z bit where
    v_r = 1 and an x bit where (L v)_r = 1, with L an invertible m x m
    GF(2) matrix such that L + I is also invertible.  Then the weight-1
    syndromes are 01|v, 10|Lv and 11|(L+I)v for X, Z and Y errors on
    qubit v, all distinct because v, Lv and (L+I)v are bijections.

    The default L is multiplication by x modulo a fixed primitive
    polynomial of degree m; pass ``mixer`` (m row bitmasks) to use another
    matrix.  For m = 3 with the default mixer the builtin 8-qubit code is
    returned so the pasted 13-qubit reproduction stays anchored to it.
    """
    if m < 3:
        raise ValueError(f"m={m} rejected: k = n - m - 2 would not be positive")
    if m == 3 and mixer is None:
        return builtin("code8")
    key = ("hamming", m) if mixer is None else None
    if key is not None:
        with _cache_lock:
            cached = _cache.get(key)
        if cached is not None:
            return cached
    n = 1 << m
    images = _mixer_images(m, mixer)
    if len(set(images)) != n or len({v ^ img for v, img in enumerate(images)}) != n:
        raise ValueError(
            "mixer rejected: the matrix and its successor (L and L+I) must "
            "both be invertible"
        )
    ones = (1 << n) - 1
    gens = [PauliOperator(n, ones, 0, 1), PauliOperator(n, 0, ones, 1)]
    for r in range(m):
        x_bits = 0
        z_bits = 0
        for v in range(n):
            z_bits |= ((v >> r) & 1) << v
            x_bits |= ((images[v] >> r) & 1) << v
        gens.append(PauliOperator(n, x_bits, z_bits, 1))
    code = _checked(StabilizerCode(gens), n, m + 2, f"hamming_class({m})")
    if key is not None:
        with _cache_lock:
            code = _cache.setdefault(key, code)
    return code


def perfect(j: int, j_max: int = 4) -> StabilizerCode:
    """The j-th perfect one-error code: n = (4^(j+1)-1)/3 with 2j+2 generators.

    perfect(1) is the 5-qubit code; each later one pastes the previous
    perfect code onto the 2^(2j)-qubit member of the constructed family
    (generator counts align with no padding).  ``j_max`` bounds the
    recursion depth; the default keeps n at or below 341.
    """
    if j < 1:
        raise ValueError("perfect codes are indexed from 1")
    if j > j_max:
        raise ValueError(f"j={j} exceeds the configured maximum {j_max}")
    key = ("perfect", j)
    with _cache_lock:
        cached = _cache.get(key)
    if cached is not None:
        return cached
    if j == 1:
        code = builtin("code5")
    else:
        code = paste(hamming_class(2 * j), perfect(j - 1, j_max=j_max))
    n = (4 ** (j + 1) - 1) // 3
    a = 2 * j + 2
    code = _checked(code, n, a, f"perfect({j})")
    if hamming_bound(n, n - a) is not BoundStatus.SATURATED:
        raise RuntimeError(f"perfect({j}) does not saturate the bound")
    with _cache_lock:
        code = _cache.setdefault(key, code)
    return code


def entries() -> tuple[CatalogEntry, ...]:
    """The shipped catalog codes with their provenance and parameters."""
    provenance = {"code5": "builtin", "code8": "builtin", "code13": "pasted"}
    out = []
    for name in ("code5", "code8", "code13"):
        code = builtin(name)
        out.append(
            CatalogEntry(
                name, code, provenance[name], code.n, code.a, code.n - code.a
            )
        )
    return tuple(out)
