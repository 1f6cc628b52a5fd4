"""Hamilton paths in dominating graphs of cycles via a filtered Gray code.

A subset of cycle vertices, written as the binary string x_0 x_1 ... x_{n-1},
dominates the n-cycle iff no three circularly consecutive positions are all
zero.  Filtering the binary reflected Gray code down to those strings keeps
the one-bit-step property exactly when n is not divisible by 4, and then
lists every dominating set once: a Hamilton path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ConstructionError
from .graphs import HamPath, VertexSet

MAX_CYCLE = 24


def brgc(width: int) -> Iterator[VertexSet]:
    """The binary reflected Gray code: all 2**width strings, one bit flip apart.

    Position k carries the string for k XOR (k >> 1), starting at all-zeros.
    """
    if not 1 <= width <= MAX_CYCLE:
        raise ValueError(f"width must be in 1..{MAX_CYCLE}, got {width}")
    for k in range(1 << width):
        g = k ^ (k >> 1)
        # the string reads x_0 first; vertex bits store x_i at bit i
        yield VertexSet(int(format(g, f"0{width}b")[::-1], 2), width)


def has_circular_zero_run(s: VertexSet) -> bool:
    """True iff some three circularly consecutive positions of s are all 0."""
    n = s.width
    if n < 3:
        raise ValueError("circular windows need width >= 3")
    b = s.bits
    mask = (1 << n) - 1
    left = ((b << 1) | (b >> (n - 1))) & mask
    right = ((b >> 1) | (b << (n - 1))) & mask
    return (b | left | right) != mask


def filter_circular(seq: Iterable[VertexSet]) -> Iterator[VertexSet]:
    """Keep the strings with no circular 000 window, preserving order.

    The survivors are exactly the dominating sets of the cycle, i.e. the
    bitwise complements of the circular strings with no three consecutive
    ones.
    """
    for s in seq:
        if not has_circular_zero_run(s):
            yield s


@dataclass(frozen=True)
class NonExistence:
    """Definite absence of a Hamilton path, with an optional certificate."""

    reason: str
    certificate: object = None


def hamilton_path_cycle(n: int) -> HamPath | NonExistence:
    """Hamilton path of the dominating graph of the n-cycle, if one exists.

    Exists iff n is not divisible by 4; in that case the filtered reflected
    Gray code is returned after re-checking the one-flip property step by
    step (a failure would be a bug, not an input problem).
    """
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    if n % 4 == 0:
        return NonExistence(reason=f"no Hamilton path: cycle length {n} is divisible by 4")
    try:
        return HamPath(filter_circular(brgc(n)))
    except ValueError as e:
        raise ConstructionError(
            f"filtered Gray code lost the one-flip property for n={n}: {e}"
        ) from None
