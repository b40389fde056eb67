"""Exhaustive ground truth for small alphabets.

Enumerates every nondecreasing integer length vector with Kraft sum
exactly 1 (equivalently, every full binary tree shape by level profile)
and minimizes an objective over them.  For probabilities sorted
nonincreasing, restricting to nondecreasing lengths loses nothing: giving
the longer codeword to the less probable symbol never increases any of
the objectives here.  Equality rather than inequality in the Kraft sum is
likewise lossless, since shortening a codeword never hurts.  Both facts
are covered by self-tests rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import CodingError, LengthVector, Objective, Pmf

__all__ = [
    "InfeasibleMaxLen",
    "AlphabetTooLarge",
    "OracleResult",
    "enumerate_kraft_lengths",
    "brute_force_optimal",
]

DEFAULT_MAX_N = 12
ARGMIN_TOL = 1e-12


class InfeasibleMaxLen(CodingError):
    pass


class AlphabetTooLarge(CodingError):
    pass


@dataclass(frozen=True)
class OracleResult:
    """Minimum objective value with every minimizing monotone length vector."""

    min_value: float
    argmin: tuple[LengthVector, ...]
    evaluated_count: int

    def argmin_lengths(self) -> tuple[tuple[int, ...], ...]:
        return tuple(lv.lengths for lv in self.argmin)


def enumerate_kraft_lengths(n: int, max_len: int | None = None) -> Iterator[LengthVector]:
    """Yield each nondecreasing length vector with Kraft sum 1, once.

    Vectors are generated by choosing how many leaves sit at each depth of
    a full binary tree.  ``max_len`` defaults to n - 1, the deepest any
    optimal tree can be.
    """
    if n < 1:
        raise CodingError(f"alphabet size must be >= 1, got {n}")
    if max_len is None:
        max_len = max(n - 1, 0 if n == 1 else 1)
    min_depth = (n - 1).bit_length()
    if max_len < min_depth:
        raise InfeasibleMaxLen(f"max_len {max_len} cannot hold {n} leaves "
                               f"(needs >= {min_depth})")

    prefix: list[int] = []

    def rec(depth: int, nodes: int, remaining: int) -> Iterator[LengthVector]:
        if remaining == 0:
            if nodes == 0:
                yield LengthVector(tuple(prefix))
            return
        if nodes == 0 or depth > max_len:
            return
        lo = max(0, 2 * nodes - remaining)
        hi = min(nodes, remaining)
        for leaves in range(lo, hi + 1):
            internal = nodes - leaves
            if remaining - leaves > internal << (max_len - depth):
                continue
            prefix.extend([depth] * leaves)
            yield from rec(depth + 1, 2 * internal, remaining - leaves)
            del prefix[len(prefix) - leaves:]

    yield from rec(0, 1, n)


def brute_force_optimal(p: Pmf, obj: Objective, max_n: int = DEFAULT_MAX_N,
                        max_len: int | None = None) -> OracleResult:
    """Minimize ``obj`` over every Kraft-tight monotone length vector.

    Returns the full set of minimizers (values within 1e-12 of the
    minimum), sorted lexicographically.  Raise ``max_n`` consciously: the
    number of tree shapes grows like 1.794^n.
    """
    if p.n > max_n:
        raise AlphabetTooLarge(f"n={p.n} exceeds the oracle cap {max_n}")
    best = float("inf")
    candidates: list[tuple[float, LengthVector]] = []
    count = 0
    for lv in enumerate_kraft_lengths(p.n, max_len):
        count += 1
        v = obj.evaluate(p, lv)
        if v < best - ARGMIN_TOL:
            best = v
            candidates = [(v, lv)]
        elif v <= best + ARGMIN_TOL:
            candidates.append((v, lv))
            best = min(best, v)
    argmin = sorted((lv for v, lv in candidates if v <= best + ARGMIN_TOL),
                    key=lambda lv: lv.lengths)
    return OracleResult(best, tuple(argmin), count)
