"""Huffman-style code construction under generalized combining rules.

The engine repeatedly replaces the two lowest-weight items a, b with one
item of weight f(a, b); the choice of f selects which objective the
resulting code minimizes:

* f = a + b                                 average redundancy
* f = 2 max(a, b)                           max pointwise redundancy
* f = (2^d a^(1+d) + 2^d b^(1+d))^(1/(1+d)) d-th exponential redundancy
* f = q a + q b                             exponential-average cost

Doubling rules overflow a linear float past depth 1023, so the max and
d-th exponential rules carry weights as base-2 logs; the additive rules
stay linear.

The merge order is made deterministic by a (weight, creation sequence)
priority: input symbols get sequence numbers by nondecreasing weight and
merged items get fresh, higher numbers, so a merged item queues behind
input items of equal weight.  Codeword bits are always assigned
canonically from the lengths, shortest first, stable on symbol index.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import (
    CodingError,
    LengthVector,
    Objective,
    Pmf,
    ceil_neg_lg,
    lg,
    lg_sum_exp2,
)

__all__ = [
    "KraftViolation",
    "RuleKind",
    "CombineRule",
    "MergeEvent",
    "MergeTrace",
    "CodeResult",
    "generalized_huffman",
    "two_queue_mmpr",
    "shannon_code",
    "j_shannon_code",
    "unary_code",
    "canonical_codewords",
]


class KraftViolation(CodingError):
    pass


class RuleKind(Enum):
    SUM = "sum"
    MAX_DOUBLE = "max_double"
    DTH_EXP = "dth_exp"
    EXP_BASE = "exp_base"


@dataclass(frozen=True)
class CombineRule:
    """Weight-combining rule f(a, b), strictly increasing in each argument."""

    kind: RuleKind
    param: float | None = None

    def __post_init__(self):
        if self.kind is RuleKind.DTH_EXP:
            d = self.param
            if d is None or not (-1.0 < d and d != 0.0):
                raise CodingError(f"d must lie in (-1,0) or (0,inf), got {d}")
        elif self.kind is RuleKind.EXP_BASE:
            q = self.param
            if q is None or not (q > 0.0 and q != 1.0):
                raise CodingError(f"q must lie in (0,inf) excluding 1, got {q}")
        elif self.param is not None:
            raise CodingError(f"{self.kind.value} rule takes no parameter")

    @staticmethod
    def sum() -> "CombineRule":
        return CombineRule(RuleKind.SUM)

    @staticmethod
    def max_double() -> "CombineRule":
        return CombineRule(RuleKind.MAX_DOUBLE)

    @staticmethod
    def dth_exp(d: float) -> "CombineRule":
        return CombineRule(RuleKind.DTH_EXP, float(d))

    @staticmethod
    def exp_base(q: float) -> "CombineRule":
        return CombineRule(RuleKind.EXP_BASE, float(q))

    @staticmethod
    def for_objective(obj: Objective) -> "CombineRule":
        from .core import ObjectiveKind

        table = {
            ObjectiveKind.AVG_REDUNDANCY: RuleKind.SUM,
            ObjectiveKind.MAX_POINTWISE: RuleKind.MAX_DOUBLE,
            ObjectiveKind.DTH_EXP: RuleKind.DTH_EXP,
            ObjectiveKind.EXP_AVERAGE: RuleKind.EXP_BASE,
        }
        return CombineRule(table[obj.kind], obj.param)

    def objective(self) -> Objective:
        if self.kind is RuleKind.SUM:
            return Objective.avg()
        if self.kind is RuleKind.MAX_DOUBLE:
            return Objective.max_pointwise()
        if self.kind is RuleKind.DTH_EXP:
            return Objective.dth_exp(self.param)
        return Objective.exp_average(self.param)

    @property
    def log_domain(self) -> bool:
        """Whether engine weights for this rule live in the base-2 log domain."""
        return self.kind in (RuleKind.MAX_DOUBLE, RuleKind.DTH_EXP)

    def combine(self, a: float, b: float) -> float:
        """f(a, b) on linear-domain weights (reference form, not the engine's)."""
        if self.kind is RuleKind.SUM:
            return a + b
        if self.kind is RuleKind.MAX_DOUBLE:
            return 2.0 * max(a, b)
        if self.kind is RuleKind.EXP_BASE:
            return self.param * a + self.param * b
        d = self.param
        return (2.0 ** d * a ** (1.0 + d) + 2.0 ** d * b ** (1.0 + d)) ** (1.0 / (1.0 + d))

    def _leaf_key(self, p: float) -> float:
        return lg(p) if self.log_domain else p

    def _combine_key(self, a: float, b: float) -> float:
        if self.kind is RuleKind.MAX_DOUBLE:
            return 1.0 + max(a, b)
        if self.kind is RuleKind.DTH_EXP:
            d = self.param
            return (d + lg_sum_exp2(((1.0 + d) * a, (1.0 + d) * b))) / (1.0 + d)
        if self.kind is RuleKind.SUM:
            return a + b
        return self.param * (a + b)


@dataclass(frozen=True)
class MergeEvent:
    """One merge step: weights combined and the ids of the nodes involved."""

    weight_a: float
    weight_b: float
    weight_out: float
    node_a: int
    node_b: int
    node_out: int


@dataclass(frozen=True)
class MergeTrace:
    """Ordered merge log; weights are base-2 logs when ``log_domain`` is set."""

    events: tuple[MergeEvent, ...]
    root_weight: float
    log_domain: bool


@dataclass(frozen=True)
class CodeResult:
    lengths: LengthVector
    codewords: tuple[str, ...]
    objective_value: float
    trace: MergeTrace | None = None


def _depths_from_parents(n_symbols: int, parent: dict[int, int]) -> list[int]:
    depths = []
    for i in range(n_symbols):
        d = 0
        node = i
        while node in parent:
            node = parent[node]
            d += 1
        depths.append(d)
    return depths


def _finish(p: Pmf, rule: CombineRule, parent: dict[int, int],
            events: list[MergeEvent], root_key: float) -> CodeResult:
    lengths = LengthVector(tuple(_depths_from_parents(p.n, parent)))
    trace = MergeTrace(tuple(events), root_key, rule.log_domain)
    value = rule.objective().evaluate(p, lengths)
    return CodeResult(lengths, canonical_codewords(lengths), value, trace)


def generalized_huffman(p: Pmf, rule: CombineRule) -> CodeResult:
    """Build an objective-optimal code for ``p`` under ``rule``.

    Returns per-symbol lengths (Kraft sum exactly 1), canonical codewords,
    the achieved objective value, and the full merge trace.
    """
    n = p.n
    if n == 1:
        return _finish(p, rule, {}, [], rule._leaf_key(p.probs[0]))

    # Symbols are sorted by nonincreasing probability, so symbol i gets
    # sequence number n-1-i: nondecreasing in weight, ties resolved toward
    # the later symbol.
    heap = [(rule._leaf_key(p.probs[i]), n - 1 - i, i) for i in range(n)]
    heapq.heapify(heap)
    next_seq = n
    next_id = n
    parent: dict[int, int] = {}
    events: list[MergeEvent] = []

    while len(heap) > 1:
        ka, _, ia = heapq.heappop(heap)
        kb, _, ib = heapq.heappop(heap)
        knew = rule._combine_key(ka, kb)
        parent[ia] = next_id
        parent[ib] = next_id
        events.append(MergeEvent(ka, kb, knew, ia, ib, next_id))
        heapq.heappush(heap, (knew, next_seq, next_id))
        next_seq += 1
        next_id += 1

    return _finish(p, rule, parent, events, heap[0][0])


def two_queue_mmpr(p: Pmf) -> CodeResult:
    """Max-pointwise-redundancy coder in linear time after the initial sort.

    Merged weights under the doubling rule come out nondecreasing, so a
    FIFO of merged items replaces the heap.  Output matches
    ``generalized_huffman`` with the doubling rule exactly, tie-break
    policy included.
    """
    rule = CombineRule.max_double()
    n = p.n
    if n == 1:
        return _finish(p, rule, {}, [], lg(p.probs[0]))

    # Input queue holds (log weight, sequence, node id) by nondecreasing
    # weight; sequence numbers of merged items are always higher, so a
    # plain tuple comparison reproduces the heap's tie-break.
    inputs = deque((lg(p.probs[i]), n - 1 - i, i) for i in range(n - 1, -1, -1))
    merged: deque[tuple[float, int, int]] = deque()
    next_seq = n
    next_id = n
    parent: dict[int, int] = {}
    events: list[MergeEvent] = []

    def pop_min() -> tuple[float, int, int]:
        if not merged or (inputs and inputs[0][:2] < merged[0][:2]):
            return inputs.popleft()
        return merged.popleft()

    for _ in range(n - 1):
        ka, _, ia = pop_min()
        kb, _, ib = pop_min()
        knew = 1.0 + max(ka, kb)
        parent[ia] = next_id
        parent[ib] = next_id
        events.append(MergeEvent(ka, kb, knew, ia, ib, next_id))
        merged.append((knew, next_seq, next_id))
        next_seq += 1
        next_id += 1

    return _finish(p, rule, parent, events, merged[0][0])


def shannon_code(p: Pmf) -> LengthVector:
    """Lengths ceil(-lg p_i); Kraft-valid, pointwise redundancy below 1."""
    return LengthVector(tuple(ceil_neg_lg(pi) for pi in p))


def j_shannon_code(p: Pmf, j: int) -> LengthVector:
    """Shannon-style code pinning symbol j (1-based) to length ceil(-lg p_j).

    The remaining symbols are coded against the conditional distribution
    scaled by (1 - 2^-l_j), which keeps the Kraft inequality satisfied.
    A single-symbol alphabet gets the null codeword.
    """
    n = p.n
    if not 1 <= j <= n:
        raise CodingError(f"j must be in 1..{n}, got {j}")
    if n == 1:
        return LengthVector((0,))
    pj = p.probs[j - 1]
    lam = ceil_neg_lg(pj)
    scale = (1.0 - 2.0 ** -lam) / (1.0 - pj)
    lengths = [lam if i == j - 1 else ceil_neg_lg(min(1.0, p.probs[i] * scale))
               for i in range(n)]
    return LengthVector(tuple(lengths))


def unary_code(n: int) -> LengthVector:
    """Lengths (1, 2, ..., n-1, n-1); the single-symbol code is (0,)."""
    if n < 1:
        raise CodingError(f"alphabet size must be >= 1, got {n}")
    if n == 1:
        return LengthVector((0,))
    return LengthVector(tuple(range(1, n)) + (n - 1,))


def canonical_codewords(l: LengthVector) -> tuple[str, ...]:
    """Assign lexicographically increasing codewords for the given lengths.

    Codewords are handed out shortest first (stable on symbol index), each
    the previous value plus one, shifted to the new length.  The result is
    prefix-free for every Kraft-valid input.
    """
    if not l.is_valid:
        raise KraftViolation(f"Kraft sum {l.kraft_sum} exceeds 1 for {l.lengths}")
    order = sorted(range(l.n), key=lambda i: (l.lengths[i], i))
    codes: list[str] = [""] * l.n
    value = 0
    prev_len = None
    for idx in order:
        li = l.lengths[idx]
        if prev_len is not None:
            value = (value + 1) << (li - prev_len)
        if li > 0:
            bits = format(value, "b").zfill(li)
            assert len(bits) == li
            codes[idx] = bits
        prev_len = li
    return tuple(codes)
