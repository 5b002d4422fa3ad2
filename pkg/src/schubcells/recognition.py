"""Oracle-driven cell recognition and decision trees.

The general recognizer walks the levels in the active ordering, keeping the
surviving candidate set as a coset v W_J.  At each level it scans the coset
orbit downward along a Bruhat-compatible linear order and stops at the first
nonzero bit; under acceptability all 1-bits of the coset orbit sit below its
per-level maximum, so the first 1 found is that maximum.  When every element
above the bottom answered zero the bottom is forced and is not queried
(queries are what we count, and the forced bit carries no information).
``check_input=True`` queries forced bits anyway and raises on a violation.

Oracles memoize their answers, so no deterministic run ever pays for a
repeated question; the query log records first-time queries only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import UnacceptableInputError
from .flags import Flag, type_a_group
from .patterns import VanishingPattern, generic_pattern
from .plucker import (
    PluckerWeight,
    WeightOrdering,
    all_weights,
    is_economical_ordering,
    orbit_table,
    standard_ordering,
    subset_of,
    weight_from_subset,
    weight_label,
)
from .weyl import WeylElement, WeylGroup


@dataclass
class QueryLog:
    entries: list[tuple[PluckerWeight, int]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.entries)

    def weights(self) -> tuple[PluckerWeight, ...]:
        return tuple(pw for pw, _ in self.entries)


class PatternOracle:
    """Answers membership bits from a stored vanishing pattern."""

    def __init__(self, pattern: VanishingPattern):
        self.pattern = pattern

    def query(self, pw: PluckerWeight) -> int:
        return self.pattern.bit(pw)


class FlagOracle:
    """Evaluates the exact minor of a flag on demand (type A)."""

    def __init__(self, flag: Flag):
        self.flag = flag

    def query(self, pw: PluckerWeight) -> int:
        return 1 if self.flag.minor(frozenset(subset_of(pw))) != 0 else 0


class CountingOracle:
    """Memoizing wrapper that records first-time queries."""

    def __init__(self, inner):
        self.inner = inner
        self.log = QueryLog()
        self._memo: dict[PluckerWeight, int] = {}

    def query(self, pw: PluckerWeight) -> int:
        bit = self._memo.get(pw)
        if bit is None:
            bit = 1 if self.inner.query(pw) else 0
            self._memo[pw] = bit
            self.log.entries.append((pw, bit))
        return bit


def _suborbit_with_reps(group: WeylGroup, i: int, J: frozenset[int]):
    """The orbit W_J omega_i as (weight, minimal representative in W_J) pairs."""
    omega = group.fundamental_weights[i - 1]
    reps = {omega: group.identity}
    frontier = [omega]
    while frontier:
        nxt = []
        for v in frontier:
            for j in sorted(J):
                v2 = group.reflect(j, v)
                if v2 == v or v2 in reps:
                    continue
                reps[v2] = group.multiply(group.simple(j), reps[v])
                nxt.append(v2)
        frontier = nxt
    return list(reps.items())


def _scan_plan(group: WeylGroup, ordering: WeightOrdering, pos: int, v: WeylElement):
    """Descending Bruhat-compatible scan of v W_J omega_i, with the coset
    updates attached: list of (PluckerWeight, rep to fold into v)."""
    key = ("scan", ordering.order, pos, v.fingerprint)
    plan = group._cache.get(key)
    if plan is not None:
        return plan
    i = ordering.order[pos]
    J = ordering.tail(pos)
    table = orbit_table(group, i)
    entries = []
    for delta, rep in _suborbit_with_reps(group, i, J):
        eta = table.lookup(group.act(v, delta))
        entries.append((eta, rep))
    entries.sort(key=lambda e: (e[0].min_rep.length, e[0].min_rep.word), reverse=True)
    if is_economical_ordering(group, ordering):
        for (a, _), (b, _) in zip(entries, entries[1:]):
            if not table.leq(b, a):
                raise RuntimeError(
                    "economical ordering produced a non-linear scan set"
                )
    group._cache[key] = entries
    return entries


def recognize_general(
    oracle,
    group: WeylGroup,
    ordering: WeightOrdering | None = None,
    check_input: bool = False,
) -> tuple[WeylElement, QueryLog]:
    """Identify the witness of an acceptable bit vector behind an oracle."""
    if ordering is None:
        ordering = standard_ordering(group)
    counter = oracle if isinstance(oracle, CountingOracle) else CountingOracle(oracle)
    v = group.identity
    for pos in range(group.rank):
        plan = _scan_plan(group, ordering, pos, v)
        if not plan:
            raise UnacceptableInputError("empty scan set")
        chosen = None
        for t, (eta, rep) in enumerate(plan):
            if t == len(plan) - 1:
                # Forced: everything above answered zero.
                if check_input and counter.query(eta) == 0:
                    raise UnacceptableInputError(
                        f"all bits of a level-{eta.level} coset orbit are zero"
                    )
                chosen = rep
                break
            if counter.query(eta):
                chosen = rep
                break
        v = group.multiply(v, chosen)
    return v, counter.log


def recognize_typeA(oracle, n: int, check_input: bool = False):
    """Recognize the cell of a complete flag in C^n, testing at most
    n(n-1)/2 bits.  Returns (one-line permutation, QueryLog)."""
    group = type_a_group(n)
    counter = oracle if isinstance(oracle, CountingOracle) else CountingOracle(oracle)
    I: set[int] = set()
    w = []
    for i in range(1, n + 1):
        rest_min = min(x for x in range(1, n + 1) if x not in I)
        k = n
        while k > rest_min and (
            k in I or counter.query(weight_from_subset(group, I | {k})) == 0
        ):
            k -= 1
        if check_input and k == rest_min and len(I) + 1 < n:
            if counter.query(weight_from_subset(group, I | {k})) == 0:
                raise UnacceptableInputError(
                    f"level-{i} scan found no nonzero bit"
                )
        w.append(k)
        I.add(k)
    return tuple(w), counter.log


# ----- decision trees --------------------------------------------------------------


@dataclass
class TreeLeaf:
    w: WeylElement

    @property
    def depth(self) -> int:
        return 0


@dataclass
class TreeNode:
    weight: PluckerWeight
    low: "TreeNode | TreeLeaf | None"   # branch for bit 0
    high: "TreeNode | TreeLeaf | None"  # branch for bit 1

    @property
    def depth(self) -> int:
        sub = [c.depth for c in (self.low, self.high) if c is not None]
        return 1 + (max(sub) if sub else 0)


@dataclass
class DecisionTree:
    group: WeylGroup
    root: TreeNode | TreeLeaf
    strategy: str

    @property
    def depth(self) -> int:
        return self.root.depth

    def route(self, pattern: VanishingPattern) -> tuple[WeylElement, int]:
        node = self.root
        queries = 0
        while isinstance(node, TreeNode):
            queries += 1
            node = node.high if pattern.bit(node.weight) else node.low
            if node is None:
                raise UnacceptableInputError("pattern fell off the decision tree")
        return node.w, queries

    def to_dot(self) -> str:
        lines = ["digraph recognition {"]
        counter = [0]

        def emit(node) -> str:
            name = f"n{counter[0]}"
            counter[0] += 1
            if isinstance(node, TreeLeaf):
                label = _element_label(self.group, node.w)
                lines.append(f'  {name} [shape=box, label="{label}"];')
                return name
            label = weight_label(self.group, node.weight)
            lines.append(f'  {name} [label="{label}"];')
            if node.low is not None:
                child = emit(node.low)
                lines.append(f'  {name} -> {child} [label="=0"];')
            if node.high is not None:
                child = emit(node.high)
                lines.append(f'  {name} -> {child} [label="!=0"];')
            return name

        emit(self.root)
        lines.append("}")
        return "\n".join(lines)


def _element_label(group: WeylGroup, w: WeylElement) -> str:
    if group.type_letter == "A":
        return "".join(str(x) for x in group.one_line(w))
    from .weyl import word_str

    return word_str(w.word)


ACCEPTABLE_ENUMERATION_CAP = 200_000


def all_acceptable_patterns(group: WeylGroup):
    """Every acceptable bit vector, as (bits tuple, witness) pairs."""
    from itertools import product as _product

    weights = all_weights(group)
    offsets = {}
    pos = 0
    for i in range(1, group.rank + 1):
        offsets[i] = pos
        pos += len(orbit_table(group, i))
    total = 0
    per_w = []
    for w in group.elements():
        free_per_level = []
        fixed = [0] * len(weights)
        for i in range(1, group.rank + 1):
            table = orbit_table(group, i)
            jw = table.index[group.act(w, group.fundamental_weights[i - 1])]
            ups = table.up_masks()
            fixed[offsets[i] + jw] = 1
            free = [
                offsets[i] + k
                for k in range(len(table))
                if k != jw and ups[k] >> jw & 1
            ]
            free_per_level.extend(free)
        count = 2 ** len(free_per_level)
        total += count
        per_w.append((w, tuple(fixed), tuple(free_per_level)))
        if total > ACCEPTABLE_ENUMERATION_CAP:
            raise ValueError(
                f"acceptable-vector enumeration exceeds cap {ACCEPTABLE_ENUMERATION_CAP}"
            )
    out = []
    for w, fixed, free in per_w:
        for choice in _product((0, 1), repeat=len(free)):
            bits = list(fixed)
            for idx, b in zip(free, choice):
                bits[idx] = b
            out.append((tuple(bits), w))
    return out


def build_decision_tree(
    group: WeylGroup,
    strategy: str = "algorithmic",
    ordering: WeightOrdering | None = None,
) -> DecisionTree:
    if strategy not in ("algorithmic", "optimal"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "optimal" and len(group) > 1000:
        raise ValueError("optimal tree search is capped at |W| <= 1000")
    vectors = all_acceptable_patterns(group)
    if strategy == "algorithmic":
        return _algorithmic_tree(group, ordering, vectors)
    return _optimal_tree(group, vectors)


def _algorithmic_tree(group, ordering, vectors) -> DecisionTree:
    trie: dict = {}
    for bits, witness in vectors:
        pattern = VanishingPattern(group, bits)
        w, log = recognize_general(PatternOracle(pattern), group, ordering)
        assert w == witness
        node = trie
        for pw, bit in log.entries:
            key = (pw, bit)
            node = node.setdefault(key, {})
        prior = node.setdefault("leaf", w)
        assert prior == w

    def build(node):
        if set(node) == {"leaf"}:
            return TreeLeaf(node["leaf"])
        weights = {pw for (pw, _bit) in node if _bit in (0, 1)}
        assert len(weights) == 1, "algorithmic runs diverged without a query"
        (pw,) = weights
        low = node.get((pw, 0))
        high = node.get((pw, 1))
        return TreeNode(
            pw,
            build(low) if low is not None else None,
            build(high) if high is not None else None,
        )

    return DecisionTree(group, build(trie), "algorithmic")


def _optimal_tree(group, vectors) -> DecisionTree:
    weights = all_weights(group)
    witnesses = [w for _bits, w in vectors]
    bitcols = [bits for bits, _w in vectors]
    memo: dict[frozenset, tuple[int, object]] = {}

    def lower_bound(ids) -> int:
        distinct = len({witnesses[t].fingerprint for t in ids})
        return (distinct - 1).bit_length()

    def solve(ids: frozenset):
        hit = memo.get(ids)
        if hit is not None:
            return hit
        first = witnesses[next(iter(ids))]
        if all(witnesses[t] == first for t in ids):
            result = (0, TreeLeaf(first))
            memo[ids] = result
            return result
        lb = lower_bound(ids)
        best = None
        for q in range(len(weights)):
            zero = frozenset(t for t in ids if bitcols[t][q] == 0)
            if not zero or len(zero) == len(ids):
                continue
            one = ids - zero
            d0, t0 = solve(zero)
            d1, t1 = solve(one)
            cand = (1 + max(d0, d1), TreeNode(weights[q], t0, t1))
            if best is None or cand[0] < best[0]:
                best = cand
                if best[0] == lb:
                    break
        memo[ids] = best
        return best

    depth, root = solve(frozenset(range(len(vectors))))
    return DecisionTree(group, root, "optimal")


def worst_case_queries(
    group: WeylGroup, method: str = "algorithmic", ordering: WeightOrdering | None = None
) -> int:
    """Maximum query count over all acceptable inputs.

    For the adaptive algorithm the count depends only on the witness, so the
    maximum is taken by running it on every generic pattern.  For the optimal
    strategy it is the minimax tree depth.
    """
    if method == "algorithmic":
        worst = 0
        for w in group.elements():
            oracle = PatternOracle(generic_pattern(group, w))
            _, log = recognize_general(oracle, group, ordering)
            worst = max(worst, log.count)
        return worst
    if method == "optimal":
        return build_decision_tree(group, "optimal", ordering).depth
    raise ValueError(f"unknown method {method!r}")
