"""Plucker weights (orbits of fundamental weights), the Bruhat order carried
to each orbit through minimal coset representatives, the R(i) root sets,
and economical indices / orderings of the fundamental weights.

Orbits are materialized eagerly in a canonical order (length of the minimal
coset representative, then shortlex word) so that every "pick a linear order
compatible with the Bruhat order" step downstream is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import Vector
from .weyl import Root, WeylElement, WeylGroup, word_str


@dataclass(frozen=True)
class PluckerWeight:
    """A weight in the orbit W omega_i, with its minimal coset representative.

    Equality and hashing use (level, weight) only.
    """

    level: int
    weight: Vector
    min_rep: WeylElement = field(compare=False, repr=False)

    def __hash__(self):
        return hash((self.level, self.weight))

    def __repr__(self):
        return f"PluckerWeight(level={self.level}, {word_str(self.min_rep.word)})"


@dataclass(frozen=True)
class WeightOrdering:
    """A linear order on the fundamental weight indices 1..r."""

    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError(f"{self.order} is not a permutation of 1..{len(self.order)}")

    @property
    def rank(self) -> int:
        return len(self.order)

    def position(self, i: int) -> int:
        """0-based position of index i in the order."""
        return self.order.index(i)

    def tail(self, pos: int) -> frozenset[int]:
        """Indices at positions pos, pos+1, ... (0-based)."""
        return frozenset(self.order[pos:])

    def __iter__(self):
        return iter(self.order)


def standard_ordering(group: WeylGroup) -> WeightOrdering:
    """Bourbaki order for A/B/C/G2; for D the chain 1..r-3 followed by a leaf,
    the trivalent node, and the other leaf (the order minimizing the extra
    equations a type D cell description needs)."""
    r = group.rank
    if group.type_letter == "D":
        return WeightOrdering(tuple(range(1, r - 2)) + (r - 1, r - 2, r))
    return WeightOrdering(tuple(range(1, r + 1)))


class OrbitTable:
    """Materialized orbit W omega_i with minimal coset representatives and
    cached pairwise Bruhat comparisons (as bitmasks)."""

    def __init__(self, group: WeylGroup, level: int):
        self.group = group
        self.level = level
        group.ensure_enumerated()
        omega = group.fundamental_weights[level - 1]
        reps: dict[Vector, WeylElement] = {omega: group.identity}
        frontier = [omega]
        while frontier:
            nxt = []
            for v in frontier:
                rep = reps[v]
                for i in range(1, group.rank + 1):
                    v2 = group.reflect(i, v)
                    if v2 == v or v2 in reps:
                        continue
                    reps[v2] = group.multiply(group.simple(i), rep)
                    nxt.append(v2)
            frontier = nxt
        weights = [
            PluckerWeight(level, v, rep) for v, rep in reps.items()
        ]
        weights.sort(key=lambda pw: (pw.min_rep.length, pw.min_rep.word))
        self.weights: tuple[PluckerWeight, ...] = tuple(weights)
        self.index: dict[Vector, int] = {pw.weight: k for k, pw in enumerate(weights)}
        self._up_masks: list[int] | None = None

    def __len__(self):
        return len(self.weights)

    def lookup(self, v: Vector) -> PluckerWeight:
        return self.weights[self.index[v]]

    def up_masks(self) -> list[int]:
        """up_masks()[j] has bit k set iff weights[j] <= weights[k]."""
        if self._up_masks is None:
            g = self.group
            n = len(self.weights)
            idx = [g.index_of(pw.min_rep) for pw in self.weights]
            masks = [0] * n
            for j in range(n):
                m = 0
                for k in range(n):
                    if g._bruhat_leq_idx(idx[j], idx[k]):
                        m |= 1 << k
                masks[j] = m
            self._up_masks = masks
        return self._up_masks

    def leq(self, a: PluckerWeight, b: PluckerWeight) -> bool:
        ja = self.index[a.weight]
        jb = self.index[b.weight]
        return bool(self.up_masks()[ja] >> jb & 1)


def orbit(group: WeylGroup, level: int) -> tuple[PluckerWeight, ...]:
    """All Plucker weights of the given level, canonically ordered."""
    return orbit_table(group, level).weights


def orbit_table(group: WeylGroup, level: int) -> OrbitTable:
    if not 1 <= level <= group.rank:
        raise ValueError(f"level {level} out of range 1..{group.rank}")
    key = ("orbit", level)
    table = group._cache.get(key)
    if table is None:
        table = OrbitTable(group, level)
        group._cache[key] = table
    return table


def all_weights(group: WeylGroup) -> tuple[PluckerWeight, ...]:
    key = "all_weights"
    out = group._cache.get(key)
    if out is None:
        out = tuple(pw for i in range(1, group.rank + 1) for pw in orbit(group, i))
        group._cache[key] = out
    return out


def weight_of(group: WeylGroup, w: WeylElement, level: int) -> PluckerWeight:
    """The Plucker weight w omega_i."""
    v = group.act(w, group.fundamental_weights[level - 1])
    return orbit_table(group, level).lookup(v)


def orbit_bruhat_leq(group: WeylGroup, a: PluckerWeight, b: PluckerWeight) -> bool:
    """Bruhat order on W omega_i, transferred from W/W_{i-hat} through the
    minimal coset representatives."""
    if a.level != b.level:
        raise ValueError(f"cannot compare weights of levels {a.level} and {b.level}")
    return orbit_table(group, a.level).leq(a, b)


# ----- orbit sizes without group enumeration ---------------------------------

def orbit_vectors(group: WeylGroup, level: int, J=None) -> frozenset[Vector]:
    """The orbit of omega_i under W_J (all of W when J is None), weights only.

    Runs on vectors alone, so it stays cheap for ranks where enumerating the
    group would not.
    """
    if not 1 <= level <= group.rank:
        raise ValueError(f"level {level} out of range 1..{group.rank}")
    gens = range(1, group.rank + 1) if J is None else sorted(group.check_parabolic(J))
    omega = group.fundamental_weights[level - 1]
    seen = {omega}
    frontier = [omega]
    while frontier:
        nxt = []
        for v in frontier:
            for i in gens:
                v2 = group.reflect(i, v)
                if v2 not in seen:
                    seen.add(v2)
                    nxt.append(v2)
        frontier = nxt
    return frozenset(seen)


# ----- R(i) and mu ------------------------------------------------------------

def roots_R(group: WeylGroup, i: int) -> tuple[Root, ...]:
    """Positive roots whose simple-root expansion involves alpha_i."""
    return tuple(rt for rt in group.positive_roots() if rt.expansion[i - 1] != 0)


def mu(group: WeylGroup, root: Root, ordering: WeightOrdering | None = None) -> int:
    """The earliest index (in the active ordering) whose simple root appears
    in the expansion of the given positive root."""
    if ordering is None:
        ordering = standard_ordering(group)
    if not root.is_positive:
        raise ValueError("mu expects a positive root")
    for i in ordering:
        if root.expansion[i - 1] != 0:
            return i
    raise ValueError("root has empty support")


def reflection_weight_map(group: WeylGroup, i: int) -> dict[Root, PluckerWeight]:
    """alpha -> s_alpha omega_i, an embedding of R(i) into the orbit minus omega_i."""
    table = orbit_table(group, i)
    omega = group.fundamental_weights[i - 1]
    out = {}
    for rt in roots_R(group, i):
        image = group.reflect_by_root(rt, omega)
        pw = table.lookup(image)
        if pw.weight == omega:
            raise RuntimeError("reflection image unexpectedly fixed omega_i")
        out[rt] = pw
    return out


# ----- economical indices and orderings ----------------------------------------

def _parabolic_positive_root_count(group: WeylGroup, i: int, J: frozenset[int]) -> int:
    """|{alpha > 0 : support(alpha) within J, alpha_i in support(alpha)}|."""
    count = 0
    for rt in group.positive_roots():
        sup = rt.support()
        if i in sup and sup <= J:
            count += 1
    return count


def is_economical_index_parabolic(group: WeylGroup, i: int, J) -> bool:
    """Whether index i is economical for the parabolic subgroup W_J."""
    J = group.check_parabolic(J)
    if i not in J:
        raise ValueError(f"index {i} not in parabolic subset {sorted(J)}")
    orbit_size = len(orbit_vectors(group, i, J))
    return 1 + _parabolic_positive_root_count(group, i, J) == orbit_size


def is_economical_index(group: WeylGroup, i: int) -> bool:
    """Whether 1 + |R(i)| = |W omega_i|."""
    return 1 + len(roots_R(group, i)) == len(orbit_vectors(group, i))


def is_economical_ordering(group: WeylGroup, ordering: WeightOrdering) -> bool:
    """Whether each index is economical for the parabolic generated by the
    indices from its position onward."""
    if ordering.rank != group.rank:
        raise ValueError("ordering rank does not match the group")
    key = ("econ_ordering", ordering.order)
    hit = group._cache.get(key)
    if hit is None:
        hit = all(
            is_economical_index_parabolic(group, ordering.order[pos], ordering.tail(pos))
            for pos in range(group.rank)
        )
        group._cache[key] = hit
    return hit


def linear_order_check(group: WeylGroup, i: int) -> bool:
    """Whether the Bruhat order on W omega_i is a total order."""
    table = orbit_table(group, i)
    n = len(table)
    masks = table.up_masks()
    for a in range(n):
        for b in range(a + 1, n):
            if not (masks[a] >> b & 1 or masks[b] >> a & 1):
                return False
    return True


def linearity_matches_economical(group: WeylGroup) -> bool:
    """Exhaustive check that orbit linearity occurs exactly at economical
    indices (an observed coincidence, verified rather than assumed)."""
    return all(
        linear_order_check(group, i) == is_economical_index(group, i)
        for i in range(1, group.rank + 1)
    )


# ----- serialization ------------------------------------------------------------

def subset_of(pw: PluckerWeight) -> frozenset[int]:
    """The subset underlying a type A Plucker weight (indicator coordinates)."""
    if not all(x in (0, 1) for x in pw.weight):
        raise ValueError("weight is not a type A indicator vector")
    return frozenset(j + 1 for j, x in enumerate(pw.weight) if x == 1)


def weight_from_subset(group: WeylGroup, subset) -> PluckerWeight:
    subset = frozenset(subset)
    n = group.rank + 1
    v = tuple(Fraction(1 if j + 1 in subset else 0) for j in range(n))
    return orbit_table(group, len(subset)).lookup(v)


def subset_str(subset) -> str:
    items = sorted(subset)
    if items and items[-1] <= 9:
        return "".join(str(x) for x in items)
    return "{" + ",".join(str(x) for x in items) + "}"


def weight_label(group: WeylGroup, pw: PluckerWeight) -> str:
    """Human-readable label: p13 in type A, p(level:word) otherwise."""
    if group.type_letter == "A":
        return "p" + subset_str(subset_of(pw))
    return f"p({pw.level}:{word_str(pw.min_rep.word)})"


def weight_json(group: WeylGroup, pw: PluckerWeight):
    if group.type_letter == "A":
        return subset_str(subset_of(pw))
    return [pw.level, word_str(pw.min_rep.word)]


def orbit_json(group: WeylGroup, level: int) -> str:
    import json

    return json.dumps([weight_json(group, pw) for pw in orbit(group, level)])
