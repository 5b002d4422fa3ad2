"""Set-theoretic descriptions of Schubert varieties and cells.

  variety_equations          the universal defining set {gamma : gamma !<= w omega_i}
  cell_description_general   r inequalities plus the coset weights above w omega_i
  cell_description_economical  one equation per root kept positive by w, one
                               inequality per level hit by a flipped root
                               (requires an economical ordering)
  cell_description_typeA     the explicit subset form for permutations
  cell_description_typeD     economical-style sets under the dedicated D
                               ordering plus the sign-flip equations

The economical description uses exactly #positive-roots - length(w) equations
and at most min(rank, length(w)) inequalities; counts are asserted, not
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plucker import (
    PluckerWeight,
    WeightOrdering,
    is_economical_ordering,
    mu,
    orbit_table,
    standard_ordering,
    weight_from_subset,
    weight_of,
)
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class CellDescription:
    w: WeylElement
    equalities: tuple[PluckerWeight, ...]
    inequalities: tuple[PluckerWeight, ...]
    ordering: WeightOrdering
    # Type D only: candidate pairs the Bruhat comparison left undecided.
    incomparable: tuple[tuple[PluckerWeight, PluckerWeight], ...] = ()

    def __post_init__(self):
        eq = set(self.equalities)
        if eq & set(self.inequalities):
            raise ValueError("a weight cannot be both an equality and an inequality")
        group = self.w.group
        for i in range(1, group.rank + 1):
            if weight_of(group, self.w, i) in eq:
                raise ValueError("w omega_i can never be required to vanish")

    @property
    def size(self) -> int:
        return len(self.equalities) + len(self.inequalities)


@dataclass(frozen=True)
class VarietyDescription:
    w: WeylElement
    equalities: tuple[PluckerWeight, ...]

    @property
    def inequalities(self) -> tuple[PluckerWeight, ...]:
        return ()


def variety_equations(group: WeylGroup, w: WeylElement) -> VarietyDescription:
    """All Plucker weights not below the per-level maxima of w."""
    eqs = []
    for i in range(1, group.rank + 1):
        table = orbit_table(group, i)
        jw = table.index[group.act(w, group.fundamental_weights[i - 1])]
        ups = table.up_masks()
        for k, pw in enumerate(table.weights):
            if not ups[k] >> jw & 1:
                eqs.append(pw)
    return VarietyDescription(w, tuple(eqs))


def _coset_orbit(group: WeylGroup, w: WeylElement, i: int, J: frozenset[int]):
    """The weights w W_J omega_i as PluckerWeights."""
    table = orbit_table(group, i)
    omega = group.fundamental_weights[i - 1]
    seen = {omega}
    frontier = [omega]
    while frontier:
        nxt = []
        for v in frontier:
            for j in sorted(J):
                v2 = group.reflect(j, v)
                if v2 not in seen:
                    seen.add(v2)
                    nxt.append(v2)
        frontier = nxt
    return [table.lookup(group.act(w, v)) for v in seen]


def cell_description_general(
    group: WeylGroup, w: WeylElement, ordering: WeightOrdering | None = None
) -> CellDescription:
    """All r inequalities p_{w omega_i} != 0 plus, per level, the coset-orbit
    weights strictly above w omega_i."""
    if ordering is None:
        ordering = standard_ordering(group)
    ineqs = [weight_of(group, w, i) for i in ordering]
    eqs = []
    for pos in range(group.rank):
        i = ordering.order[pos]
        J = ordering.tail(pos)
        table = orbit_table(group, i)
        top = weight_of(group, w, i)
        for pw in _coset_orbit(group, w, i, J):
            if pw != top and table.leq(top, pw):
                eqs.append(pw)
    return CellDescription(w, tuple(eqs), tuple(ineqs), ordering)


def _economical_style_sets(group: WeylGroup, w: WeylElement, ordering: WeightOrdering):
    """Equalities {w s_alpha omega_{mu(alpha)} : w alpha > 0} and inequalities
    {w omega_i : some alpha with mu(alpha) = i has w alpha < 0}."""
    eqs: list[PluckerWeight] = []
    ineq_levels: set[int] = set()
    for rt in group.positive_roots():
        level = mu(group, rt, ordering)
        image = group.act(w, rt.coords)
        if group.root_sign(image) > 0:
            moved = group.reflect_by_root(rt, group.fundamental_weights[level - 1])
            eqs.append(orbit_table(group, level).lookup(group.act(w, moved)))
        else:
            ineq_levels.add(level)
    if len(set(eqs)) != len(eqs):
        raise RuntimeError("economical equalities unexpectedly collided")
    ineqs = [weight_of(group, w, i) for i in ordering if i in ineq_levels]
    return eqs, ineqs


def cell_description_economical(
    group: WeylGroup, w: WeylElement, ordering: WeightOrdering | None = None
) -> CellDescription:
    if ordering is None:
        ordering = standard_ordering(group)
    if not is_economical_ordering(group, ordering):
        raise ValueError(
            f"ordering {ordering.order} is not economical for {group.datum.name}"
        )
    eqs, ineqs = _economical_style_sets(group, w, ordering)
    expected = len(group.positive_roots()) - w.length
    if len(eqs) != expected:
        raise RuntimeError(f"expected {expected} equations, generated {len(eqs)}")
    return CellDescription(w, tuple(eqs), tuple(ineqs), ordering)


def cell_description_typeA(group: WeylGroup, w) -> CellDescription:
    """Explicit description for permutations: p_{w([1,i-1] + {j})} = 0 for
    i < j with w(i) < w(j), and p_{w([1,i])} != 0 when some later value drops
    below w(i)."""
    if group.type_letter != "A":
        raise ValueError("type A description requires a type A group")
    if isinstance(w, WeylElement):
        perm = group.one_line(w)
        elem = w
    else:
        perm = tuple(w)
        elem = group.from_one_line(perm)
    n = group.rank + 1
    eqs = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if perm[i - 1] < perm[j - 1]:
                I = frozenset(perm[: i - 1]) | {perm[j - 1]}
                eqs.append(weight_from_subset(group, I))
    ineqs = []
    for i in range(1, n):
        if any(perm[j - 1] < perm[i - 1] for j in range(i + 1, n + 1)):
            ineqs.append(weight_from_subset(group, frozenset(perm[:i])))
    return CellDescription(elem, tuple(eqs), tuple(ineqs), standard_ordering(group))


def cell_description_typeD(
    group: WeylGroup, w: WeylElement, ordering: WeightOrdering | None = None
) -> CellDescription:
    """Economical-style sets under the dedicated D ordering, extended by the
    equations p_{w(e_1+...+e_{i-1}-e_i)} = 0 whenever that weight lies
    strictly above w(e_1+...+e_i), for i <= r-3.

    Candidate pairs on which the Bruhat comparison is undecided are not
    turned into equations; they are reported in ``incomparable``.
    """
    if group.type_letter != "D":
        raise ValueError("type D description requires a type D group")
    if ordering is None:
        ordering = standard_ordering(group)
    if ordering != standard_ordering(group):
        raise ValueError("the type D description requires its dedicated ordering")
    eqs, ineqs = _economical_style_sets(group, w, ordering)
    base_count = len(eqs)
    assert base_count == len(group.positive_roots()) - w.length
    r = group.rank
    seen = set(eqs)
    incomparable = []
    for i in range(1, r - 2):
        table = orbit_table(group, i)
        flipped = list(group.fundamental_weights[i - 1])
        flipped[i - 1] = -flipped[i - 1]
        candidate = table.lookup(group.act(w, tuple(flipped)))
        top = weight_of(group, w, i)
        above = table.leq(top, candidate) and candidate != top
        below = table.leq(candidate, top)
        if above:
            if candidate not in seen:
                eqs.append(candidate)
                seen.add(candidate)
        elif not below and candidate != top:
            incomparable.append((candidate, top))
    return CellDescription(
        w, tuple(eqs), tuple(ineqs), ordering, incomparable=tuple(incomparable)
    )


def verify_description(description, pattern) -> bool:
    """Whether a vanishing pattern satisfies all equalities (bit 0) and all
    inequalities (bit 1) of a cell or variety description."""
    return all(pattern.bit(pw) == 0 for pw in description.equalities) and all(
        pattern.bit(pw) == 1 for pw in description.inequalities
    )
