"""Vanishing patterns as first-class objects: acceptability, generic
patterns, random acceptable vectors, restriction, the degeneration poset of
restricted patterns, and the certified realizable sets at small n.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import perms
from .errors import UnacceptableInputError
from .plucker import (
    PluckerWeight,
    all_weights,
    orbit,
    orbit_table,
    subset_of,
    weight_from_subset,
)
from .weyl import WeylElement, WeylGroup


class VanishingPattern:
    """One bit per Plucker weight, total over all levels of the group."""

    __slots__ = ("group", "bits")

    def __init__(self, group: WeylGroup, bits: tuple[int, ...]):
        weights = all_weights(group)
        if len(bits) != len(weights):
            raise ValueError("pattern must assign a bit to every Plucker weight")
        self.group = group
        self.bits = tuple(1 if b else 0 for b in bits)

    @classmethod
    def from_dict(cls, group: WeylGroup, mapping) -> "VanishingPattern":
        weights = all_weights(group)
        missing = [pw for pw in weights if pw not in mapping]
        if missing:
            raise ValueError(f"pattern is missing {len(missing)} weights")
        return cls(group, tuple(mapping[pw] for pw in weights))

    def bit(self, pw: PluckerWeight) -> int:
        return self.bits[_weight_index(self.group, pw)]

    def as_dict(self) -> dict[PluckerWeight, int]:
        return dict(zip(all_weights(self.group), self.bits))

    def restrict(self, coords) -> tuple[int, ...]:
        return tuple(self.bit(pw) for pw in coords)

    def __eq__(self, other):
        return (
            isinstance(other, VanishingPattern)
            and (self.group is other.group or self.group.datum == other.group.datum)
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return f"VanishingPattern({''.join(map(str, self.bits))})"


def _weight_index(group: WeylGroup, pw: PluckerWeight) -> int:
    key = "weight_index"
    idx = group._cache.get(key)
    if idx is None:
        idx = {w: k for k, w in enumerate(all_weights(group))}
        group._cache[key] = idx
    return idx[pw]


@dataclass(frozen=True)
class AcceptabilityReport:
    accepted: bool
    per_level_max: dict[int, PluckerWeight | None]
    witness: WeylElement | None
    failure_reason: str | None  # empty_level | no_unique_max | no_common_w

    def require_witness(self) -> WeylElement:
        if not self.accepted or self.witness is None:
            raise UnacceptableInputError(f"pattern rejected: {self.failure_reason}")
        return self.witness


def check_acceptable(pattern: VanishingPattern) -> AcceptabilityReport:
    """Each level must carry a nonempty 1-set with a unique maximal element,
    and the per-level maxima must come from a single group element."""
    group = pattern.group
    per_level: dict[int, PluckerWeight | None] = {}
    maxima: list[PluckerWeight] = []
    for i in range(1, group.rank + 1):
        table = orbit_table(group, i)
        ones = [k for k, pw in enumerate(table.weights) if pattern.bit(pw)]
        if not ones:
            per_level[i] = None
            return AcceptabilityReport(False, per_level, None, "empty_level")
        ones_mask = 0
        for k in ones:
            ones_mask |= 1 << k
        ups = table.up_masks()
        maximal = [k for k in ones if ups[k] & ones_mask == 1 << k]
        if len(maximal) != 1:
            per_level[i] = None
            return AcceptabilityReport(False, per_level, None, "no_unique_max")
        top = table.weights[maximal[0]]
        per_level[i] = top
        maxima.append(top)
    total = maxima[0].weight
    for pw in maxima[1:]:
        total = tuple(a + b for a, b in zip(total, pw.weight))
    w = group.element_with_rho_image(total)
    if w is None or any(
        group.act(w, group.fundamental_weights[i - 1]) != maxima[i - 1].weight
        for i in range(1, group.rank + 1)
    ):
        return AcceptabilityReport(False, per_level, None, "no_common_w")
    return AcceptabilityReport(True, per_level, w, None)


def generic_pattern(group: WeylGroup, w: WeylElement) -> VanishingPattern:
    """Bit 1 exactly on the weights below-or-equal w omega_i in orbit order."""
    bits = []
    for i in range(1, group.rank + 1):
        table = orbit_table(group, i)
        jw = table.index[group.act(w, group.fundamental_weights[i - 1])]
        ups = table.up_masks()
        bits.extend(1 if ups[k] >> jw & 1 else 0 for k in range(len(table)))
    return VanishingPattern(group, tuple(bits))


def coordinate_flag_pattern(group: WeylGroup, w: WeylElement) -> VanishingPattern:
    """The pattern of the coordinate flag of w (type A): bit 1 exactly on the
    prefix subsets w([1, i])."""
    if group.type_letter != "A":
        raise ValueError("coordinate flags exist in type A only")
    perm = group.one_line(w)
    bits = []
    for pw in all_weights(group):
        bits.append(perms.pi_pattern_bit(perm, subset_of(pw)))
    return VanishingPattern(group, tuple(bits))


def random_acceptable(group: WeylGroup, w: WeylElement, seed=None) -> VanishingPattern:
    """Acceptable vector with witness w: bit 1 at each w omega_i, 0 above it
    (and at everything not below it), random strictly below."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    bits = []
    for i in range(1, group.rank + 1):
        table = orbit_table(group, i)
        jw = table.index[group.act(w, group.fundamental_weights[i - 1])]
        ups = table.up_masks()
        for k in range(len(table)):
            if k == jw:
                bits.append(1)
            elif ups[k] >> jw & 1:
                bits.append(rng.randint(0, 1))
            else:
                bits.append(0)
    return VanishingPattern(group, tuple(bits))


# ----- poset of restricted patterns ---------------------------------------------


@dataclass(frozen=True)
class PatternPoset:
    """Bitwise-dominance order on a set of restricted patterns; fewer ones is
    lower.  Edges are the Hasse covers within the set."""

    coords: tuple[PluckerWeight, ...]
    vertices: tuple[tuple[int, ...], ...]
    labels: dict[tuple[int, ...], tuple]
    covers: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @staticmethod
    def dominated(u, v) -> bool:
        return all(a <= b for a, b in zip(u, v))

    def to_dot(self) -> str:
        def name(v):
            return '"' + "".join(map(str, v)) + '"'

        lines = ["digraph patterns {"]
        for v in self.vertices:
            label = "".join(map(str, v))
            cell = self.labels.get(v)
            if cell:
                label += "\\n" + ",".join(str(c) for c in cell)
            lines.append(f'  {name(v)} [label="{label}"];')
        for lo, hi in self.covers:
            lines.append(f"  {name(lo)} -> {name(hi)};")
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [
                    {
                        "pattern": "".join(map(str, v)),
                        "cell": [str(c) for c in self.labels.get(v, ())],
                    }
                    for v in self.vertices
                ],
                "edges": [
                    ["".join(map(str, lo)), "".join(map(str, hi))]
                    for lo, hi in self.covers
                ],
            },
            sort_keys=True,
        )


def pattern_poset(coords, patterns: dict) -> PatternPoset:
    """Build the degeneration poset of restricted patterns.

    ``patterns`` maps restricted bit tuples to cell labels (any tuple).
    """
    coords = tuple(coords)
    verts = sorted(patterns, key=lambda v: (sum(v), v))
    covers = []
    vset = set(verts)
    for lo in verts:
        for hi in verts:
            if lo == hi or not PatternPoset.dominated(lo, hi):
                continue
            if any(
                z != lo and z != hi
                and PatternPoset.dominated(lo, z)
                and PatternPoset.dominated(z, hi)
                for z in vset
            ):
                continue
            covers.append((lo, hi))
    labels = {v: tuple(patterns[v]) for v in verts}
    return PatternPoset(coords, tuple(verts), labels, tuple(covers))


# ----- realizable patterns at small n (type A) -----------------------------------


@dataclass(frozen=True)
class RealizableSet:
    """Restricted patterns realized by actual flags, with cell labels.

    ``certified`` distinguishes the exactly-enumerated small cases from
    sampled lower-bound sets.
    """

    coords: tuple[PluckerWeight, ...]
    patterns: dict[tuple[int, ...], tuple]
    certified: bool


def realizable_full_patterns(n: int):
    """All vanishing patterns of flags in C^n for n <= 3, certified exact.

    Candidates are the acceptable bit vectors consistent with the three-term
    quadratic relation among the n=3 minors; each candidate is then realized
    by an explicit rational flag, which certifies the enumeration both ways.
    Returns a list of (VanishingPattern, witness, Flag).
    """
    from .flags import subset_pattern, type_a_group

    if n not in (2, 3):
        raise ValueError("exact realizability enumeration is implemented for n <= 3")
    group = type_a_group(n)
    cache = group._cache.get("realizable_full")
    if cache is not None:
        return cache
    weights = all_weights(group)
    subsets = [frozenset(subset_of(pw)) for pw in weights]
    results = []
    for bits in product((0, 1), repeat=len(weights)):
        pat = VanishingPattern(group, bits)
        report = check_acceptable(pat)
        if not report.accepted:
            continue
        by_subset = dict(zip(subsets, bits))
        if n == 3:
            prods = (
                by_subset[frozenset({1})] & by_subset[frozenset({2, 3})],
                by_subset[frozenset({2})] & by_subset[frozenset({1, 3})],
                by_subset[frozenset({3})] & by_subset[frozenset({1, 2})],
            )
            if sum(prods) == 1:
                continue
        flag = _realize(n, by_subset)
        if flag is None:
            raise RuntimeError(
                f"candidate pattern {bits} passed the filters but was not realized"
            )
        assert {I: (1 if v else 0) for I, v in by_subset.items()} == subset_pattern(flag)
        results.append((pat, report.witness, flag))
    group._cache["realizable_full"] = results
    return results


def _realize(n: int, by_subset):
    """Search a small rational flag whose pattern matches ``by_subset``."""
    from .flags import flag_from_columns

    c1 = tuple(Fraction(by_subset[frozenset({j})]) for j in range(1, n + 1))
    if n == 2:
        for c2 in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))):
            cols = (c1, c2)
            det = c1[0] * c2[1] - c1[1] * c2[0]
            if det != 0:
                return flag_from_columns(cols)
        return None
    level2 = [I for I in by_subset if len(I) == 2]
    span = range(-2, 3)
    for c2 in product(span, repeat=3):
        if not any(c2):
            continue
        c2f = tuple(Fraction(x) for x in c2)
        ok = True
        for I in level2:
            a, b = sorted(I)
            m = c1[a - 1] * c2f[b - 1] - c1[b - 1] * c2f[a - 1]
            if (m != 0) != bool(by_subset[I]):
                ok = False
                break
        if not ok:
            continue
        for k in range(3):
            c3 = tuple(Fraction(1 if j == k else 0) for j in range(3))
            det = (
                c1[0] * (c2f[1] * c3[2] - c2f[2] * c3[1])
                - c1[1] * (c2f[0] * c3[2] - c2f[2] * c3[0])
                + c1[2] * (c2f[0] * c3[1] - c2f[1] * c3[0])
            )
            if det != 0:
                return flag_from_columns((c1, c2f, c3))
    return None


def realizable_restricted_patterns(n: int, coords) -> RealizableSet:
    """Restrictions of flag vanishing patterns to the given coordinates.

    Exact (certified) for n <= 3.  For n = 4 the result combines coordinate
    flags and generic cell points only, so it is a sampled lower-bound set.
    """
    from .flags import type_a_group

    group = type_a_group(n)
    coords = tuple(
        pw if isinstance(pw, PluckerWeight) else weight_from_subset(group, pw)
        for pw in coords
    )
    found: dict[tuple[int, ...], set] = {}
    if n in (2, 3):
        for pat, witness, _flag in realizable_full_patterns(n):
            key = pat.restrict(coords)
            found.setdefault(key, set()).add(group.one_line(witness))
        certified = True
    elif n == 4:
        for w in group.elements():
            for pat in (generic_pattern(group, w), coordinate_flag_pattern(group, w)):
                key = pat.restrict(coords)
                found.setdefault(key, set()).add(group.one_line(w))
        certified = False
    else:
        raise ValueError("realizable pattern enumeration is implemented for n <= 4")
    patterns = {key: tuple(sorted(ws)) for key, ws in found.items()}
    return RealizableSet(coords, patterns, certified)
