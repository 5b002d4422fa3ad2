"""Weyl groups of types A, B, C, D, G2: elements, length, descents, Bruhat
order, parabolic quotients, roots and reflections.

Elements are stored in canonical form: the shortlex-minimal reduced word over
generator indices 1..r, together with a fingerprint (the image of a fixed
strictly dominant integer vector under w^{-1}).  Fingerprints are injective,
so equality and hashing are O(rank).  Enumeration is a breadth-first closure
that discovers each element first through its shortlex-minimal word.

All values are immutable after construction.  The only internal mutation is
memo caches (dict insertion is atomic under CPython), so groups can be shared
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import CartanDatum, Vector, cartan_datum, dot, parse_group_spec, weyl_order
from .errors import UnsupportedGroupError

ENUMERATION_CAP = 10 ** 6


@dataclass(frozen=True)
class WeylElement:
    """A group element in canonical form (shortlex-minimal reduced word)."""

    word: tuple[int, ...]
    fingerprint: Vector
    group: "WeylGroup" = field(compare=False, repr=False, hash=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __hash__(self):
        return hash(self.fingerprint)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.group is not other.group and self.group.datum != other.group.datum:
            return False
        return self.fingerprint == other.fingerprint

    def __repr__(self):
        return f"WeylElement({word_str(self.word)})"


@dataclass(frozen=True)
class Root:
    """A root with its ambient coordinates and simple-root expansion."""

    coords: Vector
    expansion: tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.expansion)

    def support(self) -> frozenset[int]:
        """Indices i with alpha_i appearing in the expansion (1-based)."""
        return frozenset(i + 1 for i, c in enumerate(self.expansion) if c != 0)


def word_str(word: tuple[int, ...]) -> str:
    return ".".join(f"s{i}" for i in word) if word else "e"


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e", "1"):
        return ()
    parts = text.split(".")
    out = []
    for p in parts:
        p = p.strip()
        if p.startswith("s"):
            p = p[1:]
        out.append(int(p))
    return tuple(out)


class WeylGroup:
    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.rank = datum.rank
        self.type_letter = datum.type_letter
        self.simple_roots = datum.simple_roots
        self.fundamental_weights = datum.fundamental_weights
        # coroots: alpha^vee = 2 alpha / (alpha, alpha)
        self.coroots = tuple(
            tuple(2 * x / dot(a, a) for x in a) for a in datum.simple_roots
        )
        # Simple roots have integer ambient coordinates in every supported
        # type, so Cartan pairings of weight-lattice vectors are exact ints.
        self._alpha_int = tuple(
            tuple(int(x) for x in a) for a in datum.simple_roots
        )
        self._alpha_norm = tuple(int(dot(a, a)) for a in datum.simple_roots)
        self.order = weyl_order(datum.type_letter, datum.rank)
        self._simples: list[WeylElement | None] = [None] * datum.rank
        self._elements: list[WeylElement] | None = None
        self._index: dict[Vector, int] = {}
        self._bruhat_memo: dict[tuple[int, int], bool] = {}
        self._roots: tuple[Root, ...] | None = None
        self._root_sign: dict[Vector, int] | None = None
        self._rho_table: dict[Vector, WeylElement] | None = None
        self._cache: dict = {}

    # ----- linear action ---------------------------------------------------

    def reflect(self, i: int, v: Vector) -> Vector:
        """Apply the simple reflection s_i to an ambient vector."""
        a = self._alpha_int[i - 1]
        num = 2 * sum(x * y for x, y in zip(v, a) if y)
        if num == 0:
            return v
        norm = self._alpha_norm[i - 1]
        if type(num) is int:
            c, rem = divmod(num, norm)
            if rem:
                c = Fraction(num, norm)
        else:
            c = num / norm
        return tuple(x - c * y if y else x for x, y in zip(v, a))

    def act_word(self, word, v: Vector) -> Vector:
        """Apply s_{i1} ... s_{ik} (left-to-right composition) to v."""
        for i in reversed(word):
            v = self.reflect(i, v)
        return v

    def act(self, w: WeylElement, v: Vector) -> Vector:
        return self.act_word(w.word, v)

    def act_inv(self, w: WeylElement, v: Vector) -> Vector:
        for i in w.word:
            v = self.reflect(i, v)
        return v

    def act_on_weight(self, w: WeylElement, v) -> Vector:
        return self.act(w, tuple(Fraction(x) for x in v))

    # ----- enumeration -----------------------------------------------------

    def ensure_enumerated(self):
        if self._elements is not None:
            return
        if self.order > ENUMERATION_CAP:
            raise UnsupportedGroupError(
                f"|W| = {self.order} exceeds the enumeration cap {ENUMERATION_CAP}"
            )
        seed = self.datum.dominant_seed
        identity = WeylElement((), seed, self)
        elements = [identity]
        index = {seed: 0}
        level = [identity]
        # Right-multiplication BFS; parents in shortlex order with ascending
        # generator index yields candidates in shortlex order, so the first
        # discovery of each fingerprint carries its shortlex-minimal word.
        # Fingerprint of w is w^{-1}(seed): f(w s_i) = s_i(f(w)).
        while level:
            nxt = []
            for w in level:
                for i in range(1, self.rank + 1):
                    fp = self.reflect(i, w.fingerprint)
                    if fp in index:
                        continue
                    el = WeylElement(w.word + (i,), fp, self)
                    index[fp] = len(elements)
                    elements.append(el)
                    nxt.append(el)
            level = nxt
        if len(elements) != self.order:
            raise RuntimeError(
                f"enumeration produced {len(elements)} elements, expected {self.order}"
            )
        self._elements = elements
        self._index = index

    def elements(self) -> tuple[WeylElement, ...]:
        self.ensure_enumerated()
        return tuple(self._elements)

    def __len__(self):
        return self.order

    def index_of(self, w: WeylElement) -> int:
        self.ensure_enumerated()
        return self._index[w.fingerprint]

    def by_fingerprint(self, fp: Vector) -> WeylElement:
        self.ensure_enumerated()
        return self._elements[self._index[fp]]

    # ----- group structure ---------------------------------------------------

    @property
    def identity(self) -> WeylElement:
        self.ensure_enumerated()
        return self._elements[0]

    def simple(self, i: int) -> WeylElement:
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator index {i} out of range")
        el = self._simples[i - 1]
        if el is None:
            el = self.element((i,))
            self._simples[i - 1] = el
        return el

    def element(self, word) -> WeylElement:
        """Canonical element of an arbitrary word over the generators."""
        self.ensure_enumerated()
        fp = self.datum.dominant_seed
        for i in word:
            fp = self.reflect(i, fp)
        return self.by_fingerprint(fp)

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        # f(uv) = v^{-1}(f(u)): fold v's word forward over u's fingerprint.
        fp = u.fingerprint
        for i in v.word:
            fp = self.reflect(i, fp)
        return self.by_fingerprint(fp)

    def inverse(self, w: WeylElement) -> WeylElement:
        fp = self.datum.dominant_seed
        for i in reversed(w.word):
            fp = self.reflect(i, fp)
        return self.by_fingerprint(fp)

    def length(self, w: WeylElement) -> int:
        return len(w.word)

    # ----- roots -------------------------------------------------------------

    def positive_roots(self) -> tuple[Root, ...]:
        if self._roots is None:
            simple = self.simple_roots
            r = self.rank
            seen: dict[Vector, tuple[int, ...]] = {}
            frontier: list[tuple[Vector, tuple[int, ...]]] = []
            for j, a in enumerate(simple):
                exp = tuple(1 if k == j else 0 for k in range(r))
                seen[a] = exp
                frontier.append((a, exp))
            while frontier:
                nxt = []
                for v, exp in frontier:
                    for i in range(1, r + 1):
                        c = dot(v, self.coroots[i - 1])
                        if c == 0:
                            continue
                        v2 = tuple(x - c * y for x, y in zip(v, simple[i - 1]))
                        if v2 in seen:
                            continue
                        exp2 = list(exp)
                        exp2[i - 1] -= int(c)
                        exp2 = tuple(exp2)
                        seen[v2] = exp2
                        nxt.append((v2, exp2))
                frontier = nxt
            pos = [
                Root(v, exp)
                for v, exp in seen.items()
                if all(c >= 0 for c in exp)
            ]
            pos.sort(key=lambda rt: (sum(rt.expansion), rt.expansion))
            self._roots = tuple(pos)
            sign = {}
            for rt in pos:
                sign[rt.coords] = 1
                sign[tuple(-x for x in rt.coords)] = -1
            self._root_sign = sign
        return self._roots

    def root_sign(self, v: Vector) -> int:
        """+1 for a positive root, -1 for a negative one."""
        self.positive_roots()
        try:
            return self._root_sign[v]
        except KeyError:
            raise ValueError(f"{v} is not a root") from None

    def is_positive_root_vector(self, v: Vector) -> bool:
        return self.root_sign(v) == 1

    def simple_root_index(self, rt: Root) -> int | None:
        if sum(rt.expansion) == 1:
            return rt.expansion.index(1) + 1
        return None

    # ----- descents ----------------------------------------------------------

    def right_descents(self, w: WeylElement) -> frozenset[int]:
        """{i : l(w s_i) < l(w)}, i.e. w(alpha_i) is a negative root."""
        self.positive_roots()
        out = []
        for i in range(1, self.rank + 1):
            if self._root_sign[self.act(w, self.simple_roots[i - 1])] < 0:
                out.append(i)
        return frozenset(out)

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        """{i : l(s_i w) < l(w)}, i.e. w^{-1}(alpha_i) is a negative root."""
        self.positive_roots()
        out = []
        for i in range(1, self.rank + 1):
            if self._root_sign[self.act_inv(w, self.simple_roots[i - 1])] < 0:
                out.append(i)
        return frozenset(out)

    # ----- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        """u <= v in Bruhat order, by the memoized descent recursion:
        choosing s with sv < v, u <= v iff (su <= sv if su < u else u <= sv).
        """
        self.ensure_enumerated()
        iu, iv = self.index_of(u), self.index_of(v)
        return self._bruhat_leq_idx(iu, iv)

    def _bruhat_leq_idx(self, iu: int, iv: int) -> bool:
        if iu == iv:
            return True
        elements = self._elements
        index = self._index
        u = elements[iu]
        v = elements[iv]
        if len(u.word) >= len(v.word):
            return False
        if not u.word:
            return True
        key = (iu, iv)
        memo = self._bruhat_memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        # The first letter of any reduced word of v is a left descent of v,
        # and s v then has the reduced word v.word[1:].
        s = v.word[0]
        reflect = self.reflect
        fp = self.datum.dominant_seed
        for i in v.word[1:]:
            fp = reflect(i, fp)
        isv = index[fp]
        fp = reflect(s, self.datum.dominant_seed)
        for i in u.word:
            fp = reflect(i, fp)
        isu = index[fp]
        if len(elements[isu].word) < len(u.word):
            result = self._bruhat_leq_idx(isu, isv)
        else:
            result = self._bruhat_leq_idx(iu, isv)
        memo[key] = result
        return result

    # ----- parabolic machinery -------------------------------------------------

    def check_parabolic(self, J) -> frozenset[int]:
        J = frozenset(J)
        if not J <= set(range(1, self.rank + 1)):
            raise ValueError(f"parabolic subset {sorted(J)} not within [1, {self.rank}]")
        return J

    def min_coset_rep(self, w: WeylElement, J) -> WeylElement:
        """The minimal-length representative of the coset w W_J."""
        J = sorted(self.check_parabolic(J))
        self.positive_roots()
        while True:
            for j in J:
                if self._root_sign[self.act(w, self.simple_roots[j - 1])] < 0:
                    w = self.multiply(w, self.simple(j))
                    break
            else:
                return w

    def in_parabolic(self, w: WeylElement, J) -> bool:
        """w lies in W_J iff its (reduced) canonical word uses only J letters."""
        J = self.check_parabolic(J)
        return set(w.word) <= J

    def longest_element(self, J=None) -> WeylElement:
        """Longest element of W_J (of W when J is omitted), by greedy ascent."""
        if J is None:
            J = range(1, self.rank + 1)
        J = sorted(self.check_parabolic(J))
        self.positive_roots()
        w = self.identity
        while True:
            for j in J:
                if self._root_sign[self.act(w, self.simple_roots[j - 1])] > 0:
                    w = self.multiply(w, self.simple(j))
                    break
            else:
                return w

    def reflection(self, root: Root) -> WeylElement:
        """The reflection s_alpha as a group element."""
        if not root.is_positive:
            raise ValueError("reflection expects a positive root")
        a = root.coords
        norm = dot(a, a)
        fp = self.datum.dominant_seed
        c = 2 * dot(fp, a) / norm
        fp = tuple(x - c * y for x, y in zip(fp, a))
        return self.by_fingerprint(fp)

    def reflections(self) -> tuple[WeylElement, ...]:
        return tuple(self.reflection(rt) for rt in self.positive_roots())

    def reflect_by_root(self, root: Root, v: Vector) -> Vector:
        a = root.coords
        c = 2 * dot(v, a) / dot(a, a)
        if c == 0:
            return v
        return tuple(x - c * y for x, y in zip(v, a))

    # ----- witness lookup ------------------------------------------------------

    def rho(self) -> Vector:
        out = self.fundamental_weights[0]
        for w in self.fundamental_weights[1:]:
            out = tuple(a + b for a, b in zip(out, w))
        return out

    def element_with_rho_image(self, v: Vector) -> WeylElement | None:
        """The unique w with w(rho) = v, if any (rho is strictly dominant)."""
        if self._rho_table is None:
            self.ensure_enumerated()
            rho = self.rho()
            self._rho_table = {self.act(w, rho): w for w in self._elements}
        return self._rho_table.get(v)

    # ----- type A helpers --------------------------------------------------------

    def one_line(self, w: WeylElement) -> tuple[int, ...]:
        """One-line notation for type A: (w(1), ..., w(n))."""
        if self.type_letter != "A":
            raise ValueError("one-line notation is a type A concept")
        n = self.rank + 1
        img = self.act(w, tuple(range(1, n + 1)))
        out = [0] * n
        for pos, val in enumerate(img):
            out[val - 1] = pos + 1
        return tuple(out)

    def from_one_line(self, perm) -> WeylElement:
        if self.type_letter != "A":
            raise ValueError("one-line notation is a type A concept")
        perm = tuple(perm)
        n = self.rank + 1
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{n}")
        word = []
        work = list(perm)
        # bubble sort; recorded swaps give a reduced word read right-to-left
        changed = True
        while changed:
            changed = False
            for i in range(n - 1):
                if work[i] > work[i + 1]:
                    work[i], work[i + 1] = work[i + 1], work[i]
                    word.append(i + 1)
                    changed = True
        word.reverse()
        return self.element(tuple(word))

    def __repr__(self):
        return f"WeylGroup({self.datum.name})"


def build_group(datum: CartanDatum) -> WeylGroup:
    return WeylGroup(datum)


_GROUPS: dict[tuple[str, int], WeylGroup] = {}


def weyl_group(spec_or_letter, rank: int | None = None) -> WeylGroup:
    """The Weyl group for a spec string ("B3") or a (letter, rank) pair.

    Instances are cached so orbit tables and memo caches are shared.
    """
    if rank is None:
        letter, rank = parse_group_spec(spec_or_letter)
    else:
        letter = spec_or_letter.upper()
    key = (letter, rank)
    g = _GROUPS.get(key)
    if g is None:
        g = WeylGroup(cartan_datum(letter, rank))
        _GROUPS[key] = g
    return g
