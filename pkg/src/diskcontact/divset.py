"""Dividing sets on a marked disk, as nesting trees of label sets.

Conventions, fixed once and used by every other module:

* The disk boundary carries 2(n+1) marked points labeled 0..2n+1 in
  clockwise order.  Positive boundary arc s occupies the interval between
  points 2s and 2s+1; the negative arc after it runs from 2s+1 to 2s+2
  (mod 2n+2).

* A dividing set is a crossingless matching of the marked points (a
  fixed-point-free non-crossing involution).  Its positive region falls
  into n-e+1 disk pieces, each determined by the set of arc labels it
  touches; e is the count with chi_+ = n-e+1 and Euler class n-2e.

* Components are indexed by nesting vectors: the component containing
  arc 0 is based and indexed by the empty tuple (drawn as "*"); the
  components directly nesting inside a component, taken clockwise from
  arc 0 (equivalently by ascending minimum label), are indexed
  v+(1,), v+(2,), ...

* Walking the boundary of a positive component with labels s_0<...<s_l
  clockwise gives the chord sequence chord[j] = (2*s_j+1, 2*s_{j+1}),
  indices mod l+1, so chord[l] is the outer chord closing the component.
  Chords are oriented in walk direction; the unordered pair is the chord
  key used to match chords across the two faces they separate.

Tree form and matching form are interconvertible (`to_matching`,
`from_matching`); the tree drives the algebra, the matching drives curve
counts and bypass surgery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import BadBase, EulerMismatch, IndexOutOfRange

NestVector = tuple  # () is the based symbol; otherwise a tuple of positive ints
STAR: NestVector = ()

Matching = tuple  # involution on {0..2n+1} as a tuple of ints


class ZeroObject:
    """Marker for the (unique up to isomorphism) zero object of a component.

    Dividing sets with closed components are not representable as
    crossingless matchings; operations that would create one return this
    marker instead.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "ZeroObject()"

    def __eq__(self, other) -> bool:
        return isinstance(other, ZeroObject)

    def __hash__(self) -> int:
        return hash("ZeroObject")


ZERO = ZeroObject()


@dataclass(frozen=True)
class DividingSet:
    """A dividing set of the component with parameters (n, e).

    `components` is a sorted tuple of (nesting vector, ascending label
    tuple) pairs partitioning {0..n}.
    """

    n: int
    e: int
    components: tuple[tuple[NestVector, tuple[int, ...]], ...]

    @staticmethod
    def make(n: int, e: int, comps: Mapping[NestVector, Iterable[int]]) -> "DividingSet":
        items = tuple(sorted((tuple(v), tuple(sorted(labels))) for v, labels in comps.items()))
        return DividingSet(n, e, items)

    def labels(self, v: NestVector) -> tuple[int, ...]:
        for w, ls in self.components:
            if w == v:
                return ls
        raise KeyError(v)

    @property
    def vectors(self) -> tuple[NestVector, ...]:
        """V(Gamma): all nesting vectors, sorted."""
        return tuple(v for v, _ in self.components)

    @property
    def tpv(self) -> tuple[NestVector, ...]:
        """Non-based vectors."""
        return tuple(v for v, _ in self.components if v != STAR)

    @property
    def vnb(self) -> tuple[NestVector, ...]:
        """Vectors of non-boundary-parallel components (more than one label)."""
        return tuple(v for v, ls in self.components if v != STAR and len(ls) > 1)

    @property
    def star(self) -> tuple[int, ...]:
        return self.labels(STAR)

    def l(self, v: NestVector) -> int:
        return len(self.labels(v)) - 1

    def label_at(self, v: NestVector, i: int) -> int:
        ls = self.labels(v)
        if not 0 <= i < len(ls):
            raise IndexOutOfRange(f"position {i} outside 0..{len(ls) - 1} of {v}")
        return ls[i]

    def component_of_label(self, s: int) -> NestVector:
        for v, ls in self.components:
            if s in ls:
                return v
        raise KeyError(s)

    def chords(self, v: NestVector) -> tuple[tuple[int, int], ...]:
        """Oriented boundary chords of component v, in clockwise walk order."""
        ls = self.labels(v)
        k = len(ls)
        return tuple((2 * ls[j] + 1, 2 * ls[(j + 1) % k]) for j in range(k))

    def is_basic(self) -> bool:
        return not self.vnb

    def __repr__(self) -> str:
        body = ", ".join(
            ("*" if v == STAR else str(list(v))) + ":" + str(set(ls))
            for v, ls in self.components
        )
        return f"DividingSet({self.n},{self.e}; {body})"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


def parent(v: NestVector) -> NestVector:
    return v[:-1]


def validate(ds: DividingSet) -> ValidationReport:
    """Check the five structural properties of a dividing set encoding.

    (1) n-e+1 components; (2) the based vector is present and owns label 0;
    (3) every non-based component sits in a single open gap of its parent
    (the final gap, read up to n+1, exists only for the based component);
    (4) sibling indices are gapless, numbered clockwise from label 0;
    (5) the components partition {0..n}.
    """
    bad: list[str] = []
    comps = dict(ds.components)
    if len(comps) != len(ds.components):
        bad.append("P5: duplicate nesting vectors")
    if not (0 <= ds.e <= ds.n):
        bad.append("P1: e outside 0..n")
    if len(comps) != ds.n - ds.e + 1:
        bad.append("P1: component count is not n-e+1")
    if any(v != STAR and (not v or any(t < 1 for t in v)) for v in comps):
        bad.append("P3: nesting vector entries must be positive")
    if STAR not in comps or 0 not in comps.get(STAR, ()):
        bad.append("P2: based component missing or does not contain 0")

    all_labels = [s for _, ls in ds.components for s in ls]
    if sorted(all_labels) != list(range(ds.n + 1)):
        bad.append("P5: components do not partition {0..n}")
    if any(tuple(sorted(ls)) != ls or not ls for _, ls in ds.components):
        bad.append("P5: component label tuples must be nonempty ascending")

    for v, ls in ds.components:
        if v == STAR:
            continue
        if parent(v) not in comps:
            bad.append(f"P3: {v} has no parent component")
            continue
        pls = comps[parent(v)]
        gaps = list(zip(pls, pls[1:]))
        if parent(v) == STAR:
            gaps.append((pls[-1], ds.n + 1))
        hit = [g for g in gaps if g[0] < min(ls) and max(ls) < g[1]]
        if len(hit) != 1:
            bad.append(f"P3: {v} does not fit a single open gap of its parent")

    for v, ls in ds.components:
        if v == STAR:
            continue
        t = v[-1]
        if t > 1 and parent(v) + (t - 1,) not in comps:
            bad.append(f"P4: sibling {parent(v) + (t - 1,)} of {v} missing")
        sib = parent(v) + (t + 1,)
        if sib in comps and not max(ls) < min(comps[sib]):
            bad.append(f"P4: {v} and {sib} not in clockwise order")

    return ValidationReport(not bad, tuple(bad))


# ---------------------------------------------------------------------------
# matchings


def is_crossingless_matching(m: Sequence[int]) -> bool:
    """Fixed-point-free involution with no interleaved pairs a<b<m(a)<m(b)."""
    size = len(m)
    if size % 2:
        return False
    if not all(0 <= m[i] < size and m[i] != i and m[m[i]] == i for i in range(size)):
        return False
    stack: list[int] = []
    for i in range(size):
        if i < m[i]:
            stack.append(m[i])
        elif stack.pop() != i:
            return False
    return True


def positive_faces(m: Matching) -> list[frozenset[int]]:
    """Components of the positive region, as label sets (cycles of s -> m(2s+1)/2)."""
    n1 = len(m) // 2
    seen = [False] * n1
    out = []
    for s in range(n1):
        if seen[s]:
            continue
        cyc = []
        t = s
        while not seen[t]:
            seen[t] = True
            cyc.append(t)
            t = m[2 * t + 1] // 2
        out.append(frozenset(cyc))
    return out


def negative_faces(m: Matching) -> list[frozenset[int]]:
    """Components of the negative region, as indices t of the arcs (2t+1, 2t+2)."""
    n1 = len(m) // 2
    seen = [False] * n1
    out = []
    for s in range(n1):
        if seen[s]:
            continue
        cyc = []
        t = s
        while not seen[t]:
            seen[t] = True
            cyc.append(t)
            t = (m[(2 * t + 2) % (2 * n1)] - 1) // 2
        out.append(frozenset(cyc))
    return out


def to_matching(ds: DividingSet) -> Matching:
    m = [-1] * (2 * ds.n + 2)
    for v, _ in ds.components:
        for a, b in ds.chords(v):
            m[a], m[b] = b, a
    return tuple(m)


def from_partition(n: int, e: int, parts: Iterable[Iterable[int]]) -> DividingSet:
    """Rebuild the nesting tree from the label-set partition of R_+.

    The partition of a valid dividing set determines the tree: a component
    nests inside another exactly when it fits in one of its internal gaps
    (for the based component, also the final gap up to n+1); the direct
    parent is the innermost such, and siblings are numbered by ascending
    minimum label.
    """
    sets = [tuple(sorted(p)) for p in parts]
    based = next(p for p in sets if 0 in p)

    def gap_of(child: tuple, cand: tuple) -> Optional[tuple[int, int]]:
        gaps = list(zip(cand, cand[1:]))
        if cand == based:
            gaps.append((cand[-1], n + 1))
        for a, b in gaps:
            if a < child[0] and child[-1] < b:
                return (a, b)
        return None

    def parent_of(child: tuple) -> tuple:
        best, best_span = based, (-1, n + 1)
        for cand in sets:
            if cand is child or cand == based:
                continue
            g = gap_of(child, cand)
            if g and (g[1] - g[0]) < (best_span[1] - best_span[0]):
                best, best_span = cand, g
        return best

    children: dict[tuple, list[tuple]] = {p: [] for p in sets}
    for p in sets:
        if p != based:
            children[parent_of(p)].append(p)

    comps: dict[NestVector, tuple[int, ...]] = {}

    def assign(v: NestVector, labels: tuple) -> None:
        comps[v] = labels
        for t, ch in enumerate(sorted(children[labels]), start=1):
            assign(v + (t,), ch)

    assign(STAR, based)
    return DividingSet.make(n, e, comps)


def from_matching(m: Matching, n: int, e: int) -> DividingSet:
    """Decode a crossingless matching on 2n+2 points into its nesting tree."""
    if len(m) != 2 * n + 2 or not is_crossingless_matching(m):
        raise EulerMismatch("not a crossingless matching on 2n+2 points")
    faces = positive_faces(m)
    if len(faces) != n - e + 1:
        raise EulerMismatch(
            f"matching has {len(faces)} positive components, expected {n - e + 1}"
        )
    ds = from_partition(n, e, faces)
    if to_matching(ds) != tuple(m):
        raise EulerMismatch("matching is not realized by its face partition")
    return ds


def noncrossing_matchings(n: int) -> Iterator[Matching]:
    """All crossingless matchings of 2(n+1) points, lexicographically."""
    size = 2 * n + 2
    m = [-1] * size

    def place(i: int) -> Iterator[Matching]:
        while i < size and m[i] >= 0:
            i += 1
        if i == size:
            yield tuple(m)
            return
        for j in range(i + 1, size, 2):
            if m[j] < 0:
                m[i], m[j] = j, i
                inner = all(m[k] < 0 or i < m[k] < j for k in range(i + 1, j))
                if inner:
                    yield from place(i + 1)
                m[i], m[j] = -1, -1

    yield from place(0)


@lru_cache(maxsize=None)
def enumerate_objects(n: int, e: int) -> tuple[DividingSet, ...]:
    """All dividing sets of the (n, e) component, ordered by their matching."""
    if not 0 <= e <= n:
        raise EulerMismatch(f"need 0 <= e <= n, got e={e}, n={n}")
    out = []
    for m in noncrossing_matchings(n):
        if len(positive_faces(m)) == n - e + 1:
            out.append(from_matching(m, n, e))
    return tuple(sorted(out, key=to_matching))


# ---------------------------------------------------------------------------
# basic dividing sets


def basic_of(n: int, e: int, based: Iterable[int]) -> DividingSet:
    s = tuple(sorted(based))
    if len(s) != e + 1 or not s or s[0] != 0 or s[-1] > n:
        raise BadBase(f"based set must contain 0 and have e+1={e + 1} labels in 0..n")
    comps: dict[NestVector, tuple[int, ...]] = {STAR: s}
    rest = [t for t in range(n + 1) if t not in s]
    for j, t in enumerate(sorted(rest), start=1):
        comps[(j,)] = (t,)
    return DividingSet.make(n, e, comps)


def is_basic(ds: DividingSet) -> bool:
    return ds.is_basic()


@lru_cache(maxsize=None)
def basic_sets(n: int, e: int) -> tuple[DividingSet, ...]:
    """B_{n,e}, ordered by based label set; has binomial(n, e) elements."""
    out = [basic_of(n, e, (0,) + c) for c in itertools.combinations(range(1, n + 1), e)]
    assert len(out) == comb(n, e)
    return tuple(sorted(out, key=lambda d: d.star))


# ---------------------------------------------------------------------------
# nesting combinatorics


def nesting_sets(
    ds: DividingSet, v: NestVector, i: int
) -> tuple[frozenset[NestVector], frozenset[NestVector]]:
    """(NV(v,i), DNV(v,i)).

    NV(v,i) collects vectors of non-boundary-parallel components lying in
    the open interval (label_at(v,0), label_at(v,i)); DNV(v,i) those that
    directly nest inside v between its (i-1)st and ith labels.  DNV(v,0)
    is returned empty.
    """
    ls = ds.labels(v)
    if not 0 <= i <= len(ls) - 1:
        raise IndexOutOfRange(f"i={i} outside 0..{len(ls) - 1}")
    nv = frozenset(
        w
        for w in ds.vnb
        if w != v and ls[0] < min(ds.labels(w)) and max(ds.labels(w)) < ls[i]
    )
    if i == 0:
        return nv, frozenset()
    dnv = frozenset(
        w
        for w in ds.vnb
        if parent(w) == v and ls[i - 1] < min(ds.labels(w)) and max(ds.labels(w)) < ls[i]
    )
    return nv, dnv


# ---------------------------------------------------------------------------
# geometry: faces of the chord diagram, shared by bypass and hom machinery


def chord_key(c: tuple[int, int]) -> tuple[int, int]:
    return (c[0], c[1]) if c[0] < c[1] else (c[1], c[0])


@dataclass(frozen=True)
class NegRegion:
    """A negative-region face: its cyclic walk of (arc index, chord key).

    Entry (t, c) means the walk traverses the negative boundary arc
    (2t+1, 2t+2) and then leaves along chord c.  Chord order around the
    region is the order of this tuple.
    """

    index: int
    walk: tuple[tuple[int, tuple[int, int]], ...]

    @property
    def chords(self) -> tuple[tuple[int, int], ...]:
        return tuple(c for _, c in self.walk)

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset(t for t, _ in self.walk)

    def between(self, c_in: tuple[int, int], c_out: tuple[int, int]) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
        """Arcs and chords strictly between c_in and c_out in walk order."""
        cs = self.chords
        i, j = cs.index(c_in), cs.index(c_out)
        k = len(self.walk)
        arcs, chords = [], []
        p = (i + 1) % k
        while p != j:
            arcs.append(self.walk[p][0])
            chords.append(self.walk[p][1])
            p = (p + 1) % k
        arcs.append(self.walk[j][0])
        return tuple(arcs), tuple(chords)


@dataclass(frozen=True)
class Geometry:
    """Per-object cache of the chord diagram's face structure."""

    ds: DividingSet
    matching: Matching
    comp_of_chord: Mapping[tuple[int, int], NestVector]
    neg_regions: tuple[NegRegion, ...]
    neg_of_chord: Mapping[tuple[int, int], int]

    def adjacent(self, v: NestVector, w: NestVector) -> bool:
        """Do two positive components share a negative region?"""
        rv = {self.neg_of_chord[chord_key(c)] for c in self.ds.chords(v)}
        rw = {self.neg_of_chord[chord_key(c)] for c in self.ds.chords(w)}
        return bool(rv & rw)


@lru_cache(maxsize=None)
def geometry(ds: DividingSet) -> Geometry:
    m = to_matching(ds)
    comp_of_chord = {}
    for v, _ in ds.components:
        for c in ds.chords(v):
            comp_of_chord[chord_key(c)] = v

    size = len(m)
    seen = [False] * (size // 2)
    regions: list[NegRegion] = []
    neg_of_chord: dict[tuple[int, int], int] = {}
    for start in range(size // 2):
        if seen[start]:
            continue
        walk = []
        t = start
        while not seen[t]:
            seen[t] = True
            p = (2 * t + 2) % size
            c = chord_key((p, m[p]))
            walk.append((t, c))
            t = (m[p] - 1) // 2
        region = NegRegion(len(regions), tuple(walk))
        for _, c in walk:
            neg_of_chord[c] = region.index
        regions.append(region)
    return Geometry(ds, m, comp_of_chord, tuple(regions), neg_of_chord)


def chord_sides(n: int, c: tuple[int, int]) -> tuple[frozenset[int], frozenset[int]]:
    """Partition of the labels by the two sides of a chord.

    A positive arc (2s, 2s+1) lies on the side swept by the clockwise walk
    from c[0] to c[1] exactly when its start point 2s is reached before
    c[1]; the two sides partition all n+1 labels.
    """
    size = 2 * n + 2
    a, b = c
    d = (b - a) % size
    side1 = frozenset(s for s in range(n + 1) if (2 * s - a) % size < d)
    return side1, frozenset(range(n + 1)) - side1


def side_containing(n: int, c: tuple[int, int], label: int) -> frozenset[int]:
    a, b = chord_sides(n, c)
    return a if label in a else b


def far_side_labels(ds: DividingSet, c: tuple[int, int], near_label: int) -> frozenset[int]:
    """Labels on the opposite side of chord c from the one holding near_label."""
    a, b = chord_sides(ds.n, c)
    return b if near_label in a else a


# ---------------------------------------------------------------------------
# JSON serialization


def vector_to_json(v: NestVector):
    return "*" if v == STAR else list(v)


def vector_from_json(x) -> NestVector:
    return STAR if x == "*" else tuple(int(t) for t in x)


def ds_to_json(ds: DividingSet) -> dict:
    return {
        "n": ds.n,
        "e": ds.e,
        "components": [
            {"v": vector_to_json(v), "labels": list(ls)} for v, ls in ds.components
        ],
    }


def ds_from_json(obj: Mapping) -> DividingSet:
    comps = {
        vector_from_json(c["v"]): tuple(int(s) for s in c["labels"])
        for c in obj["components"]
    }
    return DividingSet.make(int(obj["n"]), int(obj["e"]), comps)


def matching_to_json(m: Matching) -> list[int]:
    return list(m)


def matching_from_json(obj: Sequence[int]) -> Matching:
    return tuple(int(x) for x in obj)
