"""Finite algebraic loops presented as validated Cayley tables.

A loop is a set with a binary ``+`` that has a two-sided zero and
unique solutions to ``a + x = b`` and ``y + a = b``.  Equivalently the
table is a Latin square whose row and column through a distinguished
element are the identity permutation.  The carrier is always
``0 .. n-1`` and the zero element is required to sit at index 0; a
table whose zero lives elsewhere is rejected rather than silently
reindexed, so that file hashes stay meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import tables
from .config import DEFAULT_BOUNDS, Bounds
from .errors import (
    BoundExceeded,
    NoTwoSidedZero,
    NotAHomomorphism,
    NotASubloop,
    NotLatinSquare,
)


@dataclass(frozen=True)
class Verdict:
    """Boolean check outcome carrying the least counterexample, if any."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ElementSubset:
    """An immutable subset of the carrier 0 .. ambient_n - 1.

    Iteration order is always ascending, and ``sort_key`` orders
    subsets by (size, sorted members), the ordering every enumeration
    in the library emits.
    """

    ambient_n: int
    members: frozenset

    def __post_init__(self):
        for x in self.members:
            if not 0 <= x < self.ambient_n:
                raise ValueError(f"member {x} outside carrier 0..{self.ambient_n - 1}")

    @classmethod
    def of(cls, ambient_n: int, items: Iterable[int]) -> "ElementSubset":
        return cls(ambient_n, frozenset(int(x) for x in items))

    @cached_property
    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members))

    @property
    def sort_key(self):
        return (len(self.members), self.sorted_members)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.ambient_n, dtype=bool)
        if self.members:
            m[list(self.members)] = True
        return m

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.sorted_members)

    def __le__(self, other: "ElementSubset") -> bool:
        return self.members <= other.members

    def __repr__(self):
        return f"ElementSubset({self.ambient_n}, {{{', '.join(map(str, self.sorted_members))}}})"


@dataclass(frozen=True, eq=False, repr=False)
class CayleyLoop:
    """A finite loop with precomputed difference tables.

    ``ldiff[a][b]`` is the unique x with a + x = b, and ``rdiff[b][a]``
    is the unique y with y + a = b.
    """

    n: int
    add: np.ndarray
    ldiff: np.ndarray
    rdiff: np.ndarray
    zero: int = 0

    def __repr__(self):
        return f"CayleyLoop(n={self.n})"

    @cached_property
    def _py_add(self):
        return self.add.tolist()

    @cached_property
    def _py_ldiff(self):
        return self.ldiff.tolist()

    @cached_property
    def _py_rdiff(self):
        return self.rdiff.tolist()


def validate_loop(table) -> CayleyLoop:
    """Check the loop axioms on a raw table and build a CayleyLoop.

    Raises NotLatinSquare or NoTwoSidedZero with the least witness.
    """
    add = tables.as_table(table)
    n = add.shape[0]
    bad = tables.latin_witness(add)
    if bad is not None:
        axis, idx, val = bad
        raise NotLatinSquare(
            f"{axis} {idx} is not a permutation of 0..{n - 1} (value {val})",
            witness=bad,
        )
    want = np.arange(n, dtype=tables.DTYPE)
    if not (np.array_equal(add[0], want) and np.array_equal(add[:, 0], want)):
        raise NoTwoSidedZero("index 0 is not a two-sided zero", witness=0)
    ldiff = np.argsort(add, axis=1).astype(tables.DTYPE)
    rdiff = np.argsort(add, axis=0).astype(tables.DTYPE)
    ldiff.setflags(write=False)
    rdiff.setflags(write=False)
    return CayleyLoop(n=n, add=add, ldiff=ldiff, rdiff=rdiff, zero=0)


def is_associative(loop: CayleyLoop) -> Verdict:
    w = tables.assoc_witness(loop.add)
    return Verdict(w is None, w)


def is_commutative(loop: CayleyLoop) -> Verdict:
    w = tables.comm_witness(loop.add)
    return Verdict(w is None, w)


def _as_member_set(loop: CayleyLoop, subset) -> frozenset:
    if isinstance(subset, ElementSubset):
        if subset.ambient_n != loop.n:
            raise ValueError("subset ambient size does not match the loop")
        return subset.members
    return frozenset(int(x) for x in subset)


def subloop_closure(loop: CayleyLoop, seed) -> ElementSubset:
    """Smallest subset containing seed and zero, closed under +, ldiff, rdiff.

    Worklist over new elements; each ordered pair is visited once, so
    the cost is O(|closure|^2) table lookups.
    """
    add, ld, rd = loop._py_add, loop._py_ldiff, loop._py_rdiff
    members = set(_as_member_set(loop, seed))
    members.add(loop.zero)
    processed: list = []
    frontier = sorted(members)
    while frontier:
        fresh: set = set()
        current = processed + frontier
        for a in frontier:
            add_a, ld_a, rd_a = add[a], ld[a], rd[a]
            for b in current:
                for v in (add_a[b], ld_a[b], rd_a[b], add[b][a], ld[b][a], rd[b][a]):
                    if v not in members:
                        members.add(v)
                        fresh.add(v)
        processed = current
        frontier = sorted(fresh)
    return ElementSubset(loop.n, frozenset(members))


def is_subloop(loop: CayleyLoop, subset) -> bool:
    """One-step closedness test: zero inside, closed under +, ldiff, rdiff."""
    members = _as_member_set(loop, subset)
    if loop.zero not in members:
        return False
    idx = np.fromiter(sorted(members), dtype=np.int64)
    m = np.zeros(loop.n, dtype=bool)
    m[idx] = True
    grid = np.ix_(idx, idx)
    for t in (loop.add, loop.ldiff, loop.rdiff):
        if not m[t[grid]].all():
            return False
    return True


def enumerate_subloops(loop: CayleyLoop, bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """All subloops, as closures of <= 2 generators plus iterated joins.

    Every subloop is a join of single-element closures, so seeding with
    empty, singleton and pair generators and then closing under
    pairwise join reaches the whole lattice.  Output is sorted by
    (size, members).
    """
    n = loop.n
    if n > bounds.max_subloop_n:
        raise BoundExceeded(
            f"subloop enumeration needs n <= {bounds.max_subloop_n}, got {n}"
        )
    seen = {}

    def record(s: ElementSubset):
        if s.members not in seen:
            seen[s.members] = s
            return True
        return False

    record(subloop_closure(loop, ()))
    for x in range(n):
        record(subloop_closure(loop, (x,)))
    for x in range(n):
        for y in range(x + 1, n):
            record(subloop_closure(loop, (x, y)))

    queue = sorted(seen.values(), key=lambda s: s.sort_key)
    while queue:
        nxt = []
        current = sorted(seen.values(), key=lambda s: s.sort_key)
        for a in queue:
            for b in current:
                # comparable sets join to the larger one, already present
                if a.members >= b.members or a.members <= b.members:
                    continue
                j = subloop_closure(loop, a.members | b.members)
                if record(j):
                    nxt.append(j)
        queue = nxt
    return sorted(seen.values(), key=lambda s: s.sort_key)


def is_normal_subloop(loop: CayleyLoop, subset) -> bool:
    """Check a + K = K + a, (a+b) + K = a + (b+K), (K+a) + b = K + (a+b).

    Raises NotASubloop if the subset is not a subloop at all.
    """
    members = _as_member_set(loop, subset)
    if not is_subloop(loop, members):
        raise NotASubloop(f"{sorted(members)} is not a subloop")
    add = loop.add
    k = np.fromiter(sorted(members), dtype=np.int64)
    n = loop.n
    for a in range(n):
        left = np.sort(add[a, k])
        right = np.sort(add[k, a])
        if not np.array_equal(left, right):
            return False
    for a in range(n):
        # rows indexed by b: ((a+b)+K) vs (a+(b+K)) as sets
        lhs = add[np.ix_(add[a], k)]         # [b, i] = (a+b) + k_i
        rhs = add[a][add[:, k]]              # [b, i] = a + (b + k_i)
        if not np.array_equal(np.sort(lhs, axis=1), np.sort(rhs, axis=1)):
            return False
        # rows indexed by b: ((K+a)+b) vs (K+(a+b)) as sets
        lhs2 = add[add[k, a]]                # [i, b] = (k_i + a) + b
        rhs2 = add[np.ix_(k, add[a])]        # [i, b] = k_i + (a + b)
        if not np.array_equal(np.sort(lhs2, axis=0), np.sort(rhs2, axis=0)):
            return False
    return True


@dataclass(frozen=True, eq=False)
class StructureHom:
    """A validated homomorphism of loops, given as a total index map."""

    source: CayleyLoop
    target: CayleyLoop
    map: tuple

    @cached_property
    def kernel(self) -> ElementSubset:
        z = self.target.zero
        return ElementSubset.of(
            self.source.n, (i for i, v in enumerate(self.map) if v == z)
        )

    @cached_property
    def image(self) -> ElementSubset:
        return ElementSubset.of(self.target.n, set(self.map))

    def __repr__(self):
        return f"StructureHom({self.source!r} -> {self.target!r})"


def validate_loop_hom(f, source: CayleyLoop, target: CayleyLoop) -> StructureHom:
    """Check f(a + b) = f(a) + f(b) for all a, b and wrap the map.

    Preservation of zero and of both differences follows from the
    addition law by cancellation, so only the one law is scanned.
    """
    fm = np.asarray(list(f), dtype=np.int64)
    if fm.shape != (source.n,):
        raise NotAHomomorphism(
            f"map has {fm.shape[0] if fm.ndim == 1 else '?'} entries, expected {source.n}"
        )
    if fm.size and (fm.min() < 0 or fm.max() >= target.n):
        raise NotAHomomorphism("map entries outside the target carrier")
    lhs = fm[source.add]
    rhs = target.add[np.ix_(fm, fm)]
    bad = lhs != rhs
    if bad.any():
        a, b = np.argwhere(bad)[0]
        raise NotAHomomorphism(
            f"f({int(a)} + {int(b)}) != f({int(a)}) + f({int(b)})",
            witness=(int(a), int(b)),
        )
    return StructureHom(source=source, target=target, map=tuple(int(x) for x in fm))


def kernel(hom) -> ElementSubset:
    """Preimage of zero under a validated homomorphism."""
    return hom.kernel


def image(hom) -> ElementSubset:
    """Value set of a validated homomorphism."""
    return hom.image
