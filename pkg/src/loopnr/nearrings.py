"""Loop near-rings: a loop under + with a monoid multiplication that
distributes over + from the right and kills zero on the right.

The definition checked by ``validate_lnr`` is:

  * (N, +) is a loop (not necessarily associative or commutative),
  * (N, *) is a monoid with identity ``one``,
  * (a + b) * c = a*c + b*c for all a, b, c,
  * 0 * n = 0 for all n (this already follows from right
    distributivity plus cancellation, but it is scanned anyway).

``n * 0 = 0`` does NOT follow and is recorded per structure as the
``zero_symmetric`` flag.  The full map near-ring M(G) fails it on the
constant maps; the zero-fixing map near-ring M0(G) satisfies it.
Locality analysis requires the flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import tables
from .config import DEFAULT_BOUNDS, Bounds
from .errors import (
    BoundExceeded,
    MulNotAssociative,
    NotIdempotent,
    NotIdentity,
    PreconditionFailed,
    RightDistributivityFails,
    TheoremViolation,
    ValidationError,
    ZeroNotLeftAbsorbing,
)
from .loops import CayleyLoop, ElementSubset, validate_loop


@dataclass(frozen=True, eq=False, repr=False)
class LoopNearRing:
    """Validated loop near-ring over the carrier 0 .. n-1."""

    additive: CayleyLoop
    mul: np.ndarray
    one: int
    zero_symmetric: bool

    @property
    def n(self) -> int:
        return self.additive.n

    @property
    def add(self) -> np.ndarray:
        return self.additive.add

    @property
    def zero(self) -> int:
        return self.additive.zero

    @cached_property
    def _py_mul(self):
        return self.mul.tolist()

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


def validate_lnr(add_table, mul_table, one: int) -> LoopNearRing:
    """Check every loop near-ring axiom on raw tables.

    ``add_table`` may be a raw table or an already validated CayleyLoop.
    """
    if isinstance(add_table, CayleyLoop):
        additive = add_table
    else:
        additive = validate_loop(add_table)
    n = additive.n
    mul = tables.as_table(mul_table)
    if mul.shape[0] != n:
        raise ValidationError(f"mul table is {mul.shape[0]}x{mul.shape[0]}, additive has n={n}")
    if not tables.entries_in_range(mul, n):
        raise ValidationError("mul entries outside the carrier 0..n-1")
    one = int(one)
    if not 0 <= one < n:
        raise ValidationError(f"one={one} outside the carrier")
    w = tables.identity_witness(mul, one)
    if w is not None:
        raise NotIdentity(f"one={one} is not a two-sided multiplicative identity at {w}", witness=w)
    w = tables.assoc_witness(mul)
    if w is not None:
        raise MulNotAssociative(f"(a*b)*c != a*(b*c) at {w}", witness=w)
    w = tables.right_dist_witness(additive.add, mul)
    if w is not None:
        raise RightDistributivityFails(f"(a+b)*c != a*c + b*c at {w}", witness=w)
    if (mul[additive.zero] != additive.zero).any():
        # unreachable given right distributivity and cancellation
        bad = int(np.argmax(mul[additive.zero] != additive.zero))
        raise ZeroNotLeftAbsorbing(f"0 * {bad} != 0", witness=bad)
    zero_symmetric = bool((mul[:, additive.zero] == additive.zero).all())
    return LoopNearRing(additive=additive, mul=mul, one=one, zero_symmetric=zero_symmetric)


@dataclass(frozen=True, eq=False)
class UnitGroup:
    """The two-sided units, with the inverse of each unit."""

    members: ElementSubset
    inverse: dict

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def units(nr: LoopNearRing) -> UnitGroup:
    """Elements with a two-sided multiplicative inverse.

    The result is asserted to be closed under multiplication and under
    inverse, i.e. to form a group.
    """
    mul = nr.mul
    hits = mul == nr.one
    two_sided = hits & hits.T
    member_mask = two_sided.any(axis=1)
    members = np.flatnonzero(member_mask)
    inverse = {int(u): int(np.argmax(two_sided[u])) for u in members}
    for u in members:
        if not member_mask[mul[u, inverse[int(u)]]]:
            raise TheoremViolation("unit has a product outside the units")
    prod = mul[np.ix_(members, members)]
    if members.size and not member_mask[prod].all():
        raise TheoremViolation("units are not closed under multiplication")
    return UnitGroup(
        members=ElementSubset.of(nr.n, members.tolist()),
        inverse=inverse,
    )


def idempotents(nr: LoopNearRing) -> ElementSubset:
    """All e with e * e = e."""
    n = nr.n
    diag = nr.mul[np.arange(n), np.arange(n)]
    return ElementSubset.of(n, np.flatnonzero(diag == np.arange(n)).tolist())


def is_N_subloop(nr: LoopNearRing, subset) -> bool:
    """Subloop of (N, +) absorbing multiplication from the left: N*I <= I."""
    if isinstance(subset, ElementSubset):
        members = subset.members
    else:
        members = frozenset(int(x) for x in subset)
    if nr.zero not in members:
        return False
    idx = np.fromiter(sorted(members), dtype=np.int64)
    m = np.zeros(nr.n, dtype=bool)
    m[idx] = True
    grid = np.ix_(idx, idx)
    loop = nr.additive
    for t in (loop.add, loop.ldiff, loop.rdiff):
        if not m[t[grid]].all():
            return False
    return bool(m[nr.mul[:, idx]].all())


def _n_subloop_closure(nr: LoopNearRing, seed) -> frozenset:
    """Smallest N-subloop containing seed, by frontier saturation."""
    n = nr.n
    loop = nr.additive
    mask = np.zeros(n, dtype=bool)
    mask[loop.zero] = True
    for x in seed:
        mask[x] = True
    frontier = np.flatnonzero(mask)
    while frontier.size:
        members = np.flatnonzero(mask)
        parts = []
        for t in (loop.add, loop.ldiff, loop.rdiff):
            parts.append(t[np.ix_(frontier, members)].ravel())
            parts.append(t[np.ix_(members, frontier)].ravel())
        parts.append(nr.mul[:, frontier].ravel())
        cand = np.unique(np.concatenate(parts))
        new_mask = mask.copy()
        new_mask[cand] = True
        frontier = np.flatnonzero(new_mask & ~mask)
        mask = new_mask
    return frozenset(np.flatnonzero(mask).tolist())


def enumerate_N_subloops(nr: LoopNearRing, bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """The full lattice of N-subloops, sorted by (size, members).

    Seeds are the single-element closures; the lattice is then closed
    under pairwise join.  For a ring this is exactly the lattice of
    left ideals.
    """
    n = nr.n
    if n > bounds.max_enum_n:
        raise BoundExceeded(f"N-subloop enumeration needs n <= {bounds.max_enum_n}, got {n}")
    unit_mask = units(nr).members.mask()
    full = frozenset(range(n))
    seen = {}

    def record(ms: frozenset):
        if ms not in seen:
            seen[ms] = ElementSubset(n, ms)
            return True
        return False

    record(_n_subloop_closure(nr, ()))
    for x in range(n):
        # a unit generates everything: N*u = N
        ms = full if unit_mask[x] else _n_subloop_closure(nr, (x,))
        record(ms)

    queue = sorted(seen.values(), key=lambda s: s.sort_key)
    while queue:
        nxt = []
        current = sorted(seen.values(), key=lambda s: s.sort_key)
        for a in queue:
            for b in current:
                if a.members >= b.members or a.members <= b.members:
                    continue
                j = _n_subloop_closure(nr, a.members | b.members)
                if record(j):
                    nxt.append(seen[j])
        queue = nxt
    return sorted(seen.values(), key=lambda s: s.sort_key)


def maximal_N_subloops(nr: LoopNearRing, bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """Proper N-subloops not strictly contained in another proper one."""
    lattice = enumerate_N_subloops(nr, bounds)
    proper = [s for s in lattice if len(s) < nr.n]
    out = []
    for s in proper:
        if not any(s is not t and s.members < t.members for t in proper):
            out.append(s)
    return sorted(out, key=lambda s: s.sort_key)


def annihilator(nr: LoopNearRing, e: int) -> ElementSubset:
    """Ann(e) = { y : y * e = 0 } for an idempotent e.

    Two facts from the structure theory are asserted on every call:
    N = Ann(e) + N*e elementwise (each n splits as y + n*e with
    y * e = 0), and, when N is zero-symmetric, Ann(e) is an N-subloop.
    """
    n = nr.n
    e = int(e)
    if nr.mul[e, e] != e:
        raise NotIdempotent(f"{e} is not idempotent")
    col = nr.mul[:, e]
    ann = np.flatnonzero(col == nr.zero)
    # n = y + n*e with y = rdiff[n][n*e]; the theory says y * e = 0
    y = nr.additive.rdiff[np.arange(n), col]
    if (nr.mul[y, e] != nr.zero).any():
        raise TheoremViolation("N != Ann(e) + N*e decomposition failed")
    out = ElementSubset.of(n, ann.tolist())
    if nr.zero_symmetric and not is_N_subloop(nr, out):
        raise TheoremViolation("Ann(e) is not an N-subloop in a zero-symmetric near-ring")
    return out


@dataclass(frozen=True)
class LocalityReport:
    """Locality decided along two independent routes that must agree.

    via_maximal: exactly one maximal proper N-subloop exists.
    via_units: the non-units form an N-subloop.
    When local, ``j`` is the unique maximal N-subloop and equals the
    non-unit set.
    """

    is_local: bool
    via_maximal: bool
    via_units: bool
    maximal_subloops: tuple
    nonunits: ElementSubset
    j: ElementSubset | None


def is_local_lnr(nr: LoopNearRing, bounds: Bounds = DEFAULT_BOUNDS) -> LocalityReport:
    """Decide locality twice and certify that the answers agree.

    Requires a zero-symmetric near-ring; the equivalence being
    exercised is only a theorem under that hypothesis.
    """
    if not nr.zero_symmetric:
        raise PreconditionFailed("locality analysis requires a zero-symmetric near-ring")
    u = units(nr)
    nonunits = ElementSubset.of(nr.n, set(range(nr.n)) - u.members.members)
    via_units = is_N_subloop(nr, nonunits)
    maximal = tuple(maximal_N_subloops(nr, bounds))
    via_maximal = len(maximal) == 1
    if via_maximal != via_units:
        raise TheoremViolation(
            "locality characterizations disagree: "
            f"maximal route says {via_maximal}, unit route says {via_units}"
        )
    j = None
    if via_maximal:
        j = maximal[0]
        if j.members != nonunits.members:
            raise TheoremViolation("unique maximal N-subloop differs from the non-unit set")
    return LocalityReport(
        is_local=via_maximal,
        via_maximal=via_maximal,
        via_units=via_units,
        maximal_subloops=maximal,
        nonunits=nonunits,
        j=j,
    )
