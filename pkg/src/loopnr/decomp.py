"""Decomposition of the regular module of a finite ring via idempotents.

A complete orthogonal family of nonzero idempotents e1..ek (ei*ej = 0
for i != j, sum = 1) splits the regular right module into the summands
ei*A.  The summand ei*A is indecomposable exactly when ei is primitive
(the corner ring ei*A*ei has only the trivial idempotents), and the
Krull-Schmidt statement certified here says: once the canonical family
is strongly indecomposable (all corners local), every complete family
of primitive idempotents has the same length and members pairwise
isomorphic to the canonical ones.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import DEFAULT_BOUNDS, Bounds
from .errors import (
    BoundExceeded,
    HypothesisFailed,
    LimitReached,
    NotIdempotent,
    PreconditionFailed,
    TheoremViolation,
    ZeroIdempotent,
)
from .nearrings import idempotents, units
from .rings import (
    FiniteRing,
    idempotents_isomorphic,
    is_local_ring,
    validate_ring_tables,
)


@dataclass(frozen=True, eq=False)
class IdempotentFamily:
    """A complete orthogonal family of nonzero idempotents.

    Members are stored in ascending order.  Only the zero ring admits
    the empty family.  Build instances through validate_idempotent_family
    so the invariants actually hold.
    """

    ring: FiniteRing
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"IdempotentFamily{self.members}"


def validate_idempotent_family(ring: FiniteRing, members) -> IdempotentFamily:
    """Check idempotence, orthogonality and completeness, then wrap."""
    ms = tuple(sorted(int(e) for e in members))
    mul = ring.mul
    for e in ms:
        if not 0 <= e < ring.n:
            raise PreconditionFailed(f"family member {e} outside the carrier")
        if e == ring.zero:
            raise ZeroIdempotent("family members must be nonzero")
        if int(mul[e, e]) != e:
            raise NotIdempotent(f"family member {e} is not idempotent")
    for i, e in enumerate(ms):
        for f in ms[i + 1 :]:
            if int(mul[e, f]) != ring.zero or int(mul[f, e]) != ring.zero:
                raise PreconditionFailed(f"family members {e}, {f} not orthogonal")
    acc = ring.zero
    for e in ms:
        acc = int(ring.add[acc, e])
    if acc != ring.one:
        raise PreconditionFailed(f"family sums to {acc}, not to one")
    return IdempotentFamily(ring=ring, members=ms)


@dataclass(frozen=True, eq=False)
class CornerRing:
    """The ring e*A*e with identity e, re-indexed to 0..k-1.

    ``carrier[i]`` is the parent element the i-th corner element
    stands for; carrier is ascending, so corner index 0 is parent zero.
    """

    parent: FiniteRing
    e: int
    carrier: tuple
    ring: FiniteRing

    @cached_property
    def unit(self) -> int:
        return self.e


def corner_ring(ring: FiniteRing, e: int) -> CornerRing:
    if not 0 <= e < ring.n:
        raise NotIdempotent(f"{e} outside the carrier")
    if int(ring.mul[e, e]) != e:
        raise NotIdempotent(f"{e} is not idempotent")
    mul = ring.mul
    carrier = np.unique(mul[e, mul[:, e]])
    pos = {int(v): i for i, v in enumerate(carrier)}
    grid = np.ix_(carrier, carrier)
    relabel = np.vectorize(pos.__getitem__, otypes=[np.int64])
    sub = validate_ring_tables(
        relabel(ring.add[grid]), relabel(mul[grid]), pos[e]
    )
    return CornerRing(
        parent=ring, e=e, carrier=tuple(int(v) for v in carrier), ring=sub
    )


def is_primitive(ring: FiniteRing, e: int) -> bool:
    """e generates an indecomposable summand: corner idempotents trivial."""
    if e == ring.zero:
        raise ZeroIdempotent("primitivity is about nonzero idempotents")
    corner = corner_ring(ring, e)
    idem = idempotents(corner.ring)
    return len(idem.members) == 2


def is_strongly_indecomposable_corner(
    ring: FiniteRing, e: int, bounds: Bounds = DEFAULT_BOUNDS
) -> bool:
    """The corner ring e*A*e is local."""
    if e == ring.zero:
        raise ZeroIdempotent("strong indecomposability is about nonzero idempotents")
    return is_local_ring(corner_ring(ring, e).ring, bounds)


def _corner_candidates(ring: FiniteRing, e: int) -> np.ndarray:
    """Idempotents g with e*g = g*e = g, ascending (parent indexing)."""
    n = ring.n
    idx = np.arange(n)
    mask = (
        (ring.mul[idx, idx] == idx)
        & (ring.mul[e, :] == idx)
        & (ring.mul[:, e] == idx)
    )
    return np.where(mask)[0]


def decompose_regular(ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS) -> IdempotentFamily:
    """The canonical complete family of primitive idempotents.

    Recursive splitting: among the idempotents of the current corner,
    pick the least one distinct from 0 and the corner identity, split
    off its complement within the corner, and recurse on both halves.
    The least-index choice makes the result canonical.
    """
    if ring.n > bounds.max_n:
        raise BoundExceeded(f"ring order {ring.n} exceeds max_n={bounds.max_n}")
    if ring.one == ring.zero:
        return validate_idempotent_family(ring, ())

    def split(e: int) -> list:
        for g in _corner_candidates(ring, e):
            g = int(g)
            if g not in (ring.zero, e):
                h = int(ring.add[e, ring.neg[g]])
                return split(g) + split(h)
        return [e]

    return validate_idempotent_family(ring, split(ring.one))


def enumerate_complete_primitive_families(
    ring: FiniteRing, limit: int | None = None, bounds: Bounds = DEFAULT_BOUNDS
) -> list:
    """All complete orthogonal families of primitive idempotents.

    Families are emitted with ascending members, in lexicographic
    order.  If more than ``limit`` families exist, LimitReached is
    raised carrying the ones found so far in ``partial``.
    """
    if ring.n > bounds.max_family_n:
        raise BoundExceeded(
            f"ring order {ring.n} exceeds max_family_n={bounds.max_family_n}"
        )
    if limit is None:
        limit = bounds.max_families
    if ring.one == ring.zero:
        return [validate_idempotent_family(ring, ())]
    prim = [
        int(e)
        for e in idempotents(ring).sorted_members
        if e != ring.zero and is_primitive(ring, e)
    ]
    mul = ring.mul
    add = ring.add
    zero, one = ring.zero, ring.one
    found: list = []

    def extend(chosen: list, total: int, start: int):
        if total == one:
            if len(found) >= limit:
                raise LimitReached(
                    f"more than {limit} complete families",
                    partial=tuple(found),
                )
            found.append(validate_idempotent_family(ring, chosen))
            return
        for k in range(start, len(prim)):
            p = prim[k]
            if all(
                int(mul[p, q]) == zero and int(mul[q, p]) == zero for q in chosen
            ):
                extend(chosen + [p], int(add[total, p]), k + 1)

    extend([], zero, 0)
    return found


def corner_signature(ring: FiniteRing, e: int) -> tuple:
    """A cheap fingerprint of the corner ring at e.

    Components: corner size, unit count, idempotent count, and a hash
    of the lexicographically sorted multiplication table.  The first
    three are isomorphism invariants; the table hash depends on the
    labeling, so only the numeric components may be used to rule out
    isomorphism.
    """
    corner = corner_ring(ring, e).ring
    rows = sorted(tuple(int(v) for v in row) for row in corner.mul)
    digest = hashlib.sha256(repr((corner.n, rows)).encode()).hexdigest()[:16]
    return (
        corner.n,
        len(units(corner).members),
        len(idempotents(corner).members),
        digest,
    )


def _iso_class_labels(ring: FiniteRing, members) -> dict:
    """Partition idempotents into isomorphism classes, labeled 0,1,...

    Labels are assigned in ascending order of each class's least
    member.  The invariant part of the corner signature prunes pairs
    that cannot match; idempotents_isomorphic decides the rest.
    """
    ms = sorted(set(int(e) for e in members))
    invariant = {e: corner_signature(ring, e)[:3] for e in ms}
    labels: dict = {}
    reps: list = []
    for e in ms:
        for label, r in enumerate(reps):
            if invariant[e] == invariant[r] and idempotents_isomorphic(ring, r, e):
                labels[e] = label
                break
        else:
            labels[e] = len(reps)
            reps.append(e)
    return labels


@dataclass(frozen=True)
class KSReport:
    """Outcome of the uniqueness verification on one ring.

    ``class_labels`` assigns every member of every family its
    isomorphism class; ``signature_multiset`` is the sorted tuple of
    corner signatures of the canonical family, shared by all families
    up to isomorphism of corners.
    """

    n: int
    canonical: tuple
    families: tuple
    family_count: int
    common_length: int
    class_labels: tuple
    signature_multiset: tuple
    matched: bool


def verify_ks_uniqueness(
    ring: FiniteRing, limit: int | None = None, bounds: Bounds = DEFAULT_BOUNDS
) -> KSReport:
    """Certify unique decomposition on one ring by exhaustion.

    Enumerates every complete primitive family, checks the strong
    indecomposability hypothesis on all members (HypothesisFailed
    otherwise), and verifies that all families have equal length with
    isomorphism-matched members.  A mismatch would falsify the
    uniqueness theorem for finite rings, so it raises TheoremViolation.
    """
    canonical = decompose_regular(ring, bounds)
    families = enumerate_complete_primitive_families(ring, limit, bounds)
    if canonical.members not in [f.members for f in families]:
        raise TheoremViolation(
            f"canonical family {canonical.members} missing from enumeration"
        )
    seen = sorted(set(e for f in families for e in f.members))
    for e in seen:
        if not is_strongly_indecomposable_corner(ring, e, bounds):
            raise HypothesisFailed(
                "family member without a local corner", witness=e
            )
    labels = _iso_class_labels(ring, seen)
    canon_multiset = sorted(labels[e] for e in canonical.members)
    for fam in families:
        if len(fam) != len(canonical):
            raise TheoremViolation(
                f"families of different lengths: {fam.members} vs {canonical.members}"
            )
        if sorted(labels[e] for e in fam.members) != canon_multiset:
            raise TheoremViolation(
                f"family {fam.members} not isomorphism-matched to {canonical.members}"
            )
    return KSReport(
        n=ring.n,
        canonical=canonical.members,
        families=tuple(f.members for f in families),
        family_count=len(families),
        common_length=len(canonical),
        class_labels=tuple(
            tuple(labels[e] for e in f.members) for f in families
        ),
        signature_multiset=tuple(
            sorted(corner_signature(ring, e) for e in canonical.members)
        ),
        matched=True,
    )


@dataclass(frozen=True)
class RetractReport:
    """Every primitive idempotent matched to a canonical family member."""

    n: int
    canonical: tuple
    matches: tuple


def verify_retract_matching(
    ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS
) -> RetractReport:
    """Certify: each primitive idempotent is isomorphic to a canonical one.

    This is the indecomposable-retract side of uniqueness: a primitive
    idempotent f carves the indecomposable summand f*A out of the
    regular module, and that summand must already occur in the
    canonical decomposition.  ``matches`` pairs every primitive f with
    the least canonical member isomorphic to it.
    """
    if ring.n > bounds.max_family_n:
        raise BoundExceeded(
            f"ring order {ring.n} exceeds max_family_n={bounds.max_family_n}"
        )
    canonical = decompose_regular(ring, bounds)
    for e in canonical.members:
        if not is_strongly_indecomposable_corner(ring, e, bounds):
            raise HypothesisFailed(
                "canonical member without a local corner", witness=e
            )
    prim = [
        int(f)
        for f in idempotents(ring).sorted_members
        if f != ring.zero and is_primitive(ring, f)
    ]
    matches = []
    for f in prim:
        partner = None
        f_inv = corner_signature(ring, f)[:3]
        for e in canonical.members:
            if corner_signature(ring, e)[:3] == f_inv and idempotents_isomorphic(
                ring, f, e
            ):
                partner = e
                break
        if partner is None:
            raise TheoremViolation(
                f"primitive idempotent {f} matches no canonical family member"
            )
        matches.append((f, partner))
    return RetractReport(n=ring.n, canonical=canonical.members, matches=tuple(matches))
