"""Finite associative unital rings, as the degenerate loop near-rings
whose addition is an abelian group and which distribute on both sides.

Everything here is decided by exhaustive scans, and the structurally
important quantities are computed along two independent routes that
are asserted to agree:

  * the Jacobson radical via quasi-regularity and via the intersection
    of maximal left ideals,
  * locality via the non-unit set being a left ideal and via the
    quotient by the radical being a division ring,
  * idempotent lifting via the polynomial iteration and via coset
    search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import tables
from .config import DEFAULT_BOUNDS, Bounds
from .errors import (
    AdditionNotAbelianGroup,
    LeftDistributivityFails,
    NotAnIdeal,
    NotApproximatelyIdempotent,
    NotIdempotent,
    TheoremViolation,
)
from .loops import CayleyLoop, ElementSubset
from .nearrings import (
    LoopNearRing,
    UnitGroup,
    enumerate_N_subloops,
    idempotents,
    is_N_subloop,
    maximal_N_subloops,
    units,
    validate_lnr,
)


@dataclass(frozen=True, eq=False, repr=False)
class FiniteRing(LoopNearRing):
    """A loop near-ring whose axioms upgrade it to an associative ring."""

    @cached_property
    def neg(self) -> np.ndarray:
        # -a solves a + x = 0
        return self.additive.ldiff[:, self.additive.zero]

    def sub(self, a, b):
        """a - b, elementwise over arrays or ints."""
        return self.add[a, self.neg[b]]


def validate_ring(nr: LoopNearRing) -> FiniteRing:
    """Upgrade a validated loop near-ring to a ring, or refuse.

    Checks commutativity and associativity of +, and left
    distributivity; right distributivity and the monoid axioms were
    already certified by the near-ring validator.
    """
    add = nr.add
    w = tables.comm_witness(add)
    if w is not None:
        raise AdditionNotAbelianGroup(f"a + b != b + a at {w}", witness=w)
    w = tables.assoc_witness(add)
    if w is not None:
        raise AdditionNotAbelianGroup(f"(a+b)+c != a+(b+c) at {w}", witness=w)
    w = tables.left_dist_witness(add, nr.mul)
    if w is not None:
        raise LeftDistributivityFails(f"a*(b+c) != a*b + a*c at {w}", witness=w)
    if not nr.zero_symmetric:
        # left distributivity forces n*0 = 0, so this cannot happen
        raise TheoremViolation("ring axioms hold but n*0 != 0 somewhere")
    return FiniteRing(
        additive=nr.additive, mul=nr.mul, one=nr.one, zero_symmetric=True
    )


def validate_ring_tables(add_table, mul_table, one: int) -> FiniteRing:
    return validate_ring(validate_lnr(add_table, mul_table, one))


@dataclass(frozen=True)
class TwoSidedIdeal:
    """A validated two-sided ideal of a finite ring."""

    ring: FiniteRing
    members: ElementSubset

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(self.members)


def validate_ideal(ring: FiniteRing, subset) -> TwoSidedIdeal:
    """Additive subgroup absorbing multiplication on both sides."""
    if isinstance(subset, ElementSubset):
        sub = subset
    else:
        sub = ElementSubset.of(ring.n, subset)
    if ring.zero not in sub.members:
        raise NotAnIdeal("ideal must contain 0")
    idx = np.fromiter(sub.sorted_members, dtype=np.int64)
    m = sub.mask()
    if not m[ring.add[np.ix_(idx, idx)]].all():
        raise NotAnIdeal("subset not closed under addition")
    if not m[ring.neg[idx]].all():
        raise NotAnIdeal("subset not closed under negation")
    if not m[ring.mul[:, idx]].all():
        raise NotAnIdeal("subset does not absorb left multiplication")
    if not m[ring.mul[idx, :]].all():
        raise NotAnIdeal("subset does not absorb right multiplication")
    return TwoSidedIdeal(ring=ring, members=sub)


def left_ideals(ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """All left ideals.  For a ring these are exactly the N-subloops."""
    return enumerate_N_subloops(ring, bounds)


def radical_by_quasiregularity(ring: FiniteRing) -> ElementSubset:
    """J = { a : 1 - x*a has a left inverse for every x }."""
    n = ring.n
    mul = ring.mul
    has_left_inv = (mul == ring.one).any(axis=0)
    # [x, a] = 1 - x*a
    one_minus = ring.add[ring.one, ring.neg[mul]]
    member = has_left_inv[one_minus].all(axis=0)
    return ElementSubset.of(n, np.flatnonzero(member).tolist())


def radical_by_maximal_left_ideals(
    ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS
) -> ElementSubset:
    """J = intersection of all maximal left ideals (the whole ring if none)."""
    maximal = maximal_N_subloops(ring, bounds)
    if not maximal:
        return ElementSubset.of(ring.n, range(ring.n))
    acc = set(maximal[0].members)
    for s in maximal[1:]:
        acc &= s.members
    return ElementSubset.of(ring.n, acc)


def jacobson_radical(ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS) -> TwoSidedIdeal:
    """The radical, computed both ways, asserted equal and two-sided."""
    a = radical_by_quasiregularity(ring)
    b = radical_by_maximal_left_ideals(ring, bounds)
    if a.members != b.members:
        raise TheoremViolation(
            "radical procedures disagree: quasi-regularity gives "
            f"{a.sorted_members}, maximal left ideals give {b.sorted_members}"
        )
    try:
        return validate_ideal(ring, a)
    except NotAnIdeal as exc:
        raise TheoremViolation(f"Jacobson radical is not a two-sided ideal: {exc}") from exc


@dataclass(frozen=True, eq=False)
class Quotient:
    """A quotient ring with its canonical projection.

    ``leaders[i]`` is the least element of the i-th coset; cosets are
    indexed in ascending leader order, so the zero coset is index 0.
    ``projection`` maps each parent element to its coset index.
    """

    ring: FiniteRing
    leaders: tuple
    projection: tuple

    def __repr__(self):
        return f"Quotient(n={self.ring.n})"


def quotient_ring(ring: FiniteRing, ideal) -> Quotient:
    """A / I with canonical least-element coset representatives."""
    if isinstance(ideal, TwoSidedIdeal):
        ideal = validate_ideal(ring, ideal.members)
    else:
        ideal = validate_ideal(ring, ideal)
    n = ring.n
    ii = np.fromiter(ideal.members.sorted_members, dtype=np.int64)
    # leader[x] = min(x + I)
    cosets = ring.add[:, ii]
    leader_of = cosets.min(axis=1)
    leaders = np.unique(leader_of)
    index_of = {int(l): i for i, l in enumerate(leaders)}
    proj = np.fromiter((index_of[int(l)] for l in leader_of), dtype=np.int64, count=n)
    k = leaders.size
    add_q = proj[ring.add[np.ix_(leaders, leaders)]]
    mul_q = proj[ring.mul[np.ix_(leaders, leaders)]]
    q = validate_ring_tables(add_q, mul_q, int(proj[ring.one]))
    return Quotient(
        ring=q,
        leaders=tuple(int(x) for x in leaders),
        projection=tuple(int(x) for x in proj),
    )


def is_division_ring(ring: FiniteRing) -> bool:
    """1 != 0 and every nonzero element is a unit."""
    if ring.n < 2:
        return False
    return len(units(ring)) == ring.n - 1


def is_local_ring(ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    """Non-units form a left ideal; cross-checked against A/J division."""
    u = units(ring)
    nonunits = ElementSubset.of(ring.n, set(range(ring.n)) - u.members.members)
    by_units = is_N_subloop(ring, nonunits)
    j = jacobson_radical(ring, bounds)
    by_quotient = is_division_ring(quotient_ring(ring, j).ring)
    if by_units != by_quotient:
        raise TheoremViolation(
            f"locality characterizations disagree on a ring: non-unit ideal "
            f"route {by_units}, division-quotient route {by_quotient}"
        )
    return by_units


def is_semisimple(ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    """Radical is zero."""
    return len(jacobson_radical(ring, bounds)) == 1


def is_semiperfect(ring: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    """A/J is semisimple and idempotents of A/J lift to A.

    Every finite ring satisfies both; the check runs anyway because it
    exercises the same machinery the decomposition theory relies on.
    """
    j = jacobson_radical(ring, bounds)
    q = quotient_ring(ring, j)
    if not is_semisimple(q.ring, bounds):
        return False
    proj = np.fromiter(q.projection, dtype=np.int64, count=ring.n)
    lifted = set(int(proj[e]) for e in idempotents(ring))
    return all(e in lifted for e in idempotents(q.ring))


def coset_idempotents(ring: FiniteRing, ideal: TwoSidedIdeal, x: int) -> tuple:
    """All idempotents in the coset x + I, ascending.  Brute force."""
    ii = np.fromiter(ideal.members.sorted_members, dtype=np.int64)
    coset = np.sort(ring.add[int(x), ii])
    diag = ring.mul[coset, coset]
    return tuple(int(e) for e in coset[diag == coset])


def lift_idempotent(
    ring: FiniteRing, ideal: TwoSidedIdeal, x: int, verify: bool = True
) -> int:
    """Idempotent e with e = x mod I, for x*x - x in I = J(A).

    Iterates x <- 3x^2 - 2x^3; each step squares the defect t = x*x - x
    (t' = t^2 * (4t - 3)), and J is nilpotent in a finite ring, so the
    iteration reaches a true idempotent.  With ``verify`` the result is
    checked against the exhaustive coset search.
    """
    mul, add = ring.mul, ring.add
    x = int(x)
    t = ring.sub(mul[x, x], x)
    if int(t) not in ideal.members.members:
        raise NotApproximatelyIdempotent(f"x*x - x = {int(t)} is not in the ideal")
    cur = x
    for _ in range(64):
        sq = mul[cur, cur]
        if int(sq) == cur:
            break
        cube = mul[sq, cur]
        cur = int(ring.sub(add[sq, add[sq, sq]], add[cube, cube]))
    e = int(cur)
    if int(mul[e, e]) != e or int(ring.sub(e, x)) not in ideal.members.members:
        raise TheoremViolation("idempotent lifting iteration failed to converge")
    if verify and len(ideal) <= (1 << 16):
        found = coset_idempotents(ring, ideal, x)
        if e not in found:
            raise TheoremViolation("iterated lift disagrees with coset search")
    return e


def idempotents_isomorphic(ring: FiniteRing, e: int, f: int) -> bool:
    """Whether eA and fA are isomorphic as right modules.

    Criterion: there are a in eAf and b in fAe with a*b = e and
    b*a = f.  Decided by exhaustive search over both corner sets.
    """
    mul = ring.mul
    e, f = int(e), int(f)
    for g in (e, f):
        if int(mul[g, g]) != g:
            raise NotIdempotent(f"{g} is not idempotent")
    eaf = np.unique(mul[e, mul[:, f]])
    fae = np.unique(mul[f, mul[:, e]])
    for a in eaf:
        ab = mul[a, fae]
        hits = np.flatnonzero(ab == e)
        for i in hits:
            if int(mul[fae[i], a]) == f:
                return True
    return False


def idempotents_conjugate(ring: FiniteRing, e: int, f: int) -> bool:
    """Whether f = u^-1 * e * u for some unit u."""
    mul = ring.mul
    e, f = int(e), int(f)
    for g in (e, f):
        if int(mul[g, g]) != g:
            raise NotIdempotent(f"{g} is not idempotent")
    u = units(ring)
    for v in u.members:
        vinv = u.inverse[v]
        if int(mul[mul[vinv, e], v]) == f:
            return True
    return False
