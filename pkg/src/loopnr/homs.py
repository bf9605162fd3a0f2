"""Homomorphisms of loop near-rings and the locality transfer theorem.

A homomorphism must preserve +, * and the multiplicative identity.
The checks that matter for the decomposition theory are:

  * unit reflection: f(n) invertible forces n invertible,
  * idempotent lifting: idempotent values in the image come from
    idempotents of the source,
  * the transfer theorem: along a nontrivial unit-reflecting
    homomorphism into a ring, the source near-ring is local exactly
    when the image subring is local,
  * the kill check: a unit-reflecting homomorphism out of a
    zero-symmetric near-ring sends no nonzero idempotent to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import DEFAULT_BOUNDS, Bounds
from .errors import (
    NotAHomomorphism,
    PreconditionFailed,
    TargetNotARing,
    TheoremViolation,
)
from .loops import ElementSubset, Verdict
from .nearrings import (
    LoopNearRing,
    idempotents,
    is_local_lnr,
    units,
)
from .rings import FiniteRing, is_local_ring, validate_ring_tables


@dataclass(frozen=True, eq=False)
class LnrHom:
    """A validated near-ring homomorphism given as a total index map."""

    source: LoopNearRing
    target: LoopNearRing
    map: tuple

    @cached_property
    def _arr(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int64)

    @cached_property
    def image(self) -> ElementSubset:
        return ElementSubset.of(self.target.n, set(self.map))

    @cached_property
    def kernel(self) -> ElementSubset:
        z = self.target.zero
        return ElementSubset.of(
            self.source.n, (i for i, v in enumerate(self.map) if v == z)
        )

    @cached_property
    def nontrivial(self) -> bool:
        # image collapses to {0} only when the target identifies 1 with 0
        return self.image.members != frozenset({self.target.zero})

    @cached_property
    def unit_reflecting(self) -> bool:
        return bool(is_unit_reflecting(self))

    @cached_property
    def idempotent_lifting(self) -> bool:
        return bool(is_idempotent_lifting(self))

    def __repr__(self):
        return f"LnrHom({self.source!r} -> {self.target!r})"


def validate_lnr_hom(
    f, source: LoopNearRing, target: LoopNearRing
) -> LnrHom:
    """Check additivity, multiplicativity and preservation of one."""
    fm = np.asarray(list(f), dtype=np.int64)
    if fm.shape != (source.n,):
        raise NotAHomomorphism(f"map must have exactly {source.n} entries")
    if fm.size and (fm.min() < 0 or fm.max() >= target.n):
        raise NotAHomomorphism("map entries outside the target carrier")
    if int(fm[source.one]) != target.one:
        raise NotAHomomorphism(
            f"f(one) = {int(fm[source.one])} != {target.one}", witness=(source.one,)
        )
    grid = np.ix_(fm, fm)
    bad = fm[source.add] != target.add[grid]
    if bad.any():
        a, b = np.argwhere(bad)[0]
        raise NotAHomomorphism(
            f"f({int(a)} + {int(b)}) != f({int(a)}) + f({int(b)})",
            witness=(int(a), int(b)),
        )
    bad = fm[source.mul] != target.mul[grid]
    if bad.any():
        a, b = np.argwhere(bad)[0]
        raise NotAHomomorphism(
            f"f({int(a)} * {int(b)}) != f({int(a)}) * f({int(b)})",
            witness=(int(a), int(b)),
        )
    return LnrHom(source=source, target=target, map=tuple(int(x) for x in fm))


def is_unit_reflecting(hom: LnrHom) -> Verdict:
    """Every element mapping onto a unit of the target must be a unit."""
    src_units = units(hom.source).members.mask()
    tgt_units = units(hom.target).members.mask()
    pulled = tgt_units[hom._arr]
    bad = pulled & ~src_units
    if bad.any():
        return Verdict(False, (int(np.argmax(bad)),))
    return Verdict(True)


def is_idempotent_lifting(hom: LnrHom) -> Verdict:
    """Idempotent values in the image are images of source idempotents.

    On finite structures this always holds for a genuine homomorphism:
    if f(x) is idempotent then so is f(x^m) = f(x)^m for the idempotent
    power x^m of x, which every element of a finite monoid has.  The
    scan is kept because the property is a hypothesis elsewhere and a
    hand-built LnrHom need not be a homomorphism.
    """
    fm = hom._arr
    tmul = hom.target.mul
    vals = fm
    idem_value = tmul[vals, vals] == vals
    lifted = np.zeros(hom.target.n, dtype=bool)
    lifted[[fm[e] for e in idempotents(hom.source)]] = True
    bad = idem_value & ~lifted[vals]
    if bad.any():
        return Verdict(False, (int(np.argmax(bad)),))
    return Verdict(True)


@dataclass(frozen=True, eq=False)
class ImageRing:
    """The image of a near-ring homomorphism into a ring, re-indexed.

    ``carrier[i]`` is the target element the i-th image element stands
    for (ascending, so image index 0 is the target zero).
    ``surjection`` is the corestriction of the original map onto the
    image ring.
    """

    ring: FiniteRing
    carrier: tuple
    surjection: LnrHom


def image_subring(hom: LnrHom) -> ImageRing:
    """Collapse the image to a standalone ring on indices 0..k-1.

    The image of a near-ring homomorphism into a ring is closed under
    +, * and negation (the negative of f(n) is the image of the
    right complement of n), so re-indexing the value set and gathering
    the target tables yields a ring; the validator certifies it.
    """
    if not isinstance(hom.target, FiniteRing):
        raise TargetNotARing("image_subring needs a ring codomain")
    carrier = np.fromiter(hom.image.sorted_members, dtype=np.int64)
    pos = {int(v): i for i, v in enumerate(carrier)}
    grid = np.ix_(carrier, carrier)
    add_i = np.vectorize(pos.__getitem__, otypes=[np.int64])(hom.target.add[grid])
    mul_i = np.vectorize(pos.__getitem__, otypes=[np.int64])(hom.target.mul[grid])
    ring = validate_ring_tables(add_i, mul_i, pos[int(hom._arr[hom.source.one])])
    surj = validate_lnr_hom(
        [pos[int(v)] for v in hom.map], hom.source, ring
    )
    return ImageRing(ring=ring, carrier=tuple(int(v) for v in carrier), surjection=surj)


@dataclass(frozen=True)
class TransferReport:
    """Both sides of the locality transfer, with the unit bookkeeping.

    ``unit_reflecting_into_target`` and ``unit_reflecting_onto_image``
    are computed by separate scans: the former against the unit group
    of the whole codomain, the latter against the unit group of the
    image ring (the hypothesis the converse direction of the transfer
    theorem actually uses).
    """

    source_local: bool
    image_local: bool
    agree: bool
    unit_reflecting_into_target: bool
    unit_reflecting_onto_image: bool
    units_of_target: tuple
    units_of_image: tuple
    image_size: int


def verify_local_transfer(hom: LnrHom, bounds: Bounds = DEFAULT_BOUNDS) -> TransferReport:
    """Certify: source local iff image subring local.

    Hypotheses checked up front (PreconditionFailed names the one that
    fails): the codomain is a ring, the source is zero-symmetric, the
    homomorphism is nontrivial and unit-reflecting into the target.
    Disagreement between the two locality verdicts would falsify the
    transfer theorem and raises TheoremViolation.
    """
    if not isinstance(hom.target, FiniteRing):
        raise PreconditionFailed("transfer theorem needs a ring codomain")
    if not hom.source.zero_symmetric:
        raise PreconditionFailed("transfer theorem needs a zero-symmetric source")
    if not hom.nontrivial:
        raise PreconditionFailed("transfer theorem needs a nontrivial homomorphism")
    into_target = is_unit_reflecting(hom)
    if not into_target:
        raise PreconditionFailed(
            f"transfer theorem needs a unit-reflecting homomorphism, witness {into_target.witness}"
        )
    img = image_subring(hom)
    onto_image = is_unit_reflecting(img.surjection)
    source_local = is_local_lnr(hom.source, bounds).is_local
    image_local = is_local_ring(img.ring, bounds)
    if source_local != image_local:
        raise TheoremViolation(
            f"locality transfer failed: source {source_local}, image {image_local}"
        )
    tgt_units = units(hom.target).members.sorted_members
    img_units = tuple(
        img.carrier[u] for u in units(img.ring).members.sorted_members
    )
    return TransferReport(
        source_local=source_local,
        image_local=image_local,
        agree=True,
        unit_reflecting_into_target=bool(into_target),
        unit_reflecting_onto_image=bool(onto_image),
        units_of_target=tgt_units,
        units_of_image=img_units,
        image_size=img.ring.n,
    )


def idempotent_kill_check(hom: LnrHom) -> bool:
    """No nonzero idempotent maps to zero under a unit-reflecting hom.

    Requires a unit-reflecting homomorphism out of a zero-symmetric
    source (the proof divides by a unit on the left, which needs
    n * 0 = 0).  A failure would falsify the underlying lemma, so it
    raises TheoremViolation rather than returning False.
    """
    if not hom.source.zero_symmetric:
        raise PreconditionFailed("kill check needs a zero-symmetric source")
    if not is_unit_reflecting(hom):
        raise PreconditionFailed("kill check needs a unit-reflecting homomorphism")
    z = hom.target.zero
    for e in idempotents(hom.source):
        if hom.map[e] == z and e != hom.source.zero:
            raise TheoremViolation(
                f"nonzero idempotent {e} maps to zero under a unit-reflecting homomorphism"
            )
    return True
