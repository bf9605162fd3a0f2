import numpy as np
import pytest

from loopnr import (
    AdditionNotAbelianGroup,
    LeftDistributivityFails,
    NotAnIdeal,
    NotApproximatelyIdempotent,
    coset_idempotents,
    idempotents,
    idempotents_conjugate,
    idempotents_isomorphic,
    is_division_ring,
    is_local_ring,
    is_semiperfect,
    is_semisimple,
    jacobson_radical,
    left_ideals,
    lift_idempotent,
    quotient_ring,
    radical_by_maximal_left_ideals,
    radical_by_quasiregularity,
    units,
    validate_ideal,
    validate_lnr_hom,
    validate_ring,
)

import corpus


class TestValidateRing:
    def test_accepts_cyclic(self):
        ring = validate_ring(corpus.z(6))
        assert ring.zero_symmetric

    def test_rejects_one_sided_distributivity(self):
        with pytest.raises(LeftDistributivityFails):
            validate_ring(corpus.m0("small:3,0"))

    def test_rejects_full_map_near_ring(self):
        with pytest.raises((LeftDistributivityFails, AdditionNotAbelianGroup)):
            validate_ring(corpus.m_full(2))

    def test_rejects_nonassociative_addition(self):
        with pytest.raises(AdditionNotAbelianGroup):
            validate_ring(corpus.m0("nonassoc5"))

    def test_negation_table(self):
        ring = corpus.z(6)
        idx = np.arange(6)
        assert (ring.add[idx, ring.neg[idx]] == 0).all()
        assert ring.sub(5, 3) == 2


class TestIdeals:
    def test_accepts(self):
        assert len(validate_ideal(corpus.z(4), {0, 2})) == 2
        assert len(validate_ideal(corpus.z(6), {0, 3})) == 2
        assert len(validate_ideal(corpus.z(6), {0, 2, 4})) == 3

    def test_rejects_additively_open(self):
        with pytest.raises(NotAnIdeal):
            validate_ideal(corpus.z(6), {0, 2})

    def test_rejects_missing_zero(self):
        with pytest.raises(NotAnIdeal):
            validate_ideal(corpus.z(6), {3})

    def test_rejects_left_only_ideal(self):
        # a column space of a matrix ring absorbs only one side
        with pytest.raises(NotAnIdeal):
            validate_ideal(corpus.m2(2), {0, 2, 8, 10})

    def test_left_ideal_counts(self):
        assert len(left_ideals(corpus.m2(2))) == 5
        assert len(left_ideals(corpus.m2(4))) == 15


class TestRadical:
    def test_both_routes_agree_on_known_values(self):
        for ring, want in (
            (corpus.z(4), {0, 2}),
            (corpus.z(6), {0}),
            (corpus.z(12), {0, 6}),
            (corpus.m2(2), {0}),
            (corpus.ut2(2), {0, 2}),
            (corpus.ut2(3), {0, 3, 6}),
        ):
            a = radical_by_quasiregularity(ring)
            b = radical_by_maximal_left_ideals(ring)
            assert a.members == b.members == frozenset(want)
            assert jacobson_radical(ring).members.members == frozenset(want)

    def test_matrix_ring_over_z4(self):
        j = jacobson_radical(corpus.m2(4))
        assert len(j) == 16
        # exactly the matrices with every entry in {0, 2}
        digits = lambda x: [(x // 4 ** k) % 4 for k in range(4)]
        assert all(all(d % 2 == 0 for d in digits(x)) for x in j)

    def test_radical_of_zero_ring_is_everything(self):
        assert len(jacobson_radical(corpus.z(1))) == 1


class TestQuotient:
    def test_z4_mod_radical(self):
        q = quotient_ring(corpus.z(4), {0, 2})
        assert q.ring.n == 2
        assert q.leaders == (0, 1)
        assert q.projection == (0, 1, 0, 1)

    def test_z12_mod_radical(self):
        q = quotient_ring(corpus.z(12), jacobson_radical(corpus.z(12)))
        assert q.ring.n == 6
        assert is_semisimple(q.ring)

    def test_matrix_quotient_is_semisimple(self):
        ring = corpus.m2(4)
        q = quotient_ring(ring, jacobson_radical(ring))
        assert q.ring.n == 16
        assert is_semisimple(q.ring)

    def test_projection_is_a_valid_hom(self):
        ring = corpus.z(4)
        q = quotient_ring(ring, {0, 2})
        f = validate_lnr_hom(q.projection, ring, q.ring)
        assert f.unit_reflecting

    def test_projection_may_not_reflect_units(self):
        ring = corpus.z(6)
        q = quotient_ring(ring, {0, 3})
        f = validate_lnr_hom(q.projection, ring, q.ring)
        assert not f.unit_reflecting


class TestRingPredicates:
    def test_division_rings(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            assert is_division_ring(corpus.gf(q))
        assert not is_division_ring(corpus.z(4))
        assert not is_division_ring(corpus.z(6))
        assert not is_division_ring(corpus.z(1))
        assert not is_division_ring(corpus.m2(2))

    def test_local_rings(self):
        for n in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
            assert is_local_ring(corpus.z(n))
        for q in (4, 8, 9):
            assert is_local_ring(corpus.gf(q))
        for ring in (
            corpus.z(6),
            corpus.z(12),
            corpus.z(1),
            corpus.m2(2),
            corpus.ut2(2),
            corpus.zz(2, 2),
            corpus.zz(4, 2),
        ):
            assert not is_local_ring(ring)

    def test_semisimple(self):
        for ring in (corpus.z(6), corpus.m2(2), corpus.m2(3), corpus.gf(4), corpus.zz(2, 3)):
            assert is_semisimple(ring)
        for ring in (corpus.z(4), corpus.z(12), corpus.ut2(2), corpus.zz(4, 2)):
            assert not is_semisimple(ring)

    def test_semiperfect_everywhere(self):
        for _, ring in corpus.ring_corpus():
            if ring.n <= 81:
                assert is_semiperfect(ring)


class TestIdempotentLifting:
    def test_lift_in_z4(self):
        ring = corpus.z(4)
        j = jacobson_radical(ring)
        assert coset_idempotents(ring, j, 3) == (1,)
        assert lift_idempotent(ring, j, 3) == 1
        assert lift_idempotent(ring, j, 2) == 0
        assert lift_idempotent(ring, j, 1) == 1

    def test_coset_with_two_idempotents(self):
        ring = corpus.ut2(2)
        j = jacobson_radical(ring)
        assert coset_idempotents(ring, j, 6) == (4, 6)
        assert lift_idempotent(ring, j, 6) == 6

    def test_rejects_far_from_idempotent(self):
        ring = corpus.z(6)
        j = jacobson_radical(ring)
        with pytest.raises(NotApproximatelyIdempotent):
            lift_idempotent(ring, j, 2)

    def test_all_approximate_idempotents_lift(self):
        for ring in (corpus.z(8), corpus.z(12), corpus.ut2(2), corpus.m2(2)):
            j = jacobson_radical(ring)
            jm = j.members.members
            for x in range(ring.n):
                defect = ring.sub(ring.mul[x, x], x)
                if int(defect) in jm:
                    e = lift_idempotent(ring, j, x)
                    assert int(ring.mul[e, e]) == e
                    assert int(ring.sub(e, x)) in jm


class TestIdempotentRelations:
    def test_matrix_units_are_isomorphic_and_conjugate(self):
        ring = corpus.m2(2)
        e11, e22 = 8, 1
        assert idempotents_isomorphic(ring, e11, e22)
        assert idempotents_conjugate(ring, e11, e22)

    def test_zero_and_one_are_not_isomorphic_to_proper(self):
        ring = corpus.m2(2)
        assert not idempotents_isomorphic(ring, 8, 0)
        assert not idempotents_isomorphic(ring, 9, 8)
        assert idempotents_isomorphic(ring, 0, 0)

    def test_commutative_orthogonal_pair_is_not_isomorphic(self):
        ring = corpus.z(6)
        assert not idempotents_isomorphic(ring, 3, 4)
        assert not idempotents_conjugate(ring, 3, 4)
        assert idempotents_conjugate(ring, 3, 3)

    def test_conjugate_implies_isomorphic(self):
        for ring in (corpus.z(6), corpus.z(12), corpus.m2(2), corpus.ut2(2), corpus.zz(4, 2)):
            idem = sorted(idempotents(ring))
            for e in idem:
                for f in idem:
                    if idempotents_conjugate(ring, e, f):
                        assert idempotents_isomorphic(ring, e, f)

    def test_units_act_by_conjugation(self):
        ring = corpus.m2(2)
        u = units(ring)
        for e in idempotents(ring):
            for x in u:
                y = int(ring.mul[ring.mul[u.inverse[x], e], x])
                assert idempotents_conjugate(ring, e, y)
