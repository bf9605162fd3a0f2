import pytest

from loopnr import (
    NotAHomomorphism,
    PreconditionFailed,
    TargetNotARing,
    idempotent_kill_check,
    idempotents,
    image_subring,
    is_idempotent_lifting,
    is_unit_reflecting,
    validate_lnr_hom,
    verify_local_transfer,
)

import corpus


def mult_by_map(a):
    # the self-map x -> a*x of Z/3, as a zero-fixing map index
    return 3 * (a % 3) + (2 * a) % 3


class TestValidateLnrHom:
    def test_identity(self):
        f = validate_lnr_hom(range(6), corpus.z(6), corpus.z(6))
        assert f.kernel.members == frozenset({0})
        assert f.image.members == frozenset(range(6))
        assert f.nontrivial

    def test_reduction_mod_2(self):
        f = validate_lnr_hom([0, 1, 0, 1], corpus.z(4), corpus.z(2))
        assert f.kernel.members == frozenset({0, 2})

    def test_rejects_non_multiplicative(self):
        # evaluating a zero-fixing self-map at a point respects + but not composition
        src = corpus.m0("small:3,0")
        with pytest.raises(NotAHomomorphism) as exc:
            validate_lnr_hom([i // 3 for i in range(src.n)], src, corpus.z(3))
        assert exc.value.witness is not None

    def test_rejects_wrong_identity_image(self):
        with pytest.raises(NotAHomomorphism):
            validate_lnr_hom([0, 3, 0, 3], corpus.z(4), corpus.z(6))

    def test_rejects_non_additive(self):
        with pytest.raises(NotAHomomorphism):
            validate_lnr_hom([0, 1, 1, 0], corpus.z(4), corpus.z(2))

    def test_scalars_embed_in_zero_fixing_maps(self):
        tgt = corpus.m0("small:3,0")
        f = validate_lnr_hom([mult_by_map(a) for a in range(9)], corpus.z(9), tgt)
        assert f.kernel.members == frozenset({0, 3, 6})
        # image is the zero map, the identity and the negation
        assert f.image.members == frozenset({0, 5, 7})


class TestUnitReflection:
    def test_identity_reflects(self):
        f = validate_lnr_hom(range(6), corpus.z(6), corpus.z(6))
        assert is_unit_reflecting(f).ok
        assert f.unit_reflecting

    def test_prime_power_quotient_reflects(self):
        f = validate_lnr_hom([x % 2 for x in range(4)], corpus.z(4), corpus.z(2))
        assert is_unit_reflecting(f).ok

    def test_mixed_quotient_does_not_reflect(self):
        f = validate_lnr_hom([x % 3 for x in range(6)], corpus.z(6), corpus.z(3))
        v = is_unit_reflecting(f)
        assert not v.ok
        # 2 is the least non-unit of Z/6 sent to a unit; 4 also works
        assert v.witness == (2,)

    def test_whole_corpus_reflects(self):
        for name, f in corpus.unit_reflecting_hom_corpus():
            assert is_unit_reflecting(f).ok, name


class TestIdempotentLifting:
    def test_holds_on_corpus(self):
        for name, f in corpus.unit_reflecting_hom_corpus():
            assert is_idempotent_lifting(f).ok, name

    def test_holds_on_non_reflecting_hom(self):
        f = validate_lnr_hom([x % 3 for x in range(6)], corpus.z(6), corpus.z(3))
        assert is_idempotent_lifting(f).ok

    def test_trivial_idempotents_transfer(self):
        # for unit-reflecting lifting homs: only-trivial-idempotents
        # passes between source and image
        for name, f in corpus.unit_reflecting_hom_corpus():
            img = image_subring(f)
            src_trivial = len(idempotents(f.source)) <= 2
            img_trivial = len(idempotents(img.ring)) <= 2
            assert src_trivial == img_trivial, name


class TestImageSubring:
    def test_identity_image_is_whole(self):
        f = validate_lnr_hom(range(4), corpus.z(4), corpus.z(4))
        img = image_subring(f)
        assert img.carrier == (0, 1, 2, 3)
        assert img.ring.n == 4

    def test_diagonal_image(self):
        tgt = corpus.zz(4, 4)
        f = validate_lnr_hom([5 * x for x in range(4)], corpus.z(4), tgt)
        img = image_subring(f)
        assert img.carrier == (0, 5, 10, 15)
        assert img.ring.n == 4
        assert img.surjection.image.members == frozenset(range(4))

    def test_trivial_hom_gives_zero_ring(self):
        f = validate_lnr_hom([0, 0, 0, 0], corpus.z(4), corpus.z(1))
        assert not f.nontrivial
        img = image_subring(f)
        assert img.ring.n == 1

    def test_needs_ring_codomain(self):
        tgt = corpus.m0("small:3,0")
        f = validate_lnr_hom([mult_by_map(a) for a in range(9)], corpus.z(9), tgt)
        with pytest.raises(TargetNotARing):
            image_subring(f)


class TestLocalTransfer:
    def test_local_source_local_image(self):
        tgt = corpus.zz(4, 4)
        f = validate_lnr_hom([5 * x for x in range(4)], corpus.z(4), tgt)
        rep = verify_local_transfer(f)
        assert rep.source_local and rep.image_local and rep.agree
        assert rep.image_size == 4
        assert rep.unit_reflecting_into_target
        assert rep.unit_reflecting_onto_image

    def test_nonlocal_source_nonlocal_image(self):
        f = validate_lnr_hom(range(6), corpus.z(6), corpus.z(6))
        rep = verify_local_transfer(f)
        assert not rep.source_local and not rep.image_local and rep.agree

    def test_units_listed_in_target_labels(self):
        tgt = corpus.zz(2, 2)
        f = validate_lnr_hom([3 * x for x in range(2)], corpus.z(2), tgt)
        rep = verify_local_transfer(f)
        assert rep.units_of_target == (3,)
        assert rep.units_of_image == (3,)

    def test_needs_ring_codomain(self):
        tgt = corpus.m0("small:3,0")
        f = validate_lnr_hom([mult_by_map(a) for a in range(9)], corpus.z(9), tgt)
        with pytest.raises(PreconditionFailed):
            verify_local_transfer(f)

    def test_needs_nontrivial(self):
        f = validate_lnr_hom([0, 0, 0, 0], corpus.z(4), corpus.z(1))
        with pytest.raises(PreconditionFailed):
            verify_local_transfer(f)

    def test_needs_unit_reflection(self):
        f = validate_lnr_hom([x % 3 for x in range(6)], corpus.z(6), corpus.z(3))
        with pytest.raises(PreconditionFailed):
            verify_local_transfer(f)

    def test_needs_zero_symmetric_source(self):
        # parity of the permutation part is a homomorphism M(Z/2) -> Z/2
        src = corpus.m_full(2)
        f = validate_lnr_hom([0, 1, 1, 0], src, corpus.z(2))
        with pytest.raises(PreconditionFailed):
            verify_local_transfer(f)

    def test_whole_corpus_transfers(self):
        for name, f in corpus.unit_reflecting_hom_corpus():
            rep = verify_local_transfer(f)
            assert rep.agree, name


class TestKillCheck:
    def test_passes_on_corpus(self):
        for name, f in corpus.unit_reflecting_hom_corpus():
            assert idempotent_kill_check(f), name

    def test_needs_unit_reflection(self):
        f = validate_lnr_hom([x % 3 for x in range(6)], corpus.z(6), corpus.z(3))
        with pytest.raises(PreconditionFailed):
            idempotent_kill_check(f)

    def test_needs_zero_symmetric_source(self):
        src = corpus.m_full(2)
        f = validate_lnr_hom([0, 1, 1, 0], src, corpus.z(2))
        with pytest.raises(PreconditionFailed):
            idempotent_kill_check(f)
