import pytest

from chargl.charsets import C1, C2, CharSetId, enumerate_set
from chargl.euler import (
    bott_chi,
    chi_forms,
    pkr_direct,
    pkr_from_forms,
    pushforward_euler,
    pushforward_sign,
    variant_parity,
)
from chargl.grothendieck import Window
from chargl.spaces import General, Skew, Symmetric
from chargl.weights import Parity, Term, conjugate, partitions_in_box, straighten, subset_from_partition


def test_bott_chi_examples():
    assert bott_chi((3, 1), (0, 0), 4) == Term(1, (3, 1, 0, 0))
    assert bott_chi((0,), (1,), 2) is None
    with pytest.raises(ValueError):
        bott_chi((0, 1), (0,), 3)
    with pytest.raises(ValueError):
        bott_chi((1,), (0,), 3)


def test_bott_chi_form_terms():
    # each form term is (-1)^{|mu|} S_{(r^I)} with I the subset of mu
    n, k, r = 4, 2, 3
    for mu in partitions_in_box(k, n - k):
        alpha = (r - mu[1], r - mu[0])
        term = bott_chi(alpha, conjugate(mu, n - k), n)
        I = subset_from_partition(mu, k, n)
        want = straighten(tuple(r if i + 1 in I else 0 for i in range(n)))
        if want is None:
            assert term is None
        else:
            assert term == Term((-1) ** sum(mu) * want.sign, want.weight)


def test_chi_forms_examples():
    assert chi_forms(1, 2, 2, 1).entries == {(1, 1): 1}
    assert len(chi_forms(1, 2, 1, 1)) == 0
    for r in range(4):
        assert chi_forms(2, 4, r, 0).entries == {(r, r, 0, 0): 1}
    with pytest.raises(ValueError):
        chi_forms(1, 2, 1, 2)


def test_pkr_from_forms_examples():
    assert pkr_from_forms(1, 2, 2).entries == {(2, 0): 1, (1, 1): -1}
    assert pkr_from_forms(3, 3, 4).entries == {(4, 4, 4): 1}
    assert pkr_from_forms(2, 4, 3) == pkr_direct(2, 4, 3)


def test_signs_and_variants():
    assert pushforward_sign(Symmetric(3), 1) == 1
    assert pushforward_sign(Symmetric(3), 2) == 1
    assert pushforward_sign(Symmetric(4), 1) == -1
    assert pushforward_sign(General(3, 2), 1) == -1
    assert pushforward_sign(General(3, 3), 1) == 1
    assert pushforward_sign(Skew(5), 1) == 1
    assert variant_parity(Symmetric(2), 1, "M0") is Parity.EVEN
    assert variant_parity(Symmetric(2), 1, "M1") is Parity.ODD
    assert variant_parity(General(2, 2), 1, "plain") is None
    for bad in [(Symmetric(2), "plain"), (Skew(4), "M0"), (Skew(4), "other")]:
        with pytest.raises(ValueError):
            variant_parity(bad[0], 1, bad[1])


def test_pushforward_examples():
    w = Window(-8, 8)
    sp = Symmetric(1)
    got = pushforward_euler(sp, 1, "M0", w)
    assert got == enumerate_set(C2(0, sp), w) + enumerate_set(C1(1, sp), w)
    for space in (Symmetric(2), General(2, 1), Skew(4)):
        variant = "M0" if space.kind == "symmetric" else "plain"
        got = pushforward_euler(space, 0, variant, Window(-4, 8))
        assert got == enumerate_set(CharSetId("E", space), Window(-4, 8))
    sk = Skew(4)
    got = pushforward_euler(sk, 2, "plain", w)
    assert got == enumerate_set(CharSetId("SPf", sk), w)
    with pytest.raises(ValueError):
        pushforward_euler(sk, 3, "plain", w)
