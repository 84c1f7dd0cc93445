import pytest
from hypothesis import given, strategies as st

from chargl import charsets
from chargl.charsets import (
    C1,
    C2,
    CharSetId,
    companion_A,
    enumerate_set,
    in_A,
    in_B,
    in_C1,
    in_C2,
    in_Z,
    member,
    partition_violations,
    torus_DI,
    torus_enumerate,
)
from chargl.grothendieck import Window, mult_in_E
from chargl.spaces import General, Skew, Symmetric
from chargl.weights import Parity, dominant_weights

dominant = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.integers(-8, 8), min_size=n, max_size=n).map(lambda x: tuple(sorted(x, reverse=True)))
)


def test_charset_validation():
    with pytest.raises(ValueError):
        CharSetId("C1", Skew(4), 1)
    with pytest.raises(ValueError):
        CharSetId("A", Symmetric(2), 1)
    with pytest.raises(ValueError):
        CharSetId("B", Skew(4), 3)
    with pytest.raises(ValueError):
        CharSetId("Z", Symmetric(2))
    with pytest.raises(ValueError):
        CharSetId("Chj", Symmetric(2), 1, 0, 1)
    with pytest.raises(ValueError):
        CharSetId("SPf", Skew(3))
    with pytest.raises(ValueError):
        CharSetId("Sdet", General(3, 2))
    assert CharSetId("Chj", Symmetric(2), 1, Parity.ODD, Parity.EVEN).label() == "C^{1,0}(1)"


def test_no_sl_invariant_weights_in_C2():
    for n in range(2, 6):
        for s in range(1, n):
            for c in range(-12, 13):
                assert not member(C2(s, Symmetric(n)), (c,) * n)


def test_A_level_is_exclusive():
    for n in range(1, 5):
        sp = General(n, n)
        for s in range(n + 1):
            for t in range(n + 1):
                assert member(CharSetId("A", sp, t), (s,) * n) == (s == t)


def test_B_bottom_weight():
    for m in range(1, 4):
        assert member(CharSetId("B", Skew(2 * m), m), (2 * m - 1,) * (2 * m))


def test_companion_examples():
    assert companion_A((4, 2, 1), 2, 3, 3) == (4, 2, 1)
    assert companion_A((3,), 1, 3, 1) == (1, 1, 1)
    assert companion_A((0,), 0, 2, 1) == (0, 0)
    with pytest.raises(ValueError):
        companion_A((0,), 1, 2, 1)


@given(dominant, st.integers(1, 3))
def test_companion_is_dominant(lam, extra):
    n = len(lam)
    m = n + extra
    for s in range(n + 1):
        if in_A(lam, s, m):
            mu = companion_A(lam, s, m, n)
            assert len(mu) == m and list(mu) == sorted(mu, reverse=True)


def test_E_enumeration_symmetric_two():
    sp = Symmetric(2)
    got = enumerate_set(CharSetId("E", sp), Window(0, 6))
    assert set(got.entries) == {(3, 3), (5, 3), (5, 5)}
    assert got == enumerate_set(C1(2, sp), Window(0, 6))


def test_E_enumeration_matches_mult_in_E():
    for sp in (Symmetric(3), Skew(4), Skew(3)):
        got = enumerate_set(CharSetId("E", sp), Window(-2, 8))
        for lam in dominant_weights(sp.n, -2, 8):
            assert got.get(lam) == mult_in_E(lam, sp)
    sp = General(3, 2)
    got = enumerate_set(CharSetId("E", sp), Window(-1, 6))
    for a in dominant_weights(3, -1, 6):
        for b in dominant_weights(2, -1, 6):
            assert got.get((a, b)) == mult_in_E((a, b), sp)


def test_cli_style_examples():
    c11 = enumerate_set(C1(1, Symmetric(2)), Window(-4, 6))
    assert c11.entries and all(lam[0] >= 2 and lam[0] % 2 == 0 and lam[1] % 2 == 0 for lam in c11.entries)
    b2 = enumerate_set(CharSetId("B", Skew(4), 2), Window(0, 4))
    assert set(b2.entries) == {(a, a, b, b) for a in (3, 4) for b in (3, 4) if a >= b}
    a0 = enumerate_set(CharSetId("A", General(2, 2), 0), Window(-2, 2))
    assert ((0, 0), (0, 0)) in a0.entries and ((-1, -1), (-1, -1)) in a0.entries
    assert all(first == second and second[0] <= 0 for first, second in a0.entries)


def test_C1_is_union_of_two_strata():
    for n in range(1, 5):
        for lam in dominant_weights(n, -6, 6):
            for s in range(n + 1):
                h = Parity.of(s + 1)
                strata = charsets.in_Chj(lam, h, h, s) or (s < n and charsets.in_Chj(lam, h, h, s + 1))
                assert in_C1(lam, s) == strata


def test_C2_inside_Z():
    for n in range(1, 5):
        for lam in dominant_weights(n, -6, 6):
            for s in range(n + 1):
                if in_C2(lam, s):
                    assert in_Z(lam, s)


def test_partition_laws_small():
    for n in range(1, 5):
        weights = list(dominant_weights(n, -6, 6))
        sp = Symmetric(n)
        assert not partition_violations(charsets.family("Z", sp), weights)
        assert not partition_violations(charsets.family("Y", sp), weights)
        assert not partition_violations(charsets.family("A", General(n, n)), weights)
    weights = list(dominant_weights(4, -6, 6))
    assert not partition_violations(charsets.family("B", Skew(4)), weights, ambient=charsets.in_paired)


def test_A_misses_weights_when_m_exceeds_n():
    fam = charsets.family("A", General(3, 2))
    assert not any(member(c, (6, 2)) for c in fam)
    assert not partition_violations(fam, list(dominant_weights(2, -6, 6)), cover=False)


def test_B_odd_n_is_disjoint():
    for n in (3, 5):
        assert not partition_violations(charsets.family("B", Skew(n)), list(dominant_weights(n, -5, 5)), cover=False)
    assert in_B((3, 3, 2), 1) and not in_B((3, 2, 2), 1) and not in_B((3, 3, 1), 1)


def test_member_checks_input():
    with pytest.raises(ValueError):
        member(C1(0, Symmetric(2)), (0, 1))
    with pytest.raises(ValueError):
        member(C1(0, Symmetric(2)), (0,))


def test_torus():
    assert torus_DI((1,), (3, -1))
    assert not torus_DI((1,), (3, 0))
    assert list(torus_enumerate((2,), 2, 1)) == [(-1, 0), (-1, 1)]
    assert sum(1 for _ in torus_enumerate((), 3, 0)) == 0
