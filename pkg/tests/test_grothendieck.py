import pickle
import random

import pytest
from hypothesis import given, settings, strategies as st

from chargl.charsets import C1, C2, enumerate_set
from chargl.grothendieck import (
    StabilizationFailure,
    VirtualRep,
    Window,
    fourier,
    fourier_key,
    limit_mult,
    mult_in_E,
    mult_pkr_E,
    pkr,
    space_windows,
    tensor_pkr,
    window_keys,
)
from chargl.oracle import equal_by_eval
from chargl.spaces import General, Skew, Symmetric
from chargl.weights import Parity, dominant_weights


def test_window_basics():
    w = Window(-2, 3)
    assert w.contains((3, 0, -2)) and not w.contains((4, 0)) and not w.contains((0, -3))
    assert w.intersect(Window(0, 9)) == Window(0, 3)
    assert w.shift(1, -1) == Window(-1, 2)
    assert w.bounded and not Window().bounded
    assert Window().to_list() == [None, None]
    with pytest.raises(ValueError):
        Window(1, 0)


def test_virtualrep_validation():
    with pytest.raises(ValueError):
        VirtualRep({(0, 1): 1}, Window(), (2,))
    with pytest.raises(ValueError):
        VirtualRep({(5, 0): 1}, Window(-1, 1), (2,))
    with pytest.raises(ValueError):
        VirtualRep({}, Window())
    with pytest.raises(ValueError):
        VirtualRep({(1,): 1, (1, 0): 1}, Window())
    M = VirtualRep({(1, 0): 2, (0, 0): 0}, Window())
    assert len(M) == 1 and M[(1, 0)] == 2 and M.get((7, 7)) == 0
    assert VirtualRep.truncate({(5, 0): 1, (1, 0): 1}, Window(0, 2), (2,)).entries == {(1, 0): 1}


def test_virtualrep_arithmetic():
    w = Window(-4, 8)
    a = enumerate_set(C1(2, Symmetric(2)), w)
    b = enumerate_set(C2(0, Symmetric(2)), w)
    zero = VirtualRep.zero((2,), w)
    assert a + zero == a
    assert len(a + (-1) * a) == 0
    union = a + b
    assert union.is_multiplicity_free()
    assert set(union.entries) == set(a.entries) | set(b.entries)
    assert union - b == a
    assert (2 * a).get(next(iter(a.entries))) == 2
    # sums are exact only where both summands are
    assert (a + VirtualRep.zero((2,), Window(-4, 7))).windows == (Window(-4, 7),)
    with pytest.raises(ValueError):
        a + VirtualRep.zero((3,), w)


def test_items_sorted_descending():
    M = VirtualRep({(0, 0): 1, (2, -1): 3, (2, 1): -1}, Window())
    assert [k for k, _ in M.items()] == [(2, 1), (2, -1), (0, 0)]


def test_tensor_pkr_examples():
    M = VirtualRep({(0, 0): 1}, Window())
    assert tensor_pkr(M, 0, 5) == M
    assert tensor_pkr(M, 1, 2).entries == {(2, 0): 1, (1, 1): -1}
    N = VirtualRep({(3, 1, 0): 2, (0, 0, -1): -1}, Window(-3, 3))
    shifted = tensor_pkr(N, 3, 2)
    assert shifted.entries == {(5, 3, 2): 2, (2, 2, 1): -1}
    assert shifted.windows == (Window(-1, 5),)
    assert pkr(2, 1, 2).entries == {(2, 0): 1, (1, 1): -1}


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=3),
            st.integers(0, n),
            st.integers(-3, 4),
            st.integers(0, 10**6),
        )
    )
)
def test_tensor_pkr_window_is_exact(args):
    # truncating before tensoring loses nothing inside the reported window
    n, raw, k, r, seed = args
    entries = {tuple(sorted(x, reverse=True)): 1 for x in raw}
    full = VirtualRep(entries, Window(), (n,))
    w = Window(-3, 3)
    small = VirtualRep.truncate(entries, w, (n,))
    out = tensor_pkr(small, k, r)
    expect = tensor_pkr(full, k, r).restrict(out.windows)
    assert out == expect
    if len(out):
        assert equal_by_eval(tensor_pkr(tensor_pkr(full, k, r), 0, 0), tensor_pkr(full, k, r), 2, seed)


def test_tensor_pkr_general_factor():
    M = VirtualRep({((1, 0), (0,)): 1}, (Window(), Window()), (2, 1))
    out = tensor_pkr(M, 1, 1, factor=1)
    assert out.entries == {((1, 0), (1,)): 1}
    out = tensor_pkr(M, 1, 1, factor=0)
    assert out.entries == {((2, 0), (0,)): 1, ((1, 1), (0,)): 1}


def test_mult_in_E_examples():
    assert mult_in_E((4, 4, 4), Symmetric(3)) == 1
    assert mult_in_E((4, 4, 3), Symmetric(3)) == 0
    assert mult_in_E((3, 3, 3, 3), Skew(4)) == 1
    assert mult_in_E((4, 4, 3, 3), Skew(4)) == 1
    assert mult_in_E((4, 3, 3, 3), Skew(4)) == 0
    assert mult_in_E(((2, 2), (2, 2)), General(2, 2)) == 1
    assert mult_in_E(((3, 2, 2), (4, 3)), General(3, 2)) == 1
    assert mult_in_E(((3, 3, 2), (4, 4)), General(3, 2)) == 1
    assert mult_in_E(((3, 2, 2), (4, 4)), General(3, 2)) == 0
    assert mult_in_E(((3, 3, 3), (4, 4)), General(3, 2)) == 0
    with pytest.raises(ValueError):
        mult_in_E((1, 2), Symmetric(2))


def test_mult_pkr_E_examples():
    sp = Symmetric(1)
    assert mult_pkr_E((-2,), 1, 4, sp) == 1
    assert mult_pkr_E((-3,), 1, 4, sp) == 0
    for lam in dominant_weights(2, -4, 6):
        assert mult_pkr_E(lam, 0, 3, Symmetric(2)) == mult_in_E(lam, Symmetric(2))


def test_limit_mult_examples():
    sp = Symmetric(1)
    for c in range(-12, 13):
        assert limit_mult((c,), 1, sp, Parity.EVEN) == (1 if c % 2 == 0 else 0)
    for n in (2, 4, 6):
        assert limit_mult(((n - 1),) * n, n // 2, Skew(n)) == 1
    for lam in dominant_weights(3, -3, 6):
        assert limit_mult(lam, 0, Symmetric(3), Parity.ODD) == mult_in_E(lam, Symmetric(3))
    with pytest.raises(ValueError):
        limit_mult((0,), 1, sp)
    with pytest.raises(ValueError):
        limit_mult(((0,), (0,)), 1, General(1, 1), Parity.EVEN)


def test_limit_mult_negative_weight_stabilizes():
    # far below E, the shift by r has to be large before membership settles
    assert limit_mult((-10,), 1, Symmetric(1), Parity.EVEN) == 1
    assert limit_mult((-10,), 1, Symmetric(1), Parity.ODD) == 0


def test_stabilization_failure_pickles():
    exc = StabilizationFailure((1, 0), 1, "boom")
    back = pickle.loads(pickle.dumps(exc))
    assert back.key == (1, 0) and back.k == 1 and str(back) == "boom"


def test_fourier_examples():
    sp = Symmetric(3)
    M = VirtualRep({(0, 0, 0): 1}, Window(-2, 2))
    FM = fourier(M, sp)
    assert FM.entries == {(4, 4, 4): 1}
    assert FM.windows == (Window(2, 6),)
    assert fourier_key((5, 1, 0), Skew(3)) == (2, 1, -3)
    assert fourier_key(((1, 0, 0), (2, 1)), General(3, 2)) == ((2, 2, 1), (2, 1))
    with pytest.raises(ValueError):
        fourier(M, Symmetric(2))


def test_fourier_involution_random():
    rng = random.Random(3)
    for _ in range(100):
        sp = rng.choice([Symmetric(2), Skew(3), Symmetric(4)])
        entries = {tuple(sorted((rng.randint(-5, 5) for _ in range(sp.n)), reverse=True)): rng.randint(1, 4)}
        M = VirtualRep(entries, Window(-5, 5))
        assert fourier(fourier(M, sp), sp) == M


def test_window_keys():
    keys = window_keys(General(2, 1), Window(0, 1))
    assert len(keys) == 3 * 2
    assert keys == sorted(keys, reverse=True)
    assert space_windows(General(2, 1), Window(0, 1)) == (Window(0, 1), Window(0, 1))
    with pytest.raises(ValueError):
        space_windows(Symmetric(2), Window())
