import pytest

from chargl.parallel import default_jobs, ordered_map
from chargl.spaces import GENERAL, General, MatrixSpace, Skew, Symmetric


def square(x):
    return x * x


def test_default_jobs(monkeypatch):
    monkeypatch.delenv("CHARGL_JOBS", raising=False)
    assert default_jobs() == 1
    monkeypatch.setenv("CHARGL_JOBS", "3")
    assert default_jobs() == 3
    for bad in ("0", "-2", "x"):
        monkeypatch.setenv("CHARGL_JOBS", bad)
        with pytest.raises(ValueError):
            default_jobs()


def test_ordered_map_keeps_order():
    items = list(range(200))
    assert ordered_map(square, items, 1) == [x * x for x in items]
    assert ordered_map(square, items, 3) == [x * x for x in items]
    assert ordered_map(square, [], 4) == []


def test_spaces():
    g = General(3, 2)
    assert (g.m, g.n, g.arity, g.lengths, g.fourier_twist) == (3, 2, 2, (3, 2), (2, 3))
    assert g.label() == "General(3,2)"
    assert Symmetric(4).fourier_twist == (5,) and Skew(5).fourier_twist == (4,)
    assert Skew(5).half == 2 and Skew(5).label() == "Skew(5)"
    with pytest.raises(ValueError):
        General(2, 3)
    with pytest.raises(ValueError):
        MatrixSpace("hermitian", 2)
    with pytest.raises(ValueError):
        Symmetric(0)
    with pytest.raises(ValueError):
        MatrixSpace(GENERAL, 2, 0)
