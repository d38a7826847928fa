import pytest

from stickbound.arcpres import ArcPresentation, random_presentation


@pytest.fixture
def ap3():
    """Triangle unknot, the smallest valid presentation."""
    return ArcPresentation([(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def ap5():
    """5-chord trefoil; determinant 3, reaches exactly 6 sticks."""
    return ArcPresentation([(1, 4), (3, 5), (2, 4), (1, 3), (2, 5)])


@pytest.fixture
def ap6_fig8():
    """6-chord figure-eight; determinant 5, alexander t^2 - 3t + 1."""
    return ArcPresentation([(1, 3), (2, 5), (4, 6), (3, 5), (1, 4), (2, 6)])


@pytest.fixture
def unknot4():
    """4-chord unknot whose top two chords merge under destabilization."""
    return ArcPresentation([(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def concurrence9():
    """Presentation whose first chord layout has a triple point (retries once)."""
    return ArcPresentation(
        [(1, 6), (1, 2), (2, 3), (3, 7), (7, 8), (8, 9), (4, 9), (4, 5), (5, 6)]
    )


def make_instances(count, n_lo, n_hi, master_seed):
    """Deterministic list of (seed, presentation) pairs, n cycling the range."""
    out = []
    for i in range(count):
        n = n_lo + i % (n_hi - n_lo + 1)
        seed = master_seed * 1_000_003 + i
        out.append((seed, random_presentation(n, seed)))
    return out


@pytest.fixture(scope="session")
def instances100():
    return make_instances(100, 4, 10, 7)
