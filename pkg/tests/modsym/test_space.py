import math

import pytest

from src.errors import ResourceLimit
from src.modsym.space import ManinSymbolSpace, continued_fraction_symbols, lift_to_sl2z, merel


@pytest.mark.parametrize(("N", "dimension"), [(11, 3), (14, 5), (37, 5)])
def test_dimension(N, dimension):
    assert ManinSymbolSpace(N).dimension == dimension


def test_index_bound():
    with pytest.raises(ResourceLimit):
        ManinSymbolSpace(11, index_bound=5)


def test_merel_matrices_have_determinant_n():
    for n in (2, 3, 5, 7):
        matrices = list(merel(n))
        assert matrices
        assert all(a * d - b * c == n for a, b, c, d in matrices)


def test_lift_to_sl2z():
    for c, d in [(3, 4), (0, 1), (5, 0), (2, 9)]:
        a, b, cc, dd = lift_to_sl2z(c, d, 11)
        assert a * dd - b * cc == 1
        assert (cc - c) % 11 == 0
        assert (dd - d) % 11 == 0


def test_continued_fraction_symbols():
    symbols = continued_fraction_symbols(3, 7)
    assert symbols == [(-1, 0), (2, 1), (-7, 2)]
    assert all(math.gcd(c, d) == 1 for c, d in symbols)


def test_continued_fraction_needs_positive_denominator():
    with pytest.raises(ValueError):
        continued_fraction_symbols(1, 0)


def test_eisenstein_eigenvalue_of_t2_at_level_11():
    space = ManinSymbolSpace(11)
    matrix = space.hecke_matrix(2).to_list()
    trace = sum(matrix[i][i] for i in range(space.dimension))
    # two cuspidal copies with a_2 = -2 and the boundary symbol with 1 + 2
    assert trace == -2 - 2 + 3
