import pytest

from skewpbw import corpus


@pytest.fixture(scope="session")
def swap_entry():
    return corpus.swap_extension()


@pytest.fixture(scope="session")
def weyl2():
    return corpus.weyl_like(2)


@pytest.fixture(scope="session")
def euler2():
    return corpus.euler_like(2)


@pytest.fixture(scope="session")
def euler3():
    return corpus.euler_like(3)


@pytest.fixture(scope="session")
def clifford2():
    return corpus.clifford_trunc(2)


@pytest.fixture(scope="session")
def quasi_z3():
    return corpus.quasi_comm(3, 2, 2)


@pytest.fixture(scope="session")
def poly_z4():
    return corpus.commutative_poly(4, 2)


@pytest.fixture(scope="session")
def matrix_poly2():
    return corpus.matrix_poly(2)


@pytest.fixture(scope="session")
def heisenberg2():
    return corpus.heisenberg(2)


@pytest.fixture(scope="session")
def q8_twisted():
    return corpus.q8_twist()


@pytest.fixture(scope="session")
def ring_entries():
    return corpus.standard_rings()


@pytest.fixture(scope="session")
def corpus_entries(
    swap_entry, weyl2, euler2, euler3, clifford2, heisenberg2, quasi_z3, poly_z4,
    matrix_poly2, q8_twisted,
):
    return [
        swap_entry, weyl2, euler2, euler3, clifford2, heisenberg2, quasi_z3,
        poly_z4, matrix_poly2, q8_twisted,
    ]
