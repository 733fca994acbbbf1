import pytest
from hypothesis import strategies as st

from motivic_power.rings import INTEGERS, Polynomial, RingDescriptor

LAURENT_L = RingDescriptor(("L",), laurent=True)
UV = RingDescriptor(("u", "v"))

ALL_RINGS = [INTEGERS, LAURENT_L, UV]


def exponent_vectors(ring, max_degree=2):
    lo = -max_degree if ring.laurent else 0
    pool = [()]
    for _ in range(ring.nvars):
        pool = [e + (x,) for e in pool for x in range(lo, max_degree + 1)]
    return [e for e in pool if sum(abs(x) for x in e) <= max_degree]


def polynomials(ring, max_degree=2, coeff_bound=4):
    """Hypothesis strategy for sparse polynomials over ``ring``."""
    vectors = exponent_vectors(ring, max_degree)
    coeff = st.integers(min_value=-coeff_bound, max_value=coeff_bound)
    return st.dictionaries(st.sampled_from(vectors), coeff, max_size=4).map(
        lambda terms: Polynomial(ring, terms)
    )


@pytest.fixture(params=ALL_RINGS, ids=["Z", "Z[L~]", "Z[u,v]"])
def ring(request):
    return request.param
