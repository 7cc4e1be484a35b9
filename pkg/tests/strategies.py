from hypothesis import strategies as st

from qmat2.algebra import AlgebraElement, PBWMonomial
from qmat2.coeffring import QCoeff

small_ints = st.integers(min_value=-5, max_value=5)

qcoeffs = st.dictionaries(st.integers(min_value=-6, max_value=6), small_ints, max_size=4).map(QCoeff)

monomials = st.tuples(*(st.integers(min_value=0, max_value=2) for _ in range(4))).map(lambda t: PBWMonomial(*t))


def elements(max_degree=2, max_terms=3):
    mono = st.tuples(*(st.integers(min_value=0, max_value=max_degree) for _ in range(4))).filter(
        lambda t: sum(t) <= max_degree
    )
    coeff = st.dictionaries(st.integers(min_value=-3, max_value=3), small_ints, min_size=1, max_size=2).map(QCoeff)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(AlgebraElement)
