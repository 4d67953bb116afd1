from fractions import Fraction

from hypothesis import strategies as st

small_ints = st.integers(-9, 9)
fractions = st.builds(Fraction, small_ints, st.integers(1, 5))
nonzero_fractions = fractions.filter(lambda x: x != 0)


def vectors(n, elements=small_ints):
    return st.lists(elements, min_size=n, max_size=n).filter(any)


@st.composite
def point_pairs(draw):
    """Two distinct projective points with small integer coordinates."""
    from linegeom.linalg import rank

    P = draw(vectors(4))
    Q = draw(vectors(4))
    if rank([P, Q]) < 2:
        Q = [P[0] + 1] + P[1:] if P[0] == 0 else [0] + P[1:]
        if rank([P, Q]) < 2:
            Q = [1, 0, 0, 0] if P[1:] != [0, 0, 0] else [0, 1, 0, 0]
    return P, Q
