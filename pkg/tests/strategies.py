from hypothesis import strategies as st

from gnk.qpoly import QPoly

coeff_lists = st.lists(st.integers(-50, 50), max_size=12)
polys = coeff_lists.map(QPoly)
nonzero_polys = polys.filter(bool)


@st.composite
def sym_uni(draw, max_m=12):
    """Nonnegative symmetric unimodal polynomial of darga m, built from atoms."""
    m = draw(st.integers(0, max_m))
    out = [0] * (m + 1)
    for r in range(m // 2 + 1):
        c = draw(st.integers(0, 4))
        for e in range(r, m - r + 1):
            out[e] += c
    return QPoly(out), m


@st.composite
def positive_log_concave(draw, max_len=8):
    """Strictly positive log-concave sequence (a product of linear factors 1 + t q)."""
    p = QPoly.one() * draw(st.integers(1, 5))
    for t in draw(st.lists(st.integers(1, 5), max_size=max_len)):
        p = p * QPoly((1, t))
    return p
