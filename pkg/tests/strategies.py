"""Shared hypothesis strategies for small relations and structures."""

from hypothesis import strategies as st

from relmon.rel import Carrier, FinRel


@st.composite
def finrels(draw, max_size=4, dom_size=None, cod_size=None):
    na = dom_size if dom_size is not None else draw(st.integers(0, max_size))
    nb = cod_size if cod_size is not None else draw(st.integers(0, max_size))
    rows = tuple(
        draw(st.integers(0, (1 << nb) - 1)) for _ in range(na)
    )
    return FinRel(Carrier(na), Carrier(nb), rows)


@st.composite
def endo_rels(draw, max_size=4):
    n = draw(st.integers(0, max_size))
    return draw(finrels(dom_size=n, cod_size=n))


@st.composite
def mappings(draw, max_size=4):
    na = draw(st.integers(0, max_size))
    nb = draw(st.integers(1, max_size))
    rows = tuple(1 << draw(st.integers(0, nb - 1)) for _ in range(na))
    return FinRel(Carrier(na), Carrier(nb), rows)


@st.composite
def composable_pairs(draw, max_size=4):
    f = draw(finrels(max_size=max_size))
    g = draw(finrels(max_size=max_size, dom_size=f.cod.size))
    return f, g


@st.composite
def composable_triples(draw, max_size=4):
    f, g = draw(composable_pairs(max_size=max_size))
    h = draw(finrels(max_size=max_size, dom_size=g.cod.size))
    return f, g, h
