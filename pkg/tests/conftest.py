import random

from hypothesis import strategies as st

from hochster.complex import SimplicialComplex
from hochster.conjecture import random_proper_coloring


@st.composite
def complexes(draw, max_vertices=6, max_facet=4, allow_void=False):
    n = draw(st.integers(1, max_vertices))
    facet = st.lists(st.integers(1, n), min_size=0 if allow_void else 1, max_size=max_facet, unique=True)
    facets = draw(st.lists(facet, min_size=0 if allow_void else 1, max_size=6))
    return SimplicialComplex.from_faces(n, [tuple(sorted(f)) for f in facets])


@st.composite
def colored_complexes(draw, max_vertices=6, max_facet=4):
    K = draw(complexes(max_vertices, max_facet))
    seed = draw(st.integers(0, 2**32))
    return K, random_proper_coloring(random.Random(seed), K)


# one line per acceptance criterion, repeated at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
