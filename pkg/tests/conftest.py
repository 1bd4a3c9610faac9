from itertools import combinations

from hypothesis import settings, strategies as st

from hypercolor.hypercore import Hypergraph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, k=None, max_vertices=7, min_edges=0, max_edges=10):
    k = draw(st.integers(2, 3)) if k is None else k
    n = draw(st.integers(max(k, 1), max_vertices))
    verts = [f"x{i}" for i in range(n)]
    pool = list(combinations(verts, k))
    edges = draw(st.lists(st.sampled_from(pool), min_size=min_edges, max_size=max_edges, unique=True))
    return Hypergraph.from_edges(k, verts, edges)


def _partitions(n):
    """Restricted growth strings: each set partition of range(n) exactly once."""
    if n == 0:
        yield ()
        return
    for rest in _partitions(n - 1):
        for c in range(max(rest, default=-1) + 2):
            yield rest + (c,)


def brute_chromatic(h, kind):
    """Fewest blocks over all vertex partitions giving a valid coloring."""
    verts = list(h.vertices)
    best = None
    for colors in _partitions(len(verts)):
        used = max(colors, default=0) + 1
        if best is not None and used >= best:
            continue
        col = dict(zip(verts, colors))
        if kind == "strong":
            ok = all(len({col[v] for v in e}) == h.k for e in h.edges)
        else:
            ok = all(len({col[v] for v in e}) > 1 for e in h.edges)
        if ok:
            best = used
    return best


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
