import random

from hypothesis import given
from hypothesis import strategies as st

from yamada_skein.multigraph import (
    D_CIRCLE,
    D_VERTEX,
    AbstractMultigraph,
    PlanarEvaluator,
    canonical_form,
    dmul,
    simplify,
    subset_expansion,
)


@st.composite
def multigraphs(draw, max_n=5, max_m=7):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = tuple((draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)), 0) for _ in range(m))
    circles = tuple(0 for _ in range(draw(st.integers(0, 1))))
    return AbstractMultigraph(n, edges, circles)


@given(multigraphs())
def test_evaluator_matches_subset_expansion(mg):
    assert PlanarEvaluator().evaluate(mg) == subset_expansion(mg)


@given(multigraphs(), st.integers(0, 2 ** 32))
def test_pivot_independence(mg, seed):
    rng = random.Random(seed)
    ev = PlanarEvaluator(memo=False, pivot=lambda edges: rng.randrange(len(edges)))
    assert ev.evaluate(mg) == PlanarEvaluator().evaluate(mg)


@given(multigraphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(mg, rnd):
    perm = list(range(mg.n_vertices))
    rnd.shuffle(perm)
    edges = [(u, v) for u, v, _ in mg.edges]
    moved = [(perm[v], perm[u]) for u, v in edges]
    rnd.shuffle(moved)
    assert canonical_form(mg.n_vertices, edges) == canonical_form(mg.n_vertices, moved)


@given(multigraphs())
def test_simplify_preserves_value(mg):
    edges = [(u, v) for u, v, _ in mg.edges]
    bare = AbstractMultigraph(mg.n_vertices, mg.edges)
    out = simplify(mg.n_vertices, edges)
    full = subset_expansion(bare)
    if out is None:
        assert full == {}
        return
    factor, n, rest = out
    assert dmul(factor, subset_expansion(AbstractMultigraph(n, tuple((u, v, 0) for u, v in rest)))) == full


def test_small_values():
    ev = PlanarEvaluator()
    assert ev.evaluate(AbstractMultigraph(1)) == D_VERTEX
    assert ev.evaluate(AbstractMultigraph(0, (), (0,))) == D_CIRCLE
    # one vertex with a loop: d - d^-1 times d
    assert ev.evaluate(AbstractMultigraph(1, ((0, 0, 0),))) == D_CIRCLE
    # a bridge kills the value
    assert ev.evaluate(AbstractMultigraph(2, ((0, 1, 0),))) == {}


def test_theta_value():
    theta = AbstractMultigraph(2, ((0, 1, 0),) * 3)
    # d^3 - 3d + 2d^-1
    assert PlanarEvaluator().evaluate(theta) == {3: 1, 1: -3, -1: 2}
