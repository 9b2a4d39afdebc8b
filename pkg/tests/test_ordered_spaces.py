import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eadual.ordered_spaces import (
    ArchKind, InvalidSpace, PolyhedralBNS, PolyhedralOUS, PredicateOUS2, Variant, base_of,
    classify_archimedean, has_no_nonzero_infinitesimals, is_almost_archimedean, is_archimedean,
    norm, norm_value, order_leq, orthant_ous, simplex_bns, unit_ball_of, unit_interval,
)
from eadual.polyhedra import (
    ZERO_ON_RAY, DimensionMismatch, QCone, contains, vscale,
)
from oracles import grid_norm, halfplane_positive, lex_positive, quadrant_positive

LEX = PredicateOUS2(Variant.LexPlane)
HALF = PredicateOUS2(Variant.OpenHalfPlane)
QUAD = PredicateOUS2(Variant.OpenQuadrant)
ORACLES = {LEX: lex_positive, HALF: halfplane_positive, QUAD: quadrant_positive}

WEDGE = PolyhedralOUS(QCone.from_generators([(1, 0), (1, 2)]), (1, 1))
SQUARE_CONE = PolyhedralOUS(QCone.from_generators([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]), (1, 1, 2))
POLY_SPACES = [orthant_ous(1), orthant_ous(2), orthant_ous(3, (1, 2, 3)), WEDGE, SQUARE_CONE]


class TestSpaces:
    def test_not_pointed(self):
        with pytest.raises(InvalidSpace):
            PolyhedralOUS(QCone.from_halfspaces([(0, 1)]), (0, 1))

    def test_not_generating(self):
        with pytest.raises(InvalidSpace):
            PolyhedralOUS(QCone.from_generators([(1, 0)]), (1, 0))

    def test_unit_on_boundary(self):
        with pytest.raises(InvalidSpace):
            orthant_ous(2, (1, 0))

    def test_trace_vanishing(self):
        with pytest.raises(InvalidSpace):
            PolyhedralBNS(QCone.orthant(2), (1, 0))

    def test_predicate_planes_match_oracles(self):
        pts = [(F(a, 2), F(b, 2)) for a in range(-4, 5) for b in range(-4, 5)]
        for space, oracle in ORACLES.items():
            for p in pts:
                assert space.positive(p) == oracle(p)


class TestOrder:
    def test_orthant(self):
        assert order_leq(orthant_ous(2), (0, 0), (1, 1))
        assert not order_leq(orthant_ous(2), (1, 1), (0, 2))

    def test_lex_reverse_lexicographic(self):
        assert order_leq(LEX, (5, 0), (0, 1))

    def test_quadrant_axis_not_positive(self):
        assert not order_leq(QUAD, (0, 0), (1, 0))

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            order_leq(orthant_ous(2), (0,), (1, 1))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_lex_membership(self, n):
        assert LEX.positive((-n, 1))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_quadrant_membership(self, n):
        assert QUAD.positive((1 + F(1, n), F(1, n)))
        # the witness sits below every u/n
        assert order_leq(QUAD, (-1, 0), (F(1, n), F(1, n)))


class TestUnitInterval:
    def test_square(self):
        I = unit_interval(orthant_ous(2))
        assert I.polytope.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_third(self):
        assert unit_interval(orthant_ous(1)).orth((F(1, 3),)) == (F(2, 3),)

    def test_partial_sum(self):
        I = unit_interval(orthant_ous(2))
        assert I.sum((1, 0), (0, 1)) == (1, 1)
        assert I.sum((1, 0), (1, 0)) is None

    def test_outside(self):
        with pytest.raises(ValueError):
            unit_interval(orthant_ous(1)).orth((2,))


class TestBases:
    def test_simplex(self):
        assert base_of(simplex_bns(3)).vertices == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_ray(self):
        B = base_of(PolyhedralBNS(QCone.from_generators([(1, 1)]), (1, 0)))
        assert B.vertices == ((1, 1),)

    def test_zero_space(self):
        assert base_of(PolyhedralBNS.zero_space()).vertices == ()
        with pytest.raises(ValueError):
            unit_ball_of(PolyhedralBNS.zero_space())

    def test_unit_balls(self):
        assert unit_ball_of(simplex_bns(2)).vertices == ((-1, 0), (0, -1), (0, 1), (1, 0))
        ray = PolyhedralBNS(QCone.from_generators([(1, 1)]), (1, 0))
        assert unit_ball_of(ray).vertices == ((-1, -1), (1, 1))
        assert unit_ball_of(simplex_bns(1)).vertices == ((-1,), (1,))


class TestNorms:
    def test_half_plane_kernel(self):
        assert norm(HALF, (1, 0)) is ZERO_ON_RAY
        assert norm_value(norm(HALF, (1, 0))) == 0

    def test_lex(self):
        assert norm(LEX, (7, -3)) == 3
        assert norm(LEX, (1, 0)) is ZERO_ON_RAY

    def test_orthant(self):
        assert norm(orthant_ous(2), (1, -1)) == 1

    def test_base_norm(self):
        assert norm(simplex_bns(2), (1, -1)) == 2
        assert norm(simplex_bns(2), (F(1, 3), F(2, 3))) == 1

    def test_outside_span(self):
        ray = PolyhedralBNS(QCone.from_generators([(1, 1)]), (1, 0))
        with pytest.raises(ValueError):
            norm(ray, (1, 0))

    @pytest.mark.parametrize("space", [LEX, HALF, QUAD], ids=lambda s: s.variant.value)
    def test_closed_forms_against_grid(self, space):
        # the grid returns the least k/64 above the infimum
        rng = random.Random(11)
        for _ in range(60):
            x = (F(rng.randint(-320, 320), 64), F(rng.randint(-320, 320), 64))
            g = grid_norm(ORACLES[space], space.unit, x)
            v = norm_value(norm(space, x))
            assert g - F(1, 64) <= v <= g

    @settings(max_examples=80, deadline=None)
    @given(st.sampled_from(POLY_SPACES), st.data())
    def test_norm_order_compatibility(self, space, data):
        rat = st.fractions(-5, 5, max_denominator=8)
        x = data.draw(st.tuples(*[rat] * space.dim))
        n = norm(space, x)
        assert order_leq(space, vscale(-n, space.unit), x)
        assert order_leq(space, x, vscale(n, space.unit))
        if n > 0:
            m = n * F(99, 100)
            assert not (order_leq(space, vscale(-m, space.unit), x)
                        and order_leq(space, x, vscale(m, space.unit)))


class TestClassification:
    def test_lex(self):
        c = classify_archimedean(LEX)
        assert c.kind is ArchKind.HasInfinitesimals and c.witness == (1, 0)

    def test_half(self):
        c = classify_archimedean(HALF)
        assert c.kind is ArchKind.NoInfinitesimalsOnly and c.witness == (1, 0)

    def test_quadrant(self):
        c = classify_archimedean(QUAD)
        assert c.kind is ArchKind.AlmostArchimedeanOnly and c.witness == (-1, 0)

    @pytest.mark.parametrize("space", POLY_SPACES)
    def test_polyhedral_archimedean(self, space):
        assert classify_archimedean(space).kind is ArchKind.Archimedean
        for decide in (is_archimedean, is_almost_archimedean, has_no_nonzero_infinitesimals):
            assert decide(space).holds

    def test_lex_fails_all(self):
        for decide in (is_archimedean, is_almost_archimedean, has_no_nonzero_infinitesimals):
            assert not decide(LEX).holds

    def test_witnesses_are_genuine(self):
        # (1,0) is below u/n in the lexicographic plane and is positive
        for n in range(1, 20):
            assert order_leq(LEX, (1, 0), (0, F(1, n)))
            assert order_leq(HALF, (1, 0), (0, F(1, n))) and order_leq(HALF, (-1, 0), (0, F(1, n)))
        assert not HALF.positive((1, 0))
        assert not QUAD.positive((1, 0))


rat = st.fractions(-3, 3, max_denominator=6)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(POLY_SPACES + [LEX, HALF, QUAD]), st.data())
def test_order_is_partial(space, data):
    x, y, z = (data.draw(st.tuples(*[rat] * space.dim)) for _ in range(3))
    assert order_leq(space, x, x)
    if order_leq(space, x, y) and order_leq(space, y, x):
        assert x == y
    if order_leq(space, x, y) and order_leq(space, y, z):
        assert order_leq(space, x, z)


def interval_points(space, rng, k):
    verts = unit_interval(space).polytope.vertices
    out = []
    for _ in range(k):
        ws = [F(rng.randint(0, 4)) for _ in verts]
        s = sum(ws) or 1
        out.append(tuple(sum(w / s * v[i] for w, v in zip(ws, verts)) for i in range(space.dim)))
    return out


@pytest.mark.parametrize("space", POLY_SPACES)
def test_interval_effect_algebra_axioms(space):
    I = unit_interval(space)
    rng = random.Random(2)
    pts = interval_points(space, rng, 8) + [I.zero, I.unit]
    # halves make defined sums common
    pts += [vscale(F(1, 3), p) for p in pts]
    for a in pts:
        assert I.contains(a)
        assert I.sum(a, I.orth(a)) == I.unit
        assert I.sum(a, I.zero) == a
        if I.orthogonal(a, I.unit):
            assert a == I.zero
        for b in pts:
            assert I.sum(a, b) == I.sum(b, a)
            ab = I.sum(a, b)
            for c in pts[:8]:
                if ab is not None and I.sum(ab, c) is not None:
                    bc = I.sum(b, c)
                    assert bc is not None and I.sum(a, bc) == I.sum(ab, c)


@pytest.mark.parametrize("space", POLY_SPACES)
def test_interval_polytope_matches_membership(space):
    I = unit_interval(space)
    P = I.polytope
    rng = random.Random(4)
    for _ in range(40):
        x = tuple(F(rng.randint(-4, 8), 4) for _ in range(space.dim))
        assert contains(P, x) == I.contains(x)


def test_trace_positive_on_generators():
    for E in [simplex_bns(3), PolyhedralBNS(QCone.from_generators([(1, 0, 1), (0, 1, 1), (1, 1, 1)]), (0, 0, 1))]:
        for g in E.cone.generators:
            assert sum(a * b for a, b in zip(E.trace, g)) > 0
