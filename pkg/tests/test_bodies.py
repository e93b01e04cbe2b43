import math

import numpy as np
import pytest

from src.bodies import (
    GraphBody,
    LpBall,
    MultiIndex2,
    Rectangle,
    Triangle,
    contains,
    deg_C,
    enumerate_lattice,
    gauge,
    geometric_moments,
    lattice_array,
    parse_body,
    sampled_body,
    scale,
    simplex,
)
from src.utils import DomainError, SpecParseError


@pytest.mark.parametrize("body, point, expected", [
    (simplex(), (0.5, 0.5), True),
    (simplex(), (0.6, 0.5), False),
    (Rectangle(a=1.0, b=2.0), (2.0, 1.0), True),
    (LpBall(p=2.0), (0.6, 0.8), True),
    (LpBall(p=0.5), (0.5, 0.5), False),
])
def test_contains(body, point, expected):
    assert contains(body, point) is expected


def test_contains_rejects_negative_coordinates():
    with pytest.raises(DomainError):
        contains(simplex(), (-0.1, 0.0))


@pytest.mark.parametrize("body, alpha, expected", [
    (simplex(), (2, 3), 5.0),
    (Triangle(a=2.0, b=1.0), (1, 2), 2.0),
    (Rectangle(a=1.0, b=1.0), (2, 3), 3.0),
    (LpBall(p=math.inf), (2, 3), 3.0),
    (LpBall(p=2.0), (3, 4), 5.0),
    (simplex(), (0, 0), 0.0),
])
def test_gauge(body, alpha, expected):
    assert gauge(body, alpha) == pytest.approx(expected, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("body, alpha, expected", [
    (simplex(), (2, 3), 5),
    (Triangle(a=2.0, b=1.0), (0, 1), 1),
    (Triangle(a=2.0, b=1.0), (0, 2), 1),
    (LpBall(p=2.0), (1, 1), 2),
    (LpBall(p=0.5), (1, 1), 4),
])
def test_deg_C(body, alpha, expected):
    assert deg_C(body, alpha) == expected


def test_deg_C_accepts_multi_index():
    assert deg_C(simplex(), MultiIndex2(j1=1, j2=2)) == 3


def test_lattice_of_simplex_in_grlex_order():
    assert [a.as_tuple() for a in enumerate_lattice(simplex(), 2)] == [
        (0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize("n", [1, 3, 7])
def test_lattice_of_unit_square(n):
    assert len(enumerate_lattice(Rectangle(a=1.0, b=1.0), n)) == (n + 1) ** 2


def test_lattice_of_tall_triangle():
    assert sorted(a.as_tuple() for a in enumerate_lattice(Triangle(a=2.0, b=1.0), 1)) == [
        (0, 0), (0, 1), (0, 2), (1, 0)]


def test_lattice_rejects_zero_dilation():
    with pytest.raises(DomainError):
        lattice_array(simplex(), 0)


def test_lattice_is_a_strictly_increasing_lower_set(all_bodies):
    for body in all_bodies:
        points = lattice_array(body, 9)
        keys = [(int(a + b), int(a), int(b)) for a, b in points]
        assert keys == sorted(set(keys))
        members = {(int(a), int(b)) for a, b in points}
        for a, b in members:
            assert (a == 0 or (a - 1, b) in members) and (b == 0 or (a, b - 1) in members)


@pytest.mark.parametrize("n", [8, 16, 32])
def test_lattice_count_grows_like_volume(all_bodies, n):
    for body in all_bodies:
        vol = geometric_moments(body).vol
        assert abs(len(lattice_array(body, n)) - n * n * vol) <= 4 * n


@pytest.mark.parametrize("n", [8, 16, 32, 64])
def test_total_degree_average_tracks_centroid(all_bodies, n):
    for body in all_bodies:
        points = lattice_array(body, n)
        l_n = int(points.sum())
        assert abs(l_n / (n * len(points)) - geometric_moments(body).a_c) <= 2.0 / math.sqrt(n)


def test_moments_of_simplex():
    m = geometric_moments(simplex())
    assert (m.vol, m.m_c, m.a_c) == pytest.approx((0.5, 1.0 / 3.0, 2.0 / 3.0), abs=1e-15)
    assert m.face_a == pytest.approx(1.0 / 6.0) and m.face_b == pytest.approx(1.0 / 6.0)


def test_moments_of_triangle():
    m = geometric_moments(Triangle(a=2.0, b=3.0))
    assert m.vol == pytest.approx(3.0)
    assert m.m_c == pytest.approx(5.0)
    assert (m.face_a, m.face_b) == pytest.approx((3.0, 2.0))


def test_moments_of_rectangle():
    m = geometric_moments(Rectangle(a=1.0, b=2.0))
    assert (m.vol, m.m_c, m.a_c) == pytest.approx((2.0, 3.0, 1.5))


def test_moments_of_lp_balls():
    assert geometric_moments(LpBall(p=2.0)).vol == pytest.approx(math.pi / 4.0, abs=1e-14)
    assert geometric_moments(LpBall(p=1.0)).face_a == pytest.approx(1.0 / 6.0, abs=1e-14)
    square = geometric_moments(LpBall(p=math.inf))
    assert (square.vol, square.m_c) == pytest.approx((1.0, 1.0))


def test_graph_moments_match_closed_form():
    graph = GraphBody(xs=(0.0, 0.5, 1.0), fs=(1.0, 0.5, 0.0))
    m = geometric_moments(graph)
    assert (m.vol, m.m_c, m.face_a, m.face_b) == pytest.approx((0.5, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0), abs=1e-12)
    assert m.face_a + m.face_b == pytest.approx(m.m_c, abs=1e-12)


def test_graph_face_integrals_add_up(c2_sampled):
    m = geometric_moments(c2_sampled)
    assert m.face_a + m.face_b == pytest.approx(m.m_c, abs=1e-9)
    assert m.vol == pytest.approx(math.pi / 4.0, abs=1e-3)


@pytest.mark.parametrize("body, t, expected", [
    (simplex(), 2.0, Triangle(a=2.0, b=2.0)),
    (Rectangle(a=1.0, b=3.0), 0.5, Rectangle(a=0.5, b=1.5)),
    (LpBall(p=3.0), 4.0, LpBall(p=3.0, radius=4.0)),
])
def test_scale(body, t, expected):
    assert scale(body, t) == expected


def test_scale_rejects_nonpositive():
    with pytest.raises(DomainError):
        scale(simplex(), 0.0)


def test_scaled_gauge_divides_by_factor(all_bodies, rng):
    probes = rng.uniform(0.0, 3.0, size=(20, 2))
    for body in all_bodies:
        big = scale(body, 2.5)
        for x, y in probes:
            assert gauge(big, (x, y)) == pytest.approx(gauge(body, (x, y)) / 2.5, rel=1e-10, abs=1e-14)


def test_gauge_is_positively_homogeneous(all_bodies, rng):
    probes = rng.uniform(0.0, 2.0, size=(10, 2))
    for body in all_bodies:
        for x, y in probes:
            assert gauge(body, (3 * x, 3 * y)) == pytest.approx(3 * gauge(body, (x, y)), rel=1e-10)


def test_simplex_bounds_sandwich(all_bodies):
    for body in all_bodies:
        eps, delta = body.simplex_bounds()
        assert contains(body, (eps, 0.0)) and contains(body, (0.0, eps))
        assert contains(body, (eps / 2, eps / 2))
        points = lattice_array(body, 16)
        assert np.all(points.sum(axis=1) / 16 <= delta * (1 + 1e-12))


def test_multi_index_ordering():
    alphas = [MultiIndex2(j1=2, j2=0), MultiIndex2(j1=0, j2=1), MultiIndex2(j1=1, j2=0), MultiIndex2(j1=0, j2=0)]
    assert [a.as_tuple() for a in sorted(alphas)] == [(0, 0), (0, 1), (1, 0), (2, 0)]


def test_multi_index_rejects_negative():
    with pytest.raises(ValueError):
        MultiIndex2(j1=-1, j2=0)


@pytest.mark.parametrize("xs, fs", [
    ((0.0, 0.5, 1.0), (1.0, 0.2, 0.0)),
    ((0.0, 0.5, 1.0), (1.0, 1.2, 0.0)),
    ((0.0, 1.0), (1.0, 0.5)),
    ((0.1, 1.0), (1.0, 0.0)),
])
def test_graph_body_rejects_bad_profiles(xs, fs):
    with pytest.raises(ValueError):
        GraphBody(xs=xs, fs=fs)


def test_lp_ball_rejects_nonpositive_exponent():
    with pytest.raises(ValueError):
        LpBall(p=0.0)


def test_sampled_body_interpolates_profile():
    body = sampled_body(lambda x: 1.0 - x, 1.0, samples=5)
    assert body.height == 1.0 and body.width == 1.0
    assert float(body.profile(np.array(0.3))) == pytest.approx(0.7)


@pytest.mark.parametrize("text, expected", [
    ("simplex", simplex()),
    ("triangle:a=2,b=1", Triangle(a=2.0, b=1.0)),
    ("rect:a=1,b=2", Rectangle(a=1.0, b=2.0)),
    ("lp:p=1/2", LpBall(p=0.5)),
    ("lp:p=inf", LpBall(p=math.inf)),
    ("lp:p=2,r=3", LpBall(p=2.0, radius=3.0)),
])
def test_parse_body(text, expected):
    assert parse_body(text) == expected


def test_parse_graph_body(profile_csv):
    body = parse_body(f"graph:file={profile_csv}")
    assert isinstance(body, GraphBody)
    assert body.fs == (1.0, 0.75, 0.0)


@pytest.mark.parametrize("text, token", [
    ("blob", "blob"),
    ("triangle:a=1", "triangle:a=1"),
    ("lp:q=2", "q"),
    ("lp:p=two", "two"),
])
def test_parse_body_errors_name_the_token(text, token):
    with pytest.raises(SpecParseError) as info:
        parse_body(text)
    assert info.value.token == token


def test_parse_body_wraps_constraint_failures():
    with pytest.raises(SpecParseError):
        parse_body("triangle:a=-1,b=1")
    with pytest.raises(SpecParseError):
        parse_body("graph:file=/nonexistent/profile.csv")


@pytest.mark.parametrize("body", [Triangle(a=2.0, b=1.0), LpBall(p=3.0), LpBall(p=0.5)])
def test_inverse_profile_undoes_profile(body):
    ys = np.linspace(0.05, 0.95, 10) * body.profile(np.array([0.0]))[0]
    assert body.profile(body.inverse_profile(ys)) == pytest.approx(ys, abs=1e-12)


def test_graph_inverse_profile_interpolates():
    body = GraphBody(xs=(0.0, 0.5, 1.0), fs=(1.0, 0.75, 0.0))
    assert body.inverse_profile(np.array([1.0, 0.75, 0.375, 0.0])) == pytest.approx([0.0, 0.5, 0.75, 1.0])
