from fractions import Fraction

import pytest

import straightedge as se


def test_example_is_on_a_cubic():
    result = se.check_ten_on_cubic(se.example_points())
    assert result["verdict"] == "ON_CUBIC"
    assert result["schemes_tried"] == 1
    assert result["trace"]["points"]["V"] == "[1 : 2 : 0]"
    assert se.cubic_det(se.example_points()) == 0


def test_perturbed_example_is_not():
    points = se.example_points()
    points[9] = (6, 15, 1)
    assert se.check_ten_on_cubic(points)["verdict"] == "NOT_ON_CUBIC"
    assert se.cubic_det(points) != 0


def test_generated_instances_agree_with_the_determinant():
    for seed in range(5):
        for on in (True, False):
            pts = se.generate_instance(on, seed)
            assert (se.check_ten_on_cubic(pts)["verdict"] == "ON_CUBIC") == (se.cubic_det(pts) == 0)


def test_projective_primitives():
    assert se.join((0, 0), (1, 1)) == (1, -1, 0)
    assert se.meet((1, 0, 0), (0, 1, -2)) == (0, 2, 1)
    assert se.bracket((0, 0), (1, 0), (0, 1)) == 1
    assert se.canonical(("6/5", "-3/5", 1)) == (6, -3, 5)
    assert se.cross_ratio((0, 0), (1, 0), (2, 0), (3, 0), (0, 1)) == Fraction(4, 3)


def test_certificate_and_svg():
    trace = se.check_ten_on_cubic(se.example_points())["trace"]
    report = se.verify_certificate(trace)
    assert report["passed"] == report["total"] == 25
    assert report["conclusive"]
    assert report["reduction"] == "[P,P2,V][P2,U,Y] = [P,P2,U][P2,V,Y]"
    svg = se.render_svg(trace)
    assert svg.count('class="label construction"') == 11


def test_errors():
    with pytest.raises(se.InputError):
        se.check_ten_on_cubic(se.example_points()[:9])
    with pytest.raises(se.InputError):
        se.cubic_det([("1/0", 0, 1)] + se.example_points()[1:])
    with pytest.raises(se.GeometryError):
        se.join((1, 2), (2, 4, 2))
