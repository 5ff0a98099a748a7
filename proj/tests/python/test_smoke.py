from fractions import Fraction

import pytest

import thompson_f as tf


def test_normal_form_round_trip():
    a = tf.normalize("x1 x0")
    assert str(a) == "x0 x2"
    assert a.positive == [(0, 1), (2, 1)]
    assert a.negative == []
    assert str(tf.normalize("x0 x1^-1 x0 x1^-1")) == "x0^2 x2^-1 x1^-1"
    assert (a * ~a).is_identity()
    assert tf.shift(tf.NormalForm("x0"), 1) == tf.NormalForm("x1")
    assert tf.d_statistic(tf.NormalForm("x0^2 x2^-1 x1^-1")) == 6
    assert a.to_json() == {"pos": [[0, 1], [2, 1]], "neg": []}


def test_plmap():
    h = tf.from_word("x0 x1^-1")
    assert h.tail == 0
    assert h.nodes == [
        (Fraction(0), Fraction(0)),
        (Fraction(1, 2), Fraction(1)),
        (Fraction(1), Fraction(3, 2)),
        (Fraction(2), Fraction(2)),
    ]
    assert tf.PLMap.generator(0) * ~tf.PLMap.generator(1) == h
    assert tf.PLMap.generator(5)(Fraction(11, 2)) == 6
    assert (h * ~h).is_identity()
    with pytest.raises(ValueError):
        h(Fraction(1, 3))


def test_norms_and_bounds():
    assert tf.exact_norm("x2", max_radius=5) == 3
    assert tf.exact_norm("x5", max_radius=2) is None
    assert tf.ball_sizes(4) == [1, 4, 12, 36, 108]
    b = tf.norm_bounds(tf.NormalForm("x2"))
    assert b.prop2_lb == Fraction(-3, 2)
    assert b.prop2_ub == 9
    assert tf.rewrite_to_finite_gens(tf.NormalForm("x2")) == "x0^-1 x1 x0"
    ball = tf.CayleyBall.build_f(3, track_parents=True)
    assert len(ball) == 53
    assert ball.distance(tf.from_word("x2")) == 3
    with pytest.raises(tf.ResourceLimitError):
        tf.exact_norm("x9", max_radius=30, cap_states=100)


def test_embeddings_and_checks():
    assert str(tf.embed(tf.NormalForm("x0"), 1)) == "x0 x3 x1^-1"
    assert str(tf.embed_n(tf.NormalForm(), [0, 1])) == "x2 x3^-1"
    assert tf.check_presentation(max_index=6, samples=20)["passed"]
    assert tf.verify_subgroup_relations(n=2)["passed"]
    assert tf.qi_check([("x2", 0), ("x0^2 x2^-1 x1^-1", 1)], max_radius=6)["passed"]
    report = tf.h_distortion("fxz", h_radius=2, f_radius=3)
    assert report["h_values_are_lower_bounds"]


def test_parse_errors():
    with pytest.raises(tf.ParseError):
        tf.normalize("x0x1")
    with pytest.raises(ValueError):
        tf.normalize("x-1")
