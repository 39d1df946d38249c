"""Tests for the finite-model partition/ultrametric laboratory."""

import random
from fractions import Fraction

import pytest

from bairecf import (
    CoverSequence,
    Distance,
    DistanceTable,
    FiniteSpace,
    UnseparatedPairError,
    baire_distance,
    build_cover_sequence,
    covers_from_json,
    disjointify,
    sierpinski_embed,
    table_from_json,
    ultrametric_from_covers,
    verify_ball_properties,
    verify_base_equality,
    verify_ultrametric,
)


def _table(points, triples):
    return DistanceTable(points, {(x, y): v for x, y, v in triples})


def _space(points, triples):
    return FiniteSpace(points, {(x, y): v for x, y, v in triples})


THREE = _table(
    "abc",
    [("a", "b", Fraction(1, 8)), ("a", "c", Fraction(1)), ("b", "c", Fraction(1))],
)


def test_distance_table_basics():
    assert THREE.points == ("a", "b", "c")
    assert THREE.d("a", "a") == 0
    assert THREE.d("b", "a") == Fraction(1, 8)
    assert list(THREE.pairs()) == [("a", "b"), ("a", "c"), ("b", "c")]
    assert THREE.values() == [Fraction(1, 8), Fraction(1)]
    assert THREE.as_json() == {
        "points": ["a", "b", "c"],
        "dist": [["a", "b", "1/8"], ["a", "c", "1"], ["b", "c", "1"]],
    }


def test_distance_table_rejects_bad_input():
    with pytest.raises(ValueError, match="duplicate"):
        DistanceTable("aa", {})
    with pytest.raises(ValueError, match="unknown point"):
        DistanceTable("ab", {("a", "z"): 1})
    with pytest.raises(ValueError, match="diagonal"):
        DistanceTable("ab", {("a", "a"): 1, ("a", "b"): 1})
    with pytest.raises(ValueError, match="positive"):
        DistanceTable("ab", {("a", "b"): 0})
    with pytest.raises(ValueError, match="conflicting"):
        DistanceTable("ab", {("a", "b"): 1, ("b", "a"): 2})
    with pytest.raises(ValueError, match="missing distance"):
        DistanceTable("abc", {("a", "b"): 1, ("a", "c"): 1})
    with pytest.raises(ValueError, match="not a pair"):
        DistanceTable("ab", {("a", "b", "c"): 1})


def test_finite_space_requires_triangle_inequality():
    _space("abc", [("a", "b", 1), ("a", "c", 1), ("b", "c", 2)])
    with pytest.raises(ValueError, match="triangle"):
        _space("abc", [("a", "b", 5), ("a", "c", 1), ("b", "c", 1)])


def test_disjointify_examples():
    g = {"a", "b", "c"}
    assert disjointify([{"a", "b"}, {"b", "c"}, {"c"}], g) == [
        frozenset({"a", "b"}),
        frozenset({"c"}),
    ]
    assert disjointify([{"a"}, {"b"}], {"a", "b"}) == [frozenset({"a"}), frozenset({"b"})]
    assert disjointify([{"a", "b", "c"}, {"a"}, {"b"}], g) == [frozenset({"a", "b", "c"})]


def test_disjointify_each_part_inside_its_source():
    rng = random.Random(4141)
    for _ in range(300):
        ground = frozenset(range(rng.randint(1, 30)))
        sets = [
            frozenset(x for x in ground if rng.random() < 0.4)
            for _ in range(rng.randint(1, 8))
        ]
        sets.append(ground)
        parts = disjointify(sets, ground)
        assert frozenset().union(*parts) == ground
        assert sum(len(p) for p in parts) == len(ground)
        # reconstruct which source each part was peeled from
        remaining = list(parts)
        for s in sets:
            if remaining and remaining[0] <= s:
                remaining.pop(0)
        assert not remaining


def test_disjointify_rejects_non_covers():
    with pytest.raises(ValueError, match="does not cover"):
        disjointify([{"a"}], {"a", "b"})
    with pytest.raises(ValueError, match="outside the ground set"):
        disjointify([{"a", "z"}], {"a"})


def test_cover_sequence_canonical_order_and_lookup():
    seq = CoverSequence([[{"c"}, {"a", "b"}], [{"b"}, {"c"}, {"a"}]])
    assert seq.levels[0] == (frozenset({"a", "b"}), frozenset({"c"}))
    assert seq.levels[1] == (frozenset({"a"}), frozenset({"b"}), frozenset({"c"}))
    assert seq.depth == 2
    assert seq.ground == frozenset({"a", "b", "c"})
    assert seq.block_index_of(0, "b") == 0
    assert seq.block_index_of(1, "c") == 2
    assert seq.block_of(0, "c") == frozenset({"c"})


def test_cover_sequence_rejects_bad_levels():
    with pytest.raises(ValueError, match="at least one level"):
        CoverSequence([])
    with pytest.raises(ValueError, match="empty block"):
        CoverSequence([[set(), {"a"}]])
    with pytest.raises(ValueError, match="overlap"):
        CoverSequence([[{"a", "b"}, {"b"}]])
    with pytest.raises(ValueError, match="does not cover"):
        CoverSequence([[{"a", "b"}], [{"a"}]])
    with pytest.raises(ValueError, match="not inside a single"):
        CoverSequence([[{"a"}, {"b"}], [{"a", "b"}]])


def test_build_cover_sequence_three_point_example():
    space = _space(
        "abc",
        [("a", "b", Fraction(1, 8)), ("a", "c", 1), ("b", "c", 1)],
    )
    seq = build_cover_sequence(space, 2)
    assert seq.levels[0] == (frozenset({"a", "b"}), frozenset({"c"}))
    # the level-1 radius 1/8 open ball already splits a from b
    assert seq.levels[1] == (frozenset({"a"}), frozenset({"b"}), frozenset({"c"}))


def test_build_cover_sequence_single_point_and_discrete():
    one = FiniteSpace(["a"], {})
    seq = build_cover_sequence(one, 3)
    assert all(blocks == (frozenset({"a"}),) for blocks in seq.levels)

    far = _space("abc", [("a", "b", 1), ("a", "c", 2), ("b", "c", 1)])
    seq = build_cover_sequence(far, 3)
    discrete = (frozenset({"a"}), frozenset({"b"}), frozenset({"c"}))
    assert all(blocks == discrete for blocks in seq.levels)


def test_build_cover_sequence_rejects_bad_depth():
    with pytest.raises(ValueError):
        build_cover_sequence(FiniteSpace(["a"], {}), 0)


def _line_space(rng, n):
    coords = rng.sample(range(0, 17), n)
    pts = list(range(n))
    dist = {
        (i, j): Fraction(abs(coords[i] - coords[j]), 8)
        for i in pts
        for j in pts
        if i < j
    }
    return FiniteSpace(pts, dist)


def test_build_cover_sequence_invariants_randomized():
    rng = random.Random(5151)
    for _ in range(40):
        space = _line_space(rng, rng.randint(2, 8))
        seq = build_cover_sequence(space, 4)
        assert seq.depth == 4
        for li, blocks in enumerate(seq.levels):
            bound = Fraction(1, 2 ** (li + 1))
            for b in blocks:
                members = sorted(b)
                for i, x in enumerate(members):
                    for y in members[i + 1 :]:
                        assert space.d(x, y) <= bound


def test_ultrametric_from_covers_examples():
    seq = CoverSequence([[{"a", "b"}, {"c"}], [{"a"}, {"b"}, {"c"}]])
    t = ultrametric_from_covers(seq, {"a", "b", "c"})
    assert t.d("a", "b") == Fraction(1, 2)
    assert t.d("a", "c") == 1
    assert t.d("b", "c") == 1

    flat = CoverSequence([[{"a"}, {"b"}, {"c"}]])
    t = ultrametric_from_covers(flat, {"a", "b", "c"})
    assert {t.d(x, y) for x, y in t.pairs()} == {Fraction(1)}

    deep = CoverSequence(
        [[{"a", "b", "c"}], [{"a", "b"}, {"c"}], [{"a"}, {"b"}, {"c"}]]
    )
    t = ultrametric_from_covers(deep, {"a", "b", "c"})
    assert t.d("a", "b") == Fraction(1, 3)
    assert t.d("a", "c") == Fraction(1, 2)
    assert t.d("b", "c") == Fraction(1, 2)


def test_ultrametric_from_covers_errors():
    seq = CoverSequence([[{"a", "b"}, {"c"}]])
    with pytest.raises(UnseparatedPairError) as exc:
        ultrametric_from_covers(seq, {"a", "b", "c"})
    assert exc.value.pair == ("a", "b")
    with pytest.raises(ValueError, match="ground set"):
        ultrametric_from_covers(seq, {"a", "b"})


def test_verify_ultrametric_pass_and_fail():
    seq = CoverSequence([[{"a", "b"}, {"c"}], [{"a"}, {"b"}, {"c"}]])
    t = ultrametric_from_covers(seq, {"a", "b", "c"})
    rep = verify_ultrametric(t)
    assert rep.all_passed
    assert rep.as_json()["passed"] is True

    euclid = _table(
        "abc",
        [("a", "b", 1), ("a", "c", 2), ("b", "c", Fraction(5, 2))],
    )
    rep = verify_ultrametric(euclid)
    assert not rep.strong_triangle.passed
    assert "5/2" in rep.strong_triangle.counterexample
    assert not rep.isosceles.passed

    equilateral = _table("abc", [("a", "b", 3), ("a", "c", 3), ("b", "c", 3)])
    assert verify_ultrametric(equilateral).all_passed

    # two largest sides equal, third smaller: still an ultrametric
    iso = _table(
        "abc",
        [("a", "b", Fraction(1, 2)), ("a", "c", 1), ("b", "c", 1)],
    )
    assert verify_ultrametric(iso).all_passed


def test_verify_ball_properties_pass():
    seq = CoverSequence(
        [[{"a", "b", "c"}, {"d"}], [{"a", "b"}, {"c"}, {"d"}], [{"a"}, {"b"}, {"c"}, {"d"}]]
    )
    t = ultrametric_from_covers(seq, {"a", "b", "c", "d"})
    rep = verify_ball_properties(t)
    assert rep.all_passed
    payload = rep.as_json()
    assert payload["passed"] is True
    assert payload["every_point_centers"]["counterexample"] == ""


def test_verify_ball_properties_single_point_vacuous():
    rep = verify_ball_properties(DistanceTable(["a"], {}))
    assert rep.all_passed


def test_verify_ball_properties_reports_precondition():
    euclid = _table(
        "abc",
        [("a", "b", 1), ("a", "c", 2), ("b", "c", Fraction(5, 2))],
    )
    rep = verify_ball_properties(euclid)
    assert not rep.precondition_ultrametric.passed
    assert not rep.all_passed
    assert "not checked" in rep.nesting.counterexample


def test_verify_base_equality_three_point():
    seq = CoverSequence([[{"a", "b"}, {"c"}], [{"a"}, {"b"}, {"c"}]])
    t = ultrametric_from_covers(seq, seq.ground)
    rep = verify_base_equality(seq, t)
    assert rep.all_passed
    assert rep.ball_system_size == 5
    assert rep.base_system_size == 5


def test_verify_base_equality_discrete_and_trivial():
    flat = CoverSequence([[{"a"}, {"b"}]])
    t = ultrametric_from_covers(flat, {"a", "b"})
    rep = verify_base_equality(flat, t)
    assert rep.all_passed
    assert rep.ball_system_size == 3

    one = CoverSequence([[{"a"}]])
    t = ultrametric_from_covers(one, {"a"})
    rep = verify_base_equality(one, t)
    assert rep.all_passed
    assert rep.ball_system_size == 1


def test_verify_base_equality_rejects_foreign_table():
    seq = CoverSequence([[{"a", "b"}, {"c"}], [{"a"}, {"b"}, {"c"}]])
    wrong = _table("abc", [("a", "b", 1), ("a", "c", 1), ("b", "c", 1)])
    with pytest.raises(ValueError, match="not the ultrametric"):
        verify_base_equality(seq, wrong)


def test_sierpinski_embed_examples():
    seq = CoverSequence([[{"a", "b"}, {"c"}], [{"a"}, {"b"}, {"c"}]])
    emb = sierpinski_embed(seq)
    assert emb["a"].entries == (0, 0)
    assert emb["b"].entries == (0, 1)
    assert emb["c"].entries == (1, 2)

    flat = sierpinski_embed(CoverSequence([[{"a"}, {"b"}]]))
    assert flat["a"].entries == (0,)
    assert flat["b"].entries == (1,)

    one = sierpinski_embed(CoverSequence([[{"a"}], [{"a"}], [{"a"}]]))
    assert one["a"].entries == (0, 0, 0)


def test_sierpinski_embed_is_isometric():
    rng = random.Random(6161)
    for _ in range(40):
        space = _line_space(rng, rng.randint(2, 8))
        seq = build_cover_sequence(space, 4)
        rho = ultrametric_from_covers(seq, seq.ground)
        emb = sierpinski_embed(seq)
        pts = sorted(seq.ground)
        for i, x in enumerate(pts):
            for y in pts[i + 1 :]:
                got = baire_distance(emb[x], emb[y], seq.depth)
                assert got == Distance.exact(rho.d(x, y))
        assert len({emb[x].entries for x in pts}) == len(pts)


def test_table_json_round_trip():
    again = table_from_json(THREE.as_json())
    assert again.same_table(THREE)
    metric = table_from_json(THREE.as_json(), require_metric=True)
    assert isinstance(metric, FiniteSpace)


def test_table_from_json_rejects_bad_shapes():
    with pytest.raises(ValueError):
        table_from_json(["not", "a", "dict"])
    with pytest.raises(ValueError):
        table_from_json({"points": "ab"})
    with pytest.raises(ValueError):
        table_from_json({"points": [1.5], "dist": []})
    with pytest.raises(ValueError):
        table_from_json({"points": ["a", "b"], "dist": [["a", "b"]]})
    bad_metric = {
        "points": ["a", "b", "c"],
        "dist": [["a", "b", "5"], ["a", "c", "1"], ["b", "c", "1"]],
    }
    table_from_json(bad_metric)
    with pytest.raises(ValueError, match="triangle"):
        table_from_json(bad_metric, require_metric=True)


def test_covers_json_round_trip():
    seq = CoverSequence([[{"a", "b"}, {"c"}], [{"a"}, {"b"}, {"c"}]])
    payload = seq.as_json()
    assert payload == {"levels": [[["a", "b"], ["c"]], [["a"], ["b"], ["c"]]]}
    again = covers_from_json(payload)
    assert again.levels == seq.levels
    with pytest.raises(ValueError):
        covers_from_json({"nope": []})
    with pytest.raises(ValueError):
        covers_from_json([])
