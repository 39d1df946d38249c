"""Finite-model laboratory: refining partitions, ultrametrics, verification.

A finite metric space is driven through the zero-dimensionality pipeline: shrink
open balls into a sequence of refining partitions (``build_cover_sequence``),
read an ultrametric back off the separation level of each pair
(``ultrametric_from_covers``), verify the strong triangle inequality and the
standard open-ball phenomena on the finite model, check that the ball system
equals the union of the partition levels plus the whole space, and embed the
points isometrically into the non-negative integer-sequence space
(``sierpinski_embed``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .baire import BairePrefix
from .rational import parse_rational
from .report import PropertyCheck


class UnseparatedPairError(ValueError):
    """Two points shared a block at every level of the sequence."""

    def __init__(self, pair, message):
        super().__init__(message)
        self.pair = pair


def _id_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


def _fmt_set(s: Iterable) -> str:
    return "{" + ", ".join(str(x) for x in sorted(s, key=_id_key)) + "}"


class DistanceTable:
    """Symmetric table of exact positive distances over a finite id set."""

    def __init__(self, points: Iterable, distances: Mapping):
        pts = list(points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate point ids")
        self.points: tuple = tuple(sorted(pts, key=_id_key))
        known = set(self.points)
        d: dict[frozenset, Fraction] = {}
        for key, value in distances.items():
            pair = tuple(key)
            if len(pair) != 2:
                raise ValueError(f"distance key is not a pair: {key!r}")
            x, y = pair
            if x not in known or y not in known:
                raise ValueError(f"unknown point in pair {key!r}")
            if x == y:
                raise ValueError(f"diagonal entry for {x!r}; d(x, x) = 0 is implicit")
            v = Fraction(value)
            if v <= 0:
                raise ValueError(f"distance for ({x!r}, {y!r}) must be positive, got {v}")
            pk = frozenset((x, y))
            if pk in d and d[pk] != v:
                raise ValueError(f"conflicting distances for ({x!r}, {y!r})")
            d[pk] = v
        n = len(self.points)
        if len(d) != n * (n - 1) // 2:
            for i in range(n):
                for j in range(i + 1, n):
                    if frozenset((self.points[i], self.points[j])) not in d:
                        raise ValueError(
                            f"missing distance for ({self.points[i]!r}, {self.points[j]!r})"
                        )
        self._d = d

    def d(self, x, y) -> Fraction:
        if x == y:
            return Fraction(0)
        return self._d[frozenset((x, y))]

    def pairs(self):
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                yield pts[i], pts[j]

    def values(self) -> list[Fraction]:
        """Distinct positive distances, ascending."""
        return sorted(set(self._d.values()))

    def same_table(self, other: "DistanceTable") -> bool:
        return self.points == other.points and self._d == other._d

    def as_json(self) -> dict:
        return {
            "points": list(self.points),
            "dist": [[x, y, str(self.d(x, y))] for x, y in self.pairs()],
        }


class FiniteSpace(DistanceTable):
    """Distance table satisfying the triangle inequality (a genuine metric)."""

    def __init__(self, points: Iterable, distances: Mapping):
        super().__init__(points, distances)
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                dij = self.d(pts[i], pts[j])
                for k in range(len(pts)):
                    if k == i or k == j:
                        continue
                    if dij > self.d(pts[i], pts[k]) + self.d(pts[k], pts[j]):
                        raise ValueError(
                            f"triangle inequality fails: d({pts[i]!r}, {pts[j]!r}) = {dij} "
                            f"> d(.., {pts[k]!r}) sum"
                        )


def table_from_json(obj, require_metric: bool = False) -> DistanceTable:
    if not isinstance(obj, dict) or "points" not in obj or "dist" not in obj:
        raise ValueError('expected {"points": [...], "dist": [[i, j, "p/q"], ...]}')
    points = obj["points"]
    if not isinstance(points, list):
        raise ValueError("points must be a list of ids")
    for x in points:
        if not isinstance(x, (str, int)):
            raise ValueError(f"point id must be a string or integer: {x!r}")
    distances = {}
    for row in obj["dist"]:
        if not isinstance(row, list) or len(row) != 3:
            raise ValueError(f"bad dist row: {row!r}")
        x, y, v = row
        distances[(x, y)] = parse_rational(str(v))
    cls = FiniteSpace if require_metric else DistanceTable
    return cls(points, distances)


def disjointify(sets: Sequence[Iterable], ground: Iterable) -> list[frozenset]:
    """Peel each set down to its not-yet-covered part; drop empties.

    The inputs must all sit inside the ground set and jointly cover it; the
    output is a partition of the ground set, each part inside its source set.
    """
    ground = frozenset(ground)
    out: list[frozenset] = []
    seen: set = set()
    for b in sets:
        bs = frozenset(b)
        if not bs <= ground:
            raise ValueError(f"input set strays outside the ground set: {_fmt_set(bs - ground)}")
        fresh = bs - seen
        if fresh:
            out.append(frozenset(fresh))
        seen |= bs
    if seen != ground:
        raise ValueError(f"input does not cover the ground set; missing {_fmt_set(ground - seen)}")
    return out


class CoverSequence:
    """Refining sequence of partitions of a finite ground set.

    Blocks within a level are kept in a canonical order (by smallest member),
    which also fixes the digit each point gets in ``sierpinski_embed``.
    """

    def __init__(self, levels: Sequence[Sequence[Iterable]]):
        if not levels:
            raise ValueError("need at least one level")
        canon: list[tuple[frozenset, ...]] = []
        for level in levels:
            blocks = [frozenset(b) for b in level]
            if any(not b for b in blocks):
                raise ValueError("empty block")
            blocks.sort(key=lambda b: _id_key(min(b, key=_id_key)))
            canon.append(tuple(blocks))
        self.levels: tuple[tuple[frozenset, ...], ...] = tuple(canon)
        self.ground: frozenset = frozenset().union(*self.levels[0])
        self._index: list[dict] = []
        prev: dict | None = None
        for li, blocks in enumerate(self.levels):
            where: dict = {}
            for bi, b in enumerate(blocks):
                for x in b:
                    if x in where:
                        raise ValueError(f"level {li}: blocks overlap at {x!r}")
                    where[x] = bi
            if set(where) != self.ground:
                raise ValueError(f"level {li} does not cover the ground set")
            if prev is not None:
                for b in blocks:
                    if len({prev[x] for x in b}) != 1:
                        raise ValueError(
                            f"level {li}: block {_fmt_set(b)} not inside a single "
                            f"level-{li - 1} block"
                        )
            self._index.append(where)
            prev = where

    @property
    def depth(self) -> int:
        return len(self.levels)

    def block_index_of(self, level: int, x) -> int:
        return self._index[level][x]

    def block_of(self, level: int, x) -> frozenset:
        return self.levels[level][self._index[level][x]]

    def as_json(self) -> dict:
        return {
            "levels": [
                [sorted(b, key=_id_key) for b in blocks] for blocks in self.levels
            ]
        }


def covers_from_json(obj) -> CoverSequence:
    if not isinstance(obj, dict) or "levels" not in obj or not isinstance(obj["levels"], list):
        raise ValueError('expected {"levels": [[[id, ...], ...], ...]}')
    return CoverSequence(obj["levels"])


def _ball(table: DistanceTable, x, r: Fraction) -> frozenset:
    return frozenset(y for y in table.points if table.d(x, y) < r)


def _closed_ball(table: DistanceTable, x, r: Fraction) -> frozenset:
    return frozenset(y for y in table.points if table.d(x, y) <= r)


def _radii(table: DistanceTable, include_beyond_max: bool = False) -> list[Fraction]:
    """Occurring positive distances plus midpoints between consecutive values.

    These radii realize every distinct open ball with radius up to the largest
    distance; one radius past the maximum realizes the whole space as a ball.
    """
    vals = table.values()
    with_zero = [Fraction(0)] + vals
    mids = [(a + b) / 2 for a, b in zip(with_zero, with_zero[1:])]
    rs = sorted(set(vals) | set(mids))
    if include_beyond_max:
        rs.append((vals[-1] if vals else Fraction(0)) + 1)
    return rs


def build_cover_sequence(space: FiniteSpace, depth: int) -> CoverSequence:
    """Refining partitions from shrinking balls; level i uses radius 2^-(i+2).

    Blocks of level i then have diameter at most 2^-(i+1), and each level
    refines the previous one because new pieces are cut inside old blocks.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    pts = space.points
    ground = frozenset(pts)
    levels: list[list[frozenset]] = []
    prev: list[frozenset] = [ground]
    for i in range(depth):
        radius = Fraction(1, 2 ** (i + 2))
        balls = [_ball(space, x, radius) for x in pts]
        pieces = [nb & u for u in prev for nb in balls]
        level = disjointify(pieces, ground)
        levels.append(level)
        prev = level
    seq = CoverSequence(levels)
    for li, blocks in enumerate(seq.levels):
        bound = Fraction(1, 2 ** (li + 1))
        for b in blocks:
            members = sorted(b, key=_id_key)
            for a_i, x in enumerate(members):
                for y in members[a_i + 1 :]:
                    if space.d(x, y) > bound:
                        raise RuntimeError(
                            f"internal error: level {li} block exceeds diameter {bound}"
                        )
    return seq


def ultrametric_from_covers(seq: CoverSequence, ground: Iterable) -> DistanceTable:
    """Distance 1/(k+1) where k is the first level separating the pair."""
    ground = frozenset(ground)
    if ground != seq.ground:
        raise ValueError("ground set does not match the cover sequence")
    pts = sorted(ground, key=_id_key)
    distances: dict[tuple, Fraction] = {}
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            k = None
            for level in range(seq.depth):
                if seq.block_index_of(level, x) != seq.block_index_of(level, y):
                    k = level
                    break
            if k is None:
                raise UnseparatedPairError(
                    (x, y),
                    f"points {x!r} and {y!r} are never separated within depth {seq.depth}",
                )
            distances[(x, y)] = Fraction(1, k + 1)
    return DistanceTable(pts, distances)


@dataclass(frozen=True)
class UltrametricReport:
    strong_triangle: PropertyCheck
    isosceles: PropertyCheck

    @property
    def all_passed(self) -> bool:
        return self.strong_triangle.passed and self.isosceles.passed

    def as_json(self) -> dict:
        return {
            "strong_triangle": self.strong_triangle.as_json(),
            "isosceles": self.isosceles.as_json(),
            "passed": self.all_passed,
        }


def verify_ultrametric(table: DistanceTable) -> UltrametricReport:
    """Strong triangle inequality plus the two-largest-sides-equal property."""
    strong = PropertyCheck.ok()
    isosceles = PropertyCheck.ok()
    pts = table.points
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            dij = table.d(pts[i], pts[j])
            for k in range(j + 1, n):
                dik = table.d(pts[i], pts[k])
                djk = table.d(pts[j], pts[k])
                sides = sorted(
                    [(dij, pts[i], pts[j]), (dik, pts[i], pts[k]), (djk, pts[j], pts[k])]
                    , key=lambda t: t[0]
                )
                if strong.passed and sides[2][0] > sides[1][0]:
                    v, x, y = sides[2]
                    strong = PropertyCheck.fail(
                        f"d({x}, {y}) = {v} > max of the other two sides = {sides[1][0]}"
                    )
                if isosceles.passed and len({dij, dik, djk}) == 3:
                    isosceles = PropertyCheck.fail(
                        f"all three sides differ on ({pts[i]}, {pts[j]}, {pts[k]}): "
                        f"{dij}, {dik}, {djk}"
                    )
                if not strong.passed and not isosceles.passed:
                    return UltrametricReport(strong, isosceles)
    return UltrametricReport(strong, isosceles)


@dataclass(frozen=True)
class BallPropertiesReport:
    precondition_ultrametric: PropertyCheck
    nesting: PropertyCheck
    same_radius_coincide: PropertyCheck
    every_point_centers: PropertyCheck
    closed_ball_absorption: PropertyCheck
    equal_radius_partition: PropertyCheck

    @property
    def all_passed(self) -> bool:
        return all(
            c.passed
            for c in (
                self.precondition_ultrametric,
                self.nesting,
                self.same_radius_coincide,
                self.every_point_centers,
                self.closed_ball_absorption,
                self.equal_radius_partition,
            )
        )

    def as_json(self) -> dict:
        return {
            "precondition_ultrametric": self.precondition_ultrametric.as_json(),
            "nesting": self.nesting.as_json(),
            "same_radius_coincide": self.same_radius_coincide.as_json(),
            "every_point_centers": self.every_point_centers.as_json(),
            "closed_ball_absorption": self.closed_ball_absorption.as_json(),
            "equal_radius_partition": self.equal_radius_partition.as_json(),
            "passed": self.all_passed,
        }


def verify_ball_properties(table: DistanceTable) -> BallPropertiesReport:
    """Open-ball behaviour at every radius that can change a ball.

    Radii are the occurring distances and the midpoints between consecutive
    occurring values (including zero).
    """
    um = verify_ultrametric(table)
    if not um.all_passed:
        pre = PropertyCheck.fail(
            um.strong_triangle.counterexample or um.isosceles.counterexample
        )
        skipped = PropertyCheck.fail("not checked: table is not an ultrametric")
        return BallPropertiesReport(pre, skipped, skipped, skipped, skipped, skipped)

    pts = table.points
    all_points = frozenset(pts)
    radii = _radii(table)
    nesting = PropertyCheck.ok()
    coincide = PropertyCheck.ok()
    centers = PropertyCheck.ok()
    absorption = PropertyCheck.ok()
    partition = PropertyCheck.ok()
    prev_distinct: list[frozenset] = []
    prev_r: Fraction | None = None

    for r in radii:
        ball_of = {x: _ball(table, x, r) for x in pts}
        owner: dict[frozenset, set] = {}
        for x in pts:
            owner.setdefault(ball_of[x], set()).add(x)
        distinct = sorted(owner, key=lambda b: _id_key(min(b, key=_id_key)))
        if coincide.passed and sum(len(b) for b in distinct) != len(pts):
            for a_i, b1 in enumerate(distinct):
                for b2 in distinct[a_i + 1 :]:
                    if b1 & b2:
                        coincide = PropertyCheck.fail(
                            f"radius {r}: distinct balls {_fmt_set(b1)} and {_fmt_set(b2)} meet"
                        )
                        break
                if not coincide.passed:
                    break
        if centers.passed:
            # ball around every member of B equals B, i.e. the points whose
            # ball is B are exactly the members of B
            for b in distinct:
                if owner[b] != set(b):
                    y = min((set(b) - owner[b]) or (owner[b] - set(b)), key=_id_key)
                    centers = PropertyCheck.fail(
                        f"radius {r}: ball at {y} differs from the ball {_fmt_set(b)}"
                    )
                    break
        if absorption.passed:
            for s_set in {_closed_ball(table, y, r) for y in pts}:
                for x in s_set:
                    if not ball_of[x] <= s_set:
                        absorption = PropertyCheck.fail(
                            f"radius {r}: open ball at {x} leaves the closed ball "
                            f"{_fmt_set(s_set)}"
                        )
                        break
                if not absorption.passed:
                    break
        if partition.passed:
            union = frozenset().union(*distinct) if distinct else frozenset()
            if union != all_points or sum(len(b) for b in distinct) != len(pts):
                partition = PropertyCheck.fail(
                    f"radius {r}: the distinct balls do not partition the space"
                )
        if nesting.passed and prev_distinct:
            # a ball at the smaller radius sits inside the ball at the larger
            # radius around any of its members; with same-radius disjointness
            # this pins down every intersecting pair across any radius gap
            for b in prev_distinct:
                c = ball_of[next(iter(b))]
                if not b <= c:
                    nesting = PropertyCheck.fail(
                        f"radii {prev_r} <= {r}: ball {_fmt_set(b)} is not inside "
                        f"{_fmt_set(c)}"
                    )
                    break
        prev_distinct = distinct
        prev_r = r

    return BallPropertiesReport(
        PropertyCheck.ok(), nesting, coincide, centers, absorption, partition
    )


@dataclass(frozen=True)
class BaseEqualityReport:
    equality: PropertyCheck
    ball_system_size: int
    base_system_size: int

    @property
    def all_passed(self) -> bool:
        return self.equality.passed

    def as_json(self) -> dict:
        return {
            "equality": self.equality.as_json(),
            "ball_system_size": self.ball_system_size,
            "base_system_size": self.base_system_size,
            "passed": self.all_passed,
        }


def verify_base_equality(seq: CoverSequence, table: DistanceTable) -> BaseEqualityReport:
    """Ball system == all partition blocks plus the whole space.

    Open-ball radii follow the bracketing 1/(n+1) < r <= 1/n, which maps each
    radius band to one partition level; a single radius past the maximum
    distance realizes the whole space.
    """
    expected = ultrametric_from_covers(seq, seq.ground)
    if not expected.same_table(table):
        raise ValueError("table is not the ultrametric read off the cover sequence")
    balls = {
        _ball(table, x, r)
        for r in _radii(table, include_beyond_max=True)
        for x in table.points
    }
    base = {b for blocks in seq.levels for b in blocks} | {seq.ground}
    if balls == base:
        check = PropertyCheck.ok()
    elif balls - base:
        check = PropertyCheck.fail(
            f"ball {_fmt_set(next(iter(balls - base)))} is not a block or the whole space"
        )
    else:
        check = PropertyCheck.fail(
            f"block {_fmt_set(next(iter(base - balls)))} is not realized as a ball"
        )
    return BaseEqualityReport(check, len(balls), len(base))


def sierpinski_embed(seq: CoverSequence) -> dict:
    """Each point's stream of block indices, one digit per level.

    Two points share digit i exactly when level i keeps them together, so the
    first-difference distance of the images equals the separation ultrametric.
    """
    return {
        x: BairePrefix(tuple(seq.block_index_of(level, x) for level in range(seq.depth)))
        for x in sorted(seq.ground, key=_id_key)
    }
