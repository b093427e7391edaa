from fractions import Fraction

import pytest

from qibg import rootsys as rt

EXPECTED_COUNTS = [
    ("A", 2, 6), ("A", 5, 30), ("B", 2, 8), ("B", 4, 32), ("C", 3, 18),
    ("D", 4, 24), ("BC", 1, 4), ("BC", 3, 24), ("G2", 2, 12), ("F4", 4, 48),
    ("E6", 6, 72), ("E7", 7, 126), ("E8", 8, 240),
]


@pytest.mark.parametrize("family,rank,count", EXPECTED_COUNTS)
def test_root_counts(family, rank, count):
    rs = rt.build(family, rank)
    assert len(rs.roots) == count
    assert len(rs.simple_roots) == rank


@pytest.mark.parametrize("family,rank,count", EXPECTED_COUNTS)
def test_negation_closure(family, rank, count):
    rs = rt.build(family, rank)
    roots = set(rs.roots)
    for r in roots:
        assert tuple(-c for c in r) in roots


def test_invalid_family_rank():
    for family, rank in (("D", 2), ("E6", 5), ("G2", 3), ("A", 0), ("X", 1)):
        with pytest.raises(ValueError):
            rt.build(family, rank)


def test_a2_roots_explicit():
    rs = rt.build("A", 2)
    expect = set()
    for i in range(3):
        for j in range(3):
            if i != j:
                v = [Fraction(0)] * 3
                v[i], v[j] = Fraction(1), Fraction(-1)
                expect.add(tuple(v))
    assert set(rs.roots) == expect


def test_bc1_root_multiples():
    rs = rt.build("BC", 1)
    assert set(rs.roots) == {(Fraction(1),), (Fraction(-1),),
                             (Fraction(2),), (Fraction(-2),)}


def test_g2_length_ratio():
    rs = rt.build("G2", 2)
    sq = sorted({sum(c * c for c in r) for r in rs.roots})
    assert len(sq) == 2 and sq[1] / sq[0] == 3
    longs = [r for r in rs.roots if sum(c * c for c in r) == sq[1]]
    assert len(longs) == 6


def test_bc_only_proportional_pairs_are_doubles():
    rs = rt.build("BC", 2)
    for r in rs.roots:
        doubled = tuple(2 * c for c in r)
        halved = tuple(c / 2 for c in r)
        for s in rs.roots:
            if s in (r, tuple(-c for c in r)):
                continue
            if rt._parallel(tuple(int(2 * c) for c in r), tuple(int(2 * c) for c in s)):
                assert s in (doubled, halved, tuple(-c for c in doubled),
                             tuple(-c for c in halved))


# --- projections --------------------------------------------------------------


def test_projection_rejects_real_axis_hit():
    rs = rt.build("A", 2)
    # w orthogonal to e1 - e2 sends that root to the real axis
    proj = rt.Projection(u=(1, 2, 5), w=(1, 1, 0))
    assert not rt.is_valid_projection(rs, proj)
    with pytest.raises(rt.InvalidProjectionError):
        rt.positive_roots(rs, proj)


def test_projection_rejects_merged_lines():
    rs = rt.build("A", 2)
    # u = w collapses every image onto one line through the diagonal
    proj = rt.Projection(u=(3, 1, 0), w=(3, 1, 0))
    assert not rt.is_valid_projection(rs, proj)


def test_bc1_projection_allows_shared_line():
    rs = rt.build("BC", 1)
    proj = rt.sample_projection(rs, 0)
    assert rt.is_valid_projection(rs, proj)
    ordering = rt.class_ordering(rs, proj)
    assert len(ordering.positive_classes) == 1
    assert len(ordering.positive_classes[0]) == 2


def test_sample_projection_deterministic_snapshot():
    rs = rt.build("A", 2)
    proj = rt.sample_projection(rs, 1)
    assert proj == rt.Projection(u=(-725, 165, 735), w=(643, 564, -871))


def test_positive_roots_half_and_closed():
    for family, rank in (("A", 2), ("B", 2), ("G2", 2), ("BC", 2)):
        rs = rt.build(family, rank)
        for seed in range(5):
            proj = rt.sample_projection(rs, seed)
            pos = rt.positive_roots(rs, proj)
            assert len(pos) == len(rs.roots) // 2
            assert rt.is_closed(pos, rs)
            neg = {tuple(-c for c in r) for r in pos}
            assert pos | neg == set(rs.roots) and not (pos & neg)


def test_g2_positive_closedness_brute_force():
    rs = rt.build("G2", 2)
    proj = rt.sample_projection(rs, 11)
    pos = rt.positive_roots(rs, proj)
    allroots = set(rs.roots)
    for a in pos:
        for b in pos:
            s = tuple(x + y for x, y in zip(a, b))
            if s in allroots:
                assert s in pos


# --- class orderings -----------------------------------------------------------


def test_a2_has_three_singleton_classes():
    rs = rt.build("A", 2)
    for seed in range(10):
        ordering = rt.class_ordering(rs, rt.sample_projection(rs, seed))
        assert len(ordering.positive_classes) == 3
        assert all(len(c) == 1 for c in ordering.positive_classes)


def test_b2_has_four_classes():
    rs = rt.build("B", 2)
    ordering = rt.class_ordering(rs, rt.sample_projection(rs, 2))
    assert len(ordering.positive_classes) == 4


def test_angles_strictly_decreasing_in_upper_half():
    import math
    for family, rank in (("A", 3), ("BC", 2), ("G2", 2), ("F4", 4)):
        rs = rt.build(family, rank)
        ordering = rt.class_ordering(rs, rt.sample_projection(rs, 3))
        assert all(0 < a < math.pi for a in ordering.angles)
        assert all(a > b for a, b in zip(ordering.angles, ordering.angles[1:]))


def test_middle_ray_between_summands():
    # the ray of a sum of positive roots lies strictly between the two rays
    rs = rt.build("A", 2)
    for seed in range(20):
        ordering = rt.class_ordering(rs, rt.sample_projection(rs, seed))
        roots = [c[0] for c in ordering.positive_classes]
        s = tuple(a + b for a, b in zip(roots[0], roots[2]))
        assert roots[1] == s


# --- side sets ------------------------------------------------------------------


def test_side_set_boundary_conventions():
    rs = rt.build("B", 3)
    proj = rt.sample_projection(rs, 4)
    ordering = rt.class_ordering(rs, proj)
    k = len(ordering.positive_classes)
    pos = rt.positive_roots(rs, proj)
    assert rt.side_sets(ordering, rs, 0).right_pos == pos
    assert rt.side_sets(ordering, rs, 0).left_pos == frozenset()
    assert rt.side_sets(ordering, rs, 1).left_pos == frozenset()
    assert rt.side_sets(ordering, rs, k).right_pos == frozenset()
    assert rt.side_sets(ordering, rs, k + 1).left_pos == pos


def test_side_set_index_out_of_range():
    rs = rt.build("A", 2)
    ordering = rt.class_ordering(rs, rt.sample_projection(rs, 0))
    with pytest.raises(ValueError):
        rt.side_sets(ordering, rs, 6)


def test_a2_middle_class_sides_closed_brute_force():
    rs = rt.build("A", 2)
    allroots = set(rs.roots)
    for seed in range(10):
        ordering = rt.class_ordering(rs, rt.sample_projection(rs, seed))
        ss = rt.side_sets(ordering, rs, 2)
        for group in (ss.left, ss.right, ss.left_pos, ss.right_pos):
            for a in group:
                for b in group:
                    s = tuple(x + y for x, y in zip(a, b))
                    if s in allroots:
                        assert s in group


def test_g2_right_sets_closed_for_every_index():
    rs = rt.build("G2", 2)
    proj = rt.sample_projection(rs, 6)
    ordering = rt.class_ordering(rs, proj)
    for i in range(len(ordering.positive_classes) + 2):
        ss = rt.side_sets(ordering, rs, i)
        assert rt.is_closed(ss.right, rs)
        assert rt.is_closed(ss.left, rs)


def test_is_closed_examples():
    rs = rt.build("A", 2)
    proj = rt.sample_projection(rs, 0)
    pos = rt.positive_roots(rs, proj)
    assert rt.is_closed(pos, rs)
    roots = sorted(pos)
    # drop the middle (sum) root: {a, b} with a+b in the system is not closed
    ordering = rt.class_ordering(rs, proj)
    a = ordering.positive_classes[0][0]
    b = ordering.positive_classes[2][0]
    assert not rt.is_closed({a, b}, rs)


def test_is_closed_rejects_non_roots():
    rs = rt.build("A", 2)
    with pytest.raises(ValueError):
        rt.is_closed({(Fraction(7), Fraction(0), Fraction(0))}, rs)


# --- invariant verification -----------------------------------------------------


def test_huge_projection_coordinates_stay_exact():
    # coordinates large enough to overflow int64 products force the exact path
    rs = rt.build("A", 2)
    base = rt.sample_projection(rs, 1)
    big = 10 ** 14
    proj = rt.Projection(u=tuple(c * big for c in base.u),
                         w=tuple(c * big + 1 for c in base.w))
    if rt.is_valid_projection(rs, proj):
        rep = rt.verify_notation_invariants(rs, proj)
        assert rep.all_ok
        assert len(rt.class_ordering(rs, proj).positive_classes) == 3


def test_notation_invariants_a2():
    rs = rt.build("A", 2)
    for seed in range(20):
        rep = rt.verify_notation_invariants(rs, rt.sample_projection(rs, seed))
        assert rep.all_ok, rep.failures


def test_notation_invariants_bc2_many_seeds():
    rs = rt.build("BC", 2)
    for seed in range(100):
        rep = rt.verify_notation_invariants(rs, rt.sample_projection(rs, seed))
        assert rep.all_ok, rep.failures


def test_corrupted_side_set_is_caught():
    rs = rt.build("A", 2)
    proj = rt.sample_projection(rs, 1)
    ordering = rt.class_ordering(rs, proj)
    ss = rt.side_sets(ordering, rs, 2)
    pos = rt.positive_roots(rs, proj)
    cls = set(ordering.positive_classes[1])
    # move one root from the right side to the left side
    moved = next(iter(ss.right_pos))
    left_bad = set(ss.left_pos) | {moved}
    right_bad = set(ss.right_pos) - {moved}
    # the partition of the positives into left, class, right must now fail
    assert left_bad | cls | right_bad == pos
    ok_partition = (rt.side_sets(ordering, rs, 2).left_pos == frozenset(left_bad))
    assert not ok_partition
    # and at least one mutated set stops being closed here
    assert not (rt.is_closed(left_bad, rs) and rt.is_closed(right_bad, rs))


# --- bridge and serialization ----------------------------------------------------


def test_sl_class_ordering_is_standard():
    for n in (2, 3, 4, 5):
        ordering = rt.sl_class_ordering(n, seed=3)
        positions = rt.sl_block_positions(ordering)
        assert len(positions) == n * (n - 1) // 2
        assert all(1 <= a < b <= n for a, b in positions)
        assert len(set(positions)) == len(positions)


def test_sl_block_positions_rejects_nonstandard():
    rs = rt.build("A", 2)
    accepted = rejected = 0
    for seed in range(40):
        proj = rt.sample_projection(rs, seed)
        ordering = rt.class_ordering(rs, proj)
        try:
            positions = rt.sl_block_positions(ordering)
        except ValueError:
            rejected += 1
            continue
        accepted += 1
        assert all(a < b for a, b in positions)
    # generic projections hit standard and non-standard chambers alike
    assert accepted > 0 and rejected > 0


def test_json_dump_shape():
    rs = rt.build("BC", 1)
    obj = rt.root_system_to_json(rs)
    assert obj["family"] == "BC" and obj["rank"] == 1
    assert sorted(obj["roots"]) == sorted([["-1"], ["-2"], ["1"], ["2"]])


def test_ordering_report_and_svg():
    rs = rt.build("A", 2)
    proj = rt.sample_projection(rs, 1)
    rep = rt.ordering_report(rs, proj)
    assert rep["class_count"] == 3
    assert len(rep["side_sets"]) == 5
    svg = rt.render_rays_svg(rs, proj)
    assert svg.startswith("<svg") and svg.endswith("</svg>")
    assert svg.count("<line") >= 3
