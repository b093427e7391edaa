"""Project a root system to a generic plane and order its rays clockwise.

A generic linear map eta sends the roots into the plane with no root on the
real axis and distinct root lines kept apart.  Positive roots are the ones
landing in the upper half-plane; grouping them by ray and walking the rays
clockwise yields the class ordering whose left/right side sets are all
closed under root addition.  Every decision below is exact rational
arithmetic; the printed angles are cosmetic.
"""

from qibg import rootsys

for family, rank in (("A", 2), ("BC", 2), ("G2", 2)):
    rs = rootsys.build(family, rank)
    proj = rootsys.sample_projection(rs, seed=4)
    ordering = rootsys.class_ordering(rs, proj)
    k = len(ordering.positive_classes)
    print(f"{family}{rank}: {len(rs.roots)} roots, {k} clockwise classes")
    for idx, (cls, angle) in enumerate(
            zip(ordering.positive_classes, ordering.angles), start=1):
        reps = ", ".join(str(tuple(map(str, r))) for r in cls)
        print(f"   class {idx} (angle {angle:.3f}): {reps}")

    # side sets: everything strictly left / right of one class ray
    middle = (k + 1) // 2
    ss = rootsys.side_sets(ordering, rs, middle)
    print(f"   side sets at class {middle}: "
          f"{len(ss.left)} left, {len(ss.right)} right; "
          f"closed: {rootsys.is_closed(ss.left, rs)} / "
          f"{rootsys.is_closed(ss.right, rs)}")

    report = rootsys.verify_notation_invariants(rs, proj)
    print(f"   all ordering invariants hold: {report.all_ok}")
    print()

# The E8 system is the largest case: 240 roots, 120 rays.
rs = rootsys.build("E8", 8)
proj = rootsys.sample_projection(rs, seed=0)
report = rootsys.verify_notation_invariants(rs, proj)
print(f"E8: {report.class_count} classes, invariants hold: {report.all_ok}")

# Write a small figure of the projected rays for the G2 system.
rs = rootsys.build("G2", 2)
svg = rootsys.render_rays_svg(rs, rootsys.sample_projection(rs, seed=4))
with open("g2_rays.svg", "w") as fh:
    fh.write(svg)
print("wrote g2_rays.svg")
