"""Measure the quasi-isometry behavior of the decompositions empirically.

For each word-length bucket the campaign records the worst ratio of factor
log-norm to input log-norm.  The guaranteed growth bound must never be
violated, and the per-bucket maxima should plateau rather than trend upward;
the plateau level is the empirical analogue of the norm-control constant.
"""

from qibg import harness

config = harness.CampaignConfig(
    n=3,
    word_lengths=(5, 10, 15, 20, 25, 30, 35, 40),
    samples_per_length=125,
    seed=7,
)
report = harness.run_campaign(config)

print(f"{len(report.samples)} samples decomposed and verified")
print("guaranteed-bound violations:", report.violations)
print("max ratio per word length:")
for length, ratio in report.max_ratio_by_length:
    print(f"   {length:3d}: {ratio:.3f}")
print("factor-count histogram:", dict(report.factor_count_histogram))
print("empirical constant:", round(report.empirical_constant, 3))
print("stability check:", "pass" if report.stable else "FAIL")
print()

# Compare the two strategies sample by sample; the clockwise strategy must
# never touch a class it has already annihilated.
comparison = harness.compare_strategies(
    harness.CampaignConfig(n=3, word_lengths=(10, 20, 30), samples_per_length=25,
                           seed=3))
print(f"{len(comparison.samples)} samples decomposed by both strategies")
print("all verified:", comparison.all_verified)
print("total clockwise re-annihilations:", comparison.total_reannihilations)
worst_cm = max(s.column_major_ratio for s in comparison.samples)
worst_cw = max(s.clockwise_ratio for s in comparison.samples)
print(f"worst ratio: column-major {worst_cm:.3f}, clockwise {worst_cw:.3f}")
