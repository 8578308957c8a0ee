"""
From concentrations to an air-quality index
===========================================

The index alpha is the mean of concentration-to-threshold ratios, so
alpha = 1 sits exactly at the healthiness limit and alpha > 1 means at
least threshold-level pollution on average. Negative predictions are
clamped to zero first; the category bands are no_pollution (0),
some_pollution (0 < alpha <= 1) and unhealthy (> 1).
"""

from aqnet import DEFAULT_THRESHOLDS, compute_alpha, quantify

print("default thresholds (ug/m3):", DEFAULT_THRESHOLDS)

rows = [
    ("clean rural site", {"no2": 4.1, "o3": 38.0, "pm10": 6.5}),
    ("suburban site", {"no2": 9.8, "o3": 55.0, "pm10": 14.2}),
    ("busy intersection", {"no2": 17.39, "o3": 54.72, "pm10": 21.30}),
    ("sensor offline", {"no2": 0.0, "o3": 0.0, "pm10": 0.0}),
]

for label, values in rows:
    result = compute_alpha(values)
    print(f"{label:<20} alpha={result.alpha:5.3f}  {result.category}")

# The same alpha can be classified on its own, e.g. for model output.
print()
for alpha in (0.0, 0.42, 1.0, 1.357):
    print(f"alpha={alpha:<6} -> {quantify(alpha)}")

# Ratios are averaged, so one pollutant can push a site over the limit
# even when the others are fine:
spike = compute_alpha({"no2": 35.0, "o3": 10.0, "pm10": 5.0})
print()
print(f"NO2 spike alone: alpha={spike.alpha:.3f} ({spike.category})")

# Tighter thresholds reclassify the same measurements.
strict = {"no2": 5.0, "o3": 30.0, "pm10": 8.0}
relabeled = compute_alpha(rows[0][1], strict)
print(f"clean rural site under strict thresholds: alpha={relabeled.alpha:.3f} "
      f"({relabeled.category})")
