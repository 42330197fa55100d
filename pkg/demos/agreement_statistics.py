"""Agreement statistics on a synthetic paired series with a known bias and scale error.

Run: python demos/agreement_statistics.py
"""

import logging

import numpy as np

from torsoflow import metrics as M

logging.basicConfig(level=logging.INFO, format="%(message)s")
log = logging.getLogger("demo")

rng = np.random.default_rng(0)
original = rng.normal(1500.0, 250.0, 60)
generated = 0.92 * original + 90.0 + rng.normal(0.0, 60.0, 60)
s = M.PairedSeries(original, generated, "mL", "liver")

diff, excluded = M.diff_percent(s)
slope, r2 = M.ols_slope_r2(s)
bias, lo, hi = M.bland_altman(s)
t, p = M.paired_t_test(s)
log.info("Diff%%  %.2f (excluded %d)", diff, excluded)
log.info("OLS    slope %.3f, R^2 %.3f", slope, r2)
log.info("BA     bias %.1f mL, limits of agreement [%.1f, %.1f]", bias, lo, hi)
log.info("t-test t = %.3f, p = %.4f", t, p)
log.info("two-sided p for t = 2.262 with 9 df: %.4f", M.student_t_sf(2.262, 9))
