"""Run the full command lifecycle on a toy configuration in a temporary directory.

gen-cohort -> train stages 1..3 -> sample -> evaluate, exactly as the CLI does,
with a few training steps so it finishes in well under a minute. The numbers
are meaningless at this size; the point is the file layout and the report.

Run: python demos/tiny_cascade_lifecycle.py
"""

import logging
import tempfile
from pathlib import Path

from torsoflow import cli

logging.basicConfig(level=logging.INFO, format="%(message)s")
log = logging.getLogger("demo")

CONFIG = "[grid]\nhigh_extents = 16, 16, 24\nspacing_mm = 8.0\n[run]\npatch_batch = 27\n" + "".join(
    f"[stage{k}.model]\nbase_channels = 4\ngroups = 2\n[stage{k}.train]\nsteps = 20\nbatch_size = 2\nlr = 0.001\n"
    f"[stage{k}.sampler]\nsolver = euler\nn_steps = 10\n"
    for k in (1, 2, 3)
)

with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    cfg = root / "tiny.ini"
    cfg.write_text(CONFIG)

    def run(*argv):
        code = cli.main(["--threads", "1", *map(str, argv)])
        if code:
            raise SystemExit(code)

    run("gen-cohort", "--n", 14, "--seed", 3, "--n-test", 6, "--out", root / "cohort", "--config", cfg)
    for k in (1, 2, 3):
        run("train", "--stage", k, "--config", cfg, "--cohort", root / "cohort", "--out", root / "ckpt" / f"stage{k}")
    run("sample", "--checkpoints", root / "ckpt", "--cohort", root / "cohort", "--split", "test", "--seed", 0,
        "--out", root / "generated", "--config", cfg)
    run("evaluate", "--cohort", root / "cohort", "--generated", root / "generated", "--out", root / "report")
    log.info("files written:")
    for p in sorted(root.rglob("*")):
        if p.is_file() and "cohort" not in p.parts:
            log.info("  %s", p.relative_to(root))
