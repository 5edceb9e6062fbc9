import os
import sys

from tensorboardX import SummaryWriter

from lbs_parens.bench import bench_run, check_linearity, records_to_jsonl, render_table
from lbs_parens.config import SWEEP, SWEEP_SIZES

algo = os.environ.get("LBS_ALGO", SWEEP.algo)
kind = os.environ.get("LBS_KIND", SWEEP.kind)

writer = SummaryWriter(f"runs/sweep_{algo}_{kind}", flush_secs=5)

records = bench_run(SWEEP_SIZES, algo, kind, SWEEP.seed, SWEEP.repeats, SWEEP, writer)
report = check_linearity(records, SWEEP.threshold)

writer.add_scalar("max_ratio", report.max_ratio, 0)
writer.close()

print(render_table(records))
print(records_to_jsonl(records))
print(f"max/min per-char time {report.max_ratio:.2f}, linear: {report.passed}")

sys.exit(0 if report.passed else 3)
