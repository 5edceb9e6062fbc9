"""
Timing harness: run the linear algorithms over growing inputs and check that
the time per character stays flat.
"""
import json
import logging
import time
from multiprocessing import TimeoutError
from multiprocessing.pool import ThreadPool

import numpy as np
from dataclasses import dataclass
from tensorboardX import SummaryWriter
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .config import BenchConfig, ORACLE
from .core import ParenError
from .gen import GenKind, GenSpec, gen_string
from .linear import lbs_linear, lbsl_linear
from .oracle import OracleLimitError, lbsl_spec

logger = logging.getLogger(__name__)

ALGOS: Dict[str, Callable[[str], object]] = {
    "lbsl": lbsl_linear,
    "lbs": lbs_linear,
    "oracle": lbsl_spec,
}


class BenchError(ParenError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    size: int
    wall_time: Optional[float]
    per_char: Optional[float]
    algo: str
    kind: str
    seed: int
    status: str = "ok"
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "wall_time_s": self.wall_time,
            "per_char_ns": None if self.per_char is None else self.per_char * 1e9,
            "algo": self.algo,
            "kind": self.kind,
            "seed": self.seed,
            "status": self.status,
        }


@dataclass(frozen=True)
class LinearityReport:
    records: Tuple[BenchRecord, ...]
    max_ratio: float
    threshold: float
    passed: bool


def _timed(fn: Callable[[str], object], text: str) -> float:
    start = time.perf_counter()
    fn(text)
    return time.perf_counter() - start


def _failed(size, algo, kind, seed, status, error=None) -> BenchRecord:
    logger.warning("size %d: %s %s", size, status, error or "")
    return BenchRecord(size, None, None, algo, kind, seed, status, error)


def bench_run(sizes: Sequence[int],
              algo: str = "lbsl",
              kind: str = "uniform",
              seed: int = 2021,
              repeats: int = 3,
              config: Optional[BenchConfig] = None,
              writer: Optional[SummaryWriter] = None) -> List[BenchRecord]:
    """Best-of-`repeats` wall time per size, input generation excluded.

    A run over config.timeout_s or out of memory becomes a failed record; after
    a timeout the worker is still busy, so the remaining sizes are skipped.
    """
    config = config or BenchConfig()

    if not sizes:
        raise BenchError("no sizes to run")
    if repeats < 1:
        raise BenchError(f"repeats must be at least 1, got {repeats}")
    small = [n for n in sizes if n < config.min_size]
    if small:
        raise BenchError(f"sizes below {config.min_size}: {small}")
    if algo not in ALGOS:
        raise BenchError(f"unknown algorithm {algo!r}")
    if algo == "oracle" and max(sizes) > ORACLE.ceiling:
        raise OracleLimitError(max(sizes), ORACLE.ceiling)
    try:
        kind = GenKind(kind).value
    except ValueError:
        raise BenchError(f"unknown input kind {kind!r}") from None

    fn = ALGOS[algo]
    pool = ThreadPool(1)
    records = []
    stalled = False

    for n in sizes:
        if stalled:
            records.append(_failed(n, algo, kind, seed, "skipped"))
            continue

        try:
            text = gen_string(GenSpec(kind, n, seed))
            best = min(pool.apply_async(_timed, (fn, text)).get(config.timeout_s) for _ in range(repeats))
        except TimeoutError:
            stalled = True
            records.append(_failed(n, algo, kind, seed, "timeout", f"over {config.timeout_s} s"))
            continue
        except MemoryError as e:
            records.append(_failed(n, algo, kind, seed, "memory", str(e)))
            continue

        record = BenchRecord(n, best, best / n, algo, kind, seed)
        records.append(record)
        logger.info("%s on %d %s characters: %.3f s", algo, n, kind, best)

        if writer is not None:
            writer.add_scalar("wall_time_s", best, n)
            writer.add_scalar("per_char_ns", best / n * 1e9, n)

    if stalled:
        pool.terminate()
    else:
        pool.close()
        pool.join()
    return records


def check_linearity(records: Sequence[BenchRecord], threshold: float = 3.0) -> LinearityReport:
    if not records:
        raise BenchError("no records to check")
    if len({(r.algo, r.kind) for r in records}) > 1:
        raise BenchError("records mix algorithms or input kinds")

    ok = [r for r in records if r.ok]
    if not ok:
        return LinearityReport(tuple(records), float("inf"), threshold, False)

    per_char = np.array([r.per_char for r in ok], dtype=np.float64)
    max_ratio = float(per_char.max() / per_char.min())
    passed = max_ratio <= threshold and len(ok) == len(records)
    return LinearityReport(tuple(records), max_ratio, threshold, passed)


def records_to_jsonl(records: Sequence[BenchRecord]) -> str:
    return "\n".join(json.dumps(r.to_json()) for r in records)


def render_table(records: Sequence[BenchRecord]) -> str:
    """Sizes across, one row of times under them."""
    def fmt(value, spec):
        return "-" if value is None else format(value, spec)

    rows = [
        ["input size (M)"] + [format(r.size / 1e6, "g") for r in records],
        ["wall time (sec.)"] + [fmt(r.wall_time, ".3f") for r in records],
        ["per char (ns)"] + [fmt(None if r.per_char is None else r.per_char * 1e9, ".1f") for r in records],
    ]

    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        head, *cells = row
        line = "| " + head.ljust(widths[0]) + " | "
        line += " ".join(cell.rjust(w) for cell, w in zip(cells, widths[1:]))
        lines.append(line + " |")

    rule = "+" + "-" * (len(lines[0]) - 2) + "+"
    return "\n".join([rule, lines[0], rule, *lines[1:], rule])
