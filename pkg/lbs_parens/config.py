"""
Settings objects and presets shared by the oracle, bench harness and CLI
"""
import os

from dataclasses import dataclass, replace
from typing import Optional

# files larger than this are refused before being decoded
MAX_INPUT_CHARS = 2 ** 31


@dataclass(frozen=True)
class OracleConfig:
    ceiling: int = 2000

    @classmethod
    def from_env(cls):
        raw = os.environ.get("LBS_ORACLE_CEILING")
        if raw is None:
            return cls()
        return cls(ceiling=int(raw))


@dataclass(frozen=True)
class BenchConfig:
    threshold: float = 3.0
    repeats: int = 3
    min_size: int = 10_000
    timeout_s: Optional[float] = None
    algo: str = "lbsl"
    kind: str = "uniform"
    seed: int = 2021

    def with_overrides(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


ORACLE = OracleConfig.from_env()

# 1, 2, 4, 6, 8 and 10 million parentheses
SWEEP_SIZES = (1_000_000, 2_000_000, 4_000_000, 6_000_000, 8_000_000, 10_000_000)

SWEEP = BenchConfig(repeats=3, timeout_s=120.0)
