"""Run configurations shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import asdict, dataclass

SUITE_NAMES = ("relations", "staraction", "xbasis", "filtration", "kernel")


@dataclass(frozen=True)
class VerifyConfig:
    """Bounds for a verification run.

    ``slow`` adds the n=4 filtration checks and the (4,2) kernel case.
    ``timing`` adds per-suite wall times to every report, which makes the
    output depend on the machine.
    """

    suite: str = "all"
    max_n: int = 3
    max_m: int = 2
    slow: bool = False
    timing: bool = False

    def __post_init__(self):
        if self.suite not in (*SUITE_NAMES, "all"):
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.max_n < 1 or self.max_m < 1:
            raise ValueError("--max-n and --max-m must be positive")

    def suites(self) -> tuple[str, ...]:
        return SUITE_NAMES if self.suite == "all" else (self.suite,)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class KernelConfig:
    n: int
    m: int
    check_theorem: bool = False
    max_columns: int | None = None  # None: BRAUERLAB_MAX_COLUMNS or 2^24

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")

    @property
    def columns(self) -> int:
        return (2 * self.m) ** (2 * self.n)
