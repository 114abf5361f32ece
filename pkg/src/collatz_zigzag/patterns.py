"""Run-length descriptions of rise/fall behaviour in integer trajectories."""

from __future__ import annotations

from dataclasses import dataclass

INCREASING = "increasing"
DECREASING = "decreasing"
FIXED = "fixed"


@dataclass(frozen=True)
class Pattern:
    """A target shape for a trajectory: alternating strictly-monotone runs,
    always starting with an increase.

    ``runs[i]`` is the length of run ``i+1``; odd-numbered runs (first,
    third, ...) go strictly up, even-numbered runs strictly down.
    """

    runs: tuple[int, ...]

    def __post_init__(self):
        runs = tuple(int(v) for v in self.runs)
        if not runs:
            raise ValueError("pattern must contain at least one run")
        for i, v in enumerate(runs):
            if v < 1:
                raise ValueError(f"run length must be >= 1, got {v} at index {i}")
        object.__setattr__(self, "runs", runs)

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)

    @property
    def total_steps(self) -> int:
        """Number of trajectory steps the pattern constrains."""
        return sum(self.runs)


@dataclass(frozen=True)
class PatternRLE:
    """Maximal-run encoding of the direction changes observed in a trajectory
    prefix.

    ``leading_direction`` is the direction of the first run ("increasing",
    "decreasing", or "fixed" when the trajectory never moved).  ``truncated``
    is True when the step budget ran out mid-run, in which case the final
    entry of ``runs`` is a lower bound rather than a completed run.
    """

    leading_direction: str
    runs: tuple[int, ...]
    truncated: bool = False

    def __post_init__(self):
        if self.leading_direction not in (INCREASING, DECREASING, FIXED):
            raise ValueError(f"unknown direction {self.leading_direction!r}")
        runs = tuple(int(v) for v in self.runs)
        object.__setattr__(self, "runs", runs)
        if self.leading_direction == FIXED:
            if runs:
                raise ValueError("a fixed pattern has no runs")
        elif not runs:
            raise ValueError("a moving pattern needs at least one run")
        if any(v < 1 for v in runs):
            raise ValueError("run lengths must be >= 1")


def parse_pattern(text: str) -> Pattern:
    """Parse a comma-separated list of run lengths, e.g. ``"3,1,2"``."""
    parts = text.split(",") if text else []
    if not parts or any(not part.strip() for part in parts):
        raise ValueError("pattern must be a non-empty comma-separated list of run lengths")
    try:
        runs = tuple(int(part) for part in parts)
    except ValueError:
        raise ValueError(
            f"invalid pattern {text!r}: run lengths must be decimal integers"
        ) from None
    return Pattern(runs)


def as_pattern(pattern) -> Pattern:
    """Coerce a Pattern or any sequence of run lengths into a Pattern."""
    if isinstance(pattern, Pattern):
        return pattern
    return Pattern(tuple(pattern))
