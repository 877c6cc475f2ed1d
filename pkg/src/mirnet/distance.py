"""Pairwise distance matrices: correlation baseline and MIR-based metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import lz
from .errors import AlignmentError, DegeneratePairError, UndefinedCorrelationError
from .ingest import ReturnSeries, SymbolSequence

METHODS = ("correlation", "mir", "mir_prime")


@dataclass
class DistanceMatrix:
    """Symmetric distance matrix over a labelled instrument set."""

    tickers: tuple[str, ...]
    method: str
    values: np.ndarray
    params: dict = field(default_factory=dict)
    # pairs whose raw mutual complexity was negative before clamping
    clamped_pairs: int = 0
    total_pairs: int = 0

    @property
    def n(self) -> int:
        return len(self.tickers)

    @property
    def clamp_fraction(self) -> float:
        return self.clamped_pairs / self.total_pairs if self.total_pairs else 0.0

    def to_delimited(self, delimiter: str = ",") -> str:
        """Matrix as delimited text with tickers on both axes."""
        lines = [delimiter.join(["", *self.tickers])]
        for t, row in zip(self.tickers, self.values):
            lines.append(delimiter.join([t, *(f"{v:.10g}" for v in row)]))
        return "\n".join(lines) + "\n"

    def report(self) -> dict:
        """Structured description of the matrix and how it was built."""
        return {
            "method": self.method,
            "params": self.params,
            "tickers": list(self.tickers),
            "n": self.n,
            "independent_pairs": self.n * (self.n - 1) // 2,
            "clamped_pairs": self.clamped_pairs,
            "clamp_fraction": self.clamp_fraction,
        }


def _returns(x) -> np.ndarray:
    return np.asarray(x.returns if isinstance(x, ReturnSeries) else x, dtype=float)


def pearson(x, y) -> float:
    """Sample Pearson correlation of two equal-length return series."""
    xs, ys = _returns(x), _returns(y)
    if xs.size != ys.size:
        raise AlignmentError(f"length mismatch: {xs.size} vs {ys.size}")
    if xs.size < 2:
        raise AlignmentError("correlation needs at least 2 observations")
    xd, yd = xs - xs.mean(), ys - ys.mean()
    vx, vy = float(xd @ xd), float(yd @ yd)
    if vx == 0.0 or vy == 0.0:
        raise UndefinedCorrelationError("correlation undefined for a constant series")
    return float(xd @ yd / math.sqrt(vx * vy))


def corr_distance(x, y, *, variant: str = "one_minus_r2") -> float:
    """Correlation distance: 1 - rho^2, or sqrt(2(1-rho)) under variant='sqrt'."""
    rho = pearson(x, y)
    if variant == "sqrt":
        return math.sqrt(max(0.0, 2.0 * (1.0 - rho)))
    return 1.0 - rho * rho


def _symbols(x) -> SymbolSequence:
    if not isinstance(x, SymbolSequence):
        raise TypeError("MIR distances require discretized SymbolSequence inputs")
    return x


def _rates(x: SymbolSequence, y: SymbolSequence, allow_short: bool, min_length: int):
    if len(x) != len(y):
        raise AlignmentError(f"length mismatch: {len(x)} vs {len(y)}")
    hx = lz.entropy_rate(x, min_length=min_length, allow_short=allow_short).value
    hy = lz.entropy_rate(y, min_length=min_length, allow_short=allow_short).value
    hxy = lz.joint_entropy_rate(
        x, y, min_length=min_length, allow_short=allow_short
    ).value
    raw_mir = hx + hy - hxy
    return hx, hy, hxy, raw_mir


def _check_degenerate(x, y, zero_for_degenerate):
    both_constant = len(np.unique(x.symbols)) <= 1 and len(np.unique(y.symbols)) <= 1
    if both_constant:
        if zero_for_degenerate:
            return True
        raise DegeneratePairError(
            f"pair ({x.ticker}, {y.ticker}): both sequences constant, "
            "MIR distance undefined"
        )
    return False


def mir_distance(
    x,
    y,
    *,
    allow_short: bool = False,
    min_length: int = lz.DEFAULT_MIN_LENGTH,
    zero_for_degenerate: bool = False,
) -> float:
    """Normalized MIR distance D = (HR(x,y) - MIR) / HR(x,y), in [0, 1].

    MIR is the mutual complexity clamped at zero, so D(x,x) is exactly 0 and
    independent pairs approach 1.
    """
    x, y = _symbols(x), _symbols(y)
    if _check_degenerate(x, y, zero_for_degenerate):
        return 0.0
    _, _, hxy, raw_mir = _rates(x, y, allow_short, min_length)
    mir = max(0.0, raw_mir)
    d = hxy - mir
    return min(1.0, max(0.0, d / hxy))


def mir_prime_distance(
    x,
    y,
    *,
    allow_short: bool = False,
    min_length: int = lz.DEFAULT_MIN_LENGTH,
    zero_for_degenerate: bool = False,
) -> float:
    """Variant distance D' = 1 - MIR / max(HR(x), HR(y)); always <= D."""
    x, y = _symbols(x), _symbols(y)
    if _check_degenerate(x, y, zero_for_degenerate):
        return 0.0
    hx, hy, _, raw_mir = _rates(x, y, allow_short, min_length)
    mir = max(0.0, raw_mir)
    return min(1.0, max(0.0, 1.0 - mir / max(hx, hy)))


def build_matrix(
    series,
    method: str,
    *,
    corr_variant: str = "one_minus_r2",
    allow_short: bool = False,
    min_length: int = lz.DEFAULT_MIN_LENGTH,
    zero_for_degenerate: bool = False,
) -> DistanceMatrix:
    """Fill the n(n-1)/2 pairwise distances for one method.

    For MIR methods the per-instrument entropy rates are computed once and
    reused across pairs, and the matrix records how many pairs needed the
    negative-mutual-complexity clamp.
    """
    series = list(series)
    n = len(series)
    if n < 3:
        raise AlignmentError(f"need at least 3 instruments, got {n}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    tickers = tuple(s.ticker for s in series)
    values = np.zeros((n, n), dtype=float)
    clamped = 0
    params: dict = {}

    if method == "correlation":
        params["variant"] = corr_variant
        for i in range(n):
            for j in range(i + 1, n):
                try:
                    d = corr_distance(series[i], series[j], variant=corr_variant)
                except Exception as exc:
                    raise type(exc)(
                        f"pair ({tickers[i]}, {tickers[j]}): {exc}"
                    ) from exc
                values[i, j] = values[j, i] = d
    else:
        alphas = {s.alphabet_size for s in series}
        if len(alphas) != 1:
            raise AlignmentError(f"mixed alphabet sizes in one matrix: {sorted(alphas)}")
        params["alphabet_size"] = alphas.pop()
        marginal = [
            lz.entropy_rate(s, min_length=min_length, allow_short=allow_short).value
            for s in series
        ]
        for i in range(n):
            for j in range(i + 1, n):
                x, y = series[i], series[j]
                try:
                    if _check_degenerate(x, y, zero_for_degenerate):
                        values[i, j] = values[j, i] = 0.0
                        continue
                    hxy = lz.joint_entropy_rate(
                        x, y, min_length=min_length, allow_short=allow_short
                    ).value
                    raw_mir = marginal[i] + marginal[j] - hxy
                    if raw_mir < 0.0:
                        clamped += 1
                    mir = max(0.0, raw_mir)
                    if method == "mir":
                        d = (hxy - mir) / hxy
                    else:
                        d = 1.0 - mir / max(marginal[i], marginal[j])
                except Exception as exc:
                    raise type(exc)(
                        f"pair ({tickers[i]}, {tickers[j]}): {exc}"
                    ) from exc
                values[i, j] = values[j, i] = min(1.0, max(0.0, d))

    return DistanceMatrix(
        tickers=tickers,
        method=method,
        values=values,
        params=params,
        clamped_pairs=clamped,
        total_pairs=n * (n - 1) // 2,
    )
