"""Entropy-rate and mutual-information-rate estimation from match lengths.

The estimator is n*log2(n) / sum(Lambda_i), where Lambda_i is one plus the
length of the longest substring starting at position i that also occurs
starting at some earlier position (the occurrence may run past i, but the
substring must stay inside the sequence). Joint rates are estimated on the
product-alphabet pairing of two sequences, and the mutual rate is the
inclusion-exclusion combination of the three estimates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AlignmentError, InsufficientDataError

DEFAULT_MIN_LENGTH = 500

# finite-sample overshoot above log2(alphabet) tolerated before flagging
OVERSHOOT_FRACTION = 0.10


@dataclass(frozen=True)
class LzEstimate:
    """Entropy-rate estimate in bits per symbol."""

    value: float
    n: int
    alphabet_size: int

    @property
    def overshoot_flagged(self) -> bool:
        """True when the estimate exceeds log2(alphabet) by more than 10%."""
        cap = np.log2(self.alphabet_size) if self.alphabet_size > 1 else 0.0
        return self.value > cap * (1.0 + OVERSHOOT_FRACTION) + 1e-12


@dataclass(frozen=True)
class JointSequence:
    """Product-alphabet pairing of two equal-length symbol sequences."""

    symbols: np.ndarray
    component_alphabets: tuple[int, int]

    @property
    def alphabet_size(self) -> int:
        ax, ay = self.component_alphabets
        return ax * ay

    def components(self) -> tuple[np.ndarray, np.ndarray]:
        """Recover the two component sequences (base-ax decomposition)."""
        ax, _ = self.component_alphabets
        return self.symbols % ax, self.symbols // ax


def _suffix_array(seq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Suffix array and inverse (rank) array by prefix doubling."""
    n = seq.size
    _, rank = np.unique(seq, return_inverse=True)
    rank = rank.astype(np.int64)
    k = 1
    while rank.max() != n - 1:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        order = np.lexsort((second, rank))
        r_o, s_o = rank[order], second[order]
        changed = np.ones(n, dtype=bool)
        changed[1:] = (r_o[1:] != r_o[:-1]) | (s_o[1:] != s_o[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(changed) - 1
        rank = new_rank
        k *= 2
    sa = np.empty(n, dtype=np.int64)
    sa[rank] = np.arange(n)
    return sa, rank


def _lcp_array(seq: np.ndarray, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """Kasai LCP array: lcp[r] = LCP of suffixes sa[r-1] and sa[r]."""
    n = seq.size
    s = seq.tolist()
    sa_l, rank_l = sa.tolist(), rank.tolist()
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank_l[i]
        if r > 0:
            j = sa_l[r - 1]
            while i + h < n and j + h < n and s[i + h] == s[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return np.asarray(lcp, dtype=np.int64)


def _longest_previous_factor(sa: np.ndarray, lcp: np.ndarray) -> np.ndarray:
    """Longest-previous-factor array from SA/LCP with one stack pass.

    lpf[i] is the length of the longest prefix of the suffix at i that also
    occurs starting at some position < i (the occurrence may overlap i).
    """
    n = sa.size
    sa_l = sa.tolist() + [-1]
    lcp_l = lcp.tolist() + [0]
    lpf = [0] * n
    stack: list[list[int]] = []  # [text position, lcp with stack below]
    for r in range(n + 1):
        pos, here = sa_l[r], lcp_l[r]
        while stack and (
            pos < stack[-1][0] or (pos > stack[-1][0] and here <= stack[-1][1])
        ):
            top_pos, top_lcp = stack.pop()
            if pos < top_pos:
                lpf[top_pos] = max(top_lcp, here)
                here = min(top_lcp, here)
            else:
                lpf[top_pos] = top_lcp
        if r < n:
            stack.append([pos, here])
    return np.asarray(lpf, dtype=np.int64)


def match_lengths(seq) -> np.ndarray:
    """Per-position match lengths Lambda_i of an integer sequence.

    Lambda at the first position is 1 by convention. For later positions it
    is 1 + the longest common prefix between the suffix starting there and
    any suffix starting earlier, so a match may extend past its own start
    but never past the end of the sequence.
    """
    seq = np.asarray(seq, dtype=np.int64)
    n = seq.size
    if n < 2:
        raise InsufficientDataError(
            f"match lengths need at least 2 symbols, got {n}"
        )
    sa, rank = _suffix_array(seq)
    lcp = _lcp_array(seq, sa, rank)
    return 1 + _longest_previous_factor(sa, lcp)


def _check_length(n: int, min_length: int, allow_short: bool) -> None:
    if n < min_length:
        if not allow_short:
            raise InsufficientDataError(
                f"sequence length {n} is below the minimum {min_length}; "
                "pass allow_short=True to estimate anyway"
            )
        warnings.warn(
            f"entropy-rate estimate on only {n} symbols (minimum {min_length}); "
            "expect substantial finite-sample bias",
            stacklevel=3,
        )


def entropy_rate(
    seq,
    alphabet_size: int | None = None,
    *,
    min_length: int = DEFAULT_MIN_LENGTH,
    allow_short: bool = False,
) -> LzEstimate:
    """Match-length entropy-rate estimate, in bits per symbol."""
    symbols = seq.symbols if hasattr(seq, "symbols") else seq
    symbols = np.asarray(symbols, dtype=np.int64)
    n = symbols.size
    if n < 2:
        raise InsufficientDataError("entropy rate needs at least 2 symbols")
    _check_length(n, min_length, allow_short)
    if alphabet_size is None:
        if hasattr(seq, "alphabet_size"):
            alphabet_size = seq.alphabet_size
        else:
            alphabet_size = int(symbols.max()) + 1
    lam = match_lengths(symbols)
    value = n * np.log2(n) / float(lam.sum())
    return LzEstimate(value=float(value), n=n, alphabet_size=int(alphabet_size))


def _as_symbols(seq) -> tuple[np.ndarray, int]:
    symbols = np.asarray(seq.symbols if hasattr(seq, "symbols") else seq, dtype=np.int64)
    if hasattr(seq, "alphabet_size"):
        alpha = int(seq.alphabet_size)
    else:
        alpha = int(symbols.max()) + 1 if symbols.size else 0
    return symbols, alpha


def join(x, y) -> JointSequence:
    """Pair two sequences into one over the product alphabet: z = x + y*ax."""
    xs, ax = _as_symbols(x)
    ys, ay = _as_symbols(y)
    if xs.size != ys.size:
        raise AlignmentError(
            f"cannot join sequences of lengths {xs.size} and {ys.size}"
        )
    return JointSequence(symbols=xs + ys * ax, component_alphabets=(ax, ay))


def joint_entropy_rate(
    x,
    y,
    *,
    min_length: int = DEFAULT_MIN_LENGTH,
    allow_short: bool = False,
) -> LzEstimate:
    """Entropy rate of the product-alphabet pairing of x and y."""
    z = join(x, y)
    return entropy_rate(
        z.symbols,
        alphabet_size=z.alphabet_size,
        min_length=min_length,
        allow_short=allow_short,
    )


def mutual_lz(
    x,
    y,
    *,
    min_length: int = DEFAULT_MIN_LENGTH,
    allow_short: bool = False,
) -> float:
    """Mutual complexity HR(x) + HR(y) - HR(x,y), unclamped.

    May be transiently negative at finite n; callers that need a
    non-negative rate clamp downstream.
    """
    hx = entropy_rate(x, min_length=min_length, allow_short=allow_short)
    hy = entropy_rate(y, min_length=min_length, allow_short=allow_short)
    hxy = joint_entropy_rate(x, y, min_length=min_length, allow_short=allow_short)
    return hx.value + hy.value - hxy.value
