"""Reliability metrics and information-set selection.

Spectrum-based metrics (UBW, SUBW) come from the log-domain union-Bhattacharyya
bound; the classical baselines (Bhattacharyya recursion, Gaussian approximation
of LLR means, beta-expansion polarized weight) are included for comparison.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

from .errors import SpectrumFormatError
from .spectrum import d_min

BETA = 2.0 ** 0.25  # beta-expansion base of the PW baseline

# Design-SNR alpha (dB) used in the reference experiments, keyed by
# (metric, n, numerator/denominator of the rate).  Fallback is 4 dB.
DEFAULT_ALPHA_DB = {
    ("UBW", 7, (1, 2)): 4.0,
    ("SUBW", 7, (1, 2)): 4.0,
    ("UBW", 10, (1, 3)): 1.5,
    ("UBW", 10, (1, 2)): 4.0,
    ("UBW", 10, (2, 3)): 4.5,
    ("SUBW", 10, (1, 3)): 1.0,
    ("SUBW", 10, (1, 2)): 3.5,
    ("SUBW", 10, (2, 3)): 4.0,
    ("UBW", 12, (2, 3)): 4.5,
    ("SUBW", 12, (2, 3)): 3.5,
}

METRIC_NAMES = ("UBW", "SUBW", "BHATTACHARYYA", "GA", "PW")


def default_alpha_db(metric, n, K, N):
    from fractions import Fraction

    r = Fraction(K, N)
    return DEFAULT_ALPHA_DB.get((metric, n, (r.numerator, r.denominator)), 4.0)


@dataclass
class MetricVector:
    """Per-channel reliability values under one metric.

    higher_better records the orientation: PW and GA order channels by larger
    value, the bound-derived metrics and the Bhattacharyya recursion by smaller.
    """

    N: int
    metric_name: str
    values: List[float]
    higher_better: bool

    def __post_init__(self):
        if len(self.values) != self.N:
            raise ValueError("expected %d values" % self.N)
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("metric values must be finite")


@dataclass
class ReliabilitySequence:
    """Channel indices ordered most reliable first."""

    N: int
    metric_name: str
    param: Optional[float]
    order: List[int]

    def __post_init__(self):
        if sorted(self.order) != list(range(1, self.N + 1)):
            raise ValueError("order must be a permutation of [1, N]")


def log_enumerator(a):
    """Natural log of a positive big integer, <= 1e-12 relative error."""
    if a <= 0:
        raise ValueError("enumerator must be positive")
    return math.log(a)


def ubw(table, ln_z, exact_logsum=False):
    """Per-channel max_d { ln A(d) + d ln Z }; smaller is more reliable.

    exact_logsum replaces the max-term approximation with a true
    log-sum-exp, for sensitivity studies; the default matches the
    reference ordering.
    """
    if not ln_z < 0.0:
        raise ValueError("ln Z must be negative (Z in (0,1))")
    values = []
    for i in range(1, table.N + 1):
        terms = [log_enumerator(a) + d * ln_z for d, a in table.spectrum(i).nonzero()]
        top = max(terms)
        if exact_logsum:
            top += math.log(math.fsum(math.exp(t - top) for t in terms))
        values.append(top)
    return MetricVector(table.N, "UBW", values, higher_better=False)


def subw(table, ln_z):
    """Minimum-weight term only: ln A(d_min) + d_min ln Z."""
    if not ln_z < 0.0:
        raise ValueError("ln Z must be negative (Z in (0,1))")
    values = []
    for i in range(1, table.N + 1):
        ps = table.spectrum(i)
        dm = d_min(ps)
        values.append(log_enumerator(ps.counts[dm]) + dm * ln_z)
    return MetricVector(table.N, "SUBW", values, higher_better=False)


def bhattacharyya_construct(n, z0):
    """Recursive z- = 2z - z^2, z+ = z^2 in natural index order; smaller better.

    For a BEC with z0 = eps this reproduces the exact erasure probabilities.
    """
    if not 0.0 < z0 < 1.0:
        raise ValueError("initial Bhattacharyya parameter must be in (0, 1)")
    values = [z0]
    for _ in range(n):
        nxt = []
        for z in values:
            nxt.append(2.0 * z - z * z)
            nxt.append(z * z)
        values = nxt
    return MetricVector(1 << n, "BHATTACHARYYA", values, higher_better=False)


# Two-segment phi approximation of E[tanh(L/2)] for L ~ N(m, 2m); the usual
# fitted constants.  phi is decreasing on [0, inf) with phi(0) = 1.
_PHI_A, _PHI_B, _PHI_C = 0.4527, 0.86, 0.0218
_PHI_SWITCH = 10.0


def _phi(x):
    if x == 0.0:
        return 1.0
    if x < _PHI_SWITCH:
        return math.exp(-_PHI_A * x ** _PHI_B + _PHI_C)
    return math.sqrt(math.pi / x) * math.exp(-x / 4.0) * (1.0 - 10.0 / (7.0 * x))


def _phi_inv(y):
    if y >= 1.0:
        return 0.0
    # keep deep-polarization channels finite; below ~1e-320 phi underflows
    y = max(y, 1e-320)
    if y > _phi(_PHI_SWITCH):
        return ((_PHI_C - math.log(y)) / _PHI_A) ** (1.0 / _PHI_B)
    lo, hi = _PHI_SWITCH, _PHI_SWITCH
    while _phi(hi) > y:
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _phi(mid) > y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def ga_construct(n, es_n0):
    """Mean-LLR evolution under the Gaussian approximation; larger mean better.

    Initial mean 4 Es/N0; variable node doubles the mean, check node applies
    m -> phi_inv(1 - (1 - phi(m))^2).
    """
    if not es_n0 > 0.0:
        raise ValueError("Es/N0 must be positive (linear scale)")
    values = [4.0 * es_n0]
    for _ in range(n):
        nxt = []
        for m in values:
            p = _phi(m)
            # 2p - p^2 rather than 1 - (1-p)^2: avoids cancellation for tiny p
            nxt.append(_phi_inv(2.0 * p - p * p))
            nxt.append(2.0 * m)
        values = nxt
    return MetricVector(1 << n, "GA", values, higher_better=True)


def pw_construct(n):
    """Beta-expansion weight of the binary digits of i-1; larger better."""
    if n < 0:
        raise ValueError("n must be >= 0")
    N = 1 << n
    values = []
    for i in range(N):
        values.append(math.fsum(BETA ** k for k in range(n) if (i >> k) & 1))
    return MetricVector(N, "PW", values, higher_better=True)


def rank(metric, param=None):
    """Sort channels most reliable first; ties broken by larger index first."""
    sign = -1.0 if metric.higher_better else 1.0
    order = sorted(range(1, metric.N + 1), key=lambda i: (sign * metric.values[i - 1], -i))
    return ReliabilitySequence(metric.N, metric.metric_name, param, order)


def select_info_set(seq, K):
    """The K most reliable channel indices, ascending."""
    if not 0 <= K <= seq.N:
        raise ValueError("K must be in [0, N]")
    return tuple(sorted(seq.order[:K]))


# --- persistence -----------------------------------------------------------
#
#   polar-seq v1 N=<N> metric=<name> param=<value|none>
#   <index>            (one per line, most reliable first)

SEQ_MAGIC = "polar-seq v1"


def _format_param(param):
    return "none" if param is None else repr(float(param))


def save_sequence(seq, destination):
    lines = [
        "%s N=%d metric=%s param=%s"
        % (SEQ_MAGIC, seq.N, seq.metric_name, _format_param(seq.param))
    ]
    lines.extend(str(i) for i in seq.order)
    text = "\n".join(lines) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="ascii") as fh:
            fh.write(text)


def loads_sequence(text):
    lines = text.splitlines()
    if not lines:
        raise SpectrumFormatError("empty sequence file")
    head = lines[0].split()
    if (
        head[:2] != SEQ_MAGIC.split()
        or len(head) != 5
        or not head[2].startswith("N=")
        or not head[3].startswith("metric=")
        or not head[4].startswith("param=")
    ):
        raise SpectrumFormatError("bad sequence header: %r" % lines[0])
    try:
        N = int(head[2][2:])
    except ValueError:
        raise SpectrumFormatError("bad block length in sequence header") from None
    metric = head[3][len("metric="):]
    raw = head[4][len("param="):]
    try:
        param = None if raw == "none" else float(raw)
    except ValueError:
        raise SpectrumFormatError("bad param in sequence header") from None
    try:
        order = [int(line) for line in lines[1:]]
    except ValueError:
        raise SpectrumFormatError("non-integer sequence entry") from None
    if len(order) != N:
        raise SpectrumFormatError("expected %d entries, found %d" % (N, len(order)))
    try:
        return ReliabilitySequence(N, metric, param, order)
    except ValueError as exc:
        raise SpectrumFormatError(str(exc)) from None


def load_sequence(source):
    if hasattr(source, "read"):
        return loads_sequence(source.read())
    with open(source, "r", encoding="ascii") as fh:
        return loads_sequence(fh.read())
