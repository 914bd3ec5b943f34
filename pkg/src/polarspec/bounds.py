"""Analytical error and capacity bounds of polarized channels.

Per-channel union bounds weight pairwise error probabilities by the exact
spectrum counts; the union-Bhattacharyya (UB) family replaces the PEP with
Z(W)^d.  Counts too large for a double are combined in the log domain.
All channel parameters are linear scale here; dB conversion belongs to the
CLI/service boundary.
"""

import json
import math
from dataclasses import dataclass, field
from typing import List

from scipy.special import erfc, log_ndtr

from .spectrum import d_min

# float(count) is exact below 2^52; above, switch to exp(ln A + d ln p)
_EXACT_FLOAT_LIMIT = 1 << 52

CHANNEL_KINDS = ("BEC", "BSC", "AWGN")


@dataclass(frozen=True)
class ChannelSpec:
    """A channel kind and its single parameter.

    BEC: erasure probability in (0,1); BSC: crossover probability in (0,0.5);
    AWGN: Es/N0 on linear scale, > 0.
    """

    kind: str
    param: float

    def __post_init__(self):
        if self.kind not in CHANNEL_KINDS:
            raise ValueError("unknown channel kind %r" % (self.kind,))
        p = self.param
        if self.kind == "BEC" and not 0.0 < p < 1.0:
            raise ValueError("BEC erasure probability must be in (0, 1)")
        if self.kind == "BSC" and not 0.0 < p < 0.5:
            raise ValueError("BSC crossover probability must be in (0, 0.5)")
        if self.kind == "AWGN" and not p > 0.0:
            raise ValueError("AWGN Es/N0 must be positive (linear scale)")


def db_to_linear(db):
    return 10.0 ** (db / 10.0)


def linear_to_db(x):
    return 10.0 * math.log10(x)


def q_function(x):
    """Gaussian tail probability Q(x) = 0.5 erfc(x / sqrt 2)."""
    return 0.5 * erfc(x / math.sqrt(2.0))


def log_q_function(x):
    """ln Q(x), stable far into the tail."""
    return float(log_ndtr(-x))


def bhattacharyya_param(spec):
    """Z(W) of the raw channel."""
    if spec.kind == "BEC":
        return spec.param
    if spec.kind == "BSC":
        return 2.0 * math.sqrt(spec.param * (1.0 - spec.param))
    return math.exp(-spec.param)


def pep(spec, d):
    """Pairwise error probability of confusing the zero word with a weight-d word."""
    if d < 1:
        raise ValueError("distance must be >= 1")
    if spec.kind == "BEC":
        return spec.param ** d
    if spec.kind == "BSC":
        delta = spec.param
        return math.fsum(
            math.comb(d, m) * delta ** m * (1.0 - delta) ** (d - m)
            for m in range((d + 1) // 2, d + 1)
        )
    return q_function(math.sqrt(2.0 * d * spec.param))


def log_pep(spec, d):
    """ln of pep(), usable when the direct value underflows."""
    if d < 1:
        raise ValueError("distance must be >= 1")
    if spec.kind == "BEC":
        return d * math.log(spec.param)
    if spec.kind == "BSC":
        delta = spec.param
        terms = [
            math.log(math.comb(d, m)) + m * math.log(delta) + (d - m) * math.log1p(-delta)
            for m in range((d + 1) // 2, d + 1)
        ]
        top = max(terms)
        return top + math.log(math.fsum(math.exp(t - top) for t in terms))
    return log_q_function(math.sqrt(2.0 * d * spec.param))


def _weighted_sum(pairs, log_term):
    """sum A(d) * p(d) with the large-count pairs pushed through the log domain.

    pairs: (d, count, direct-probability); log_term(d) supplies ln p(d).
    Summed in descending magnitude to keep the roundoff predictable.
    """
    terms = []
    for d, a, p in pairs:
        if a < _EXACT_FLOAT_LIMIT:
            terms.append(a * p)
        else:
            terms.append(math.exp(math.log(a) + log_term(d)))
    terms.sort(reverse=True)
    return math.fsum(terms)


def channel_union_bound(ps, spec):
    """Union bound of the error probability of one polarized channel."""
    pairs = [(d, a, pep(spec, d)) for d, a in ps.nonzero()]
    return _weighted_sum(pairs, lambda d: log_pep(spec, d))


def channel_ub_bound(ps, spec):
    """Union-Bhattacharyya bound: sum A(d) Z^d."""
    z = bhattacharyya_param(spec)
    lnz = math.log(z)
    pairs = [(d, a, z ** d) for d, a in ps.nonzero()]
    return _weighted_sum(pairs, lambda d: d * lnz)


def channel_simplified_ub(ps, spec):
    """Minimum-weight term only: A(d_min) Z^d_min."""
    z = bhattacharyya_param(spec)
    dm = d_min(ps)
    a = ps.counts[dm]
    if a < _EXACT_FLOAT_LIMIT:
        return a * z ** dm
    return math.exp(math.log(a) + dm * math.log(z))


@dataclass
class BoundReport:
    """Per-channel bound values plus the aggregate over the information set.

    Values are kept unclamped (union bounds may exceed 1); clamped() is for
    presentation/plotting only.
    """

    kind: str
    channel: ChannelSpec
    N: int
    info_set: tuple
    values: List[float] = field(repr=False)

    @property
    def bler_bound(self):
        return math.fsum(self.values[i - 1] for i in self.info_set)

    def clamped(self):
        return min(1.0, self.bler_bound)

    def value(self, i):
        return self.values[i - 1]

    def to_json_lines(self):
        lines = [
            json.dumps({"i": i, "value": v}, separators=(", ", ": "))
            for i, v in enumerate(self.values, start=1)
        ]
        lines.append(
            json.dumps(
                {
                    "bler_bound": self.bler_bound,
                    "kind": self.kind,
                    "channel": self.channel.kind,
                    "param": self.channel.param,
                },
                separators=(", ", ": "),
            )
        )
        return "\n".join(lines) + "\n"


def _report(kind, table, config, spec, per_channel):
    if table.N != config.N:
        raise ValueError("spectrum table length %d != config length %d" % (table.N, config.N))
    values = [per_channel(table.spectrum(i), spec) for i in range(1, table.N + 1)]
    return BoundReport(kind, spec, table.N, config.info_set, values)


def bler_union_bound(table, config, spec):
    return _report("union", table, config, spec, channel_union_bound)


def bler_ub_bound(table, config, spec):
    return _report("ub", table, config, spec, channel_ub_bound)


def bler_simplified_ub(table, config, spec):
    return _report("simplified_ub", table, config, spec, channel_simplified_ub)


def z_bounds(ps, spec):
    """(heuristic lower, exact upper) bounds on Z of the polarized channel.

    The upper bound is sum A(d) Z^d; the lower, Z^d_min, is only an
    approximation and must not be used inside exact inequalities.
    """
    upper = channel_ub_bound(ps, spec)
    z = bhattacharyya_param(spec)
    lower = z ** d_min(ps)
    return lower, upper


def capacity_bounds(ps, spec):
    """(exact lower, heuristic upper) bounds on the symmetric capacity.

    Lower: 1 - log2(1 + sum A(d) Z^d), floored at 0; for the BEC the tighter
    1 - sum A(d) eps^d applies since capacity there is 1 minus the error
    probability.  Upper: sqrt(1 - Z^(2 d_min)), heuristic.
    """
    s = channel_ub_bound(ps, spec)
    lower = max(1.0 - math.log2(1.0 + s), 0.0)
    if spec.kind == "BEC":
        lower = max(lower, max(1.0 - s, 0.0))
    z = bhattacharyya_param(spec)
    upper = math.sqrt(max(1.0 - z ** (2 * d_min(ps)), 0.0))
    return lower, upper


def bec_exact_polarization(n, eps):
    """Exact per-channel erasure probabilities for a BEC after n polarization steps.

    Natural (non-bit-reversed) index order, consistent with the encoder:
    channel i-1's binary digits, most significant first, pick the minus (0)
    or plus (1) branch of eps- = 2e - e^2, eps+ = e^2.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("erasure probability must be in (0, 1)")
    values = [eps]
    for _ in range(n):
        nxt = []
        for e in values:
            nxt.append(2.0 * e - e * e)
            nxt.append(e * e)
        values = nxt
    return values


def bler_arikan_bound(z_values, config):
    """Sum of per-channel Bhattacharyya values over the information set."""
    if len(z_values) != config.N:
        raise ValueError("expected %d z-values, got %d" % (config.N, len(z_values)))
    return math.fsum(z_values[i - 1] for i in config.info_set)
