"""Successive cancellation (SC) and SC list (SCL) decoding over LLR inputs.

Check updates use the exact tanh-domain rule by default, written in the
overflow-safe form sign(a)sign(b)min(|a|,|b|) plus two log1p corrections;
min_sum=True drops the corrections.  Ties (decision LLR exactly 0, which
happens on the BEC) resolve to bit 0.

The SC path is vectorized over a batch of received words.  The list decoder
keeps every per-path working array in a registry whose first axis indexes
live paths, so duplicating or pruning paths is a single fancy-indexing pass
over the registry: O(L N log N) time, O(L N) memory.
"""

from dataclasses import dataclass, field

import numpy as np

from .channels import LLR_MAX
from .kernel import encode


@dataclass
class DecodeResult:
    """Decisions for one received word.

    path_metric is 0.0 for SC; for SCL it is the winning path's accumulated
    metric.  codeword_estimate is re-encoded from the assembled source
    decisions, so encode-consistency holds by construction.
    """

    info_bits: np.ndarray
    codeword_estimate: np.ndarray
    path_metric: float = 0.0
    metadata: dict = field(default_factory=dict)


def _check_update(a, b, min_sum):
    """LLR of the XOR of two bits with LLRs a and b."""
    a = np.clip(a, -LLR_MAX, LLR_MAX)
    b = np.clip(b, -LLR_MAX, LLR_MAX)
    out = np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))
    if not min_sum:
        # 2 atanh(tanh(a/2) tanh(b/2)) = sign(a)sign(b) min(|a|,|b|)
        #                                + log1p(e^-|a+b|) - log1p(e^-|a-b|)
        out = out + np.log1p(np.exp(-np.abs(a + b))) - np.log1p(np.exp(-np.abs(a - b)))
    return out


def _sc_batch(llr, frozen, min_sum=False):
    """SC-decode a batch of received words.

    llr: (B, N) channel LLRs; frozen: length-N boolean mask.
    Returns (u_hat, x_hat), both (B, N) uint8.
    """

    def rec(lam, lo):
        m = lam.shape[1]
        if m == 1:
            if frozen[lo]:
                u = np.zeros((lam.shape[0], 1), dtype=np.uint8)
            else:
                u = (lam < 0.0).astype(np.uint8)
            return u, u.copy()
        h = m // 2
        u1, x1 = rec(_check_update(lam[:, :h], lam[:, h:], min_sum), lo)
        g = lam[:, h:] + (1.0 - 2.0 * x1) * lam[:, :h]
        u2, x2 = rec(g, lo + h)
        return (
            np.concatenate([u1, u2], axis=1),
            np.concatenate([x1 ^ x2, x2], axis=1),
        )

    return rec(np.asarray(llr, dtype=np.float64), 0)


def _finish(u_hat, config, path_metric, llr):
    info_idx = np.array([i - 1 for i in config.info_set], dtype=np.intp)
    codeword = encode(u_hat)
    meta = {}
    if not np.any(np.asarray(llr)):
        meta["all_erased"] = True
    return DecodeResult(u_hat[info_idx].copy(), codeword, float(path_metric), meta)


def sc_decode(llr, config, min_sum=False):
    """Plain successive cancellation; frozen bits forced to 0, ties to bit 0."""
    lam = np.asarray(llr, dtype=np.float64)
    if lam.shape != (config.N,):
        raise ValueError("expected %d LLRs, got shape %r" % (config.N, lam.shape))
    u_hat, _ = _sc_batch(lam[np.newaxis, :], config.frozen_mask(), min_sum)
    return _finish(u_hat[0], config, 0.0, lam)


def _path_penalty(lam, bit, exact):
    """Metric increment for deciding `bit` against decision LLR lam."""
    s = (1.0 - 2.0 * bit) * lam
    if exact:
        return np.logaddexp(0.0, -s)
    return np.where(s < 0.0, -s, 0.0)


class _PathSet:
    """Live decoding paths and every array that must follow them.

    Arrays registered with track() have their first axis indexed by path;
    branch() duplicates them and prune keeps the L metric-best rows (stable
    order, so equal-metric paths keep their bit-0-first ordering).
    """

    def __init__(self, list_size, exact_pm):
        self.list_size = list_size
        self.exact_pm = exact_pm
        self.pm = np.zeros(1)
        self._arrays = {}
        self._next_key = 0

    def track(self, arr):
        key = self._next_key
        self._next_key += 1
        self._arrays[key] = arr
        return key

    def get(self, key):
        return self._arrays[key]

    def pop(self, key):
        return self._arrays.pop(key)

    def freeze(self, lam):
        """All paths take bit 0 at a frozen position."""
        self.pm = self.pm + _path_penalty(lam, 0, self.exact_pm)

    def branch(self, lam):
        """Split every path on an information bit; returns the kept decisions."""
        count = self.pm.shape[0]
        pm = np.concatenate(
            [
                self.pm + _path_penalty(lam, 0, self.exact_pm),
                self.pm + _path_penalty(lam, 1, self.exact_pm),
            ]
        )
        bits = np.concatenate(
            [np.zeros(count, dtype=np.uint8), np.ones(count, dtype=np.uint8)]
        )
        if pm.shape[0] <= self.list_size:
            self.pm = pm
            for key, arr in self._arrays.items():
                self._arrays[key] = np.concatenate([arr, arr])
            return bits
        keep = np.sort(np.argsort(pm, kind="stable")[: self.list_size])
        self.pm = pm[keep]
        half = keep % count
        for key, arr in self._arrays.items():
            self._arrays[key] = arr[half]
        return bits[keep]


def _scl_rec(ps, llr_key, frozen, lo, min_sum):
    """Consumes llr_key; returns registry keys for the (paths, M) u and x blocks."""
    lam = ps.get(llr_key)
    m = lam.shape[1]
    if m == 1:
        lam = ps.pop(llr_key)[:, 0]
        if frozen[lo]:
            ps.freeze(lam)
            bits = np.zeros((ps.pm.shape[0], 1), dtype=np.uint8)
        else:
            bits = ps.branch(lam)[:, np.newaxis]
        return ps.track(bits), ps.track(bits.copy())
    h = m // 2
    f_key = ps.track(_check_update(lam[:, :h], lam[:, h:], min_sum))
    u1_key, x1_key = _scl_rec(ps, f_key, frozen, lo, min_sum)
    lam = ps.pop(llr_key)
    x1 = ps.get(x1_key)
    g_key = ps.track(lam[:, h:] + (1.0 - 2.0 * x1) * lam[:, :h])
    u2_key, x2_key = _scl_rec(ps, g_key, frozen, lo + h, min_sum)
    u1, x1 = ps.pop(u1_key), ps.pop(x1_key)
    u2, x2 = ps.pop(u2_key), ps.pop(x2_key)
    u = np.concatenate([u1, u2], axis=1)
    x = np.concatenate([x1 ^ x2, x2], axis=1)
    return ps.track(u), ps.track(x)


def scl_decode(llr, config, L, min_sum=False, exact_pm=True):
    """SC list decoding keeping the L metric-best paths per decision level.

    The default metric is the exact log-likelihood increment
    log(1 + exp(-(1-2u) LLR)), under which the lowest-metric full-length
    path is the maximum-likelihood one whenever L covers every path.
    exact_pm=False switches to the cheaper hard-decision approximation
    (+|LLR| only when the decided bit contradicts the LLR sign), which
    occasionally returns a non-ML word near the decision boundary.
    """
    if L < 1:
        raise ValueError("list size must be >= 1")
    lam = np.asarray(llr, dtype=np.float64)
    if lam.shape != (config.N,):
        raise ValueError("expected %d LLRs, got shape %r" % (config.N, lam.shape))
    ps = _PathSet(L, exact_pm)
    llr_key = ps.track(lam[np.newaxis, :])
    u_key, _x_key = _scl_rec(ps, llr_key, config.frozen_mask(), 0, min_sum)
    best = int(np.argmin(ps.pm))
    return _finish(ps.pop(u_key)[best], config, ps.pm[best], lam)
