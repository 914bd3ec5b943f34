"""Seeded Monte-Carlo block-error-rate measurement.

One sweep runs construction -> encode -> channel -> decode over a grid of
channel parameters.  Trials are partitioned round-robin over W logical
workers; worker w draws from its own RNG substream, so results depend on
(master seed, worker count) only and are bit-identical on rerun regardless
of how the workers are actually scheduled.  Early stopping happens at
round boundaries shared by all workers, which keeps it deterministic too.

AWGN sweep points are expressed in dB at this interface and converted to
linear Es/N0 once, internally.
"""

import json
import math
import time
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import construction
from .bounds import ChannelSpec, db_to_linear
from .channels import RngStream, transmit
from .decoders import _sc_batch, scl_decode
from .errors import DependencyError
from .kernel import CodeConfig, assemble_source, encode

# trials each worker runs between early-stop checks
_ROUND_CHUNK = 2048


@dataclass(frozen=True)
class SimConfig:
    """Everything that determines a BLER sweep, including its randomness."""

    n: int
    K: int
    metric_name: str
    channel: str
    sweep: tuple  # dB for AWGN, linear probability for BEC/BSC
    trials: int
    seed: int
    alpha_db: Optional[float] = None
    L: int = 1
    workers: int = 1
    error_target: Optional[int] = None

    def __post_init__(self):
        if self.metric_name not in construction.METRIC_NAMES:
            raise ValueError("unknown metric %r" % (self.metric_name,))
        if self.channel not in ("BEC", "BSC", "AWGN"):
            raise ValueError("unknown channel kind %r" % (self.channel,))
        if not self.sweep:
            raise ValueError("sweep must be nonempty")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.L < 1 or self.workers < 1:
            raise ValueError("L and workers must be >= 1")
        if self.error_target is not None and self.error_target < 1:
            raise ValueError("error target must be >= 1")
        object.__setattr__(self, "sweep", tuple(float(p) for p in self.sweep))
        for p in self.sweep:
            self.channel_spec(p)  # validates the point

    def channel_spec(self, point):
        if self.channel == "AWGN":
            return ChannelSpec("AWGN", db_to_linear(point))
        return ChannelSpec(self.channel, point)

    def design_alpha_db(self):
        if self.alpha_db is not None:
            return self.alpha_db
        return construction.default_alpha_db(
            self.metric_name, self.n, self.K, 1 << self.n
        )

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "K": self.K,
                "metric": self.metric_name,
                "alpha_db": self.alpha_db,
                "channel": self.channel,
                "sweep": list(self.sweep),
                "trials": self.trials,
                "seed": self.seed,
                "L": self.L,
                "workers": self.workers,
                "error_target": self.error_target,
            },
            separators=(", ", ": "),
        )

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(
            n=obj["n"],
            K=obj["K"],
            metric_name=obj["metric"],
            channel=obj["channel"],
            sweep=tuple(obj["sweep"]),
            trials=obj["trials"],
            seed=obj["seed"],
            alpha_db=obj.get("alpha_db"),
            L=obj.get("L", 1),
            workers=obj.get("workers", 1),
            error_target=obj.get("error_target"),
        )


@dataclass
class SimPoint:
    """Measurement at one sweep point."""

    point: float  # as given in the sweep (dB for AWGN)
    trials: int
    errors: int
    wall_time: float

    def __post_init__(self):
        if not 0 <= self.errors <= self.trials:
            raise ValueError("errors must lie in [0, trials]")

    @property
    def bler(self):
        return self.errors / self.trials

    @property
    def ci95(self):
        """Normal-approximation 95% half-width: 1.96 sqrt(p(1-p)/trials)."""
        p = self.bler
        return 1.96 * math.sqrt(p * (1.0 - p) / self.trials)

    @property
    def converged(self):
        return self.bler > 0.0 and self.ci95 <= 0.3 * self.bler


@dataclass
class SimResult:
    config: SimConfig
    info_set: tuple
    points: List[SimPoint] = field(default_factory=list)

    def to_json_lines(self):
        """One JSON object per sweep point; wall time is deliberately
        excluded so reruns produce byte-identical files."""
        lines = []
        for pt in self.points:
            obj = {"channel": self.config.channel}
            if self.config.channel == "AWGN":
                obj["param_db"] = pt.point
            else:
                obj["param"] = pt.point
            obj.update(
                {
                    "n": self.config.n,
                    "K": self.config.K,
                    "metric": self.config.metric_name,
                    "alpha_db": self.config.design_alpha_db(),
                    "L": self.config.L,
                    "trials": pt.trials,
                    "errors": pt.errors,
                    "bler": pt.bler,
                    "ci95": pt.ci95,
                    "seed": self.config.seed,
                    "workers": self.config.workers,
                }
            )
            lines.append(json.dumps(obj, separators=(", ", ": ")))
        return "\n".join(lines) + "\n"


def resolve_info_set(config, table=None):
    """Info set implied by the configured metric (most reliable K channels)."""
    alpha = db_to_linear(config.design_alpha_db())
    name = config.metric_name
    if name in ("UBW", "SUBW"):
        if table is None:
            raise DependencyError(
                "%s construction needs a spectrum table for N = %d"
                % (name, 1 << config.n)
            )
        ln_z = -alpha
        metric = (
            construction.ubw(table, ln_z)
            if name == "UBW"
            else construction.subw(table, ln_z)
        )
        param = config.design_alpha_db()
    elif name == "BHATTACHARYYA":
        metric = construction.bhattacharyya_construct(config.n, math.exp(-alpha))
        param = config.design_alpha_db()
    elif name == "GA":
        metric = construction.ga_construct(config.n, alpha)
        param = config.design_alpha_db()
    else:  # PW
        metric = construction.pw_construct(config.n)
        param = None
    seq = construction.rank(metric, param)
    return construction.select_info_set(seq, config.K)


def _worker_trials(total, workers):
    """Trial counts per worker under round-robin assignment of trial t to t % W."""
    base = total // workers
    extra = total % workers
    return [base + (1 if w < extra else 0) for w in range(workers)]


def _count_errors(llr, sent_info, code, L):
    if L == 1:
        u_hat, _ = _sc_batch(llr, code.frozen_mask())
        idx = np.array([i - 1 for i in code.info_set], dtype=np.intp)
        return int(np.count_nonzero(np.any(u_hat[:, idx] != sent_info, axis=1)))
    errors = 0
    for b in range(llr.shape[0]):
        res = scl_decode(llr[b], code, L)
        if not np.array_equal(res.info_bits, sent_info[b]):
            errors += 1
    return errors


def run_bler(config, table=None):
    """Measure BLER at every sweep point; deterministic given (seed, workers)."""
    info_set = resolve_info_set(config, table)
    code = CodeConfig(config.n, config.K, info_set)
    result = SimResult(config, info_set)
    for point in config.sweep:
        start = time.monotonic()
        spec = config.channel_spec(point)
        if config.K == 0:
            # nothing to err on; run no trials but report the budget
            result.points.append(SimPoint(point, config.trials, 0, time.monotonic() - start))
            continue
        streams = [RngStream(config.seed, w) for w in range(config.workers)]
        remaining = _worker_trials(config.trials, config.workers)
        done = [0] * config.workers
        errors = 0
        while any(r > 0 for r in remaining):
            for w in range(config.workers):
                chunk = min(_ROUND_CHUNK, remaining[w])
                if chunk == 0:
                    continue
                gen = streams[w].generator
                bits = gen.integers(0, 2, size=(chunk, config.K)).astype(np.uint8)
                x = encode(assemble_source(bits, code))
                llr = transmit(x, spec, streams[w])
                errors += _count_errors(llr, bits, code, config.L)
                remaining[w] -= chunk
                done[w] += chunk
            if config.error_target is not None and errors >= config.error_target:
                break
        result.points.append(
            SimPoint(point, sum(done), errors, time.monotonic() - start)
        )
    return result
