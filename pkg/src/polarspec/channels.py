"""Seeded channel samplers producing LLR vectors for the decoders.

Convention: positive LLR favors bit 0, LLR = ln(W(y|0) / W(y|1)).  BEC
erasures map to exactly 0; known BEC bits saturate at +-LLR_MAX, which is
large enough that the exact check-node update treats them as certain but
small enough that exp-based updates cannot overflow.
"""

import numpy as np

LLR_MAX = 300.0


class RngStream:
    """A named substream of the master seed.

    Streams are derived with numpy's SeedSequence spawn keys, so distinct
    (seed, stream_id) pairs are non-overlapping by construction and a given
    pair always reproduces the same sample sequence.  Gaussian samples come
    from Generator.standard_normal (ziggurat), fixed within a build.
    """

    def __init__(self, seed, stream_id=0):
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self._rng = np.random.default_rng(
            np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        )

    @property
    def generator(self):
        return self._rng


def transmit(x, spec, rng):
    """Send codeword bits through the channel; returns float64 LLRs.

    x may be (N,) or a batch (B, N).
    """
    bits = np.asarray(x, dtype=np.uint8)
    gen = rng.generator
    sign = 1.0 - 2.0 * bits  # +1 for bit 0, -1 for bit 1
    if spec.kind == "BEC":
        erased = gen.random(bits.shape) < spec.param
        return np.where(erased, 0.0, sign * LLR_MAX)
    if spec.kind == "BSC":
        flipped = gen.random(bits.shape) < spec.param
        y = bits ^ flipped
        mag = np.log((1.0 - spec.param) / spec.param)
        return (1.0 - 2.0 * y) * mag
    # BI-AWGN with BPSK, Es normalized to 1, N0 = 1 / (Es/N0)
    n0 = 1.0 / spec.param
    y = sign + gen.standard_normal(bits.shape) * np.sqrt(n0 / 2.0)
    return 4.0 * y / n0
