"""GF(2) polar transform: generator matrix, butterfly encoder, source assembly.

Bit vectors are plain numpy uint8 arrays. The encoder works on a single
length-N vector or on a batch of shape (B, N); it never materializes the
generator matrix except for small test sizes.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError

# Dense generator matrices are only for test support; production encoding
# always goes through the butterfly.
DENSE_MATRIX_MAX_N = 64


@dataclass(frozen=True)
class CodeConfig:
    """An (N, K, A) code configuration with 1-based, strictly increasing info set."""

    n: int
    K: int
    info_set: tuple = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        N = self.N
        info = tuple(int(i) for i in self.info_set)
        object.__setattr__(self, "info_set", info)
        if len(info) != self.K:
            raise ValueError("info_set size must equal K")
        if not 0 <= self.K <= N:
            raise ValueError("K must be in [0, N]")
        if any(b <= a for a, b in zip(info, info[1:])):
            raise ValueError("info_set indices must be strictly increasing")
        if info and (info[0] < 1 or info[-1] > N):
            raise ValueError("info_set indices must lie in [1, N]")

    @property
    def N(self):
        return 1 << self.n

    @property
    def rate(self):
        return self.K / self.N

    def frozen_mask(self):
        """Boolean array of length N, True at frozen (non-information) positions."""
        mask = np.ones(self.N, dtype=bool)
        for i in self.info_set:
            mask[i - 1] = False
        return mask


def generator_matrix(n, max_size=DENSE_MATRIX_MAX_N):
    """Dense F_N = F_2^{kron n}, lower-triangular with unit diagonal."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if (1 << n) > max_size:
        raise CapacityError(
            "dense generator matrix limited to N <= %d (got N = %d)" % (max_size, 1 << n)
        )
    f2 = np.array([[1, 0], [1, 1]], dtype=np.uint8)
    mat = np.array([[1]], dtype=np.uint8)
    for _ in range(n):
        mat = np.kron(mat, f2)
    return mat


def encode(u):
    """x = u F_N over GF(2) via the butterfly, O(N log N).

    Accepts shape (N,) or (B, N); returns the same shape.
    """
    x = np.asarray(u, dtype=np.uint8).copy()
    N = x.shape[-1]
    if N == 0 or (N & (N - 1)) != 0:
        raise ValueError("input length must be a power of two, got %d" % N)
    batched = x.ndim == 2
    if x.ndim > 2:
        raise ValueError("expected a vector or a batch of vectors")
    work = x if batched else x[np.newaxis, :]
    h = N // 2
    while h >= 1:
        view = work.reshape(work.shape[0], -1, 2, h)
        view[:, :, 0, :] ^= view[:, :, 1, :]
        h //= 2
    return x if batched else work[0]


def assemble_source(info_bits, config):
    """Scatter K info bits into the info positions; frozen positions are zero.

    info_bits may be (K,) or (B, K); returns (N,) or (B, N) accordingly.
    """
    bits = np.asarray(info_bits, dtype=np.uint8)
    if bits.shape[-1] != config.K:
        raise ValueError("expected %d info bits, got %d" % (config.K, bits.shape[-1]))
    idx = np.array([i - 1 for i in config.info_set], dtype=np.intp)
    if bits.ndim == 1:
        u = np.zeros(config.N, dtype=np.uint8)
        u[idx] = bits
    else:
        u = np.zeros(bits.shape[:-1] + (config.N,), dtype=np.uint8)
        u[..., idx] = bits
    return u
