"""Exact weight distributions of the nested subcodes C_N^(i) and the
per-channel spectra A_N^(i) obtained from them.

Everything here is exact big-integer arithmetic.  The doubling iteration uses
three facts about the subcode family:

  * rows N+1..2N of F_2N generate repetition pairs (c, c), so the upper-half
    distributions are weight-doubled copies of the length-N ones;
  * C_2N^(l) and C_2N^(2N+2-l) are dual codes, so the lower half follows from
    the upper half by a MacWilliams transform;
  * C_2N^(1) is the full space, with binomial weight distribution.

Per-channel spectra then come out by differencing consecutive subcode
distributions (C^(i) is the disjoint union of the u_i=1 slice and C^(i+1)).
"""

from dataclasses import dataclass, field
from math import comb
from typing import List, Optional

import numpy as np

from .errors import CapacityError, InconsistencyError, SpectrumFormatError
from .kernel import encode

MAX_LOG2_N = 12  # default size limit N <= 4096
BRUTE_FORCE_MAX_WORDS = 1 << 22


@dataclass
class WeightDistribution:
    """Exact codeword counts indexed by Hamming weight 0..N."""

    N: int
    counts: List[int]

    def __post_init__(self):
        if len(self.counts) != self.N + 1:
            raise ValueError("counts must have N+1 entries")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    def total(self):
        return sum(self.counts)

    def __eq__(self, other):
        return (
            isinstance(other, WeightDistribution)
            and self.N == other.N
            and self.counts == other.counts
        )


@dataclass
class PolarSpectrum:
    """Weight distribution of the u_i = 1 coset slice of C_N^(i)."""

    N: int
    i: int
    dist: WeightDistribution

    @property
    def counts(self):
        return self.dist.counts

    def nonzero(self):
        """(weight, count) pairs with count > 0, ascending weight."""
        return [(d, a) for d, a in enumerate(self.counts) if a]

    def __eq__(self, other):
        return (
            isinstance(other, PolarSpectrum)
            and (self.N, self.i) == (other.N, other.i)
            and self.dist == other.dist
        )


@dataclass
class SpectrumTable:
    """Per-channel spectra for every i in [1, N] at one block length.

    subcode_dists keeps the intermediate S distributions (index i-1) that the
    doubling iteration produced; they are retained for invariant checking.
    """

    N: int
    spectra: List[PolarSpectrum]
    subcode_dists: Optional[List[WeightDistribution]] = field(default=None, repr=False)

    def spectrum(self, i):
        if not 1 <= i <= self.N:
            raise ValueError("channel index out of range")
        return self.spectra[i - 1]

    def __eq__(self, other):
        return (
            isinstance(other, SpectrumTable)
            and self.N == other.N
            and self.spectra == other.spectra
        )


def d_min(ps):
    """Smallest weight d >= 1 with a nonzero count."""
    for d, a in enumerate(ps.counts):
        if d >= 1 and a:
            return d
    raise InconsistencyError("all-zero spectrum has no minimum distance")


def macwilliams_transform(dist, dim):
    """Weight distribution of the dual of a dimension-`dim` code.

    Solves the triangular system
        sum_j C(N-j, k) B(j) = 2^{(N-dim)-k} sum_j C(N-j, N-k) A(j)
    from k = N down to 0; each step introduces exactly one unknown B(N-k).
    When the power of two is negative both sides are scaled so that all
    intermediate values stay integral; any failed divisibility or negative
    entry means the input was not a valid code distribution.
    """
    N = dist.N
    A = dist.counts
    if A[0] != 1:
        raise InconsistencyError("a linear code distribution must have counts[0] = 1")
    dual_dim = N - dim
    B = [0] * (N + 1)
    for k in range(N, -1, -1):
        rhs = sum(comb(N - j, N - k) * A[j] for j in range(0, k + 1) if A[j])
        known = sum(comb(N - j, k) * B[j] for j in range(0, N - k) if B[j])
        s = k - dual_dim
        if s <= 0:
            val = (rhs << -s) - known
        else:
            num = rhs - (known << s)
            if num < 0 or num & ((1 << s) - 1):
                raise InconsistencyError(
                    "MacWilliams solve failed divisibility at weight %d" % (N - k)
                )
            val = num >> s
        if val < 0:
            raise InconsistencyError(
                "MacWilliams solve produced a negative count at weight %d" % (N - k)
            )
        B[N - k] = val
    if B[0] != 1 or sum(B) != 1 << dual_dim:
        raise InconsistencyError(
            "input is not a valid distribution of a dimension-%d code" % dim
        )
    return WeightDistribution(N, B)


def _stage_coeffs(N):
    """Binomial coefficient rows reused by every transform at length N.

    For each even k in [N/2, N]:
      rhs[k][j/2]  = C(N-j, N-k) for even j in [0, k]
      sol[k][j/2]  = C(N-j, k)   for even j in [0, N-k)
    """
    rhs = {}
    sol = {}
    for k in range(N, N // 2 - 1, -2):
        rhs[k] = [comb(N - j, N - k) for j in range(0, k + 1, 2)]
        sol[k] = [comb(N - j, k) for j in range(0, N - k, 2)]
    return rhs, sol


def _dual_even_symmetric(S, dim, coeffs):
    """MacWilliams transform specialized to even-weight, symmetric inputs.

    Both the input and the dual distribution contain the all-one word and only
    even weights, so it suffices to solve for the even weights up to N/2 and
    mirror the rest.  This is the reduction that brings the whole doubling
    iteration to O(N^3).
    """
    N = len(S) - 1
    dual_dim = N - dim
    rhs_c, sol_c = coeffs
    B = [0] * (N + 1)
    for k in range(N, N // 2 - 1, -2):
        rhs = 0
        for c, a in zip(rhs_c[k], S[0 : k + 1 : 2]):
            if a:
                rhs += c * a
        known = 0
        for c, b in zip(sol_c[k], B[0 : N - k : 2]):
            if b:
                known += c * b
        s = k - dual_dim
        if s <= 0:
            val = (rhs << -s) - known
        else:
            num = rhs - (known << s)
            if num < 0 or num & ((1 << s) - 1):
                raise InconsistencyError("MacWilliams solve failed divisibility")
            val = num >> s
        if val < 0:
            raise InconsistencyError("MacWilliams solve produced a negative count")
        B[N - k] = val
    for j in range(0, N // 2, 2):
        B[N - j] = B[j]
    return B


def _spread_double(counts):
    """Weight-doubled copy: entry j of the input moves to entry 2j."""
    N = len(counts) - 1
    out = [0] * (2 * N + 1)
    out[::2] = counts
    return out


def _spectra_from_subcodes(N, S):
    """Difference consecutive subcode distributions into per-channel spectra.

    S is indexed 1..N (index 0 unused).  The last channel is the all-one
    codeword slice, handled directly.
    """
    spectra = []
    for i in range(1, N):
        a = [x - y for x, y in zip(S[i], S[i + 1])]
        if any(v < 0 for v in a):
            raise InconsistencyError("negative spectrum entry at channel %d" % i)
        spectra.append(PolarSpectrum(N, i, WeightDistribution(N, a)))
    last = [0] * (N + 1)
    last[N] = 1
    spectra.append(PolarSpectrum(N, N, WeightDistribution(N, last)))
    return spectra


def _check_table(N, S, spectra):
    """Cheap exactness checks run on every computed table."""
    for i in range(1, N + 1):
        counts = spectra[i - 1].counts
        if sum(counts) != 1 << (N - i):
            raise InconsistencyError("cardinality mismatch at channel %d" % i)
        if sum(S[i]) != 1 << (N - i + 1):
            raise InconsistencyError("subcode cardinality mismatch at index %d" % i)
        if counts[0] != 0:
            raise InconsistencyError("zero word counted in spectrum at channel %d" % i)
        for d, a in enumerate(counts):
            # symmetry holds on interior weights; the i = N slice is just {N: 1}
            if a and 1 <= d <= N - 1 and counts[N - d] != a:
                raise InconsistencyError("asymmetric spectrum at channel %d" % i)
            if a and i >= 2 and d % 2 == 1:
                raise InconsistencyError("odd weight at channel %d >= 2" % i)
            if a and i == 1 and d % 2 == 0 and d != 0:
                raise InconsistencyError("even weight at channel 1")


def enumerate_spectra_all(n, max_log2_n=MAX_LOG2_N, check=True):
    """Tables for every dyadic length 2..2^n, by length doubling.

    One run yields all intermediate lengths; each table keeps its subcode
    distributions for invariant testing.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_log2_n:
        raise CapacityError("N = 2^%d exceeds the configured limit 2^%d" % (n, max_log2_n))
    S = [None, [1, 2, 1], [1, 0, 1]]
    tables = []

    def emit(N, S):
        spectra = _spectra_from_subcodes(N, S)
        if check:
            _check_table(N, S, spectra)
        dists = [WeightDistribution(N, list(c)) for c in S[1:]]
        tables.append(SpectrumTable(N, spectra, dists))

    emit(2, S)
    N = 2
    while N < (1 << n):
        N2 = 2 * N
        new = [None] * (N2 + 1)
        for l in range(N + 1, N2 + 1):
            new[l] = _spread_double(S[l - N])
        coeffs = _stage_coeffs(N2)
        for l in range(2, N + 1):
            # dual of the upper-half subcode at index 2N+2-l, dimension l-1
            new[l] = _dual_even_symmetric(new[N2 + 2 - l], l - 1, coeffs)
        new[1] = [comb(N2, j) for j in range(N2 + 1)]
        S = new
        N = N2
        emit(N, S)
    return tables


def enumerate_spectra(n, max_log2_n=MAX_LOG2_N, check=True):
    """Spectrum table for N = 2^n."""
    return enumerate_spectra_all(n, max_log2_n=max_log2_n, check=check)[-1]


def brute_force_spectrum(N, i, max_words=BRUTE_FORCE_MAX_WORDS):
    """Oracle: enumerate the 2^(N-i) messages with zero prefix and u_i = 1."""
    if N < 1 or (N & (N - 1)) != 0:
        raise ValueError("N must be a power of two")
    if not 1 <= i <= N:
        raise ValueError("channel index out of range")
    free = N - i
    if (1 << free) > max_words:
        raise CapacityError("enumeration of 2^%d codewords exceeds the budget" % free)
    words = np.arange(1 << free, dtype=np.uint64)
    u = np.zeros(((1 << free), N), dtype=np.uint8)
    u[:, i - 1] = 1
    if free:
        u[:, i:] = (words[:, None] >> np.arange(free, dtype=np.uint64)) & 1
    weights = encode(u).sum(axis=1)
    counts = [0] * (N + 1)
    for w, c in zip(*np.unique(weights, return_counts=True)):
        counts[int(w)] = int(c)
    return PolarSpectrum(N, i, WeightDistribution(N, counts))


# --- persistence -----------------------------------------------------------
#
# Text format, bit-exact:
#   polar-spectrum v1 N=<N>
#   <i> <d> <A>          (ascending by (i, d), zero entries omitted)
#   end <count-of-data-lines>

MAGIC = "polar-spectrum v1"


def save_table(table, destination):
    """Write the table in the line-oriented text format (bit-exact)."""
    lines = ["%s N=%d" % (MAGIC, table.N)]
    count = 0
    for ps in table.spectra:
        for d, a in ps.nonzero():
            lines.append("%d %d %d" % (ps.i, d, a))
            count += 1
    lines.append("end %d" % count)
    text = "\n".join(lines) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="ascii") as fh:
            fh.write(text)


def loads_table(text):
    """Parse the text format back into a SpectrumTable."""
    lines = text.splitlines()
    if not lines:
        raise SpectrumFormatError("empty spectrum file")
    header = lines[0].split()
    if header[:2] != MAGIC.split() or len(header) != 3 or not header[2].startswith("N="):
        raise SpectrumFormatError("bad header: %r" % lines[0])
    try:
        N = int(header[2][2:])
    except ValueError:
        raise SpectrumFormatError("bad block length in header") from None
    if N < 1 or (N & (N - 1)) != 0:
        raise SpectrumFormatError("block length must be a power of two")
    if not lines[-1].startswith("end "):
        raise SpectrumFormatError("missing end trailer (truncated file?)")
    try:
        declared = int(lines[-1][4:])
    except ValueError:
        raise SpectrumFormatError("bad end trailer") from None
    data = lines[1:-1]
    if declared != len(data):
        raise SpectrumFormatError(
            "line count mismatch: trailer says %d, found %d" % (declared, len(data))
        )
    counts = {i: [0] * (N + 1) for i in range(1, N + 1)}
    prev = (0, -1)
    for line in data:
        parts = line.split()
        if len(parts) != 3:
            raise SpectrumFormatError("malformed data line: %r" % line)
        try:
            i, d, a = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise SpectrumFormatError("non-integer field: %r" % line) from None
        if not 1 <= i <= N or not 0 <= d <= N:
            raise SpectrumFormatError("index out of range: %r" % line)
        if a <= 0:
            raise SpectrumFormatError("counts must be positive: %r" % line)
        if (i, d) <= prev:
            raise SpectrumFormatError("entries must be strictly ascending by (i, d)")
        prev = (i, d)
        counts[i][d] = a
    spectra = []
    for i in range(1, N + 1):
        if not any(counts[i]):
            raise SpectrumFormatError("missing channel %d" % i)
        spectra.append(PolarSpectrum(N, i, WeightDistribution(N, counts[i])))
    return SpectrumTable(N, spectra)


def load_table(source):
    if hasattr(source, "read"):
        return loads_table(source.read())
    with open(source, "r", encoding="ascii") as fh:
        return loads_table(fh.read())


def spectrum_filename(N):
    """Canonical file name used by the CLI and the spectrum search path."""
    return "polar_spectrum_N%d.txt" % N
