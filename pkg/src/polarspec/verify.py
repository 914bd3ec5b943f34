"""Self-check suite for the spectrum engine.

Each check returns (name, ok, detail); run_verification collects them for
the CLI/service `verify` entry point.  The checks cover the structural
invariants of the spectra (cardinality, subcode differencing, parity,
symmetry), duality under the MacWilliams transform, brute-force oracle
agreement at small sizes, and agreement with the published N = 32 table
and reliability orders.
"""

import math

from . import reference_data
from .construction import bhattacharyya_construct, rank, subw, ubw
from .errors import InconsistencyError
from .spectrum import (
    brute_force_spectrum,
    enumerate_spectra_all,
    macwilliams_transform,
)

_ORACLE_MAX_N = 16


def _check_cardinality(table):
    N = table.N
    for i in range(1, N + 1):
        total = sum(table.spectrum(i).counts)
        if total != 1 << (N - i):
            return False, "channel %d sums to %d, expected 2^%d" % (i, total, N - i)
    return True, "all %d channels" % N


def _check_differencing(table):
    """Subcode distributions minus their successor reproduce every spectrum."""
    N = table.N
    for i in range(1, N + 1):
        sub = table.subcode_dists[i - 1].counts
        if i < N:
            nxt = table.subcode_dists[i].counts
        else:
            nxt = [1] + [0] * N  # trivial code {0}
        diff = [a - b for a, b in zip(sub, nxt)]
        if diff != list(table.spectrum(i).counts):
            return False, "differencing mismatch at channel %d" % i
    return True, "all %d channels" % N


def _check_parity(table):
    N = table.N
    for i in range(2, N + 1):
        if any(a for d, a in table.spectrum(i).nonzero() if d % 2):
            return False, "odd weight present at channel %d >= 2" % i
    if any(a for d, a in table.spectrum(1).nonzero() if d % 2 == 0):
        return False, "even weight present at channel 1"
    return True, "channel 1 odd-only, channels >= 2 even-only"


def _check_symmetry(table):
    N = table.N
    for i in range(1, N + 1):
        c = table.spectrum(i).counts
        for d in range(1, N):
            if c[d] != c[N - d]:
                return False, "asymmetry at channel %d weight %d" % (i, d)
    return True, "A(d) = A(N-d) on 1 <= d <= N-1"


def _check_duality(table):
    """Subcode N+2-i is the dual of subcode i for i > N/2, self-dual at N/2+1."""
    N = table.N
    if N < 2:
        return True, "trivial at N = %d" % N
    for i in range(N // 2 + 1, N + 1):
        dim = N - i + 1
        dual = macwilliams_transform(table.subcode_dists[i - 1], dim)
        j = N + 2 - i
        expected = table.subcode_dists[j - 1].counts
        if list(dual.counts) != list(expected):
            return False, "dual of subcode %d is not subcode %d" % (i, j)
    return True, "checked i in [%d, %d], self-dual at %d" % (N // 2 + 1, N, N // 2 + 1)


def _check_oracle(tables):
    checked = []
    for table in tables:
        if not 2 <= table.N <= _ORACLE_MAX_N:
            continue
        for i in range(1, table.N + 1):
            oracle = brute_force_spectrum(table.N, i)
            if list(oracle.counts) != list(table.spectrum(i).counts):
                return False, "oracle mismatch at N = %d channel %d" % (table.N, i)
        checked.append(table.N)
    return True, "exhaustive agreement at N in %s" % checked


def _check_reference_spectra(table32):
    for i, ref in reference_data.KNOWN_SPECTRA_N32.items():
        got = dict(table32.spectrum(i).nonzero())
        if got != ref:
            return False, "published N=32 spectrum mismatch at channel %d" % i
    return True, "%d published channels match" % len(reference_data.KNOWN_SPECTRA_N32)


def _order_close(got, ref, values):
    """True when got and ref differ only within groups of exactly equal metric
    values (such orders are interchangeable under any tie rule)."""
    if got == ref:
        return True
    for a, b in zip(got, ref):
        if a != b and values[a - 1] != values[b - 1]:
            return False
    return True


def _check_reference_orders(table32):
    ln_z = -(10.0 ** 0.4)  # 4 dB design point
    mv = ubw(table32, ln_z)
    got = rank(mv).order
    if not _order_close(got, reference_data.KNOWN_ORDER_N32_UBW, mv.values):
        return False, "UBW order deviates beyond exact ties"
    mv = subw(table32, ln_z)
    got = rank(mv).order
    if not _order_close(got, reference_data.KNOWN_ORDER_N32_SUBW, mv.values):
        return False, "SUBW order deviates beyond exact ties"
    mv = bhattacharyya_construct(5, math.exp(ln_z))
    if rank(mv).order != reference_data.KNOWN_ORDER_N32_BHATTACHARYYA:
        return False, "Bhattacharyya order mismatch"
    return True, "UBW/SUBW/Bhattacharyya orders match at 4 dB (up to exact ties)"


def run_verification(n=5):
    """Run every check on spectra up to length 2^n (n >= 5 enables the
    published-table comparisons).  Returns a list of (name, ok, detail)."""
    results = []
    try:
        tables = enumerate_spectra_all(n)
    except InconsistencyError as exc:
        return [("enumerate", False, str(exc))]
    results.append(("enumerate", True, "lengths up to %d" % (1 << n)))
    table = tables[-1]
    for name, check in (
        ("cardinality", _check_cardinality),
        ("differencing", _check_differencing),
        ("parity", _check_parity),
        ("symmetry", _check_symmetry),
        ("duality", _check_duality),
    ):
        ok, detail = check(table)
        results.append((name, ok, detail))
    ok, detail = _check_oracle(tables)
    results.append(("oracle", ok, detail))
    if n >= 5:
        table32 = tables[4]
        ok, detail = _check_reference_spectra(table32)
        results.append(("published-spectra", ok, detail))
        ok, detail = _check_reference_orders(table32)
        results.append(("published-orders", ok, detail))
    return results
