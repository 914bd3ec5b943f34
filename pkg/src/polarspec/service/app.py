"""HTTP service exposing the toolkit.

Every endpoint is a stateless wrapper over the library; domain errors
(bad parameters, malformed files, missing dependencies) map to HTTP 400.
"""

import math

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..bounds import (
    ChannelSpec,
    bhattacharyya_param,
    bler_arikan_bound,
    bler_simplified_ub,
    bler_ub_bound,
    bler_union_bound,
    db_to_linear,
)
from ..construction import (
    METRIC_NAMES,
    bhattacharyya_construct,
    ga_construct,
    pw_construct,
    rank,
    save_sequence,
    select_info_set,
    subw,
    ubw,
)
from ..errors import DependencyError, PolarSpecError
from ..kernel import CodeConfig
from ..sim import SimConfig, run_bler
from ..spectrum import (
    brute_force_spectrum,
    enumerate_spectra_all,
    loads_table,
    save_table,
    spectrum_filename,
)
from ..verify import run_verification
from .models import (
    BoundPoint,
    BoundsRequest,
    BoundsResponse,
    ConstructRequest,
    ConstructResponse,
    HealthResponse,
    SimulateRequest,
    SimulateResponse,
    SpectrumFile,
    SpectrumRequest,
    SpectrumResponse,
    VerifyCheck,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="polarspec", version=__version__)

_ORACLE_CHECK_MAX_N = 16


def _bad_request(exc):
    return HTTPException(status_code=400, detail=str(exc))


def _text(save, obj):
    import io

    buf = io.StringIO()
    save(obj, buf)
    return buf.getvalue()


@app.get("/health", response_model=HealthResponse)
def health():
    return HealthResponse(status="ok", version=__version__)


@app.post("/spectrum", response_model=SpectrumResponse)
def spectrum(req: SpectrumRequest):
    try:
        tables = enumerate_spectra_all(req.n)
        if req.oracle_check:
            for table in tables:
                if table.N > _ORACLE_CHECK_MAX_N:
                    continue
                for i in range(1, table.N + 1):
                    oracle = brute_force_spectrum(table.N, i)
                    if list(oracle.counts) != list(table.spectrum(i).counts):
                        raise PolarSpecError(
                            "oracle mismatch at N = %d channel %d" % (table.N, i)
                        )
    except PolarSpecError as exc:
        raise _bad_request(exc) from exc
    files = [
        SpectrumFile(filename=spectrum_filename(t.N), content=_text(save_table, t))
        for t in tables
    ]
    return SpectrumResponse(files=files)


def _design_values(req):
    """(ln_z, z0, es_n0, recorded_param) from alpha_db or an explicit channel."""
    if req.channel is not None:
        if req.param is None:
            raise DependencyError("--channel requires --param")
        spec = ChannelSpec(req.channel, req.param)
        z0 = bhattacharyya_param(spec)
        es_n0 = spec.param if spec.kind == "AWGN" else None
        return math.log(z0), z0, es_n0, req.param
    alpha_db = 4.0 if req.alpha_db is None else req.alpha_db
    alpha = db_to_linear(alpha_db)
    return -alpha, math.exp(-alpha), alpha, alpha_db


@app.post("/construct", response_model=ConstructResponse)
def construct(req: ConstructRequest):
    try:
        if req.metric not in METRIC_NAMES:
            raise PolarSpecError("unknown metric %r" % req.metric)
        if req.metric == "PW":
            metric, param = pw_construct(req.n), None
        else:
            ln_z, z0, es_n0, param = _design_values(req)
            if req.metric in ("UBW", "SUBW"):
                if req.spectrum_text is None:
                    raise DependencyError(
                        "%s construction needs a spectrum table" % req.metric
                    )
                table = loads_table(req.spectrum_text)
                if table.N != 1 << req.n:
                    raise PolarSpecError(
                        "spectrum table length %d does not match n=%d"
                        % (table.N, req.n)
                    )
                metric = ubw(table, ln_z) if req.metric == "UBW" else subw(table, ln_z)
            elif req.metric == "BHATTACHARYYA":
                metric = bhattacharyya_construct(req.n, z0)
            else:  # GA
                if es_n0 is None:
                    raise DependencyError("GA construction needs an AWGN design point")
                metric = ga_construct(req.n, es_n0)
        seq = rank(metric, param)
    except (PolarSpecError, ValueError) as exc:
        raise _bad_request(exc) from exc
    return ConstructResponse(sequence_text=_text(save_sequence, seq))


def _bhattacharyya_recursion(n, z0):
    values = [z0]
    for _ in range(n):
        values = [v for z in values for v in (2.0 * z - z * z, z * z)]
    return values


@app.post("/bounds", response_model=BoundsResponse)
def bounds(req: BoundsRequest):
    try:
        if not req.sweep:
            raise PolarSpecError("sweep must be nonempty")
        if req.kind not in ("union", "ub", "subbound", "arikan"):
            raise PolarSpecError("unknown bound kind %r" % req.kind)
        from ..construction import loads_sequence

        seq = loads_sequence(req.sequence_text)
        if seq.N != 1 << req.n:
            raise PolarSpecError("sequence length %d does not match n=%d" % (seq.N, req.n))
        config = CodeConfig(req.n, req.k, select_info_set(seq, req.k))
        table = None
        if req.kind != "arikan":
            if req.spectrum_text is None:
                raise DependencyError("bound kind %r needs a spectrum table" % req.kind)
            table = loads_table(req.spectrum_text)
            if table.N != config.N:
                raise PolarSpecError(
                    "spectrum table length %d does not match n=%d" % (table.N, req.n)
                )
        points = []
        for point in req.sweep:
            param = db_to_linear(point) if req.channel == "AWGN" else point
            spec = ChannelSpec(req.channel, param)
            if req.kind == "arikan":
                z = _bhattacharyya_recursion(req.n, bhattacharyya_param(spec))
                value = bler_arikan_bound(z, config)
            elif req.kind == "union":
                value = bler_union_bound(table, config, spec).bler_bound
            elif req.kind == "ub":
                value = bler_ub_bound(table, config, spec).bler_bound
            else:
                value = bler_simplified_ub(table, config, spec).bler_bound
            points.append(BoundPoint(point=point, value=value))
    except (PolarSpecError, ValueError) as exc:
        raise _bad_request(exc) from exc
    return BoundsResponse(kind=req.kind, channel=req.channel, points=points)


@app.post("/simulate", response_model=SimulateResponse)
def simulate(req: SimulateRequest):
    try:
        config = SimConfig.from_json(req.config_json)
        table = None
        if req.spectrum_text is not None:
            table = loads_table(req.spectrum_text)
        result = run_bler(config, table)
    except (PolarSpecError, ValueError, KeyError) as exc:
        raise _bad_request(exc) from exc
    return SimulateResponse(results_text=result.to_json_lines())


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    checks = [
        VerifyCheck(name=name, ok=ok, detail=detail)
        for name, ok, detail in run_verification(req.n)
    ]
    return VerifyResponse(ok=all(c.ok for c in checks), checks=checks)
