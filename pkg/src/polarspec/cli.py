"""Command-line front end.

The CLI is a thin client of the HTTP service: by default it mounts the
FastAPI app in-process (no network, fully deterministic), and --server
points it at a remote instance instead.  All dB <-> linear conversion
happens here or in the service layer; the library itself is linear-only.
"""

import json
import os
import sys

import click

from .spectrum import spectrum_filename

SPECTRUM_DIR_ENV = "POLARSPEC_SPECTRUM_DIR"


class ServiceClient:
    """POSTs to a remote server when given one, else to the in-process app."""

    def __init__(self, server=None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            import warnings

            with warnings.catch_warnings():
                # the bundled test client import warns about its httpx backend
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path, payload):
        response = self._client.post(path, json=payload)
        if response.status_code != 200:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise click.ClickException("%s failed: %s" % (path, detail))
        return response.json()


def _read(path):
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def _find_spectrum_text(explicit_path, N, required):
    if explicit_path is not None:
        return _read(explicit_path)
    directory = os.environ.get(SPECTRUM_DIR_ENV)
    if directory:
        candidate = os.path.join(directory, spectrum_filename(N))
        if os.path.exists(candidate):
            return _read(candidate)
    if required:
        raise click.ClickException(
            "no spectrum table for N=%d: pass --spectrum or set %s"
            % (N, SPECTRUM_DIR_ENV)
        )
    return None


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Remote service URL (default: run the service in-process).")
@click.pass_context
def main(ctx, server):
    """Polar-code spectrum, construction, bound, and simulation toolkit."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.option("--n", type=int, required=True, help="Largest block length exponent.")
@click.option("--out", type=click.Path(file_okay=False), required=True,
              help="Directory receiving one spectrum file per dyadic length.")
@click.option("--oracle-check", is_flag=True,
              help="Cross-check small lengths against brute-force enumeration.")
@click.pass_obj
def spectrum(client, n, out, oracle_check):
    """Enumerate polar spectra for all dyadic lengths up to 2^n."""
    data = client.post("/spectrum", {"n": n, "oracle_check": oracle_check})
    os.makedirs(out, exist_ok=True)
    for entry in data["files"]:
        _write(os.path.join(out, entry["filename"]), entry["content"])
        click.echo("wrote %s" % os.path.join(out, entry["filename"]))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--metric", required=True,
              type=click.Choice(["UBW", "SUBW", "BHATTACHARYYA", "GA", "PW"]))
@click.option("--alpha-db", type=float, default=None,
              help="Design SNR in dB (AWGN design channel).")
@click.option("--channel", type=click.Choice(["BEC", "BSC", "AWGN"]), default=None,
              help="Explicit design channel (with --param) instead of --alpha-db.")
@click.option("--param", type=float, default=None,
              help="Design channel parameter (linear scale).")
@click.option("--spectrum", "spectrum_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Spectrum table (needed for UBW/SUBW).")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Sequence file destination (default: stdout).")
@click.pass_obj
def construct(client, n, metric, alpha_db, channel, param, spectrum_path, out):
    """Rank the polarized channels and emit a reliability sequence."""
    payload = {"n": n, "metric": metric, "alpha_db": alpha_db,
               "channel": channel, "param": param}
    if metric in ("UBW", "SUBW"):
        payload["spectrum_text"] = _find_spectrum_text(spectrum_path, 1 << n, True)
    data = client.post("/construct", payload)
    if out is None:
        click.echo(data["sequence_text"], nl=False)
    else:
        _write(out, data["sequence_text"])


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--seq", "seq_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Reliability sequence file.")
@click.option("--spectrum", "spectrum_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Spectrum table (needed unless --kind arikan).")
@click.option("--channel", type=click.Choice(["BEC", "BSC", "AWGN"]), required=True)
@click.option("--sweep", required=True,
              help="Comma-separated channel points (dB for AWGN).")
@click.option("--kind", type=click.Choice(["union", "ub", "subbound", "arikan"]),
              default="union", show_default=True)
@click.pass_obj
def bounds(client, n, k, seq_path, spectrum_path, channel, sweep, kind):
    """Tabulate aggregate BLER bounds over a channel sweep (JSON lines)."""
    try:
        points = [float(p) for p in sweep.split(",") if p.strip() != ""]
    except ValueError:
        raise click.ClickException("bad --sweep value: %r" % sweep) from None
    if not points:
        raise click.ClickException("--sweep must contain at least one point")
    payload = {
        "n": n,
        "k": k,
        "kind": kind,
        "channel": channel,
        "sweep": points,
        "sequence_text": _read(seq_path),
    }
    if kind != "arikan":
        payload["spectrum_text"] = _find_spectrum_text(spectrum_path, 1 << n, True)
    data = client.post("/bounds", payload)
    key = "param_db" if channel == "AWGN" else "param"
    for pt in data["points"]:
        click.echo(json.dumps(
            {"channel": channel, key: pt["point"], "kind": kind, "value": pt["value"]},
            separators=(", ", ": "),
        ))


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="SimConfig JSON (must include an explicit seed).")
@click.option("--spectrum", "spectrum_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Spectrum table (needed for UBW/SUBW metrics).")
@click.option("--out", type=click.Path(dir_okay=False), required=True,
              help="Results file destination (JSON lines).")
@click.pass_obj
def simulate(client, config_path, spectrum_path, out):
    """Run a seeded Monte-Carlo BLER sweep."""
    config_json = _read(config_path)
    try:
        obj = json.loads(config_json)
    except ValueError as exc:
        raise click.ClickException("bad config JSON: %s" % exc) from None
    if "seed" not in obj:
        raise click.ClickException("config must set an explicit seed")
    payload = {"config_json": config_json}
    if obj.get("metric") in ("UBW", "SUBW"):
        payload["spectrum_text"] = _find_spectrum_text(
            spectrum_path, 1 << int(obj["n"]), True
        )
    elif spectrum_path is not None:
        payload["spectrum_text"] = _read(spectrum_path)
    data = client.post("/simulate", payload)
    _write(out, data["results_text"])
    click.echo("wrote %s" % out)


@main.command()
@click.option("--n", type=int, default=5, show_default=True,
              help="Largest block length exponent covered by the checks.")
@click.pass_obj
def verify(client, n):
    """Run the invariant suite; nonzero exit on any failure."""
    data = client.post("/verify", {"n": n})
    for check in data["checks"]:
        click.echo("%-18s %-4s %s"
                   % (check["name"], "ok" if check["ok"] else "FAIL", check["detail"]))
    if not data["ok"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
