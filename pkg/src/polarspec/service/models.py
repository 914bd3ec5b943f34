"""Request/response schemas of the HTTP service.

File-shaped payloads (spectrum tables, reliability sequences, results) travel
as their canonical text formats, so clients can write them to disk unchanged
and byte-identical behavior is preserved across the wire.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class SpectrumRequest(BaseModel):
    n: int = Field(ge=1, le=12)
    oracle_check: bool = False


class SpectrumFile(BaseModel):
    filename: str
    content: str


class SpectrumResponse(BaseModel):
    files: List[SpectrumFile]


class ConstructRequest(BaseModel):
    n: int = Field(ge=0, le=20)
    metric: str
    alpha_db: Optional[float] = None
    channel: Optional[str] = None
    param: Optional[float] = None
    spectrum_text: Optional[str] = None


class ConstructResponse(BaseModel):
    sequence_text: str


class BoundsRequest(BaseModel):
    n: int = Field(ge=0, le=20)
    k: int = Field(ge=0)
    kind: str  # union | ub | subbound | arikan
    channel: str
    sweep: List[float]  # dB for AWGN, linear probability otherwise
    sequence_text: str
    spectrum_text: Optional[str] = None


class BoundPoint(BaseModel):
    point: float
    value: float


class BoundsResponse(BaseModel):
    kind: str
    channel: str
    points: List[BoundPoint]


class SimulateRequest(BaseModel):
    config_json: str
    spectrum_text: Optional[str] = None


class SimulateResponse(BaseModel):
    results_text: str


class VerifyRequest(BaseModel):
    n: int = Field(ge=1, le=10, default=5)


class VerifyCheck(BaseModel):
    name: str
    ok: bool
    detail: str


class VerifyResponse(BaseModel):
    ok: bool
    checks: List[VerifyCheck]
