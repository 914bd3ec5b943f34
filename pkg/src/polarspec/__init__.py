"""Polar-code toolkit: exact weight spectra of the polarized subchannels,
analytical error/capacity bounds built on them, spectrum-based code
construction, and SC/SCL decoding under seeded Monte-Carlo simulation.
"""

from .bounds import (
    BoundReport,
    ChannelSpec,
    bec_exact_polarization,
    bhattacharyya_param,
    bler_arikan_bound,
    bler_simplified_ub,
    bler_ub_bound,
    bler_union_bound,
    capacity_bounds,
    db_to_linear,
    linear_to_db,
    pep,
    z_bounds,
)
from .channels import LLR_MAX, RngStream, transmit
from .construction import (
    MetricVector,
    ReliabilitySequence,
    bhattacharyya_construct,
    ga_construct,
    load_sequence,
    pw_construct,
    rank,
    save_sequence,
    select_info_set,
    subw,
    ubw,
)
from .decoders import DecodeResult, sc_decode, scl_decode
from .errors import (
    CapacityError,
    DependencyError,
    InconsistencyError,
    PolarSpecError,
    SpectrumFormatError,
)
from .kernel import CodeConfig, assemble_source, encode, generator_matrix
from .sim import SimConfig, SimPoint, SimResult, resolve_info_set, run_bler
from .spectrum import (
    PolarSpectrum,
    SpectrumTable,
    WeightDistribution,
    brute_force_spectrum,
    d_min,
    enumerate_spectra,
    enumerate_spectra_all,
    load_table,
    loads_table,
    macwilliams_transform,
    save_table,
    spectrum_filename,
)
from .verify import run_verification

__version__ = "1.0.0"

__all__ = [
    "BoundReport",
    "CapacityError",
    "ChannelSpec",
    "CodeConfig",
    "DecodeResult",
    "DependencyError",
    "InconsistencyError",
    "LLR_MAX",
    "MetricVector",
    "PolarSpecError",
    "PolarSpectrum",
    "ReliabilitySequence",
    "RngStream",
    "SimConfig",
    "SimPoint",
    "SimResult",
    "SpectrumFormatError",
    "SpectrumTable",
    "WeightDistribution",
    "assemble_source",
    "bec_exact_polarization",
    "bhattacharyya_construct",
    "bhattacharyya_param",
    "bler_arikan_bound",
    "bler_simplified_ub",
    "bler_ub_bound",
    "bler_union_bound",
    "brute_force_spectrum",
    "capacity_bounds",
    "d_min",
    "db_to_linear",
    "encode",
    "enumerate_spectra",
    "enumerate_spectra_all",
    "ga_construct",
    "generator_matrix",
    "linear_to_db",
    "load_sequence",
    "load_table",
    "loads_table",
    "macwilliams_transform",
    "pep",
    "pw_construct",
    "rank",
    "resolve_info_set",
    "run_bler",
    "run_verification",
    "save_sequence",
    "save_table",
    "sc_decode",
    "scl_decode",
    "select_info_set",
    "spectrum_filename",
    "subw",
    "transmit",
    "ubw",
    "z_bounds",
]
