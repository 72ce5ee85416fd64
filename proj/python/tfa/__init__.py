"""Discrete Wigner / STFT toolbox bindings."""

from ._core import (
    Grid,
    IFComparison,
    IFTrack,
    Signal,
    TimeFrequencyMatrix,
    classify_vcon,
    compare_if,
    cross_wigner,
    dft,
    freq_axis,
    gen_bandlimited,
    gen_chirp,
    gen_gaussian,
    gen_tone,
    idft,
    if_moment,
    if_phase_gradient,
    marginal_freq,
    marginal_time,
    run_verification,
    stft,
    total_energy,
    wigner,
)

__all__ = [
    "Grid",
    "IFComparison",
    "IFTrack",
    "Signal",
    "TimeFrequencyMatrix",
    "classify_vcon",
    "compare_if",
    "cross_wigner",
    "dft",
    "freq_axis",
    "gen_bandlimited",
    "gen_chirp",
    "gen_gaussian",
    "gen_tone",
    "idft",
    "if_moment",
    "if_phase_gradient",
    "marginal_freq",
    "marginal_time",
    "run_verification",
    "stft",
    "total_energy",
    "wigner",
]
