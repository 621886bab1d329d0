"""Spectral toolkit for Bergman-type integral operators on the unit ball.

Thin Python surface over the C++ core: closed-form spectra, Schatten and
Macaev membership, Dixmier traces, Forelli-Rudin integrals, the Berezin
transform, the compactness classifier, and the verification suites.
"""

from ._bergman import (
    BergmanError,
    berezin_closed,
    compactness,
    dixmier_trace,
    eigenvalue,
    fr_series,
    multiplicity,
    nystrom_eigenvalues,
    run_suite,
    schatten_macaev,
    schatten_sum,
    singular_values,
    trace_formula,
)

__all__ = [
    "BergmanError",
    "berezin_closed",
    "compactness",
    "dixmier_trace",
    "eigenvalue",
    "fr_series",
    "multiplicity",
    "nystrom_eigenvalues",
    "run_suite",
    "schatten_macaev",
    "schatten_sum",
    "singular_values",
    "trace_formula",
]
