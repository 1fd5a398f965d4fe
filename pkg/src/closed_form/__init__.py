# 闭式公式
from src.closed_form.unicyclic import (
    cycle_spectrum,
    rho2_positive,
    rho12_square_sum,
    sign_polynomial,
    stated_rho2_positive,
    unicyclic_block_matrix,
    unicyclic_energy_closed,
    unicyclic_energy_profile,
    unicyclic_rho12,
    unicyclic_spectral_radius,
    unicyclic_spectrum_closed,
    unicyclic_spectrum_parts,
    unicyclic_trace_square,
)
from src.closed_form.bounds import (
    energy_bounds,
    energy_cauchy_schwarz_bound,
    general_energy_bounds,
    spectral_radius_bounds,
    trace_square_bound,
    unicyclic_extremes,
    unicyclic_min_spectral_radius,
    unicyclic_stated_min,
)

__all__ = [
    "cycle_spectrum",
    "energy_bounds",
    "energy_cauchy_schwarz_bound",
    "general_energy_bounds",
    "rho12_square_sum",
    "rho2_positive",
    "sign_polynomial",
    "spectral_radius_bounds",
    "stated_rho2_positive",
    "trace_square_bound",
    "unicyclic_block_matrix",
    "unicyclic_energy_closed",
    "unicyclic_energy_profile",
    "unicyclic_extremes",
    "unicyclic_min_spectral_radius",
    "unicyclic_stated_min",
    "unicyclic_rho12",
    "unicyclic_spectral_radius",
    "unicyclic_spectrum_closed",
    "unicyclic_spectrum_parts",
    "unicyclic_trace_square",
]
