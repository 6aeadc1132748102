from .delsarte import (
    DelsarteSolver,
    DualCertificate,
    OptimalityResult,
    as_min_energy,
    delsarte_min_energy,
    delsarte_program,
    fundamental_minima,
    is_lp_universally_optimal,
    trivial_certificate,
    universal_quasicode,
    verify_certificate,
)
from .simplex import Constraint, LinearProgram, LPResult, solve_lp

__all__ = [
    "Constraint",
    "DelsarteSolver",
    "DualCertificate",
    "LPResult",
    "LinearProgram",
    "OptimalityResult",
    "as_min_energy",
    "delsarte_min_energy",
    "delsarte_program",
    "fundamental_minima",
    "is_lp_universally_optimal",
    "solve_lp",
    "trivial_certificate",
    "universal_quasicode",
    "verify_certificate",
]
