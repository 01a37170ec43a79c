"""Green function of the biharmonic operator on a partially hinged plate.

The plate ``(0, pi) x (-ell, ell)`` is hinged on ``x = 0, pi`` and free on
``y = +-ell``.  The package evaluates the Fourier series of the Green
function with certified truncation bounds, solves the plate equation for
box and gridded loads, and audits numerically the inequalities behind
mode monotonicity and positivity of the Green function.
"""

from .core import PlateConfig, Point, ScaledCoords, AuxValues, F_pair, F_derivs, aux_values
from .errors import DomainError, ToleranceUnreachable
from .modes import ModeValue, phi_scaled, phi_m, phi_limit, cbar_coeffs, mode_gap
from .green import SeriesValue, GridSpec, green_eval, green_grid, positivity_scan
from .loads import (BoxLoad, GridLoad, ModalProfile, modal_load_coeff, phi_convolution,
                    box_coeffs, solve_box, solve_grid_load)

from .verify import (InequalityId, VerifyGrid, MarginReport, check, check_all,
                     check_sin_lemmas, constants)

__version__ = "0.1.0"
