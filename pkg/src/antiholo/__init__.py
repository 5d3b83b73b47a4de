"""Exact computations for abelian surfaces with anti-holomorphic multiplication by O_d."""

from .arith import Mat, QComplex, QReal, qreal_sign
from .errors import InputError, InvariantError, SearchExhausted
from .symgroup import (GAMMA_HAT, GAMMA_PLAIN, GAMMA_TILDE, PID_LIST, Constants, GSpElement,
                       bullet, congruence_member, hat, make_constants, sp4_check, sp4_inverse,
                       tilde)
from .halfspace import H3Point, SiegelPoint, act, hat_point, is_gamma_real, phi_group, phi_inverse, phi_point
from .odlattice import OdElem, lambda_n_member, od_congruent_one_mod, od_module_basis, symplectic_adjust
from .abelian import (MarkedSurface, comessatti_normal_form, isomorphism_witness_check, kappa_z,
                      level_compatible)
from .galois import (coboundary, double_coset_equal_witness, is_cocycle, solve_coboundary_integral,
                     solve_coboundary_real)
from .boundary import boundary_pairing, in_p1, no_real_boundary_certificate, nu_h, replay_certificate

__version__ = "0.1.0"
