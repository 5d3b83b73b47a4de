"""Real points of the level-3 Humbert surface for the Gaussian integers, one cocycle at a time."""

import random

from antiholo import jsonio as jio
from antiholo.abelian import MarkedSurface, level_compatible
from antiholo.galois import (component_map, same_fiber_audit, solve_coboundary_integral,
                             solve_coboundary_real)
from antiholo.halfspace import in_phi_image, is_gamma_real
from antiholo.sampling import random_h3_point, seeded_coboundary
from antiholo.symgroup import J, hat, make_constants, sp4_inverse

C = make_constants(-1)
N = 3


def show(label, M):
    print(label)
    for row in jio.enc_mat(M):
        print("   ", row)


# J is its own hat inverse, so it is a cocycle; over Q it is a coboundary
W = solve_coboundary_real(J, C)
print("gamma = J, branch:", W.branch, " lambda =", W.lam)
show("real witness g:", W.g)
print("hat(g) g^-1 == J:", hat(W.g, C) * sp4_inverse(W.g) == J)
show("gamma-real point Z:", W.Z.Z)
print()

# J is not congruent to I mod 3, so it has no level-3 structure; take a seeded one instead
rng = random.Random(2024)
g0, gamma = seeded_coboundary(rng, N, C)
show("seeded gamma in Gamma_3:", gamma)
W = solve_coboundary_integral(gamma, N, C)
show("integral witness g:", W.g)
print("differs from the seed only by phi(SL2(O_d)):", same_fiber_audit(g0, W.g, C))

pd = W.period
print("normal form case:", pd.case)
show("Omega:", pd.Omega.Z)
print("Omega lies in phi(H3):", in_phi_image(pd.Omega, C))

# g . phi(w) sweeps out the component E_gamma
for _ in range(3):
    Z = component_map(W.g, random_h3_point(rng), C)
    ms = MarkedSurface(Z, gamma, N, C)
    print("gamma-real:", is_gamma_real(Z, gamma, C), " level compatible:", level_compatible(ms))
