"""
When d divides N the two level tests part ways.

h = ((I, 6 E22), (0, I)) lies in Gamma(6), but for d = -2 its hat carries
a -3 in the upper right block, so hat(h) is not I mod 6.  The gamma it produces passes the diagram test and fails
the congruence test, and level_compatible refuses to pick one.
"""

from antiholo.abelian import (MarkedSurface, isomorphism_witness_check, level_compatible,
                              level_congruence, level_diagram_direct)
from antiholo.arith import Mat
from antiholo.errors import InvariantError
from antiholo.galois import coboundary
from antiholo.halfspace import act
from antiholo.symgroup import I2, I4, hat, make_constants

C = make_constants(-2)
h = Mat.from_blocks(I2, Mat([[0, 0], [0, 6]]), Mat.zeros(2), I2)
print("hat(h) =", hat(h, C).rows)

gamma = coboundary(h, C)
ms = MarkedSurface(act(h, C.e1), gamma, 6, C)
print("congruence test:", level_congruence(ms))
print("diagram test:   ", level_diagram_direct(ms))
try:
    level_compatible(ms)
except InvariantError as e:
    print("level_compatible:", e)

ms0 = MarkedSurface(C.e1, I4, 6, C)
print("h accepted as an isomorphism of level-6 structures:",
      isomorphism_witness_check(ms0, ms, h))
