"""
Why the real locus never touches the one-dimensional boundary.

Prints the residue tables behind the impossibility argument and replays
each one through the second implementation.
"""

from collections import Counter

from antiholo.boundary import no_real_boundary_certificate, q_matrix, replay_certificate
from antiholo.sampling import make_rng, random_sp4z_word
from antiholo.symgroup import make_constants

for d in (-1, -2, -3, -7):
    C = make_constants(d)
    rng = make_rng(d)
    zeros = all(q_matrix(random_sp4z_word(rng, 3), C)[0, 2] == 0 for _ in range(200))
    print(f"d = {d}: q13 vanishes on 200 random g: {zeros}")

print()
for d, N in ((-3, 4), (-7, 8), (-2, 2), (-2, 6), (-1, 4), (-1, 6)):
    cert = no_real_boundary_certificate(d, N)
    tally = Counter(tag for _, tag in cert.cases)
    print(f"d = {d:>3}, N = {N}: {len(cert.cases):5d} residue cases mod {cert.modulus},",
          dict(tally), "| replay:", replay_certificate(cert.to_json()),
          f"| {cert.note}" if cert.note else "")
