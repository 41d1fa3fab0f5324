"""What local unitaries preserve.

The measure and the rank of the coefficient matrix are invariant under a
unitary on either party, so Type I stays Type I. Mutual orthogonality is
more delicate. A unitary on the unmeasured party rotates all three vectors
alike and keeps it. A unitary on the measured party mixes the vectors; the
Gram matrix diag(n0, n1, n2) becomes U diag(n) U^H, which stays diagonal
only when the three norms agree.
"""

import numpy as np

from wedgeent.classify import classify_two_qutrit
from wedgeent.measure import eg_two_qutrit
from wedgeent.states import LocalUnitary, apply_local_unitary, random_unitary, two_qutrit

u = random_unitary(3, seed=1)

for label, s in [
    ("equal norms", two_qutrit(a=1, q=1, z=1)),
    ("norms 0.5, 0.3, 0.2", two_qutrit(a=np.sqrt(0.5), q=np.sqrt(0.3), z=np.sqrt(0.2))),
]:
    print(label)
    before = classify_two_qutrit(s)
    print(f"  before:           {before.ent_class.name:9s} Op {before.orthogonal_pairs}  "
          f"E = {eg_two_qutrit(s).value:.12f}")
    for party in (1, 0):
        t = apply_local_unitary(s, LocalUnitary(party, u))
        rep = classify_two_qutrit(t)
        print(f"  U on party {party}:     {rep.ent_class.name:9s} Op {rep.orthogonal_pairs}  "
              f"E = {eg_two_qutrit(t).value:.12f}")
