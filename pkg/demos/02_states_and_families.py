"""From a state to its post-measurement vectors and back.

Measuring party 0 of a two-qutrit state in the computational basis leaves
the other party in one of three unnormalized vectors: the rows of the
coefficient matrix. Any subset of parties can play the measured role.
"""

import numpy as np

from wedgeent.states import (
    PureState,
    all_bipartitions,
    post_measurement_vectors,
    random_state,
    reconstruct,
    reduced_purity,
    two_qutrit,
)

s = two_qutrit(a=1, b=1j, q=1, z=0.5)
print(s)
fam = post_measurement_vectors(s, 0)
print("vectors left for party 1:\n", np.round(fam.vectors, 4))
print("vectors left for party 0 (columns):\n", np.round(post_measurement_vectors(s, 1).vectors, 4))

# three qubits: measuring {0} leaves vectors in C^4, measuring {0, 2} leaves them in C^2
amps = np.zeros((2, 2, 2))
amps[0, 0, 0] = amps[1, 1, 1] = 2**-0.5
ghz = PureState((2, 2, 2), amps)
for bp in all_bipartitions(3, containing_first=True):
    f = post_measurement_vectors(ghz, bp)
    print(f"GHZ, measured {bp.parties}: {len(f)} vectors in C^{f.ambient_dim}, "
          f"purity {reduced_purity(ghz, bp):.3f}")

# slicing is lossless
r = random_state((2, 3, 2), seed=3)
for bp in all_bipartitions(3):
    assert np.array_equal(reconstruct(post_measurement_vectors(r, bp), r.dims), r.amplitudes)
print("round trip exact for every bipartition of a random 2x3x2 state")
