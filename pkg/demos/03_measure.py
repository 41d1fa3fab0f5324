"""The entanglement measure in its three conventions.

For two qutrits the measure weights the volume of the three vectors by 9
and the sum of pairwise areas by 2, so it runs from 0 on product states to
1 on the maximally entangled state. For general qudits the unit-weight sum
is also available, along with a version rescaled to peak at one.
"""

import numpy as np

from wedgeent.measure import (
    Counting,
    MeasureMode,
    eg_bipartite,
    eg_multipartite,
    eg_two_qutrit,
    i_concurrence,
)
from wedgeent.states import PureState, product_state, random_state, two_qutrit

for label, s in [
    ("product |00>", two_qutrit(a=1)),
    ("(|00>+|11>)/sqrt2", two_qutrit(a=1, q=1)),
    ("(|00>+|11>+|22>)/sqrt3", two_qutrit(a=1, q=1, z=1)),
]:
    rep = eg_two_qutrit(s)
    print(f"{label:24s} E = {rep.value:.6f}  volume^2 = {rep.volume_sq:.6f}  "
          f"pair areas = {rep.wedge_terms_by_order[2]:.6f}")

s = random_state((3, 3), seed=0)
print("\nrandom two-qutrit state in every mode:")
for mode in MeasureMode:
    print(f"  {mode.name:10s} {eg_bipartite(s, (0,), mode).value:.6f}")

# measuring either party gives the same value
print("party 0 vs party 1:", eg_two_qutrit(s, 0).value, eg_two_qutrit(s, 1).value)

# the pair-area term is the I-concurrence in disguise
c = i_concurrence(s)
print(f"I-concurrence^2 = {c**2:.12f}, 4 x pair areas = {4 * eg_two_qutrit(s).wedge_terms_by_order[2]:.12f}")

amps = np.zeros((2, 2, 2))
amps[0, 0, 0] = amps[1, 1, 1] = 2**-0.5
ghz = PureState((2, 2, 2), amps)
once = eg_multipartite(ghz)
print("\nGHZ, each bipartition once:", once.total)
for parties, value in once.breakdown:
    print(f"  measured {parties}: {value}")
print("GHZ, every nonempty proper subset:", eg_multipartite(ghz, Counting.ALL_SUBSETS).total)
print("product of three qubits:", eg_multipartite(product_state([[1, 0], [1, 1], [0, 1]])).total)
