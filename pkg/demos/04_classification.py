"""Type I, II and III two-qutrit states.

Coplanar vectors (rank two) are Type I. Otherwise the state is Type II
when the three vectors are mutually orthogonal and Type III when they are
not. The catalogue lists every few-term support family with its class and
orthogonal-pair count Op.
"""

import numpy as np

from wedgeent.classify import classify_two_qutrit
from wedgeent.measure import eg_two_qutrit
from wedgeent.tables import ROWS
from wedgeent.states import two_qutrit

examples = {
    "a|00>+q|11>": two_qutrit(a=1, q=1),
    "a|00>+q|11>+z|22>": two_qutrit(a=1, q=2, z=0.5),
    "(1,2,3,1,1) on a,b,p,q,z": two_qutrit(a=1, b=2, p=3, q=1, z=1),
    "(1,1,1,-1,sqrt2) on a,b,p,q,z": two_qutrit(a=1, b=1, p=1, q=-1, z=np.sqrt(2)),
}
for label, s in examples.items():
    rep = classify_two_qutrit(s)
    print(f"{label:32s} {rep.ent_class.name:9s} rank {rep.rank}  Op {rep.orthogonal_pairs}  "
          f"E = {eg_two_qutrit(s).value:.4f}")

print("\ncatalogue:")
for row in ROWS:
    rep = classify_two_qutrit(row.example)
    mark = "ok" if (rep.ent_class, rep.orthogonal_pairs) == (row.ent_class, row.op) else "MISMATCH"
    print(f"  {row.key:5s} {row.names:7s} {rep.ent_class.name:9s} Op {rep.orthogonal_pairs}  {mark}")
