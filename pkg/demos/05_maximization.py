"""Largest entanglement reachable on a support pattern.

Multi-restart projected gradient ascent on the unit sphere of the allowed
coefficients. When the best value is only approached as some coefficients
shrink to zero, the result is a supremum: ``attained`` is False and the
vanishing coefficients are reported.
"""

from wedgeent.optimize import maximize_eg
from wedgeent.tables import ROWS

res = maximize_eg("00,11,22", seed=0)
print("support 00,11,22:", res.best_value, "attained:", res.attained)
print("magnitudes at the optimum:\n", res.magnitudes().round(6))
print("restart 0 trace (first few accepted steps):", [(i, round(v, 6)) for i, v in res.trace[:5]])

print("\nevery catalogue support (32 restarts, seed 0):")
for row in ROWS:
    r = maximize_eg(row.support)
    status = "attained" if r.attained else "sup, vanishing " + ",".join(
        f"{i}{j}" for i, j in sorted(r.boundary_indices))
    print(f"  {row.key:5s} {row.names:7s} {r.best_value:.6f}  {status}")
