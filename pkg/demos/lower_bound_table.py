"""
Enhanced numbers against real counts
====================================

E_g(λ, μ) never depends on the signs; the real count does, but always sits
above E with the same parity.
"""

from realhurwitz.enhanced import enhanced_number
from realhurwitz.perms import SignSplitting
from realhurwitz.oracle import branch_point_count
from realhurwitz.tropical.enumerate import real_hurwitz_tropical

types = [
    (0, (3, 1), (2, 2)),
    (0, (2, 1, 1), (2, 1, 1)),
    (1, (3, 1), (3, 1)),
    (0, (3, 3), (2, 2, 1, 1)),
    (0, (5, 1), (3, 1, 1, 1)),
]

for g, lam, mu in types:
    r = branch_point_count(g, lam, mu)
    e = enhanced_number(g, lam, mu)
    counts = {str(s): real_hurwitz_tropical(g, lam, mu, s) for s in SignSplitting.all_of_length(r)}
    print(f"g={g} λ={lam} μ={mu}  E={e}  H by signs: {counts}")
