"""
Factorial growth from gluing blocks
===================================

Covers of type (0, 1^m, 1^m) assembled from blocks in every order.
"""

import math

from realhurwitz.enhanced import block_family_bound, build_block_family, enhanced_number

for m in range(4, 14):
    keys = {c.key() for c in build_block_family(m)}
    print(f"m={m:2d}  distinct covers={len(keys):3d}  bound={block_family_bound(m)}")

# Full enumeration is only practical for small m
for m in range(4, 8):
    e = enhanced_number(0, (1,) * m, (1,) * m)
    print(f"E_0(1^{m}, 1^{m}) = {e}  >=  {math.factorial((m - 1) // 3)}")
