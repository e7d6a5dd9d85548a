"""
One branch point, two ways
==========================

A degree 3 cover with full ramification over 0, no ramification over
infinity and a single 3-cycle in between.
"""

from realhurwitz.oracle import count_real_tuples, real_hurwitz_oracle
from realhurwitz.tropical.enumerate import enumerate_enhanced_covers
from realhurwitz.tropical.export import to_dot

# Count the real factorization tuples directly, then divide by 3!
for signs in "+-":
    raw = count_real_tuples(0, (3,), (1, 1, 1), signs)
    print(signs, "tuples:", raw, "value:", real_hurwitz_oracle(0, (3,), (1, 1, 1), signs).value)

# The tropical side has a single class for each sign: the bridge changes colour
for signs in "+-":
    (cls,) = enumerate_enhanced_covers(0, (3,), (1, 1, 1), signs)
    print(signs, cls.shapes, "mult", cls.multiplicity)
    for i, e in enumerate(cls.cover.edges):
        print("   ", e, cls.real.edge_colour(i) or ("dotted" if i in cls.real.dotted_edges else "odd"))

# Graphviz source; pipe into `dot -Tsvg` to draw it
print(to_dot(cls))
