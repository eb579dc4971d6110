"""The binary hyperplane-complement designs and their imprimitive group.

For odd n, the nonzero vectors of an (n+1)-dimensional binary space form a
symmetric 2-(2^(n+1)-1, 2^n, 2^(n-1)) design whose blocks are the
complements of the hyperplanes.  For n = 3 the 15 points carry a
2-dimensional structure over the 4-element field, and the semilinear group
of that structure (order 360) is flag-transitive but preserves the
partition of the points into the five punctured lines.
"""

from ftdesigns.autgrp import automorphism_group
from ftdesigns.construct import projective_design, semilinear_group_15
from ftdesigns.design import check_2_design, intersection_profile, is_flag_transitive

for n in (3, 5, 7):
    d = projective_design(n)
    print("n=%d: parameters %s" % (n, check_2_design(d).as_tuple()))

design = projective_design(3)
group = semilinear_group_15()
print("\nsemilinear group order:", group.order())
print("flag-transitive on the 15-point design:",
      is_flag_transitive(group, design)[0])

systems = group.block_systems()
system = systems[0]
print("invariant partitions:", [(s.part_size, s.num_parts) for s in systems])
print("parts (punctured lines):", system.parts)
print("block/part intersection size:", intersection_profile(design, system).ell)

aut = automorphism_group(design)
print("full automorphism group order:", aut.order,
      "(the semilinear group has index %d)" % (aut.order // group.order()))
