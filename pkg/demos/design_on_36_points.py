"""Build and verify the flag-regular 2-(36,8,4) design on the 6x6 grid.

The group is a twisted diagonal copy of Sym(6): one generator acts as
(1,2) on row indices and (1,4)(2,6)(3,5) on column indices, the other as
(1,2,3,4,5,6) on rows and (1,3)(2,6,5) on columns (the column actions are
the images of the row actions under the exceptional outer automorphism of
Sym(6)).  The design is the orbit of one 8-point base block.
"""

from ftdesigns.construct import (
    CONSTRUCTION_36_BASE_BLOCK,
    construction_36,
    grid_coords,
    twisted_diagonal_group,
)
from ftdesigns.design import (
    check_2_design,
    flags,
    intersection_profile,
    is_flag_transitive,
    tuple_of,
)
from ftdesigns.perm import PermGroup

group = twisted_diagonal_group()
print("group order:", group.order())
print("base block (grid coordinates):",
      sorted(grid_coords(p) for p in CONSTRUCTION_36_BASE_BLOCK))

design = construction_36()
params = check_2_design(design)
print("design parameters (v, b, k, r, lambda):", params.as_tuple())

transitive, orbit_count = is_flag_transitive(group, design)
print("flag-transitive:", transitive, "| flags:", len(flags(design)),
      "= group order (flag-regular):", group.order() == len(flags(design)))

systems = group.block_systems()
print("invariant partitions:", [(s.part_size, s.num_parts) for s in systems],
      "(the rows and the columns of the grid)")
for system in systems:
    profile = intersection_profile(design, system)
    t = tuple_of(design, group, system)
    print("  partition with parts of size %d: ell = %d, full tuple %s"
          % (system.part_size, profile.ell, t.as_dict()))

# The index-2 subgroup of words of even length in the two generators is
# still block-transitive but splits the flags into two orbits.
a1, a2 = group.generators
even_words = PermGroup([a1 * a2, a2 * a1])
print("even-word subgroup order:", even_words.order())
print("its flag orbits:", is_flag_transitive(even_words, design)[1])
