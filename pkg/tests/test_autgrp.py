import random
from itertools import combinations, permutations

import pytest

from ftdesigns.autgrp import (
    ResourceCapExceeded,
    are_isomorphic,
    automorphism_group,
    canonical_form,
)
from ftdesigns.construct import (
    construction_36,
    construction_36_cosets,
    projective_design,
    twisted_diagonal_group,
    design_96,
)
from ftdesigns.design import Design, is_automorphism
from ftdesigns.perm import Permutation


def brute_aut_order(d):
    count = 0
    blocks = d.block_set
    for images in permutations(range(1, d.v + 1)):
        p = Permutation(images)
        if all(p.image_of_set(b) in blocks for b in d.blocks):
            count += 1
    return count


def random_design(rng, vmax=8):
    v = rng.randint(4, vmax)
    pool = [c for k in (2, 3, 4) for c in combinations(range(1, v + 1), k)]
    nblocks = rng.randint(2, min(9, len(pool)))
    return Design(v, rng.sample(pool, nblocks))


def test_brute_force_equivalence_small():
    rng = random.Random(99)
    for _ in range(15):
        d = random_design(rng, vmax=7)
        assert automorphism_group(d).order == brute_aut_order(d)
    # a couple at v = 8
    rng = random.Random(5)
    for _ in range(2):
        d = random_design(rng, vmax=8)
        assert automorphism_group(d).order == brute_aut_order(d)


def test_generators_are_sound():
    for d in (projective_design(3), construction_36()):
        result = automorphism_group(d)
        for gen in result.group.generators:
            assert is_automorphism(d, gen)


def test_known_aut_orders_small():
    assert automorphism_group(construction_36()).order == 720
    assert automorphism_group(projective_design(3)).order == 20160


def test_aut_contains_constructing_group():
    result = automorphism_group(construction_36())
    g = twisted_diagonal_group()
    assert result.order % g.order() == 0
    for gen in g.generators:
        assert result.group.contains(gen)
    # here the constructing group is the full automorphism group
    assert result.order == g.order()


def test_canonical_form_definition():
    d = projective_design(3)
    cf = canonical_form(d)
    assert d.relabel(cf.relabeling).blocks == cf.blocks
    assert cf.certificate == canonical_form(d).certificate


def test_canonical_form_stability():
    rng = random.Random(17)
    d = projective_design(3)
    cf = canonical_form(d)
    for _ in range(12):
        p = Permutation(rng.sample(range(1, 16), 15))
        assert canonical_form(d.relabel(p)).certificate == cf.certificate
    small = random_design(random.Random(1), vmax=8)
    cf = canonical_form(small)
    for _ in range(12):
        p = Permutation(rng.sample(range(1, small.v + 1), small.v))
        assert canonical_form(small.relabel(p)).certificate == cf.certificate


def test_isomorphism_grid_vs_cosets():
    d1 = construction_36()
    d2 = construction_36_cosets()
    assert canonical_form(d1).certificate == canonical_form(d2).certificate
    iso, witness = are_isomorphic(d1, d2)
    assert iso
    assert {witness.image_of_set(b) for b in d1.blocks} == set(d2.block_set)


def test_non_isomorphic_cases():
    assert are_isomorphic(construction_36(), projective_design(3)) == (False, None)
    d = projective_design(3)
    relabeled = d.relabel(Permutation(range(15, 0, -1)))
    iso, witness = are_isomorphic(d, relabeled)
    assert iso and witness is not None


def test_h2_design_aut_order_and_tuple():
    _, d = design_96("h2", 2)
    result = automorphism_group(d)
    assert result.order == 7680
    assert result.nodes_explored < 10**7
    # the full automorphism group is flag-transitive on this design and
    # preserves a partition into 6 parts of 16; the assembled tuple follows
    from ftdesigns.design import intersection_profile, is_flag_transitive, tuple_of
    ft, orbits = is_flag_transitive(result.group, d)
    assert ft and orbits == 1
    systems = [s for s in result.group.block_systems() if s.part_size == 16]
    assert systems
    t = tuple_of(d, result.group, systems[0])
    assert (t.lam, t.v, t.k, t.r, t.b, t.c, t.d, t.ell, t.x) == \
        (4, 96, 20, 20, 96, 16, 6, 4, 1)


def test_h2_designs_not_isomorphic():
    _, d1 = design_96("h2", 1)
    _, d2 = design_96("h2", 2)
    iso, witness = are_isomorphic(d1, d2)
    assert not iso and witness is None


def test_resource_cap():
    with pytest.raises(ResourceCapExceeded):
        automorphism_group(construction_36(), node_cap=3)
