import random
from itertools import combinations
from math import comb

import pytest

from ftdesigns.construct import (
    construction_36,
    grid_index,
    projective_design,
    semilinear_group_15,
    twisted_diagonal_group,
    design_96,
)
from ftdesigns.design import (
    Design,
    DesignError,
    GeneratorNotAutomorphism,
    NotTwoDesignError,
    check_2_design,
    flags,
    format_design_text,
    intersection_profile,
    is_automorphism,
    is_flag_transitive,
    parse_design_text,
    tuple_of,
)
from ftdesigns.perm import PermGroup, Permutation, parse_cycles


def naive_pair_check(d):
    """Brute-force 2-design oracle: counts pairs with dictionaries only."""
    ks = {len(b) for b in d.blocks}
    if len(ks) != 1:
        return None
    k = ks.pop()
    counts = {}
    for blk in d.blocks:
        for a, b in combinations(blk, 2):
            counts[(a, b)] = counts.get((a, b), 0) + 1
    values = {counts.get(pair, 0) for pair in combinations(range(1, d.v + 1), 2)}
    if len(values) != 1:
        return None
    lam = values.pop()
    if lam < 1:
        return None
    per_point = {}
    for blk in d.blocks:
        for p in blk:
            per_point[p] = per_point.get(p, 0) + 1
    rs = set(per_point.get(p, 0) for p in range(1, d.v + 1))
    if len(rs) != 1:
        return None
    return (d.v, d.b, k, rs.pop(), lam)


def test_design_normalization_and_errors():
    d = Design(4, [(2, 1), (3, 4)])
    assert d.blocks == ((1, 2), (3, 4))
    with pytest.raises(DesignError):
        Design(4, [(1, 2), (2, 1)])  # repeated block
    with pytest.raises(DesignError):
        Design(4, [(1, 5)])
    with pytest.raises(DesignError):
        Design(4, [()])


def test_check_2_design_golden():
    complete = Design(4, combinations(range(1, 5), 2))
    params = check_2_design(complete)
    assert params.as_tuple() == (4, 6, 2, 3, 1)
    assert not params.nontrivial
    assert check_2_design(construction_36()).as_tuple() == (36, 90, 8, 20, 4)
    assert check_2_design(projective_design(3)).as_tuple() == (15, 15, 8, 8, 4)


def test_check_2_design_failures():
    with pytest.raises(NotTwoDesignError) as err:
        check_2_design(Design(4, [(1, 2), (1, 2, 3)]))
    assert err.value.condition == "non-constant-block-size"
    with pytest.raises(NotTwoDesignError) as err:
        check_2_design(Design(4, [(1, 2), (1, 3), (3, 4)]))
    assert err.value.condition == "non-constant-pair-coverage"
    assert err.value.witness is not None


def test_oracle_equivalence_small_designs():
    rng = random.Random(2024)
    agree = 0
    for _ in range(300):
        v = rng.randint(4, 20)
        k = rng.randint(2, max(2, v // 2))
        nblocks = rng.randint(2, 14)
        pool = list(combinations(range(1, v + 1), k))
        if nblocks > len(pool):
            continue
        d = Design(v, rng.sample(pool, nblocks))
        expected = naive_pair_check(d)
        try:
            got = check_2_design(d).as_tuple()
        except NotTwoDesignError:
            got = None
        assert got == expected
        if expected is not None:
            agree += 1
    # the sample must include genuine 2-designs for the check to be meaningful
    assert agree >= 1


def test_oracle_equivalence_on_real_designs():
    for d in (construction_36(), projective_design(3)):
        assert naive_pair_check(d) == check_2_design(d).as_tuple()


def test_flags_counts():
    assert len(flags(construction_36())) == 720
    assert len(flags(projective_design(3))) == 120
    assert len(flags(Design(2, [(1, 2)]))) == 2
    d = projective_design(3)
    for f in flags(d)[:20]:
        assert f.point in d.blocks[f.block_index]


def test_is_automorphism():
    d = construction_36()
    g = twisted_diagonal_group()
    for gen in g.generators:
        assert is_automorphism(d, gen)
    assert is_automorphism(d, Permutation.identity(36))
    swap = Permutation(
        [grid_index(j, i) for i in range(1, 7) for j in range(1, 7)]
    )
    assert not is_automorphism(d, swap)


def test_flag_transitivity():
    d = construction_36()
    g = twisted_diagonal_group()
    ok, norbits = is_flag_transitive(g, d)
    assert ok and norbits == 1
    assert g.order() == len(flags(d))  # flag-regular
    # index-2 even-word subgroup is block-transitive but has 2 flag orbits
    a1, a2 = g.generators
    sub = PermGroup([a1 * a2, a2 * a1])
    assert sub.order() == 360
    ok, norbits = is_flag_transitive(sub, d)
    assert not ok and norbits == 2
    # trivial group on any design with >= 2 flags
    triv = PermGroup([Permutation.identity(36)])
    ok, norbits = is_flag_transitive(triv, d)
    assert not ok and norbits == len(flags(d))


def test_flag_transitive_implies_point_and_block_transitive():
    d = construction_36()
    g = twisted_diagonal_group()
    ok, _ = is_flag_transitive(g, d)
    assert ok
    assert g.is_transitive()
    orbit, _ = g.orbit_of_set(d.blocks[0])
    assert len(orbit) == d.b


def test_flag_transitivity_requires_automorphisms():
    d = construction_36()
    bad = PermGroup([parse_cycles("(1,2)", 36)])
    with pytest.raises(GeneratorNotAutomorphism):
        is_flag_transitive(bad, d)


def test_intersection_profile():
    d = construction_36()
    g = twisted_diagonal_group()
    for system in g.block_systems():
        prof = intersection_profile(d, system)
        assert prof.constant and prof.ell == 2 and prof.parts_met_per_block == 4
    d15 = projective_design(3)
    s15 = semilinear_group_15()
    prof = intersection_profile(d15, s15.block_systems()[0])
    assert prof.constant and prof.ell == 2 and prof.parts_met_per_block == 4
    # degenerate: blocks inside single parts give ell = k
    c4 = PermGroup([parse_cycles("(1,2,3,4)", 4)])
    prof = intersection_profile(Design(4, [(1, 3), (2, 4)]), c4.block_systems()[0])
    assert prof.constant and prof.ell == 2 and prof.parts_met_per_block == 1


def test_intersection_profile_non_constant():
    c4 = PermGroup([parse_cycles("(1,2,3,4)", 4)])
    prof = intersection_profile(Design(4, [(1, 3), (1, 2)]), c4.block_systems()[0])
    assert not prof.constant and prof.witness is not None


def test_tuple_of_golden():
    d = construction_36()
    g = twisted_diagonal_group()
    for system in g.block_systems():
        t = tuple_of(d, g, system)
        assert (t.lam, t.v, t.k, t.r, t.b, t.c, t.d, t.ell) == (4, 36, 8, 20, 90, 6, 6, 2)
        assert t.x == 1
    t = tuple_of(projective_design(3), semilinear_group_15(),
                 semilinear_group_15().block_systems()[0])
    assert (t.lam, t.v, t.k, t.r, t.b, t.c, t.d, t.ell) == (4, 15, 8, 8, 15, 3, 5, 2)
    # both x-formulas agree here: x = k-1-d(ell-1) = 2 and k = xc+ell = 2*3+2
    assert t.x == 2


def test_96_point_profiles():
    group, d = design_96("h1", 2)
    ok, _ = is_flag_transitive(group, d)
    assert not ok  # |H| = 96 < 1920 flags, so H cannot be flag-transitive
    good = [s for s in group.block_systems()
            if s.part_size == 16 and intersection_profile(d, s).constant]
    assert good and all(intersection_profile(d, s).ell == 4 for s in good)
    # tuple_of requires flag-transitivity
    with pytest.raises(DesignError):
        tuple_of(d, group, good[0])


def test_counting_identities():
    for d in (construction_36(), projective_design(3)):
        params = check_2_design(d)
        assert d.b * comb(params.k, 2) == params.lam * comb(params.v, 2)
        for p in range(1, d.v + 1):
            assert sum(1 for blk in d.blocks if p in blk) == params.r


def test_design_file_round_trip():
    d = construction_36()
    text = format_design_text(d)
    assert text.splitlines()[0] == "v 36"
    assert parse_design_text(text) == d
    with pytest.raises(DesignError):
        parse_design_text("blocks\n1 2\n")
    with pytest.raises(DesignError):
        parse_design_text("v 4\n1 x\n")
