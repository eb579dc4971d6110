import math
import random

import pytest

from ftdesigns.perm import (
    CycleParseError,
    GroupError,
    PermGroup,
    Permutation,
    format_cycles,
    format_group_text,
    parse_cycles,
    parse_group_text,
)


def S6():
    return PermGroup([parse_cycles("(1,2)", 6), parse_cycles("(1,2,3,4,5,6)", 6)])


def test_parse_cycles_examples():
    assert parse_cycles("(1,4)(2,6)(3,5)", 6).images == (4, 6, 5, 1, 3, 2)
    assert parse_cycles("", 5) == Permutation.identity(5)
    assert parse_cycles("()", 5) == Permutation.identity(5)
    assert parse_cycles("(1,3)(2,6,5)", 6).images == (3, 6, 1, 4, 2, 5)
    # whitespace after commas is fine
    assert parse_cycles("(1, 4)(2, 6)(3, 5)", 6).images == (4, 6, 5, 1, 3, 2)


def test_parse_cycles_errors():
    with pytest.raises(CycleParseError):
        parse_cycles("(1,2", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("(1,5)", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("(1,2)(2,3)", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("(1,x)", 4)
    with pytest.raises(CycleParseError):
        parse_cycles("1,2", 4)


def test_format_parse_round_trip():
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randint(1, 12)
        p = Permutation(rng.sample(range(1, n + 1), n))
        assert parse_cycles(format_cycles(p), n) == p


def test_compose_inverse_identity():
    rng = random.Random(3)
    for _ in range(50):
        p = Permutation(rng.sample(range(1, 9), 8))
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()


def test_composition_order():
    # (p*q)(x) = q(p(x))
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    assert (p * q)(1) == 3


def test_group_orders():
    assert S6().order() == 720
    assert PermGroup([Permutation.identity(4)]).order() == 1
    assert PermGroup([], degree=5).order() == 1
    s8 = PermGroup([parse_cycles("(1,2)", 8), parse_cycles("(1,2,3,4,5,6,7,8)", 8)])
    assert s8.order() == math.factorial(8)


def test_group_errors():
    with pytest.raises(GroupError):
        PermGroup([])
    with pytest.raises(GroupError):
        PermGroup([Permutation.identity(3), Permutation.identity(4)])


def test_contains():
    c3 = PermGroup([parse_cycles("(1,2,3)", 3)])
    assert c3.contains(parse_cycles("(1,3,2)", 3))
    assert not c3.contains(parse_cycles("(1,2)", 3))
    # even-word subgroup of S6 does not contain a transposition
    a1 = parse_cycles("(1,2)", 6)
    a2 = parse_cycles("(1,2,3,4,5,6)", 6)
    a6 = PermGroup([a1 * a2, a2 * a1])
    assert a6.order() == 360
    assert not a6.contains(a1)


def test_contains_random_words():
    g = S6()
    gens = list(g.generators) + [p.inverse() for p in g.generators]
    rng = random.Random(11)
    for _ in range(100):
        w = Permutation.identity(6)
        for _ in range(rng.randint(1, 15)):
            w = w * rng.choice(gens)
        assert g.contains(w)


def test_contains_rejects_outside_orbit():
    # group fixes point 4; anything moving it is not a member
    g = PermGroup([parse_cycles("(1,2,3)", 4)])
    assert not g.contains(parse_cycles("(3,4)", 4))


def test_bsgs_invariants():
    for g in (S6(), PermGroup([parse_cycles("(1,2)(3,4)", 4)])):
        assert g.order() == math.prod(len(orb) for _, orb, _ in g.basic_orbits)
        for sg in g.strong_generators:
            assert g.sift(sg).is_identity()
        for gen in g.generators:
            assert g.contains(gen)
        for point, orbit, transversal in g.basic_orbits:
            for q in orbit:
                assert transversal[q](point) == q


def test_determinism():
    g1, g2 = S6(), S6()
    assert g1.base == g2.base
    assert g1.strong_generators == g2.strong_generators
    assert [b[:2] for b in g1.basic_orbits] == [b[:2] for b in g2.basic_orbits]


def test_orbits():
    g = PermGroup([parse_cycles("(1,2)(3,4)", 4)])
    assert g.orbit(1) == (1, 2)
    assert PermGroup([Permutation.identity(4)]).orbit(3) == (3,)
    assert S6().orbit(1) == tuple(range(1, 7))
    assert g.orbits() == [(1, 2), (3, 4)]
    assert not g.is_transitive()


def test_set_orbit_and_stabilizer():
    c4 = PermGroup([parse_cycles("(1,2,3,4)", 4)])
    orbit, stab = c4.orbit_of_set({1, 3})
    assert sorted(tuple(sorted(s)) for s in orbit) == [(1, 3), (2, 4)]
    assert stab.order() == 2
    # full point set: orbit is a singleton, stabilizer the whole group
    orbit, stab = c4.orbit_of_set({1, 2, 3, 4})
    assert len(orbit) == 1 and stab.order() == c4.order()
    # orbit-stabilizer identity on random sets
    g = S6()
    rng = random.Random(5)
    for _ in range(10):
        s = set(rng.sample(range(1, 7), rng.randint(1, 5)))
        orbit, stab = g.orbit_of_set(s)
        assert len(orbit) * stab.order() == g.order()


def test_block_systems_small():
    c5 = PermGroup([parse_cycles("(1,2,3,4,5)", 5)])
    assert c5.block_systems() == []
    c4 = PermGroup([parse_cycles("(1,2,3,4)", 4)])
    systems = c4.block_systems()
    assert len(systems) == 1 and systems[0].parts == ((1, 3), (2, 4))
    c8 = PermGroup([parse_cycles("(1,2,3,4,5,6,7,8)", 8)])
    assert [(s.part_size, s.num_parts) for s in c8.block_systems()] == [(2, 4), (4, 2)]
    # S6 natural action is primitive
    assert S6().block_systems() == []


def test_block_systems_invariance_and_order():
    # direct product C3 x C3 acting on 9 points has four systems of (3,3)
    g = PermGroup([parse_cycles("(1,2,3)(4,5,6)(7,8,9)", 9),
                   parse_cycles("(1,4,7)(2,5,8)(3,6,9)", 9)])
    systems = g.block_systems()
    assert all(s.is_invariant_under(g.generators) for s in systems)
    assert [s.part_size for s in systems] == sorted(s.part_size for s in systems)
    assert len(systems) == 4


def test_block_systems_requires_transitive():
    g = PermGroup([parse_cycles("(1,2)(3,4)", 4)])
    with pytest.raises(GroupError):
        g.block_systems()


def test_group_file_round_trip():
    g = S6()
    text = format_group_text(g)
    assert text.splitlines()[0] == "degree 6"
    g2 = parse_group_text(text)
    assert g2.order() == 720
    assert g2.generators == g.generators


def test_group_file_errors():
    with pytest.raises(GroupError):
        parse_group_text("(1,2)\n")
    with pytest.raises(GroupError):
        parse_group_text("degree x\n")
    with pytest.raises(CycleParseError):
        parse_group_text("degree 4\n(1,9)\n")
