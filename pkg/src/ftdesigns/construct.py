"""Built-in designs and their groups.

- ``twisted_diagonal_group`` / ``construction_36``: a flag-regular 2-(36,8,4)
  design on the 6x6 grid.  The group is the diagonal copy of Sym(6) twisted
  by an outer automorphism: one factor acts naturally on row indices while
  the column action is the image of the row action under the exceptional
  outer automorphism of Sym(6), pinned down by its effect on the standard
  generators.
- ``construction_36_cosets``: the same design built from the conjugation
  action of Sym(6) on its 36 Frobenius subgroups of order 20 (normalizers
  of the Sylow 5-subgroups), with blocks read off orbits of dihedral
  stabilizers of (letter pair, bisection) data.
- ``projective_design``: the classical symmetric 2-(2^(n+1)-1, 2^n, 2^(n-1))
  design on the nonzero vectors of a binary space, blocks the complements
  of the hyperplanes.  ``semilinear_group_15`` gives its point-imprimitive
  flag-transitive group of order 360 for n = 3.
- ``design_96``: four 2-(96,20,4) designs, each the orbit of an
  explicit 20-point block under one of two block-regular groups of order 96
  shipped as data files.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from importlib import resources
from itertools import combinations, permutations

from .design import Design, NotTwoDesignError, check_2_design
from .perm import PermGroup, Permutation, parse_cycles, parse_group_text

# sha256 of the shipped generator files, pinned against silent edits
_DATA_CHECKSUMS = {
    "h1_group.txt": "61797adcb4a28cbc03253ad816bfee2d44e5dc094cbd39d47dc18849b9fd593e",
    "h2_group.txt": "43be7b87ea7945ada7fc1a74c7c37f3496b45fd01f65b39148322e060cad2672",
}

# The outer automorphism of Sym(6) used throughout, given by its images of
# the standard generators (1,2) and (1,2,3,4,5,6).
OUTER_AUT_IMAGES = {
    "(1,2)": "(1,4)(2,6)(3,5)",
    "(1,2,3,4,5,6)": "(1,3)(2,6,5)",
}


def grid_index(i, j):
    """(i, j) in the 6x6 grid -> linear point 6(i-1)+j."""
    if not (1 <= i <= 6 and 1 <= j <= 6):
        raise ValueError("grid coordinates out of range: (%d, %d)" % (i, j))
    return 6 * (i - 1) + j


def grid_coords(point):
    if not 1 <= point <= 36:
        raise ValueError("grid point out of range: %d" % point)
    return (point - 1) // 6 + 1, (point - 1) % 6 + 1


def _grid_perm(row_perm, col_perm):
    images = [0] * 36
    for i in range(1, 7):
        for j in range(1, 7):
            images[grid_index(i, j) - 1] = grid_index(row_perm(i), col_perm(j))
    return Permutation(images)


@lru_cache(maxsize=None)
def twisted_diagonal_group():
    """The twisted-diagonal group of order 720 on the 36 grid points.

    Generated by two permutations acting coordinate-wise: row action (1,2)
    with column action (1,4)(2,6)(3,5), and row action (1,2,3,4,5,6) with
    column action (1,3)(2,6,5)."""
    a1 = _grid_perm(
        parse_cycles("(1,2)", 6), parse_cycles(OUTER_AUT_IMAGES["(1,2)"], 6)
    )
    a2 = _grid_perm(
        parse_cycles("(1,2,3,4,5,6)", 6),
        parse_cycles(OUTER_AUT_IMAGES["(1,2,3,4,5,6)"], 6),
    )
    group = PermGroup([a1, a2])
    assert group.order() == 720
    return group


CONSTRUCTION_36_BASE_BLOCK = frozenset(
    grid_index(i, j)
    for i, j in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3), (4, 4)]
)


def orbit_design(group: PermGroup, base_block) -> Design:
    """The design whose blocks are the orbit of base_block under group."""
    base_block = frozenset(base_block)
    if not base_block:
        raise ValueError("base block must be nonempty")
    orbit, _ = group.orbit_of_set(base_block)
    return Design(group.degree, orbit)


@lru_cache(maxsize=None)
def construction_36() -> Design:
    """The flag-regular 2-(36,8,4) design: orbit of the base block
    {1,2,7,9,14,16,21,22} under the twisted-diagonal group; 90 blocks."""
    d = orbit_design(twisted_diagonal_group(), CONSTRUCTION_36_BASE_BLOCK)
    assert d.b == 90
    return d


# -- coset model on the 36 Frobenius subgroups ------------------------------


def _s6_elements():
    return [Permutation(images) for images in permutations(range(1, 7))]


def _conjugate_subgroup(subgroup, g):
    gi = g.inverse()
    return frozenset(gi * p * g for p in subgroup)


def _cyclic_closure(p):
    out = [Permutation.identity(p.degree)]
    q = p
    while not q.is_identity():
        out.append(q)
        q = q * p
    return frozenset(out)


class FrobeniusModel:
    """The 36 order-20 Frobenius subgroups of Sym(6) as labeled points.

    Points are the normalizers of the 36 Sylow 5-subgroups, sorted by their
    minimal generating 5-cycle (cycle-tuple order); Sym(6) acts by
    conjugation.  Each point fixes exactly one letter, giving the invariant
    partition used by the coset construction."""

    def __init__(self):
        s6 = _s6_elements()
        sylows = set()
        for g in s6:
            cyc = g.cycles()
            if len(cyc) == 1 and len(cyc[0]) == 5:
                sylows.add(_cyclic_closure(g))
        assert len(sylows) == 36
        frobs = []
        for syl in sylows:
            normalizer = frozenset(
                g for g in s6 if _conjugate_subgroup(syl, g) == syl
            )
            assert len(normalizer) == 20
            frobs.append((syl, normalizer))

        def min_5cycle(syl):
            return min(
                p.cycles()[0]
                for p in syl
                if len(p.cycles()) == 1 and len(p.cycles()[0]) == 5
            )

        frobs.sort(key=lambda pair: min_5cycle(pair[0]))
        self.s6 = s6
        self.points = [normalizer for _, normalizer in frobs]
        self.index_of = {n: i + 1 for i, n in enumerate(self.points)}
        self.fixed_letter = {}
        for i, n in enumerate(self.points):
            fixed = [x for x in range(1, 7) if all(g(x) == x for g in n)]
            assert len(fixed) == 1
            self.fixed_letter[i + 1] = fixed[0]

    def induced(self, g: Permutation) -> Permutation:
        """The degree-36 permutation of the points induced by conjugation."""
        return Permutation(
            self.index_of[_conjugate_subgroup(self.points[i], g)]
            for i in range(36)
        )

    def group(self) -> PermGroup:
        g = PermGroup(
            [
                self.induced(parse_cycles("(1,2)", 6)),
                self.induced(parse_cycles("(1,2,3,4,5,6)", 6)),
            ]
        )
        assert g.order() == 720
        return g

    def triple_data(self, x, xp, bisection):
        """For the triple (x, x', pi): the 24-point set of points fixing a
        letter outside {x, x'}, the three length-8 orbits on it of the
        dihedral stabilizer of (x, x', pi), and the two orbit blocks
        interchanged by the stabilizer's normalizer (the third is fixed).

        Raises AssertionError if the orbit structure deviates."""
        (z1, z2), (z3, z4) = bisection
        letters = {x, xp, z1, z2, z3, z4}
        assert letters == set(range(1, 7)) and x != xp
        hgens6 = [
            parse_cycles("(%d,%d)" % (z1, z2), 6),
            parse_cycles("(%d,%d)" % (z3, z4), 6),
            parse_cycles("(%d,%d)(%d,%d)" % (z1, z3, z2, z4), 6),
        ]
        helements = {Permutation.identity(6)}
        frontier = list(hgens6)
        while frontier:
            h = frontier.pop()
            if h in helements:
                continue
            helements.add(h)
            for g in hgens6:
                frontier.append(h * g)
        assert len(helements) == 8
        helements = frozenset(helements)
        h36 = PermGroup([self.induced(g) for g in hgens6])
        zset = {z1, z2, z3, z4}
        p24 = frozenset(
            pt for pt in range(1, 37) if self.fixed_letter[pt] in zset
        )
        assert len(p24) == 24
        seen = set()
        orbits = []
        for pt in sorted(p24):
            if pt in seen:
                continue
            orb = frozenset(h36.orbit(pt))
            assert orb <= p24
            orbits.append(orb)
            seen |= orb
        assert sorted(len(o) for o in orbits) == [8, 8, 8]
        normalizer = [
            g for g in self.s6 if _conjugate_subgroup(helements, g) == helements
        ]
        moved, invariant = [], []
        for orb in orbits:
            images = {self.induced(g).image_of_set(orb) for g in normalizer}
            assert images <= set(orbits)
            (invariant if images == {orb} else moved).append(orb)
        assert len(invariant) == 1 and len(moved) == 2
        moved.sort(key=lambda o: tuple(sorted(o)))
        return p24, orbits, moved, invariant[0]

    @staticmethod
    def triples():
        """All 45 (letter pair, bisection) classes, canonically ordered."""
        out = []
        for x, xp in combinations(range(1, 7), 2):
            zs = [z for z in range(1, 7) if z not in (x, xp)]
            for bisection in (
                ((zs[0], zs[1]), (zs[2], zs[3])),
                ((zs[0], zs[2]), (zs[1], zs[3])),
                ((zs[0], zs[3]), (zs[1], zs[2])),
            ):
                out.append((x, xp, bisection))
        return out


@lru_cache(maxsize=None)
def _frobenius_model():
    return FrobeniusModel()


def construction_36_cosets(verify_all_triples=False):
    """The 2-(36,8,4) design in the Frobenius-subgroup model.

    Blocks are the orbit of the chosen 8-point block of the canonical first
    triple ((1,2), {{3,4},{5,6}}); of the two stabilizer orbits swapped by
    the normalizer, the one with lexicographically smaller sorted point list
    is chosen (both give the same block set, which the tests confirm).  With
    verify_all_triples=True the orbit structure is re-verified for all 45
    (pair, bisection) classes before constructing."""
    model = _frobenius_model()
    triples = model.triples() if verify_all_triples else [model.triples()[0]]
    seed = None
    for x, xp, bisection in triples:
        _, _, moved, _ = model.triple_data(x, xp, bisection)
        if seed is None:
            seed = moved[0]
    design = orbit_design(model.group(), seed)
    assert design.b == 90
    return design


def coset_model_group() -> PermGroup:
    """The degree-36 conjugation action of Sym(6) on the Frobenius points."""
    return _frobenius_model().group()


# -- binary projective family ------------------------------------------------


def projective_design(n: int) -> Design:
    """Hyperplane-complement design on the nonzero vectors of an
    (n+1)-dimensional binary space, for odd n with 3 <= n <= 9.

    Points are the integers 1..2^(n+1)-1 read as coordinate bitmasks; the
    block of the functional w is {u : parity(u & w) = 1}.  This is a
    symmetric 2-(2^(n+1)-1, 2^n, 2^(n-1)) design."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    if not 3 <= n <= 9:
        raise ValueError("n out of supported range 3..9")
    v = 2 ** (n + 1) - 1
    blocks = []
    for w in range(1, v + 1):
        blocks.append(tuple(u for u in range(1, v + 1) if (u & w).bit_count() & 1))
    return Design(v, blocks)


# GF(4) with elements 0, 1, w, w^2 encoded 0..3 (w^2 = w + 1); addition is xor
_GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def _vector_perm(f):
    """Permutation of 1..15 from a bijection of the nonzero GF(4)^2 vectors,
    encoded as 4-bit integers (a << 2) | b."""
    images = [0] * 15
    for vec in range(1, 16):
        a, b = vec >> 2, vec & 3
        fa, fb = f(a, b)
        images[vec - 1] = (fa << 2) | fb
    return Permutation(images)


@lru_cache(maxsize=None)
def semilinear_group_15() -> PermGroup:
    """Invertible semilinear transformations of a 2-dimensional space over
    the 4-element field, acting on the 15 nonzero vectors of the underlying
    4-dimensional binary space; order 360.

    Generated by the GL(2,4) generators [[0,1],[1,0]], [[1,1],[0,1]],
    diag(w,1) plus coordinate-wise squaring (the field automorphism).  All
    four are GF(2)-linear, so they are automorphisms of projective_design(3)
    under the shared bitmask point labeling."""
    swap = _vector_perm(lambda a, b: (b, a))
    transvection = _vector_perm(lambda a, b: (a ^ b, b))
    diag = _vector_perm(lambda a, b: (_GF4_MUL[2][a], b))
    frobenius = _vector_perm(
        lambda a, b: (_GF4_MUL[a][a], _GF4_MUL[b][b])
    )
    group = PermGroup([swap, transvection, diag, frobenius])
    assert group.order() == 360
    return group


def gf4_line_partition():
    """The 5 punctured 1-dimensional GF(4)-subspaces of the 15 points, as
    sorted tuples; the unique nontrivial block system of the semilinear
    group."""
    seen = set()
    parts = []
    for vec in range(1, 16):
        if vec in seen:
            continue
        a, b = vec >> 2, vec & 3
        line = tuple(
            sorted((_GF4_MUL[s][a] << 2) | _GF4_MUL[s][b] for s in (1, 2, 3))
        )
        parts.append(line)
        seen.update(line)
    return tuple(sorted(parts))


# -- the four 96-point designs ------------------------------------------------

# Base blocks for (group, block index).  The first H1 block as printed in
# the source data contained the impossible entry "141"; repair_h1_block1
# re-runs the search over the plausible corrections and exactly one (14)
# yields a 2-design, so it is shipped here.
BASE_BLOCKS_96 = {
    ("h1", 1): (1, 2, 3, 11, 12, 14, 17, 29, 31, 32, 36, 41, 47, 51, 57, 63, 68, 85, 87, 93),
    ("h1", 2): (1, 2, 3, 11, 14, 17, 24, 29, 31, 35, 43, 44, 48, 56, 64, 65, 69, 90, 95, 96),
    ("h2", 1): (1, 2, 3, 5, 11, 15, 21, 22, 23, 27, 41, 43, 62, 68, 77, 80, 86, 90, 92, 95),
    ("h2", 2): (1, 2, 3, 5, 11, 15, 21, 23, 31, 34, 46, 58, 66, 67, 69, 70, 72, 73, 89, 96),
}

# Full automorphism group orders of the four designs, in (group, block) order
AUT_ORDERS_96 = {
    ("h1", 1): 552960,
    ("h1", 2): 184320,
    ("h2", 1): 138240,
    ("h2", 2): 7680,
}


def _load_data_text(filename):
    text = (
        resources.files("ftdesigns.data").joinpath(filename).read_text(encoding="utf-8")
    )
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    expected = _DATA_CHECKSUMS[filename]
    if expected != digest:
        raise RuntimeError(
            "data file %s checksum mismatch: %s != %s" % (filename, digest, expected)
        )
    return text


@lru_cache(maxsize=None)
def block_regular_group_96(group_id: str) -> PermGroup:
    """One of the two shipped block-regular groups of order 96 on 96 points."""
    if group_id not in ("h1", "h2"):
        raise ValueError("group_id must be 'h1' or 'h2'")
    group = parse_group_text(_load_data_text("%s_group.txt" % group_id))
    assert group.degree == 96 and group.order() == 96
    return group


def design_96(group_id: str, block_id: int):
    """(group, design) for one of the four 2-(96,20,4) designs.

    The group is block-regular: the design is the orbit of the listed
    20-point block, the orbit has size 96 = group order, and the design is
    symmetric with parameters (96, 96, 20, 20, 4)."""
    key = (group_id, block_id)
    if key not in BASE_BLOCKS_96:
        raise ValueError("unknown design %r; use ('h1'|'h2', 1|2)" % (key,))
    group = block_regular_group_96(group_id)
    design = orbit_design(group, BASE_BLOCKS_96[key])
    assert design.b == 96
    params = check_2_design(design)
    assert params.as_tuple() == (96, 96, 20, 20, 4)
    return group, design


def repair_h1_block1():
    """Re-run the repair search for the corrupted first H1 block.

    The printed block contains "141", impossible on 96 points.  Candidate
    corrections: 14, 41 and 4.  41 is already present (rejected as a
    duplicate); each remaining candidate 20-set is orbited under H1 and kept
    only if it yields a 2-(96,96,20,20,4) design.  Returns
    (winning value, corrected block, per-candidate report); raises if zero
    or multiple candidates pass."""
    template = [1, 2, 3, 11, 12, None, 17, 29, 31, 32, 36, 41, 47, 51, 57, 63, 68, 85, 87, 93]
    group = block_regular_group_96("h1")
    report = {}
    winners = []
    for candidate in (14, 41, 4):
        block = tuple(candidate if x is None else x for x in template)
        if len(set(block)) != 20:
            report[candidate] = "rejected: duplicate point"
            continue
        orbit, _ = group.orbit_of_set(block)
        if len(orbit) != 96:
            report[candidate] = "rejected: orbit size %d" % len(orbit)
            continue
        try:
            params = check_2_design(Design(96, orbit))
        except NotTwoDesignError as exc:
            report[candidate] = "rejected: %s" % exc.condition
            continue
        if params.as_tuple() == (96, 96, 20, 20, 4):
            report[candidate] = "accepted: 2-(96,20,4), b=96"
            winners.append((candidate, tuple(sorted(block))))
        else:
            report[candidate] = "rejected: parameters %s" % (params.as_tuple(),)
    if len(winners) != 1:
        raise RuntimeError(
            "block repair must yield exactly one candidate, got %d (%r)"
            % (len(winners), report)
        )
    value, block = winners[0]
    return value, block, report


CONSTRUCT_NAMES = ("d36", "d36-cosets", "pg", "d96")


def construct_by_name(tokens):
    """Dispatch for the CLI ``construct`` names:

    d36 | d36-cosets | pg N | d96 (h1|h2) (1|2)
    """
    if not tokens:
        raise ValueError("missing construction name")
    name, args = tokens[0], tokens[1:]
    if name == "d36":
        if args:
            raise ValueError("d36 takes no arguments")
        return construction_36()
    if name == "d36-cosets":
        if args:
            raise ValueError("d36-cosets takes no arguments")
        return construction_36_cosets()
    if name == "pg":
        if len(args) != 1:
            raise ValueError("usage: pg N (odd N, 3..9)")
        return projective_design(int(args[0]))
    if name == "d96":
        if len(args) != 2 or args[0] not in ("h1", "h2") or args[1] not in ("1", "2"):
            raise ValueError("usage: d96 (h1|h2) (1|2)")
        _, design = design_96(args[0], int(args[1]))
        return design
    raise ValueError("unknown construction %r; names: %s" % (name, ", ".join(CONSTRUCT_NAMES)))
