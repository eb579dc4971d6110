"""Incidence structures and 2-design verification.

A ``Design`` is a point count v plus a list of distinct blocks (subsets of
{1..v}).  Verification covers the 2-design axioms (constant block size,
constant pair coverage), the standard counting identities and inequalities
relating (v, b, k, r, lambda), flags and flag-transitivity of an acting
group, and the constancy of block/part intersections against an invariant
partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .feasibility import FeasibleTuple, condition_failures
from .perm import BlockSystem, PermGroup, Permutation


class DesignError(ValueError):
    pass


class NotTwoDesignError(DesignError):
    """A 2-design check failed; names the first violated condition."""

    def __init__(self, condition, witness=None):
        self.condition = condition
        self.witness = witness
        msg = condition if witness is None else "%s: %s" % (condition, witness)
        super().__init__(msg)


class GeneratorNotAutomorphism(DesignError):
    """A group generator does not preserve the block set."""


class Design:
    """v points and a lexicographically sorted list of distinct sorted blocks."""

    __slots__ = ("v", "blocks", "_block_set")

    def __init__(self, v, blocks):
        if v < 1:
            raise DesignError("need at least one point")
        norm = []
        for blk in blocks:
            blk = tuple(sorted(blk))
            if len(set(blk)) != len(blk):
                raise DesignError("block %r has a repeated point" % (blk,))
            if blk and not (1 <= blk[0] and blk[-1] <= v):
                raise DesignError("block %r out of range 1..%d" % (blk, v))
            if not blk:
                raise DesignError("empty block")
            norm.append(blk)
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise DesignError("repeated block %r (designs here are simple)" % (a,))
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "blocks", tuple(norm))
        object.__setattr__(self, "_block_set", frozenset(frozenset(b) for b in norm))

    def __setattr__(self, name, value):
        raise AttributeError("Design is immutable")

    @property
    def b(self):
        return len(self.blocks)

    @property
    def block_set(self):
        return self._block_set

    def relabel(self, p: Permutation):
        if p.degree != self.v:
            raise DesignError("permutation degree %d != v %d" % (p.degree, self.v))
        return Design(self.v, (p.image_of_set(blk) for blk in self.blocks))

    def incidence_matrix(self):
        m = np.zeros((self.v, self.b), dtype=np.int64)
        for j, blk in enumerate(self.blocks):
            for p in blk:
                m[p - 1, j] = 1
        return m

    def __eq__(self, other):
        return (
            isinstance(other, Design)
            and self.v == other.v
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.v, self.blocks))

    def __repr__(self):
        return "Design(v=%d, b=%d)" % (self.v, self.b)


@dataclass(frozen=True)
class DesignParameters:
    v: int
    b: int
    k: int
    r: int
    lam: int

    @property
    def nontrivial(self):
        return 2 < self.k < self.v

    def as_tuple(self):
        return (self.v, self.b, self.k, self.r, self.lam)


class Flag(NamedTuple):
    point: int
    block_index: int


@dataclass(frozen=True)
class IntersectionProfile:
    ell: int
    parts_met_per_block: int
    constant: bool
    witness: Optional[tuple] = None  # (block_index, part_index, size, expected)


def check_2_design(d: Design) -> DesignParameters:
    """Verify the 2-design axioms and counting identities.

    Block size must be constant, every point pair must lie in the same
    number of blocks (counted over all pairs via the incidence matrix), and
    the derived (v, b, k, r, lambda) must satisfy r(k-1) = lambda(v-1),
    bk = vr, b >= v, r >= k and r^2 > lambda*v (the last three only bind for
    nontrivial designs with 2 < k < v).  Raises NotTwoDesignError naming the
    first violated condition, with a witness.
    """
    if d.b == 0:
        raise NotTwoDesignError("no-blocks")
    sizes = {len(blk) for blk in d.blocks}
    if len(sizes) != 1:
        small = min(d.blocks, key=len)
        large = max(d.blocks, key=len)
        raise NotTwoDesignError(
            "non-constant-block-size", (tuple(small), tuple(large))
        )
    k = sizes.pop()
    m = d.incidence_matrix()
    pair_counts = m @ m.T
    rows = np.diag(pair_counts).copy()
    iu = np.triu_indices(d.v, k=1)
    offdiag = pair_counts[iu]
    if d.v < 2 or offdiag.size == 0:
        raise NotTwoDesignError("fewer-than-two-points")
    lam = int(offdiag[0])
    bad = np.nonzero(offdiag != lam)[0]
    if bad.size:
        i = int(bad[0])
        alpha, beta = int(iu[0][i]) + 1, int(iu[1][i]) + 1
        raise NotTwoDesignError(
            "non-constant-pair-coverage",
            ((1, 2, lam), (alpha, beta, int(offdiag[i]))),
        )
    if lam < 1:
        raise NotTwoDesignError("uncovered-pair", (1, 2))
    r = int(rows[0])
    if np.any(rows != r):
        i = int(np.nonzero(rows != r)[0][0])
        raise NotTwoDesignError("non-constant-replication", (1, r, i + 1, int(rows[i])))
    b = d.b
    v = d.v
    params = DesignParameters(v=v, b=b, k=k, r=r, lam=lam)
    if r * (k - 1) != lam * (v - 1):
        raise NotTwoDesignError("replication-count", params)
    if b * k != v * r:
        raise NotTwoDesignError("flag-count", params)
    if params.nontrivial:
        if b < v:
            raise NotTwoDesignError("block-lower-bound", params)
        if r < k:
            raise NotTwoDesignError("replication-lower-bound", params)
        if r * r <= lam * v:
            raise NotTwoDesignError("replication-square", params)
    return params


def flags(d: Design):
    """All incident (point, block index) pairs, ordered by block then point."""
    return [
        Flag(point, j) for j, blk in enumerate(d.blocks) for point in blk
    ]


def is_automorphism(d: Design, p: Permutation) -> bool:
    if p.degree != d.v:
        return False
    return all(p.image_of_set(blk) in d.block_set for blk in d.blocks)


def _block_index_action(d: Design, p: Permutation):
    """The permutation of block indices induced by an automorphism."""
    lookup = {frozenset(blk): j for j, blk in enumerate(d.blocks)}
    return [lookup[p.image_of_set(blk)] for blk in d.blocks]


def flag_orbit_count(g: PermGroup, d: Design) -> int:
    """Number of orbits of g on the flags of d.

    Counts point orbits of the block stabilizer within each block orbit
    instead of materializing the flag action.  Every generator must be an
    automorphism of d.
    """
    for gen in g.generators:
        if not is_automorphism(d, gen):
            raise GeneratorNotAutomorphism(
                "generator %r does not preserve the block set" % (gen,)
            )
    actions = [_block_index_action(d, gen) for gen in g.generators]
    unseen = set(range(d.b))
    total = 0
    while unseen:
        start = min(unseen)
        orbit = {start}
        queue = [start]
        while queue:
            j = queue.pop()
            for act in actions:
                jj = act[j]
                if jj not in orbit:
                    orbit.add(jj)
                    queue.append(jj)
        unseen -= orbit
        block = d.blocks[start]
        _, stab = g.orbit_of_set(block)
        in_block = set(block)
        reps = set()
        for point in block:
            if point in reps:
                continue
            orb = stab.orbit(point)
            assert set(orb) <= in_block
            reps.update(orb)
            total += 1
    return total


def is_flag_transitive(g: PermGroup, d: Design):
    """Whether g is transitive on flags; returns (bool, flag orbit count)."""
    n = flag_orbit_count(g, d)
    return n == 1, n


def intersection_profile(d: Design, c: BlockSystem) -> IntersectionProfile:
    """Sizes of nonempty block/part intersections against a partition.

    If all nonempty intersections share one size ell, reports ell and the
    number of parts met per block (= k/ell); otherwise reports a
    counterexample witness.
    """
    if c.degree != d.v:
        raise DesignError("partition degree %d != v %d" % (c.degree, d.v))
    parts = [frozenset(part) for part in c.parts]
    ell = None
    first = None
    for j, blk in enumerate(d.blocks):
        bs = frozenset(blk)
        for i, part in enumerate(parts):
            size = len(bs & part)
            if size == 0:
                continue
            if ell is None:
                ell = size
                first = (j, i)
            elif size != ell:
                return IntersectionProfile(
                    ell=ell,
                    parts_met_per_block=0,
                    constant=False,
                    witness=(j, i, size, ell),
                )
    assert ell is not None and first is not None
    k = len(d.blocks[0])
    met = k // ell
    for j, blk in enumerate(d.blocks):
        bs = frozenset(blk)
        count = sum(1 for part in parts if bs & part)
        assert count * ell == len(blk)
    return IntersectionProfile(ell=ell, parts_met_per_block=met, constant=True)


def tuple_of(d: Design, g: PermGroup, c: BlockSystem) -> FeasibleTuple:
    """Assemble the full parameter tuple (lambda, v, k, r, b, c, d, ell, x)
    from a verified (design, flag-transitive group, invariant partition)
    triple and check it against the feasibility conditions.

    The multiplier x is computed two independent ways, from
    x = k - 1 - d(ell - 1) and from k = x*c + ell; any disagreement is a
    hard error rather than something to resolve silently.
    """
    params = check_2_design(d)
    transitive, orbits = is_flag_transitive(g, d)
    if not transitive:
        raise DesignError("group is not flag-transitive (%d flag orbits)" % orbits)
    if not c.is_invariant_under(g.generators):
        raise DesignError("partition is not invariant under the group")
    profile = intersection_profile(d, c)
    if not profile.constant:
        raise DesignError(
            "block/part intersections are not constant: %r" % (profile.witness,)
        )
    ell = profile.ell
    num_parts = c.num_parts
    part_size = c.part_size
    x_linear = params.k - 1 - num_parts * (ell - 1)
    if (params.k - ell) % part_size != 0:
        raise DesignError(
            "inconsistent x: k - ell = %d not divisible by c = %d"
            % (params.k - ell, part_size)
        )
    x_split = (params.k - ell) // part_size
    if x_linear != x_split:
        raise DesignError(
            "inconsistent x: k-1-d(ell-1) = %d but (k-ell)/c = %d"
            % (x_linear, x_split)
        )
    t = FeasibleTuple(
        lam=params.lam,
        v=params.v,
        k=params.k,
        r=params.r,
        b=params.b,
        c=part_size,
        d=num_parts,
        ell=ell,
        x=x_linear,
    )
    failures = condition_failures(t)
    if failures:
        raise DesignError("feasibility condition failed: %s" % ", ".join(failures))
    return t


# -- design files ------------------------------------------------------------


def parse_design_text(text: str) -> Design:
    """Read the design file format: line 1 ``v <n>``, then one block per
    non-empty, non-# line as ascending space-separated point indices."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("v"):
        raise DesignError("design file must start with a 'v <n>' line")
    try:
        v = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise DesignError("bad header line: %r" % lines[0]) from None
    blocks = []
    for ln in lines[1:]:
        try:
            blk = tuple(int(tok) for tok in ln.split())
        except ValueError:
            raise DesignError("bad block line: %r" % ln) from None
        blocks.append(blk)
    return Design(v, blocks)


def format_design_text(d: Design) -> str:
    """Canonical design file: sorted blocks, ascending points."""
    lines = ["v %d" % d.v]
    lines.extend(" ".join(str(p) for p in blk) for blk in d.blocks)
    return "\n".join(lines) + "\n"
