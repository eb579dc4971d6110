"""Exact permutation groups on {1..n}.

Permutations are stored as image tables over 1-based points.  Groups carry a
base and strong generating set built by a deterministic Schreier-Sims pass
(base points are the successive smallest moved points), which gives exact
orders, membership tests, orbits, setwise stabilizers and invariant
partitions at the degrees used in this package.  All orders are plain Python
integers, so nothing overflows.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations


class CycleParseError(ValueError):
    """Malformed disjoint-cycle text."""


class GroupError(ValueError):
    """Invalid group construction or use."""


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("images are not a bijection of 1..%d" % n)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree):
        return cls(range(1, degree + 1))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        """Composition acting left-to-right: (p*q)(x) = q(p(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        oi = other.images
        return Permutation(oi[i - 1] for i in self.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, start=1))

    def moved_points(self):
        return [i for i, j in enumerate(self.images, start=1) if i != j]

    def min_moved(self):
        for i, j in enumerate(self.images, start=1):
            if i != j:
                return i
        return None

    def image_of_set(self, points):
        return frozenset(self.images[p - 1] for p in points)

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point, sorted."""
        seen = [False] * (self.degree + 1)
        out = []
        for start in range(1, self.degree + 1):
            if seen[start] or self(start) == start:
                continue
            cyc = [start]
            seen[start] = True
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def order(self):
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r, degree=%d)" % (format_cycles(self), self.degree)


def parse_cycles(text, degree):
    """Parse disjoint-cycle notation like ``(1,4)(2,6)(3,5)``.

    Unmentioned points are fixed; ``""`` and ``"()"`` denote the identity.
    Raises CycleParseError on malformed syntax, out-of-range points, or a
    point repeated across cycles.
    """
    if degree < 1:
        raise CycleParseError("degree must be positive")
    images = list(range(1, degree + 1))
    seen = set()
    s = text.strip()
    pos = 0
    while pos < len(s):
        if s[pos] != "(":
            raise CycleParseError("expected '(' at position %d in %r" % (pos, text))
        close = s.find(")", pos)
        if close < 0:
            raise CycleParseError("unclosed cycle in %r" % text)
        body = s[pos + 1 : close].strip()
        pos = close + 1
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if not body:
            continue  # "()" = identity cycle
        try:
            entries = [int(tok) for tok in body.split(",")]
        except ValueError as exc:
            raise CycleParseError("bad cycle entry in %r: %s" % (text, exc)) from None
        for p in entries:
            if not 1 <= p <= degree:
                raise CycleParseError("point %d out of range 1..%d" % (p, degree))
            if p in seen:
                raise CycleParseError("point %d repeated in %r" % (p, text))
            seen.add(p)
        if len(entries) < 2:
            continue  # fixed point written explicitly
        for a, b in zip(entries, entries[1:]):
            images[a - 1] = b
        images[entries[-1] - 1] = entries[0]
    return Permutation(images)


def format_cycles(p):
    """Canonical disjoint-cycle string; identity prints as ``()``."""
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)


class BlockSystem:
    """A partition of {1..degree} into d parts of common size c, 1 < c < degree."""

    __slots__ = ("degree", "parts")

    def __init__(self, degree, parts):
        parts = tuple(tuple(sorted(part)) for part in parts)
        parts = tuple(sorted(parts))
        covered = [p for part in parts for p in part]
        if sorted(covered) != list(range(1, degree + 1)):
            raise ValueError("parts do not partition 1..%d" % degree)
        sizes = {len(part) for part in parts}
        if len(sizes) != 1:
            raise ValueError("parts have unequal sizes %s" % sorted(sizes))
        c = sizes.pop()
        if not 1 < c < degree:
            raise ValueError("trivial partition (part size %d of %d)" % (c, degree))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("BlockSystem is immutable")

    @property
    def num_parts(self):
        return len(self.parts)

    @property
    def part_size(self):
        return len(self.parts[0])

    def part_of(self, point):
        for part in self.parts:
            if point in part:
                return part
        raise ValueError("point %d out of range" % point)

    def is_invariant_under(self, perms):
        partset = {frozenset(part) for part in self.parts}
        for g in perms:
            for part in self.parts:
                if g.image_of_set(part) not in partset:
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, BlockSystem)
            and self.degree == other.degree
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.degree, self.parts))

    def __repr__(self):
        return "BlockSystem(c=%d, d=%d)" % (self.part_size, self.num_parts)


class _Level:
    __slots__ = ("point", "gens", "transversal", "orbit_list", "done")

    def __init__(self, point, degree):
        self.point = point
        self.gens = []  # (serial, Permutation) stored at this level
        self.transversal = {point: Permutation.identity(degree)}
        self.orbit_list = [point]
        self.done = set()  # processed Schreier pairs (orbit point, gen serial)


class PermGroup:
    """Permutation group from generators, with a base and strong generating set.

    Construction is deterministic: given the same generators in the same
    order, the base, strong generators and transversals are identical.
    """

    def __init__(self, generators, degree=None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise GroupError("empty generator list needs an explicit degree")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise GroupError(
                    "generator degree %d does not match %d" % (g.degree, degree)
                )
        self.degree = degree
        self.generators = generators
        self._levels = []
        self._serial = 0
        for g in generators:
            self._place_gen(g)
        for i in range(len(self._levels) - 1, -1, -1):
            self._complete_level(i)

    # -- Schreier-Sims construction ------------------------------------
    #
    # Level i holds the strong generators that fix the first i base points
    # but move the (i+1)-th; the generating set of the i-th stabilizer is
    # everything stored at levels i and deeper.  A level is complete once
    # every Schreier generator of its basic orbit sifts to the identity
    # through the deeper levels.

    def _place_gen(self, h):
        """Store a nonidentity strong generator at the level whose base
        prefix it fixes, creating a new level when it fixes all bases."""
        if h.is_identity():
            return None
        i = 0
        while i < len(self._levels) and h(self._levels[i].point) == self._levels[i].point:
            i += 1
        if i == len(self._levels):
            self._levels.append(_Level(h.min_moved(), self.degree))
        self._serial += 1
        self._levels[i].gens.append((self._serial, h))
        return i

    def _effective_gens(self, i):
        return [sg for level in self._levels[i:] for sg in level.gens]

    def _extend_orbit(self, i, gens):
        level = self._levels[i]
        queue = deque(level.orbit_list)
        while queue:
            p = queue.popleft()
            up = level.transversal[p]
            for _, g in gens:
                q = g(p)
                if q not in level.transversal:
                    level.transversal[q] = up * g
                    level.orbit_list.append(q)
                    queue.append(q)

    def _sift_from(self, i, h):
        for level in self._levels[i:]:
            if h.is_identity():
                return h
            img = h(level.point)
            if img == level.point:
                continue
            u = level.transversal.get(img)
            if u is None:
                return h
            h = h * u.inverse()
        return h

    def _complete_level(self, i):
        level = self._levels[i]
        restart = True
        while restart:
            restart = False
            gens = self._effective_gens(i)
            self._extend_orbit(i, gens)
            for p in list(level.orbit_list):
                for serial, g in gens:
                    if (p, serial) in level.done:
                        continue
                    level.done.add((p, serial))
                    q = g(p)
                    sg = level.transversal[p] * g * level.transversal[q].inverse()
                    if sg.is_identity():
                        continue
                    residue = self._sift_from(i + 1, sg)
                    if residue.is_identity():
                        continue
                    j = self._place_gen(residue)
                    assert j is not None and j > i
                    for k in range(len(self._levels) - 1, i, -1):
                        self._complete_level(k)
                    restart = True
                    break
                if restart:
                    break

    # -- queries ---------------------------------------------------------

    @property
    def base(self):
        return tuple(level.point for level in self._levels)

    @property
    def strong_generators(self):
        return tuple(g for level in self._levels for _, g in level.gens)

    @property
    def basic_orbits(self):
        """Per base point: (point, orbit in discovery order, transversal dict).

        Each transversal entry maps an orbit point q to a group element
        carrying the base point to q, witnessing orbit membership."""
        return tuple(
            (level.point, tuple(level.orbit_list), dict(level.transversal))
            for level in self._levels
        )

    def order(self):
        n = 1
        for level in self._levels:
            n *= len(level.orbit_list)
        return n

    def sift(self, p):
        """Residue of p through the stabilizer chain; identity iff p is a member."""
        h = p
        for level in self._levels:
            if h.is_identity():
                return h
            img = h(level.point)
            if img == level.point:
                continue
            u = level.transversal.get(img)
            if u is None:
                return h
            h = h * u.inverse()
        return h

    def contains(self, p):
        if p.degree != self.degree:
            return False
        return self.sift(p).is_identity()

    def __contains__(self, p):
        return self.contains(p)

    def identity(self):
        return Permutation.identity(self.degree)

    def orbit(self, point):
        """The orbit of a point, as a sorted tuple."""
        if not 1 <= point <= self.degree:
            raise ValueError("point %d out of range 1..%d" % (point, self.degree))
        seen = {point}
        queue = deque([point])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return tuple(sorted(seen))

    def orbits(self):
        left = set(range(1, self.degree + 1))
        out = []
        while left:
            orb = self.orbit(min(left))
            out.append(orb)
            left.difference_update(orb)
        return out

    def is_transitive(self):
        return len(self.orbit(1)) == self.degree

    def orbit_of_set(self, points):
        """Orbit of a point set under the induced action on sets, plus the
        setwise stabilizer (from Schreier generators of the set action).

        Returns (orbit, stabilizer) where orbit is a list of frozensets in
        BFS discovery order.  Asserts the orbit-stabilizer identity.
        """
        start = frozenset(points)
        for p in start:
            if not 1 <= p <= self.degree:
                raise ValueError("point %d out of range 1..%d" % (p, self.degree))
        transversal = {start: self.identity()}
        orbit_list = [start]
        stab_gens = []
        seen_gens = set()
        qi = 0
        while qi < len(orbit_list):
            t = orbit_list[qi]
            qi += 1
            ut = transversal[t]
            for g in self.generators:
                img = g.image_of_set(t)
                if img not in transversal:
                    transversal[img] = ut * g
                    orbit_list.append(img)
                else:
                    sg = ut * g * transversal[img].inverse()
                    if not sg.is_identity() and sg.images not in seen_gens:
                        seen_gens.add(sg.images)
                        stab_gens.append(sg)
        stab = PermGroup(stab_gens, degree=self.degree)
        assert len(orbit_list) * stab.order() == self.order()
        return orbit_list, stab

    # -- invariant partitions ---------------------------------------------

    def _min_partition(self, alpha, beta):
        """Finest G-congruence identifying alpha and beta, as a sorted
        tuple of sorted parts (may be the trivial one-part partition)."""
        n = self.degree
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra == rb:
                return None
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra
            return rb

        queue = deque([union(alpha, beta)])
        while queue:
            gamma = queue.popleft()
            delta = find(gamma)
            for g in self.generators:
                absorbed = union(g(gamma), g(delta))
                if absorbed is not None:
                    queue.append(absorbed)
        groups = {}
        for p in range(1, n + 1):
            groups.setdefault(find(p), []).append(p)
        return tuple(sorted(tuple(part) for part in groups.values()))

    @staticmethod
    def _join(parts1, parts2):
        points = [p for part in parts1 for p in part]
        parent = {p: p for p in points}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for parts in (parts1, parts2):
            for part in parts:
                r = find(part[0])
                for p in part[1:]:
                    rp = find(p)
                    if rp != r:
                        parent[max(rp, r)] = min(rp, r)
                        r = min(rp, r)
        groups = {}
        for p in points:
            groups.setdefault(find(p), []).append(p)
        return tuple(sorted(tuple(sorted(part)) for part in groups.values()))

    def block_systems(self):
        """All nontrivial invariant partitions, via minimal congruences for
        the pairs {1, beta} closed under joins.  Sorted by part size, then
        lexicographically by first part.  Requires a transitive group."""
        if not self.is_transitive():
            raise GroupError("block systems require a transitive group")
        n = self.degree
        found = set()
        for beta in range(2, n + 1):
            parts = self._min_partition(1, beta)
            if 1 < len(parts) < n:
                found.add(parts)
        # close under joins (the join of two invariant partitions is invariant)
        changed = True
        while changed:
            changed = False
            for p1, p2 in combinations(sorted(found), 2):
                j = self._join(p1, p2)
                if 1 < len(j) < n and j not in found:
                    found.add(j)
                    changed = True
        systems = []
        for parts in found:
            sizes = {len(part) for part in parts}
            assert len(sizes) == 1, "congruence of a transitive group has equal parts"
            systems.append(BlockSystem(n, parts))
        for sys_ in systems:
            assert sys_.is_invariant_under(self.generators)
        systems.sort(key=lambda s: (s.part_size, s.parts))
        return systems

    def __repr__(self):
        return "PermGroup(degree=%d, order=%d, ngens=%d)" % (
            self.degree,
            self.order(),
            len(self.generators),
        )


# -- group files -----------------------------------------------------------


def parse_group_text(text):
    """Read the group file format: line 1 ``degree <n>``, then one generator
    per non-empty, non-# line in disjoint-cycle notation."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("degree"):
        raise GroupError("group file must start with a 'degree <n>' line")
    try:
        degree = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise GroupError("bad degree line: %r" % lines[0]) from None
    gens = [parse_cycles(ln, degree) for ln in lines[1:]]
    return PermGroup(gens, degree=degree)


def format_group_text(group):
    """Write a PermGroup (its input generators) in the group file format."""
    lines = ["degree %d" % group.degree]
    lines.extend(format_cycles(g) for g in group.generators)
    return "\n".join(lines) + "\n"
