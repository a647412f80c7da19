"""Permutation arithmetic, generator ingestion, orbit and orbital computation.

Convention used everywhere in this repo: permutations act on {0..degree-1},
products are applied left to right, i.e. ``compose(p, q)`` maps ``i`` to
``q(p(i))``.  Conjugation is ``x^g = g^-1 x g``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    BudgetExhausted,
    ClassSizeMismatch,
    DegreeMismatch,
    Malformed,
    NotCommuting,
    OutOfRange,
    RepeatedPoint,
)

CLASS_SIZE = 4095  # size of the central-involution class we build on


class Permutation:
    """A bijection on {0..degree-1}, stored as its image table."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = np.ascontiguousarray(images, dtype=np.int32)

    @property
    def degree(self):
        return self.images.shape[0]

    @classmethod
    def identity(cls, degree):
        return cls(np.arange(degree, dtype=np.int32))

    def is_identity(self):
        return bool((self.images == np.arange(self.degree)).all())

    def inverse(self):
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree, dtype=np.int32)
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(
            self.images, other.images
        )

    def __hash__(self):
        return hash(self.images.tobytes())

    def key(self):
        return self.images.tobytes()

    def __repr__(self):
        return f"Permutation(degree={self.degree})"

    def validate(self):
        if len(np.unique(self.images)) != self.degree:
            raise Malformed("image table is not a bijection")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result maps i to q(p(i))."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} != {q.degree}")
    return Permutation(q.images[p.images])


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """x^g = g^-1 x g (left-to-right application)."""
    if x.degree != g.degree:
        raise DegreeMismatch(f"degrees {x.degree} != {g.degree}")
    ginv = g.inverse()
    return Permutation(g.images[x.images[ginv.images]])


def element_order(p: Permutation) -> int:
    """lcm of the cycle lengths."""
    seen = np.zeros(p.degree, dtype=bool)
    order = 1
    for start in range(p.degree):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = int(p.images[cur])
            length += 1
        order = math.lcm(order, length)
    return order


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles of 1-based points, e.g. ``(1,2,3)(5,6)``."""
    stripped = re.sub(r"\s+", "", text)
    body = _CYCLE_RE.sub("", stripped)
    if body:
        raise Malformed(f"unexpected text outside cycles: {body!r}")
    images = np.arange(degree, dtype=np.int32)
    used = set()
    for cyc in _CYCLE_RE.findall(stripped):
        if not cyc:
            continue
        try:
            pts = [int(tok) for tok in cyc.split(",")]
        except ValueError as exc:
            raise Malformed(f"bad cycle {cyc!r}") from exc
        for pt in pts:
            if not 1 <= pt <= degree:
                raise OutOfRange(f"point {pt} outside 1..{degree}")
            if pt in used:
                raise RepeatedPoint(f"point {pt} appears twice")
            used.add(pt)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    return Permutation(images)


@dataclass
class GeneratorSet:
    degree: int
    generators: list
    source_label: str = ""

    def __post_init__(self):
        if not self.generators:
            raise Malformed("no generators")
        for g in self.generators:
            if g.degree != self.degree:
                raise DegreeMismatch("generator degree differs from header")


def load_generator_file(path) -> GeneratorSet:
    """File format: ``degree N`` then one cycle-notation permutation per line.

    Blank lines and ``#`` comments are ignored.
    """
    degree = None
    gens = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if degree is None:
                m = re.fullmatch(r"degree\s+(\d+)", line)
                if not m:
                    raise Malformed(f"{path}:{lineno}: expected 'degree N' header")
                degree = int(m.group(1))
                continue
            try:
                gens.append(parse_permutation(line, degree))
            except Malformed as exc:
                raise type(exc)(f"{path}:{lineno}: {exc}") from exc
    if degree is None:
        raise Malformed(f"{path}: missing 'degree N' header")
    return GeneratorSet(degree, gens, source_label=str(path))


@dataclass
class InvolutionClass:
    """A conjugation-closed class of involutions, indexed in discovery order."""

    seed: Permutation
    members: np.ndarray  # (size, degree) image tables
    index_of: dict = field(repr=False)

    @property
    def size(self):
        return self.members.shape[0]

    @property
    def degree(self):
        return self.members.shape[1]

    def permutation(self, i) -> Permutation:
        return Permutation(self.members[i])

    def index(self, perm: Permutation) -> int:
        return self.index_of[perm.key()]


def _closure_bfs(x: Permutation, gens: GeneratorSet, cap=None):
    """Conjugation-closure of {x}, members in first-discovery order."""
    ginvs = [(g.images, g.inverse().images) for g in gens.generators]
    members = [x.images]
    index_of = {x.key(): 0}
    head = 0
    while head < len(members):
        xv = members[head]
        head += 1
        for gim, ginv in ginvs:
            y = gim[xv[ginv]]
            key = y.tobytes()
            if key not in index_of:
                index_of[key] = len(members)
                members.append(y)
                if cap is not None and len(members) > cap:
                    return members, index_of
    return members, index_of


def conjugation_orbit(x: Permutation, gens: GeneratorSet) -> InvolutionClass:
    """BFS closure of {x} under conjugation by the generators, in file order.

    The discovery order is the canonical point indexing used by all downstream
    modules.
    """
    members, index_of = _closure_bfs(x, gens)
    arr = np.array(members, dtype=np.int32)
    if arr.shape[0] != CLASS_SIZE:
        raise ClassSizeMismatch(
            f"conjugation orbit has size {arr.shape[0]}, expected {CLASS_SIZE}"
        )
    return InvolutionClass(seed=x, members=arr, index_of=index_of)


def find_central_involution(
    gens: GeneratorSet, word_budget: int = 5000, seed: int = 0
) -> Permutation:
    """Deterministic random-word search for an involution with a 4095 orbit.

    Walks a fixed-seed pseudorandom product stream; every element of even
    order n contributes its n/2-th power.  An involution is accepted when its
    conjugation orbit has size exactly 4095.
    """
    rng = random.Random(seed)
    cur = Permutation.identity(gens.degree)
    tried = set()
    for _ in range(word_budget):
        cur = compose(cur, gens.generators[rng.randrange(len(gens.generators))])
        n = element_order(cur)
        if n % 2:
            continue
        x = cur
        half = n // 2
        # square-and-multiply exponentiation
        acc = Permutation.identity(gens.degree)
        base = x
        e = half
        while e:
            if e & 1:
                acc = compose(acc, base)
            base = compose(base, base)
            e >>= 1
        x = acc
        if x.is_identity() or x.key() in tried:
            continue
        tried.add(x.key())
        members, _ = _closure_bfs(x, gens, cap=CLASS_SIZE)
        if len(members) == CLASS_SIZE:
            return x
    raise BudgetExhausted(
        f"no involution with a {CLASS_SIZE}-element conjugation orbit "
        f"within {word_budget} words"
    )


def class_action(cls: InvolutionClass, gens: GeneratorSet) -> np.ndarray:
    """(#gens, size) array: the permutation each generator induces on class
    indices by conjugation."""
    actions = np.empty((len(gens.generators), cls.size), dtype=np.int32)
    for gi, g in enumerate(gens.generators):
        gim = g.images
        ginv = g.inverse().images
        for i in range(cls.size):
            y = gim[cls.members[i][ginv]]
            actions[gi, i] = cls.index_of[y.tobytes()]
    return actions


def commute(cls: InvolutionClass, i: int, j: int) -> bool:
    a, b = cls.members[i], cls.members[j]
    return bool(np.array_equal(a[b], b[a]))


def product_index(cls: InvolutionClass, i: int, j: int) -> int:
    """Index of the product x_i x_j, which must itself be a class member."""
    a, b = cls.members[i], cls.members[j]
    return cls.index_of[b[a].tobytes()]


def _triple_orbit(start, actions):
    """BFS orbit of a sorted index triple under componentwise conjugation."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for tri in frontier:
            for act in actions:
                img = (act[tri[0]], act[tri[1]], act[tri[2]])
                img = tuple(sorted(img))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def klein_orbit_size(
    x: int, y: int, cls: InvolutionClass, gens: GeneratorSet, actions=None
) -> int:
    """Size of the conjugation orbit of the Klein subgroup <x,y>, represented
    as the sorted triple {x, y, xy} of class indices.  By orbit-stabilizer
    this equals the index of the normalizer of <x,y>."""
    if x == y:
        raise NotCommuting("need two distinct involutions")
    if not commute(cls, x, y):
        raise NotCommuting(f"class members {x} and {y} do not commute")
    if actions is None:
        actions = class_action(cls, gens)
    start = tuple(sorted((x, y, product_index(cls, x, y))))
    return len(_triple_orbit(start, actions))


@dataclass
class OrbitalPartition:
    """Orbits of ordered index pairs under simultaneous conjugation."""

    base_size: int
    labels: np.ndarray  # (size, size) orbital id per ordered pair
    orbital_sizes: list

    @property
    def n_orbitals(self):
        return len(self.orbital_sizes)

    def class_of_pair(self, i, j):
        return int(self.labels[i, j])

    def suborbits(self, base: int):
        """Point sets of the orbitals restricted to pairs (base, *)."""
        row = self.labels[base]
        return {
            orb: np.flatnonzero(row == orb) for orb in np.unique(row)
        }


def pair_orbitals(
    cls: InvolutionClass, gens: GeneratorSet, actions=None
) -> OrbitalPartition:
    """Full orbital partition of ordered pairs of class indices."""
    if actions is None:
        actions = class_action(cls, gens)
    n = cls.size
    flat, norb = kernels.pair_orbit_labels(actions, n)
    labels = flat.reshape(n, n)
    sizes = np.bincount(flat, minlength=norb)
    return OrbitalPartition(
        base_size=n, labels=labels, orbital_sizes=[int(s) for s in sizes]
    )
