"""Instance generators and the deterministic RNG used throughout.

Randomized families accept an explicit integer seed and are reproducible
across platforms and processes: the generator below is a fixed 64-bit
xorshift-multiply recurrence, not Python's random module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import Hypergraph

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class GenerationError(ValueError):
    """Raised for invalid family parameters or exhausted retry caps."""


class Rng:
    """xorshift64* generator: shifts 12/25/27, multiplier 0x2545F4914F6CDD1D.

    A zero seed is replaced by a fixed odd constant since the all-zero
    state is a fixed point of the recurrence.
    """

    def __init__(self, seed: int):
        state = seed & _MASK64
        self._state = state if state else _GOLDEN

    def next_u64(self) -> int:
        s = self._state
        s ^= (s >> 12) & _MASK64
        s = (s ^ (s << 25)) & _MASK64
        s ^= s >> 27
        self._state = s
        return (s * 0x2545F4914F6CDD1D) & _MASK64

    def below(self, n: int) -> int:
        """Uniform integer in 0..n-1, unbiased via rejection."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in lo..hi inclusive."""
        if lo > hi:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)

    def sample_sorted(self, k: int, n: int) -> tuple[int, ...]:
        """k distinct integers from 0..n-1, ascending."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        chosen: set[int] = set()
        while len(chosen) < k:
            chosen.add(self.below(n))
        return tuple(sorted(chosen))

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(master: int, index: int) -> int:
    """Per-instance seed for survey position ``index`` under a master seed.

    Independent of how instances are scheduled across workers: position i
    always maps to the same seed.  Uses the splitmix64 finalizer on
    master + (i + 1) * 0x9E3779B97F4A7C15.
    """
    z = (master + (index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass(frozen=True)
class FamilySpec:
    """A parsed instance-family request; unused fields stay None."""

    family: str
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    order: Optional[int] = None
    size_min: Optional[int] = None
    size_max: Optional[int] = None
    seed: Optional[int] = None

    def label(self) -> str:
        """Canonical one-token description, parseable by parse_family."""
        if self.family == "fano":
            return "fano"
        if self.family in ("complete-graph", "cycle", "steiner-triple"):
            return f"{self.family}:{self.n}"
        if self.family in ("affine-plane", "projective-plane"):
            return f"{self.family}:{self.order}"
        if self.family == "random-linear":
            return (
                f"random-linear:n={self.n},m={self.m},k={self.k},seed={self.seed}"
            )
        if self.family == "random":
            return (
                f"random:n={self.n},m={self.m},"
                f"sizes={self.size_min}-{self.size_max},seed={self.seed}"
            )
        raise GenerationError(f"unknown family {self.family!r}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def complete_graph(n: int) -> Hypergraph:
    """K_n as a 2-uniform hypergraph: every pair of the n vertices."""
    if n < 1:
        raise GenerationError(f"complete graph needs n >= 1, got {n}")
    return Hypergraph(n, list(combinations(range(n), 2)))


def cycle(n: int) -> Hypergraph:
    """The n-cycle as a 2-uniform hypergraph, vertices in ring order."""
    if n < 3:
        raise GenerationError(f"cycle needs n >= 3, got {n}")
    return Hypergraph(n, [(i, (i + 1) % n) for i in range(n)])


def fano() -> Hypergraph:
    """The unique triple system on 7 points with every pair in one line."""
    lines = [
        (0, 1, 2),
        (0, 3, 4),
        (0, 5, 6),
        (1, 3, 5),
        (1, 4, 6),
        (2, 3, 6),
        (2, 4, 5),
    ]
    return Hypergraph(7, lines)


def affine_plane(p: int) -> Hypergraph:
    """Affine plane of prime order p: p^2 points, p^2 + p lines of size p.

    Point (a, b) gets id a * p + b.  Lines with slope s and intercept c come
    first (s major, c minor), then the p vertical lines.
    """
    if not _is_prime(p):
        raise GenerationError(f"affine plane order must be prime, got {p}")
    lines = []
    for s in range(p):
        for c in range(p):
            lines.append(tuple(x * p + (s * x + c) % p for x in range(p)))
    for c in range(p):
        lines.append(tuple(c * p + y for y in range(p)))
    return Hypergraph(p * p, lines)


def projective_plane(p: int) -> Hypergraph:
    """Projective plane of prime order p: p^2+p+1 points and lines, size p+1.

    Points are the homogeneous triples over Z_p normalized so the first
    nonzero coordinate is 1, sorted lexicographically; lines use the same
    triples as coefficients, in the same order, and contain the points
    whose dot product with the coefficients vanishes mod p.
    """
    if not _is_prime(p):
        raise GenerationError(f"projective plane order must be prime, got {p}")
    triples = [(0, 0, 1)]
    triples += [(0, 1, c) for c in range(p)]
    triples += [(1, a, b) for a in range(p) for b in range(p)]
    triples.sort()
    index = {t: i for i, t in enumerate(triples)}
    lines = []
    for coeff in triples:
        u, v, w = coeff
        line = [
            index[(x, y, z)]
            for (x, y, z) in triples
            if (u * x + v * y + w * z) % p == 0
        ]
        lines.append(tuple(sorted(line)))
    return Hypergraph(len(triples), lines)


def steiner_triple(n: int) -> Hypergraph:
    """A Steiner triple system on n points for n = 3 (mod 6).

    Bose construction: with n = 3q, q = 2s+1, take the quasigroup on Z_q
    with x * y = (s+1)(x+y) mod q.  Points are (x, i) with id 3x + i.
    Triples: the q spokes {(x,0),(x,1),(x,2)}, then for each level i and
    x < y the triple {(x,i), (y,i), (x*y, i+1 mod 3)}.
    """
    if n < 3 or n % 6 != 3:
        raise GenerationError(f"this construction needs n = 3 (mod 6), got {n}")
    q = n // 3
    s = (q - 1) // 2
    triples = [(3 * x, 3 * x + 1, 3 * x + 2) for x in range(q)]
    for i in range(3):
        j = (i + 1) % 3
        for x in range(q):
            for y in range(x + 1, q):
                z = ((s + 1) * (x + y)) % q
                triples.append(tuple(sorted((3 * x + i, 3 * y + i, 3 * z + j))))
    return Hypergraph(n, triples)


_RETRIES_PER_EDGE = 1000


def random_linear(n: int, m: int, k: int, seed: int) -> Hypergraph:
    """m distinct k-sets on n vertices, pairwise sharing at most one vertex.

    Rejection sampling: each edge is redrawn until it fits, up to a fixed
    cap of attempts per edge, after which a GenerationError reports the
    partial count.  Deterministic for a given seed.
    """
    if k < 2:
        raise GenerationError(f"linear family needs k >= 2, got {k}")
    if k > n:
        raise GenerationError(f"edge size {k} exceeds vertex count {n}")
    if m < 0:
        raise GenerationError("edge count must be non-negative")
    rng = Rng(seed)
    chosen: list[tuple[int, ...]] = []
    chosen_sets: list[set[int]] = []
    for _ in range(m):
        for _attempt in range(_RETRIES_PER_EDGE):
            cand = rng.sample_sorted(k, n)
            cset = set(cand)
            if all(len(cset & other) <= 1 for other in chosen_sets):
                chosen.append(cand)
                chosen_sets.append(cset)
                break
        else:
            raise GenerationError(
                f"could not place edge {len(chosen) + 1} of {m} "
                f"(n={n}, k={k}): retry cap hit"
            )
    return Hypergraph(n, chosen)


def random_hypergraph(
    n: int, m: int, size_range: tuple[int, int], seed: int
) -> Hypergraph:
    """m hyperedges with sizes drawn uniformly from size_range, repeats allowed."""
    lo, hi = size_range
    if not 1 <= lo <= hi:
        raise GenerationError(f"bad size range {lo}-{hi}")
    if hi > n:
        raise GenerationError(f"edge size {hi} exceeds vertex count {n}")
    if m < 0:
        raise GenerationError("edge count must be non-negative")
    rng = Rng(seed)
    edges = []
    for _ in range(m):
        size = rng.randint(lo, hi)
        edges.append(rng.sample_sorted(size, n))
    return Hypergraph(n, edges)


def generate(spec: FamilySpec) -> Hypergraph:
    """Build the hypergraph a FamilySpec describes."""
    if spec.family == "fano":
        return fano()
    if spec.family == "complete-graph":
        if spec.n is None:
            raise GenerationError("complete-graph needs n")
        return complete_graph(spec.n)
    if spec.family == "cycle":
        if spec.n is None:
            raise GenerationError("cycle needs n")
        return cycle(spec.n)
    if spec.family == "affine-plane":
        if spec.order is None:
            raise GenerationError("affine-plane needs an order")
        return affine_plane(spec.order)
    if spec.family == "projective-plane":
        if spec.order is None:
            raise GenerationError("projective-plane needs an order")
        return projective_plane(spec.order)
    if spec.family == "steiner-triple":
        if spec.n is None:
            raise GenerationError("steiner-triple needs n")
        return steiner_triple(spec.n)
    if spec.family == "random-linear":
        if None in (spec.n, spec.m, spec.k):
            raise GenerationError("random-linear needs n, m and k")
        return random_linear(spec.n, spec.m, spec.k, spec.seed or 0)
    if spec.family == "random":
        if None in (spec.n, spec.m):
            raise GenerationError("random needs n and m")
        lo = spec.size_min if spec.size_min is not None else 2
        hi = spec.size_max if spec.size_max is not None else min(3, spec.n)
        return random_hypergraph(spec.n, spec.m, (lo, hi), spec.seed or 0)
    raise GenerationError(f"unknown family {spec.family!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse a one-token family description.

    Grammar: ``fano``, ``complete-graph:N``, ``cycle:N``,
    ``affine-plane:P``, ``projective-plane:P``, ``steiner-triple:N``,
    ``random-linear:n=N,m=M,k=K[,seed=S]``,
    ``random:n=N,m=M[,sizes=LO-HI][,seed=S]``.
    """
    head, _, rest = text.partition(":")
    head = head.strip()
    if head == "fano":
        if rest:
            raise GenerationError("fano takes no parameters")
        return FamilySpec("fano")
    if head in ("complete-graph", "cycle", "steiner-triple"):
        try:
            n = int(rest)
        except ValueError:
            raise GenerationError(f"{head} needs an integer n, got {rest!r}")
        return FamilySpec(head, n=n)
    if head in ("affine-plane", "projective-plane"):
        try:
            order = int(rest)
        except ValueError:
            raise GenerationError(f"{head} needs an integer order, got {rest!r}")
        return FamilySpec(head, order=order)
    if head in ("random-linear", "random"):
        fields: dict[str, str] = {}
        if rest:
            for part in rest.split(","):
                key, eq, value = part.partition("=")
                if not eq:
                    raise GenerationError(f"expected key=value, got {part!r}")
                fields[key.strip()] = value.strip()
        unknown = set(fields) - {"n", "m", "k", "sizes", "seed"}
        if unknown:
            raise GenerationError(f"unknown parameters {sorted(unknown)}")

        def intfield(key: str) -> Optional[int]:
            if key not in fields:
                return None
            try:
                return int(fields[key])
            except ValueError:
                raise GenerationError(f"{key} must be an integer, got {fields[key]!r}")

        size_min = size_max = None
        if "sizes" in fields:
            lo_txt, dash, hi_txt = fields["sizes"].partition("-")
            try:
                size_min = int(lo_txt)
                size_max = int(hi_txt) if dash else size_min
            except ValueError:
                raise GenerationError(f"bad sizes value {fields['sizes']!r}")
        if head == "random-linear" and size_min is not None:
            raise GenerationError("random-linear is k-uniform; use k=, not sizes=")
        if head == "random" and "k" in fields:
            raise GenerationError("random uses sizes=LO-HI, not k=")
        return FamilySpec(
            head,
            n=intfield("n"),
            m=intfield("m"),
            k=intfield("k"),
            size_min=size_min,
            size_max=size_max,
            seed=intfield("seed"),
        )
    raise GenerationError(f"unknown family {head!r}")


def survey_instance(
    master_seed: int,
    index: int,
    n_range: tuple[int, int],
    m_range: tuple[int, int],
    k_choices: tuple[int, ...],
) -> tuple[FamilySpec, Hypergraph]:
    """The index-th random linear instance of a survey.

    Parameters are drawn from an RNG seeded by derive_seed(master, index),
    so the mapping from index to instance does not depend on worker
    scheduling.  The edge count is clamped to the pair budget
    C(n,2) / C(k,2) that linearity imposes, and on a rejection-cap failure
    the draw retries with a fresh generator seed and one edge fewer, so the
    procedure always terminates.
    """
    rng = Rng(derive_seed(master_seed, index))
    n = rng.randint(*n_range)
    k = k_choices[rng.below(len(k_choices))]
    if k > n:
        k = 2
    m = rng.randint(*m_range)
    budget = (n * (n - 1) // 2) // (k * (k - 1) // 2)
    m = max(1, min(m, budget))
    while True:
        seed = rng.next_u64()
        try:
            h = random_linear(n, m, k, seed)
        except GenerationError:
            m = max(1, m - 1)
            continue
        spec = FamilySpec("random-linear", n=n, m=m, k=k, seed=seed)
        return spec, h
