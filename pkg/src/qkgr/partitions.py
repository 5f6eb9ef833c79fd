"""Partitions in the k x (n-k) rectangle: duality, jump sequences, Seidel
shifts, horizontal strips, outer rims and rook strips.

Partitions are plain tuples of length k, weakly decreasing, with entries in
[0, n-k] (trailing zeros explicit).  Jump sequences are strictly increasing
k-tuples with entries in [1, n].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product as iterproduct

Partition = tuple
JumpSequence = tuple


@dataclass(frozen=True)
class GrContext:
    """Ambient parameters for Gr(k, n) computations.

    ``trunc`` is the q-truncation degree: all ring computations happen in
    Z[q]/(q^(trunc+1)).  The default min(k, n-k)+1 is enough for every
    product of two Schubert classes; stabilization against trunc+2 is
    checked in the test suite.
    """

    k: int
    n: int
    trunc: int

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        if self.trunc < min(self.k, self.n - self.k) + 1:
            raise ValueError(
                f"truncation {self.trunc} below min(k, n-k)+1 for Gr({self.k}, {self.n})"
            )

    @property
    def width(self) -> int:
        return self.n - self.k


def default_trunc(k: int, n: int) -> int:
    return min(k, n - k) + 1


def context(k: int, n: int, trunc: int | None = None) -> GrContext:
    """Build a GrContext with the default truncation unless overridden."""
    if trunc is None:
        trunc = default_trunc(k, n)
    return GrContext(k, n, trunc)


def normalize(parts, ctx: GrContext) -> Partition:
    """Pad with trailing zeros to length k and validate."""
    lam = tuple(int(p) for p in parts)
    if len(lam) < ctx.k:
        lam = lam + (0,) * (ctx.k - len(lam))
    validate(lam, ctx)
    return lam


def is_valid(lam, ctx: GrContext) -> bool:
    if len(lam) != ctx.k:
        return False
    prev = ctx.width
    for p in lam:
        if not 0 <= p <= prev:
            return False
        prev = p
    return True


def validate(lam, ctx: GrContext) -> None:
    if not is_valid(lam, ctx):
        raise ValueError(f"{lam} is not a partition inside the {ctx.k}x{ctx.width} rectangle")


def size(lam: Partition) -> int:
    return sum(lam)


def parse_partition(text: str, ctx: GrContext) -> Partition:
    """Parse "3,2,1" (or a bare "3"); short tuples are padded with zeros."""
    text = text.strip()
    if text in ("", "0"):
        return normalize((), ctx)
    return normalize((int(p) for p in text.split(",")), ctx)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def dual(lam: Partition, ctx: GrContext) -> Partition:
    """The Poincare-dual partition (n-k-lam_k, ..., n-k-lam_1)."""
    w = ctx.width
    return tuple(w - p for p in reversed(lam))


def to_jump_sequence(lam: Partition, ctx: GrContext) -> JumpSequence:
    """The increasing k-subset {n-k+j-lam_j} of {1..n}."""
    w = ctx.width
    return tuple(w + j - lam[j - 1] for j in range(1, ctx.k + 1))


def from_jump_sequence(jumps: JumpSequence, ctx: GrContext) -> Partition:
    w = ctx.width
    lam = tuple(w + j - jumps[j - 1] for j in range(1, ctx.k + 1))
    validate(lam, ctx)
    return lam


def shift_jump(jumps: JumpSequence, p: int, ctx: GrContext) -> JumpSequence:
    """Shift every jump by p mod n and re-sort into an increasing k-subset."""
    n = ctx.n
    return tuple(sorted((a + p - 1) % n + 1 for a in jumps))


def d_count(jumps: JumpSequence, i: int, ctx: GrContext) -> int:
    """Number of jumps a_j <= i, for 0 <= i <= n."""
    if not 0 <= i <= ctx.n:
        raise ValueError(f"i={i} out of range 0..{ctx.n}")
    return sum(1 for a in jumps if a <= i)


@cache
def seidel_up1(lam: Partition, ctx: GrContext) -> Partition:
    if lam[0] < ctx.width:
        return tuple(p + 1 for p in lam)
    return lam[1:] + (0,)


def seidel_up(lam: Partition, p: int, ctx: GrContext) -> Partition:
    """The p-th Seidel shift; p is reduced mod n (the shift has period n)."""
    if p < 0:
        raise ValueError("seidel_up expects a non-negative shift")
    for _ in range(p % ctx.n):
        lam = seidel_up1(lam, ctx)
    return lam


def seidel_down(lam: Partition, p: int, ctx: GrContext) -> Partition:
    return seidel_up(lam, (ctx.n - p) % ctx.n, ctx)


def horizontal_strip(lam: Partition, nu: Partition) -> tuple[bool, int, int]:
    """Whether nu/lam is a horizontal strip, with its size and nonempty rows.

    nu/lam is a horizontal strip when nu contains lam and nu_{i+1} <= lam_i,
    i.e. no two added boxes share a column.
    """
    k = len(lam)
    for i in range(k):
        if nu[i] < lam[i]:
            return (False, 0, 0)
        if i + 1 < k and nu[i + 1] > lam[i]:
            return (False, 0, 0)
    return (True, sum(nu) - sum(lam), sum(1 for i in range(k) if nu[i] > lam[i]))


def horizontal_strips_over(lam: Partition, ctx: GrContext):
    """All nu in the rectangle with nu/lam a horizontal strip (nu = lam included)."""
    k = ctx.k
    ranges = [range(lam[0], ctx.width + 1)]
    ranges += [range(lam[j], lam[j - 1] + 1) for j in range(1, k)]
    for nu in iterproduct(*ranges):
        yield nu


def outer_rim(lam: Partition) -> list[tuple[int, int]]:
    """Boxes (i, j), 1-based, of lam with no box at (i+1, j+1)."""
    k = len(lam)
    boxes = []
    for i in range(1, k + 1):
        below = lam[i] if i < k else 0
        for j in range(max(below, 1), lam[i - 1] + 1):
            boxes.append((i, j))
    return boxes


def outer_rim_removals(lam: Partition, ctx: GrContext) -> list[tuple[Partition, int]]:
    """All nu obtained from lam by removing rim boxes, at least one per row.

    Applicable only when lam has k nonzero rows; otherwise the list is empty.
    For each nu the second component is the rim-row count: the number of rows
    of nu still containing a box of the outer rim of lam, the bottom rim row
    excluded.
    """
    k = ctx.k
    if lam[k - 1] == 0:
        return []
    ranges = []
    for i in range(k):
        below = lam[i + 1] if i + 1 < k else 0
        ranges.append(range(max(below - 1, 0), lam[i]))
    out = []
    for nu in iterproduct(*ranges):
        rows = sum(
            1
            for i in range(k - 1)
            if nu[i] >= max(lam[i + 1], 1)
        )
        out.append((nu, rows))
    return out


def rook_strips_over(mu: Partition, ctx: GrContext) -> list[tuple[Partition, int]]:
    """All (eta, sign) with eta/mu-dual a rook strip, sign = (-1)^boxes added.

    The base shape is the dual of mu; a rook strip adds at most one box per
    row and per column.  Adding in row i lands at column dual(mu)_i + 1, so
    two chosen rows may not carry equal parts, and a row may only grow past
    an unchosen predecessor if it is strictly shorter.
    """
    base = dual(mu, ctx)
    k, w = ctx.k, ctx.width
    out = []
    for mask in range(1 << k):
        rows = [i for i in range(k) if mask >> i & 1]
        eta = list(base)
        ok = True
        for i in rows:
            if base[i] >= w:
                ok = False
                break
            eta[i] += 1
        if not ok:
            continue
        if any(eta[i] > eta[i - 1] for i in range(1, k)):
            continue
        if len({base[i] for i in rows}) != len(rows):
            continue
        out.append((tuple(eta), -1 if len(rows) % 2 else 1))
    out.sort(key=lambda t: basis_key(t[0]))
    return out


def basis_key(lam: Partition) -> tuple[int, Partition]:
    """Sort key for the basis order: by size, then lexicographic."""
    return (sum(lam), lam)


@cache
def all_partitions(ctx: GrContext) -> tuple[Partition, ...]:
    """Every partition in the k x (n-k) rectangle, in basis order."""
    k, w = ctx.k, ctx.width

    def gen(rows, bound):
        if rows == 0:
            yield ()
            return
        for head in range(bound + 1):
            for tail in gen(rows - 1, head):
                yield (head,) + tail

    parts = sorted(gen(k, w), key=basis_key)
    return tuple(parts)
