"""Combinatorial curve-neighborhood formulas for Schubert varieties.

The degree-d neighborhood of a Schubert variety is again a Schubert
variety; its partition drops the first d rows and columns.  Removing one
outer rim at a time computes the same shape.  ``gamma_special`` is the
partition of the two-pointed neighborhood of the last special class and an
opposite Schubert variety.
"""

from __future__ import annotations

from .partitions import GrContext, validate


def curve_neighborhood(lam, d: int, ctx: GrContext) -> tuple:
    """Drop the first d rows and columns of lam, padded back to length k."""
    validate(lam, ctx)
    if d < 0:
        raise ValueError("negative degree")
    out = [max(p - d, 0) for p in lam[d:]]
    return tuple(out) + (0,) * (ctx.k - len(out))


def rim_peel(lam, ctx: GrContext) -> tuple:
    """Remove the outer rim: (lam_2 - 1, ..., lam_k - 1, 0), floored at 0."""
    validate(lam, ctx)
    return tuple(max(p - 1, 0) for p in lam[1:]) + (0,)


def gamma_special(eta, d: int, ctx: GrContext) -> tuple:
    """Partition of the degree-d neighborhood of the last special class
    and the opposite Schubert variety indexed by eta.

    Entry j is min(eta_{j-d+1} + d, n-k), reading eta_i = n for i <= 0.
    """
    validate(eta, ctx)
    if not 1 <= d < min(ctx.k + 1, ctx.width):
        raise ValueError(f"degree {d} outside 1..{min(ctx.k + 1, ctx.width) - 1}")
    out = []
    for j in range(1, ctx.k + 1):
        m = j - d + 1
        e = ctx.n if m <= 0 else eta[m - 1]
        out.append(min(e + d, ctx.width))
    return tuple(out)
