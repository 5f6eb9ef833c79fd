"""Pieri rules for QK(Gr(k, n)).

Multiplication by a special class O^i = O^(i,0,...,0):

* the classical part runs over horizontal strips nu/lam with
  i <= |nu/lam| <= i + r(nu/lam) - 1 and carries the signed binomial
  (-1)^(|nu/lam|-i) * C(r(nu/lam)-1, |nu/lam|-i);
* the q-part exists only when lam fills all k rows, and runs over the
  removals of outer-rim boxes of lam (at least one per row) with
  coefficient (-1)^e * C(rho, e) at q^1, where e = |nu| + n - |lam| - i and
  rho counts the rim rows of nu above the bottom one.

``quantum_pieri_restated`` computes the same product by shifting lam down
until its last row is empty and reading the q-part off classical strips of
the shifted shape; the two forms agree on every input (tested exhaustively).
"""

from __future__ import annotations

from functools import cache
from math import comb

from .element import QKElement
from .partitions import (
    GrContext,
    horizontal_strips_over,
    outer_rim_removals,
    seidel_down,
    size,
    validate,
)


def _check_index(i: int, ctx: GrContext) -> None:
    if not 1 <= i <= ctx.width:
        raise ValueError(f"Pieri index {i} out of range 1..{ctx.width}")


@cache
def classical_terms(ctx: GrContext, lam, i: int):
    """Terms (nu, 0, coeff) of the classical product O^i . O^lam."""
    _check_index(i, ctx)
    out = []
    for nu in horizontal_strips_over(lam, ctx):
        s = size(nu) - size(lam)
        if s < i:
            continue
        r = sum(1 for a, b in zip(nu, lam) if a > b)
        if s > i + r - 1:
            continue
        out.append((nu, 0, (-1) ** (s - i) * comb(r - 1, s - i)))
    return tuple(out)


@cache
def quantum_terms(ctx: GrContext, lam, i: int):
    """Terms (nu, d, coeff) of the quantum product O^i * O^lam."""
    out = list(classical_terms(ctx, lam, i))
    for nu, rho in outer_rim_removals(lam, ctx):
        e = size(nu) + ctx.n - size(lam) - i
        if 0 <= e <= rho:
            out.append((nu, 1, (-1) ** e * comb(rho, e)))
    return tuple(out)


def classical_pieri(lam, i: int, ctx: GrContext) -> QKElement:
    validate(lam, ctx)
    return QKElement({(nu, d): c for nu, d, c in classical_terms(ctx, lam, i)})


def quantum_pieri(lam, i: int, ctx: GrContext) -> QKElement:
    validate(lam, ctx)
    return QKElement({(nu, d): c for nu, d, c in quantum_terms(ctx, lam, i)})


def quantum_pieri_restated(lam, i: int, ctx: GrContext) -> QKElement:
    """The restated quantum Pieri rule, via the shift lam -> lam down lam_k."""
    validate(lam, ctx)
    _check_index(i, ctx)
    k, n, w = ctx.k, ctx.n, ctx.width
    out = {(nu, d): c for nu, d, c in classical_terms(ctx, lam, i)}
    bottom = lam[k - 1]
    if bottom > 0:
        tilde = seidel_down(lam, bottom, ctx)
        for nt in horizontal_strips_over(tilde, ctx):
            s = size(nt) - size(tilde)
            if s < i:
                continue
            r = sum(1 for a, b in zip(nt, tilde) if a > b)
            if s > i + r - 1:
                continue
            if nt[0] <= w - bottom:
                continue
            nu = tuple(nt[j] + bottom - 1 for j in range(1, k)) + (
                bottom - n + k + nt[0] - 1,
            )
            sign = (-1) ** (size(nu) + n - i - size(lam))
            out[(nu, 1)] = out.get((nu, 1), 0) + sign * comb(r - 1, s - i)
    return QKElement(out)


def apply_terms(vec: dict, terms_for, trunc: int) -> dict:
    """Apply a basiswise operator to a raw term dict, truncating in q.

    ``terms_for(lam)`` yields (nu, dd, coeff) triples; ``vec`` maps
    (partition, d) to integers.  This is the hot path shared by the Pieri
    operators and the product engines.
    """
    out = {}
    for (lam, d), c in vec.items():
        for nu, dd, c2 in terms_for(lam):
            dnew = d + dd
            if dnew > trunc:
                continue
            key = (nu, dnew)
            v = out.get(key, 0) + c * c2
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


class PieriOperator:
    """Quantum multiplication by O^i, realized column-by-column.

    The column for the basis element O^lam is quantum_pieri(lam, i),
    truncated at the context q-degree.
    """

    def __init__(self, i: int, ctx: GrContext):
        _check_index(i, ctx)
        self.index = i
        self.ctx = ctx

    def column(self, lam) -> QKElement:
        return quantum_pieri(lam, self.index, self.ctx).truncated(self.ctx.trunc)

    def apply_raw(self, vec: dict) -> dict:
        ctx = self.ctx
        return apply_terms(vec, lambda lam: quantum_terms(ctx, lam, self.index), ctx.trunc)

    def apply(self, elem: QKElement) -> QKElement:
        return QKElement(self.apply_raw(elem.terms))


@cache
def pieri_operator(i: int, ctx: GrContext) -> PieriOperator:
    return PieriOperator(i, ctx)
