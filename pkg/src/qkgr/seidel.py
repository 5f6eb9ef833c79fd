"""Seidel operators on QK(Gr(k, n)) and quantum-to-classical reductions.

T is quantum multiplication by O^(1,...,1) and H by O^(n-k,0,...,0); both
act on the Schubert basis by a Seidel shift with an explicit q-power, and
satisfy T^n = q^k Id, H^n = q^(n-k) Id and H T = q Id.

The reductions rewrite a structure constant N_{lam,mu}^{nu,d} as one of a
strictly smaller degree (or the same degree under an equal-difference shift)
by comparing how lam and nu move under Seidel shifts.  They return None when
their hypotheses fail, so sweeps can filter applicable tuples.
"""

from __future__ import annotations

from .element import QKElement
from .partitions import (
    GrContext,
    dual,
    seidel_down,
    seidel_up,
    seidel_up1,
    size,
    validate,
)


def t_basis(lam, ctx: GrContext) -> tuple[int, tuple]:
    """T on a basis element: (q-power, partition)."""
    if lam[0] == ctx.width:
        return (1, lam[1:] + (0,))
    return (0, tuple(p + 1 for p in lam))


def h_basis(mu, ctx: GrContext) -> tuple[int, tuple]:
    """H on a basis element: (q-power, partition)."""
    if mu[ctx.k - 1] > 0:
        return (1, tuple(p - 1 for p in mu))
    return (0, (ctx.width,) + mu[: ctx.k - 1])


def _linear(op, elem: QKElement, ctx: GrContext) -> QKElement:
    out = {}
    for (lam, d), c in elem.terms.items():
        dd, nu = op(lam, ctx)
        dnew = d + dd
        if dnew > ctx.trunc:
            raise OverflowError(
                f"q-degree {dnew} exceeds truncation {ctx.trunc}; widen the context"
            )
        key = (nu, dnew)
        out[key] = out.get(key, 0) + c
    return QKElement(out)


def T(elem: QKElement, ctx: GrContext) -> QKElement:
    return _linear(t_basis, elem, ctx)


def H(elem: QKElement, ctx: GrContext) -> QKElement:
    return _linear(h_basis, elem, ctx)


def qh_seidel_power(lam, r: int, ctx: GrContext) -> tuple[int, tuple]:
    """T^r on a basis element: (q-power d_r, lam shifted up r times).

    d_r = (r*k + |lam| - |lam up r|) / n, always a non-negative integer.
    Powers r > n are folded through T^n = q^k Id.
    """
    if r < 0:
        raise ValueError("negative Seidel power")
    whole, r = divmod(r, ctx.n)
    shifted = seidel_up(lam, r, ctx)
    d = (r * ctx.k + size(lam) - size(shifted)) // ctx.n
    return (d + whole * ctx.k, shifted)


def apply_t_power(elem: QKElement, r: int, ctx: GrContext) -> QKElement:
    """T^r applied linearly, raising on q-truncation overflow."""
    out = {}
    for (lam, d), c in elem.terms.items():
        dd, nu = qh_seidel_power(lam, r, ctx)
        dnew = d + dd
        if dnew > ctx.trunc:
            raise OverflowError(
                f"q-degree {dnew} exceeds truncation {ctx.trunc}; widen the context"
            )
        key = (nu, dnew)
        out[key] = out.get(key, 0) + c
    return QKElement(out)


def d_min(lam, mu, ctx: GrContext) -> tuple[int, int]:
    """Smallest q-power in O^lam * O^mu and the smallest shift achieving it.

    d_min = max over 0 <= i <= n of (|lam|-|lam up i| + |mu|-|mu up (n-i)|)/n,
    and for the maximizer r the whole product satisfies
    O^lam * O^mu = q^d_min * O^(lam up r) * O^(mu up (n-r)).
    """
    validate(lam, ctx)
    validate(mu, ctx)
    n = ctx.n
    best, best_r = None, 0
    up_l, up_m = lam, mu
    drops_l = [0]
    drops_m = [0]
    for _ in range(n):
        up_l = seidel_up1(up_l, ctx)
        up_m = seidel_up1(up_m, ctx)
        drops_l.append(size(lam) - size(up_l))
        drops_m.append(size(mu) - size(up_m))
    for i in range(n + 1):
        val = drops_l[i] + drops_m[n - i]
        if val % n:
            raise AssertionError("Seidel drop sum not divisible by n")
        val //= n
        if best is None or val > best:
            best, best_r = val, i
    return (best, best_r)


def reduce_lemred(lam, mu, nu, d: int, variant: int, ctx: GrContext, i: int = 1):
    """One Seidel-shift rewrite of (lam, mu, nu, d); None when inapplicable.

    Variants: (1) up-shift with strict drop comparison, degree d-1;
    (2) the down-shift analogue; (3)/(4) equal-difference up/down shifts by
    i, degree unchanged.
    """
    if variant in (1, 2) and d < 1:
        return None
    if variant == 1:
        if size(lam) - size(seidel_up1(lam, ctx)) > size(nu) - size(seidel_up1(nu, ctx)):
            return (seidel_up(lam, 1, ctx), mu, seidel_up(nu, 1, ctx), d - 1)
        return None
    if variant == 2:
        if size(lam) - size(seidel_down(lam, 1, ctx)) > size(nu) - size(seidel_down(nu, 1, ctx)):
            return (seidel_down(lam, 1, ctx), mu, seidel_down(nu, 1, ctx), d - 1)
        return None
    if variant == 3:
        if size(lam) - size(seidel_up(lam, i, ctx)) == size(nu) - size(seidel_up(nu, i, ctx)):
            return (seidel_up(lam, i, ctx), mu, seidel_up(nu, i, ctx), d)
        return None
    if variant == 4:
        if size(lam) - size(seidel_down(lam, i, ctx)) == size(nu) - size(seidel_down(nu, i, ctx)):
            return (seidel_down(lam, i, ctx), mu, seidel_down(nu, i, ctx), d)
        return None
    raise ValueError(f"unknown variant {variant}")


def duality(lam, mu, nu, d: int, ctx: GrContext):
    """The dual index tuple (lam, dual nu, dual mu, d); an involution."""
    return (lam, dual(nu, ctx), dual(mu, ctx), d)


def lemcom_shift(lam, nu, m: int, ctx: GrContext):
    """Shift lam and nu up by n-k-lam_m+m and return both, in closed form.

    Requires nu_i >= lam_i for i < m and nu_m < lam_m.  The results are
    asserted against the iterated Seidel shift.
    """
    k, w = ctx.k, ctx.width
    if not 1 <= m <= k:
        raise ValueError(f"m={m} out of range 1..{k}")
    if any(nu[i] < lam[i] for i in range(m - 1)) or nu[m - 1] >= lam[m - 1]:
        raise ValueError("lemcom_shift needs nu_i >= lam_i below m and nu_m < lam_m")
    r = w - lam[m - 1] + m
    a = lam[m - 1]
    lam_closed = (
        tuple(lam[j] + w - a for j in range(m, k))
        + tuple(lam[j] - a for j in range(m - 1))
        + (0,)
    )
    nu_closed = tuple(nu[j] + w - a + 1 for j in range(m - 1, k)) + tuple(
        nu[j] - a + 1 for j in range(m - 1)
    )
    lam_up = seidel_up(lam, r, ctx)
    nu_up = seidel_up(nu, r, ctx)
    assert lam_up == lam_closed and nu_up == nu_closed, "closed form mismatch"
    return (lam_up, nu_up)


def reduce_deg_one(lam, mu, nu, d: int, ctx: GrContext):
    """Degree-lowering rewrite at m = min{i : nu_i < lam_i}; None if none."""
    if d < 1:
        return None
    m = next((i + 1 for i in range(ctx.k) if nu[i] < lam[i]), None)
    if m is None:
        return None
    r = ctx.width - lam[m - 1] + m
    return (seidel_up(lam, r, ctx), mu, seidel_up(nu, r, ctx), d - 1)


def reduce_higher(lam, mu, nu, d: int, s: int, ctx: GrContext):
    """Drop the degree by s >= 2 in one shift; None when inapplicable."""
    k = ctx.k
    if not 2 <= s <= d:
        return None
    if nu[0] + s - 2 >= lam[s - 2]:
        return None
    t = next(
        (j for j in range(s, k + 1) if nu[j - s] + s - 1 < lam[j - 1]),
        None,
    )
    if t is None:
        return None
    r = ctx.width - lam[t - 1] + t
    return (seidel_up(lam, r, ctx), mu, seidel_up(nu, r, ctx), d - s)


def reduce_dual_shift(lam, mu, nu, d: int, ctx: GrContext):
    """Degree-lowering rewrite through duality; None when inapplicable.

    Needs d >= 1, nu_1 >= lam_1 and nu_1 < lam_{k+1-j} + mu_j for some j;
    with m the least such j the tuple becomes
    (dual nu down (n-k-nu_1), mu down (k+mu_m-m), dual lam down (n-nu_1+mu_m-m), d-1).
    """
    k = ctx.k
    if d < 1 or nu[0] < lam[0]:
        return None
    m = next((j for j in range(1, k + 1) if nu[0] < lam[k - j] + mu[j - 1]), None)
    if m is None:
        return None
    return (
        seidel_down(dual(nu, ctx), ctx.width - nu[0], ctx),
        seidel_down(mu, k + mu[m - 1] - m, ctx),
        seidel_down(dual(lam, ctx), ctx.n - nu[0] + mu[m - 1] - m, ctx),
        d - 1,
    )


def reduction_trace(lam, mu, nu, d: int, ctx: GrContext) -> list[dict]:
    """Greedy reduction to degree zero, one step per entry.

    Each step applies the degree-one rewrite to whichever factor admits it
    with the smaller shift (first factor on ties), falling back to the
    dual-shift rewrite.  Stops at degree zero or when no rule applies.
    """
    steps = []
    while d > 0:
        options = []
        got = reduce_deg_one(lam, mu, nu, d, ctx)
        if got is not None:
            m = next(i + 1 for i in range(ctx.k) if nu[i] < lam[i])
            options.append((ctx.width - lam[m - 1] + m, "deg-one", got))
        got = reduce_deg_one(mu, lam, nu, d, ctx)
        if got is not None:
            m = next(i + 1 for i in range(ctx.k) if nu[i] < mu[i])
            swapped = (got[1], got[0], got[2], got[3])
            options.append((ctx.width - mu[m - 1] + m, "deg-one-swapped", swapped))
        if options:
            options.sort(key=lambda t: t[0])
            _, rule, tup = options[0]
        else:
            tup = reduce_dual_shift(lam, mu, nu, d, ctx)
            if tup is None:
                tup = reduce_dual_shift(mu, lam, nu, d, ctx)
                rule = "dual-shift-swapped"
            else:
                rule = "dual-shift"
            if tup is None:
                break
        lam, mu, nu, d = tup
        steps.append({"rule": rule, "lhs": lam, "rhs": mu, "nu": nu, "deg": d})
    return steps
