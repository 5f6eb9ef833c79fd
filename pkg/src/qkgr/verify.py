"""Exhaustive verification sweeps, shared by the CLI and the test suite.

Each suite prepares a deterministic list of work items plus a checker, runs
the checker over every item (optionally split across processes), and
returns a report with the number of checks, the failure count and the
first failure.  Sweeps are embarrassingly parallel; results are merged in
chunk order so output is identical for any job count.
"""

from __future__ import annotations

import multiprocessing
import random
from itertools import combinations_with_replacement

from .curve_nbhd import curve_neighborhood, gamma_special, rim_peel
from .element import QKElement
from .gr3n import positivity_check, qlr_gr3
from .partitions import all_partitions, context, dual, seidel_down, seidel_up
from .pieri import classical_pieri, quantum_pieri, quantum_pieri_restated
from .qk_engine import (
    product_basis,
    reduce_third_row,
    structure_constant,
    verify_recursion,
)
from .seidel import (
    H,
    T,
    d_min,
    duality,
    qh_seidel_power,
    reduce_deg_one,
    reduce_dual_shift,
    reduce_higher,
    reduce_lemred,
    t_basis,
)

SUITE_NAMES = (
    "seidel",
    "pieri-equiv",
    "gr3n-rule",
    "dmin",
    "reductions",
    "positivity",
    "duality",
    "curve-nbhd",
    "associativity",
)


def _constant(tup, ctx):
    lam, mu, nu, d = tup
    if d < 0 or d > ctx.trunc:
        return None
    return structure_constant(lam, mu, nu, d, ctx)


# The checkers live at module level and read their shared state from
# _WORKER so that a fork-based pool can reach them without pickling.
_WORKER: dict = {}


def _check_seidel(lam, state):
    ctx = state["ctx"]
    k, n = ctx.k, ctx.n
    e = QKElement.basis(lam)
    x = e
    for _ in range(n):
        x = T(x, ctx)
    if x != e.q_shift(k):
        return (1, f"T^{n} != q^{k} Id at {lam}")
    x = e
    for _ in range(n):
        x = H(x, ctx)
    if x != e.q_shift(n - k):
        return (1, f"H^{n} != q^{n - k} Id at {lam}")
    if H(T(e, ctx), ctx) != e.q_shift(1):
        return (1, f"HT != q Id at {lam}")
    d, p = t_basis(lam, ctx)
    if product_basis((1,) * k, lam, ctx) != QKElement.basis(p, d):
        return (1, f"engine product disagrees with T closed form at {lam}")
    return (4, None)


def _check_pieri_equiv(item, state):
    lam, i = item
    ctx = state["ctx"]
    a = quantum_pieri(lam, i, ctx)
    b = quantum_pieri_restated(lam, i, ctx)
    if a != b:
        return (1, f"pieri forms differ at lam={lam}, i={i}")
    if a.max_q() not in (None, 0, 1):
        return (1, f"pieri q-degree above 1 at lam={lam}, i={i}")
    classical_part = QKElement({(p, 0): c for p, c in a.q_slice(0).items()})
    if classical_part != classical_pieri(lam, i, ctx):
        return (1, f"q=0 part differs from classical rule at lam={lam}, i={i}")
    return (3, None)


def _check_gr3n_rule(pair, state):
    lam, mu = pair
    ctx = state["ctx"]
    parts = state["parts"]
    prod = product_basis(lam, mu, ctx)
    s = lam[2] + mu[2]
    lam2 = (lam[0] - lam[2], lam[1] - lam[2], 0)
    mu2 = (mu[0] - mu[2], mu[1] - mu[2], 0)
    shifts = state.setdefault(("shifts", s), {})
    if not shifts:
        for nu in parts:
            nu2 = seidel_down(nu, s % ctx.n, ctx)
            dd, _ = qh_seidel_power(nu2, s, ctx)
            shifts[nu] = (nu2, dd)
    count = 0
    for nu in parts:
        nu2, dshift = shifts[nu]
        for d in range(ctx.trunc + 1):
            count += 1
            want = prod.coefficient(nu, d)
            got = qlr_gr3(lam2, mu2, nu2, d - dshift, ctx.n)
            if got != want:
                return (count, f"rule {got} != oracle {want} at {lam},{mu},{nu},q^{d}")
    return (count, None)


def _check_dmin(pair, state):
    lam, mu = pair
    ctx = state["ctx"]
    d, r = d_min(lam, mu, ctx)
    prod = product_basis(lam, mu, ctx)
    if prod.min_q() != d:
        return (1, f"d_min {d} != smallest power {prod.min_q()} at {lam},{mu}")
    shifted = product_basis(
        seidel_up(lam, r, ctx), seidel_up(mu, ctx.n - r, ctx), ctx
    ).q_shift(d)
    if shifted.truncated(ctx.trunc) != prod:
        return (1, f"shift identity fails at {lam},{mu} (r={r})")
    return (2, None)


def _check_reductions(item, state):
    lam, mu, nu, d = item
    ctx = state["ctx"]
    orig = structure_constant(lam, mu, nu, d, ctx)
    count = 0

    def agree(tup, rule):
        nonlocal count
        if tup is None:
            return None
        count += 1
        got = _constant(tup, ctx)
        if got is not None and got != orig:
            return f"{rule} broke {lam},{mu},{nu},q^{d}: {orig} -> {got}"
        return None

    for variant in (1, 2, 3, 4):
        bad = agree(reduce_lemred(lam, mu, nu, d, variant, ctx, i=1), f"lemred-{variant}")
        if bad:
            return (count, bad)
    bad = agree(duality(lam, mu, nu, d, ctx), "duality")
    if bad:
        return (count, bad)
    bad = agree(reduce_deg_one(lam, mu, nu, d, ctx), "deg-one")
    if bad:
        return (count, bad)
    for s in range(2, d + 1):
        bad = agree(reduce_higher(lam, mu, nu, d, s, ctx), f"higher-{s}")
        if bad:
            return (count, bad)
    bad = agree(reduce_dual_shift(lam, mu, nu, d, ctx), "dual-shift")
    if bad:
        return (count, bad)
    if ctx.k == 3:
        bad = agree(reduce_third_row(lam, mu, nu, d, ctx), "third-row")
        if bad:
            return (count, bad)
    return (count, None)


def _check_positivity(pair, state):
    lam, mu = pair
    ctx = state["ctx"]
    count = 0
    for (nu, d), c in product_basis(lam, mu, ctx).terms.items():
        if ctx.k != 3 and d > 0:
            continue
        count += 1
        if not positivity_check(lam, mu, nu, d, c, ctx.n):
            return (count, f"sign violation at {lam},{mu},{nu},q^{d}: {c}")
    return (count, None)


def _check_duality(item, state):
    lam, mu, nu, d = item
    ctx = state["ctx"]
    orig = structure_constant(lam, mu, nu, d, ctx)
    got = structure_constant(lam, dual(nu, ctx), dual(mu, ctx), d, ctx)
    if got != orig:
        return (1, f"duality broke {lam},{mu},{nu},q^{d}: {orig} -> {got}")
    return (1, None)


def _check_curve_nbhd(lam, state):
    ctx = state["ctx"]
    count = 0
    peeled = lam
    for d in range(ctx.k + 1):
        count += 1
        if peeled != curve_neighborhood(lam, d, ctx):
            return (count, f"rim peeling differs from row/column removal at {lam}, d={d}")
        peeled = rim_peel(peeled, ctx)
    if lam[ctx.k - 1] > 0:
        mv = dual(lam, ctx)
        up = seidel_up(mv, 1, ctx)
        for d in range(1, min(ctx.k + 1, ctx.width)):
            count += 1
            lhs = gamma_special(mv, d, ctx)
            rhs = dual(curve_neighborhood(dual(up, ctx), d - 1, ctx), ctx)
            if lhs != rhs:
                return (count, f"two-pointed neighborhood mismatch at mu={lam}, d={d}")
    return (count, None)


def _check_associativity(triple, state):
    lam, mu, nu = triple
    ctx = state["ctx"]
    if not verify_recursion(lam, mu, nu, ctx.trunc, ctx):
        return (1, f"associativity fails at {lam},{mu},{nu}")
    return (1, None)


def _prepare(name, k, n, trunc, sample, seed):
    if name == "seidel":
        ctx = context(k, n, trunc if trunc else max(k, n - k) + 1)
        return list(all_partitions(ctx)), _check_seidel, {"ctx": ctx}
    if name == "pieri-equiv":
        ctx = context(k, n, trunc)
        items = [(lam, i) for lam in all_partitions(ctx) for i in range(1, ctx.width + 1)]
        return items, _check_pieri_equiv, {"ctx": ctx}
    if name == "gr3n-rule":
        if k != 3:
            raise ValueError("the gr3n-rule suite needs k = 3")
        ctx = context(3, n, trunc)
        parts = all_partitions(ctx)
        items = list(combinations_with_replacement(parts, 2))
        return items, _check_gr3n_rule, {"ctx": ctx, "parts": parts}
    if name == "dmin":
        ctx = context(k, n, trunc)
        parts = all_partitions(ctx)
        return list(combinations_with_replacement(parts, 2)), _check_dmin, {"ctx": ctx}
    if name == "reductions":
        ctx = context(k, n, trunc)
        parts = all_partitions(ctx)
        items = [
            (lam, mu, nu, d)
            for lam in parts
            for mu in parts
            for nu in parts
            for d in range(ctx.trunc + 1)
        ]
        items = _sampled(items, sample, seed)
        return items, _check_reductions, {"ctx": ctx}
    if name == "positivity":
        ctx = context(k, n, trunc)
        parts = all_partitions(ctx)
        return list(combinations_with_replacement(parts, 2)), _check_positivity, {"ctx": ctx}
    if name == "duality":
        ctx = context(k, n, trunc)
        parts = all_partitions(ctx)
        items = [
            (lam, mu, nu, d)
            for lam in parts
            for mu in parts
            for nu in parts
            for d in range(ctx.trunc + 1)
        ]
        items = _sampled(items, sample, seed)
        return items, _check_duality, {"ctx": ctx}
    if name == "curve-nbhd":
        ctx = context(k, n, trunc)
        return list(all_partitions(ctx)), _check_curve_nbhd, {"ctx": ctx}
    if name == "associativity":
        ctx = context(k, n, trunc)
        parts = all_partitions(ctx)
        items = [(a, b, c) for a in parts for b in parts for c in parts]
        items = _sampled(items, sample, seed)
        return items, _check_associativity, {"ctx": ctx}
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")


def _sampled(items, sample, seed):
    if sample is None or sample >= len(items):
        return items
    rng = random.Random(seed)
    return rng.sample(items, sample)


def _run_chunk(bounds):
    lo, hi = bounds
    items = _WORKER["items"]
    check = _WORKER["check"]
    state = _WORKER["state"]
    count = failures = 0
    first = None
    for item in items[lo:hi]:
        c, fail = check(item, state)
        count += c
        if fail is not None:
            failures += 1
            if first is None:
                first = fail
    return (count, failures, first)


def _warm_caches(items, check, state):
    # touch one item so engine tables are built before forking
    if items:
        check(items[0], state)


def run_suite(
    name: str,
    k: int,
    n: int,
    trunc: int | None = None,
    jobs: int = 1,
    sample: int | None = None,
    seed: int = 0,
) -> dict:
    """Run one verification sweep and report counts plus the first failure."""
    items, check, state = _prepare(name, k, n, trunc, sample, seed)
    chunks = [(0, len(items))]
    if jobs > 1 and len(items) > 1:
        step = (len(items) + jobs - 1) // jobs
        chunks = [(lo, min(lo + step, len(items))) for lo in range(0, len(items), step)]
    results = []
    _WORKER.update(items=items, check=check, state=state)
    try:
        if len(chunks) > 1:
            _warm_caches(items, check, state)
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(len(chunks)) as pool:
                results = pool.map(_run_chunk, chunks)
        else:
            results = [_run_chunk(chunks[0])]
    finally:
        _WORKER.clear()
    count = sum(r[0] for r in results)
    failures = sum(r[1] for r in results)
    first = next((r[2] for r in results if r[2] is not None), None)
    return {
        "suite": name,
        "k": k,
        "n": n,
        "items": len(items),
        "checks": count,
        "failures": failures,
        "first_failure": first,
        "ok": failures == 0,
    }
