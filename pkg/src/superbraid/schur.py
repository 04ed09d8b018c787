"""Schur and hook Schur polynomials, Littlewood-Richardson coefficients.

Two independent routes to the LR coefficients are kept side by side: the
lattice-word count on skew tableaux is the production path, and expanding
an actual product of Schur polynomials by leading-monomial triangularity
serves as the oracle.  Hook Schur polynomials follow the standard
row/column rule for (n, m)-semistandard tableaux: unprimed letters weakly
increase along rows and strictly down columns, primed letters strictly
increase along rows and weakly down columns.
"""

from __future__ import annotations

from typing import Iterator

from .partitions import (
    CombinatoricsError,
    HookProfile,
    Partition,
    check_rectangle_params,
    contains,
    is_hook,
    normalize_partition,
    partition_size,
    rectangle,
)

SymPoly = dict  # {exponent tuple: int coefficient}, zero coefficients absent


class MultiplicityError(RuntimeError):
    """A two-rectangle LR coefficient exceeded 1."""


def poly_mul(f: SymPoly, g: SymPoly) -> SymPoly:
    out: dict = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            nv = out.get(key, 0) + ca * cb
            if nv:
                out[key] = nv
            else:
                del out[key]
    return out


def poly_sub_scaled(f: SymPoly, g: SymPoly, c: int) -> SymPoly:
    out = dict(f)
    for e, v in g.items():
        nv = out.get(e, 0) - c * v
        if nv:
            out[e] = nv
        else:
            out.pop(e, None)
    return out


def ssyt_weights(shape: Partition, nvars: int) -> Iterator:
    """Weights of semistandard tableaux with entries 1..nvars.

    Rows weakly increase, columns strictly increase; yielded as exponent
    vectors of length nvars, one per tableau.
    """
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    filling: dict = {}
    weight = [0] * nvars

    def backtrack(k: int) -> Iterator:
        if k == len(cells):
            yield tuple(weight)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for val in range(lo, nvars + 1):
            filling[(r, c)] = val
            weight[val - 1] += 1
            yield from backtrack(k + 1)
            weight[val - 1] -= 1
            del filling[(r, c)]

    yield from backtrack(0)


def schur_poly(shape: Partition, nvars: int) -> SymPoly:
    """Schur polynomial as a sum over semistandard tableaux."""
    out: dict = {}
    for w in ssyt_weights(shape, nvars):
        out[w] = out.get(w, 0) + 1
    return out


def hook_tableau_weights(shape: Partition, hp: HookProfile) -> Iterator:
    """Weights of (n, m)-semistandard hook tableaux of the given shape.

    Letters are x_1 < .. < x_n < y_1 < .. < y_m.  The x part of a filling
    must form a sub-Young-diagram (weakly increasing rows, strictly
    increasing columns); the y letters fill the rest, strictly increasing
    along rows and weakly increasing down columns.  Empty iterator exactly
    when the shape is not a hook.
    """
    n, m = hp.n, hp.m
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    filling: dict = {}
    weight = [0] * (n + m)

    def entry_ok(r: int, c: int, val: int) -> bool:
        # letters 1..n are the x block; n+1..n+m the y block
        left = filling.get((r, c - 1))
        up = filling.get((r - 1, c))
        if left is not None:
            if val < left:
                return False
            if left > n and val == left:
                return False  # y letters strict along rows
        if up is not None:
            if val < up:
                return False
            if up <= n and val == up:
                return False  # x letters strict down columns
        return True

    def backtrack(k: int) -> Iterator:
        if k == len(cells):
            yield tuple(weight)
            return
        r, c = cells[k]
        for val in range(1, n + m + 1):
            if entry_ok(r, c, val):
                filling[(r, c)] = val
                weight[val - 1] += 1
                yield from backtrack(k + 1)
                weight[val - 1] -= 1
                del filling[(r, c)]

    yield from backtrack(0)


def hook_schur_poly(shape: Partition, hp: HookProfile) -> SymPoly:
    """Hook Schur polynomial in x_1..x_n, y_1..y_m (exponents concatenated)."""
    out: dict = {}
    for w in hook_tableau_weights(shape, hp):
        out[w] = out.get(w, 0) + 1
    return out


def hook_dimension(shape: Partition, hp: HookProfile) -> int:
    """Number of (n, m)-semistandard tableaux: the hook Schur value at all ones."""
    return sum(1 for _ in hook_tableau_weights(shape, hp))


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient by the lattice-word rule.

    Counts fillings of nu/lam with content mu, rows weakly increasing,
    columns strictly increasing, whose reverse reading word (right to left,
    top to bottom) is a lattice word.
    """
    lam, mu, nu = normalize_partition(lam), normalize_partition(mu), normalize_partition(nu)
    if partition_size(nu) != partition_size(lam) + partition_size(mu):
        return 0
    if not contains(nu, lam):
        return 0
    ell = len(mu)
    # cells in reverse reading order: rows top to bottom, right to left
    cells = []
    for r, width in enumerate(nu):
        inner = lam[r] if r < len(lam) else 0
        for c in range(width - 1, inner - 1, -1):
            cells.append((r, c))
    filling: dict = {}
    counts = [0] * (ell + 1)
    total = 0

    def backtrack(k: int):
        nonlocal total
        if k == len(cells):
            total += 1
            return
        r, c = cells[k]
        right = filling.get((r, c + 1))
        up = filling.get((r - 1, c))
        for val in range(1, ell + 1):
            if counts[val] >= mu[val - 1]:
                continue
            if val > 1 and counts[val] >= counts[val - 1]:
                continue  # lattice condition on the reading word
            if right is not None and val > right:
                continue
            if up is not None and val <= up:
                continue
            filling[(r, c)] = val
            counts[val] += 1
            backtrack(k + 1)
            counts[val] -= 1
            del filling[(r, c)]

    backtrack(0)
    return total


def partitions_of(total: int, max_part: int = None, max_len: int = None) -> Iterator:
    """All partitions of ``total`` within the given bounds, lex decreasing."""
    cap = total if max_part is None else min(max_part, total)
    rows = total if max_len is None else max_len

    def gen(rem: int, bound: int, length: int, acc: list) -> Iterator:
        if rem == 0:
            yield tuple(acc)
            return
        if length == 0:
            return
        for part in range(min(bound, rem), 0, -1):
            acc.append(part)
            yield from gen(rem - part, part, length - 1, acc)
            acc.pop()

    if total == 0:
        yield ()
        return
    yield from gen(total, cap, rows, [])


def lr_product_oracle(lam: Partition, mu: Partition, nvars: int) -> dict:
    """Expand s_lam * s_mu in the Schur basis by leading-monomial triangularity.

    Independent of :func:`lr_coeff`; requires nvars at least the number of
    parts of any partition of |lam| + |mu| that should be seen.
    """
    product = poly_mul(schur_poly(lam, nvars), schur_poly(mu, nvars))
    out: dict = {}
    guard = 0
    while product:
        guard += 1
        if guard > 100000:
            raise RuntimeError("Schur expansion failed to terminate")
        lead = max(product)
        coeff = product[lead]
        shape = normalize_partition(lead)
        if tuple(lead) != shape + (0,) * (nvars - len(shape)):
            raise CombinatoricsError(f"leading exponent {lead} is not a partition; nvars too small?")
        out[shape] = coeff
        product = poly_sub_scaled(product, schur_poly(shape, nvars), coeff)
    return out


def remmel_check(lam: Partition, mu: Partition, hp: HookProfile) -> bool:
    """Product of hook Schur polynomials expands with ordinary LR coefficients.

    Verifies s'_lam * s'_mu = sum over hook nu of c^nu_{lam,mu} s'_nu as an
    exact polynomial identity (non-hook nu contribute zero polynomials).
    """
    if not (is_hook(lam, hp) and is_hook(mu, hp)):
        raise CombinatoricsError("remmel check needs hook inputs")
    lhs = poly_mul(hook_schur_poly(lam, hp), hook_schur_poly(mu, hp))
    total = partition_size(lam) + partition_size(mu)
    rhs: dict = {}
    for nu in partitions_of(total):
        if not is_hook(nu, hp):
            continue
        c = lr_coeff(lam, mu, nu)
        if c:
            for e, v in hook_schur_poly(nu, hp).items():
                nv = rhs.get(e, 0) + c * v
                if nv:
                    rhs[e] = nv
                else:
                    del rhs[e]
    return lhs == rhs


def decompose_two_rectangles(
    a: int, p: int, b: int, q: int, hp: HookProfile, strict: bool = False
) -> list:
    """All hook partitions occurring in the product of the two rectangles.

    Asserts the decomposition is multiplicity free; a coefficient above 1
    would contradict the known rectangle product structure and is raised as
    a hard failure rather than reported.  Sorted lexicographically.
    """
    check_rectangle_params(a, p, b, q, hp, strict=strict)
    ra, rb = rectangle(a, p), rectangle(b, q)
    total = partition_size(ra) + partition_size(rb)
    out = []
    for nu in partitions_of(total, max_part=a + b, max_len=p + q):
        if not is_hook(nu, hp):
            continue
        c = lr_coeff(ra, rb, nu)
        if c > 1:
            raise MultiplicityError(f"coefficient of {nu} in ({a}^{p}) * ({b}^{q}) is {c}")
        if c == 1:
            out.append(nu)
    out.sort()
    return out
