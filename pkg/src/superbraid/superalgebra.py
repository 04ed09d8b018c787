"""The Lie superalgebra gl(n|m) and its signed action on tensor factors.

Basis indices 1..n are even, n+1..n+m odd.  Operators on a product of
module factors are assembled factor by factor with explicit Koszul sign
bookkeeping: an element acting on factor t picks up the sign
(-1)^(parity of element * parity of everything left of t).  This makes the
sign conventions locally testable instead of hiding them in Hopf-algebra
plumbing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import GradedSpace, LinearOp, Subspace
from .partitions import HookProfile


def index_parity(i: int, hp: HookProfile) -> int:
    """Parity of basis direction i (1-based): 0 for i <= n, 1 beyond."""
    if not 1 <= i <= hp.rank:
        raise ValueError(f"index {i} out of range 1..{hp.rank}")
    return 0 if i <= hp.n else 1


def unit_parity(i: int, j: int, hp: HookProfile) -> int:
    """Parity of the matrix unit E_ij."""
    return (index_parity(i, hp) + index_parity(j, hp)) % 2


def positive_roots(hp: HookProfile) -> list:
    """Pairs (i, j), i < j, for the roots eps_i - eps_j."""
    r = hp.rank
    return [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]


def root_parity(i: int, j: int, hp: HookProfile) -> int:
    return unit_parity(i, j, hp)


def two_rho(hp: HookProfile) -> tuple:
    """Even positive roots minus odd positive roots, summed.

    Closed form: coordinate k is n - m - 2k + 1 for k <= n and
    n + m - 2s + 1 for k = n + s.
    """
    coords = [0] * hp.rank
    for (i, j) in positive_roots(hp):
        sign = -1 if root_parity(i, j, hp) else 1
        coords[i - 1] += sign
        coords[j - 1] -= sign
    return tuple(coords)


def bilinear_form(w1: Sequence, w2: Sequence, hp: HookProfile):
    """Super trace form on weights: sum (-1)^parity(k) w1_k w2_k."""
    if len(w1) != hp.rank or len(w2) != hp.rank:
        raise ValueError("weight length mismatch")
    total = 0
    for k in range(hp.rank):
        sign = -1 if index_parity(k + 1, hp) else 1
        total += sign * w1[k] * w2[k]
    return total


def pairing_eps(i: int, hp: HookProfile) -> int:
    """<eps_i, eps_i + 2rho> in closed form, by the even/odd case."""
    n, m = hp.n, hp.m
    if not 1 <= i <= hp.rank:
        raise ValueError(f"index {i} out of range 1..{hp.rank}")
    if i <= n:
        return -2 * i + 2 + n - m
    return 2 * i - 2 - 3 * n - m


def casimir_pairing(w: Sequence, hp: HookProfile):
    """<w, w + 2rho>: the scalar by which the quadratic Casimir acts on L(w)."""
    rho2 = two_rho(hp)
    shifted = tuple(w[k] + rho2[k] for k in range(hp.rank))
    return bilinear_form(w, shifted, hp)


def natural_casimir_scalar(hp: HookProfile) -> int:
    """Casimir scalar on the natural module: <eps_1, eps_1 + 2rho> = n - m."""
    return hp.n - hp.m


def rectangle_pairing(u: int, size: int, kind: str, hp: HookProfile) -> int:
    """<u w, u w + 2rho> for w a fundamental-type weight.

    kind 'phi': w = eps_1 + ... + eps_t (t <= n), value u t (-t + n - m + u).
    kind 'psi': w = eps_{n+1} + ... + eps_{n+s} (s <= m), value u s (s - n - m - u).
    """
    n, m = hp.n, hp.m
    if kind == "phi":
        if not 0 <= size <= n:
            raise ValueError(f"phi weight needs t <= n, got t = {size}")
        return u * size * (-size + n - m + u)
    if kind == "psi":
        if not 0 <= size <= m:
            raise ValueError(f"psi weight needs s <= m, got s = {size}")
        return u * size * (size - n - m - u)
    raise ValueError(f"kind must be 'phi' or 'psi', got {kind!r}")


def rectangle_weight(u: int, size: int, kind: str, hp: HookProfile) -> tuple:
    """The weight u * (eps_1 + .. + eps_t) or u * (eps_{n+1} + .. + eps_{n+s})."""
    coords = [0] * hp.rank
    offset = 0 if kind == "phi" else hp.n
    for k in range(size):
        coords[offset + k] = u
    return tuple(coords)


def psi_pairing_report(s: int, hp: HookProfile) -> dict:
    """Compare the two published forms of <psi_s, psi_s + 2rho> with direct evaluation.

    The special-case value (n + m - 2) s and the u = 1 instance of the
    general formula s (s - n - m - 1) disagree in general; the direct
    bilinear-form evaluation decides.
    """
    n, m = hp.n, hp.m
    direct = casimir_pairing(rectangle_weight(1, s, "psi", hp), hp)
    special = (n + m - 2) * s
    general = s * (s - n - m - 1)
    return {
        "s": s,
        "direct": direct,
        "special_case_form": special,
        "general_form_at_u1": general,
        "matching": "general" if direct == general else ("special" if direct == special else "neither"),
    }


@dataclass
class Factor:
    """One tensor factor: its graded basis, unit actions and basis weights."""

    space: GradedSpace
    units: dict  # (i, j) -> LinearOp on space
    weights: tuple  # weight tuple per basis vector
    name: str = "V"

    @property
    def dim(self) -> int:
        return self.space.dim


def natural_factor(hp: HookProfile) -> Factor:
    """The natural module V with E_ij e_j = e_i."""
    r = hp.rank
    parities = tuple(index_parity(k + 1, hp) for k in range(r))
    labels = tuple(f"e{k + 1}" for k in range(r))
    space = GradedSpace(parities, labels)
    units = {}
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            units[(i, j)] = LinearOp.from_entries(space, [(i - 1, j - 1, 1)])
    weights = tuple(
        tuple(1 if k == t else 0 for k in range(r)) for t in range(r)
    )
    return Factor(space, units, weights, name="V")


class TensorConfig:
    """A product of module factors carrying the diagonal gl(n|m) action.

    Factor positions are 0-based indices into ``factors``.  Basis indices of
    the product are mixed-radix with the first factor slowest, matching the
    row-major convention of :func:`superbraid.linalg.tensor_space`.
    """

    def __init__(self, factors: Sequence, hp: HookProfile):
        self.factors = list(factors)
        self.hp = hp
        dims = [f.dim for f in self.factors]
        self.dim = 1
        for d in dims:
            self.dim *= d
        strides = [1] * len(dims)
        for t in range(len(dims) - 2, -1, -1):
            strides[t] = strides[t + 1] * dims[t + 1]
        self.strides = strides
        decoded = []
        for idx in range(self.dim):
            comps = []
            rem = idx
            for t, d in enumerate(dims):
                comps.append(rem // strides[t] % d if d else 0)
            decoded.append(tuple(comps))
        self._decoded = decoded
        parities = []
        labels = []
        for comps in decoded:
            par = 0
            lbl = []
            for t, f in enumerate(self.factors):
                par += f.space.parities[comps[t]]
                lbl.append(f.space.label(comps[t]))
            parities.append(par % 2)
            labels.append("*".join(lbl) if lbl else "1")
        self.space = GradedSpace(tuple(parities), tuple(labels))
        self._unit_cache: dict = {}
        self._embed_cache: dict = {}
        self._casimir_cache: dict = {}

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    def decode(self, idx: int) -> tuple:
        return self._decoded[idx]

    def weight_of(self, idx: int) -> tuple:
        comps = self._decoded[idx]
        total = [0] * self.hp.rank
        for t, f in enumerate(self.factors):
            w = f.weights[comps[t]]
            for k in range(self.hp.rank):
                total[k] += w[k]
        return tuple(total)

    def _prefix_parity(self, comps: tuple, pos: int) -> int:
        par = 0
        for s in range(pos):
            par += self.factors[s].space.parities[comps[s]]
        return par % 2

    def embed_unit(self, pos: int, i: int, j: int, koszul: bool = True) -> LinearOp:
        """E_ij acting on factor ``pos`` alone, with the Koszul sign across
        everything to its left.  ``koszul=False`` drops that sign and exists
        only as a negative control for the relation tests."""
        key = (pos, i, j, koszul)
        cached = self._embed_cache.get(key)
        if cached is not None:
            return cached
        pu = unit_parity(i, j, self.hp) if koszul else 0
        fac = self.factors[pos]
        emat = fac.units[(i, j)]
        out = LinearOp(self.space)
        stride = self.strides[pos]
        for idx in range(self.dim):
            comps = self._decoded[idx]
            col = emat.cols.get(comps[pos])
            if not col:
                continue
            sign = -1 if (pu and self._prefix_parity(comps, pos)) else 1
            for row_c, val in col.items():
                out.add_entry(idx + (row_c - comps[pos]) * stride, idx, sign * val)
        self._embed_cache[key] = out
        return out

    def act_unit(self, i: int, j: int, positions: Optional[Sequence] = None) -> LinearOp:
        """Coproduct action of E_ij on the selected factors (default all)."""
        pos_key = tuple(range(self.n_factors)) if positions is None else tuple(positions)
        key = (i, j, pos_key)
        cached = self._unit_cache.get(key)
        if cached is not None:
            return cached
        out = LinearOp(self.space)
        for pos in pos_key:
            out = out + self.embed_unit(pos, i, j)
        self._unit_cache[key] = out
        return out

    def casimir_op(self, positions: Optional[Sequence] = None) -> LinearOp:
        """Quadratic Casimir acting through the coproduct on the selected factors.

        This is sum (-1)^parity(j) D(E_ij) D(E_ji) with D the selected-factor
        action, so it automatically contains all cross terms between the
        selected factors.
        """
        pos_key = tuple(range(self.n_factors)) if positions is None else tuple(positions)
        cached = self._casimir_cache.get(pos_key)
        if cached is not None:
            return cached
        r = self.hp.rank
        out = LinearOp(self.space)
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                term = self.act_unit(i, j, pos_key) @ self.act_unit(j, i, pos_key)
                if index_parity(j, self.hp):
                    term = term.scaled(Fraction(-1))
                out = out + term
        self._casimir_cache[pos_key] = out
        return out

    def split_casimir_op(self, pos1: int, pos2: int, corrupt: Optional[str] = None) -> LinearOp:
        """The mixed term of the coproduct Casimir on an ordered factor pair:
        sum (-1)^parity(j) E_ij at pos1 composed with E_ji at pos2.

        ``corrupt`` is a negative-control hook: 'parity' drops the
        (-1)^parity(j) prefactor, 'koszul' drops the Koszul sign on the
        second leg.  Production callers leave it None.
        """
        if pos1 >= pos2:
            raise ValueError("need pos1 < pos2 in factor order")
        if corrupt not in (None, "parity", "koszul"):
            raise ValueError(f"unknown corruption mode {corrupt!r}")
        r = self.hp.rank
        out = LinearOp(self.space)
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                second = self.embed_unit(pos2, j, i, koszul=(corrupt != "koszul"))
                term = self.embed_unit(pos1, i, j) @ second
                if index_parity(j, self.hp) and corrupt != "parity":
                    term = term.scaled(Fraction(-1))
                out = out + term
        return out

    def signed_swap(self, pos: int) -> LinearOp:
        """v (x) w -> (-1)^(|v| |w|) w (x) v on factors pos, pos + 1."""
        f1, f2 = self.factors[pos], self.factors[pos + 1]
        if f1.dim != f2.dim or f1.space.parities != f2.space.parities:
            raise ValueError("signed swap needs identical adjacent factors")
        out = LinearOp(self.space)
        s1, s2 = self.strides[pos], self.strides[pos + 1]
        for idx in range(self.dim):
            comps = self._decoded[idx]
            a, b = comps[pos], comps[pos + 1]
            sign = -1 if (f1.space.parities[a] and f2.space.parities[b]) else 1
            new_idx = idx + (b - a) * s1 + (a - b) * s2
            out.add_entry(new_idx, idx, Fraction(sign))
        return out

    def unsigned_swap(self, pos: int) -> LinearOp:
        """Plain transposition of factors pos, pos + 1; ignores parities.

        Negative control: fails to commute with the odd part of the action.
        """
        f1, f2 = self.factors[pos], self.factors[pos + 1]
        if f1.dim != f2.dim:
            raise ValueError("swap needs equal-dimension adjacent factors")
        out = LinearOp(self.space)
        s1, s2 = self.strides[pos], self.strides[pos + 1]
        for idx in range(self.dim):
            comps = self._decoded[idx]
            a, b = comps[pos], comps[pos + 1]
            new_idx = idx + (b - a) * s1 + (a - b) * s2
            out.add_entry(new_idx, idx, Fraction(1))
        return out

    def weight_subspace(self, w: Sequence) -> Subspace:
        target = tuple(w)
        vecs = [
            {idx: Fraction(1)}
            for idx in range(self.dim)
            if self.weight_of(idx) == target
        ]
        return Subspace(self.space, vecs)


def tensor_power_config(hp: HookProfile, k: int) -> TensorConfig:
    """V tensored with itself k times."""
    v = natural_factor(hp)
    return TensorConfig([v] * k, hp)
