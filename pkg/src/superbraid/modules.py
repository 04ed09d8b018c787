"""Explicit polynomial irreducibles inside tensor powers of the natural module.

A module L(lambda) is realized concretely: pick a highest weight vector of
the right weight inside V^(|lambda|), then close under lowering operators
breadth-first with exact rank checks.  The closure is the whole submodule
(words in lowering operators span it once the start vector is killed by all
raising operators), and sitting inside a semisimple tensor power it is
automatically irreducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import GradedSpace, LinearOp, RowReducer, Subspace, kernel_intersection
from .partitions import (
    HookProfile,
    Partition,
    addable_hook_positions,
    content,
    format_partition,
    hook_to_weight,
    partition_size,
)
from .superalgebra import (
    Factor,
    TensorConfig,
    casimir_pairing,
    natural_factor,
    tensor_power_config,
)

DEFAULT_DIM_CAP = 20000


class CapExceededError(RuntimeError):
    """Requested ambient space is larger than the configured cap."""


class ConstructionError(RuntimeError):
    """Module realization failed an internal exactness check."""


@dataclass
class RealizedModule:
    """A concrete irreducible with generator matrices on its own basis."""

    partition: Partition
    hp: HookProfile
    highest_weight: tuple
    space: GradedSpace
    weights: tuple  # weight per basis vector
    units: dict  # (i, j) -> LinearOp on space

    @property
    def dim(self) -> int:
        return self.space.dim

    def as_factor(self, name: Optional[str] = None) -> Factor:
        return Factor(self.space, self.units, self.weights, name or format_partition(self.partition))


def raising_units(hp: HookProfile) -> list:
    """Simple raising pairs (i, i+1); they generate the whole upper part."""
    return [(i, i + 1) for i in range(1, hp.rank)]


def lowering_units(hp: HookProfile) -> list:
    return [(j, i) for i in range(1, hp.rank + 1) for j in range(i + 1, hp.rank + 1)]


def highest_weight_vectors(config: TensorConfig, w: Sequence) -> Subspace:
    """Weight-w vectors killed by every simple raising operator."""
    within = config.weight_subspace(w)
    ops = [config.act_unit(i, j) for (i, j) in raising_units(config.hp)]
    return kernel_intersection(ops, within)


def check_cap(dim: int, cap: Optional[int]) -> None:
    limit = DEFAULT_DIM_CAP if cap is None else cap
    if dim > limit:
        raise CapExceededError(f"ambient dimension {dim} exceeds cap {limit}")


def realize_module(p: Partition, hp: HookProfile, cap: Optional[int] = None) -> RealizedModule:
    """Realize L(lambda) for a hook diagram lambda inside V^(|lambda|)."""
    w = hook_to_weight(p, hp)
    k = partition_size(p)
    check_cap(hp.rank ** k, cap)
    ambient = tensor_power_config(hp, k)
    hwv = highest_weight_vectors(ambient, w)
    if hwv.dim == 0:
        raise ConstructionError(f"no highest weight vector of weight {w} in V^{k}")

    start = hwv.vectors[0]
    reducer = RowReducer()
    reducer.add(start)
    basis = [start]
    basis_weights = [tuple(w)]
    lowering = [(pair, ambient.act_unit(*pair)) for pair in lowering_units(hp)]
    frontier = [0]
    while frontier:
        next_frontier = []
        for bi in frontier:
            vec = basis[bi]
            wt = basis_weights[bi]
            for (j, i), op in lowering:
                img = op.apply(vec)
                if img and reducer.add(img):
                    basis.append(img)
                    new_wt = list(wt)
                    new_wt[i - 1] -= 1
                    new_wt[j - 1] += 1
                    basis_weights.append(tuple(new_wt))
                    next_frontier.append(len(basis) - 1)
        frontier = next_frontier

    sub = Subspace(ambient.space, basis)
    parities = tuple(
        sum(wt[hp.n :]) % 2 for wt in basis_weights
    )
    labels = tuple(f"{format_partition(p)}#{t}" for t in range(len(basis)))
    own_space = GradedSpace(parities, labels)
    units = {}
    for i in range(1, hp.rank + 1):
        for j in range(1, hp.rank + 1):
            full = ambient.act_unit(i, j)
            mat = LinearOp(own_space)
            for col, bvec in enumerate(basis):
                coords = sub.coordinates(full.apply(bvec))
                if coords is None:
                    raise ConstructionError("lowering closure is not a submodule")
                for row, val in coords.items():
                    mat.add_entry(row, col, val)
            units[(i, j)] = mat
    return RealizedModule(p, hp, tuple(w), own_space, tuple(basis_weights), units)


def module_tensor_config(
    alpha: Partition, beta: Partition, d: int, hp: HookProfile, cap: Optional[int] = None
) -> TensorConfig:
    """The space L(alpha) (x) L(beta) (x) V^d with its full diagonal action.

    Factor positions: 0 is the left boundary module, 1 the right one, and
    2..d+1 the natural-module copies.
    """
    m_mod = realize_module(alpha, hp, cap)
    n_mod = realize_module(beta, hp, cap)
    check_cap(m_mod.dim * n_mod.dim * hp.rank ** d, cap)
    v = natural_factor(hp)
    factors = [m_mod.as_factor("M"), n_mod.as_factor("N")] + [v] * d
    return TensorConfig(factors, hp)


def kappa_scalar(mod: RealizedModule) -> Fraction:
    """The (verified) scalar of the quadratic Casimir on a realized module.

    Evaluates the Casimir as an operator from the generator matrices and
    insists it is scalar; never assumes the closed pairing formula, which
    is exactly what the caller wants to cross-check.
    """
    if mod.dim == 0:
        raise ConstructionError("zero module has no Casimir scalar")
    own = TensorConfig([mod.as_factor()], mod.hp)
    op = own.casimir_op()
    scalar = None
    for j in range(mod.dim):
        col = op.cols.get(j, {})
        diag = col.get(j, Fraction(0))
        off = {i: v for i, v in col.items() if i != j}
        if off:
            raise ConstructionError(f"Casimir not diagonal on {mod.partition}: column {j} has {off}")
        if scalar is None:
            scalar = diag
        elif scalar != diag:
            raise ConstructionError(f"Casimir not scalar on {mod.partition}: {scalar} vs {diag}")
    return scalar


def kappa_matches_pairing(mod: RealizedModule) -> bool:
    return kappa_scalar(mod) == casimir_pairing(mod.highest_weight, mod.hp)


def pieri_summands(mu: Partition, hp: HookProfile, cap: Optional[int] = None) -> list:
    """Decompose L(mu) (x) V and read off the split-Casimir eigenvalues.

    Returns one record per summand: the extended partition, the added box,
    the predicted content and the observed eigenvalue on the summand's
    highest weight vector.
    """
    m_mod = realize_module(mu, hp, cap)
    config = TensorConfig([m_mod.as_factor("M"), natural_factor(hp)], hp)
    gamma = config.split_casimir_op(0, 1)
    records = []
    for lam, box in addable_hook_positions(mu, hp):
        wv = hook_to_weight(lam, hp)
        hwv = highest_weight_vectors(config, wv)
        if hwv.dim != 1:
            raise ConstructionError(
                f"summand {lam} of {mu} (x) V has multiplicity {hwv.dim}, expected 1"
            )
        vec = hwv.vectors[0]
        image = gamma.apply(vec)
        anchor = next(iter(vec))
        observed = image.get(anchor, Fraction(0)) / vec[anchor]
        if (gamma.apply(vec) != {k: observed * v for k, v in vec.items() if observed * v}):
            raise ConstructionError(f"split Casimir not scalar on summand {lam}")
        records.append(
            {
                "partition": lam,
                "box": box,
                "predicted": content(box),
                "observed": observed,
                "ok": observed == content(box),
            }
        )
    return records


def module_to_json(mod: RealizedModule) -> str:
    """Sparse JSON dump: weight, dimension, generator matrices as quadruples."""
    gens = {}
    for (i, j), op in sorted(mod.units.items()):
        entries = [
            [r, c, v.numerator, v.denominator] for r, c, v in op.entries()
        ]
        gens[f"E({i},{j})"] = entries
    payload = {
        "schema": 1,
        "partition": list(mod.partition),
        "weight": list(mod.highest_weight),
        "dimension": mod.dim,
        "generators": gens,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
