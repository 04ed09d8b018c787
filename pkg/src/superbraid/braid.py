"""Generator images of the two-boundary braid algebra and relation checks.

The polynomial generators act through differences of coproduct Casimirs on
growing factor prefixes; the symmetric-group generators act as signed
swaps of adjacent natural-module factors.  Relations are verified as exact
operator identities on the concrete space, never symbolically: each check
reports a witness entry when a residual operator fails to vanish, since
sign bugs are the dominant failure mode and a witness localizes them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .linalg import LinearOp
from .superalgebra import TensorConfig, natural_casimir_scalar

POS_M = 0
POS_N = 1


def v_position(i: int) -> int:
    """Factor index of the i-th natural-module copy (1-based)."""
    return 1 + i


@dataclass
class Check:
    id: str
    ok: bool
    witness: Optional[dict] = None

    def as_dict(self) -> dict:
        out = {"relation": self.id, "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add_zero_check(self, check_id: str, residual: LinearOp) -> None:
        wit = residual.max_entry_witness()
        if wit is None:
            self.checks.append(Check(check_id, True))
        else:
            i, j, v = wit
            self.checks.append(
                Check(
                    check_id,
                    False,
                    {
                        "row": i,
                        "col": j,
                        "value": f"{v.numerator}/{v.denominator}",
                        "row_label": residual.space.label(i),
                        "col_label": residual.space.label(j),
                    },
                )
            )

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "title": self.title,
            "ok": self.ok,
            "checks": [c.as_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


@dataclass
class GeneratorImages:
    """Operators for t_i, x_i, y_i, z_i and z_0 on a two-boundary space.

    ``shifted`` records whether the polynomial generators carry the
    constant shift (x, y by half the natural Casimir scalar, z by the full
    one) under which the boundary eigenvalues become box contents.
    """

    config: TensorConfig
    d: int
    t: dict
    x: dict
    y: dict
    z: dict
    z0: LinearOp
    shifted: bool

    def named_ops(self) -> list:
        out = [("z0", self.z0)]
        out += [(f"t{i}", self.t[i]) for i in sorted(self.t)]
        out += [(f"x{i}", self.x[i]) for i in sorted(self.x)]
        out += [(f"y{i}", self.y[i]) for i in sorted(self.y)]
        out += [(f"z{i}", self.z[i]) for i in sorted(self.z)]
        return out

    def hecke_generators(self) -> list:
        """Generators of the quotient algebra: z_0..z_d, x_1, t_1..t_{d-1}."""
        out = [("z0", self.z0)]
        out += [(f"z{i}", self.z[i]) for i in sorted(self.z)]
        if self.d >= 1:
            out.append(("x1", self.x[1]))
        out += [(f"t{i}", self.t[i]) for i in sorted(self.t)]
        return out


def _d_of(config: TensorConfig) -> int:
    return config.n_factors - 2


def rho_images(config: TensorConfig) -> GeneratorImages:
    """The unshifted action: Casimir differences over growing prefixes."""
    return _assemble(config, shifted=False)


def rho_prime_images(config: TensorConfig) -> GeneratorImages:
    """The shifted action, under which boundary eigenvalues are contents."""
    return _assemble(config, shifted=True)


def _assemble(config: TensorConfig, shifted: bool) -> GeneratorImages:
    d = _d_of(config)
    if d < 0:
        raise ValueError("config must contain the two boundary factors")
    half = Fraction(1, 2)
    kv = Fraction(natural_casimir_scalar(config.hp))

    def prefix(*heads: int, upto: int) -> tuple:
        return tuple(heads) + tuple(v_position(k) for k in range(1, upto + 1))

    k_m = {i: config.casimir_op(prefix(POS_M, upto=i)) for i in range(d + 1)}
    k_n = {i: config.casimir_op(prefix(POS_N, upto=i)) for i in range(d + 1)}
    k_mn = {i: config.casimir_op(prefix(POS_M, POS_N, upto=i)) for i in range(d + 1)}

    x = {}
    y = {}
    z = {}
    for i in range(1, d + 1):
        xi = (k_m[i] - k_m[i - 1]).scaled(half)
        yi = (k_n[i] - k_n[i - 1]).scaled(half)
        zi = (k_mn[i] - k_mn[i - 1]).scaled(half).plus_scalar(kv * half)
        if shifted:
            xi = xi.plus_scalar(-kv * half)
            yi = yi.plus_scalar(-kv * half)
            zi = zi.plus_scalar(-kv)
        x[i] = xi
        y[i] = yi
        z[i] = zi
    z0 = (k_mn[0] - k_m[0] - k_n[0]).scaled(half)
    t = {i: config.signed_swap(v_position(i)) for i in range(1, d)}
    return GeneratorImages(config, d, t, x, y, z, z0, shifted)


def images_via_split_casimir(
    config: TensorConfig, shifted: bool = True, corrupt_gamma: Optional[str] = None
) -> GeneratorImages:
    """Alternative assembly from split-Casimir terms.

    Cross-check route for the Casimir-difference assembly; with
    ``corrupt_gamma`` ('parity' or 'koszul') the split Casimir is built
    with a wrong sign, which serves as a negative control for the relation
    suite.
    """
    d = _d_of(config)
    kv = Fraction(natural_casimir_scalar(config.hp))
    half = Fraction(1, 2)

    def gamma(p1: int, p2: int) -> LinearOp:
        return config.split_casimir_op(p1, p2, corrupt=corrupt_gamma)

    x = {}
    y = {}
    z = {}
    for i in range(1, d + 1):
        pos = v_position(i)
        cross = LinearOp(config.space)
        for k in range(1, i):
            cross = cross + gamma(v_position(k), pos)
        xi = gamma(POS_M, pos) + cross
        yi = gamma(POS_N, pos) + cross
        zi = gamma(POS_M, pos) + gamma(POS_N, pos) + cross
        if not shifted:
            xi = xi.plus_scalar(kv * half)
            yi = yi.plus_scalar(kv * half)
            zi = zi.plus_scalar(kv)
        x[i] = xi
        y[i] = yi
        z[i] = zi
    z0 = gamma(POS_M, POS_N)
    t = {i: config.signed_swap(v_position(i)) for i in range(1, d)}
    return GeneratorImages(config, d, t, x, y, z, z0, shifted)


def with_unsigned_swaps(images: GeneratorImages) -> GeneratorImages:
    """Copy of the images with plain (non-Koszul) swaps; negative control."""
    t = {i: images.config.unsigned_swap(v_position(i)) for i in range(1, images.d)}
    return GeneratorImages(
        images.config, images.d, t, dict(images.x), dict(images.y), dict(images.z),
        images.z0, images.shifted,
    )


def transposition_op(images: GeneratorImages, i: int, j: int) -> LinearOp:
    """Signed permutation interchanging natural-module copies i and j."""
    if i == j:
        return LinearOp.identity(images.config.space)
    if i > j:
        i, j = j, i
    word = list(range(i, j)) + list(range(j - 2, i - 1, -1))
    op = LinearOp.identity(images.config.space)
    for k in word:
        op = op @ images.t[k]
    return op


def m_ops(images: GeneratorImages) -> dict:
    """The recursively defined elements m_{i,j} as operators.

    m_{i,i+1} = x_{i+1} - t_i x_i t_i; for j > i + 1 conjugate m_{j-1,j}
    by the transposition (i, j-1).
    """
    d = images.d
    out = {}
    for i in range(1, d):
        out[(i, i + 1)] = images.x[i + 1] - images.t[i] @ images.x[i] @ images.t[i]
    for j in range(2, d + 1):
        for i in range(j - 2, 0, -1):
            tr = transposition_op(images, i, j - 1)
            out[(i, j)] = tr @ out[(j - 1, j)] @ tr
    return out


def m_sums(images: GeneratorImages) -> dict:
    """m_j = sum of m_{i,j} over i < j (zero operator for j = 1)."""
    pair = m_ops(images)
    out = {1: LinearOp(images.config.space)}
    for j in range(2, images.d + 1):
        acc = LinearOp(images.config.space)
        for i in range(1, j):
            acc = acc + pair[(i, j)]
        out[j] = acc
    return out


def verify_braid_relations(images: GeneratorImages) -> Report:
    """Exhaustive exact check of the defining relations on the given space."""
    rep = Report("braid relations" + (" (shifted)" if images.shifted else ""))
    d = images.d
    t, x, y, z = images.t, images.x, images.y, images.z

    for i in range(1, d):
        rep.add_zero_check(
            f"sym:t{i}^2=1", t[i] @ t[i] - LinearOp.identity(images.config.space)
        )
    for i in range(1, d - 1):
        lhs = t[i] @ t[i + 1] @ t[i]
        rhs = t[i + 1] @ t[i] @ t[i + 1]
        rep.add_zero_check(f"sym:braid(t{i},t{i + 1})", lhs - rhs)
    for i in range(1, d):
        for j in range(i + 2, d):
            rep.add_zero_check(f"sym:[t{i},t{j}]", t[i].commutator(t[j]))

    fams = {"x": x, "y": y, "z": z}
    for name, fam in fams.items():
        indices = sorted(fam)
        if name == "z":
            indices = [0] + indices
        for i in indices:
            op = images.z0 if i == 0 else fam[i]
            for j in range(1, d):
                if i in (j, j + 1):
                    continue
                rep.add_zero_check(f"R1:[{name}{i},t{j}]", op.commutator(t[j]))

    for j in range(1, d + 1):
        partial = images.z0
        for i in range(1, d + 1):
            partial = partial + z[i]
            if i >= j:
                rep.add_zero_check(f"R2:[z0+..+z{i},x{j}]", partial.commutator(x[j]))
                rep.add_zero_check(f"R2:[z0+..+z{i},y{j}]", partial.commutator(y[j]))

    for i in range(1, d):
        rep.add_zero_check(f"R3:[t{i},x{i}+x{i + 1}]", t[i].commutator(x[i] + x[i + 1]))
        rep.add_zero_check(f"R3:[t{i},y{i}+y{i + 1}]", t[i].commutator(y[i] + y[i + 1]))

    for name, fam in (("x", x), ("y", y)):
        for i in range(1, d - 1):
            inner = fam[i + 1] - t[i] @ fam[i] @ t[i]
            lhs = t[i] @ t[i + 1] @ inner @ t[i + 1] @ t[i]
            rhs = fam[i + 2] - t[i + 1] @ fam[i + 1] @ t[i + 1]
            rep.add_zero_check(f"R4:{name},i={i}", lhs - rhs)

    for i in range(1, d):
        lhs = x[i + 1] - t[i] @ x[i] @ t[i]
        rhs = y[i + 1] - t[i] @ y[i] @ t[i]
        rep.add_zero_check(f"R5:i={i}", lhs - rhs)

    msum = m_sums(images)
    for j in range(1, d + 1):
        rep.add_zero_check(f"R6:z{j}=x{j}+y{j}-m{j}", z[j] - (x[j] + y[j] - msum[j]))

    pair = m_ops(images)
    for (i, j), op in sorted(pair.items()):
        gamma = images.config.split_casimir_op(v_position(i), v_position(j))
        rep.add_zero_check(f"m({i},{j})=split-casimir", op - gamma)
    return rep


def verify_hecke_relations(images: GeneratorImages, a: int, p: int, b: int, q: int) -> Report:
    """The quotient relations for boundary rectangles (a^p) and (b^q).

    Meaningful for the shifted images; the quadratic relations encode that
    the boundary eigenvalues are the two possible added-box contents.
    """
    rep = Report(f"hecke relations a={a} p={p} b={b} q={q}")
    d = images.d
    if d < 1:
        return rep
    x1, y1 = images.x[1], images.y[1]
    rep.add_zero_check(
        f"hecke:(x1-{a})(x1+{p})=0",
        (x1.plus_scalar(Fraction(-a))) @ (x1.plus_scalar(Fraction(p))),
    )
    rep.add_zero_check(
        f"hecke:(y1-{b})(y1+{q})=0",
        (y1.plus_scalar(Fraction(-b))) @ (y1.plus_scalar(Fraction(q))),
    )
    for i in range(1, d):
        rep.add_zero_check(
            f"hecke:x{i + 1}=t{i}x{i}t{i}+t{i}",
            images.x[i + 1] - (images.t[i] @ images.x[i] @ images.t[i] + images.t[i]),
        )
        rep.add_zero_check(
            f"hecke:y{i + 1}=t{i}y{i}t{i}+t{i}",
            images.y[i + 1] - (images.t[i] @ images.y[i] @ images.t[i] + images.t[i]),
        )
        gamma = images.config.split_casimir_op(v_position(i), v_position(i + 1))
        rep.add_zero_check(f"hecke:t{i}=split-casimir({i},{i + 1})", images.t[i] - gamma)
    return rep


def verify_centralizer(images: GeneratorImages) -> Report:
    """Every generator image commutes exactly with the full diagonal action."""
    rep = Report("centralizer")
    r = images.config.hp.rank
    for name, op in images.named_ops():
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                unit = images.config.act_unit(i, j)
                rep.add_zero_check(f"[{name},E({i},{j})]", op.commutator(unit))
    return rep
