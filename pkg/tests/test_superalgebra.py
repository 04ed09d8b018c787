from fractions import Fraction

import pytest

from superbraid.linalg import LinearOp
from superbraid.partitions import HookProfile
from superbraid.superalgebra import (
    TensorConfig,
    bilinear_form,
    casimir_pairing,
    index_parity,
    natural_casimir_scalar,
    natural_factor,
    pairing_eps,
    positive_roots,
    psi_pairing_report,
    rectangle_pairing,
    rectangle_weight,
    root_parity,
    tensor_power_config,
    two_rho,
    unit_parity,
)

HPS = [HookProfile(n, m) for n in (1, 2, 3, 4) for m in (1, 2, 3, 4)]


def eps(i, hp):
    return tuple(1 if k == i - 1 else 0 for k in range(hp.rank))


def naive_action(hp, i, j, tensor):
    """Literal sign-rule expansion of a unit on a pure tensor of V factors.

    Independent oracle for the coproduct action: the k-th term acts on the
    k-th factor and carries (-1)^(parity of unit * parities before it).
    """
    pu = unit_parity(i, j, hp)
    out = {}
    for k, letter in enumerate(tensor):
        if letter != j:
            continue
        sign = 1
        for s in range(k):
            if index_parity(tensor[s], hp) and pu:
                sign = -sign
        image = tensor[:k] + (i,) + tensor[k + 1 :]
        out[image] = out.get(image, 0) + sign
    return {k: v for k, v in out.items() if v}


def config_vector_to_tensors(config, vec):
    out = {}
    for idx, c in vec.items():
        comps = config.decode(idx)
        out[tuple(x + 1 for x in comps)] = c
    return out


def test_parities():
    hp = HookProfile(2, 1)
    assert [index_parity(i, hp) for i in (1, 2, 3)] == [0, 0, 1]
    assert unit_parity(1, 3, hp) == 1
    assert unit_parity(3, 3, hp) == 0


def test_bilinear_form_on_basis():
    for hp in HPS[:4]:
        assert bilinear_form(eps(1, hp), eps(1, hp), hp) == 1
        assert bilinear_form(eps(hp.n + 1, hp), eps(hp.n + 1, hp), hp) == -1
        assert bilinear_form(eps(1, hp), eps(hp.n + 1, hp), hp) == 0


def test_two_rho_closed_form():
    for hp in HPS:
        rho2 = two_rho(hp)
        n, m = hp.n, hp.m
        for k in range(1, n + 1):
            assert rho2[k - 1] == n - m - 2 * k + 1
        for s in range(1, m + 1):
            assert rho2[n + s - 1] == n + m - 2 * s + 1


@pytest.mark.parametrize("hp", HPS)
def test_pairing_eps_matches_brute_force(hp):
    rho2 = two_rho(hp)
    for i in range(1, hp.rank + 1):
        e = eps(i, hp)
        direct = bilinear_form(e, tuple(x + r for x, r in zip(e, rho2)), hp)
        assert pairing_eps(i, hp) == direct


def test_pairing_eps_examples():
    hp = HookProfile(2, 1)
    assert pairing_eps(1, hp) == hp.n - hp.m
    assert pairing_eps(3, hp) == 2 * 3 - 2 - 3 * 2 - 1  # -3


def test_rectangle_pairing_against_direct():
    for hp in HPS:
        for u in range(0, 4):
            for t in range(0, hp.n + 1):
                w = rectangle_weight(u, t, "phi", hp)
                assert rectangle_pairing(u, t, "phi", hp) == casimir_pairing(w, hp)
            for s in range(0, hp.m + 1):
                w = rectangle_weight(u, s, "psi", hp)
                assert rectangle_pairing(u, s, "psi", hp) == casimir_pairing(w, hp)


def test_rectangle_pairing_phi_special_case():
    for hp in HPS:
        for t in range(0, hp.n + 1):
            assert rectangle_pairing(1, t, "phi", hp) == (-t + 1 + hp.n - hp.m) * t


def test_psi_special_case_disagrees_and_general_wins():
    # the (n+m-2)s form does not match direct evaluation in general; the
    # u = 1 instance of the general formula always does
    hp = HookProfile(2, 2)
    rep = psi_pairing_report(2, hp)
    assert rep["matching"] == "general"
    assert rep["general_form_at_u1"] != rep["special_case_form"]
    for hp in HPS:
        for s in range(0, hp.m + 1):
            assert psi_pairing_report(s, hp)["matching"] in ("general", "neither") or s == 0
            assert psi_pairing_report(s, hp)["direct"] == s * (s - hp.n - hp.m - 1)


def test_casimir_pairing_examples():
    for hp in HPS[:6]:
        assert casimir_pairing((0,) * hp.rank, hp) == 0
        assert casimir_pairing(eps(1, hp), hp) == hp.n - hp.m
        assert natural_casimir_scalar(hp) == hp.n - hp.m


def test_act_unit_matches_naive_expansion():
    for hp in (HookProfile(1, 1), HookProfile(2, 1)):
        config = tensor_power_config(hp, 3)
        for i in range(1, hp.rank + 1):
            for j in range(1, hp.rank + 1):
                full = config.act_unit(i, j)
                for idx in range(config.dim):
                    tensor = tuple(x + 1 for x in config.decode(idx))
                    got = config_vector_to_tensors(config, full.apply({idx: Fraction(1)}))
                    want = {k: Fraction(v) for k, v in naive_action(hp, i, j, tensor).items()}
                    assert got == want, (i, j, tensor)


def test_act_examples_gl11():
    hp = HookProfile(1, 1)
    config = tensor_power_config(hp, 2)
    act21 = config.act_unit(2, 1)
    # e1 (x) e1 -> e2 (x) e1 + e1 (x) e2
    out = config_vector_to_tensors(config, act21.apply({0: Fraction(1)}))
    assert out == {(2, 1): Fraction(1), (1, 2): Fraction(1)}
    # e2 (x) e1: first term dies, Koszul sign flips the second
    idx_21 = 2  # components (1, 0) row-major
    out = config_vector_to_tensors(config, act21.apply({idx_21: Fraction(1)}))
    assert out == {(2, 2): Fraction(-1)}


def test_diagonal_unit_on_natural():
    hp = HookProfile(2, 1)
    config = tensor_power_config(hp, 1)
    e11 = config.act_unit(1, 1)
    assert e11.cols == {0: {0: Fraction(1)}}


def test_bracket_closure_on_tensor_square():
    # [E_ij, E_kl] = d_jk E_il - (-1)^(par par) d_li E_kj on V and V (x) V
    profiles = [
        (HookProfile(1, 1), (1, 2)),
        (HookProfile(2, 1), (1, 2)),
        (HookProfile(2, 2), (1, 2)),
        (HookProfile(1, 2), (1, 2)),
        (HookProfile(3, 1), (1,)),
        (HookProfile(1, 3), (1,)),
    ]
    for hp, powers in profiles:
        for power in powers:
            config = tensor_power_config(hp, power)
            r = hp.rank
            for i in range(1, r + 1):
                for j in range(1, r + 1):
                    a = config.act_unit(i, j)
                    pa = unit_parity(i, j, hp)
                    for k in range(1, r + 1):
                        for l in range(1, r + 1):
                            b = config.act_unit(k, l)
                            pb = unit_parity(k, l, hp)
                            sign = Fraction((-1) ** (pa * pb))
                            lhs = (a @ b) - (b @ a).scaled(sign)
                            rhs = LinearOp(config.space)
                            if j == k:
                                rhs = rhs + config.act_unit(i, l)
                            if l == i:
                                rhs = rhs - config.act_unit(k, j).scaled(sign)
                            assert (lhs - rhs).is_zero(), (hp, power, i, j, k, l)


def test_casimir_scalar_on_natural_module():
    for hp in HPS[:6]:
        config = tensor_power_config(hp, 1)
        kappa = config.casimir_op()
        expected = LinearOp.identity(config.space, Fraction(hp.n - hp.m))
        assert (kappa - expected).is_zero()


def test_casimir_is_central_on_tensor_square():
    for hp in (HookProfile(1, 1), HookProfile(2, 1)):
        config = tensor_power_config(hp, 2)
        kappa = config.casimir_op()
        for i in range(1, hp.rank + 1):
            for j in range(1, hp.rank + 1):
                assert kappa.commutator(config.act_unit(i, j)).is_zero()


def test_coproduct_casimir_split():
    # Casimir on both factors minus the two one-factor Casimirs = 2 gamma
    for hp in (HookProfile(1, 1), HookProfile(2, 1)):
        config = tensor_power_config(hp, 2)
        delta = config.casimir_op((0, 1)) - config.casimir_op((0,)) - config.casimir_op((1,))
        gamma2 = config.split_casimir_op(0, 1).scaled(Fraction(2))
        assert (delta - gamma2).is_zero()


def test_split_casimir_eigenvalues_on_square():
    # on V (x) V at (1,1) the split Casimir acts by +1 and -1
    hp = HookProfile(1, 1)
    config = tensor_power_config(hp, 2)
    gamma = config.split_casimir_op(0, 1)
    swap = config.signed_swap(0)
    assert (gamma - swap).is_zero()
    sq = gamma @ gamma
    assert (sq - LinearOp.identity(config.space)).is_zero()


def test_split_casimir_transport_by_swap():
    # conjugating by the signed swap moves the second leg one slot right
    for hp in (HookProfile(1, 1), HookProfile(2, 1)):
        config = tensor_power_config(hp, 3)
        t2 = config.signed_swap(1)
        lhs = t2 @ config.split_casimir_op(0, 1) @ t2
        rhs = config.split_casimir_op(0, 2)
        assert (lhs - rhs).is_zero()


def test_signed_swap_properties():
    hp = HookProfile(1, 1)
    config = tensor_power_config(hp, 2)
    swap = config.signed_swap(0)
    # e1 (x) e2 -> e2 (x) e1 without sign; e2 (x) e2 picks up -1
    assert config_vector_to_tensors(config, swap.apply({1: Fraction(1)})) == {(2, 1): Fraction(1)}
    assert config_vector_to_tensors(config, swap.apply({3: Fraction(1)})) == {(2, 2): Fraction(-1)}
    assert (swap @ swap - LinearOp.identity(config.space)).is_zero()
    for i in range(1, 3):
        for j in range(1, 3):
            assert swap.commutator(config.act_unit(i, j)).is_zero()


def test_unsigned_swap_breaks_centralizing():
    hp = HookProfile(1, 1)
    config = tensor_power_config(hp, 2)
    plain = config.unsigned_swap(0)
    broken = [
        (i, j)
        for i in range(1, 3)
        for j in range(1, 3)
        if not plain.commutator(config.act_unit(i, j)).is_zero()
    ]
    assert broken  # the Koszul sign is forced


def test_weight_subspace():
    hp = HookProfile(2, 1)
    config = tensor_power_config(hp, 2)
    sub = config.weight_subspace((1, 1, 0))
    assert sub.dim == 2  # e1 e2 and e2 e1
    assert config.weight_subspace((0, 0, 2)).dim == 1


def test_root_count():
    hp = HookProfile(2, 2)
    roots = positive_roots(hp)
    assert len(roots) == 6
    assert sum(root_parity(i, j, hp) for i, j in roots) == 4
