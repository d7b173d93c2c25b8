import itertools

import pytest

from sympacket.characters import (
    PacketCharacter,
    VANISHING,
    char_equivalent,
    component_group,
    rho_pi_general,
    rho_sigma_general,
    rho_theta,
    rho_theta_parameter,
    rho_unipotent_table,
)
from sympacket.membership import enumerate_packets_pi, distinguished_parameter_sigma
from sympacket.params import (
    CHAR_SGN,
    CHAR_TRIV,
    ArthurParameter,
    DiscreteBlock,
    UnipotentBlock,
)


def P(n, unip, disc=()):
    return ArthurParameter(
        n,
        tuple(UnipotentBlock(c, d) for c, d in unip),
        tuple(DiscreteBlock(t, a) for t, a in disc),
    ).canonical()


WORKED = P(2, [(CHAR_SGN, 3), (CHAR_TRIV, 1), (CHAR_SGN, 1)])


def test_component_group_orders():
    assert component_group(WORKED).order == 4
    repeated = P(3, [(CHAR_TRIV, 3), (CHAR_TRIV, 3), (CHAR_TRIV, 1)])
    assert component_group(repeated).order == 2
    triple = P(1, [(CHAR_TRIV, 1), (CHAR_TRIV, 1), (CHAR_TRIV, 1)])
    assert component_group(triple).order == 1
    assert component_group(triple).relation == (1,)


def test_char_equivalent_global_flip():
    blocks = WORKED.unipotent
    c1 = PacketCharacter(1, blocks, (1, -1, -1))
    c2 = PacketCharacter(1, blocks, (-1, 1, 1))
    c3 = PacketCharacter(1, blocks, (1, 1, 1))
    assert char_equivalent(c1, c2)
    assert not char_equivalent(c3, c1)
    assert char_equivalent(c1, c1)


def test_char_equivalent_repeated_blocks():
    b = UnipotentBlock(CHAR_TRIV, 3)
    c = UnipotentBlock(CHAR_TRIV, 1)
    blocks = (b, b, c)
    x = PacketCharacter(1, blocks, (1, 1, 1))
    y = PacketCharacter(1, blocks, (-1, -1, 1))
    z = PacketCharacter(1, blocks, (1, 1, -1))
    # only the odd-multiplicity block (c) flips under the duality relation
    assert not char_equivalent(x, y)
    assert char_equivalent(x, z)


def test_char_equivalent_wrong_support():
    c1 = PacketCharacter(1, WORKED.unipotent, (1, 1, 1))
    c2 = PacketCharacter(1, WORKED.unipotent[:1], (1,))
    with pytest.raises(ValueError):
        char_equivalent(c1, c2)


def test_rho_theta_examples():
    assert rho_theta(4, 2, 0, 0, 1, "O(0,2m)") == (1, -1, -1)
    for delta in (1, -1):
        for side in ("O(0,2m)", "O(2m,0)"):
            assert rho_theta(8, 4, 0, 0, delta, side) == (1, 1, 1)
    assert rho_theta(2, 1, 1, 1, 1, "O(2m,0)") == (-1, -1, 1)


def test_rho_theta_product_and_preconditions():
    for n, m, tp, tau, delta, side in itertools.product(
        range(1, 8), range(1, 4), (0, 1), (0, 1), (1, -1), ("O(0,2m)", "O(2m,0)")
    ):
        if n < 2 * m - 1 + tau:
            with pytest.raises(ValueError):
                rho_theta(n, m, tp, tau, delta, side)
            continue
        e1, e2, e3 = rho_theta(n, m, tp, tau, delta, side)
        assert e1 * e2 * e3 == 1


def test_rho_unipotent_table_examples():
    assert rho_unipotent_table("first", 4, 2, "pi", 1).signs == (1, -1, -1)
    assert rho_unipotent_table("first", 4, 2, "pi_star", 1).signs == (1, -1, -1)
    assert rho_unipotent_table("second", 3, 1, "pi", 1).signs == (1, -1, -1)


def test_rho_unipotent_table_blocks_and_sigma_product():
    row = rho_unipotent_table("first", 4, 2, "sigma", 1)
    assert row.blocks == rho_theta_parameter(4, 2, 0)
    assert [b.dim for b in row.blocks] == [1, 3, 5]
    # the printed sigma rows carry listed product -1: stored verbatim
    assert row.product() == -1


def test_rho_unipotent_table_vanishing_flag():
    # equal second and third blocks with the determinant lift: flagged
    row = rho_unipotent_table("first", 3, 2, "sigma", 1)
    assert row.blocks[1] == row.blocks[2]
    assert VANISHING in row.flags
    ok = rho_unipotent_table("first", 3, 2, "pi", 1)
    assert not ok.flags


def test_rho_pi_general_single_unipotent_block():
    psi = P(3, [(CHAR_TRIV, 3)], [(1, 2)])
    for delta in (1, -1):
        char = rho_pi_general(psi, 3, 2, delta)
        signs = dict(zip(char.blocks, char.signs))
        assert signs[DiscreteBlock(1, 2)] == -1
        assert signs[UnipotentBlock(CHAR_TRIV, 3)] == -1  # product normalization
        assert char.product() == 1
        assert not char.flags


def test_rho_pi_general_matches_table_on_unipotent_members():
    psi = WORKED
    for delta in (1, -1):
        char = rho_pi_general(psi, 2, 1, delta)
        row = rho_unipotent_table("second", 2, 1, "pi_star", delta)
        assert char_equivalent(char, row)


def test_rho_pi_general_requires_membership():
    psi = P(2, [(CHAR_TRIV, 3), (CHAR_TRIV, 1), (CHAR_TRIV, 1)])
    with pytest.raises(ValueError):
        rho_pi_general(psi, 2, 1, 1)


def test_rho_pi_general_even_blocks_delta_independent():
    psi = P(3, [(CHAR_TRIV, 3)], [(1, 2)])
    c1 = rho_pi_general(psi, 3, 2, 1)
    c2 = rho_pi_general(psi, 3, 2, -1)
    assert c1.signs == c2.signs  # the only discrete block has even a


def test_rho_pi_general_odd_block_depends_on_delta():
    psi = P(2, [(CHAR_TRIV, 1), (CHAR_TRIV, 1), (CHAR_SGN, 1)], [(2, 1)])
    c1 = dict(zip(*[rho_pi_general(psi, 2, 2, 1).blocks, rho_pi_general(psi, 2, 2, 1).signs]))
    c2 = dict(zip(*[rho_pi_general(psi, 2, 2, -1).blocks, rho_pi_general(psi, 2, 2, -1).signs]))
    blk = DiscreteBlock(2, 1)
    assert c1[blk] != c2[blk]


def test_rho_sigma_general_distinguished_parameter():
    psi = distinguished_parameter_sigma(5, 2)
    char = rho_sigma_general(psi, 5, 2, 1)
    signs = dict(zip(char.blocks, char.signs))
    assert signs[DiscreteBlock(1, 2)] == -1
    assert char.product() == 1


def test_rho_sigma_general_boundary_delegates():
    psi = P(4, [(CHAR_TRIV, 5)], [(1, 2)])
    assert rho_sigma_general(psi, 4, 2, 1) == rho_pi_general(psi, 4, 3, 1)


def test_members_get_consistent_characters():
    # every member's character is constant on equal blocks (no VANISHING)
    for n in range(1, 7):
        for m in range(1, n + 1):
            for psi, _ in enumerate_packets_pi(n, m):
                for delta in (1, -1):
                    char = rho_pi_general(psi, n, m, delta)
                    assert not char.flags
                    assert char.sign_map() is not None
