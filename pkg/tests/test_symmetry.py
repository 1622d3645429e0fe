import itertools

import pytest

from spinlogic import gates as G
from spinlogic.errors import DimensionError, PartitionError
from spinlogic.poly import SpinPolynomial, spectrum
from spinlogic.symmetry import (E, F1, F2, F3, R12, TABLES, SymmetryOp, TruthTable,
                                all_tables, apply_to_hamiltonian, apply_to_table, closure,
                                group_elements, lookup_table, orbit_of, orbits, parse_word,
                                stabilizer, table_from_ground_bits)


def test_group_order_and_closure():
    grp = group_elements()
    assert len(grp) == 16
    s = set(grp)
    for a, b in itertools.product(grp, repeat=2):
        assert a * b in s
    for a in grp:
        assert a * a.inverse() == E
        assert a.inverse() in s


def test_associativity():
    grp = group_elements()
    for a, b, c in itertools.product(grp[::3], grp[1::3], grp[2::3]):
        assert (a * b) * c == a * (b * c)


def test_defining_relations():
    assert R12 * R12 == E
    assert F1 * F1 == E and F3 * F3 == E
    assert F1 * F3 == F3 * F1
    assert R12 * F1 * R12 == F2
    assert R12 * F3 == F3 * R12
    assert (R12 * F1).order() == 4
    # F3 is central
    for g in group_elements():
        assert g * F3 == F3 * g


def test_element_orders():
    orders = sorted(g.order() for g in group_elements())
    assert orders.count(1) == 1
    assert orders.count(4) == 4
    assert orders.count(2) == 11


def test_orbits():
    orbs = orbits()
    assert sorted(o.size for o in orbs) == [2, 2, 4, 8]
    assert sum(o.size for o in orbs) == 16
    reps = {o.representative.name: (o.size, o.stabilizer_order) for o in orbs}
    assert reps == {"ZERO": (2, 8), "AND": (8, 2), "COPY": (4, 4), "XOR": (2, 8)}
    assert {t.name for t in orbit_of(TABLES["NAND"])} == {
        "NAND", "AND", "OR", "NOR", "ANDN1", "ANDN2", "ORN1", "ORN2"}
    assert {t.name for t in orbit_of(TABLES["XOR"])} == {"XOR", "EQUIV"}


def test_orbit_stabilizer_identity():
    for t in all_tables(2):
        assert len(orbit_of(t)) * len(stabilizer(t)) == 16


def test_stabilizer_orders():
    assert len(stabilizer(TABLES["NAND"])) == 2
    assert len(stabilizer(TABLES["XOR"])) == 8
    assert set(stabilizer(TABLES["NAND"])) == {E, R12}


def test_apply_to_table_examples():
    nand = TABLES["NAND"]
    assert apply_to_table(F3, nand) == TABLES["AND"]
    assert apply_to_table(F1 * F2, nand) == TABLES["OR"]
    assert apply_to_table(F1 * F2 * F3, nand) == TABLES["NOR"]
    assert apply_to_table(R12, TABLES["ANDN1"]) == TABLES["ANDN2"]
    assert apply_to_table(F1, TABLES["XOR"]) == TABLES["EQUIV"]


def test_partition_error():
    swap13 = SymmetryOp.swap(0, 2, 3)
    with pytest.raises(PartitionError):
        apply_to_table(swap13, TABLES["NAND"])
    with pytest.raises(DimensionError):
        apply_to_table(SymmetryOp.identity(4), TABLES["NAND"])


def test_parse_word():
    assert parse_word("F1.F2.R12") == F1 * F2 * R12
    assert parse_word("e") == E
    assert parse_word("R12.R12") == E
    for g in group_elements():
        assert parse_word(g.label()) == g
    with pytest.raises(ValueError):
        parse_word("G7")


def test_lookup_table():
    assert lookup_table("nand") == TABLES["NAND"]
    assert lookup_table("1110") == TABLES["NAND"]
    assert TruthTable.from_function(lambda x, y: x ^ y, 2) == TABLES["XOR"]
    with pytest.raises(ValueError):
        lookup_table("maybe")


def test_hamiltonian_action_matches_table_action():
    h = G.nand_family(G.NandParams(1.0, 2.0, 0.5))
    for g in group_elements():
        gh = apply_to_hamiltonian(g, h)
        t = table_from_ground_bits(spectrum(gh).ground_bits(), 2)
        assert t == apply_to_table(g, TABLES["NAND"])


def test_closure_of_flips():
    flips = [SymmetryOp.flip(i, n=4) for i in range(4)]
    assert len(closure(flips)) == 16


def random_op(rng, n):
    perm = tuple(int(v) for v in rng.permutation(n))
    mask = tuple(int(v) for v in rng.integers(0, 2, size=n))
    return SymmetryOp(perm, mask)


def random_poly(rng, n):
    terms = {}
    for _ in range(8):
        k = tuple(sorted(set(rng.integers(0, n, size=rng.integers(1, 4)).tolist())))
        terms[k] = float(rng.integers(-4, 5))
    return SpinPolynomial(n, terms)


def test_spectrum_invariance_random(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        g, h = random_op(rng, n), random_poly(rng, n)
        a, b = spectrum(h), spectrum(apply_to_hamiltonian(g, h))
        assert a.levels == b.levels
        mapped = {"".join(map(str, g.apply_bits([int(c) for c in s]))) for s in a.ground_bits()}
        assert mapped == b.ground_bits()
