import pytest

csmkit = pytest.importorskip("csmkit")


def z6():
    return csmkit.cyclic_group(6)


def test_table_round_trip():
    s = csmkit.Semigroup([[0, 1], [1, 0]])
    assert s.order == 2
    assert s.product(1, 1) == 0
    assert csmkit.Semigroup.parse(s.format()) == s


def test_non_associative_rejected():
    with pytest.raises(csmkit.CsmError) as info:
        csmkit.Semigroup([[1, 0], [0, 0]])
    assert info.value.kind == "NotAssociative"


def test_membership():
    member, witness = csmkit.is_member(z6(), [2], 4)
    assert member
    assert csmkit.evaluate_circuit(witness["circuit"], z6(), witness["assignment"]) == 4
    assert csmkit.is_member(z6(), [2], 3) == (False, None)
    assert csmkit.closure(z6(), [2]) == [0, 2, 4]


def test_algorithms_agree():
    s = z6()
    for t in range(6):
        expected = t % 2 == 0
        assert csmkit.squaring_check(s, [2], t) == expected
        assert csmkit.exhaustive_check(s, [2], t, 4)[0] == expected
        if expected:
            c = csmkit.commutative_circuit(s, [2], t)
            assert csmkit.evaluate_circuit(c["circuit"], s, c["assignment"]) == t
            prog = csmkit.compile_slp(s, [2], t)
            circ = prog["circuit"]
            assert csmkit.evaluate_circuit(circ["circuit"], s, circ["assignment"]) == t


def test_power_circuit_and_boolean():
    text = csmkit.power_circuit(5)
    s = csmkit.cyclic_group(3)
    assert csmkit.evaluate_circuit(text, s, [1]) == 5 % 3
    net = csmkit.to_boolean(text, 3)
    assert csmkit.eval_boolean(net, s, [1]) == 2


def test_reductions_and_decompose():
    s, gens, t = csmkit.reduce_nilpotent(3, [(0, 1), (1, 2)], 0, 2)
    assert s.order == 19
    assert csmkit.is_member(s, gens, t)[0]
    assert csmkit.classify(s)["nilpotent"]
    s2, gens2, t2 = csmkit.reduce_zero_simple(3, [(0, 1), (1, 2)], 2, 0)
    assert not csmkit.is_member(s2, gens2, t2)[0]

    w = csmkit.decompose(csmkit.null_semigroup(2))
    assert (w["degree"], w["words"], w["group"], len(w["members"])) == (2, 2, 2, 3)
    assert w["verified"]
