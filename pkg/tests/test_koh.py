import pytest
from hypothesis import given, strategies as st

from gnk.errors import OutOfValidityRange, UnsupportedShape
from gnk.koh import (
    DEFAULT_CONFIG, KohConfig, Rho, characterized_contribution, classify_shape,
    contribution_breakdown, g_s, koh, koh_restricted, partition_contribution,
    random_theorem, recursive_arguments,
)
from gnk.partitions import Partition, PartitionConstraints as PC, enumerate_partitions, satisfies
from gnk.qbinom import gnk_product
from gnk.qpoly import QPoly
from gnk.shape import darga, is_sym_uni

P = QPoly
lam = Partition.from_parts


def test_koh_examples():
    assert koh(2, 2) == P([1, 1, 2, 1, 1])
    assert all(koh(n, 0) == P([1]) for n in range(8))
    assert koh(5, 5) == gnk_product(5, 5)
    assert koh(-1, 3) == QPoly.zero()


def test_koh_grid():
    for n in range(11):
        for k in range(11):
            assert koh(n, k) == gnk_product(n, k), (n, k)


def test_default_config_is_plain():
    for n in range(7):
        for k in range(7):
            assert koh_restricted(n, k, KohConfig()) == koh(n, k)


def test_gs_examples():
    for n in range(7):
        for k in range(6):
            assert g_s(n, k, k + 2) == gnk_product(n, k)
            assert g_s(n, k, 1) == QPoly.geometric(n * k + 1)
    assert g_s(2, 3, 2) == P([1, 1, 2, 2, 2, 1, 1])
    assert g_s(2, 3, 2) == koh(2, 3)
    with pytest.raises(ValueError):
        g_s(1, 1, 0)


def test_gs_is_size_restriction():
    for s in range(1, 5):
        cfg = KohConfig(constraints=PC(max_size=s))
        for n in range(8):
            for k in range(8):
                assert g_s(n, k, s) == koh_restricted(n, k, cfg)


def test_partition_contribution_examples():
    for n in range(8):
        for k in range(1, 7):
            assert partition_contribution(n, k, lam([k])) == QPoly.geometric(n * k + 1)
    assert partition_contribution(5, 5, lam([2, 1, 1, 1])) == QPoly.zero()
    assert partition_contribution(5, 5, lam([1] * 5)) == QPoly.zero()


def test_all_ones_partition():
    only_ones = KohConfig(constraints=PC(allowed_parts=frozenset({1})))
    for n in range(1, 16):
        for k in range(2, 7):
            term = partition_contribution(n, k, lam([1] * k))
            assert term == gnk_product(n - 2 * (k - 1), k).shift(k * (k - 1))
            # summing over [1^k] alone at every level leaves a single monomial
            got = koh_restricted(n, k, only_ones)
            if n % (2 * (k - 1)) == 0:
                assert got == QPoly.monomial(n * k // 2)
            else:
                assert got == QPoly.zero()


def test_breakdown_examples():
    bd = contribution_breakdown(5, 5)
    assert len(bd.entries) == 7
    zeros = {str(l) for l, p in bd.entries if not p}
    assert zeros == {"[1^5]", "[2,1^3]"}
    assert bd.total == gnk_product(5, 5)
    for l, p in bd.entries:
        assert is_sym_uni(p, 25)
    for n in range(6):
        bd = contribution_breakdown(n, 1)
        assert bd.entries == ((lam([1]), QPoly.geometric(n + 1)),)
    for n in range(9):
        for k in range(1, 9):
            assert contribution_breakdown(n, k).total == koh(n, k)


def test_characterized_shapes():
    checked = 0
    for k in range(1, 15):
        for l in enumerate_partitions(k):
            shape = classify_shape(l)
            if shape == "unsupported":
                with pytest.raises(UnsupportedShape):
                    characterized_contribution(8, k, l)
                continue
            for n in range(15):
                try:
                    got = characterized_contribution(n, k, l)
                except OutOfValidityRange:
                    continue
                assert got == partition_contribution(n, k, l), (n, k, str(l))
                checked += 1
    assert checked > 1500


def test_characterized_named_forms():
    k, n = 6, 7
    assert characterized_contribution(n, k, lam([3, 3])) == gnk_product(k * n // 2 - k, 2).shift(k)
    third = characterized_contribution(n, k, lam([2, 2, 2]))
    expected = QPoly.one()
    for j in (1, 2, 3):
        expected = expected * QPoly.one_minus_q_power((n - 4) * k // 3 + j)
    for j in (1, 2, 3):
        expected = expected.exact_div(QPoly.one_minus_q_power(j))
    assert third == expected.shift(2 * k)
    l = 2
    two = (QPoly.geometric((k - l) * n - 2 * l + 1) * QPoly.geometric(l * n - 2 * l + 1)).shift(2 * l)
    assert characterized_contribution(n, k, lam([4, 2])) == two
    with pytest.raises(OutOfValidityRange):
        characterized_contribution(1, 5, lam([3, 2]))
    with pytest.raises(OutOfValidityRange):
        characterized_contribution(3, 6, lam([3, 2, 1]))


def test_distinct_parts_terminate_in_one_step():
    for k in range(1, 13):
        for l in enumerate_partitions(k, PC(distinct=True)):
            for n in range(0, 20):
                assert all(k1 <= 1 for _, k1 in recursive_arguments(n, k, l))
    # every inner n' >= 0 once n >= 2 l - 2, l the number of parts
    for k in range(1, 13):
        for l in enumerate_partitions(k, PC(distinct=True)):
            for n in range(2 * l.size - 2, 20):
                assert all(n1 >= 0 for n1, _ in recursive_arguments(n, k, l)), (n, str(l))


def test_nu_rho_normalization():
    # nu = rho = 1 with normalize is the plain recurrence
    cfg = KohConfig(nu=1, rho=Rho.constant(1), normalize=True)
    for n in range(7):
        for k in range(7):
            assert koh_restricted(n, k, cfg) == koh(n, k)
    # normalization divides exactly and keeps the shape
    for nu in (2, 3):
        for w in (1, 2, 5):
            cfg = KohConfig(nu=nu, rho=Rho.constant(w), normalize=True)
            for n in range(7):
                for k in range(1, 7):
                    p = koh_restricted(n, k, cfg)
                    assert p and is_sym_uni(p, n * k)
                    assert p.coeffs[0] == 1


def test_constant_scaling_does_not_always_cancel():
    # constant nu and rho still change the polynomial after normalizing
    cfg = KohConfig(nu=2, rho=Rho.constant(3), normalize=True)
    assert koh_restricted(3, 2, cfg) != koh(3, 2)


def test_prop_vanishing_and_degenerate():
    for n in range(9):
        for k in range(1, 7):
            for a in range(0, 4):
                for b in range(0, 4):
                    p = koh_restricted(n, k, KohConfig(a=a, b=b))
                    if 2 * (a + b) > n:
                        assert p == QPoly.zero()
                    elif 2 * (a + b) == n:
                        sh = k * a + b
                        assert p == QPoly.geometric(n * k + 1 - 2 * sh).shift(sh)


def test_bounded_partitions_vanish():
    for n in range(12):
        for k in range(1, 10):
            for p in range(1, k + 1):
                if p * (n + 2) < 2 * k:
                    assert koh_restricted(n, k, KohConfig(constraints=PC(max_part=p))) == QPoly.zero()


def test_laurent_rejected():
    with pytest.raises(ValueError, match="Laurent"):
        koh_restricted(6, 3, KohConfig(a=-2, b=0))


def test_rho_schemes():
    l31 = lam([3, 1])
    assert Rho.constant(4).weight(l31) == 4
    assert Rho.by_size({2: 7}).weight(l31) == 7
    assert Rho.by_size({3: 7}, default=2).weight(l31) == 2
    assert Rho.by_largest({3: 5}).weight(l31) == 5
    assert Rho.per_partition({l31: 9}).weight(l31) == 9
    with pytest.raises(ValueError):
        Rho.constant(-1)
    with pytest.raises(ValueError):
        KohConfig(nu=0)


def test_random_theorem_examples():
    rt = random_theorem(3, 1, seed=1, min_weight=1)
    for n, p in rt.instances:
        assert p == koh(n, 3)
    cfg = KohConfig(rho=Rho.constant(4))
    for n in range(8):
        assert koh_restricted(n, 1, cfg) == QPoly.geometric(n + 1) * 4
    rt = random_theorem(4, 9, seed=2018)
    assert rt == random_theorem(4, 9, seed=2018)
    for (n, p), cert in zip(rt.instances, rt.certificates):
        assert cert.total == p
        assert is_sym_uni(p, 4 * n)
        for _, entry in cert.entries:
            assert is_sym_uni(entry, 4 * n)


weights = st.integers(0, 9)
constraint_st = st.builds(
    PC,
    min_part=st.none() | st.integers(1, 3),
    max_part=st.none() | st.integers(1, 8),
    min_size=st.none() | st.integers(0, 3),
    max_size=st.none() | st.integers(1, 6),
    min_gap=st.none() | st.integers(0, 3),
    congruence=st.none() | st.tuples(st.integers(1, 3), st.frozensets(st.integers(0, 2), min_size=1)),
    allowed_parts=st.none() | st.frozensets(st.integers(1, 8), min_size=1),
    distinct=st.booleans(),
)


@st.composite
def configs(draw):
    n = draw(st.integers(0, 8))
    k = draw(st.integers(1, 8))
    a = draw(st.integers(0, n // 2))
    b = draw(st.integers(0, n // 2 - a))
    kind = draw(st.sampled_from(["constant", "size", "largest"]))
    if kind == "constant":
        rho = Rho.constant(draw(weights))
    else:
        table = draw(st.dictionaries(st.integers(1, 8), weights))
        rho = Rho(kind, table=table, default=draw(weights))
    cfg = KohConfig(constraints=draw(constraint_st), a=a, b=b, nu=draw(st.integers(1, 3)), rho=rho)
    return n, k, cfg


@given(configs())
def test_perturbation_closure(case):
    n, k, cfg = case
    p = koh_restricted(n, k, cfg)
    bd = contribution_breakdown(n, k, cfg)
    assert bd.total == p
    if p:
        sh = k * cfg.a + cfg.b
        assert p.low_degree >= sh
        assert is_sym_uni(p.unshift(sh), n * k - 2 * sh)
