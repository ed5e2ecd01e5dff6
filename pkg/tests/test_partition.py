import pytest

from rootloci.partition import Partition, hilbert_degree, partitions

P_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22, 9: 30, 10: 42}


def test_partition_counts():
    for d, n in P_COUNTS.items():
        assert len(list(partitions(d))) == n


def test_reverse_lex_order():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_evec_and_normalization():
    lam = Partition((1, 3, 1, 1))
    assert lam.parts == (3, 1, 1, 1)
    assert lam.evec == (3, 0, 1)
    assert lam.d == 6 and lam.n == 4 and lam.codim == 2
    assert Partition.from_evec((3, 0, 1)) == lam
    assert lam.exponent_notation() == "1^3 3"


def test_invalid_parts():
    with pytest.raises(ValueError):
        Partition((0, 2))
    with pytest.raises(ValueError):
        Partition(())


def test_hilbert_degree_examples():
    assert hilbert_degree(Partition((2,))) == 2
    assert hilbert_degree(Partition((2, 1, 1))) == 6
    assert hilbert_degree(Partition((2, 2))) == 4
    for d in range(2, 9):
        assert hilbert_degree(Partition((2,) + (1,) * (d - 2))) == 2 * (d - 1)
