import pytest

from superint.algebra import const, frac_equal, var
from superint.partitions import (Partition, contents, dominates, hooks, parse_partition, partitions_of,
                                 partitions_up_to, rows_interact, skew_boxes, subpartitions, xi, z_lambda)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])
    assert Partition([2, 1, 0, 0]) == Partition([2, 1])


def test_parse():
    assert parse_partition("4,3,2") == Partition([4, 3, 2])
    assert parse_partition("[]") == Partition()
    assert parse_partition("") == Partition()


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (4, 5), (6, 11), (8, 22)])
def test_partition_counts(n, count):
    assert len(partitions_of(n)) == count


def test_conjugate_involution():
    for R in partitions_up_to(7):
        assert R.conjugate().conjugate() == R
        assert R.conjugate().size == R.size


def test_hooks_give_dimension():
    # hook length formula: n!/prod h = number of standard tableaux
    from math import factorial, prod
    assert factorial(5) // prod(hooks(Partition([3, 2]))) == 5
    assert factorial(4) // prod(hooks(Partition([2, 2]))) == 2


def test_contents_and_xi():
    R = Partition([2, 1])
    assert sorted(contents(R).values()) == [-1, 0, 1]
    z = var("z")
    assert frac_equal(xi(R, z), z * (z + 1) * (z - 1))
    assert frac_equal(xi(Partition(), z), const(1))


def test_subpartitions_and_skew():
    R = Partition([2, 1])
    subs = subpartitions(R)
    assert set(subs) == {Partition(), Partition([1]), Partition([2]), Partition([1, 1]), R}
    assert skew_boxes(R, Partition([1])) == [(1, 2), (2, 1)]


def test_rows_interact():
    # printed condition: rows are independent when Q_i < R_{i+1} for every i
    assert not rows_interact(Partition([4, 1]), Partition())
    assert rows_interact(Partition([2, 2]), Partition([2]))
    assert rows_interact(Partition([2, 1]), Partition([1]))


def test_z_lambda():
    assert z_lambda(Partition([1, 1])) == 2
    assert z_lambda(Partition([2, 1, 1])) == 4


def test_dominance():
    assert dominates(Partition([2]), Partition([1, 1]))
    assert not dominates(Partition([1, 1]), Partition([2]))


def test_ordering():
    assert Partition([2]) < Partition([1, 1]) < Partition([3])
