from math import prod

from np_atlas.partitions import pad, weyl_dimension
from np_atlas.schur import (
    SchurSummand,
    character_product,
    filtration_quotients,
    lr_coefficient,
    partitions_of,
    schur_character,
    subpartitions_of,
    tensor_decompose,
)


def all_shapes(max_weight):
    shapes = [()]
    for w in range(1, max_weight + 1):
        shapes.extend(partitions_of(w))
    return shapes


def test_lr_examples():
    assert lr_coefficient((2, 1), (2,), (1,)) == 1
    assert lr_coefficient((2, 1), (1,), (1,)) == 0  # weight mismatch
    assert lr_coefficient((2, 2), (2,), (1,)) == 0


def test_lr_symmetry_small():
    shapes = all_shapes(4)
    for mu in shapes:
        for nu in shapes:
            assert tensor_decompose(mu, nu, 8) == tensor_decompose(nu, mu, 8)


def test_tensor_decompose_examples():
    assert tensor_decompose((1,), (1,), 4) == [
        SchurSummand((1, 1), 1),
        SchurSummand((2,), 1),
    ]
    for lam in [(3, 1), (2, 2, 1), ()]:
        assert tensor_decompose((), lam, 6) == [SchurSummand(lam, 1)]
    assert tensor_decompose((2, 1), (1,), 4) == [
        SchurSummand((2, 1, 1), 1),
        SchurSummand((2, 2), 1),
        SchurSummand((3, 1), 1),
    ]


def test_tensor_decompose_length_cap():
    out = tensor_decompose((1, 1), (1, 1), 2)
    assert all(len(s.shape) <= 2 for s in out)
    assert SchurSummand((2, 2), 1) in out


def test_schur_character_examples():
    assert schur_character((1,), 2) == {(1, 0): 1, (0, 1): 1}
    assert schur_character((1, 1), 2) == {(1, 1): 1}
    assert schur_character((2, 1), 2) == {(2, 1): 1, (1, 2): 1}
    assert schur_character((1, 1, 1), 2) == {}
    assert schur_character((), 3) == {(0, 0, 0): 1}


def test_character_symmetry():
    poly = schur_character((3, 1), 3)
    for expo, coeff in poly.items():
        for perm in [(1, 0, 2), (2, 1, 0), (0, 2, 1)]:
            assert poly[tuple(expo[i] for i in perm)] == coeff


def test_character_product_unit():
    one = schur_character((), 3)
    a = schur_character((2, 1), 3)
    assert character_product(one, a) == a


def test_subpartitions_of():
    assert sorted(subpartitions_of((2, 1), 2)) == [(1, 1), (2,)]
    assert list(subpartitions_of((3,), 5)) == []
    assert list(subpartitions_of((2, 2), 0)) == [()]


def test_filtration_quotients_examples():
    assert filtration_quotients((1,), (1, 1)) == [
        SchurSummand(((), (1,)), 1),
        SchurSummand(((1,), ()), 1),
    ]
    assert filtration_quotients((1, 1), (1, 1)) == [SchurSummand(((1,), (1,)), 1)]
    assert filtration_quotients((2,), (1, 1)) == [
        SchurSummand(((), (2,)), 1),
        SchurSummand(((1,), (1,)), 1),
        SchurSummand(((2,), ()), 1),
    ]


def rank_tuples(total_cap, length_cap):
    out = []

    def rec(acc, remaining):
        if acc and len(acc) >= 2:
            out.append(tuple(acc))
        if len(acc) == length_cap:
            return
        for r in range(1, remaining + 1):
            rec(acc + [r], remaining - r)

    rec([], total_cap)
    return out


def test_filtration_quotients_dimension_additivity():
    # graded pieces of a filtered bundle carry the same total dimension
    for alpha in all_shapes(5):
        for ranks in rank_tuples(5, 3):
            if len(alpha) > sum(ranks):
                continue
            total = sum(
                s.multiplicity
                * prod(weyl_dimension(pad(rho, r), r) for rho, r in zip(s.shape, ranks))
                for s in filtration_quotients(alpha, ranks)
            )
            assert total == weyl_dimension(pad(alpha, sum(ranks)), sum(ranks)), (
                alpha,
                ranks,
            )


def test_filtration_quotients_weight_six_spot_checks():
    for alpha, ranks in [((3, 2, 1), (2, 2, 2)), ((2, 2, 1, 1), (3, 3)), ((6,), (1, 5))]:
        n = sum(ranks)
        total = 0
        for s in filtration_quotients(alpha, ranks):
            prod = s.multiplicity
            for rho, r in zip(s.shape, ranks):
                prod *= weyl_dimension(pad(rho, r), r)
            total += prod
        assert total == weyl_dimension(pad(alpha, n), n)
