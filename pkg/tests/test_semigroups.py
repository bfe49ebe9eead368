import itertools
import random

import pytest

from sgfl.errors import (
    DimensionMismatchError,
    MNotInSError,
    NotMinimalError,
    NotNumericalError,
    NotPointedError,
)
from sgfl.semigroups import minimal_generating_subset, new_semigroup


@pytest.fixture(scope="module")
def chicken():
    # McNugget-flavored running example with four generators.
    return new_semigroup([10, 12, 21, 38])


@pytest.fixture(scope="module")
def plane():
    return new_semigroup([(2, 0), (3, 1), (0, 5)], dim=2)


def test_numerical_construction(chicken):
    assert chicken.atoms == (10, 12, 21, 38)
    assert chicken.grading == (1,)
    assert chicken.gcd == 1
    assert chicken.is_numerical


def test_affine_construction(plane):
    assert plane.dim == 2
    assert plane.grading == (1, 1)
    assert not plane.is_numerical


def test_generators_sorted_for_dim1():
    assert new_semigroup([21, 10, 38, 12]).atoms == (10, 12, 21, 38)


def test_affine_generators_keep_user_order():
    S = new_semigroup([(3, 1), (2, 0), (0, 5)], dim=2)
    assert S.atoms == ((3, 1), (2, 0), (0, 5))


def test_not_minimal_rejected():
    with pytest.raises(NotMinimalError) as info:
        new_semigroup([6, 9, 18])
    assert info.value.generator == 18


def test_duplicate_generator_rejected():
    with pytest.raises(NotMinimalError):
        new_semigroup([4, 4, 9])


def test_one_generates_everything():
    S = new_semigroup([1])
    assert S.frobenius() == -1
    with pytest.raises(NotMinimalError):
        new_semigroup([1, 2])


def test_nonpositive_dim1_rejected():
    with pytest.raises(NotPointedError):
        new_semigroup([-2, 3])
    with pytest.raises(NotPointedError):
        new_semigroup([(0,)], dim=1)


def test_grading_search_box():
    S = new_semigroup([(1, -1), (0, 1)], dim=2)
    assert all(sum(w * c for w, c in zip(S.grading, g)) >= 1 for g in S.generators)


def test_not_pointed_affine():
    with pytest.raises(NotPointedError):
        new_semigroup([(1, 0), (-1, 0)], dim=2)


def test_dimension_mismatch():
    S = new_semigroup([(2, 0), (3, 1)], dim=2)
    with pytest.raises(DimensionMismatchError):
        S.contains(5)
    with pytest.raises(DimensionMismatchError):
        S.contains((1, 2, 3))


def test_membership(chicken):
    assert chicken.contains(48)
    assert not chicken.contains(11)
    assert chicken.contains(0)
    assert not chicken.contains(-6)


def test_divides(chicken):
    assert chicken.divides(48, 84)
    assert not chicken.divides(48, 42)
    assert chicken.divides(48, 48)


def test_membership_closure_property(chicken, plane):
    rng = random.Random(7)
    for S in (chicken, plane):
        elements = []
        while len(elements) < 12:
            counts = [rng.randint(0, 4) for _ in S.generators]
            total = tuple(
                sum(c * g[j] for c, g in zip(counts, S.generators))
                for j in range(S.dim)
            )
            elements.append(S.element(total if S.dim > 1 else total[0]))
        for a, b in itertools.combinations(elements, 2):
            if S.dim == 1:
                assert S.contains(a + b)
            else:
                assert S.contains(tuple(x + y for x, y in zip(a, b)))


def test_divides_is_partial_order(chicken):
    rng = random.Random(11)
    elements = sorted({10 * rng.randint(0, 4) + 12 * rng.randint(0, 4)
                       + 21 * rng.randint(0, 3) for _ in range(40)})
    for a in elements:
        assert chicken.divides(a, a)
    for a, b, c in itertools.combinations(elements, 3):
        if chicken.divides(a, b) and chicken.divides(b, c):
            assert chicken.divides(a, c)
        if chicken.divides(a, b) and chicken.divides(b, a):
            assert a == b


def test_apery_set_examples():
    assert new_semigroup([5, 6, 8]).apery_set(5) == [0, 6, 12, 8, 14]
    assert new_semigroup([2, 3]).apery_set(2) == [0, 3]


def test_apery_definition_property(chicken):
    for m in chicken.atoms:
        apery = chicken.apery_set(m)
        for residue, least in enumerate(apery):
            assert least % m == residue
            assert chicken.contains(least)
            assert not chicken.contains(least - m)


def test_apery_requires_member():
    S = new_semigroup([5, 6, 8])
    with pytest.raises(MNotInSError):
        S.apery_set(7)
    with pytest.raises(MNotInSError):
        S.apery_set(0)


def test_numerical_only_operations(plane):
    with pytest.raises(NotNumericalError):
        plane.apery_set((2, 0))
    with pytest.raises(NotNumericalError):
        new_semigroup([4, 6]).frobenius()  # gcd 2


def test_frobenius_examples():
    assert new_semigroup([5, 6, 8]).frobenius() == 9
    assert new_semigroup([2, 3]).frobenius() == 1
    assert new_semigroup([6, 9, 20]).frobenius() == 43


def test_minimality_reverified_post_hoc(chicken, plane):
    # No generator is a combination of the others, by exhaustive search
    # over the box bounded by its grading value.
    for S in (chicken, plane):
        for i, g in enumerate(S.generators):
            others = [h for j, h in enumerate(S.generators) if j != i]
            wg = S.grading_value(g)
            bounds = [wg // S.grading_value(h) for h in others]
            for counts in itertools.product(*(range(b + 1) for b in bounds)):
                total = tuple(
                    sum(c * h[j] for c, h in zip(counts, others))
                    for j in range(S.dim)
                )
                assert total != g


def test_minimal_generating_subset():
    kept = minimal_generating_subset([(5,), (6, ), (12,), (8,), (14,)], 1)
    assert sorted(v[0] for v in kept) == [5, 6, 8]
    with pytest.raises(ValueError):
        minimal_generating_subset([(0, 0)], 2)


def test_gcd_recorded():
    assert new_semigroup([4, 6]).gcd == 2
    assert new_semigroup([4, 6]).contains(10)
    assert not new_semigroup([4, 6]).contains(9)


def test_combination_witness(chicken):
    counts = chicken.combination_of(48)
    assert sum(c * g for c, g in zip(counts, chicken.atoms)) == 48
    assert chicken.combination_of(11) is None
