import random

import pytest

from pbwcheck.freealg import Alphabet, Field, FreeAlgebra, homogenize
from pbwcheck.linalg import Subspace, WordBasis
from pbwcheck.rewrite import complete, normal_form, overlaps, reduce_with_cofactors
from pbwcheck.errors import TracesUnavailableError, TruncationError, ZeroPolynomialError


def test_overlaps():
    assert list(overlaps((2, 2, 1), (1, 1, 1))) == [1]
    assert list(overlaps((1, 1, 1), (1, 1, 1))) == [1, 2]
    assert list(overlaps((2, 1), (2, 1))) == []


def test_commutator_is_complete(ring):
    x, y = ring.gens()
    rs = complete([x * y - y * x], 6)

    assert rs.basis == [x * y - y * x]
    assert normal_form(x * y * x, rs) == y * x * x
    assert [rs.dimension(d) for d in range(5)] == [1, 2, 3, 4, 5]
    assert all(len(set(w)) == 1 or w[0] < w[-1] for w in rs.normal_words(4))


def test_monomial_ideal(ring):
    x, y = ring.gens()
    rs = complete([x * x * y, y ** 3], 6)

    assert set(rs.leads) == {(2, 2, 1), (1, 1, 1)}
    assert x * x * y ** 3 in rs
    assert rs.is_normal((1, 1, 2, 2))


def test_weyl_homogenization(ring):
    x, y = ring.gens()
    h = homogenize(x * y - y * x - 1)
    rs = complete([h], 6)

    assert rs.basis == [h]
    assert str(h) == 'x*y - y*x - z^2'


def test_new_elements_are_found(ring):
    x, y = ring.gens()
    rs = complete([x * y - y * y], 5)

    assert normal_form(x * y * y, rs) == y ** 3
    for d in range(1, 6):
        for word in rs.normal_words(d):
            assert rs.is_normal(word)


def test_truncation(ring):
    x, y = ring.gens()
    rs = complete([x * y - y * x], 3)

    with pytest.raises(TruncationError) as info:
        rs.normal_form(x ** 4)

    assert info.value.needed == 4
    assert info.value.available == 3


def test_zero_generator(ring):
    with pytest.raises(ZeroPolynomialError):
        complete([ring.zero], 3)


def test_cofactors(ring):
    x, y = ring.gens()
    f = x * y * x - y * x * x
    rs = complete([x * y - y * x], 6, traces=True)

    remainder, cofactors = reduce_with_cofactors(f, rs)
    assert not remainder
    total = ring.zero
    for c in cofactors:
        total = total + rs.generators[c.index].sandwich(c.left, c.right, c.coeff)

    assert total == f


def test_cofactors_need_traces(ring):
    x, y = ring.gens()
    rs = complete([x * y - y * x], 4)

    with pytest.raises(TracesUnavailableError):
        rs.reduce_with_cofactors(x * y)


def test_traces_need_a_plain_ring(ring):
    x, y = ring.gens()

    with pytest.raises(ValueError):
        complete([homogenize(x * y - 1)], 4, traces=True)


def _span(generators, ring, degree):
    """Brute force span of `u * g * w` in `degree`, in word coordinates."""
    coords = WordBasis(sorted(ring.words(degree)))
    vectors = []
    for g in generators:
        rest = degree - g.degree
        if rest < 0:
            continue

        for split in range(rest + 1):
            for u in ring.words(split):
                for w in ring.words(rest - split):
                    vectors.append(coords.vector(g.sandwich(u, w)))

    return coords, Subspace(len(coords), ring.field, vectors, coords.words)


def _random_poly(rng, ring, degree):
    words = list(ring.words(degree))
    terms = [(w, rng.randrange(101)) for w in rng.sample(words, min(len(words), rng.randint(1, 3)))]
    return ring.from_terms(terms)


@pytest.mark.parametrize('seed', range(100))
def test_membership_against_brute_force(seed):
    rng = random.Random(seed)
    ring = FreeAlgebra(Alphabet(['x', 'y']), Field.prime(101))

    generators = []
    while len(generators) < 2:
        g = _random_poly(rng, ring, rng.choice([2, 3]))
        if g:
            generators.append(g)

    rs = complete(generators, 6)
    for degree in range(2, 7):
        coords, span = _span(generators, ring, degree)
        assert rs.dimension(degree) == len(coords) - span.dim

        for _ in range(3):
            sample = _random_poly(rng, ring, degree)
            assert rs.contains(sample) == span.contains(coords.vector(sample))


@pytest.mark.parametrize('seed', range(20))
def test_reduction_order_does_not_matter(seed):
    rng = random.Random(seed)
    ring = FreeAlgebra(Alphabet(['x', 'y', 'w']), Field.prime(101))
    x, y, w = ring.gens()
    relations = [x * y - y * x - w * w, x * w - w * x, y * w - w * y]

    shuffled = list(relations)
    rng.shuffle(shuffled)
    first = complete(relations, 5)
    second = complete(shuffled, 5)

    for degree in range(6):
        assert first.normal_words(degree) == second.normal_words(degree)

    sample = _random_poly(rng, ring, 4)
    assert first.normal_form(sample) == second.normal_form(sample)


def _random_word(rng, ring, degree):
    return tuple(rng.choice(ring.letters) for _ in range(degree))


@pytest.mark.parametrize('seed', range(50))
def test_cofactors_rebuild_the_reduced_element(seed):
    rng = random.Random(seed)
    ring = FreeAlgebra(Alphabet(['x', 'y']), Field.prime(101))
    field = ring.field

    generators = []
    while not generators:
        generators = [g for g in (_random_poly(rng, ring, rng.choice([2, 3])) for _ in range(2)) if g]

    rs = complete(generators, 6, traces=True)
    inside = ring.zero
    for _ in range(rng.randint(1, 4)):
        g = rng.choice(generators)
        left = _random_word(rng, ring, rng.randint(0, 6 - g.degree))
        right = _random_word(rng, ring, rng.randint(0, 6 - g.degree - len(left)))
        inside = inside + g.sandwich(left, right, field.convert(rng.randrange(1, 101)))

    noise = _random_poly(rng, ring, rng.randint(1, 6))
    for f in (inside, inside + noise):
        remainder, cofactors = reduce_with_cofactors(f, rs)
        total = remainder
        for c in cofactors:
            total = total + rs.generators[c.index].sandwich(c.left, c.right, c.coeff)

        assert total == f
        assert rs.normal_form(f) == remainder

    assert not reduce_with_cofactors(inside, rs)[0]
