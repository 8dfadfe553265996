import pytest

from pbwcheck.linalg import WordBasis
from pbwcheck.errors import AmbientMismatchError


def test_round_trip(ring):
    x, y = ring.gens()
    coords = WordBasis(ring.words_upto(2))
    f = x * y - 2 * y + 1

    assert len(coords) == 7
    assert coords.poly(coords.vector(f), ring) == f
    assert (2, 1) in coords


def test_unknown_word(ring):
    x, _ = ring.gens()
    coords = WordBasis(ring.words_upto(1))

    with pytest.raises(AmbientMismatchError):
        coords.vector(x * x)
