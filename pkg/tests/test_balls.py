import pytest

from soficlab.backends import (
    cyclic_backend,
    free_backend,
    heisenberg_backend,
    zpower_backend,
)
from soficlab.balls import ball, free_ball_size
from soficlab.config import ResourceLimits
from soficlab.errors import ResourceCapError


def test_free_ball_sizes_match_closed_form():
    for rank in (1, 2, 3):
        b = free_backend(rank)
        for radius in range(0, 5 if rank == 1 else 4):
            assert len(ball(b, radius)) == free_ball_size(rank, radius)


def test_known_ball_sizes():
    assert len(ball(free_backend(2), 2)) == 17
    assert len(ball(free_backend(2), 8)) == 13121
    assert len(ball(zpower_backend(2), 2)) == 13  # diamond |a|+|b| <= 2
    assert len(ball(zpower_backend(1), 3)) == 7


def test_identity_first_and_lengths():
    t = ball(zpower_backend(2), 2)
    assert t.elements[0] == (0, 0)
    assert t.words[0] == ()
    assert t.lengths[0] == 0
    assert all(len(w) == l for w, l in zip(t.words, t.lengths))
    assert max(t.lengths) == 2
    # words are genuine spellings of their elements
    b = t.backend
    assert all(b.normal_form(w) == g for w, g in zip(t.words, t.elements))


def test_words_are_shortlex_minimal():
    t = ball(free_backend(2), 3)
    order = {s: i for i, s in enumerate(t.backend.alphabet.signed_letters())}
    keys = [(len(w), [order[s] for s in w]) for w in t.words]
    assert keys == sorted(keys)


def test_products_partial_table_consistent():
    t = ball(heisenberg_backend(), 2)
    b = t.backend
    for (i, j), k in t.products.items():
        assert b.multiply(t.elements[i], t.elements[j]) == t.elements[k]
    # completeness: every in-ball product is recorded
    recorded = set(t.products)
    for i, g in enumerate(t.elements):
        for j, h in enumerate(t.elements):
            if t.contains(b.multiply(g, h)):
                assert (i, j) in recorded


def test_ball_closed_under_inversion():
    for b in (free_backend(2), zpower_backend(2), heisenberg_backend()):
        t = ball(b, 2)
        for i, k in enumerate(t.inverses):
            assert b.multiply(t.elements[i], t.elements[k]) == b.identity()


def test_finite_backend_ball_saturates():
    b = cyclic_backend(6)
    t = ball(b, 10)
    assert len(t) == 6


def test_ball_cap_enforced():
    with pytest.raises(ResourceCapError):
        ball(free_backend(2), 4, ResourceLimits(ball_cap=50))


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        ball(free_backend(2), -1)
