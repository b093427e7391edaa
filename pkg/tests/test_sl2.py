import math
import random

import pytest

from qibg.sl2 import apply_block, block_det, block_inverse, gcd_transform


def test_already_reduced():
    t = gcd_transform(1, 0)
    assert t.matrix == ((1, 0), (0, 1))
    assert t.g == 1


def test_swap_case():
    t = gcd_transform(0, 5)
    assert t.matrix == ((0, 1), (-1, 0))
    assert t.g == 5


def test_bezout_case():
    t = gcd_transform(4, 6)
    assert t.matrix == ((-1, 1), (-3, 2))
    assert t.g == 2
    assert apply_block(t.matrix, (4, 6)) == (2, 0)
    assert block_det(t.matrix) == 1


def test_sign_flip_case():
    t = gcd_transform(-1, 0)
    assert t.matrix == ((-1, 0), (0, -1))
    assert t.g == 1


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        gcd_transform(0, 0)


def test_idempotent_on_reduced_vectors():
    for g in (1, 2, 17, 10 ** 9):
        t = gcd_transform(g, 0)
        assert t.matrix == ((1, 0), (0, 1))
        assert t.g == g


@pytest.mark.parametrize("seed", range(4))
def test_contract_on_random_inputs(seed):
    rng = random.Random(seed)
    for _ in range(2000):
        a = rng.randint(-10 ** 6, 10 ** 6)
        b = rng.randint(-10 ** 6, 10 ** 6)
        if a == 0 and b == 0:
            continue
        t = gcd_transform(a, b)
        assert t.g == math.gcd(a, b) > 0
        assert block_det(t.matrix) == 1
        assert apply_block(t.matrix, (a, b)) == (t.g, 0)
        bound = max(abs(a), abs(b), 1)
        assert max(abs(e) for row in t.matrix for e in row) <= bound


def test_contract_on_small_grid():
    for a in range(-12, 13):
        for b in range(-12, 13):
            if a == 0 and b == 0:
                continue
            t = gcd_transform(a, b)
            assert apply_block(t.matrix, (a, b)) == (t.g, 0)
            assert block_det(t.matrix) == 1
            assert max(abs(e) for row in t.matrix for e in row) <= max(abs(a), abs(b), 1)


def test_block_inverse():
    m = ((2, 1), (1, 1))
    inv = block_inverse(m)
    assert apply_block(m, apply_block(inv, (3, 4))) == (3, 4)
