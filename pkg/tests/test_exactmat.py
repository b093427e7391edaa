import json
import random

import pytest

from qibg import exactmat as em

I2 = ((1, 0), (0, 1))
I3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_multiply_identity():
    assert em.multiply(I2, I2) == I2


def test_multiply_hand_product():
    a = ((1, 1), (0, 1))
    b = ((1, 0), (1, 1))
    assert em.multiply(a, b) == ((2, 1), (1, 1))


def test_multiply_elementary_product():
    e21 = em.elementary(3, 2, 1, 3)
    e13 = em.elementary(3, 1, 3, 2)
    assert em.multiply(e21, e13) == ((1, 0, 2), (3, 1, 6), (0, 0, 1))


def test_multiply_dimension_mismatch():
    with pytest.raises(ValueError):
        em.multiply(I2, I3)


def test_determinant_examples():
    assert em.determinant(I3) == 1
    assert em.determinant(((2, 1), (1, 1))) == 1
    assert em.determinant(((0, 1), (-1, 0))) == 1
    assert em.determinant(((1, 2), (2, 4))) == 0


def test_determinant_matches_permanent_expansion():
    # brute-force cofactor oracle on random 4x4 integer matrices
    import itertools

    def brute(m):
        n = len(m)
        total = 0
        for perm in itertools.permutations(range(n)):
            sign = 1
            seen = list(perm)
            for i in range(n):
                for j in range(i + 1, n):
                    if seen[i] > seen[j]:
                        sign = -sign
            term = 1
            for i in range(n):
                term *= m[i][perm[i]]
            total += sign * term
        return total

    rng = random.Random(5)
    for _ in range(25):
        m = tuple(tuple(rng.randint(-9, 9) for _ in range(4)) for _ in range(4))
        assert em.determinant(m) == brute(m)


def test_inverse_examples():
    assert em.inverse_unimodular(I2) == I2
    assert em.inverse_unimodular(((1, 5), (0, 1))) == ((1, -5), (0, 1))
    inv = em.inverse_unimodular(((2, 1), (1, 1)))
    assert inv == ((1, -1), (-1, 2))
    assert em.multiply(((2, 1), (1, 1)), inv) == I2


def test_inverse_is_two_sided():
    for seed in range(10):
        m = em.random_word(3, 15, seed)
        inv = em.inverse_unimodular(m)
        assert em.multiply(m, inv) == I3
        assert em.multiply(inv, m) == I3


def test_inverse_rejects_non_unimodular():
    with pytest.raises(ValueError):
        em.inverse_unimodular(((2, 0), (0, 1)))


def test_sup_norm_examples():
    assert em.sup_norm(I2) == 1
    assert em.sup_norm(((2, -3), (1, 1))) == 3
    assert em.sup_norm(((1, 0, 2), (3, 1, 6), (0, 0, 1))) == 6


def test_sup_norm_at_least_one_for_unimodular():
    for seed in range(20):
        assert em.sup_norm(em.random_word(3, 10, seed)) >= 1


def test_sup_norm_submultiplicative_up_to_dimension():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.choice((2, 3, 4))
        a = em.random_word(n, rng.randint(0, 20), rng.randrange(10 ** 6))
        b = em.random_word(n, rng.randint(0, 20), rng.randrange(10 ** 6))
        assert em.sup_norm(em.multiply(a, b)) <= n * em.sup_norm(a) * em.sup_norm(b)


def test_random_word_zero_length_is_identity():
    assert em.random_word(2, 0, 123) == I2


def test_random_word_single_generator():
    for seed in range(20):
        m = em.random_word(2, 1, seed)
        assert m in {
            em.elementary(2, 1, 2, 1), em.elementary(2, 1, 2, -1),
            em.elementary(2, 2, 1, 1), em.elementary(2, 2, 1, -1),
        }


def test_random_word_reproducible():
    assert em.random_word(4, 33, 99) == em.random_word(4, 33, 99)
    assert em.random_word(4, 33, 99) != em.random_word(4, 33, 98)


def test_random_word_golden_snapshot():
    assert em.random_word(3, 20, 42) == ((-1, -2, 4), (0, 1, -1), (-2, 1, 2))


def test_random_word_always_unimodular():
    for seed in range(10):
        assert em.determinant(em.random_word(5, 40, seed)) == 1


def test_json_round_trip_exact():
    big = 10 ** 60
    m = ((big, -big - 7), (1, 0))
    # not unimodular, but the format does not care
    blob = json.dumps(em.matrix_to_json(m))
    assert em.matrix_from_json(json.loads(blob)) == m


def test_json_rational_round_trip():
    from fractions import Fraction
    m = ((Fraction(1, 2), Fraction(-3)), (Fraction(22, 7), Fraction(0)))
    blob = json.dumps(em.matrix_to_json(m))
    assert em.matrix_from_json(json.loads(blob), rational=True) == m


def test_json_rejects_ragged():
    with pytest.raises(ValueError):
        em.matrix_from_json({"n": 2, "entries": [["1", "0"], ["0"]]})
    with pytest.raises(ValueError):
        em.matrix_from_json({"entries": [["1"]]})


def test_log_abs_huge_values():
    x = 7 ** 4000
    approx = em.log_abs(x)
    assert abs(approx - 4000 * em.log_abs(7)) < 1e-6 * approx
