import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from entropica.coding import (
    CodeTable,
    average_code_length,
    build_huffman,
    is_prefix_free,
    kraft_sum,
)
from entropica.distributions import from_counts, from_probabilities
from entropica.entropy import entropy
from entropica.errors import AlphabetMismatchError, BadBaseError, EmptyAlphabetError, EntropicaError

from helpers import random_distribution

A, B, C = ord("a"), ord("b"), ord("c")
ABC = from_counts({A: 2, B: 1, C: 1})
ABC_TABLE = CodeTable(2, {A: (0,), B: (1, 0), C: (1, 1)})
DIE80 = from_probabilities({3: 0.8, 1: 0.04, 2: 0.04, 4: 0.04, 5: 0.04, 6: 0.04})
TRI27 = from_counts({0: 9, **{i: 1 for i in range(1, 19)}})


def best_length_assignment(numerators, base=2, max_len=6):
    """Exhaustive minimum of sum(n_i * l_i) over Kraft-feasible lengths 1..max_len."""
    cap = base ** max_len
    best = None
    for lengths in itertools.product(range(1, max_len + 1), repeat=len(numerators)):
        if sum(base ** (max_len - l) for l in lengths) > cap:
            continue
        cost = sum(n * l for n, l in zip(numerators, lengths))
        if best is None or cost < best:
            best = cost
    return Fraction(best, sum(numerators))


def test_abc_table():
    t = build_huffman(ABC, 2)
    assert t == ABC_TABLE
    assert [t.codeword_str(s) for s in (A, B, C)] == ["0", "10", "11"]


def test_abc_from_probabilities_matches():
    d = from_probabilities({A: 0.5, B: 0.25, C: 0.25})
    assert build_huffman(d, 2) == ABC_TABLE


def test_single_symbol():
    d = from_probabilities({72: 1.0})
    t = build_huffman(d, 2)
    assert t.entries == {72: (0,)}
    assert average_code_length(t, d) == 1.0
    assert build_huffman(d, 5).entries == {72: (0,)}


def test_die80_lengths():
    t = build_huffman(DIE80, 2)
    assert len(t[3]) == 1
    assert sorted(len(w) for w in t.entries.values()) == [1, 3, 3, 3, 4, 4]
    assert average_code_length(t, DIE80) == pytest.approx(1.48, abs=1e-12)


def test_tri27_ternary():
    t = build_huffman(TRI27, 3)
    assert len(t[0]) == 1
    assert sorted(len(w) for w in t.entries.values()) == [1] + [3] * 18
    assert kraft_sum(t) == pytest.approx(1.0, abs=1e-12)
    assert average_code_length(t, TRI27) == pytest.approx(entropy(TRI27, 3), abs=1e-12)


def test_zero_probability_excluded():
    d = from_counts({1: 3, 2: 0, 3: 1})
    t = build_huffman(d, 2)
    assert set(t.symbols) == {1, 3}


def test_build_errors():
    with pytest.raises(BadBaseError):
        build_huffman(ABC, 1)


def test_average_code_length_mismatch():
    with pytest.raises(AlphabetMismatchError):
        average_code_length(CodeTable(2, {A: (0,)}), ABC)


def test_kraft_examples():
    assert kraft_sum(ABC_TABLE) == 1.0
    assert kraft_sum(CodeTable(2, {A: (0,)})) == 0.5


def test_prefix_free_examples():
    assert is_prefix_free(ABC_TABLE)
    assert not is_prefix_free(CodeTable(2, {A: (0,), B: (0, 1)}))
    assert not is_prefix_free(CodeTable(2, {A: (1, 0), B: (1, 0)}))
    assert is_prefix_free(CodeTable(2, {}))
    assert not is_prefix_free(CodeTable(3, {1: (2,), 2: (0, 1), 3: (2, 0, 0)}))


def test_codetable_validation():
    with pytest.raises(EntropicaError):
        CodeTable(2, {A: ()})
    with pytest.raises(EntropicaError):
        CodeTable(2, {A: (2,)})


def test_text_format():
    text = ABC_TABLE.to_text()
    assert text == "base 2\n97\t0\n98\t10\n99\t11\n"
    assert CodeTable.from_text(text) == ABC_TABLE
    t = build_huffman(TRI27, 3)
    assert CodeTable.from_text(t.to_text()) == t


def test_text_format_large_base():
    d = from_counts({i: 1 for i in range(40)})
    t = build_huffman(d, 12)
    assert CodeTable.from_text(t.to_text()) == t


def test_tie_breaking_is_by_symbol_id():
    # four equal weights: lower ids merge first and take the lower digit
    t = build_huffman(from_counts({10: 1, 11: 1, 12: 1, 13: 1}), 2)
    assert t.entries == {10: (0, 0), 11: (0, 1), 12: (1, 0), 13: (1, 1)}


def test_ternary_padding():
    # two symbols in base 3 need one dummy, which takes digit 0
    t = build_huffman(from_counts({5: 1, 6: 1}), 3)
    assert t.entries == {5: (1,), 6: (2,)}
    assert kraft_sum(t) == pytest.approx(2 / 3)


def test_optimality_oracle_small():
    assert best_length_assignment([2, 1, 1]) == Fraction(3, 2)
    assert best_length_assignment([1]) == 1


# -- properties --------------------------------------------------------------

def test_lower_bound_and_near_optimality(rng):
    for _ in range(400):
        d = random_distribution(rng)
        b = rng.randint(2, 4)
        t = build_huffman(d, b)
        avg = average_code_length(t, d)
        h = entropy(d, b)
        assert h <= avg + 1e-9
        if len(d.support) >= 2:
            assert avg < h + 1
        assert is_prefix_free(t)
        assert set(t.symbols) == set(d.support)


def test_kraft_complete(rng):
    for _ in range(400):
        d = random_distribution(rng)
        b = rng.randint(2, 6)
        t = build_huffman(d, b)
        k = len(d.support)
        if k < 2:
            continue
        pad = (-(k - 1)) % (b - 1)
        deepest = max(len(w) for w in t.entries.values())
        # dummies sit at the deepest level and take pad leaves of the full tree
        assert kraft_sum(t) + pad * b ** -deepest == pytest.approx(1.0, abs=1e-12)
        if pad == 0:
            assert kraft_sum(t) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=1, max_size=5))
def test_matches_brute_force(numerators):
    d = from_counts(list(enumerate(numerators)))
    avg = average_code_length(build_huffman(d, 2), d)
    assert avg == pytest.approx(float(best_length_assignment(numerators)), abs=1e-12)


def test_deterministic(rng):
    for _ in range(50):
        d = random_distribution(rng)
        b = rng.randint(2, 4)
        assert build_huffman(d, b).to_text() == build_huffman(d, b).to_text()
        same = from_probabilities(list(zip(d.symbols, d.probabilities))[::-1])
        assert build_huffman(same, b).to_text() == build_huffman(same, b).to_text()
