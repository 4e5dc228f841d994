import math

import pytest

from wlocube import (
    count_max_chains_precedes,
    count_max_chains_wo,
    count_weight_orders,
    oracle_count_chains,
    oracle_count_linear_extensions,
    oracle_count_shortest_paths,
)
from wlocube.counts import oracle_count_linear_extensions_by_permutations


def test_closed_form_values():
    assert [count_weight_orders(n) for n in range(1, 5)] == [1, 2, 36, 414720]
    assert [count_max_chains_wo(n) for n in range(1, 6)] == [1, 2, 9, 96, 2500]
    assert count_max_chains_precedes(3) == 6
    assert count_max_chains_precedes(5) == 120


def test_closed_forms_match_formulas():
    for n in range(1, 12):
        assert count_max_chains_wo(n) == math.prod(math.comb(n, k) for k in range(n + 1))
        assert count_max_chains_precedes(n) == math.factorial(n)


def test_chain_oracle():
    assert oracle_count_chains(3, "weight_order") == 9
    assert oracle_count_chains(3, "precedes") == 6
    assert oracle_count_chains(1, "precedes") == 1
    assert oracle_count_chains(1, "weight_order") == 1
    for n in range(1, 5):
        assert oracle_count_chains(n, "weight_order") == count_max_chains_wo(n)
    for n in range(1, 6):
        assert oracle_count_chains(n, "precedes") == count_max_chains_precedes(n)


def test_linear_extension_oracle():
    assert oracle_count_linear_extensions(1) == 1
    assert oracle_count_linear_extensions(2) == 2
    assert oracle_count_linear_extensions(3) == 36
    for n in range(1, 4):
        assert oracle_count_linear_extensions(n) == count_weight_orders(n)
    # independent cross-check by permutation filtering
    for n in (1, 2):
        assert oracle_count_linear_extensions_by_permutations(n) == oracle_count_linear_extensions(n)


def test_shortest_path_oracle():
    assert oracle_count_shortest_paths(1) == 1
    assert oracle_count_shortest_paths(4) == 24
    assert oracle_count_shortest_paths(5) == 120
    for n in range(1, 11):
        assert oracle_count_shortest_paths(n) == count_max_chains_precedes(n)


def test_capacity_errors():
    with pytest.raises(ValueError):
        oracle_count_chains(6, "precedes")
    with pytest.raises(ValueError):
        oracle_count_chains(5, "weight_order")
    with pytest.raises(ValueError):
        oracle_count_chains(3, "bogus")
    with pytest.raises(ValueError):
        oracle_count_linear_extensions(4)
    with pytest.raises(ValueError):
        oracle_count_shortest_paths(11)
    with pytest.raises(ValueError):
        count_weight_orders(0)
