from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from golomb.simplex import strict_cone_feasibility


def brute_rational_witness(rows, denominator=2, span=2):
    """Tiny grid search for a strictly feasible point; None if none found."""
    m = len(rows[0])
    grid = [Fraction(k, denominator) for k in range(-span * denominator, span * denominator + 1)]

    def search(prefix):
        if len(prefix) == m:
            return prefix if all(sum(c * x for c, x in zip(r, prefix)) > 0 for r in rows) else None
        for val in grid:
            hit = search(prefix + (val,))
            if hit:
                return hit
        return None

    return search(())


def test_empty_system_is_feasible():
    assert strict_cone_feasibility([])


def test_simple_feasible():
    result = strict_cone_feasibility([(1, 0), (0, 1), (1, -1)])
    assert result.feasible
    z = result.witness
    assert z[0] >= 1 and z[1] >= 1 and z[0] - z[1] >= 1


def test_simple_infeasible_with_certificate():
    result = strict_cone_feasibility([(1, -1), (-1, 1)])
    assert not result.feasible
    y = result.certificate
    assert all(v >= 0 for v in y) and sum(y) > 0
    assert y[0] == y[1]


def test_opposite_pair_infeasible():
    assert not strict_cone_feasibility([(1,), (-1,)])
    assert strict_cone_feasibility([(1,)])
    assert strict_cone_feasibility([(-1,)])


def test_transitive_chain_infeasible():
    # x > y, y > z, z > x
    rows = [(1, -1, 0), (0, 1, -1), (-1, 0, 1)]
    result = strict_cone_feasibility(rows)
    assert not result.feasible


def test_additive_infeasibility():
    # z1 < z3, z2 < z4, yet z1 + z2 > z3 + z4
    rows = [(-1, 0, 1, 0), (0, -1, 0, 1), (1, 1, -1, -1)]
    assert not strict_cone_feasibility(rows)


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        strict_cone_feasibility([(1, 0), (1,)])


@given(
    st.lists(
        st.tuples(*(st.integers(min_value=-2, max_value=2) for _ in range(3))),
        min_size=1,
        max_size=5,
    )
)
def test_against_grid_search(rows):
    rows = [r for r in rows if any(r)]
    if not rows:
        return
    result = strict_cone_feasibility(rows)
    grid_hit = brute_rational_witness(rows)
    if grid_hit is not None:
        assert result.feasible
    if result.feasible:
        assert all(sum(c * x for c, x in zip(r, result.witness)) >= 1 for r in rows)
    else:
        y = result.certificate
        assert all(v >= 0 for v in y) and sum(y) > 0
        for j in range(3):
            assert sum(y[i] * rows[i][j] for i in range(len(rows))) == 0
