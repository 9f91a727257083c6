import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzyrel import (
    EnumerationLimitError,
    FreProblem,
    FuzzyRelError,
    LabelMismatchError,
    ShapeError,
    check_solvable,
    greatest_solution,
    is_solution,
    minimal_solutions,
    new_relation,
    relation_leq,
    solution_set_contains,
    solve,
)
from fuzzyrel.solver import SolutionSet

from conftest import CLASSROOM_GREATEST, CLASSROOM_MINIMALS, CLASSROOM_P, GRADES, STAGES
from oracles import GRID11, brute_force, leq


def row(values, labels=GRADES, name="M"):
    return new_relation([name], labels, [values])


class TestIsSolution:
    def test_classroom(self, classroom_p, classroom_q, classroom_r):
        assert is_solution(classroom_p, classroom_q, classroom_r)

    def test_zero(self, classroom_q):
        assert is_solution(row([0] * 5), classroom_q, row([0] * 4, STAGES))

    def test_all_ones_is_not(self, classroom_q, classroom_r):
        assert not is_solution(row([1] * 5), classroom_q, classroom_r)

    def test_tolerance(self, classroom_q):
        p = row([1 / 3, 0, 0, 0, 0])
        r = row([0.33, 0.33, 0.3, 0], STAGES)
        assert not is_solution(p, classroom_q, r, tolerance=1e-9)
        assert is_solution(p, classroom_q, r, tolerance=0.01)

    def test_wrong_width(self, classroom_q, classroom_r):
        with pytest.raises(LabelMismatchError):
            is_solution(row([0.1, 0.2], ["A", "B"]), classroom_q, classroom_r)

    def test_multi_row_rejected(self, classroom_q, classroom_r):
        p = new_relation(["M", "N"], GRADES, [[0] * 5, [0] * 5])
        with pytest.raises(ShapeError):
            is_solution(p, classroom_q, classroom_r)


class TestProblem:
    def test_r_must_be_a_row(self, classroom_q):
        with pytest.raises(ShapeError):
            FreProblem(classroom_q, new_relation(["a", "b"], STAGES, [[0] * 4, [0] * 4]))

    def test_labels_checked(self, classroom_q):
        with pytest.raises(LabelMismatchError):
            FreProblem(classroom_q, row([0] * 4, ["R", "I", "G", "C"]))

    def test_negative_tolerance(self, classroom_q, classroom_r):
        with pytest.raises(FuzzyRelError):
            FreProblem(classroom_q, classroom_r, tolerance=-1)


class TestGreatest:
    def test_classroom(self, classroom_q, classroom_r):
        assert greatest_solution(FreProblem(classroom_q, classroom_r)).row() == CLASSROOM_GREATEST

    def test_unsolvable(self, classroom_q, unsolvable_r):
        assert greatest_solution(FreProblem(classroom_q, unsolvable_r)) is None

    def test_zero_target(self, classroom_q):
        # every row of q is positive in some column, so everything is pinned to 0
        great = greatest_solution(FreProblem(classroom_q, row([0] * 4, STAGES)))
        assert great.row() == (0, 0, 0, 0, 0)

    def test_zero_target_with_zero_row(self):
        q = new_relation(["a", "b"], ["u", "v"], [[0.4, 0.2], [0, 0]])
        great = greatest_solution(FreProblem(q, row([0, 0], ["u", "v"])))
        assert great.row() == (0, 1)

    def test_upward_perturbation_breaks(self, classroom_q, classroom_r):
        great = greatest_solution(FreProblem(classroom_q, classroom_r))
        for j in range(5):
            vals = list(great.row())
            for step in (0.01, 0.1):
                bumped = vals.copy()
                bumped[j] = min(1.0, bumped[j] + step)
                assert not is_solution(row(bumped), classroom_q, classroom_r)


class TestCheckSolvable:
    def test_unsolvable(self, classroom_q, unsolvable_r):
        v = check_solvable(FreProblem(classroom_q, unsolvable_r))
        assert (v.solvable, v.violated_columns, v.residual_check_passed) == (False, ("R",), False)

    def test_zero(self, classroom_q):
        assert check_solvable(FreProblem(classroom_q, row([0] * 4, STAGES))).solvable

    def test_column_maxima(self, classroom_q):
        v = check_solvable(FreProblem(classroom_q, row([0.7, 0.7, 0.7, 0.8], STAGES)))
        assert v.solvable and v.violated_columns == ()

    def test_unsolvable_without_violated_column(self):
        # both columns need row b at different levels; column maxima are fine
        q = new_relation(["a", "b"], ["u", "v"], [[0.1, 0.1], [0.9, 0.9]])
        v = check_solvable(FreProblem(q, row([0.5, 0.6], ["u", "v"])))
        assert not v.solvable and v.violated_columns == ()

    @pytest.mark.parametrize("k", range(4))
    def test_raising_above_column_max_flips(self, classroom_q, classroom_r, k):
        target = list(classroom_r.row())
        target[k] = min(1.0, classroom_q.entries[:, k].max() + 0.05)
        v = check_solvable(FreProblem(classroom_q, row(target, STAGES)))
        assert not v.solvable
        assert STAGES[k] in v.violated_columns


class TestMinimals:
    def test_classroom(self, classroom_q, classroom_r):
        mins = minimal_solutions(FreProblem(classroom_q, classroom_r))
        assert [m.row() for m in mins] == CLASSROOM_MINIMALS
        for m in mins:
            assert is_solution(m, classroom_q, classroom_r)

    def test_zero_target(self, classroom_q):
        mins = minimal_solutions(FreProblem(classroom_q, row([0] * 4, STAGES)))
        assert [m.row() for m in mins] == [(0, 0, 0, 0, 0)]

    def test_unsolvable(self, classroom_q, unsolvable_r):
        assert minimal_solutions(FreProblem(classroom_q, unsolvable_r)) == []

    def test_cap(self):
        labels = [f"y{j}" for j in range(13)]
        q = new_relation(labels, ["u"], [[0.5]] * 13)
        problem = FreProblem(q, row([0.5], ["u"]))
        with pytest.raises(EnumerationLimitError):
            minimal_solutions(problem)
        assert len(minimal_solutions(problem, cap=(13, 12))) == 13
        assert len(minimal_solutions(problem, cap=None)) == 13

    def test_pairwise_incomparable(self, classroom_q, classroom_r):
        mins = minimal_solutions(FreProblem(classroom_q, classroom_r))
        for a in mins:
            for b in mins:
                if a != b:
                    assert not relation_leq(a, b)


class TestSolve:
    def test_classroom(self, classroom_q, classroom_r):
        s = solve(FreProblem(classroom_q, classroom_r))
        assert s.solvable
        assert s.greatest.row() == CLASSROOM_GREATEST
        assert len(s.minimals) == 6
        for m in s.minimals:
            assert relation_leq(m, s.greatest)

    def test_unsolvable(self, classroom_q, unsolvable_r):
        s = solve(FreProblem(classroom_q, unsolvable_r))
        assert (s.solvable, s.greatest, s.minimals) == (False, None, ())

    def test_zero(self, classroom_q):
        s = solve(FreProblem(classroom_q, row([0] * 4, STAGES)))
        assert s.solvable and [m.row() for m in s.minimals] == [(0,) * 5]

    def test_invariants_enforced(self, classroom_p):
        with pytest.raises(FuzzyRelError):
            SolutionSet(False, greatest=classroom_p)
        with pytest.raises(FuzzyRelError):
            SolutionSet(True)


class TestContains:
    def test_classroom_p(self, classroom_p, classroom_q, classroom_r):
        s = solve(FreProblem(classroom_q, classroom_r))
        found = solution_set_contains(s, classroom_p, classroom_q, classroom_r)
        assert found and found.below_greatest and found.consistent
        assert found.above_minimal.row() == (0.33, 0, 0, 0.17, 0)

    def test_greatest(self, classroom_q, classroom_r):
        s = solve(FreProblem(classroom_q, classroom_r))
        assert solution_set_contains(s, s.greatest, classroom_q, classroom_r)

    def test_not_a_solution(self, classroom_q, classroom_r):
        s = solve(FreProblem(classroom_q, classroom_r))
        p = row([1, 0, 0, 0, 0])
        assert (p @ classroom_q).row() == (0.7, 0.5, 0.3, 0)
        assert not solution_set_contains(s, p, classroom_q, classroom_r)

    def test_upper_bounds_enforced(self, classroom_q, classroom_r):
        # p1 = 0.5 satisfies "p1 = 0.33 or p2 = 0.33" loosely read, but
        # min(0.5, 0.7) overshoots the first column
        p = row([0.5, 0.33, 0.17, 0, 0])
        assert not is_solution(p, classroom_q, classroom_r)


grid_values = st.sampled_from(GRID11)


@st.composite
def instances(draw):
    m = draw(st.integers(1, 4))
    s = draw(st.integers(1, 3))
    q = np.array(draw(st.lists(st.lists(grid_values, min_size=s, max_size=s), min_size=m, max_size=m)))
    if draw(st.booleans()):
        p = np.array(draw(st.lists(grid_values, min_size=m, max_size=m)))
        r = np.minimum(p[:, None], q).max(axis=0)
    else:
        r = np.array(draw(st.lists(grid_values, min_size=s, max_size=s)))
    return q, r


@settings(max_examples=80, deadline=None)
@given(instances())
def test_characterization_against_oracle(inst):
    q_arr, r_arr = inst
    m, s = q_arr.shape
    q = new_relation([f"y{j}" for j in range(m)], [f"z{k}" for k in range(s)], q_arr)
    r = new_relation(["x"], q.col_labels, [r_arr])
    solset = solve(FreProblem(q, r))
    ok, great, mins, sols = brute_force(q_arr, r_arr)
    assert solset.solvable == ok
    if not ok:
        return
    assert solset.greatest.row() == great
    assert sorted(mn.row() for mn in solset.minimals) == mins
    for sol in sols:
        assert leq(sol, great)
        assert any(leq(mn.row(), sol) for mn in solset.minimals)
