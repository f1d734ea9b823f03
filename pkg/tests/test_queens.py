import pytest

from fdsolve.queens import LEVELS, is_placement, queens_bench, queens_count, queens_solutions
from fdsolve.ranges import make_kind

from oracles import queens_brute
from queens_checks import KIND_NAMES, ordering_holds, queens_disagreements


def test_small_boards_match_brute_force():
    assert queens_disagreements(range(4, 8)) == []


@pytest.mark.parametrize("level", LEVELS)
def test_first_fail_finds_every_solution(level):
    got = sorted(list(s) for s in queens_solutions(6, level, make_kind("bits"), "ff"))
    assert got == queens_brute(6)


def test_eight_queens_count():
    assert queens_count(8, "clpfd") == 92 == len(queens_brute(8))


def test_first_solution_for_four():
    r = queens_bench(4, "step", "fd")
    assert r.solution == [2, 4, 1, 3]


@pytest.mark.parametrize("kind", KIND_NAMES)
def test_sixteen_same_first_solution_at_every_level(kind):
    sols = {level: queens_bench(16, "step", level, make_kind(kind)).solution for level in LEVELS}
    assert len({tuple(s) for s in sols.values()}) == 1
    assert is_placement(sols["kernel"])


@pytest.mark.parametrize("level", LEVELS)
def test_ninety_first_fail_gives_a_placement(level):
    r = queens_bench(90, "ff", level, make_kind("bits"))
    assert len(r.solution) == 90 and is_placement(r.solution)


def test_unknown_level():
    with pytest.raises(ValueError):
        queens_count(4, "asm")


def test_stats_are_reproducible():
    a = queens_bench(10, "ff", "idx").stats
    b = queens_bench(10, "ff", "idx").stats
    assert a == b and a["nodes"] > 0


def test_is_placement():
    assert is_placement([2, 4, 1, 3])
    assert not is_placement([1, 2, 3, 4])


def test_ordering_predicate():
    class R:
        def __init__(self, s):
            self.seconds = s

    assert ordering_holds({"kernel": R(1), "idx": R(2), "fd": R(3), "clpfd": R(4)})
    assert not ordering_holds({"kernel": R(1), "idx": R(3), "fd": R(2), "clpfd": R(4)})
    assert not ordering_holds({"kernel": R(0.95), "idx": R(1), "fd": R(1), "clpfd": R(1)})
