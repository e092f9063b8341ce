"""Level-algebra bound sequences and the bundled comparison dataset."""
from __future__ import annotations

import random

import pytest

from greenhrt.level import (
    LevelHilbert,
    TheoremViolation,
    compare_bounds,
    compute_hG,
    compute_hGM,
    load_level_table,
    parse_level_table,
    proposition_conditions,
    reproduce_table,
)


def test_level_validation():
    with pytest.raises(ValueError):
        LevelHilbert(h=(1,))
    with pytest.raises(ValueError):
        LevelHilbert(h=(1, 0, 1))
    lh = LevelHilbert(h=(1, 3, 3, 3, 2))
    assert lh.c == 4 and lh.n == 3


def test_hG_rows():
    assert compute_hG(LevelHilbert(h=(1, 3, 3, 3, 2))) == (1, 2, 3, 2)
    assert compute_hG(LevelHilbert(h=(1, 3, 6, 8, 5, 2))) == (1, 3, 6, 4, 2)
    assert compute_hG(LevelHilbert(h=(1, 1))) == (1,)


def test_hGM_rows():
    assert compute_hGM(LevelHilbert(h=(1, 3, 3, 3, 2))) == (1, 3, 2, 1)
    assert compute_hGM(LevelHilbert(h=(1, 3, 6, 8, 5, 2))) == (1, 3, 5, 5, 2)
    assert compute_hGM(LevelHilbert(h=(1, 1))) == (1,)


def test_win_positions():
    assert sorted(compare_bounds(LevelHilbert(h=(1, 3, 3, 3, 2))).win_positions) == [2]
    assert sorted(compare_bounds(LevelHilbert(h=(1, 3, 6, 8, 5, 2))).win_positions) == [4]
    assert sorted(compare_bounds(LevelHilbert(h=(1, 3, 6, 10, 6, 2))).win_positions) == [4]


def test_proposition_examples():
    lh = LevelHilbert(h=(1, 3, 3, 3, 2))
    check = proposition_conditions(lh, 1)
    assert check.all_hold
    assert compute_hGM(lh)[1] > compute_hG(lh)[1]

    lh2 = LevelHilbert(h=(1, 3, 6, 8, 5, 2))
    check2 = proposition_conditions(lh2, 3)
    assert not check2.plateau and not check2.all_hold
    # the win still happens: the conditions are sufficient, not necessary
    assert compute_hGM(lh2)[3] > compute_hG(lh2)[3]

    check3 = proposition_conditions(LevelHilbert(h=(1, 1)), 0)
    assert check3.all_hold

    with pytest.raises(ValueError):
        proposition_conditions(lh, 4)


def test_proposition_randomized_sweep():
    rng = random.Random(101)
    for _ in range(4000):
        c = rng.randint(1, 8)
        h = tuple(rng.randint(1, 20) for _ in range(c + 1))
        lh = LevelHilbert(h=h)
        for i in range(c):
            check = proposition_conditions(lh, i)  # raises on violation
            if check.all_hold:
                assert compute_hGM(lh)[i] >= compute_hG(lh)[i]


def test_single_block_hGM_reduces_to_kappa():
    # when h_i fits under dim S_{c-i} the braced bound is a plain decrement
    from greenhrt.bounds import braced_bound
    from greenhrt.macaulay import binomial, kappa

    for c in (2, 3, 4):
        for i in range(c):
            s = binomial((c - i) + 2, c - i)
            for h_i in range(1, s):
                assert braced_bound(h_i, c - i, 3) == kappa(h_i, c - i)


def test_table_loads_and_reproduces():
    rows = load_level_table()
    assert len(rows) == 21
    results = reproduce_table(rows)
    assert all(r.ok for r in results)
    # spot rows quoted directly
    assert rows[1].h == (1, 3, 3, 3, 3)
    assert rows[1].hGM == (1, 3, 2, 1) and rows[1].hG == (1, 2, 3, 3)
    assert rows[17].h == (1, 3, 6, 9, 12, 6, 2)
    assert rows[17].hGM == (1, 3, 5, 6, 6, 2) and rows[17].hG == (1, 3, 6, 9, 5, 2)


def test_table_parser_rejects_malformed():
    with pytest.raises(ValueError, match="4 fields"):
        parse_level_table("2;1,3;1\n")
    with pytest.raises(ValueError, match="bad integer"):
        parse_level_table("2;1,x;1;1\n")
    assert parse_level_table("# comment only\n\n") == []


def test_table_detects_transcription_errors():
    rows = parse_level_table("2;1,3,3,3,2;1,3,2,2;1,2,3,2\n")
    results = reproduce_table(rows)
    assert not results[0].ok


def test_empty_dataset_is_vacuous_pass():
    results = reproduce_table([])
    assert results == [] and all(r.ok for r in results)


def test_theorem_violation_is_distinguishable():
    assert issubclass(TheoremViolation, AssertionError)
