"""Bound comparison for level artinian algebras.

For a level algebra with Hilbert function (h_0, ..., h_c), multiplication
by a generic linear form admits two lower bounds on the Hilbert function of
the principal ideal it generates: one from the classical hyperplane
restriction bound applied degree by degree (hG), and one from the module
bound applied to the dual level module (hGM). This module computes both,
compares them position by position, and re-derives a bundled dataset of
published comparisons to guard against transcription slips.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .bounds import braced_bound
from .macaulay import binomial, kappa

DATA_RESOURCE = "level_comparisons.csv"


class TheoremViolation(AssertionError):
    """A proved inequality failed; indicates an implementation bug."""


@dataclass(frozen=True)
class LevelHilbert:
    """Candidate Hilbert function of a level algebra, socle degree c = len-1.

    Entries are taken at face value; no check that a level algebra with
    this Hilbert function actually exists.
    """

    h: tuple[int, ...]
    n: int = 3

    def __post_init__(self) -> None:
        if len(self.h) < 2:
            raise ValueError("need at least degrees 0 and 1 (socle degree >= 1)")
        if any(v < 1 for v in self.h):
            raise ValueError(f"level Hilbert function entries must be >= 1: {self.h}")
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        object.__setattr__(self, "h", tuple(self.h))

    @property
    def c(self) -> int:
        return len(self.h) - 1


@dataclass(frozen=True)
class PropositionCheck:
    """The three sufficient conditions at one position, plus the conclusion."""

    i: int
    low_half: bool  # i + 1 <= c - i, so the dual base dominates the direct one
    plateau: bool  # h_i = h_{i+1}
    fits_single_segment: bool  # dim S_{c-i} > h_{i+1}
    all_hold: bool


def compute_hG(lh: LevelHilbert) -> tuple[int, ...]:
    """Degree-wise restriction bound: hG_i = h_{i+1} - kappa(h_{i+1}, i+1)."""
    return tuple(lh.h[i + 1] - kappa(lh.h[i + 1], i + 1) for i in range(lh.c))


def compute_hGM(lh: LevelHilbert) -> tuple[int, ...]:
    """Module-side bound via the dual: hGM_i = h_i - braced_bound(h_i, c-i, n)."""
    return tuple(lh.h[i] - braced_bound(lh.h[i], lh.c - i, lh.n) for i in range(lh.c))


def proposition_conditions(lh: LevelHilbert, i: int) -> PropositionCheck:
    """Evaluate the three sufficient conditions for hGM_i >= hG_i at index i.

    When all three hold, the conclusion is additionally checked; a failure
    there would contradict a proved statement and raises TheoremViolation.
    """
    if not 0 <= i <= lh.c - 1:
        raise ValueError(f"index {i} outside 0..{lh.c - 1}")
    s = binomial((lh.c - i) + lh.n - 1, lh.c - i)
    # With a plateau and a single-segment value, the two bounds differ only
    # in the base of the numerator decrement (c-i versus i+1); the decrement
    # shrinks as the base grows, so c-i >= i+1 forces the module side up.
    low_half = i + 1 <= lh.c - i
    plateau = lh.h[i] == lh.h[i + 1]
    fits = s > lh.h[i + 1]
    check = PropositionCheck(
        i=i,
        low_half=low_half,
        plateau=plateau,
        fits_single_segment=fits,
        all_hold=low_half and plateau and fits,
    )
    if check.all_hold:
        hgm_i = compute_hGM(lh)[i]
        hg_i = compute_hG(lh)[i]
        if hgm_i < hg_i:
            raise TheoremViolation(
                f"conditions hold at i={i} but hGM_i={hgm_i} < hG_i={hg_i} for h={lh.h}"
            )
    return check


@dataclass(frozen=True)
class LevelComparison:
    """Both bound sequences plus the positions where the module bound wins.

    Positions are 1-based: position p in win_positions means
    hGM_{p-1} > hG_{p-1}.
    """

    h: tuple[int, ...]
    hG: tuple[int, ...]
    hGM: tuple[int, ...]
    win_positions: frozenset[int]
    proposition_flags: tuple[PropositionCheck, ...]


def compare_bounds(lh: LevelHilbert) -> LevelComparison:
    """Compute hG and hGM and report every position where hGM wins."""
    hg = compute_hG(lh)
    hgm = compute_hGM(lh)
    return LevelComparison(
        h=lh.h,
        hG=hg,
        hGM=hgm,
        win_positions=frozenset(i + 1 for i in range(lh.c) if hgm[i] > hg[i]),
        proposition_flags=tuple(proposition_conditions(lh, i) for i in range(lh.c)),
    )


@dataclass(frozen=True)
class TableRow:
    position: int
    h: tuple[int, ...]
    hGM: tuple[int, ...]
    hG: tuple[int, ...]


@dataclass(frozen=True)
class RowResult:
    row: TableRow
    computed_hGM: tuple[int, ...]
    computed_hG: tuple[int, ...]
    win_positions: frozenset[int]
    ok: bool


def _parse_int_list(text: str, line_no: int) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"line {line_no}: bad integer list {text!r}") from exc


def parse_level_table(text: str) -> list[TableRow]:
    """Parse the semicolon row format ``position;h;hGM;hG``."""
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(";")
        if len(parts) != 4:
            raise ValueError(f"line {line_no}: expected 4 fields, got {len(parts)}")
        rows.append(
            TableRow(
                position=int(parts[0]),
                h=_parse_int_list(parts[1], line_no),
                hGM=_parse_int_list(parts[2], line_no),
                hG=_parse_int_list(parts[3], line_no),
            )
        )
    return rows


def load_level_table(path: str | Path | None = None) -> list[TableRow]:
    """Load the bundled comparison dataset, or one from an explicit path."""
    if path is not None:
        return parse_level_table(Path(path).read_text())
    text = resources.files("greenhrt").joinpath("data").joinpath(DATA_RESOURCE).read_text()
    return parse_level_table(text)


def reproduce_table(rows: list[TableRow], n: int = 3) -> list[RowResult]:
    """Recompute both bound columns for every row and flag any mismatch.

    A row passes when the recomputed hGM and hG match the stored columns
    exactly and the stored position is among the computed win positions.
    """
    results = []
    for row in rows:
        comparison = compare_bounds(LevelHilbert(h=row.h, n=n))
        ok = (
            comparison.hGM == row.hGM
            and comparison.hG == row.hG
            and row.position in comparison.win_positions
        )
        results.append(
            RowResult(
                row=row,
                computed_hGM=comparison.hGM,
                computed_hG=comparison.hG,
                win_positions=comparison.win_positions,
                ok=ok,
            )
        )
    return results
