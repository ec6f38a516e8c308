"""Sparse polarity/count ledger and the scoring operations built on it.

Each cell, keyed by ``(who, whom)``, holds the running signed polarity
``p`` and the statement count ``s`` for that speaker/target pair, so
``|p| <= s`` always.  All scores are exact rationals; ``NEUTRAL`` is the
distinct no-evidence outcome and is never encoded as zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import ScopeMismatch

ARTICLE = "article"
CUMULATIVE = "cumulative"


class _NeutralType:
    """Singleton marker for "no evidence either way"."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Neutral"


NEUTRAL = _NeutralType()

Score = Fraction | _NeutralType


class Cell(NamedTuple):
    p: int = 0
    s: int = 0


class PolarityLedger:
    """Associative (who, whom) -> (p, s) store; absent keys read as (0, 0)."""

    def __init__(self, scope: str = CUMULATIVE):
        if scope not in (ARTICLE, CUMULATIVE):
            raise ValueError(f"unknown ledger scope {scope!r}")
        self.scope = scope
        self._cells: dict[tuple[str, str], Cell] = {}

    def cell(self, who: str, whom: str) -> Cell:
        return self._cells.get((who, whom), Cell())

    def apply(self, record) -> None:
        """Fold one statement in: p += value, s += 1 for its key."""
        if record.value not in (-1, 1):
            raise ValueError(f"statement value must be -1 or +1, got {record.value}")
        key = (record.who, record.whom)
        old = self._cells.get(key, Cell())
        self._cells[key] = Cell(old.p + record.value, old.s + 1)

    def keys(self) -> list[tuple[str, str]]:
        return sorted(self._cells)

    def items(self) -> Iterator[tuple[tuple[str, str], Cell]]:
        for key in self.keys():
            yield key, self._cells[key]

    def whos(self) -> set[str]:
        return {who for who, _ in self._cells}

    def whoms(self) -> set[str]:
        return {whom for _, whom in self._cells}

    def copy(self) -> "PolarityLedger":
        return self.as_scope(self.scope)

    def as_scope(self, scope: str) -> "PolarityLedger":
        clone = PolarityLedger(scope)
        clone._cells = dict(self._cells)
        return clone

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolarityLedger):
            return NotImplemented
        return self.scope == other.scope and self._cells == other._cells

    def __repr__(self) -> str:
        return f"PolarityLedger(scope={self.scope!r}, cells={len(self._cells)})"


def merge(a: PolarityLedger, b: PolarityLedger) -> PolarityLedger:
    """Componentwise sum over the union of keys.  Scopes must agree."""
    if a.scope != b.scope:
        raise ScopeMismatch(f"cannot merge {a.scope!r} ledger with {b.scope!r} ledger")
    merged = PolarityLedger(a.scope)
    merged._cells = dict(a._cells)
    for key, cell in b._cells.items():
        old = merged._cells.get(key, Cell())
        merged._cells[key] = Cell(old.p + cell.p, old.s + cell.s)
    return merged


def speaker_score(cell: Cell) -> Score:
    """p/s as an exact rational; NEUTRAL when the pair has no statements."""
    if cell.s == 0:
        return NEUTRAL
    return Fraction(cell.p, cell.s)


def classify(cell: Cell) -> str:
    """positive / neutral / negative from the raw cell."""
    if cell.s == 0 or cell.p == 0:
        return "neutral"
    return "positive" if cell.p > 0 else "negative"


def classify_score(score: Score) -> str:
    if score is NEUTRAL or score == 0:
        return "neutral"
    return "positive" if score > 0 else "negative"


def article_score(article_ledger: PolarityLedger, whom: str) -> Score:
    """Ratio of summed polarities to summed counts toward one target.

    Defined over a per-article ledger (direct cells only); folding in a
    derived outlet view first would double-count.
    """
    total_p = 0
    total_s = 0
    for (_, target), cell in article_ledger._cells.items():
        if target == whom:
            total_p += cell.p
            total_s += cell.s
    if total_s == 0:
        return NEUTRAL
    return Fraction(total_p, total_s)


def outlet_view(cumulative_ledger: PolarityLedger, outlet: str, whom: str) -> Cell:
    """Derived cell attributing every statement toward ``whom`` to the outlet.

    Componentwise sum of the outlet's own cell and every other speaker's
    cell for that target.  Read-only: direct cells are never touched.
    """
    total_p = 0
    total_s = 0
    for (_, target), cell in cumulative_ledger._cells.items():
        if target == whom:
            total_p += cell.p
            total_s += cell.s
    return Cell(total_p, total_s)


class ArticleScoreHistory:
    """Ordered per-(outlet, whom) article scores feeding the outlet tendency."""

    def __init__(self):
        self._scores: dict[tuple[str, str], list[tuple[str, Fraction]]] = {}

    def record(self, outlet: str, whom: str, article_id: str, score: Fraction) -> None:
        score = Fraction(score)
        if not -1 <= score <= 1:
            raise ValueError(f"article score {score} outside [-1, 1]")
        self._scores.setdefault((outlet, whom), []).append((article_id, score))

    def entries(self, outlet: str, whom: str) -> list[tuple[str, Fraction]]:
        return list(self._scores.get((outlet, whom), []))

    def scores(self, whom: str, outlet: str | None = None) -> list[Fraction]:
        collected: list[Fraction] = []
        for (o, h), entries in sorted(self._scores.items()):
            if h == whom and (outlet is None or o == outlet):
                collected.extend(score for _, score in entries)
        return collected

    def keys(self) -> list[tuple[str, str]]:
        return sorted(self._scores)

    def items(self) -> Iterator[tuple[tuple[str, str], list[tuple[str, Fraction]]]]:
        for key in self.keys():
            yield key, list(self._scores[key])

    def __len__(self) -> int:
        return len(self._scores)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArticleScoreHistory):
            return NotImplemented
        return self._scores == other._scores

    def __repr__(self) -> str:
        return f"ArticleScoreHistory(pairs={len(self._scores)})"


def outlet_tendency(
    history: ArticleScoreHistory, whom: str, outlet: str | None = None
) -> Score:
    """Arithmetic mean of the recorded article scores for one target."""
    scores = history.scores(whom, outlet=outlet)
    if not scores:
        return NEUTRAL
    return sum(scores, Fraction(0)) / len(scores)


def format_matrix(
    ledger: PolarityLedger,
    outlet: str,
    value: str = "p",
    with_outlet_view: bool = False,
) -> str:
    """Tab-separated grid, rows are targets and columns are speakers.

    ``value`` selects the polarity ("p") or count ("s") matrix.  With
    ``with_outlet_view`` the outlet's column shows the derived view
    instead of its direct cells; other columns are always direct.
    """
    if value not in ("p", "s"):
        raise ValueError(f"value must be 'p' or 's', got {value!r}")
    whos = [outlet] + sorted(ledger.whos() - {outlet})
    ids = ledger.whos() | ledger.whoms()
    whoms = [outlet] + sorted(ids - {outlet})
    lines = ["\t".join([""] + whos)]
    for whom in whoms:
        row = [whom]
        for who in whos:
            if with_outlet_view and who == outlet:
                cell = outlet_view(ledger, outlet, whom)
            else:
                cell = ledger.cell(who, whom)
            row.append(str(getattr(cell, value)))
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
