"""Shared generators for randomized tests."""

from __future__ import annotations

import random
from fractions import Fraction

from polisent import (
    ARTICLE,
    CUMULATIVE,
    EntityEntry,
    KnowledgeBase,
    Lexicon,
    NEUTRAL,
    OpinionEntry,
    PolarityLedger,
    RawArticle,
    StatementRecord,
)

IDS = ["k", "andi", "kpk", "deddy", "km", "ahmad", "p1", "p2"]

# Small ascii lexicon for synthetic analyzer articles.
MINI_LEXICON = Lexicon(
    outlet_id="out",
    opinion_entries=[
        OpinionEntry("good", 1),
        OpinionEntry("fine", 1),
        OpinionEntry("bad", -1),
        OpinionEntry("poor", -1),
    ],
    negation_words=["not", "never"],
    stopwords=["the", "a", "is"],
    reporting_verbs=["said", "stated"],
    entities=[EntityEntry(f"e{i}", f"e{i}") for i in range(1, 5)],
)

_PLAIN = ["alpha", "beta", "gamma", "delta", "omega"]
_ENTITIES = [e.canonical_id for e in MINI_LEXICON.entities]
_OPINIONS = [e.surface for e in MINI_LEXICON.opinion_entries]
_NEGATIONS = sorted(MINI_LEXICON.negation_words)
_REPORTING = sorted(MINI_LEXICON.reporting_verbs)


def random_records(rng: random.Random, n: int, article_id: str = "a") -> list[StatementRecord]:
    records = []
    for i in range(n):
        records.append(
            StatementRecord(
                article_id=article_id,
                sentence_index=i + 1,
                who=rng.choice(IDS),
                whom=rng.choice(IDS),
                value=rng.choice((-1, 1)),
            )
        )
    return records


def apply_all(records, scope: str = ARTICLE) -> PolarityLedger:
    ledger = PolarityLedger(scope)
    for record in records:
        ledger.apply(record)
    return ledger


def brute_article_score(records, whom: str):
    """Oracle: score straight from the statement list, no ledger."""
    values = [r.value for r in records if r.whom == whom]
    if not values:
        return NEUTRAL
    return Fraction(sum(values), len(values))


def random_sentence_tokens(rng: random.Random, with_negations: bool = True) -> list[str]:
    tokens = []
    for _ in range(rng.randint(2, 10)):
        kind = rng.random()
        if kind < 0.30:
            tokens.append(rng.choice(_ENTITIES))
        elif kind < 0.55:
            tokens.append(rng.choice(_OPINIONS))
        elif kind < 0.70:
            tokens.append(rng.choice(_REPORTING))
        elif with_negations and kind < 0.80:
            tokens.append(rng.choice(_NEGATIONS))
        else:
            tokens.append(rng.choice(_PLAIN))
    return tokens


def random_article(rng: random.Random, article_id: str = "a",
                   sentences: int | None = None) -> RawArticle:
    sentences = sentences if sentences is not None else rng.randint(1, 4)
    body = " ".join(
        " ".join(random_sentence_tokens(rng)) + "." for _ in range(sentences)
    )
    return RawArticle(article_id=article_id, outlet_id="out", body=body)


def random_prior(rng: random.Random, n: int = 12) -> PolarityLedger:
    return apply_all(random_records(rng, n), scope=CUMULATIVE)


def random_kb(rng: random.Random) -> KnowledgeBase:
    """Directly assembled knowledge base honoring every invariant."""
    processed = {f"a{i}" for i in range(rng.randint(0, 6))}
    ledger = PolarityLedger(CUMULATIVE)
    if processed:
        for record in random_records(rng, rng.randint(0, 20)):
            ledger.apply(record)
    kb = KnowledgeBase(
        cumulative=ledger,
        processed=processed,
        lexicon_fingerprint="f" * 64 if processed else None,
    )
    article_pool = sorted(processed)
    if article_pool:
        for _ in range(rng.randint(0, 5)):
            outlet = rng.choice(("k", "m"))
            whom = rng.choice(IDS)
            used = {
                aid for aid, _ in kb.history.entries(outlet, whom)
            }
            candidates = [a for a in article_pool if a not in used]
            if not candidates:
                continue
            num = rng.randint(-8, 8)
            den = rng.randint(max(1, abs(num)), 12)
            kb.history.record(outlet, whom, rng.choice(candidates), Fraction(num, den))
    return kb
