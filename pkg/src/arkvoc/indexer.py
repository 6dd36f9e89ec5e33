"""Automatic subject indexing and temporal concept-drift metrics.

Candidate keyphrases are word n-grams of the normalized document text;
a candidate matches a vocabulary term when it equals (exactly, after
normalization) the term's preferred or any alternate label. There is no
stemming or fuzzy matching on purpose: the drift metrics ask whether a
historical term still exists in a newer vocabulary *as an exact match*,
so `School` and `Schools` must stay distinct.

The candidate n-gram scheme is a deterministic stand-in for the
candidate-extraction step of interactive vocabulary servers; it is the
documented, reproducible contract here, not a claim about any
particular production system.
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from arkvoc import core

#: Fixed stopword list; candidates never start or end with one of these.
#: Versioned with the package so results are reproducible.
STOPWORDS = frozenset("""
a about above after again all also am an and any are as at be because been
before being below between both but by could did do does doing down during
each few for from further had has have having he her here hers him his how
i if in into is it its just me more most my no nor not now of off on once
only or other our ours out over own same she should so some such than that
the their theirs them then there these they this those through to too under
until up very was we were what when where which while who whom why will
with would you your yours
""".split())

_NON_WORD = re.compile(r"[\W_]+", re.UNICODE)


def normalize_label(s: str) -> str:
    """Lowercase, punctuation to spaces, whitespace collapsed and trimmed."""
    return " ".join(_NON_WORD.sub(" ", s.lower()).split())


def extract_candidates(text: str, max_n: int = 3):
    """All word n-grams (1..max_n) not bounded by a stopword, with counts.

    Ordered by descending count, then phrase.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    words = normalize_label(text).split()
    counts = {}
    for n in range(1, max_n + 1):
        for i in range(len(words) - n + 1):
            gram = words[i:i + n]
            if gram[0] in STOPWORDS or gram[-1] in STOPWORDS:
                continue
            phrase = " ".join(gram)
            counts[phrase] = counts.get(phrase, 0) + 1
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


@dataclass(frozen=True)
class Match:
    term_name: str
    ark: str
    label: str
    pref_label: str
    phrase_len: int
    count: int
    score: int


@dataclass(frozen=True)
class IndexResult:
    doc_id: str
    vocab_id: str
    matches: tuple


def _term_ark(vocabulary, name: str) -> str:
    ark = core.ArkName(vocabulary.naan, vocabulary.shoulder + vocabulary.subspace, (name,))
    return core.canonical_string(ark)


def index(text: str, vocabularies, max_n: int = 3, top_k=None, doc_id: str = "doc"):
    """Index one document against each vocabulary in input order.

    A candidate phrase matches a term when its normalized form equals a
    normalized preferred or alternate label of that term; score is
    count times phrase word length. Matches are sorted by descending
    score, ties by term name, and truncated to top_k when given.
    """
    candidates = dict(extract_candidates(text, max_n))
    results = []
    for vocabulary in vocabularies:
        found = {}
        for phrase, count in candidates.items():
            names = vocabulary.label_index.get(phrase)
            if not names:
                continue
            phrase_len = len(phrase.split())
            for name in names:
                term = vocabulary.terms[name]
                label = _matching_label(term, phrase)
                key = (name, phrase)
                if key in found:
                    continue
                found[key] = Match(
                    term_name=name,
                    ark=_term_ark(vocabulary, name),
                    label=label,
                    pref_label=term.pref_label,
                    phrase_len=phrase_len,
                    count=count,
                    score=count * phrase_len,
                )
        matches = sorted(found.values(), key=lambda m: (-m.score, m.term_name, m.label))
        if top_k is not None:
            matches = matches[:top_k]
        results.append(IndexResult(doc_id=doc_id, vocab_id=vocabulary.id, matches=tuple(matches)))
    return results


def _matching_label(term, normalized_phrase: str) -> str:
    if normalize_label(term.pref_label) == normalized_phrase:
        return term.pref_label
    for alt in term.alt_labels:
        if normalize_label(alt) == normalized_phrase:
            return alt
    # label_index guarantees one of the labels normalizes to the phrase
    raise AssertionError(f"label index out of sync for {term.name!r}")


@dataclass(frozen=True)
class DriftReport:
    """Share of one result set's terms missing from a comparison target.

    The fraction keeps its explicit numerator and denominator because
    published drift percentages are ambiguous about their denominator;
    printing both removes the ambiguity.
    """

    kind: str
    numerator: int
    denominator: int
    terms: tuple
    undefined: bool = False

    @property
    def fraction(self) -> Fraction:
        if self.denominator == 0:
            return Fraction(0)
        return Fraction(self.numerator, self.denominator)


def _pref_keys(result: IndexResult):
    keys = {}
    for match in result.matches:
        keys.setdefault(normalize_label(match.pref_label), match.pref_label)
    return keys


def drift_exclusive(result_a: IndexResult, result_b: IndexResult) -> DriftReport:
    """Fraction of A's matched terms absent from B's matches.

    Terms are compared by normalized preferred label. Empty A yields a
    zero fraction flagged undefined.
    """
    a_keys = _pref_keys(result_a)
    if not a_keys:
        return DriftReport("exclusive", 0, 0, (), undefined=True)
    b_keys = set(_pref_keys(result_b))
    missing = sorted(k for k in a_keys if k not in b_keys)
    return DriftReport("exclusive", len(missing), len(a_keys),
                       tuple(a_keys[k] for k in missing))


def drift_vocab_absence(result_a: IndexResult, vocab_b) -> DriftReport:
    """Fraction of A's matched terms with no exact label match in vocab_b.

    A term is absent when its normalized preferred label equals no
    normalized preferred or alternate label anywhere in vocab_b.
    """
    a_keys = _pref_keys(result_a)
    if not a_keys:
        return DriftReport("vocab-absence", 0, 0, (), undefined=True)
    absent = sorted(k for k in a_keys if k not in vocab_b.label_index)
    return DriftReport("vocab-absence", len(absent), len(a_keys),
                       tuple(a_keys[k] for k in absent))


def format_drift_anvl(report: DriftReport) -> str:
    from arkvoc import anvl

    pairs = [
        ("drift", report.kind),
        ("numerator", report.numerator),
        ("denominator", report.denominator),
        ("fraction", f"{report.numerator}/{report.denominator}" if report.denominator else "0/0"),
    ]
    if report.undefined:
        pairs.append(("undefined", "true"))
    pairs.extend(("term", t) for t in report.terms)
    return anvl.format_record(pairs)


def format_matches_lines(results) -> str:
    """One tab-separated line per match: doc, vocab, ark, label, count, score."""
    lines = []
    for result in results:
        for m in result.matches:
            lines.append("\t".join([result.doc_id, result.vocab_id, m.ark,
                                    m.label, str(m.count), str(m.score)]))
    return "\n".join(lines) + "\n" if lines else ""


def format_matches_json(results) -> str:
    payload = [
        {
            "doc_id": r.doc_id,
            "vocab_id": r.vocab_id,
            "matches": [
                {
                    "term_name": m.term_name,
                    "ark": m.ark,
                    "label": m.label,
                    "pref_label": m.pref_label,
                    "phrase_len": m.phrase_len,
                    "count": m.count,
                    "score": m.score,
                }
                for m in r.matches
            ],
        }
        for r in results
    ]
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
