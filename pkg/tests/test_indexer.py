from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from arkvoc import indexer, vocab
from arkvoc.indexer import STOPWORDS, normalize_label

from .oracles import naive_index_oracle


class TestNormalize:
    def test_examples(self):
        assert normalize_label("Abbeys") == "abbeys"
        assert normalize_label("  Houses -- Religious  ") == "houses religious"
        assert normalize_label("G.P.O., Library Branch") == "g p o library branch"
        assert normalize_label("under_score") == "under score"

    def test_empty(self):
        assert normalize_label("") == ""
        assert normalize_label(" .,;! ") == ""

    @given(st.text(max_size=60))
    def test_idempotent(self, s):
        once = normalize_label(s)
        assert normalize_label(once) == once


class TestCandidates:
    def test_ngram_window(self):
        got = dict(indexer.extract_candidates("red brick house", max_n=2))
        assert got == {"red": 1, "brick": 1, "house": 1,
                       "red brick": 1, "brick house": 1}

    def test_stopword_boundaries(self):
        got = dict(indexer.extract_candidates("the house of lords", max_n=3))
        # grams starting or ending on a stopword are dropped; interior
        # stopwords are allowed
        assert "house" in got and "lords" in got
        assert "house of lords" in got
        assert "the house" not in got and "house of" not in got

    def test_counts(self):
        got = dict(indexer.extract_candidates("dog dog cat", max_n=1))
        assert got == {"dog": 2, "cat": 1}

    def test_order_count_then_phrase(self):
        got = indexer.extract_candidates("dog cat dog", max_n=1)
        assert got == [("dog", 2), ("cat", 1)]

    def test_max_n_validation(self):
        with pytest.raises(ValueError):
            indexer.extract_candidates("x", max_n=0)

    def test_no_stopword_collides_with_fixture_labels(self, twain1910):
        labels = {normalize_label(t.pref_label)
                  for t in twain1910.terms.values()}
        assert labels.isdisjoint(STOPWORDS)


class TestIndex:
    def test_letter_against_both_vocabularies(self, letter_text, twain1910,
                                              fast2020):
        results = indexer.index(letter_text, [twain1910, fast2020])
        assert [r.vocab_id for r in results] == ["twain1910", "fast2020"]
        assert len(results[0].matches) == 12
        assert len(results[1].matches) == 5
        for m in results[0].matches:
            assert m.count == 1 and m.phrase_len == 1 and m.score == 1

    def test_match_carries_ark(self, letter_text, twain1910):
        result = indexer.index(letter_text, [twain1910])[0]
        assert all(m.ark.startswith("ark:/99152/b41910/")
                   for m in result.matches)

    def test_alt_label_matches_but_reports_pref(self, letter_text):
        d = {"id": "v", "title": "V", "naan": "99152", "shoulder": "b4",
             "subspace": "", "terms": [
                 {"name": "b01", "pref_label": "Mental institutions",
                  "alt_labels": ["Asylums"]}]}
        v = vocab.load_vocabulary(d).vocabulary
        result = indexer.index(letter_text, [v])[0]
        assert len(result.matches) == 1
        m = result.matches[0]
        assert m.label == "Asylums"
        assert m.pref_label == "Mental institutions"

    def test_score_is_count_times_length(self):
        d = {"id": "v", "title": "V", "naan": "12345", "shoulder": "x5",
             "subspace": "", "terms": [
                 {"name": "b01", "pref_label": "brick house"}]}
        v = vocab.load_vocabulary(d).vocabulary
        text = "brick house by the brick house"
        result = indexer.index(text, [v])[0]
        assert result.matches[0].count == 2
        assert result.matches[0].score == 4

    def test_sort_and_top_k(self):
        d = {"id": "v", "title": "V", "naan": "12345", "shoulder": "x5",
             "subspace": "", "terms": [
                 {"name": "b01", "pref_label": "cat"},
                 {"name": "b02", "pref_label": "dog"}]}
        v = vocab.load_vocabulary(d).vocabulary
        result = indexer.index("dog dog cat", [v], top_k=1)[0]
        assert [m.label for m in result.matches] == ["dog"]

    def test_exact_match_only(self):
        d = {"id": "v", "title": "V", "naan": "12345", "shoulder": "x5",
             "subspace": "", "terms": [
                 {"name": "b01", "pref_label": "School"}]}
        v = vocab.load_vocabulary(d).vocabulary
        result = indexer.index("schools everywhere", [v])[0]
        assert result.matches == ()

    def test_agrees_with_naive_oracle(self, letter_text, twain1910):
        result = indexer.index(letter_text, [twain1910], max_n=3)[0]
        got = {(m.term_name, normalize_label(m.label)): (m.count, m.score)
               for m in result.matches}
        want = naive_index_oracle(letter_text, twain1910, 3, STOPWORDS,
                                  normalize_label)
        assert got == want


class TestDrift:
    def test_exclusive(self, letter_text, twain1910, fast2020):
        ra, rb = indexer.index(letter_text, [twain1910, fast2020])
        report = indexer.drift_exclusive(ra, rb)
        assert report.kind == "exclusive"
        assert (report.numerator, report.denominator) == (7, 12)
        assert report.fraction == Fraction(7, 12)
        assert not report.undefined

    def test_vocab_absence_terms(self, letter_text, twain1910, fast2020):
        ra = indexer.index(letter_text, [twain1910])[0]
        report = indexer.drift_vocab_absence(ra, fast2020)
        assert report.kind == "vocab-absence"
        assert set(report.terms) == {"Asylums", "Fall", "Idiots",
                                     "Imbecility", "Lays", "School",
                                     "Turning"}
        assert report.fraction == Fraction(7, 12)

    def test_absence_checks_alt_labels_too(self, letter_text, twain1910):
        # a vocabulary holding "School" only as an alternate label still
        # counts as present
        d = {"id": "v", "title": "V", "naan": "99152", "shoulder": "b4",
             "subspace": "2020", "terms": [
                 {"name": "c01", "pref_label": "Educational institutions",
                  "alt_labels": ["School"]}]}
        vb = vocab.load_vocabulary(d).vocabulary
        ra = indexer.index(letter_text, [twain1910])[0]
        report = indexer.drift_vocab_absence(ra, vb)
        assert "School" not in report.terms
        assert report.numerator == 11

    def test_empty_a_is_undefined(self, twain1910, fast2020):
        ra, rb = indexer.index("nothing matches here", [twain1910, fast2020])
        for report in (indexer.drift_exclusive(ra, rb),
                       indexer.drift_vocab_absence(ra, fast2020)):
            assert report.undefined
            assert (report.numerator, report.denominator) == (0, 0)
            assert report.fraction == 0

    def test_identical_results_zero_drift(self, letter_text, twain1910):
        ra = indexer.index(letter_text, [twain1910])[0]
        report = indexer.drift_exclusive(ra, ra)
        assert report.numerator == 0 and report.denominator == 12
        assert report.fraction == 0

    def test_absence_upper_bounds_exclusive(self, letter_text, twain1910,
                                            fast2020):
        # a term absent from the whole vocabulary is in particular absent
        # from its match set
        ra, rb = indexer.index(letter_text, [twain1910, fast2020])
        excl = indexer.drift_exclusive(ra, rb)
        absent = indexer.drift_vocab_absence(ra, fast2020)
        assert set(absent.terms) <= set(excl.terms)


class TestFormatting:
    def test_drift_anvl_keeps_fraction_unreduced(self, letter_text,
                                                 twain1910, fast2020):
        ra = indexer.index(letter_text, [twain1910])[0]
        report = indexer.drift_vocab_absence(ra, fast2020)
        text = indexer.format_drift_anvl(report)
        assert "numerator: 7" in text
        assert "denominator: 12" in text
        assert "fraction: 7/12" in text
        assert text.count("term: ") == 7

    def test_drift_anvl_undefined(self, twain1910, fast2020):
        ra = indexer.index("zzz", [twain1910])[0]
        text = indexer.format_drift_anvl(
            indexer.drift_vocab_absence(ra, fast2020))
        assert "fraction: 0/0" in text
        assert "undefined: true" in text

    def test_lines_format(self, letter_text, twain1910):
        results = indexer.index(letter_text, [twain1910], doc_id="letter")
        text = indexer.format_matches_lines(results)
        lines = text.splitlines()
        assert len(lines) == 12
        first = lines[0].split("\t")
        assert first[0] == "letter" and first[1] == "twain1910"
        assert first[2].startswith("ark:/99152/")

    def test_json_format(self, letter_text, twain1910):
        import json

        results = indexer.index(letter_text, [twain1910])
        payload = json.loads(indexer.format_matches_json(results))
        assert payload[0]["vocab_id"] == "twain1910"
        assert len(payload[0]["matches"]) == 12


words = st.lists(
    st.sampled_from(["school", "schools", "judges", "the", "of", "lays",
                     "building", "fall", "brick", "house"]),
    min_size=0, max_size=30)


@given(words)
def test_drift_bounds(tokens):
    d = {"id": "v", "title": "V", "naan": "12345", "shoulder": "x5",
         "subspace": "", "terms": [
             {"name": "b01", "pref_label": "School"},
             {"name": "b02", "pref_label": "Judges"},
             {"name": "b03", "pref_label": "Brick house"}]}
    v = vocab.load_vocabulary(d).vocabulary
    text = " ".join(tokens)
    ra = indexer.index(text, [v])[0]
    report = indexer.drift_vocab_absence(ra, v)
    # drifting against yourself is always zero (or undefined when empty)
    assert report.numerator == 0
    assert report.fraction == 0
