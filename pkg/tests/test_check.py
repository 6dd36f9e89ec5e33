import pytest
from hypothesis import given, strategies as st

from arkvoc import core
from arkvoc._backend import corruption_sweep

from .oracles import R, check_char_oracle, verify_check_oracle, witness_sweep


class TestWeightedSum:
    def test_worked_example(self):
        # 9*1 + 9*2 + 1*3 + 5*4 + 2*5 + 0*6 + 10*7 + 4*8 = 162
        assert core.weighted_sum("99152/b4") == sum(
            (i + 1) * (R.index(ch) if ch in R else 0)
            for i, ch in enumerate("99152/b4")
        )
        assert core.weighted_sum("99152/b4") == 162

    def test_empty(self):
        assert core.weighted_sum("") == 0

    def test_non_alphabet_contributes_zero(self):
        assert core.weighted_sum("/") == 0
        assert core.weighted_sum("0") == 0
        assert core.weighted_sum("z") == 28


class TestCheckChar:
    def test_spec_value(self):
        assert core.check_char("99152/b4") == "k"
        assert 162 % 29 == 17 and R[17] == "k"

    def test_matches_oracle_on_examples(self):
        for s in ("99152/b4", "12345/x54xz321", "99152/b41910/5p30086", ""):
            assert core.check_char(s) == check_char_oracle(s)

    @given(st.text(alphabet=R + "/-.", max_size=40))
    def test_matches_oracle(self, s):
        assert core.check_char(s) == check_char_oracle(s)


class TestVerifyCheck:
    def test_valid(self):
        assert core.verify_check("99152/b4k")

    def test_invalid(self):
        assert not core.verify_check("99152/b4x")

    def test_empty_false(self):
        assert not core.verify_check("")

    def test_final_char_outside_alphabet_false(self):
        assert not core.verify_check("99152/b4A")

    @given(st.text(alphabet=R + "/", max_size=40))
    def test_append_then_verify(self, s):
        assert core.verify_check(s + core.check_char(s))
        assert verify_check_oracle(s + core.check_char(s))

    @given(st.text(alphabet=R + "/", min_size=0, max_size=40), st.data())
    def test_substitution_flips_verification(self, s, data):
        # substituting any single payload character with one of a different
        # value breaks the check, by linearity of the weighted sum
        full = s + core.check_char(s)
        pos = data.draw(st.integers(min_value=0, max_value=len(full) - 1))
        orig = full[pos]
        orig_val = R.index(orig) if orig in R else 0
        alt = data.draw(st.sampled_from(R))
        if R.index(alt) == orig_val:
            return
        corrupted = full[:pos] + alt + full[pos + 1:]
        assert not core.verify_check(corrupted)


class TestCorruptionSweep:
    def test_blade_one(self):
        bases, corrupted, undetected = corruption_sweep("99152/", 1)
        assert bases == 29
        assert undetected == 0
        assert corrupted > 0

    def test_blade_two_counts(self):
        bases, corrupted, undetected = corruption_sweep("99152/", 2)
        # 29 one-char blades + 29^2 two-char blades
        assert bases == 29 + 29 * 29
        assert undetected == 0

    def test_no_prefix(self):
        bases, corrupted, undetected = corruption_sweep("", 1)
        assert bases == 29
        assert undetected == 0


class TestWitnessSweep:
    def test_strata_detect_everything(self):
        for blade_len in (2, 3, 5):
            cases, undetected = witness_sweep(
                "99152/", blade_len, core.check_char, core.verify_check)
            assert cases > 0
            assert undetected == 0

    def test_oracle_agrees_with_itself(self):
        cases, undetected = witness_sweep(
            "99152/", 4, check_char_oracle, verify_check_oracle)
        assert cases > 0
        assert undetected == 0
