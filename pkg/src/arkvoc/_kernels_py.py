"""Pure-Python check-character kernels.

Twin of the compiled ``arkvoc._ckernels`` module; ``arkvoc._backend``
picks whichever is available at import time. Both implement the same
position-weighted mod-29 arithmetic over the betanumeric alphabet.
"""

from itertools import product

BACKEND = "python"

#: Betanumeric alphabet: digits plus lowercase consonants minus `l`.
ALPHABET = "0123456789bcdfghjkmnpqrstvwxz"

_VALUE = {c: i for i, c in enumerate(ALPHABET)}
_RADIX = len(ALPHABET)


def weighted_sum(s: str) -> int:
    """Sum of position*value over the string, 1-based positions.

    Characters outside the alphabet (the `/` separator in particular)
    count as value 0 but still occupy a position.
    """
    total = 0
    get = _VALUE.get
    for i, ch in enumerate(s, start=1):
        total += i * get(ch, 0)
    return total


def check_char(s: str) -> str:
    return ALPHABET[weighted_sum(s) % _RADIX]


def verify_check(s: str) -> bool:
    if not s:
        return False
    return s[-1] == ALPHABET[weighted_sum(s[:-1]) % _RADIX]


def corruption_sweep(prefix: str, max_blade_len: int) -> tuple[int, int, int]:
    """Exhaustively corrupt every checked string built on ``prefix``.

    For every blade over the alphabet with 1..max_blade_len characters,
    the full string prefix+blade+check is corrupted by (a) substituting
    each character with every alphabet character of different value and
    (b) every adjacent transposition of characters with distinct values.
    Every corrupted string is run through verify_check and must fail.

    Returns (base strings, corrupted strings tested, undetected).
    Cost grows as 29**max_blade_len; the compiled twin is the one to use
    beyond blade length 3.
    """
    value = _VALUE.get
    alpha = ALPHABET
    bases = 0
    corrupted = 0
    undetected = 0
    for blade_len in range(1, max_blade_len + 1):
        for blade in product(alpha, repeat=blade_len):
            payload = prefix + "".join(blade)
            full = list(payload + check_char(payload))
            bases += 1
            n = len(full)
            for pos in range(n):
                orig = full[pos]
                v = value(orig, 0)
                for alt in alpha:
                    if value(alt) == v:
                        continue
                    full[pos] = alt
                    corrupted += 1
                    if verify_check("".join(full)):
                        undetected += 1
                full[pos] = orig
            for pos in range(n - 1):
                if value(full[pos], 0) == value(full[pos + 1], 0):
                    continue
                full[pos], full[pos + 1] = full[pos + 1], full[pos]
                corrupted += 1
                if verify_check("".join(full)):
                    undetected += 1
                full[pos], full[pos + 1] = full[pos + 1], full[pos]
    return bases, corrupted, undetected
