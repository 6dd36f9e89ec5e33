# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled check-character kernels.

Same contract as ``arkvoc._kernels_py``, which is the reference
implementation the backend tests compare against. The sweep here uses
incremental weighted sums instead of re-scanning each corrupted string;
the arithmetic is exact, and equivalence with the full-recompute twin is
pinned by tests at small blade lengths.
"""

BACKEND = "cython"

ALPHABET = "0123456789bcdfghjkmnpqrstvwxz"

cdef int _RADIX = 29
cdef int _VAL[256]
cdef unsigned char _IN[256]
cdef unsigned char _CHR[29]


def _init_tables():
    cdef int i
    b = ALPHABET.encode("ascii")
    for i in range(256):
        _VAL[i] = 0
        _IN[i] = 0
    for i in range(29):
        _VAL[<unsigned char> b[i]] = i
        _IN[<unsigned char> b[i]] = 1
        _CHR[i] = <unsigned char> b[i]


_init_tables()


def weighted_sum(s: str):
    """Sum of position*value, 1-based positions, non-alphabet chars count 0."""
    cdef Py_ssize_t i, n = len(s)
    cdef long long total = 0
    cdef Py_UCS4 ch
    for i in range(n):
        ch = s[i]
        if ch < 256:
            total += (i + 1) * _VAL[<int> ch]
    return total


def check_char(s: str) -> str:
    return ALPHABET[weighted_sum(s) % _RADIX]


def verify_check(s: str):
    cdef Py_ssize_t n = len(s)
    if n == 0:
        return False
    return s[n - 1] == ALPHABET[weighted_sum(s[:n - 1]) % _RADIX]


def corruption_sweep(prefix: str, max_blade_len: int):
    """Exhaustive substitution/transposition sweep over checked strings.

    Semantics match _kernels_py.corruption_sweep; returns
    (base strings, corrupted strings tested, undetected).
    """
    pb = prefix.encode("ascii")
    cdef int plen = len(pb)
    cdef int maxb = max_blade_len
    if maxb < 0 or maxb > 12:
        raise ValueError("max_blade_len out of supported range 0..12")
    if plen + maxb + 1 > 120:
        raise ValueError("prefix too long for sweep buffer")
    cdef unsigned char buf[136]
    cdef int idx[16]
    cdef long long bases = 0, corrupted = 0, undetected = 0
    cdef long long S, S2
    cdef long long prefix_sum = 0
    cdef int blade_len, i, pos, n, L, vco, vorig, valt, v1, v2
    cdef const unsigned char* p = pb
    for i in range(plen):
        buf[i] = p[i]
        prefix_sum += (i + 1) * _VAL[p[i]]
    for blade_len in range(1, maxb + 1):
        n = plen + blade_len          # payload length, check char excluded
        L = n + 1
        for i in range(blade_len):
            idx[i] = 0
            buf[plen + i] = _CHR[0]
        while True:
            S = prefix_sum
            for i in range(blade_len):
                # alphabet char _CHR[k] has value k, so idx is the value
                S += (plen + i + 1) * idx[i]
            vco = <int> (S % 29)
            buf[n] = _CHR[vco]
            bases += 1
            # substitutions: every position, every different-valued alphabet char
            for pos in range(L):
                vorig = _VAL[buf[pos]]
                for valt in range(29):
                    if valt == vorig:
                        continue
                    corrupted += 1
                    if pos < n:
                        # S2 is the corrupted payload's true weighted sum, so >= 0
                        S2 = S + (pos + 1) * (valt - vorig)
                        if S2 % 29 == vco:
                            undetected += 1
                    elif valt == vco:
                        undetected += 1
            # adjacent transpositions; equal-value pairs exempt
            for pos in range(L - 1):
                v1 = _VAL[buf[pos]]
                v2 = _VAL[buf[pos + 1]]
                if v1 == v2:
                    continue
                corrupted += 1
                if pos + 1 < n:
                    # swap inside the payload shifts the sum by exactly v1-v2;
                    # S dominates v2 at weight >= 2, so the operand stays >= 0
                    if (S + v1 - v2) % 29 == vco:
                        undetected += 1
                else:
                    # swap of payload-last with the check char: new last char
                    # is the old payload-last, new payload ends with old check
                    S2 = S - (<long long> n) * v1 + (<long long> n) * v2
                    if _IN[buf[pos]] and S2 % 29 == v1:
                        undetected += 1
            # odometer over the blade, rightmost position fastest
            i = blade_len - 1
            while i >= 0:
                idx[i] += 1
                if idx[i] < 29:
                    buf[plen + i] = _CHR[idx[i]]
                    break
                idx[i] = 0
                buf[plen + i] = _CHR[0]
                i -= 1
            if i < 0:
                break
    return bases, corrupted, undetected
