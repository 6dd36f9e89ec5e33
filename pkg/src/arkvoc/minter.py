"""Opaque name minting from a template mask, noid style.

A template is a mask over ``d`` (decimal digit), ``e`` (any of the 29
betanumeric characters), and an optional final ``k`` (check character
computed over the minter's prefix plus the encoded payload). Minting
walks the index space either sequentially or along a full-cycle
quasi-random permutation; either way every index in [0, capacity) is
visited exactly once, so names never repeat until exhaustion.
"""

import math
import os
import tempfile
from dataclasses import dataclass, replace

from arkvoc import anvl
from arkvoc._backend import ALPHABET, check_char
from arkvoc.errors import ArkvocError

MODES = ("sequential", "quasi_random")
DEFAULT_TEMPLATE = "eedddddk"


class MinterError(ArkvocError):
    pass


@dataclass(frozen=True)
class MinterState:
    template: str
    prefix: str = ""
    mode: str = "sequential"
    counter: int = 0
    multiplier: int = 1
    offset: int = 0


def validate_template(template: str) -> None:
    if not template:
        raise MinterError("bad-template", "template is empty")
    if any(ch not in "dek" for ch in template):
        raise MinterError("bad-template", f"template {template!r} may use only d, e, k")
    if "k" in template[:-1] or template.count("k") > 1:
        raise MinterError("bad-template", f"{template!r}: k is allowed once, in final position")
    if not any(ch in "de" for ch in template):
        raise MinterError("bad-template", f"{template!r}: no value positions")


def capacity(template: str) -> int:
    validate_template(template)
    total = 1
    for ch in template:
        if ch == "d":
            total *= 10
        elif ch == "e":
            total *= 29
    return total


def encode(template: str, index: int, prefix: str = "") -> str:
    """Mixed-radix encoding of index; rightmost mask position varies fastest."""
    cap = capacity(template)
    if not 0 <= index < cap:
        raise MinterError("index-out-of-range", f"index {index} not in [0, {cap})")
    mask = template[:-1] if template.endswith("k") else template
    chars = []
    remaining = index
    for ch in reversed(mask):
        radix = 10 if ch == "d" else 29
        remaining, value = divmod(remaining, radix)
        chars.append(ALPHABET[value])
    payload = "".join(reversed(chars))
    if template.endswith("k"):
        payload += check_char(prefix + payload)
    return payload


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def default_multiplier(cap: int) -> int:
    """Smallest prime above cap/2 that is coprime to cap."""
    n = cap // 2 + 1
    while True:
        if _is_prime(n) and math.gcd(n, cap) == 1:
            return n
        n += 1


def new_state(template: str = DEFAULT_TEMPLATE, prefix: str = "",
              mode: str = "sequential", seed: int = 0) -> MinterState:
    cap = capacity(template)
    if mode not in MODES:
        raise MinterError("bad-mode", f"mode must be one of {MODES}, got {mode!r}")
    if mode == "quasi_random":
        return MinterState(template, prefix, mode,
                           multiplier=default_multiplier(cap),
                           offset=seed % cap)
    return MinterState(template, prefix, mode)


def mint(state: MinterState):
    """Mint the next name; returns (name, advanced state).

    The name is the bare encoded payload (blade position); the prefix
    participates only in the trailing check character.
    """
    cap = capacity(state.template)
    if state.counter >= cap:
        raise MinterError("minter-exhausted", f"capacity {cap} reached")
    if state.mode == "quasi_random":
        if math.gcd(state.multiplier, cap) != 1:
            raise MinterError("bad-multiplier", "multiplier shares a factor with capacity")
        index = (state.counter * state.multiplier + state.offset) % cap
    else:
        index = state.counter
    return encode(state.template, index, state.prefix), replace(state, counter=state.counter + 1)


def save_state(state: MinterState, path: str) -> None:
    """Write state atomically (write to a temp file, then rename)."""
    text = anvl.format_record([
        ("template", state.template),
        ("prefix", state.prefix),
        ("mode", state.mode),
        ("counter", state.counter),
        ("multiplier", state.multiplier),
        ("offset", state.offset),
    ])
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".minter-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise MinterError("io-failure", f"cannot write state to {path}: {exc}") from exc


def load_state(path: str) -> MinterState:
    if not os.path.exists(path):
        raise MinterError("missing-state-file", f"no state file at {path}")
    try:
        with open(path, encoding="utf-8") as handle:
            pairs = anvl.parse_record(handle.read())
    except (OSError, ArkvocError) as exc:
        raise MinterError("corrupt-state-file", f"{path}: {exc}") from exc
    try:
        template = anvl.first(pairs, "template")
        validate_template(template or "")
        mode = anvl.first(pairs, "mode")
        if mode not in MODES:
            raise ValueError(f"bad mode {mode!r}")
        state = MinterState(
            template=template,
            prefix=anvl.first(pairs, "prefix", ""),
            mode=mode,
            counter=int(anvl.first(pairs, "counter")),
            multiplier=int(anvl.first(pairs, "multiplier")),
            offset=int(anvl.first(pairs, "offset")),
        )
    except (TypeError, ValueError, ArkvocError) as exc:
        raise MinterError("corrupt-state-file", f"{path}: {exc}") from exc
    if not 0 <= state.counter <= capacity(state.template):
        raise MinterError("corrupt-state-file", f"{path}: counter out of range")
    return state
