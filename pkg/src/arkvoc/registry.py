"""NAAN registry: parse, lookup, shared-NAAN classification."""

import enum
from dataclasses import dataclass
from urllib.parse import urlsplit

from arkvoc import anvl
from arkvoc.errors import ArkvocError

_DIGITS = frozenset("0123456789")


class RegistryError(ArkvocError):
    pass


class SharedNaanClass(enum.Enum):
    EXAMPLE = "example"
    TERMS = "terms"
    AGENTS = "agents"
    TEST = "test"
    REGULAR = "regular"


#: The shared namespaces with fixed, registry-independent meanings:
#: documentation examples, vocabulary/ontology terms, agents, and testing.
SHARED_NAANS = {
    "12345": SharedNaanClass.EXAMPLE,
    "99152": SharedNaanClass.TERMS,
    "99166": SharedNaanClass.AGENTS,
    "99999": SharedNaanClass.TEST,
}


@dataclass(frozen=True)
class NaanRecord:
    naan: str
    who: str = ""
    where: str = ""
    when: str = ""
    commitment: str = ""
    extra: tuple = ()


@dataclass(frozen=True)
class Registry:
    records: tuple

    def __post_init__(self):
        object.__setattr__(self, "_by_naan", {r.naan: r for r in self.records})

    def __len__(self):
        return len(self.records)


_KNOWN_KEYS = ("naan", "who", "where", "when", "commitment")


def parse_registry(text: str) -> Registry:
    """Parse blank-line-separated NAAN records.

    Each block needs a ``naan:`` line; ``where:``, when given, must be
    an absolute URL. Unknown keys are kept on the record but have no
    behavior. Duplicate NAANs are an error.
    """
    records = []
    seen = set()
    for block in anvl.parse_blocks(text):
        naan = anvl.first(block, "naan")
        if naan is None:
            raise RegistryError("malformed-block", "registry block lacks a naan: line")
        if not naan or any(ch not in _DIGITS for ch in naan):
            raise RegistryError("malformed-block", f"naan {naan!r} is not a digit string")
        if naan in seen:
            raise RegistryError("duplicate-naan", f"naan {naan} appears more than once")
        seen.add(naan)
        where = anvl.first(block, "where", "")
        if where:
            parts = urlsplit(where)
            if not parts.scheme or not parts.netloc:
                raise RegistryError("bad-url", f"naan {naan}: where {where!r} is not an absolute URL")
        records.append(NaanRecord(
            naan=naan,
            who=anvl.first(block, "who", ""),
            where=where,
            when=anvl.first(block, "when", ""),
            commitment=anvl.first(block, "commitment", ""),
            extra=tuple((k, v) for k, v in block if k not in _KNOWN_KEYS),
        ))
    return Registry(tuple(records))


def serialize_registry(registry: Registry) -> str:
    blocks = []
    for record in registry.records:
        pairs = [("naan", record.naan)]
        for key in _KNOWN_KEYS[1:]:
            value = getattr(record, key)
            if value:
                pairs.append((key, value))
        pairs.extend(record.extra)
        blocks.append(pairs)
    return anvl.format_blocks(blocks)


def lookup(registry: Registry, naan: str):
    """Exact-match lookup; None when absent."""
    return registry._by_naan.get(naan)


def classify_shared(naan: str) -> SharedNaanClass:
    return SHARED_NAANS.get(naan, SharedNaanClass.REGULAR)
