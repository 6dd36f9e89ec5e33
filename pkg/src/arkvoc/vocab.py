"""Vocabulary store: term records under one NAAN + shoulder + sub-namespace.

Input is a JSON document {id, title, naan, shoulder, subspace, terms:
[{name?, pref_label, alt_labels?, notes?, broader?, narrower?,
related?, sources?}]} where the link fields hold preferred-label
strings, the way printed subject-heading volumes express relations.
Terms without an explicit name get one minted. Every term's full ARK is
ark:/<naan>/<shoulder><subspace>/<name>.
"""

from dataclasses import dataclass, field

from arkvoc import anvl, core, minter
from arkvoc.errors import ArkvocError
from arkvoc.indexer import normalize_label

_SKOS = "http://www.w3.org/2004/02/skos/core#"
_DC_SOURCE = "http://purl.org/dc/terms/source"

DEFAULT_RESOLVER_HOST = "n2t.net"


class VocabError(ArkvocError):
    pass


@dataclass(frozen=True)
class TermReference:
    """Link to another term: resolved to a name, or dangling label text."""

    label: str
    target: str = ""

    @property
    def resolved(self) -> bool:
        return bool(self.target)


@dataclass(frozen=True)
class Term:
    name: str
    pref_label: str
    alt_labels: tuple = ()
    notes: tuple = ()
    broader: tuple = ()
    narrower: tuple = ()
    related: tuple = ()
    sources: tuple = ()


@dataclass
class Vocabulary:
    id: str
    title: str
    naan: str
    shoulder: str
    subspace: str
    terms: dict = field(default_factory=dict)
    label_index: dict = field(default_factory=dict)

    @property
    def assigned_name(self) -> str:
        return self.shoulder + self.subspace


@dataclass
class LoadResult:
    vocabulary: Vocabulary
    warnings: list
    minter_state: object = None


def term_ark(v: Vocabulary, name: str) -> core.ArkName:
    return core.ArkName(v.naan, v.assigned_name, (name,))


def term_uri(v: Vocabulary, name: str, resolver_host: str = DEFAULT_RESOLVER_HOST) -> str:
    return core.to_uri(term_ark(v, name), resolver_host)


def _require(document, key, kind=str):
    value = document.get(key)
    if not isinstance(value, kind) or (kind is str and not value):
        raise VocabError("invalid-document", f"field {key!r} missing or not a non-empty {kind.__name__}")
    return value


def _str_list(entry, key, label):
    raw = entry.get(key, [])
    if not isinstance(raw, list) or any(not isinstance(x, str) for x in raw):
        raise VocabError("invalid-document", f"term {label!r}: {key} must be a list of strings")
    return raw


_LINK_FIELDS = ("broader", "narrower", "related")


def load_vocabulary(document, minter_state=None) -> LoadResult:
    """Build a Vocabulary from its JSON document.

    Terms lacking a name are minted in ascending pref_label order so a
    given document plus a given minter state always produces the same
    names. Link labels resolve against preferred labels only; anything
    unmatched (including a term pointing at itself) stays a dangling
    reference and produces a warning.
    """
    vocab_id = _require(document, "id")
    naan = _require(document, "naan")
    if not naan.isascii() or not naan.isdigit():
        raise VocabError("invalid-document", f"naan {naan!r} is not a digit string")
    shoulder = _require(document, "shoulder")
    subspace = document.get("subspace", "")
    if not isinstance(subspace, str):
        raise VocabError("invalid-document", "subspace must be a string")
    if not core.is_betanumeric(shoulder + subspace) or not shoulder + subspace:
        raise VocabError("invalid-document", f"shoulder+subspace {shoulder + subspace!r} is not betanumeric")
    title = document.get("title", vocab_id)
    entries = document.get("terms", [])
    if not isinstance(entries, list):
        raise VocabError("invalid-document", "terms must be a list")

    by_label = {}
    names = set()
    loose = []
    for entry in entries:
        if not isinstance(entry, dict):
            raise VocabError("invalid-document", "each term must be an object")
        pref = entry.get("pref_label")
        if not isinstance(pref, str) or not pref:
            raise VocabError("invalid-document", "term lacks a pref_label")
        if pref in by_label:
            raise VocabError("duplicate-pref-label", f"two terms share pref_label {pref!r}")
        by_label[pref] = entry
        name = entry.get("name", "")
        if name:
            if not core.is_betanumeric(name):
                raise VocabError("invalid-name", f"term {pref!r}: name {name!r} is not betanumeric")
            if name in names:
                raise VocabError("duplicate-explicit-name", f"name {name!r} assigned twice")
            names.add(name)
        else:
            loose.append(pref)

    minted = {}
    state = minter_state
    if loose:
        if state is None:
            raise VocabError("minter-required", f"{len(loose)} terms lack names and no minter was given")
        for pref in sorted(loose):
            name, state = minter.mint(state)
            while name in names:
                # explicit names may occupy minted slots; skip them
                name, state = minter.mint(state)
            names.add(name)
            minted[pref] = name

    vocabulary = Vocabulary(id=vocab_id, title=title, naan=naan,
                            shoulder=shoulder, subspace=subspace)
    warnings = []
    name_by_pref = {pref: entry.get("name") or minted[pref] for pref, entry in by_label.items()}

    def resolve(pref, key, labels):
        refs = []
        for label in labels:
            target = name_by_pref.get(label, "")
            if target and target == name_by_pref[pref]:
                warnings.append(f"term {pref!r}: {key} reference to itself left dangling")
                target = ""
            elif not target:
                warnings.append(f"term {pref!r}: {key} reference {label!r} does not match any preferred label")
            refs.append(TermReference(label=label, target=target))
        return tuple(refs)

    for pref, entry in by_label.items():
        term = Term(
            name=name_by_pref[pref],
            pref_label=pref,
            alt_labels=tuple(_str_list(entry, "alt_labels", pref)),
            notes=tuple(_str_list(entry, "notes", pref)),
            broader=resolve(pref, "broader", _str_list(entry, "broader", pref)),
            narrower=resolve(pref, "narrower", _str_list(entry, "narrower", pref)),
            related=resolve(pref, "related", _str_list(entry, "related", pref)),
            sources=tuple(_str_list(entry, "sources", pref)),
        )
        vocabulary.terms[term.name] = term
        for label in (term.pref_label, *term.alt_labels):
            key = normalize_label(label)
            vocabulary.label_index.setdefault(key, [])
            if term.name not in vocabulary.label_index[key]:
                vocabulary.label_index[key].append(term.name)
    for key in vocabulary.label_index:
        vocabulary.label_index[key] = tuple(sorted(vocabulary.label_index[key]))
    return LoadResult(vocabulary, warnings, state)


def get_term(v: Vocabulary, name: str):
    """Exact name lookup; None when absent."""
    return v.terms.get(name)


def find_by_label(v: Vocabulary, label: str):
    """Terms whose preferred or alternate label normalizes to this label."""
    names = v.label_index.get(normalize_label(label), ())
    return [v.terms[name] for name in names]


def _reference_value(v: Vocabulary, ref: TermReference) -> str:
    if ref.resolved:
        return core.canonical_string(term_ark(v, ref.target))
    return ref.label


def term_record(v: Vocabulary, term: Term) -> str:
    """ANVL metadata record for one term.

    Key order is fixed: ark, label, alternate*, note*, broader*,
    narrower*, related*, source*, vocabulary. Resolved references print
    as canonical ARKs, dangling ones as their label text.
    """
    pairs = [("ark", core.canonical_string(term_ark(v, term.name))),
             ("label", term.pref_label)]
    pairs.extend(("alternate", x) for x in term.alt_labels)
    pairs.extend(("note", x) for x in term.notes)
    pairs.extend(("broader", _reference_value(v, r)) for r in term.broader)
    pairs.extend(("narrower", _reference_value(v, r)) for r in term.narrower)
    pairs.extend(("related", _reference_value(v, r)) for r in term.related)
    pairs.extend(("source", x) for x in term.sources)
    pairs.append(("vocabulary", v.title))
    return anvl.format_record(pairs)


def _nt_escape(value: str) -> str:
    out = []
    for ch in value:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        else:
            out.append(ch)
    return "".join(out)


def linked_data(v: Vocabulary, resolver_host: str = DEFAULT_RESOLVER_HOST) -> str:
    """N-Triples export, one line per field value, sorted.

    Subjects are resolver URIs of the term ARKs; predicates are the
    SKOS concept vocabulary plus a Dublin Core source predicate.
    Resolved references become URI objects, dangling ones literals.
    """
    lines = []

    def uri(name):
        return f"https://{resolver_host}/" + core.canonical_string(term_ark(v, name))

    def emit(subject, predicate, obj):
        lines.append(f"<{subject}> <{predicate}> {obj} .")

    def literal(value):
        return f'"{_nt_escape(value)}"'

    for term in v.terms.values():
        subject = uri(term.name)
        emit(subject, _SKOS + "prefLabel", literal(term.pref_label))
        for alt in term.alt_labels:
            emit(subject, _SKOS + "altLabel", literal(alt))
        for note in term.notes:
            emit(subject, _SKOS + "note", literal(note))
        for key, refs in (("broader", term.broader), ("narrower", term.narrower),
                          ("related", term.related)):
            for ref in refs:
                obj = f"<{uri(ref.target)}>" if ref.resolved else literal(ref.label)
                emit(subject, _SKOS + key, obj)
        for source in term.sources:
            emit(subject, _DC_SOURCE, literal(source))
    lines.sort()
    return "\n".join(lines) + "\n" if lines else ""


def vocab_record(v: Vocabulary) -> str:
    """ANVL summary for the vocabulary itself (its shoulder-level ARK)."""
    ark = core.ArkName(v.naan, v.assigned_name)
    return anvl.format_record([
        ("ark", core.canonical_string(ark)),
        ("vocabulary", v.title),
        ("id", v.id),
        ("terms", len(v.terms)),
    ])


def document_with_names(document, result: LoadResult):
    """Copy of the input document with every minted name filled in."""
    out = dict(document)
    terms = []
    for entry in document.get("terms", []):
        entry = dict(entry)
        if not entry.get("name"):
            matches = find_by_label(result.vocabulary, entry["pref_label"])
            for term in matches:
                if term.pref_label == entry["pref_label"]:
                    entry["name"] = term.name
                    break
        terms.append(entry)
    out["terms"] = terms
    return out
