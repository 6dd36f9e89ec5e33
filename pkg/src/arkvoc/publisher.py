"""Static publication of a vocabulary as a versionable directory tree.

Layout under <out_dir>/<vocab-id>/ mirrors the path shape a
Pages-style static host serves without any server logic:

  <name>.html   one page per term
  <name>.txt    the ANVL term record
  index.html    alphabetical term listing
  vocabulary.nt the full N-Triples export
  manifest.txt  publish record (path, bytes, sha256) for the files above

Output is deterministic: same vocabulary and resolver host give a
byte-identical tree, so re-publication is diffable and the manifest
doubles as an integrity baseline. The manifest describes the published
payload and is not itself a payload file.
"""

import hashlib
import html
import os
from dataclasses import dataclass

from arkvoc import anvl, core, vocab as vocab_mod
from arkvoc.errors import ArkvocError


class PublishError(ArkvocError):
    pass


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    size: int
    sha256: str


@dataclass(frozen=True)
class Manifest:
    entries: tuple

    def by_path(self):
        return {e.path: e for e in self.entries}


@dataclass(frozen=True)
class VerifyReport:
    missing: tuple
    modified: tuple
    extra: tuple

    @property
    def clean(self) -> bool:
        return not (self.missing or self.modified or self.extra)


def _section(title, items):
    if not items:
        return ""
    lis = "\n".join(f"<li>{item}</li>" for item in items)
    return f"<h2>{html.escape(title)}</h2>\n<ul>\n{lis}\n</ul>\n"


def _ref_item(v, ref, resolver_host):
    if ref.resolved:
        target = v.terms[ref.target]
        href = html.escape(vocab_mod.term_uri(v, ref.target, resolver_host), quote=True)
        return f'<a href="{href}">{html.escape(target.pref_label)}</a>'
    return html.escape(ref.label)


def term_page_html(v, term, resolver_host: str) -> str:
    """Term page: pref_label title, URI/PID field, field sections.

    Resolved references link through the resolver host; only those
    references produce hyperlinks, so link targets always resolve.
    """
    ark = core.canonical_string(vocab_mod.term_ark(v, term.name))
    parts = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8">',
        f"<title>{html.escape(term.pref_label)}</title>",
        "</head>",
        "<body>",
        f"<h1>{html.escape(term.pref_label)}</h1>",
        "<dl>",
        f"<dt>URI/PID</dt><dd><code>{html.escape(ark)}</code></dd>",
        f"<dt>Vocabulary</dt><dd>{html.escape(v.title)}</dd>",
        "</dl>",
    ]
    body = "".join((
        _section("Alternate Labels/Variants", [html.escape(x) for x in term.alt_labels]),
        _section("Notes", [html.escape(x) for x in term.notes]),
        _section("Broader", [_ref_item(v, r, resolver_host) for r in term.broader]),
        _section("Narrower", [_ref_item(v, r, resolver_host) for r in term.narrower]),
        _section("Related", [_ref_item(v, r, resolver_host) for r in term.related]),
        _section("Sources", [html.escape(x) for x in term.sources]),
    ))
    if body:
        parts.append(body.rstrip("\n"))
    parts.extend(["</body>", "</html>"])
    return "\n".join(parts) + "\n"


def index_page_html(v) -> str:
    terms = sorted(v.terms.values(), key=lambda t: (t.pref_label, t.name))
    items = "\n".join(
        f'<li><a href="{html.escape(t.name, quote=True)}.html">{html.escape(t.pref_label)}</a></li>'
        for t in terms
    )
    listing = f"<ul>\n{items}\n</ul>" if items else "<p>No terms.</p>"
    return "\n".join([
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8">',
        f"<title>{html.escape(v.title)}</title>",
        "</head>",
        "<body>",
        f"<h1>{html.escape(v.title)}</h1>",
        listing,
        "</body>",
        "</html>",
    ]) + "\n"


def _render_tree(v, resolver_host: str):
    """All payload files for the vocabulary, path -> bytes."""
    files = {
        f"{v.id}/index.html": index_page_html(v).encode("utf-8"),
        f"{v.id}/vocabulary.nt": vocab_mod.linked_data(v, resolver_host).encode("utf-8"),
    }
    for term in v.terms.values():
        files[f"{v.id}/{term.name}.html"] = term_page_html(v, term, resolver_host).encode("utf-8")
        files[f"{v.id}/{term.name}.txt"] = vocab_mod.term_record(v, term).encode("utf-8")
    return files


def _manifest_for(files) -> Manifest:
    entries = tuple(
        ManifestEntry(path, len(data), hashlib.sha256(data).hexdigest())
        for path, data in sorted(files.items())
    )
    return Manifest(entries)


def _manifest_path(out_dir, v) -> str:
    return os.path.join(out_dir, v.id, "manifest.txt")


def format_manifest(manifest: Manifest) -> str:
    return anvl.format_blocks(
        [("path", e.path), ("bytes", e.size), ("hash", e.sha256)]
        for e in manifest.entries
    )


def read_manifest(path: str) -> Manifest:
    with open(path, encoding="utf-8") as handle:
        blocks = anvl.parse_blocks(handle.read())
    entries = []
    for block in blocks:
        try:
            entries.append(ManifestEntry(
                path=anvl.first(block, "path"),
                size=int(anvl.first(block, "bytes")),
                sha256=anvl.first(block, "hash"),
            ))
        except (TypeError, ValueError) as exc:
            raise PublishError("corrupt-manifest", f"{path}: {exc}") from exc
    return Manifest(tuple(entries))


def publish(v, out_dir: str, resolver_host: str = vocab_mod.DEFAULT_RESOLVER_HOST) -> Manifest:
    """Write the tree; returns the manifest of payload files.

    A file that already exists but matches neither the incoming bytes
    nor the previous publish's manifest was written by someone else;
    that is a collision error, not something to silently overwrite.
    """
    files = _render_tree(v, resolver_host)
    manifest = _manifest_for(files)

    previous = {}
    manifest_path = _manifest_path(out_dir, v)
    if os.path.exists(manifest_path):
        previous = read_manifest(manifest_path).by_path()

    for path, data in sorted(files.items()):
        target = os.path.join(out_dir, path)
        if os.path.exists(target):
            with open(target, "rb") as handle:
                current = handle.read()
            if current != data:
                recorded = previous.get(path)
                if recorded is None or hashlib.sha256(current).hexdigest() != recorded.sha256:
                    raise PublishError("collision", f"{target} exists and was not produced by a prior publish")

    os.makedirs(os.path.join(out_dir, v.id), exist_ok=True)
    try:
        for path, data in sorted(files.items()):
            with open(os.path.join(out_dir, path), "wb") as handle:
                handle.write(data)
        with open(manifest_path, "w", encoding="utf-8") as handle:
            handle.write(format_manifest(manifest))
    except OSError as exc:
        raise PublishError("io-failure", str(exc)) from exc
    return manifest


def verify_published(v, out_dir: str) -> VerifyReport:
    """Compare the on-disk tree against the recorded manifest."""
    manifest_path = _manifest_path(out_dir, v)
    if not os.path.exists(manifest_path):
        raise PublishError("missing-manifest", f"no manifest at {manifest_path}")
    recorded = read_manifest(manifest_path)
    missing, modified = [], []
    for entry in recorded.entries:
        target = os.path.join(out_dir, entry.path)
        if not os.path.exists(target):
            missing.append(entry.path)
            continue
        with open(target, "rb") as handle:
            data = handle.read()
        if hashlib.sha256(data).hexdigest() != entry.sha256:
            modified.append(entry.path)
    known = {e.path for e in recorded.entries}
    extra = []
    vdir = os.path.join(out_dir, v.id)
    for fname in sorted(os.listdir(vdir)):
        rel = f"{v.id}/{fname}"
        if fname == "manifest.txt" or rel in known:
            continue
        extra.append(rel)
    return VerifyReport(tuple(missing), tuple(modified), tuple(extra))


def format_verify_report(report: VerifyReport) -> str:
    pairs = [("clean", "true" if report.clean else "false")]
    pairs.extend(("missing", p) for p in report.missing)
    pairs.extend(("modified", p) for p in report.modified)
    pairs.extend(("extra", p) for p in report.extra)
    return anvl.format_record(pairs)
