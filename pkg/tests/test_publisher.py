import hashlib
import re

import pytest

from arkvoc import publisher, vocab
from arkvoc.errors import ArkvocError

HOST = "n2t.example"
HREF = re.compile(r'href="([^"]+)"')


def tree_bytes(root):
    out = {}
    for path in sorted(root.rglob("*")):
        if path.is_file():
            out[str(path.relative_to(root))] = path.read_bytes()
    return out


class TestPages:
    def test_term_page_essentials(self, lcsh1910):
        term = vocab.get_term(lcsh1910, "2c86")
        page = publisher.term_page_html(lcsh1910, term, HOST)
        assert "<title>Abbeys</title>" in page
        assert "ark:/99152/b41910/2c86" in page
        assert "<h2>Related</h2>" in page

    def test_only_resolved_references_become_links(self):
        d = {"id": "v", "title": "V", "naan": "12345", "shoulder": "x5",
             "subspace": "", "terms": [
                 {"name": "b01", "pref_label": "A",
                  "related": ["B", "Ghost"]},
                 {"name": "b02", "pref_label": "B"}]}
        v = vocab.load_vocabulary(d).vocabulary
        page = publisher.term_page_html(v, v.terms["b01"], HOST)
        hrefs = HREF.findall(page)
        assert hrefs == [f"https://{HOST}/ark:/12345/x5/b02"]
        assert "Ghost" in page  # dangling label shown as plain text

    def test_html_escaping(self):
        d = {"id": "v", "title": "V & W", "naan": "12345", "shoulder": "x5",
             "subspace": "", "terms": [
                 {"name": "b01", "pref_label": "Rocks <minerals>"}]}
        v = vocab.load_vocabulary(d).vocabulary
        page = publisher.term_page_html(v, v.terms["b01"], HOST)
        assert "Rocks &lt;minerals&gt;" in page
        assert "<minerals>" not in page
        assert "V &amp; W" in page

    def test_index_alphabetical(self, lcsh1910):
        page = publisher.index_page_html(lcsh1910)
        positions = [page.index(f">{label}<") for label in
                     ("Abbeys", "Armories", "Cathedrals", "Convents",
                      "Monasteries")]
        assert positions == sorted(positions)
        assert 'href="2c86.html"' in page

    def test_index_empty(self):
        d = {"id": "v", "title": "V", "naan": "12345", "shoulder": "x5",
             "subspace": "", "terms": []}
        v = vocab.load_vocabulary(d).vocabulary
        assert "<p>No terms.</p>" in publisher.index_page_html(v)


class TestPublish:
    def test_payload_inventory(self, lcsh1910, tmp_path):
        manifest = publisher.publish(lcsh1910, tmp_path, HOST)
        # 2 files per term plus index.html and vocabulary.nt
        assert len(manifest.entries) == 2 * len(lcsh1910.terms) + 2
        names = {e.path.split("/", 1)[1] for e in manifest.entries}
        assert "index.html" in names and "vocabulary.nt" in names
        assert "manifest.txt" not in names
        on_disk = set(p.name for p in (tmp_path / "lcsh1910").iterdir())
        assert on_disk == names | {"manifest.txt"}

    def test_republish_byte_identical(self, lcsh1910, tmp_path):
        publisher.publish(lcsh1910, tmp_path, HOST)
        first = tree_bytes(tmp_path)
        publisher.publish(lcsh1910, tmp_path, HOST)
        assert tree_bytes(tmp_path) == first

    def test_manifest_hashes_match_disk(self, lcsh1910, tmp_path):
        manifest = publisher.publish(lcsh1910, tmp_path, HOST)
        for entry in manifest.entries:
            data = (tmp_path / entry.path).read_bytes()
            assert len(data) == entry.size
            assert hashlib.sha256(data).hexdigest() == entry.sha256

    def test_foreign_file_collision(self, lcsh1910, tmp_path):
        publisher.publish(lcsh1910, tmp_path, HOST)
        victim = tmp_path / "lcsh1910" / "index.html"
        victim.write_text("hand edited\n")
        with pytest.raises(ArkvocError) as e:
            publisher.publish(lcsh1910, tmp_path, HOST)
        assert e.value.code == "collision"

    def test_prior_publish_overwritten_cleanly(self, lcsh1910, tmp_path):
        # changing the resolver host changes page bytes, but the old bytes
        # are accounted for by the old manifest, so republish may proceed
        publisher.publish(lcsh1910, tmp_path, "old.example")
        manifest = publisher.publish(lcsh1910, tmp_path, HOST)
        page = (tmp_path / "lcsh1910" / "2c86.html").read_text()
        assert "old.example" not in page
        assert len(manifest.entries) == 12

    def test_manifest_round_trip(self, lcsh1910, tmp_path):
        manifest = publisher.publish(lcsh1910, tmp_path, HOST)
        path = tmp_path / "lcsh1910" / "manifest.txt"
        assert publisher.read_manifest(path) == manifest


class TestVerify:
    def test_clean(self, lcsh1910, tmp_path):
        publisher.publish(lcsh1910, tmp_path, HOST)
        report = publisher.verify_published(lcsh1910, tmp_path)
        assert report.clean
        assert "clean: true" in publisher.format_verify_report(report)

    def test_detects_damage(self, lcsh1910, tmp_path):
        publisher.publish(lcsh1910, tmp_path, HOST)
        vdir = tmp_path / "lcsh1910"
        (vdir / "2c86.txt").unlink()
        (vdir / "index.html").write_text("tampered\n")
        (vdir / "stray.log").write_text("noise\n")
        report = publisher.verify_published(lcsh1910, tmp_path)
        assert report.missing == ("lcsh1910/2c86.txt",)
        assert report.modified == ("lcsh1910/index.html",)
        assert report.extra == ("lcsh1910/stray.log",)
        text = publisher.format_verify_report(report)
        assert "clean: false" in text
        assert "missing: lcsh1910/2c86.txt" in text

    def test_no_manifest(self, lcsh1910, tmp_path):
        with pytest.raises(ArkvocError) as e:
            publisher.verify_published(lcsh1910, tmp_path)
        assert e.value.code == "missing-manifest"
