import json
import tempfile
from pathlib import Path
from unittest import TestCase

from embedcheck.corpus import (
    CorpusEntry,
    CorpusManifest,
    bundled_corpus,
    cyclic,
    emit_group,
    generate_corpus,
    load_corpus,
    symmetric,
)
from embedcheck.errors import GroupFileError


class BundledCorpusTest(TestCase):
    def test_contents(self):
        corpus = bundled_corpus(200)
        self.assertGreaterEqual(len(corpus), 60)
        self.assertTrue(all(entry.group.order <= 200 for entry in corpus))
        by_name = {entry.name: entry for entry in corpus}
        self.assertEqual(by_name["S4"].source, "file")
        self.assertEqual(by_name["S4"].group.order, 24)
        self.assertEqual(by_name["C7"].source, "constructed")
        self.assertEqual(by_name["GL2_3"].group.order, 48)
        self.assertEqual(by_name["C2xS4"].group.order, 48)
        self.assertEqual(corpus.names()[0], "C2")

    def test_fixtures_come_last_and_win_name_clashes(self):
        corpus = bundled_corpus(12)
        self.assertEqual(corpus.names()[-4:], ["A4", "C4xC2", "D8", "Q8"])
        self.assertEqual(corpus.names().count("D8"), 1)
        self.assertIn("C2xS3", corpus.names())
        self.assertNotIn("C2xA4", corpus.names())

    def test_order_bound(self):
        self.assertEqual(bundled_corpus(1).names(), [])
        for bad in (0, 2001):
            with self.assertRaises(ValueError):
                bundled_corpus(bad)

    def test_unique_names(self):
        c2 = CorpusEntry("C2", cyclic(2), "constructed")
        with self.assertRaises(ValueError):
            CorpusManifest((c2, c2))

    def test_jsonl(self):
        manifest = CorpusManifest((CorpusEntry("C2", cyclic(2), "constructed"),))
        self.assertEqual(
            json.loads(manifest.to_jsonl()), {"name": "C2", "order": 2, "source": "constructed", "path": None}
        )


class CorpusDirectoryTest(TestCase):
    def setUp(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.root = Path(tmp.name)

    def test_generate_then_load(self):
        imports = self.root / "imports"
        imports.mkdir()
        (imports / "Big.group").write_text("name: Big\ndegree: 5\ngen: (1,2,3,4,5)\ngen: (1,2)\n", encoding="utf-8")
        out = self.root / "corpus"
        written = generate_corpus(12, out, imports)
        self.assertEqual(written.names()[-1], "Big")
        self.assertTrue((out / "manifest.jsonl").exists())
        self.assertTrue((out / "S3.group").exists())
        loaded = load_corpus(out)
        self.assertEqual(loaded.names(), written.names())
        self.assertEqual([e.group.order for e in loaded], [e.group.order for e in written])
        self.assertEqual([e.source for e in loaded], [e.source for e in written])
        self.assertEqual(loaded.entries[-1].source, "import")

    def test_without_manifest_files_load_in_name_order(self):
        (self.root / "b.group").write_text(emit_group("S3", symmetric(3)), encoding="utf-8")
        (self.root / "a.group").write_text("degree: 2\ngen: (1,2)\n", encoding="utf-8")
        (self.root / "notes.txt").write_text("ignored", encoding="utf-8")
        corpus = load_corpus(self.root)
        self.assertEqual(corpus.names(), ["a", "S3"])
        self.assertEqual([entry.source for entry in corpus], ["file", "file"])

    def test_empty_directory(self):
        self.assertEqual(len(load_corpus(self.root)), 0)

    def test_missing_directory(self):
        with self.assertRaises(NotADirectoryError):
            load_corpus(self.root / "absent")

    def test_order_mismatch(self):
        (self.root / "C3.group").write_text("degree: 3\ngen: (1,2,3)\n", encoding="utf-8")
        record = {"name": "C3", "order": 6, "source": "file", "path": "C3.group"}
        (self.root / "manifest.jsonl").write_text(json.dumps(record) + "\n", encoding="utf-8")
        with self.assertRaises(GroupFileError) as caught:
            load_corpus(self.root)
        self.assertIn("C3.group", str(caught.exception))
        self.assertIn("manifest order 6", str(caught.exception))

    def test_bad_manifest(self):
        (self.root / "manifest.jsonl").write_text('{"name": "C3", "order": 3}\nnot json\n', encoding="utf-8")
        with self.assertRaises(GroupFileError) as caught:
            load_corpus(self.root)
        self.assertEqual(caught.exception.line, 1)
        record = {"path": "C3.group", "order": 3, "source": "web"}
        (self.root / "manifest.jsonl").write_text(json.dumps(record) + "\n", encoding="utf-8")
        with self.assertRaises(GroupFileError):
            load_corpus(self.root)

    def test_malformed_file_is_reported_with_its_path(self):
        (self.root / "Bad.group").write_text("degree: 3\ngen: (1,4)\n", encoding="utf-8")
        with self.assertRaises(GroupFileError) as caught:
            load_corpus(self.root)
        self.assertIn("Bad.group:2:", str(caught.exception))

    def test_duplicate_names(self):
        (self.root / "x.group").write_text("name: C2\ndegree: 2\ngen: (1,2)\n", encoding="utf-8")
        (self.root / "y.group").write_text("name: C2\ndegree: 2\ngen: (1,2)\n", encoding="utf-8")
        with self.assertRaises(ValueError):
            load_corpus(self.root)
