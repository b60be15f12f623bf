"""Skill records and JSONL catalog round-trips."""

import json

import pytest

from skillvet.catalog import (
    CatalogError,
    SkillRecord,
    load_catalog,
    save_catalog,
)


def make_record(**overrides):
    base = dict(
        id="B01",
        display_name="Cat Facts",
        invocation_name="Cat Facts",
    )
    base.update(overrides)
    return SkillRecord(**base)


class TestSkillRecord:
    def test_normalized_invocation(self):
        rec = make_record(invocation_name="  Cat   FACTS! ")
        assert rec.normalized_invocation == "cat facts"

    def test_description_string_coerced_to_tuple(self):
        rec = make_record(description="Say 'open cat facts'.")
        assert rec.description == ("Say 'open cat facts'.",)

    def test_description_list(self):
        rec = make_record(description=["First.", "Second."])
        assert rec.description == ("First.", "Second.")

    def test_to_dict_omits_empty_optionals(self):
        rec = make_record()
        d = rec.to_dict()
        assert set(d) == {"id", "display_name", "invocation_name"}

    def test_to_dict_keeps_populated_optionals(self):
        rec = make_record(author="dev", description="d", category="Trivia")
        d = rec.to_dict()
        assert d["author"] == "dev"
        assert d["description"] == ["d"]
        assert d["category"] == "Trivia"


class TestLoadCatalog:
    def write(self, tmp_path, lines):
        path = tmp_path / "catalog.jsonl"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def test_round_trip(self, tmp_path):
        records = [
            make_record(id="A", invocation_name="cat facts"),
            make_record(id="B", author="dev", description=["x"]),
        ]
        path = tmp_path / "out.jsonl"
        save_catalog(records, path)
        assert load_catalog(path) == records

    def test_blank_lines_skipped(self, tmp_path):
        path = self.write(
            tmp_path,
            [
                json.dumps(make_record(id="A").to_dict()),
                "",
                json.dumps(make_record(id="B").to_dict()),
            ],
        )
        assert [r.id for r in load_catalog(path)] == ["A", "B"]

    def test_bad_json_reports_line_number(self, tmp_path):
        path = self.write(
            tmp_path,
            [json.dumps(make_record(id="A").to_dict()), "{not json"],
        )
        with pytest.raises(CatalogError, match="line 2"):
            load_catalog(path)

    def test_missing_field_reports_line_number(self, tmp_path):
        path = self.write(tmp_path, ['{"id": "A", "display_name": "x"}'])
        with pytest.raises(CatalogError, match="invocation_name"):
            load_catalog(path)

    def test_duplicate_id_rejected(self, tmp_path):
        row = json.dumps(make_record(id="A").to_dict())
        path = self.write(tmp_path, [row, row])
        with pytest.raises(CatalogError, match="duplicate"):
            load_catalog(path)

    def test_non_string_field_rejected(self, tmp_path):
        path = self.write(
            tmp_path,
            ['{"id": 7, "display_name": "x", "invocation_name": "y"}'],
        )
        with pytest.raises(CatalogError, match="id"):
            load_catalog(path)

    def test_non_object_row_rejected(self, tmp_path):
        path = self.write(tmp_path, ['["not", "an", "object"]'])
        with pytest.raises(CatalogError, match="line 1"):
            load_catalog(path)
