"""Skill catalog ingestion: the market metadata the scanner runs over.

A catalog is a JSONL file, one skill per line::

    {"id": "s1", "display_name": "Sleep Sounds",
     "invocation_name": "sleep sounds", "author": "...",
     "description": ["Sentence one.", "Sentence two."], "category": "..."}

``id``, ``display_name``, and ``invocation_name`` are required;
``author``, ``description`` (a list of sentences), and ``category`` are
optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .prondict import normalize_text


class CatalogError(ValueError):
    """Malformed catalog input; message names the offending line or id."""


@dataclass
class SkillRecord:
    id: str
    display_name: str
    invocation_name: str
    author: Optional[str] = None
    description: tuple[str, ...] = field(default=())
    category: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.description, str):
            self.description = (self.description,)
        else:
            self.description = tuple(self.description)

    @property
    def normalized_invocation(self) -> str:
        return normalize_text(self.invocation_name)

    def to_dict(self) -> dict:
        out: dict = {
            "id": self.id,
            "display_name": self.display_name,
            "invocation_name": self.invocation_name,
        }
        if self.author is not None:
            out["author"] = self.author
        if self.description:
            out["description"] = list(self.description)
        if self.category is not None:
            out["category"] = self.category
        return out


def _record_from_dict(data: dict, where: str) -> SkillRecord:
    if not isinstance(data, dict):
        raise CatalogError(f"{where}: expected an object, got {type(data).__name__}")
    for key in ("id", "display_name", "invocation_name"):
        value = data.get(key)
        if not isinstance(value, str) or not value.strip():
            raise CatalogError(f"{where}: missing or empty field {key!r}")
    description = data.get("description", [])
    if isinstance(description, str):
        description = [description]
    if not (
        isinstance(description, list) and all(isinstance(s, str) for s in description)
    ):
        raise CatalogError(f"{where}: description must be a list of sentences")
    author = data.get("author")
    category = data.get("category")
    for key, value in (("author", author), ("category", category)):
        if value is not None and not isinstance(value, str):
            raise CatalogError(f"{where}: field {key!r} must be text")
    return SkillRecord(
        id=data["id"],
        display_name=data["display_name"],
        invocation_name=data["invocation_name"],
        author=author,
        description=tuple(description),
        category=category,
    )


def load_catalog(path: str) -> list[SkillRecord]:
    """Read a JSONL skill catalog; reject malformed lines and duplicate ids."""
    records: list[SkillRecord] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            where = f"line {lineno}"
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CatalogError(f"{where}: invalid JSON: {exc}") from exc
            record = _record_from_dict(data, where)
            if record.id in seen:
                raise CatalogError(f"{where}: duplicate skill id {record.id!r}")
            seen.add(record.id)
            records.append(record)
    return records


def save_catalog(records: Iterable[SkillRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")
