"""Affect lexicon and word-embedding resources.

Lexicons are TSV files with a header line ("word<TAB>dim1<TAB>..."); embedding
tables are text files with one "word v1 v2 ... vd" line per word, dimension
inferred from the first line. The bundled sample suite under ``resources/`` is
declared by a manifest listing each lexicon slot, its dimensions, the rule
scorer's valence lexicon, and two embedding tables.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources as importlib_resources
from pathlib import Path

import numpy as np

from .sentiment import RuleScorer

__all__ = [
    "Lexicon",
    "EmbeddingTable",
    "TextResources",
    "ResourceFormatError",
    "load_lexicon_tsv",
    "load_embedding_text",
    "load_resources",
    "bundled_resource_dir",
]


class ResourceFormatError(ValueError):
    """Raised for malformed lexicon or embedding files."""


@dataclass(frozen=True)
class Lexicon:
    """A named word -> vector affect dictionary with fixed dimension names."""

    name: str
    dims: tuple[str, ...]
    entries: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        width = len(self.dims)
        for word, vec in self.entries.items():
            if word != word.lower():
                raise ValueError(f"lexicon {self.name!r}: word {word!r} is not lowercase")
            if vec.shape != (width,):
                raise ValueError(
                    f"lexicon {self.name!r}: entry {word!r} has {vec.shape[0]} values, "
                    f"expected {width}"
                )

    def lookup(self, token: str, lemma: str) -> np.ndarray | None:
        hit = self.entries.get(token)
        if hit is None:
            hit = self.entries.get(lemma)
        return hit

    @property
    def width(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class EmbeddingTable:
    """A named word -> dense vector table of uniform dimension."""

    name: str
    dim: int
    entries: dict[str, np.ndarray]

    def lookup(self, token: str, lemma: str) -> np.ndarray | None:
        hit = self.entries.get(token)
        if hit is None:
            hit = self.entries.get(lemma)
        return hit


def load_lexicon_tsv(path: str | Path, name: str | None = None) -> Lexicon:
    path = Path(path)
    name = name if name is not None else path.stem
    entries: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        if not header.strip():
            raise ResourceFormatError(f"{path}:1: empty or missing header line")
        columns = header.rstrip("\n").split("\t")
        if len(columns) < 2 or columns[0] != "word":
            raise ResourceFormatError(
                f"{path}:1: header must be 'word<TAB>dim1[<TAB>...]', got {header.rstrip()!r}"
            )
        dims = tuple(columns[1:])
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != len(columns):
                raise ResourceFormatError(
                    f"{path}:{lineno}: expected {len(columns)} fields, got {len(parts)}"
                )
            word = parts[0].lower()
            if word in entries:
                raise ResourceFormatError(f"{path}:{lineno}: duplicate word {word!r}")
            try:
                values = [float(v) for v in parts[1:]]
            except ValueError as exc:
                raise ResourceFormatError(f"{path}:{lineno}: {exc}") from exc
            if not all(math.isfinite(v) for v in values):
                raise ResourceFormatError(f"{path}:{lineno}: non-finite value")
            entries[word] = np.asarray(values, dtype=float)
    return Lexicon(name=name, dims=dims, entries=entries)


def load_embedding_text(path: str | Path, name: str | None = None) -> EmbeddingTable:
    path = Path(path)
    name = name if name is not None else path.stem
    entries: dict[str, np.ndarray] = {}
    dim: int | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ResourceFormatError(f"{path}:{lineno}: expected 'word v1 ... vd'")
            word = parts[0].lower()
            try:
                values = [float(v) for v in parts[1:]]
            except ValueError as exc:
                raise ResourceFormatError(f"{path}:{lineno}: {exc}") from exc
            if dim is None:
                dim = len(values)
            elif len(values) != dim:
                raise ResourceFormatError(
                    f"{path}:{lineno}: expected {dim} values, got {len(values)}"
                )
            if not all(math.isfinite(v) for v in values):
                raise ResourceFormatError(f"{path}:{lineno}: non-finite value")
            entries[word] = np.asarray(values, dtype=float)
    if dim is None:
        raise ResourceFormatError(f"{path}: empty embedding file")
    return EmbeddingTable(name=name, dim=dim, entries=entries)


def _load_scorer_lexicon(path: Path) -> RuleScorer:
    lex = load_lexicon_tsv(path, name="rule_scorer_valence")
    if lex.width != 1:
        raise ResourceFormatError(f"{path}: scorer lexicon must have exactly one value column")
    valences = {}
    for word, vec in lex.entries.items():
        v = float(vec[0])
        if not -4.0 <= v <= 4.0:
            raise ResourceFormatError(f"{path}: valence for {word!r} out of [-4, +4]: {v}")
        valences[word] = v
    return RuleScorer(valences=valences)


@dataclass(frozen=True)
class TextResources:
    """The loaded lexicon suite, rule scorer and embedding tables."""

    lexicons: tuple[Lexicon, ...]
    scorer: RuleScorer
    embeddings: tuple[EmbeddingTable, ...]

    @property
    def lexical_dim(self) -> int:
        return sum(lex.width for lex in self.lexicons) + len(RuleScorer.DIMS)

    @property
    def embedding_dim(self) -> int:
        return sum(table.dim for table in self.embeddings)


def bundled_resource_dir() -> Path:
    return Path(importlib_resources.files("memfuse.text")) / "resources"


def load_resources(directory: str | Path | None = None) -> TextResources:
    """Load a resource suite from a directory with a ``manifest.json``.

    With no argument, loads the bundled sample suite.
    """
    directory = Path(directory) if directory is not None else bundled_resource_dir()
    manifest_path = directory / "manifest.json"
    if not manifest_path.exists():
        raise FileNotFoundError(f"resource manifest not found: {manifest_path}")
    with open(manifest_path, encoding="utf-8") as fh:
        manifest = json.load(fh)

    lexicons = []
    for entry in manifest["lexicons"]:
        lex = load_lexicon_tsv(directory / entry["file"], name=entry["name"])
        declared = tuple(entry["dims"])
        if lex.dims != declared:
            raise ResourceFormatError(
                f"{entry['file']}: dims {lex.dims} do not match manifest {declared}"
            )
        lexicons.append(lex)
    scorer = _load_scorer_lexicon(directory / manifest["scorer"]["file"])
    embeddings = []
    for entry in manifest["embeddings"]:
        table = load_embedding_text(directory / entry["file"], name=entry["name"])
        if table.dim != entry["dim"]:
            raise ResourceFormatError(
                f"{entry['file']}: dimension {table.dim} does not match manifest {entry['dim']}"
            )
        embeddings.append(table)
    return TextResources(
        lexicons=tuple(lexicons), scorer=scorer, embeddings=tuple(embeddings)
    )
