"""Lexical and embedding feature vectors for memory descriptions.

Both feature families run the shared front end (preprocess, tokenize) and
average word-level resource vectors. Out-of-vocabulary tokens are skipped; a
resource matching no token at all contributes a zero block, and per-resource
blocks are concatenated in load order. The rule scorer's four document scores
are appended after the lexicon blocks, so with the bundled suite the lexical
vector is 130-dimensional and the embedding vector 500-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .lexicon import EmbeddingTable, Lexicon, TextResources
from .preprocess import lemmatize, preprocess, tokenize
from .sentiment import RuleScorer

__all__ = ["TextFeatures", "lexical_features", "embed_features", "TextFeatureExtractor"]


@dataclass(frozen=True)
class TextFeatures:
    lexical: np.ndarray
    embedding: np.ndarray
    lexical_coverage: float
    embedding_coverage: float


def _word_tokens(text: str) -> list[tuple[str, str]]:
    """(token, lemma) pairs for word-like tokens of the preprocessed text."""
    tokens = tokenize(preprocess(text))
    return [(str(t), lemmatize(str(t))) for t in tokens if t.is_word()]


def lexical_features(
    text: str, lexicons: Sequence[Lexicon], scorer: RuleScorer
) -> tuple[np.ndarray, float]:
    """Concatenated per-lexicon token means plus the rule-scorer block.

    Lookup tries the raw token first, then its lemma. Coverage is the
    fraction of word tokens found in at least one lexicon.
    """
    if not lexicons:
        raise ValueError("no lexicons loaded")
    pairs = _word_tokens(text)
    blocks = []
    matched = [False] * len(pairs)
    for lex in lexicons:
        hits = []
        for i, (token, lemma) in enumerate(pairs):
            vec = lex.lookup(token, lemma)
            if vec is not None:
                hits.append(vec)
                matched[i] = True
        if hits:
            blocks.append(np.mean(hits, axis=0))
        else:
            blocks.append(np.zeros(lex.width))
    blocks.append(np.asarray(scorer.score_vector(text), dtype=float))
    coverage = (sum(matched) / len(pairs)) if pairs else 0.0
    return np.concatenate(blocks), coverage


def embed_features(
    text: str, tables: Sequence[EmbeddingTable]
) -> tuple[np.ndarray, float]:
    """Concatenated per-table token means; zero block for unmatched tables."""
    if not tables:
        raise ValueError("no embedding tables loaded")
    pairs = _word_tokens(text)
    blocks = []
    matched = [False] * len(pairs)
    for table in tables:
        hits = []
        for i, (token, lemma) in enumerate(pairs):
            vec = table.lookup(token, lemma)
            if vec is not None:
                hits.append(vec)
                matched[i] = True
        if hits:
            blocks.append(np.mean(hits, axis=0))
        else:
            blocks.append(np.zeros(table.dim))
    coverage = (sum(matched) / len(pairs)) if pairs else 0.0
    return np.concatenate(blocks), coverage


class TextFeatureExtractor:
    """Binds a loaded resource suite and produces `TextFeatures` per text."""

    def __init__(self, resources: TextResources):
        self.resources = resources

    @property
    def lexical_dim(self) -> int:
        return self.resources.lexical_dim

    @property
    def embedding_dim(self) -> int:
        return self.resources.embedding_dim

    def extract(self, text: str) -> TextFeatures:
        lexical, lex_cov = lexical_features(
            text, self.resources.lexicons, self.resources.scorer
        )
        embedding, emb_cov = embed_features(text, self.resources.embeddings)
        return TextFeatures(
            lexical=lexical,
            embedding=embedding,
            lexical_coverage=lex_cov,
            embedding_coverage=emb_cov,
        )
