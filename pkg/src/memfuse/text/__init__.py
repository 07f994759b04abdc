from .preprocess import Token, lemmatize, preprocess, tokenize
from .sentiment import RuleScorer, SentimentScores
from .lexicon import (
    EmbeddingTable,
    Lexicon,
    ResourceFormatError,
    TextResources,
    bundled_resource_dir,
    load_embedding_text,
    load_lexicon_tsv,
    load_resources,
)
from .features import TextFeatureExtractor, TextFeatures, embed_features, lexical_features

__all__ = [
    "Token",
    "lemmatize",
    "preprocess",
    "tokenize",
    "RuleScorer",
    "SentimentScores",
    "EmbeddingTable",
    "Lexicon",
    "ResourceFormatError",
    "TextResources",
    "bundled_resource_dir",
    "load_embedding_text",
    "load_lexicon_tsv",
    "load_resources",
    "TextFeatureExtractor",
    "TextFeatures",
    "embed_features",
    "lexical_features",
]
