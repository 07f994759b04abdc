#!/usr/bin/env python3
"""Regenerate the bundled sample text resources.

Writes the sample lexicon suite (13 lexicons, 126 dimensions), the rule
scorer's valence lexicon, two embedding tables (300d + 200d) and the resource
manifest into src/memfuse/text/resources/. Deterministic: a fixed seed drives
all jitter, so reruns reproduce the files byte for byte.

The suite is a structural stand-in for the third-party dictionaries used in
production deployments; it reproduces the 130/500 dimensional layout without
redistributing licensed data. Run from the repository root:

    python tools/make_text_resources.py
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "memfuse" / "text" / "resources"
SEED = 20240917

# Core word table: word -> (pleasure, arousal, dominance), each in [-1, 1].
# Grouped by PAD octant so the synthetic phrase bank can draw graded samples.
PAD_WORDS: list[tuple[str, float, float, float]] = [
    # +P +A +D: triumph, celebration
    ("triumphant", 0.85, 0.70, 0.80),
    ("ecstatic", 0.90, 0.90, 0.60),
    ("thrilled", 0.80, 0.85, 0.55),
    ("victorious", 0.80, 0.60, 0.85),
    ("exhilarated", 0.75, 0.88, 0.50),
    ("proud", 0.70, 0.45, 0.75),
    ("elated", 0.82, 0.75, 0.45),
    ("empowered", 0.65, 0.50, 0.80),
    ("festive", 0.70, 0.60, 0.35),
    ("cheered", 0.65, 0.65, 0.40),
    ("danced", 0.60, 0.70, 0.35),
    ("celebrated", 0.75, 0.65, 0.55),
    ("energetic", 0.55, 0.80, 0.45),
    ("confident", 0.60, 0.35, 0.78),
    # +P +A -D: awe, wonder, infatuation
    ("amazed", 0.70, 0.75, -0.30),
    ("astonished", 0.55, 0.80, -0.40),
    ("awestruck", 0.60, 0.70, -0.55),
    ("enchanted", 0.72, 0.55, -0.30),
    ("fascinated", 0.65, 0.60, -0.20),
    ("dazzled", 0.60, 0.72, -0.35),
    ("giddy", 0.62, 0.78, -0.25),
    ("mesmerized", 0.58, 0.55, -0.45),
    ("breathless", 0.45, 0.82, -0.50),
    ("smitten", 0.68, 0.60, -0.35),
    ("infatuated", 0.60, 0.70, -0.40),
    ("surprised", 0.40, 0.75, -0.25),
    ("overwhelmed", 0.25, 0.80, -0.60),
    ("starstruck", 0.55, 0.65, -0.50),
    # +P -A +D: calm control, contentment
    ("serene", 0.75, -0.60, 0.50),
    ("content", 0.70, -0.45, 0.45),
    ("peaceful", 0.78, -0.65, 0.40),
    ("relaxed", 0.72, -0.70, 0.42),
    ("comfortable", 0.65, -0.50, 0.48),
    ("satisfied", 0.68, -0.30, 0.55),
    ("secure", 0.60, -0.40, 0.60),
    ("cozy", 0.70, -0.55, 0.30),
    ("mellow", 0.55, -0.65, 0.25),
    ("tranquil", 0.74, -0.68, 0.38),
    ("fulfilled", 0.72, -0.25, 0.58),
    ("gratified", 0.64, -0.20, 0.52),
    ("assured", 0.50, -0.35, 0.62),
    ("settled", 0.45, -0.50, 0.40),
    # +P -A -D: tenderness, nostalgia
    ("nostalgic", 0.45, -0.35, -0.30),
    ("wistful", 0.30, -0.40, -0.40),
    ("tender", 0.60, -0.45, -0.25),
    ("sentimental", 0.50, -0.30, -0.35),
    ("dreamy", 0.55, -0.55, -0.30),
    ("gentle", 0.58, -0.60, -0.20),
    ("soothing", 0.65, -0.70, -0.15),
    ("cherished", 0.72, -0.35, -0.20),
    ("fond", 0.60, -0.40, -0.18),
    ("warmhearted", 0.68, -0.30, -0.15),
    ("reminiscent", 0.35, -0.45, -0.35),
    ("bittersweet", 0.15, -0.20, -0.30),
    ("mellowed", 0.40, -0.55, -0.25),
    ("lulled", 0.42, -0.72, -0.35),
    # -P +A +D: anger, hostility
    ("furious", -0.80, 0.85, 0.70),
    ("angry", -0.70, 0.75, 0.55),
    ("outraged", -0.75, 0.82, 0.65),
    ("enraged", -0.82, 0.88, 0.68),
    ("irritated", -0.50, 0.55, 0.35),
    ("resentful", -0.60, 0.45, 0.40),
    ("bitter", -0.62, 0.35, 0.38),
    ("hostile", -0.68, 0.65, 0.60),
    ("vengeful", -0.65, 0.70, 0.66),
    ("indignant", -0.55, 0.60, 0.58),
    ("livid", -0.78, 0.86, 0.64),
    ("seething", -0.72, 0.80, 0.55),
    ("frustrated", -0.60, 0.60, 0.30),
    ("annoyed", -0.45, 0.50, 0.28),
    # -P +A -D: fear, anxiety
    ("terrified", -0.85, 0.90, -0.80),
    ("scared", -0.70, 0.78, -0.65),
    ("afraid", -0.68, 0.72, -0.62),
    ("anxious", -0.55, 0.68, -0.50),
    ("panicked", -0.72, 0.92, -0.70),
    ("nervous", -0.45, 0.62, -0.45),
    ("frightened", -0.74, 0.80, -0.68),
    ("horrified", -0.82, 0.85, -0.72),
    ("dread", -0.65, 0.60, -0.60),
    ("alarmed", -0.55, 0.75, -0.50),
    ("shaken", -0.60, 0.70, -0.62),
    ("startled", -0.40, 0.78, -0.45),
    ("worried", -0.50, 0.55, -0.48),
    ("tense", -0.42, 0.65, -0.40),
    # -P -A +D: contempt, cold distance
    ("contemptuous", -0.55, -0.10, 0.55),
    ("scornful", -0.52, -0.15, 0.50),
    ("disdainful", -0.50, -0.20, 0.52),
    ("dismissive", -0.40, -0.25, 0.48),
    ("aloof", -0.30, -0.45, 0.40),
    ("indifferent", -0.22, -0.50, 0.25),
    ("detached", -0.28, -0.48, 0.30),
    ("unmoved", -0.25, -0.42, 0.35),
    ("jaded", -0.42, -0.35, 0.32),
    ("cynical", -0.45, -0.22, 0.42),
    ("mocking", -0.48, -0.05, 0.50),
    ("sarcastic", -0.35, -0.08, 0.45),
    ("grudging", -0.38, -0.18, 0.36),
    ("weary", -0.45, -0.60, 0.15),
    # -P -A -D: sadness, helplessness
    ("heartbroken", -0.85, -0.40, -0.70),
    ("devastated", -0.88, -0.25, -0.78),
    ("grieving", -0.80, -0.30, -0.65),
    ("mourned", -0.72, -0.35, -0.60),
    ("depressed", -0.75, -0.55, -0.68),
    ("miserable", -0.78, -0.40, -0.62),
    ("hopeless", -0.76, -0.45, -0.75),
    ("lonely", -0.65, -0.42, -0.58),
    ("abandoned", -0.70, -0.30, -0.72),
    ("helpless", -0.62, -0.28, -0.80),
    ("sorrowful", -0.70, -0.38, -0.55),
    ("gloomy", -0.58, -0.52, -0.45),
    ("despair", -0.82, -0.35, -0.76),
    ("defeated", -0.68, -0.32, -0.74),
    ("homesick", -0.40, -0.25, -0.45),
    ("ashamed", -0.60, -0.20, -0.60),
    ("tearful", -0.55, -0.15, -0.50),
    ("weeping", -0.62, -0.18, -0.55),
    # General valenced vocabulary
    ("good", 0.60, 0.10, 0.30),
    ("great", 0.70, 0.30, 0.40),
    ("wonderful", 0.80, 0.40, 0.35),
    ("beautiful", 0.75, 0.25, 0.20),
    ("lovely", 0.72, 0.20, 0.22),
    ("happy", 0.78, 0.48, 0.38),
    ("joy", 0.82, 0.55, 0.40),
    ("joyful", 0.80, 0.58, 0.38),
    ("fun", 0.68, 0.55, 0.30),
    ("nice", 0.55, 0.10, 0.25),
    ("sweet", 0.62, 0.12, 0.15),
    ("dear", 0.58, 0.05, 0.10),
    ("warm", 0.60, -0.10, 0.20),
    ("bright", 0.52, 0.25, 0.22),
    ("smile", 0.65, 0.30, 0.28),
    ("smiled", 0.65, 0.30, 0.28),
    ("laughter", 0.75, 0.55, 0.32),
    ("laughed", 0.70, 0.52, 0.30),
    ("love", 0.85, 0.50, 0.35),
    ("hope", 0.60, 0.25, 0.30),
    ("hopeful", 0.62, 0.30, 0.32),
    ("excited", 0.70, 0.80, 0.40),
    ("excitement", 0.68, 0.78, 0.38),
    ("delight", 0.76, 0.50, 0.35),
    ("grateful", 0.72, 0.15, 0.28),
    ("friend", 0.58, 0.18, 0.22),
    ("friendship", 0.60, 0.15, 0.25),
    ("sunshine", 0.62, 0.20, 0.18),
    ("holiday", 0.58, 0.35, 0.25),
    ("vacation", 0.60, 0.32, 0.28),
    ("party", 0.55, 0.60, 0.25),
    ("wedding", 0.65, 0.50, 0.20),
    ("birthday", 0.58, 0.45, 0.22),
    ("bad", -0.60, 0.10, -0.20),
    ("terrible", -0.75, 0.35, -0.35),
    ("awful", -0.72, 0.30, -0.32),
    ("horrible", -0.78, 0.40, -0.38),
    ("sad", -0.68, -0.30, -0.40),
    ("sadness", -0.66, -0.28, -0.42),
    ("hate", -0.80, 0.55, 0.20),
    ("hated", -0.78, 0.52, 0.18),
    ("pain", -0.70, 0.40, -0.45),
    ("painful", -0.72, 0.42, -0.46),
    ("hurt", -0.65, 0.35, -0.42),
    ("tears", -0.50, 0.10, -0.40),
    ("cry", -0.55, 0.20, -0.45),
    ("fear", -0.64, 0.66, -0.58),
    ("grief", -0.78, -0.25, -0.60),
    ("loss", -0.62, -0.10, -0.52),
    ("funeral", -0.62, -0.15, -0.42),
    ("war", -0.70, 0.60, -0.30),
    ("storm", -0.35, 0.55, -0.30),
    ("dark", -0.38, 0.15, -0.25),
    ("cold", -0.30, -0.15, -0.18),
    ("alone", -0.45, -0.30, -0.42),
    ("sick", -0.55, 0.05, -0.48),
    ("tired", -0.35, -0.55, -0.30),
    ("boring", -0.40, -0.65, -0.15),
    ("trouble", -0.50, 0.40, -0.35),
    ("argument", -0.48, 0.52, -0.10),
    ("accident", -0.58, 0.60, -0.50),
]

# Neutral filler vocabulary: function words, common verbs/nouns used by the
# synthetic phrase bank and by contraction expansion output.
FILLER_WORDS: list[str] = [
    "the", "a", "an", "and", "or", "but", "in", "on", "at", "of", "with",
    "to", "from", "for", "about", "after", "before", "over", "under",
    "i", "we", "he", "she", "they", "it", "you", "me", "us", "my", "our",
    "his", "her", "their", "your", "was", "were", "is", "are", "be", "been",
    "am", "have", "had", "has", "will", "would", "can", "cannot", "not",
    "that", "this", "those", "these", "there", "then", "when", "while",
    "remember", "remembered", "think", "thought", "felt", "feel", "go",
    "went", "came", "come", "see", "saw", "watch", "watched", "listen",
    "listened", "play", "played", "sing", "sang", "song", "music", "video",
    "day", "year", "decade", "time", "night", "morning", "evening",
    "moment", "place", "home", "house", "school", "summer", "winter",
    "beach", "garden", "road", "city", "family", "mother", "father",
    "grandmother", "grandfather", "sister", "brother", "childhood", "child",
    "old", "young", "first", "last", "long", "little", "big", "one",
    "very", "so", "really", "extremely", "slightly", "somewhat", "barely",
]

EMOTION_NAMES = (
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "sadness",
    "surprise",
    "trust",
    "positive",
    "negative",
)

CATEGORY_NAMES = (
    "function", "pronoun", "ppron", "i", "we", "you", "shehe", "they",
    "ipron", "article", "prep", "auxverb", "adverb", "conj", "negate",
    "verb", "adj", "compare", "interrog", "number", "quant", "affect",
    "posemo", "negemo", "anx", "anger", "sad", "social", "family",
    "friend", "female", "male", "cogproc", "insight", "cause", "discrep",
    "tentat", "certain", "differ", "percept", "see", "hear", "feel",
    "bio", "body", "health", "sexual", "ingest", "drives", "affiliation",
    "achieve", "power", "reward", "risk", "focuspast", "focuspresent",
    "focusfuture", "relativ", "motion", "space", "time", "work", "leisure",
    "home", "money", "relig", "death", "informal", "swear", "netspeak",
    "assent", "filler", "memory", "music", "nature", "weather",
    "school", "travel", "celebration", "lossevent", "childhoodref",
    "familyevent", "conflict", "victory", "fearevent", "comfort",
)
assert len(CATEGORY_NAMES) == 86


def _octant_emotions(p: float, a: float, d: float) -> dict[str, int]:
    flags = {name: 0 for name in EMOTION_NAMES}
    if p > 0.15:
        flags["positive"] = 1
        if a > 0.2:
            flags["joy"] = 1
        if a > 0.55 and d < 0:
            flags["surprise"] = 1
        if a < 0:
            flags["trust"] = 1
        if a > 0.3 and d > 0.3:
            flags["anticipation"] = 1
    elif p < -0.15:
        flags["negative"] = 1
        if a > 0.2 and d > 0.1:
            flags["anger"] = 1
        if a > 0.2 and d < -0.1:
            flags["fear"] = 1
        if a < 0.15 and d < 0:
            flags["sadness"] = 1
        if a < 0.1 and d > 0.1:
            flags["disgust"] = 1
    return flags


def _categories(word: str, p: float, a: float, d: float, rng: np.random.Generator) -> dict[str, int]:
    flags = {name: 0 for name in CATEGORY_NAMES}
    flags["affect"] = 1 if abs(p) > 0.15 else 0
    flags["posemo"] = 1 if p > 0.15 else 0
    flags["negemo"] = 1 if p < -0.15 else 0
    flags["anx"] = 1 if (p < -0.2 and a > 0.3 and d < 0) else 0
    flags["anger"] = 1 if (p < -0.2 and a > 0.3 and d > 0) else 0
    flags["sad"] = 1 if (p < -0.2 and a < 0.1) else 0
    flags["feel"] = 1 if abs(p) > 0.4 else 0
    flags["drives"] = 1 if d > 0.4 else 0
    flags["power"] = 1 if d > 0.5 else 0
    flags["reward"] = 1 if (p > 0.4 and d > 0.3) else 0
    flags["risk"] = 1 if (p < -0.3 and a > 0.5) else 0
    # A couple of content categories at random, so category columns are not
    # pure transforms of the PAD values.
    extra = rng.choice(len(CATEGORY_NAMES), size=3, replace=False)
    for idx in extra:
        flags[CATEGORY_NAMES[idx]] = 1
    topical = {
        "family": ("family", "social"), "mother": ("family", "female"),
        "father": ("family", "male"), "grandmother": ("family", "female"),
        "grandfather": ("family", "male"), "sister": ("family", "female"),
        "brother": ("family", "male"), "friend": ("friend", "social"),
        "friendship": ("friend", "social"), "music": ("music", "leisure"),
        "song": ("music", "leisure"), "sing": ("music",), "sang": ("music",),
        "school": ("school", "work"), "home": ("home",), "house": ("home",),
        "beach": ("nature", "leisure"), "garden": ("nature",),
        "storm": ("weather", "nature"), "sunshine": ("weather", "nature"),
        "summer": ("time", "nature"), "winter": ("time", "nature"),
        "wedding": ("familyevent", "celebration"), "birthday": ("celebration",),
        "party": ("celebration", "social"), "holiday": ("leisure", "travel"),
        "vacation": ("leisure", "travel"), "funeral": ("death", "lossevent"),
        "war": ("death", "conflict"), "childhood": ("childhoodref", "time"),
        "child": ("childhoodref", "family"), "victorious": ("victory",),
        "triumphant": ("victory",), "cozy": ("comfort", "home"),
        "soothing": ("comfort",), "terrified": ("fearevent",),
        "accident": ("fearevent", "risk"), "loss": ("lossevent",),
        "grief": ("lossevent", "death"),
    }
    for cat in topical.get(word, ()):
        flags[cat] = 1
    i_like = {"i": ("i", "ppron", "pronoun", "function"),
              "we": ("we", "ppron", "pronoun", "function"),
              "you": ("you", "ppron", "pronoun", "function"),
              "he": ("shehe", "ppron", "pronoun", "function"),
              "she": ("shehe", "ppron", "pronoun", "function"),
              "they": ("they", "ppron", "pronoun", "function"),
              "it": ("ipron", "pronoun", "function"),
              "the": ("article", "function"), "a": ("article", "function"),
              "an": ("article", "function"), "and": ("conj", "function"),
              "or": ("conj", "function"), "but": ("conj", "function"),
              "not": ("negate", "function"), "cannot": ("negate", "function"),
              "very": ("adverb", "function"), "so": ("adverb", "function"),
              "really": ("adverb", "function")}
    for cat in i_like.get(word, ()):
        flags[cat] = 1
    return flags


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def _write_lexicon(path: Path, dims: tuple[str, ...], rows: dict[str, list[float]]) -> None:
    lines = ["word\t" + "\t".join(dims)]
    for word in sorted(rows):
        lines.append(word + "\t" + "\t".join(_fmt(v) for v in rows[word]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _subset(words: list[str], rng: np.random.Generator, keep: float) -> list[str]:
    mask = rng.random(len(words)) < keep
    return [w for w, m in zip(words, mask) if m]


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(SEED)
    pad = {w: (p, a, d) for w, p, a, d in PAD_WORDS}
    valenced = sorted(pad)
    all_words = sorted(set(valenced) | set(FILLER_WORDS))

    manifest_lexicons = []

    def emit(name: str, dims: tuple[str, ...], rows: dict[str, list[float]]) -> None:
        filename = f"{name}.tsv"
        _write_lexicon(OUT_DIR / filename, dims, rows)
        manifest_lexicons.append({"name": name, "file": filename, "dims": list(dims)})

    # 1. opinion_polarity (2)
    rows = {}
    for w in _subset(valenced, rng, 0.9):
        p, a, d = pad[w]
        if abs(p) <= 0.15:
            continue
        rows[w] = [1.0 if p > 0 else 0.0, 1.0 if p < 0 else 0.0]
    emit("opinion_polarity", ("positive", "negative"), rows)

    # 2. graded_sentiment (3)
    rows = {}
    for w in _subset(valenced, rng, 0.85):
        p, a, d = pad[w]
        jitter = rng.normal(0, 0.03)
        pos = min(1.0, max(0.0, max(p, 0.0) + jitter))
        neg = min(1.0, max(0.0, max(-p, 0.0) + jitter))
        rows[w] = [pos, neg, max(0.0, 1.0 - abs(p))]
    emit("graded_sentiment", ("positive", "negative", "objectivity"), rows)

    # 3. emotion_associations (10)
    rows = {}
    for w in _subset(valenced, rng, 0.9):
        p, a, d = pad[w]
        flags = _octant_emotions(p, a, d)
        rows[w] = [float(flags[name]) for name in EMOTION_NAMES]
    emit("emotion_associations", EMOTION_NAMES, rows)

    # 4. sentiment_strength (2)
    rows = {}
    for w in _subset(valenced, rng, 0.8):
        p, a, d = pad[w]
        rows[w] = [1.0 + round(4 * max(p, 0.0), 2), 1.0 + round(4 * max(-p, 0.0), 2)]
    emit("sentiment_strength", ("positive_strength", "negative_strength"), rows)

    # 5. psychosocial_categories (86)
    rows = {}
    for w in all_words:
        p, a, d = pad.get(w, (0.0, 0.0, 0.0))
        flags = _categories(w, p, a, d, rng)
        rows[w] = [float(flags[name]) for name in CATEGORY_NAMES]
    emit("psychosocial_categories", CATEGORY_NAMES, rows)

    # 6. valence_scores (1)
    rows = {}
    for w in _subset(valenced, rng, 0.85):
        p, _, _ = pad[w]
        rows[w] = [float(np.clip(p * 3.3 + rng.normal(0, 0.15), -4.0, 4.0))]
    emit("valence_scores", ("valence",), rows)

    # 7. hashtag_sentiment (1)
    rows = {}
    for w in _subset(valenced, rng, 0.75):
        p, _, _ = pad[w]
        rows[w] = [p * 2.0 + rng.normal(0, 0.2)]
    emit("hashtag_sentiment", ("score",), rows)

    # 8. hashtag_emotion (10)
    rows = {}
    for w in _subset(valenced, rng, 0.75):
        p, a, d = pad[w]
        flags = _octant_emotions(p, a, d)
        intensity = min(1.0, 0.3 + 0.7 * abs(p))
        rows[w] = [
            float(flags[name]) * (intensity + rng.normal(0, 0.05))
            for name in EMOTION_NAMES
        ]
    emit("hashtag_emotion", EMOTION_NAMES, rows)

    # 9. emoticon_aware_sentiment (1)
    rows = {}
    for w in _subset(valenced, rng, 0.7):
        p, _, _ = pad[w]
        rows[w] = [float(np.clip(p + rng.normal(0, 0.1), -1.0, 1.0))]
    emit("emoticon_aware_sentiment", ("score",), rows)

    # 10. affect_intensity (4)
    rows = {}
    for w in _subset(valenced, rng, 0.8):
        p, a, d = pad[w]
        anger = max(0.0, -p) * max(0.0, a) * (1.0 if d > 0 else 0.3)
        fearv = max(0.0, -p) * max(0.0, a) * (1.0 if d < 0 else 0.3)
        joyv = max(0.0, p) * (0.4 + 0.6 * max(0.0, a))
        sadv = max(0.0, -p) * (0.4 + 0.6 * max(0.0, -a))
        rows[w] = [round(v, 4) for v in (anger, fearv, joyv, sadv)]
    emit("affect_intensity", ("anger", "fear", "joy", "sadness"), rows)

    # 11. expanded_sentiment (2)
    rows = {}
    for w in _subset(valenced, rng, 0.8):
        p, _, _ = pad[w]
        pos = 1.0 / (1.0 + np.exp(-4 * p)) + rng.normal(0, 0.02)
        rows[w] = [float(np.clip(pos, 0, 1)), float(np.clip(1 - pos, 0, 1))]
    emit("expanded_sentiment", ("positive_expect", "negative_expect"), rows)

    # 12. sentiment140 (1)
    rows = {}
    for w in _subset(valenced, rng, 0.7):
        p, _, _ = pad[w]
        rows[w] = [p * 1.5 + rng.normal(0, 0.15)]
    emit("sentiment140", ("score",), rows)

    # 13. vad_ratings (3) — full coverage; the synthetic phrase bank reads it.
    rows = {w: [pad[w][0], pad[w][1], pad[w][2]] for w in valenced}
    emit("vad_ratings", ("pleasure", "arousal", "dominance"), rows)

    total = sum(len(entry["dims"]) for entry in manifest_lexicons)
    assert total == 126, f"lexicon dims sum to {total}, expected 126"

    # Rule scorer valence lexicon ([-4, 4]).
    rows = {}
    for w in _subset(valenced, rng, 0.92):
        p, _, _ = pad[w]
        rows[w] = [float(np.clip(p * 3.2 + rng.normal(0, 0.1), -3.9, 3.9))]
    _write_lexicon(OUT_DIR / "rule_scorer_valence.tsv", ("valence",), rows)

    # Embedding tables: PAD signal embedded in a random subspace plus noise.
    emb_specs = [("embedding_context_300d", 300), ("embedding_cooccurrence_200d", 200)]
    manifest_embeddings = []
    for name, dim in emb_specs:
        projection = rng.normal(0, 1.0, size=(dim, 3)) / np.sqrt(dim)
        lines = []
        for w in all_words:
            p, a, d = pad.get(w, (0.0, 0.0, 0.0))
            vec = projection @ np.array([p, a, d]) * 2.0 + rng.normal(0, 0.08, size=dim)
            lines.append(w + " " + " ".join(_fmt(v) for v in vec))
        filename = f"{name}.txt"
        (OUT_DIR / filename).write_text("\n".join(lines) + "\n", encoding="utf-8")
        manifest_embeddings.append({"name": name, "file": filename, "dim": dim})

    manifest = {
        "lexicons": manifest_lexicons,
        "scorer": {
            "file": "rule_scorer_valence.tsv",
            "dims": ["negative", "neutral", "positive", "compound"],
        },
        "embeddings": manifest_embeddings,
    }
    (OUT_DIR / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    n_words = len(all_words)
    print(f"wrote resources for {n_words} words: lexical 126+4, embedding 500 dims")


if __name__ == "__main__":
    main()
