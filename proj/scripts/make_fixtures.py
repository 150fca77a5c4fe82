#!/usr/bin/env python3
# Copyright 2026 The TextDecepter Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the test fixtures under data/fixtures/.

Outputs:
  embeddings_50d.txt   small word-vector store (synonym clusters, dim 50)
  victim_lexicon.json  weighted-lexicon victim used by the test suites
  reviews.jsonl        30-document review corpus, 15 POS / 15 NEG

The three files are coupled: cluster membership decides which synonyms the
search can reach, lexicon weights decide which replacements move a document
across the decision boundary, and the corpus is written so that a known mix
of outcomes (one-word flips, sentence-level flips, aggregate-guided flips,
and unattackable documents) is present. Run with --check to validate the
committed files without rewriting them.
"""

import argparse
import json
import math
import random
import sys
from pathlib import Path

DIM = 50
SEED = 20260519

# word -> (fine POS tag, victim weight, cluster id). Cluster id None means the
# word gets a standalone vector (no synonyms above the candidate floor).
WORDS = {
    # --- positive adjectives ---
    "good":          ("JJ", 2.0,  "c_good"),
    "great":         ("JJ", 3.0,  "c_good"),
    "fine":          ("JJ", 1.0,  "c_good"),
    "decent":        ("JJ", 0.2,  "c_good"),
    "solid":         ("JJ", 1.5,  "c_good"),
    "nice":          ("JJ", 1.0,  "c_good"),
    "agreeable":     ("JJ", 0.1,  "c_good"),
    "beautiful":     ("JJ", 2.0,  "c_beautiful"),
    "gorgeous":      ("JJ", 1.8,  "c_beautiful"),
    "lovely":        ("JJ", 1.2,  "c_beautiful"),
    "resplendent":   ("JJ", -0.4, "c_beautiful"),
    "pretty":        ("JJ", 1.0,  "c_beautiful"),
    "brilliant":     ("JJ", 2.5,  "c_brilliant"),
    "superb":        ("JJ", 2.2,  "c_brilliant"),
    "marvelous":     ("JJ", 0.5,  "c_brilliant"),
    "splendid":      ("JJ", 1.6,  "c_brilliant"),
    "dazzling":      ("JJ", 0.3,  "c_brilliant"),
    "funny":         ("JJ", 1.5,  "c_funny"),
    "hilarious":     ("JJ", 2.0,  "c_funny"),
    "amusing":       ("JJ", 1.0,  "c_funny"),
    "comical":       ("JJ", 0.1,  "c_funny"),
    "uproarious":    ("JJ", 0.3,  "c_funny"),
    "touching":      ("JJ", 1.3,  "c_touching"),
    "moving":        ("JJ", 1.5,  "c_touching"),
    "affecting":     ("JJ", 0.2,  "c_touching"),
    "stirring":      ("JJ", 0.6,  "c_touching"),
    "poignant":      ("JJ", 0.8,  "c_touching"),
    "clever":        ("JJ", 1.2,  "c_clever"),
    "smart":         ("JJ", 1.4,  "c_clever"),
    "shrewd":        ("JJ", 0.2,  "c_clever"),
    "cunning":       ("JJ", -1.5, "c_clever"),
    "ingenious":     ("JJ", 0.9,  "c_clever"),
    "enjoyable":     ("JJ", 1.4,  "c_enjoy_adj"),
    "delightful":    ("JJ", 1.6,  "c_enjoy_adj"),
    "pleasant":      ("JJ", 0.3,  "c_enjoy_adj"),
    "charming":      ("JJ", 1.3,  "c_enjoy_adj"),
    "winsome":       ("JJ", -0.2, "c_enjoy_adj"),
    "memorable":     ("JJ", 1.2,  "c_memorable"),
    "haunting":      ("JJ", 0.3,  "c_memorable"),
    "unforgettable": ("JJ", 1.5,  "c_memorable"),
    "indelible":     ("JJ", 0.1,  "c_memorable"),
    # --- negative adjectives ---
    "bad":            ("JJ", -2.0, "c_bad"),
    "terrible":       ("JJ", -3.0, "c_bad"),
    "awful":          ("JJ", -2.5, "c_bad"),
    "poor":           ("JJ", -1.5, "c_bad"),
    "lousy":          ("JJ", -1.8, "c_bad"),
    "rotten":         ("JJ", -1.2, "c_bad"),
    "unsatisfactory": ("JJ", 0.1,  "c_bad"),
    "dull":           ("JJ", -1.5, "c_dull"),
    "boring":         ("JJ", -2.0, "c_dull"),
    "tedious":        ("JJ", -1.8, "c_dull"),
    "monotonous":     ("JJ", -0.4, "c_dull"),
    "bland":          ("JJ", -1.0, "c_dull"),
    "dreary":         ("JJ", -0.6, "c_dull"),
    "stupid":         ("JJ", -1.8, "c_stupid"),
    "foolish":        ("JJ", -0.4, "c_stupid"),
    "silly":          ("JJ", -0.9, "c_stupid"),
    "inane":          ("JJ", -0.5, "c_stupid"),
    "senseless":      ("JJ", -0.6, "c_stupid"),
    "messy":          ("JJ", -1.0, "c_messy"),
    "sloppy":         ("JJ", -1.1, "c_messy"),
    "chaotic":        ("JJ", -0.3, "c_messy"),
    "disorderly":     ("JJ", -0.2, "c_messy"),
    "cluttered":      ("JJ", -0.4, "c_messy"),
    "clumsy":         ("JJ", -0.8, "c_clumsy"),
    "awkward":        ("JJ", -0.9, "c_clumsy"),
    "ungainly":       ("JJ", -0.2, "c_clumsy"),
    "graceless":      ("JJ", -0.3, "c_clumsy"),
    "weak":           ("JJ", -1.2, "c_weak"),
    "feeble":         ("JJ", -0.3, "c_weak"),
    "flimsy":         ("JJ", -0.5, "c_weak"),
    "frail":          ("JJ", -0.2, "c_weak"),
    "strange":        ("JJ", -0.3, "c_strange"),
    "odd":            ("JJ", -0.2, "c_strange"),
    "weird":          ("JJ", -0.4, "c_strange"),
    "peculiar":       ("JJ", -0.1, "c_strange"),
    "evil":           ("JJ", -0.8, None),
    "quiet":          ("JJ", 0.2,  None),
    "genuine":        ("JJ", 0.1,  None),
    # --- verbs ---
    "love":         ("VBP", 2.0,  "c_love"),
    "adore":        ("VBP", 0.5,  "c_love"),
    "cherish":      ("VBP", 0.3,  "c_love"),
    "loved":        ("VBD", 2.0,  "c_loved"),
    "admired":      ("VBD", 0.8,  "c_loved"),
    "treasured":    ("VBD", 0.4,  "c_loved"),
    "enjoyed":      ("VBD", 1.5,  "c_enjoyed"),
    "savored":      ("VBD", 0.2,  "c_enjoyed"),
    "relished":     ("VBD", 0.3,  "c_enjoyed"),
    "hated":        ("VBD", -2.0, "c_hated"),
    "despised":     ("VBD", -0.5, "c_hated"),
    "detested":     ("VBD", 0.4,  "c_hated"),
    "fails":        ("VBZ", -1.5, "c_fails"),
    "falters":      ("VBZ", -0.4, "c_fails"),
    "stumbles":     ("VBZ", -0.3, "c_fails"),
    "shines":       ("VBZ", 1.2,  "c_shines"),
    "glows":        ("VBZ", 0.2,  "c_shines"),
    "sparkles":     ("VBZ", 0.4,  "c_shines"),
    "impresses":    ("VBZ", 1.4,  "c_impress"),
    "astonishes":   ("VBZ", 0.4,  "c_impress"),
    "amazes":       ("VBZ", 1.2,  "c_impress"),
    "disappoints":  ("VBZ", -1.6, "c_disappoint"),
    "disheartens":  ("VBZ", -0.4, "c_disappoint"),
    "bores":        ("VBZ", -1.3, "c_bores"),
    "wearies":      ("VBZ", -0.2, "c_bores"),
    "numbs":        ("VBZ", -0.3, "c_bores"),
    "wastes":       ("VBZ", -1.4, "c_wastes"),
    "squanders":    ("VBZ", -0.5, "c_wastes"),
    "drags":        ("VBZ", -1.0, "c_drags"),
    "crawls":       ("VBZ", -0.2, "c_drags"),
    "plods":        ("VBZ", -0.3, "c_drags"),
    "believe":      ("VBP", 0.3,  "c_believe"),
    "feel":         ("VBP", -0.2, "c_believe"),
    "reckon":       ("VBP", 0.0,  "c_believe"),
    "seems":        ("VBZ", 0.0,  "c_seems"),
    "transpires":   ("VBZ", -0.1, "c_seems"),
    "appears":      ("VBZ", 0.0,  "c_seems"),
    "undermining":  ("VBG", -0.5, "c_undermine"),
    "jeopardizing": ("VBG", -0.1, "c_undermine"),
    "jeopardizes":  ("VBZ", -0.3, "c_undermine"),
    "undermines":   ("VBZ", -0.5, "c_undermine"),
    # --- adverbs ---
    "wonderfully": ("RB", 1.0,  "c_adv_pos"),
    "superbly":    ("RB", 0.4,  "c_adv_pos"),
    "splendidly":  ("RB", 0.5,  "c_adv_pos"),
    "badly":       ("RB", -1.0, "c_adv_neg"),
    "poorly":      ("RB", -0.9, "c_adv_neg"),
    "dismally":    ("RB", -0.3, "c_adv_neg"),
    "terribly":    ("RB", -1.2, "c_adv_neg"),
    "dreadfully":  ("RB", -0.4, "c_adv_neg"),
    "truly":       ("RB", 0.2,  "c_adv_mild"),
    "genuinely":   ("RB", 0.1,  "c_adv_mild"),
    "really":      ("RB", 0.0,  "c_adv_mild"),
    "firmly":      ("RB", 0.1,  None),
    # --- nouns ---
    "film":        ("NN", 0.0,  "c_film"),
    "movie":       ("NN", 0.0,  "c_film"),
    "picture":     ("NN", 0.0,  "c_film"),
    "flick":       ("NN", -0.1, "c_film"),
    "story":       ("NN", 0.0,  None),
    "tale":        ("NN", 0.0,  None),
    "plot":        ("NN", 0.0,  None),
    "mess":        ("NN", -1.0, "c_mess"),
    "shambles":    ("NN", -0.4, "c_mess"),
    "muddle":      ("NN", -0.5, "c_mess"),
    "jumble":      ("NN", 0.2,  "c_mess"),
    "disaster":    ("NN", -1.5, "c_disaster"),
    "debacle":     ("NN", -0.5, "c_disaster"),
    "catastrophe": ("NN", -1.2, "c_disaster"),
    "fiasco":      ("NN", -0.8, "c_disaster"),
    "triumph":     ("NN", 1.5,  "c_triumph"),
    "attainment":  ("NN", 0.0,  "c_triumph"),
    "achievement": ("NN", 0.8,  "c_triumph"),
    "success":     ("NN", 1.5,  "c_triumph"),
    "victory":     ("NN", 0.7,  "c_triumph"),
    "gem":         ("NN", 1.5,  "c_gem"),
    "jewel":       ("NN", 0.4,  "c_gem"),
    "masterpiece": ("NN", 2.5,  "c_masterpiece"),
    "classic":     ("NN", 1.3,  "c_masterpiece"),
    "landmark":    ("NN", 0.5,  "c_masterpiece"),
    "delight":     ("NN", 1.4,  "c_delight"),
    "pleasure":    ("NN", 0.8,  "c_delight"),
    "joy":         ("NN", 1.2,  "c_delight"),
    "bliss":       ("NN", 0.5,  "c_delight"),
    "humor":       ("NN", 0.8,  "c_humor"),
    "wit":         ("NN", 0.9,  "c_humor"),
    "levity":      ("NN", 0.2,  "c_humor"),
    "laughs":      ("NNS", 1.0, "c_laughs"),
    "chuckles":    ("NNS", 0.2, "c_laughs"),
    "giggles":     ("NNS", 0.3, "c_laughs"),
    "kidding":     ("VBG", -0.1, "c_laughs"),
    "falsehoods":  ("NNS", -0.3, None),
    "bore":        ("NN", -1.3, None),
    "chore":       ("NN", -0.9, "c_chore"),
    "task":        ("NN", 0.3,  "c_chore"),
    "routine":     ("NN", 0.0,  "c_chore"),
    "errand":      ("NN", 0.1,  "c_chore"),
    "songs":       ("NNS", 0.0, "c_songs"),
    "tunes":       ("NNS", -0.2, "c_songs"),
    "melodies":    ("NNS", 0.1, "c_songs"),
}

# Function and filler words: standalone vectors, zero weight. Tags live in the
# tagger's built-in lexicon, not here.
FILLER = [
    "the", "a", "an", "this", "that", "its", "his", "her", "my", "our",
    "their", "i", "it", "he", "she", "we", "they", "you", "and", "but",
    "or", "of", "in", "on", "with", "at", "by", "from", "for", "about",
    "is", "was", "are", "were", "be", "been", "has", "have", "had", "will",
    "would", "can", "could", "may", "might", "should", "not", "never",
    "always", "often", "very", "too", "so", "quite", "rather", "almost",
    "just", "still", "even", "as", "if", "when", "while", "because", "to",
    "up", "out", "what", "who", "which", "how", "one", "two", "first",
    "last", "new", "old", "long", "real", "whole", "same", "thing",
    "things", "time", "scene", "scenes", "actor", "actors", "cast",
    "acting", "ensemble", "performance", "performances", "script",
    "screenplay", "dialogue", "pacing", "rhythm", "music", "soundtrack",
    "character", "characters", "audience", "viewer", "sequel", "premise",
    "execution", "idea", "ideas", "moment", "moments", "video", "game",
    "show", "soon", "here", "there", "every", "some", "no", "all", "also",
    "only", "well", "better", "more", "most", "than", "like", "into",
    "over", "under", "again", "once", "ending", "beginning", "half",
    "hour", "minutes", "director", "work", "does", "do", "did", "makes",
    "made", "make", "gives", "comes", "goes", "through", "nothing",
    "something", "everything", "anyone", "everyone", "own", "much",
    "many", "few", "little", "big", "small", "short",
]

# id, ground-truth label, text. The victim label comes from the weight sums;
# two documents (p15, n15) are deliberately misjudged by the victim so the
# SKIPPED_MISCLASSIFIED path shows up in campaigns.
CORPUS = [
    # --- single-sentence, one-word tier-1 flips ---
    ("p01", "POS", "strange and beautiful film"),
    ("p02", "POS", "something like a triumph ."),
    ("p03", "POS", "a smart and truly winning little picture ."),
    ("n01", "NEG", "something of a mess , really ."),
    ("n02", "NEG", "the whole thing felt strange and i hated the ending ."),
    # --- multi-sentence, sentence- or full-text-tier flips ---
    ("p04", "POS", "i firmly believe that a good video game movie will show "
                   "up soon . this one is not it , but the laughs are real ."),
    ("p05", "POS", "the cast is good . the script is clever and the humor "
                   "lands . the pacing drags at times ."),
    ("n03", "NEG", "i firmly believe that a good video game movie will show "
                   "up soon . this one is terrible ."),
    ("n04", "NEG", "the premise is smart . the execution is sloppy . the "
                   "dialogue is dull ."),
    ("n05", "NEG", "what a lousy script . the cast does what it can ."),
    # --- aggregate-dependent documents (fail without tier-3 acceptance) ---
    ("p06", "POS", "a good story with nice ideas . the cast is good . the "
                   "pacing is bad ."),
    ("p07", "POS", "the humor is good . a fine ensemble . the ending is "
                   "weak ."),
    ("p08", "POS", "a nice little film . the acting is fine . the script "
                   "stumbles once or twice ."),
    ("n06", "NEG", "the premise is clever . the second half is a bore and "
                   "the ending is a mess ."),
    ("n07", "NEG", "the cast is fine . the script is bad . the pacing is "
                   "poor ."),
    ("n08", "NEG", "a few moments of wit . the rest is tedious . the whole "
                   "thing is a chore ."),
    # --- larger mixed documents ---
    ("p09", "POS", "the lion king was a roaring success when it was "
                   "released eight years ago . on imax it seems better , "
                   "not just bigger . what a delight the songs still are . "
                   "only the new scenes feel flat ."),
    ("p10", "POS", "she may not be real , but the laughs are . the premise "
                   "is silly . the cast is charming and the humor is "
                   "genuine ."),
    ("p11", "POS", "a gem of a picture . the story is nothing new . the "
                   "ensemble is delightful and the music shines ."),
    ("n09", "NEG", "falsehoods pile up , undermining the movie and "
                   "stifling its comic voice . a few scenes sparkle with "
                   "wit ."),
    ("n10", "NEG", "the first hour is pleasant and the songs are nice . "
                   "then the plot becomes a jumble , the pacing crawls , "
                   "and the ending disappoints ."),
    ("n11", "NEG", "this sequel wastes a fine premise . the dialogue is "
                   "awkward ."),
    # --- hard or impossible to flip (expected FAILED) ---
    ("p12", "POS", "an unforgettable masterpiece . brilliant , hilarious "
                   "and wonderfully moving ."),
    ("p13", "POS", "the cast shines . every scene sparkles with wit ."),
    ("n12", "NEG", "a terrible , stupid disaster of a movie . awful from "
                   "start to finish ."),
    ("n13", "NEG", "dreadfully dull and badly made . a boring , tedious "
                   "chore ."),
    # --- longer document (several sentences, exercises ranking depth) ---
    ("p14", "POS", "i loved this picture . the story is an old one , but "
                   "the script is clever . the cast is good and the music "
                   "is lovely . two scenes run long . the ending is a "
                   "quiet delight . you will leave with a smile ."),
    ("n14", "NEG", "i wanted to love this movie . the first scene is "
                   "funny . everything after it is a disaster . the "
                   "dialogue is stupid , the pacing is poor , and the "
                   "songs are dreary . a waste of a fine cast ."),
    # --- victim gets these wrong: attack skips them ---
    ("p15", "POS", "an odd , awkward picture , but i cherish it ."),
    ("n15", "NEG", "a pleasant and charming surprise at first , yet finally "
                   "hollow ."),
]

EXTRA_WEIGHTS = {
    # words used by the corpus that carry sentiment for the victim but are
    # not part of any synonym cluster
    "winning": 1.2,
    "flat": -0.6,
    "stifling": -0.4,
    "waste": -1.4,
    "hollow": -0.9,
    "smile": 0.6,
    "roaring": 0.4,
    "heart": 0.5,
    "lands": 0.3,
    "surprise": 0.3,
}


def normalize(token: str) -> str:
    return token.strip("".join(c for c in token if not (c.isalnum() or c == "'"))) or token


def words_of(text: str):
    out = []
    for chunk in text.split():
        core = chunk.strip(".,!?;:()\"-")
        if not core:
            continue
        if core.replace(".", "").replace(",", "").replace("-", "").isdigit():
            continue
        out.append(core.lower())
    return out


def weight_of(word: str) -> float:
    if word in WORDS:
        return WORDS[word][1]
    return EXTRA_WEIGHTS.get(word, 0.0)


def victim_label(text: str) -> str:
    total = sum(weight_of(w) for w in words_of(text))
    return "POS" if total > 0 else "NEG"


def unit(vec):
    n = math.sqrt(sum(x * x for x in vec))
    return [x / n for x in vec]


def gen_vectors(rng):
    """Cluster members share a center; standalone words get fresh directions.

    Rejection sampling keeps intra-cluster cosines in [0.55, 0.97] and every
    cross-cluster / standalone cosine below 0.42, well under the 0.5 synonym
    floor the attack uses by default.
    """
    clusters = {}
    for word, (_tag, _w, cid) in WORDS.items():
        if cid is not None:
            clusters.setdefault(cid, []).append(word)

    def sample_until(make, ok, tries=10000):
        for _ in range(tries):
            v = make()
            if ok(v):
                return v
        raise RuntimeError("rejection sampling did not converge")

    centers = {}
    for cid in sorted(clusters):
        centers[cid] = sample_until(
            lambda: unit([rng.gauss(0, 1) for _ in range(DIM)]),
            lambda v: all(abs(cos(v, c)) < 0.20 for c in centers.values()),
        )

    vectors = {}

    def member_ok(word, cid, v):
        for other, ov in vectors.items():
            same = WORDS.get(other, (None, None, None))[2] == cid
            c = cos(v, ov)
            if same and not (0.55 <= c <= 0.97):
                return False
            if not same and c >= 0.42:
                return False
        return True

    for cid in sorted(clusters):
        for word in sorted(clusters[cid]):
            # noise norm ~sigma*sqrt(DIM); cosine to center ~1/(1+norm^2)
            def make():
                sigma = rng.uniform(0.05, 0.095)
                noise = [sigma * rng.gauss(0, 1) for _ in range(DIM)]
                return unit([c + n for c, n in zip(centers[cid], noise)])
            vectors[word] = sample_until(make, lambda v: member_ok(word, cid, v))

    standalone = sorted(
        {w for w, (_t, _w, cid) in WORDS.items() if cid is None}
        | set(FILLER) | set(EXTRA_WEIGHTS)
    )
    for word in standalone:
        if word in vectors:
            continue
        vectors[word] = sample_until(
            lambda: unit([rng.gauss(0, 1) for _ in range(DIM)]),
            lambda v: all(cos(v, ov) < 0.42 for ov in vectors.values()),
        )
    return vectors, clusters


def cos(a, b):
    return sum(x * y for x, y in zip(a, b))


def validate(vectors, clusters):
    problems = []
    cluster_of = {}
    for cid, members in clusters.items():
        for w in members:
            cluster_of[w] = cid
    words = sorted(vectors)
    for i, wa in enumerate(words):
        for wb in words[i + 1:]:
            c = cos(vectors[wa], vectors[wb])
            same = cluster_of.get(wa) is not None and cluster_of.get(wa) == cluster_of.get(wb)
            if same and c < 0.55:
                problems.append(f"intra-cluster cosine too low: {wa}/{wb} = {c:.3f}")
            if not same and c >= 0.45:
                problems.append(f"cross-cluster cosine too high: {wa}/{wb} = {c:.3f}")
    return problems


def build(out_dir: Path, check_only: bool) -> int:
    rng = random.Random(SEED)
    vectors, clusters = gen_vectors(rng)
    problems = validate(vectors, clusters)

    # Corpus sanity: victim label must match the ground truth for all but the
    # two planted misclassified documents.
    planted = {"p15", "n15"}
    pos = neg = 0
    for doc_id, truth, text in CORPUS:
        vl = victim_label(text)
        if doc_id in planted:
            if vl == truth:
                problems.append(f"{doc_id}: expected the victim to misjudge it")
        elif vl != truth:
            total = sum(weight_of(w) for w in words_of(text))
            problems.append(f"{doc_id}: victim says {vl} (sum {total:+.2f}), truth {truth}")
        pos += truth == "POS"
        neg += truth == "NEG"
    if pos != 15 or neg != 15:
        problems.append(f"class balance off: {pos} POS / {neg} NEG")

    for p in problems:
        print("FIXTURE PROBLEM:", p, file=sys.stderr)
    if problems:
        return 1

    emb_lines = []
    for word in sorted(vectors):
        emb_lines.append(word + " " + " ".join(f"{x:.6f}" for x in vectors[word]))
    emb_text = "\n".join(emb_lines) + "\n"

    weights = {w: spec[1] for w, spec in sorted(WORDS.items()) if spec[1] != 0.0}
    weights.update({w: v for w, v in sorted(EXTRA_WEIGHTS.items())})
    victim = dict(sorted(weights.items()))
    victim["__bias__"] = 0.0
    victim["__positive_label__"] = "POS"
    victim["__negative_label__"] = "NEG"
    victim_text = json.dumps(victim, indent=2) + "\n"

    corpus_text = "".join(
        json.dumps({"id": i, "label": l, "text": t}) + "\n" for i, l, t in CORPUS
    )

    targets = {
        "embeddings_50d.txt": emb_text,
        "victim_lexicon.json": victim_text,
        "reviews.jsonl": corpus_text,
    }
    rc = 0
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, content in targets.items():
        path = out_dir / name
        if check_only:
            if not path.exists() or path.read_text() != content:
                print(f"STALE: {path}", file=sys.stderr)
                rc = 1
        else:
            path.write_text(content)
            print(f"wrote {path} ({len(content)} bytes)")
    print(f"vocabulary: {len(vectors)} words, dim {DIM}")
    return rc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "fixtures"))
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    sys.exit(build(Path(args.out), args.check))


if __name__ == "__main__":
    main()
