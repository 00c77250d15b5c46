#!/usr/bin/env python3
"""Writes the 100-post density fixture (canonical corpus layout) to stdout.

Texts mix lexicon words, filler, hashtags, hyphenated runs and uppercase so
the tokenizer rules matter. Freeze the expected densities with
`oracles.py densities tests/fixtures/density_100.jsonl data/lexicons`.
"""
import csv
import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
rng = random.Random(100)

lex = ROOT / "data" / "lexicons"
emotion_words = sorted({line.split("\t")[0] for line in (lex / "emotion.tsv").read_text().splitlines() if line})
with open(lex / "warmth.csv") as f:
    warmth_words = sorted(row["word"] for row in csv.DictReader(f))
filler = ["the", "a", "clinic", "today", "line", "2021", "we", "went", "to", "and", "it", "was", "x9"]

posts = []
for i in range(100):
    month = 1 + i % 5
    day = 1 + rng.randrange(28)
    ts = "2021-%02d-%02dT%02d:%02d:%02dZ" % (month, day, rng.randrange(24), rng.randrange(60), rng.randrange(60))
    words = []
    for _ in range(rng.randint(0 if i == 7 else 1, 14)):
        pick = rng.random()
        pool = emotion_words if pick < 0.35 else warmth_words if pick < 0.6 else filler
        w = rng.choice(pool)
        style = rng.random()
        if style < 0.1:
            w = "#" + w
        elif style < 0.2:
            w = w.upper()
        elif style < 0.25:
            w = w + "-" + rng.choice(filler)
        elif style < 0.3:
            w = w + ","
        words.append(w)
    posts.append({"id": "d%03d" % i, "user_id": "u%02d" % (i % 37), "created_at": ts, "text": " ".join(words)})

posts.sort(key=lambda p: (p["created_at"], p["id"]))
for p in posts:
    print(json.dumps(p, separators=(",", ":")))
