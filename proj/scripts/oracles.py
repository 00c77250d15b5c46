#!/usr/bin/env python3
"""Independent reference computations used to freeze test expectations.

Written from the documented rules, sharing no code with the C++ sources.

    oracles.py ingest <posts.jsonl>                  -> JSON summary + surviving ids
    oracles.py densities <corpus.jsonl> <lexicon_dir> -> month,category,count,total CSV
    oracles.py quantiles                              -> t, chi-square and normal reference values
"""
import json
import math
import re
import sys
from collections import defaultdict
from datetime import datetime, timedelta, timezone
from pathlib import Path

EMOTICONS = {":)", ":-)", ":(", ":-(", ":D", ":-D", ";)", ";-)", ":P", ":-P", ":p", ":-p", ":'(", ":/", ":-/",
             ":|", ":-|", ":o", ":O", ":-O", "<3", "</3", "=)", "=(", ":]", ":[", ";D", "xD", "XD", ":*", ":-*",
             "^_^", "-_-", "o_O", "O_o", "T_T", ":')", ":-))", ":-(("}
UNICODE_SPACES = {0x00A0, 0x1680, 0x2028, 0x2029, 0x202F, 0x205F, 0x3000, 0x0085} | set(range(0x2000, 0x200B))
ASCII_WS = " \t\n\r\v\f"
ANCHOR = "The Vaccines music band"
THRESHOLD = 0.7
DIM = 256

VACCINE = ["vaccine", "vaccines", "vaccination", "vaccinations", "vaccinate", "vaccinated", "vaccinating"]
ILLNESS = ["flu", "influenza", "polio", "amnesia", "measles", "mumps", "rubella", "smallpox", "tetanus",
           "diphtheria", "pertussis", "hepatitis", "tuberculosis", "malaria", "cholera", "rabies", "ebola", "hiv",
           "aids", "cancer", "autism", "disease", "illness", "sickness", "infection", "virus", "pneumonia", "fever",
           "depression", "anxiety", "dementia", "schizophrenia", "insanity", "diabetes", "epidemic", "pandemic",
           "plague", "leprosy", "shingles", "chickenpox", "meningitis", "covid"]
EMOTION_ORDER = ["anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust", "negative",
                 "positive"]
DIMENSIONS = ["warmth", "sociability", "trust", "competence"]
TS = re.compile(r"^(\d{4})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?(Z|[+-]\d{2}:\d{2})$")


def parse_ts(s):
    m = TS.match(s)
    if not m:
        return None
    y, mo, d, h, mi, se = (int(m.group(i)) for i in range(1, 7))
    try:
        dt = datetime(y, mo, d, h, mi, se, tzinfo=timezone.utc)
    except ValueError:
        return None
    z = m.group(8)
    if z != "Z":
        sign = 1 if z[0] == "+" else -1
        dt -= sign * timedelta(hours=int(z[1:3]), minutes=int(z[4:6]))
    return dt


def clean(text):
    chars = []
    for ch in text:
        cp = ord(ch)
        if cp < 0x80:
            chars.append(" " if cp < 0x20 or cp == 0x7F else ch)
        elif cp in UNICODE_SPACES:
            chars.append(" ")
    s = "".join(chars)
    out = []
    i = 0
    while i < len(s):
        low = s[i:i + 8].lower()
        if low.startswith("http://") or low.startswith("https://") or low.startswith("www."):
            while i < len(s) and s[i] not in ASCII_WS:
                i += 1
            out.append(" ")
            continue
        if (s[i] == "@" and i + 1 < len(s) and (s[i + 1].isascii() and (s[i + 1].isalnum() or s[i + 1] == "_"))
                and (not out or not (out[-1].isascii() and out[-1].isalnum()))):
            i += 1
            while i < len(s) and s[i].isascii() and (s[i].isalnum() or s[i] == "_"):
                i += 1
            out.append(" ")
            continue
        out.append(s[i])
        i += 1
    tokens = re.split("[" + re.escape(ASCII_WS) + "]+", "".join(out))
    return " ".join(t for t in tokens if t and t not in EMOTICONS)


def tokenize(text):
    return re.findall(r"[a-z0-9]+", text.lower())


def fnv1a64(data):
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def embed(text):
    v = [0] * DIM
    for t in tokenize(text):
        v[fnv1a64(t.encode()) % DIM] += 1
    return v


def cosine(a, b):
    na = sum(x * x for x in a)
    nb = sum(x * x for x in b)
    if na == 0:
        return 0.0
    return sum(x * y for x, y in zip(a, b)) / math.sqrt(na * nb)


def ingest(path):
    lines = rejected = raw = reposts = 0
    posts = []
    for line in Path(path).read_text(encoding="utf-8").split("\n"):
        if not line.strip(" \t"):
            continue
        lines += 1
        try:
            obj = json.loads(line)
        except ValueError:
            rejected += 1
            continue
        ok = (isinstance(obj, dict) and isinstance(obj.get("id"), str) and obj["id"] != ""
              and isinstance(obj.get("user_id"), str) and isinstance(obj.get("created_at"), str)
              and isinstance(obj.get("text"), str) and parse_ts(obj["created_at"]) is not None
              and ("is_repost" not in obj or isinstance(obj["is_repost"], bool)))
        if not ok:
            rejected += 1
            continue
        raw += 1
        if obj.get("is_repost") is True or obj["text"].startswith("RT @"):
            reposts += 1
            continue
        posts.append((parse_ts(obj["created_at"]), obj["id"], obj["user_id"], clean(obj["text"])))
    best = {}
    for p in posts:
        key = (p[2], p[0].date())
        if key not in best or (p[0], p[1]) < (best[key][0], best[key][1]):
            best[key] = p
    deduped = sorted(best.values(), key=lambda p: (p[0], p[1]))
    anchor = embed(ANCHOR)
    kept = [p for p in deduped if cosine(embed(p[3]), anchor) < THRESHOLD]
    return {
        "summary": {"lines": lines, "rejected": rejected, "raw": raw, "reposts": reposts,
                    "after_dedup": len(deduped), "after_filter": len(kept),
                    "unique_users": len({p[2] for p in kept})},
        "corpus_ids": [p[1] for p in kept],
    }


def load_lexicons(lexdir):
    lexdir = Path(lexdir)
    excluded = set(VACCINE) | set(ILLNESS)
    exc = lexdir / "exclusions.txt"
    if exc.exists():
        for line in exc.read_text().splitlines():
            w = line.split("#", 1)[0].strip().lower()
            if w:
                excluded.add(w)
    emotions = defaultdict(set)
    for line in (lexdir / "emotion.tsv").read_text().splitlines():
        if not line.strip():
            continue
        word, cat, flag = line.split("\t")
        word = word.lower()
        if word in excluded:
            continue
        if flag == "1":
            emotions[word].add(cat)
        else:
            emotions[word].discard(cat)
    rows = (lexdir / "warmth.csv").read_text().splitlines()
    header = rows[0].split(",")
    warmth = {}
    for line in rows[1:]:
        if not line.strip():
            continue
        rec = dict(zip(header, line.split(",")))
        word = rec["word"].lower()
        if word not in excluded:
            warmth[word] = {d: float(rec[d if d != "competence" or "competence" in rec else "dominance"])
                            for d in DIMENSIONS}
    return emotions, warmth


def densities(corpus, lexdir, low=1.0 / 3.0):
    emotions, warmth = load_lexicons(lexdir)
    counts = defaultdict(lambda: defaultdict(int))
    totals = defaultdict(int)
    for line in Path(corpus).read_text().splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        month = parse_ts(obj["created_at"]).strftime("%Y-%m")
        tokens = tokenize(obj["text"])
        totals[month] += len(tokens)
        for t in tokens:
            for cat in emotions.get(t, ()):
                counts[month][cat] += 1
            if t in warmth:
                for d in DIMENSIONS:
                    if warmth[t][d] < low:
                        counts[month]["low-" + d] += 1
    cats = EMOTION_ORDER + ["low-" + d for d in DIMENSIONS]
    out = ["month,category,emotion_word_count,token_total"]
    for month in sorted(totals):
        if totals[month] == 0:
            continue
        for c in cats:
            out.append("%s,%s,%d,%d" % (month, c, counts[month][c], totals[month]))
    return "\n".join(out) + "\n"


def quantiles():
    """40-digit quantiles by root finding on mpmath CDFs (scipy's t.ppf is
    only good to about 1e-11 here)."""
    import mpmath as mp

    mp.mp.dps = 40

    def t_cdf(x, df):
        return mp.betainc(df / 2.0, 0.5, 0, df / (df + x * x), regularized=True)

    def t_crit(alpha, df):  # upper alpha/2 point
        return mp.findroot(lambda x: t_cdf(x, df) / 2 - mp.mpf(alpha) / 2, 1.0)

    def chi2_crit(alpha, df):
        return mp.findroot(lambda x: mp.gammainc(df / 2.0, x / 2, mp.inf, regularized=True) - alpha, df)

    rows = [("t", 0.32, 1, t_crit(0.32, 1)), ("t", 0.05, 10, t_crit(0.05, 10)),
            ("t", 0.32, 49, t_crit(0.32, 49)), ("t", 0.32, 9999, t_crit(0.32, 9999)),
            ("chi2", 0.32, 2, chi2_crit(0.32, 2)), ("chi2", 0.05, 3, chi2_crit(0.05, 3))]
    out = ["dist,alpha,df,value"]
    out += ["%s,%s,%d,%s" % (d, a, df, mp.nstr(v, 17)) for d, a, df, v in rows]
    for z in (1.96, -0.5):
        out.append("normal_sf,%s,,%s" % (z, mp.nstr(mp.ncdf(-z), 17)))
    return "\n".join(out) + "\n"


def main():
    if len(sys.argv) >= 3 and sys.argv[1] == "ingest":
        print(json.dumps(ingest(sys.argv[2]), indent=2))
    elif len(sys.argv) >= 4 and sys.argv[1] == "densities":
        sys.stdout.write(densities(sys.argv[2], sys.argv[3]))
    elif len(sys.argv) >= 2 and sys.argv[1] == "quantiles":
        sys.stdout.write(quantiles())
    else:
        sys.exit(__doc__)


if __name__ == "__main__":
    main()
