#!/usr/bin/env python3
"""Writes the bundled synthetic lexicons, prompt, posts and gold labels.

Everything is derived from a fixed seed, so rerunning reproduces the
committed files byte for byte.

    python3 scripts/generate_synthetic.py [--root .]
"""
import argparse
import json
import random
from datetime import datetime, timedelta, timezone
from pathlib import Path

SEED = 20130101

# word -> emotions (flag 1). Surface forms only; the toolkit does no stemming.
EMOTIONS = {
    "abandon": ["fear", "sadness", "negative"],
    "afraid": ["fear", "negative"],
    "alarm": ["fear", "surprise", "negative"],
    "anxious": ["anticipation", "fear", "negative"],
    "awful": ["anger", "disgust", "fear", "sadness", "negative"],
    "bad": ["anger", "disgust", "fear", "sadness", "negative"],
    "betray": ["anger", "disgust", "sadness", "surprise", "negative"],
    "blame": ["anger", "disgust", "negative"],
    "calm": ["trust", "positive"],
    "care": ["trust", "positive"],
    "celebrate": ["anticipation", "joy", "surprise", "trust", "positive"],
    "cheer": ["anticipation", "joy", "surprise", "trust", "positive"],
    "confident": ["joy", "trust", "positive"],
    "corrupt": ["negative"],
    "cure": ["joy", "trust", "positive"],
    "danger": ["fear", "negative"],
    "dead": ["anger", "disgust", "fear", "sadness", "negative"],
    "death": ["anger", "anticipation", "disgust", "fear", "sadness", "surprise", "negative"],
    "disaster": ["anger", "disgust", "fear", "sadness", "surprise", "negative"],
    "disease": ["anger", "disgust", "fear", "sadness", "negative"],
    "doctor": ["trust", "positive"],
    "doubt": ["fear", "negative", "sadness", "trust"],
    "eager": ["anticipation", "joy", "positive"],
    "evil": ["anger", "disgust", "fear", "negative"],
    "expect": ["anticipation", "positive", "surprise", "trust"],
    "fake": ["negative"],
    "fear": ["anger", "fear", "negative"],
    "fight": ["anger", "fear", "negative"],
    "fraud": ["anger", "negative"],
    "friend": ["joy", "trust", "positive"],
    "good": ["anticipation", "joy", "surprise", "trust", "positive"],
    "grateful": ["positive"],
    "grief": ["sadness", "negative"],
    "happy": ["anticipation", "joy", "trust", "positive"],
    "harm": ["fear", "negative"],
    "hate": ["anger", "disgust", "fear", "sadness", "negative"],
    "healthy": ["positive"],
    "hope": ["anticipation", "joy", "surprise", "trust", "positive"],
    "horrible": ["anger", "disgust", "fear", "negative"],
    "hospital": ["fear", "sadness", "trust"],
    "kill": ["fear", "sadness", "negative"],
    "liar": ["disgust", "negative"],
    "lie": ["anger", "disgust", "negative", "sadness"],
    "lose": ["anger", "disgust", "fear", "sadness", "surprise", "negative"],
    "love": ["joy", "positive"],
    "lucky": ["joy", "surprise", "positive"],
    "mandate": ["negative"],
    "nurse": ["trust", "positive"],
    "pain": ["fear", "sadness", "negative"],
    "panic": ["fear", "negative"],
    "poison": ["anger", "disgust", "fear", "sadness", "negative"],
    "protect": ["positive"],
    "proud": ["anticipation", "joy", "trust", "positive"],
    "relief": ["positive"],
    "risk": ["anticipation", "fear", "negative"],
    "sad": ["sadness", "negative"],
    "safe": ["joy", "trust", "positive"],
    "scam": ["anger", "disgust", "negative"],
    "scary": ["fear", "negative"],
    "science": ["positive"],
    "sick": ["disgust", "negative", "sadness"],
    "sudden": ["fear", "surprise", "negative"],
    "suffer": ["negative", "sadness"],
    "surprise": ["fear", "joy", "surprise", "anticipation"],
    "thankful": ["positive"],
    "threat": ["anger", "fear", "negative"],
    "toxic": ["disgust", "negative"],
    "trust": ["trust"],
    "wait": ["anticipation", "negative"],
    "worry": ["anticipation", "fear", "negative", "sadness"],
    "wow": ["surprise", "positive"],
    # Excluded at load time by the default lists.
    "vaccine": ["trust", "positive"],
    "vaccination": ["trust", "positive"],
    "flu": ["fear", "negative"],
    "measles": ["disgust", "fear", "negative"],
}

ALL_EMOTIONS = ["anger", "anticipation", "disgust", "fear", "joy", "negative", "positive", "sadness",
                "surprise", "trust"]

# word -> (warmth, sociability, trust, competence, arousal)
WARMTH = {
    "care": (0.92, 0.88, 0.85, 0.62, 0.35),
    "friend": (0.95, 0.97, 0.86, 0.55, 0.40),
    "doctor": (0.74, 0.62, 0.83, 0.91, 0.42),
    "nurse": (0.86, 0.75, 0.84, 0.80, 0.38),
    "science": (0.58, 0.44, 0.72, 0.95, 0.41),
    "safe": (0.80, 0.61, 0.88, 0.70, 0.18),
    "protect": (0.84, 0.60, 0.86, 0.78, 0.52),
    "grateful": (0.90, 0.82, 0.80, 0.57, 0.33),
    "thankful": (0.91, 0.84, 0.79, 0.55, 0.30),
    "hope": (0.81, 0.70, 0.74, 0.56, 0.47),
    "love": (0.97, 0.94, 0.83, 0.52, 0.71),
    "happy": (0.88, 0.90, 0.70, 0.58, 0.68),
    "calm": (0.76, 0.55, 0.78, 0.66, 0.08),
    "cure": (0.78, 0.50, 0.77, 0.86, 0.46),
    "confident": (0.66, 0.70, 0.69, 0.90, 0.61),
    "healthy": (0.74, 0.63, 0.71, 0.79, 0.44),
    "effective": (0.55, 0.41, 0.70, 0.93, 0.49),
    "expert": (0.52, 0.40, 0.71, 0.96, 0.45),
    "strong": (0.55, 0.52, 0.62, 0.89, 0.70),
    "community": (0.85, 0.92, 0.76, 0.60, 0.40),
    "family": (0.93, 0.95, 0.85, 0.54, 0.45),
    "kids": (0.84, 0.86, 0.66, 0.31, 0.66),
    "clinic": (0.60, 0.45, 0.67, 0.74, 0.30),
    "dose": (0.45, 0.35, 0.50, 0.60, 0.35),
    "shot": (0.40, 0.36, 0.45, 0.55, 0.62),
    "news": (0.48, 0.52, 0.46, 0.57, 0.52),
    "study": (0.50, 0.38, 0.62, 0.85, 0.36),
    "report": (0.46, 0.40, 0.55, 0.68, 0.34),
    "wait": (0.44, 0.38, 0.47, 0.40, 0.22),
    "risk": (0.30, 0.28, 0.26, 0.45, 0.72),
    "doubt": (0.28, 0.30, 0.15, 0.34, 0.45),
    "worry": (0.35, 0.32, 0.30, 0.27, 0.66),
    "afraid": (0.36, 0.25, 0.29, 0.14, 0.74),
    "scary": (0.20, 0.22, 0.18, 0.37, 0.85),
    "panic": (0.22, 0.20, 0.19, 0.12, 0.93),
    "sick": (0.31, 0.18, 0.36, 0.16, 0.51),
    "pain": (0.25, 0.19, 0.30, 0.22, 0.77),
    "weak": (0.42, 0.31, 0.39, 0.06, 0.28),
    "useless": (0.21, 0.17, 0.23, 0.04, 0.41),
    "failed": (0.24, 0.22, 0.21, 0.08, 0.56),
    "clueless": (0.35, 0.38, 0.26, 0.05, 0.38),
    "incompetent": (0.27, 0.26, 0.20, 0.03, 0.50),
    "ineffective": (0.32, 0.28, 0.25, 0.07, 0.34),
    "liar": (0.06, 0.18, 0.02, 0.41, 0.73),
    "lie": (0.09, 0.20, 0.04, 0.39, 0.62),
    "fraud": (0.05, 0.16, 0.03, 0.45, 0.77),
    "scam": (0.07, 0.14, 0.05, 0.42, 0.74),
    "corrupt": (0.05, 0.22, 0.04, 0.55, 0.70),
    "evil": (0.03, 0.10, 0.06, 0.48, 0.86),
    "greedy": (0.08, 0.19, 0.10, 0.52, 0.69),
    "poison": (0.09, 0.08, 0.11, 0.30, 0.80),
    "toxic": (0.10, 0.09, 0.12, 0.28, 0.78),
    "hate": (0.04, 0.07, 0.12, 0.36, 0.90),
    "betray": (0.05, 0.12, 0.02, 0.38, 0.81),
    "blame": (0.18, 0.21, 0.20, 0.40, 0.64),
    "threat": (0.14, 0.16, 0.13, 0.50, 0.83),
    "danger": (0.19, 0.20, 0.17, 0.42, 0.86),
    "harm": (0.12, 0.15, 0.16, 0.33, 0.75),
    "kill": (0.04, 0.05, 0.09, 0.40, 0.94),
    "fake": (0.16, 0.25, 0.07, 0.23, 0.58),
    "mandate": (0.29, 0.27, 0.31, 0.58, 0.60),
    "forced": (0.17, 0.24, 0.19, 0.46, 0.71),
    "dead": (0.20, 0.08, 0.30, 0.10, 0.63),
    "disaster": (0.15, 0.14, 0.21, 0.09, 0.88),
    "horrible": (0.11, 0.13, 0.18, 0.19, 0.80),
    "awful": (0.14, 0.15, 0.20, 0.21, 0.72),
    "vaccine": (0.60, 0.40, 0.60, 0.70, 0.40),
    "polio": (0.25, 0.20, 0.30, 0.20, 0.60),
}

EXCLUSIONS = ["# Site-specific additions to the built-in vaccine and illness lists.", "booster", "boosters",
              "smallpox", "shingles", ""]

PROMPT = (
    "Read the following social media post and infer the stance of its author towards {target}.\n"
    "Answer with exactly one of: \"favor\", \"against\", or \"neither of the two inferences can be "
    "reasonably made\".\n"
    "Do not explain your answer.\n"
    "\n"
    "Post: {text}\n"
    "Stance:\n"
)

FAVOR = [
    "Got my {shot} today, so grateful to the nurse and doctor at the clinic",
    "Booked the kids for their dose, science keeps our family safe",
    "Thankful for every nurse who helps protect the community",
    "Vaccines are safe and effective, trust the science and protect your family",
    "Finally got the jab, feeling confident and healthy",
    "Love how our clinic made the vaccine easy, grateful and happy",
    "Study after study says the vaccine is effective, good news for kids",
    "Proud of our doctors, the vaccination drive is a relief",
]
AGAINST = [
    "This vaccine is poison and the mandate is a scam",
    "I refuse to be forced, they lie about the harm",
    "Corrupt officials and greedy companies push this toxic jab",
    "Another fraud, the vaccine is dangerous and they blame us",
    "Never taking it, the risk is real and the experts are clueless",
    "Fake safety report, the shot failed and they hide the injury",
    "The mandate is evil, stop the hoax before more harm",
    "Useless and ineffective, the rollout is a disaster and a scam",
]
NEUTRAL = [
    "Clinic hours for the vaccine changed this week according to the report",
    "News report on the vaccination schedule for the county",
    "Reading a study about vaccine uptake in different regions",
    "Does anyone know if the pharmacy still does walk ins for the shot",
    "The county posted new numbers on the vaccine program today",
    "Wait times at the clinic are about an hour",
]
FILLER = ["afraid", "worry", "panic", "sick", "pain", "doubt", "hope", "calm", "happy", "sad", "grief",
          "surprise", "wow", "eager", "expect", "anxious", "scary", "alarm", "sudden", "lucky", "cheer",
          "suffer", "danger", "threat", "dead", "death", "disease", "hospital", "flu", "measles", "polio",
          "booster", "weak", "incompetent", "failed", "community", "strong", "expert", "friend", "care"]
BAND = [
    "The Vaccines music band",
    "The Vaccines music band live",
    "the vaccines music band new album",
    "The Vaccines music band tour",
    "The Vaccines band music",
]
DECOR = [" https://t.co/{code}", " @{handle}", " :)", " <3", " \U0001F489", " été", " www.example.org/x",
         " ", " #vaccineswork", " :-(", " \U0001F637 stay safe"]


def fmt_ts(dt, rng):
    style = rng.randrange(6)
    if style == 0:
        return dt.strftime("%Y-%m-%dT%H:%M:%S") + ".%03dZ" % rng.randrange(1000)
    if style == 1:
        off = rng.choice([-5, -3, 2, 9])
        local = dt + timedelta(hours=off)
        sign = "+" if off >= 0 else "-"
        return local.strftime("%Y-%m-%dT%H:%M:%S") + "%s%02d:00" % (sign, abs(off))
    return dt.strftime("%Y-%m-%dT%H:%M:%SZ")


def random_time(rng, start, end):
    span = int((end - start).total_seconds())
    return start + timedelta(seconds=rng.randrange(span))


def decorate(text, rng):
    for _ in range(rng.choice([0, 0, 1, 1, 2])):
        d = rng.choice(DECOR).format(code="".join(rng.choice("abcdefXYZ123") for _ in range(6)),
                                     handle="user%d" % rng.randrange(500))
        text += d
    if rng.random() < 0.5:
        text += " " + " ".join(rng.choice(FILLER) for _ in range(rng.randrange(1, 4)))
    return text


def build_posts(rng):
    start = datetime(2013, 1, 1, tzinfo=timezone.utc)
    end = datetime(2023, 1, 1, tzinfo=timezone.utc)
    split = datetime(2020, 1, 1, tzinfo=timezone.utc)
    users = ["u%03d" % i for i in range(180)]
    lines = []
    gold = []
    next_id = [1]

    def new_id():
        pid = "p%05d" % next_id[0]
        next_id[0] += 1
        return pid

    def add(obj):
        lines.append(json.dumps(obj, ensure_ascii=rng.random() < 0.5))

    def stance_text(kind):
        pool = {"favor": FAVOR, "against": AGAINST, "neutral": NEUTRAL}[kind]
        return rng.choice(pool).format(shot=rng.choice(["shot", "dose", "booster"]))

    # Gold posts: unique users, one per day, never re-posts or band posts.
    gold_kinds = ["favor"] * 20 + ["against"] * 20 + ["neutral"] * 20
    rng.shuffle(gold_kinds)
    for i, kind in enumerate(gold_kinds):
        dt = random_time(rng, start, end)
        pid = new_id()
        text = decorate(stance_text(kind), rng)
        add({"id": pid, "user_id": "gold%02d" % i, "created_at": fmt_ts(dt, rng), "text": text})
        gold.append({"post_id": pid, "label": kind})

    # Regular posts; stance mix shifts towards against in the second era.
    for _ in range(740):
        dt = random_time(rng, start, end)
        covid = dt >= split
        weights = [0.45, 0.25, 0.30] if not covid else [0.38, 0.37, 0.25]
        kind = rng.choices(["favor", "against", "neutral"], weights)[0]
        add({"id": new_id(), "user_id": rng.choice(users), "created_at": fmt_ts(dt, rng),
             "text": decorate(stance_text(kind), rng)})

    # Same user, same UTC day: earliest survives, including an id tie on time.
    for _ in range(40):
        dt = random_time(rng, start, end).replace(hour=12)
        user = rng.choice(users)
        for offset in (-rng.randrange(1, 600), rng.randrange(1, 600)):
            add({"id": new_id(), "user_id": user, "created_at": (dt + timedelta(minutes=offset)).strftime(
                "%Y-%m-%dT%H:%M:%SZ"), "text": decorate(stance_text("neutral"), rng)})
    for _ in range(10):
        dt = random_time(rng, start, end).replace(hour=8, microsecond=0)
        user = rng.choice(users)
        stamp = dt.strftime("%Y-%m-%dT%H:%M:%SZ")
        for _ in range(2):
            add({"id": new_id(), "user_id": user, "created_at": stamp, "text": stance_text("favor")})

    # Band posts removed by the semantic filter.
    for _ in range(40):
        dt = random_time(rng, start, end)
        add({"id": new_id(), "user_id": rng.choice(users), "created_at": fmt_ts(dt, rng),
             "text": rng.choice(BAND) + rng.choice(["", " \U0001F3B8", " https://t.co/band"])})

    # Re-posts.
    for i in range(40):
        dt = random_time(rng, start, end)
        obj = {"id": new_id(), "user_id": rng.choice(users), "created_at": fmt_ts(dt, rng)}
        if i % 2 == 0:
            obj["text"] = "RT @user%d: %s" % (rng.randrange(500), stance_text("favor"))
        else:
            obj["text"] = stance_text("against")
            obj["is_repost"] = True
        add(obj)

    # Malformed lines.
    bad = [
        '{"id": "bad1", "user_id": "u001", "created_at": "2015-02-03T04:05:06Z"',
        '{"id": "bad2", "user_id": "u001", "text": "no timestamp"}',
        '{"id": "bad3", "user_id": "u001", "created_at": "2015-13-45T00:00:00Z", "text": "bad date"}',
        '{"id": "", "user_id": "u001", "created_at": "2015-02-03T04:05:06Z", "text": "empty id"}',
        '{"id": "bad5", "user_id": 7, "created_at": "2015-02-03T04:05:06Z", "text": "numeric user"}',
        '{"id": "bad6", "user_id": "u001", "created_at": "2015-02-03T04:05:06Z", "text": "x", "is_repost": "yes"}',
        '[1, 2, 3]',
        'not json at all',
        '{"id": "bad9", "user_id": "u001", "created_at": "yesterday", "text": "relative date"}',
        '{"id": "bad10", "user_id": "u001", "created_at": "2015-02-03T04:05:06Z"}',
    ]
    for i in range(20):
        lines.append(bad[i % len(bad)].replace('"bad', '"bad%d_' % i) if i >= len(bad) else bad[i])

    rng.shuffle(lines)
    assert len(lines) == 1000, len(lines)
    gold.sort(key=lambda g: g["post_id"])
    return lines, gold


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--root", default=".")
    args = ap.parse_args()
    root = Path(args.root)
    rng = random.Random(SEED)

    lex = root / "data" / "lexicons"
    lex.mkdir(parents=True, exist_ok=True)
    rows = []
    for word in sorted(EMOTIONS):
        for emo in ALL_EMOTIONS:
            rows.append("%s\t%s\t%d" % (word, emo, 1 if emo in EMOTIONS[word] else 0))
    (lex / "emotion.tsv").write_text("\n".join(rows) + "\n")
    wrows = ["word,warmth,sociability,trust,competence,arousal"]
    for word in sorted(WARMTH):
        wrows.append(word + "," + ",".join("%.2f" % v for v in WARMTH[word]))
    (lex / "warmth.csv").write_text("\n".join(wrows) + "\n")
    (lex / "exclusions.txt").write_text("\n".join(EXCLUSIONS))

    prompts = root / "data" / "prompts"
    prompts.mkdir(parents=True, exist_ok=True)
    (prompts / "stance.txt").write_text(PROMPT)

    syn = root / "data" / "synthetic"
    syn.mkdir(parents=True, exist_ok=True)
    lines, gold = build_posts(rng)
    (syn / "posts.jsonl").write_text("\n".join(lines) + "\n")
    (syn / "gold.jsonl").write_text("".join(json.dumps(g) + "\n" for g in gold))


if __name__ == "__main__":
    main()
