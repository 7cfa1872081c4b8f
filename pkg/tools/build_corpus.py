"""Regenerate src/freepoisson/data/depend_corpus.jsonl.

Hand-written systems carry a predicted status that is checked against
both the decision procedure and the bounded brute-force oracle before
being frozen; generated systems are labeled only when the two routes
agree.  Run from the repository root:  python3 tools/build_corpus.py
"""

import json
import pathlib
import random

from freepoisson import depend, syntax

# (elements, predicted status); all n = 2, sizes 1..3, hdeg <= 2,
# coefficient degree <= 2.
HAND = [
    (["h(x1)", "x1*h(x1)"], "dependent"),
    (["h(x1^2)", "h(x1^3)"], "dependent"),
    (["h(x1)", "h(x2)", "h(x1*x2)"], "dependent"),
    (["h(x1)", "h(x2)", "h({x1,x2})"], "dependent"),
    (["x1*h(x1)*h(x2) + h(x2)", "h(x2)"], "dependent"),
    (["h(x1) + x1", "h(x1)"], "dependent"),
    (["x1", "h(x1)"], "dependent"),
    (["x1", "x2"], "dependent"),
    (["x1*h(x2)", "x1*h(x2) + h(x2)"], "dependent"),
    (["h({x1,x2})", "h(x1)*h(x2)"], "independent"),
    (["h(x1)", "h(x2)"], "independent"),
    (["h(x1)*h(x2)", "h(x2)*h(x1)"], "independent"),
    (["h(x2)*h(x1)", "h(x2)"], "independent"),
    (["h(x1)*h(x2)", "h(x2)"], "dependent"),
    (["h(x1) + h(x1)*h(x2)", "h(x1)"], "independent"),
    (["h(x1)", "h(x1) + 1"], "dependent"),
    (["h(x1)"], "independent"),
    (["x1*h(x1) + x2*h(x2)"], "independent"),
    (["0"], "dependent"),
    (["x1 - x1"], "dependent"),
    (["h(x1)^2", "h(x1)"], "dependent"),
    (["x2*h(x1)", "x1*h(x1)"], "dependent"),
    (["x1*h(x1) + h(x2)", "x1*h(x1)"], "independent"),
    (["h(x1*x2)", "h(x1)"], "independent"),
    (["h(x1*x2)", "h(x1)", "h(x2)"], "dependent"),
    (["x1*x2", "h(x1)"], "dependent"),
    (["h(x1^2)", "x1*h(x1)"], "dependent"),
    (["h(x1)*h(x1)", "h(x1^2)"], "dependent"),
    (["h(x2)*h(x1) + h(x1)", "h(x1)"], "dependent"),
    (["x1^2*h(x2)", "x2*h(x2)"], "dependent"),
    (["h(x1+x2)", "h(x1)+h(x2)"], "dependent"),
    (["h({x1,x2})", "h(x2)*h(x1)"], "independent"),
    (["1", "h(x1)"], "dependent"),
    (["x1 + x2", "x1*x2"], "dependent"),
    (["h(x1)", "h(x1)*h(x1)"], "dependent"),
    (["h({x1,x2})", "h(x1)", "h(x2)"], "dependent"),
]

COEFFS = ["1", "2", "x1", "x2", "x1^2", "x1*x2", "x2^2", "x1 + x2", "x1 - 1", "2*x2 + 1"]
HPARTS = [
    None,
    "h(x1)",
    "h(x2)",
    "h(x1)*h(x1)",
    "h(x1)*h(x2)",
    "h(x2)*h(x1)",
    "h(x2)*h(x2)",
    "h(x1^2)",
    "h(x1*x2)",
    "h({x1,x2})",
]


def rand_term(rng):
    c = rng.choice(COEFFS)
    h = rng.choice(HPARTS)
    if h is None:
        return f"({c})"
    return f"({c})*{h}"


def rand_element(rng):
    terms = [rand_term(rng) for _ in range(rng.randint(1, 2))]
    return " + ".join(terms)


def main():
    records = []
    for elements, predicted in HAND:
        records.append((elements, predicted, True))

    rng = random.Random(20250815)
    seen = {tuple(e) for e, _, _ in records}
    while len(records) < 76:
        size = rng.choice([1, 2, 2, 2, 3, 3])
        elements = tuple(rand_element(rng) for _ in range(size))
        if elements in seen:
            continue
        seen.add(elements)
        records.append((list(elements), None, False))

    lines = []
    n_dep = n_indep = n_skip = 0
    for idx, (elements, predicted, hand) in enumerate(records):
        parsed = [syntax.parse_element(s, 2, "env") for s in elements]
        verdict = depend.decide_left_dependence(parsed)
        witness = depend.brute_force_dependence(parsed, 4, 6, n=2)
        oracle = "dependent" if witness is not None else "independent"
        if verdict.status != oracle:
            if verdict.status == "independent":
                # an in-box witness against an Independent verdict is a bug
                raise SystemExit(f"route disagreement at record {idx}: {elements}")
            if hand:
                raise SystemExit(f"hand witness exceeds oracle box at {idx}: {elements}")
            # dependent, but no witness within (4, 6): not usable as a
            # corpus entry, since the corpus check re-runs that box
            n_skip += 1
            continue
        if predicted is not None and predicted != verdict.status:
            raise SystemExit(
                f"hand prediction wrong at record {idx}: {elements} -> {verdict.status}"
            )
        if verdict.status == "dependent":
            n_dep += 1
        else:
            n_indep += 1
        lines.append(
            json.dumps({"n": 2, "elements": elements, "expected": verdict.status})
        )

    out = pathlib.Path(__file__).resolve().parents[1] / (
        "src/freepoisson/data/depend_corpus.jsonl"
    )
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} systems ({n_dep} dependent, {n_indep} independent) to {out}")


if __name__ == "__main__":
    main()
