#!/usr/bin/env python3
"""Write the bundled example corpus data/examples/*.json.

    arcdist_candidates 6 cand.json
    build_examples.py cand.json data/examples

Pairs are taken in order of total crossing length (ties by position in the
candidate file) and the first pair identified as each target knot is kept.
Torus-knot targets must also carry the matching loop class. The expected
verdicts are the stated values; the engine checks them in `arcdist examples`.
"""

import argparse
import json
import os

import identify_knots as ik

TORUS = {"T(2,3)": (2, 3), "T(3,4)": (3, 4), "T(2,5)": (2, 5)}
ALEXANDER = {
    "T(2,3)": "t**2 - t + 1",
    "T(3,4)": "t**6 - t**5 + t**3 - t + 1",
    "T(2,5)": "t**4 - t**3 + t**2 - t + 1",
    "4_1": "t**2 - 3*t + 1",
}


def length(pair):
    return len(pair["v"]["crossings"]) + len(pair["w"]["crossings"])


def record(name, file, data, pair, expected, knot, provenance):
    rec = {
        "kind": "example",
        "name": name,
        "genus": data["triangulation"]["genus"],
        "triangulation": data["triangulation"],
        "v_side": [pair["v"]],
        "w_side": [pair["w"]],
        "expected": expected,
        "knot": knot,
        "provenance": provenance,
    }
    return file, rec


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("candidates")
    ap.add_argument("out_dir")
    args = ap.parse_args()
    data = json.load(open(args.candidates))
    order = sorted(range(len(data["pairs"])), key=lambda k: (length(data["pairs"][k]), k))

    found = {}
    for k in order:
        pair = data["pairs"][k]
        if pair["crossings"] == 0:
            cls = tuple(sorted(map(abs, pair["class"])))
            target = next((n for n, c in TORUS.items() if c == cls), None)
        elif pair.get("distance") == 2:
            target = "4_1"
        else:
            target = None
        if target is None or target in found:
            continue
        got = [ik.identify(pair, seed) for seed in (7, 11, 13)]
        if any(g["alexander"] != ALEXANDER[target] for g in got):
            continue
        if target == "4_1" and any(g["name"] != "4_1" for g in got):
            continue
        found[target] = (pair, got[0])
        if len(found) == len(ALEXANDER):
            break
    missing = set(ALEXANDER) - set(found)
    if missing:
        raise SystemExit(f"no candidate for {sorted(missing)}")

    triangulation = data["triangulation"]
    # Trivial knot: identical shadows, here the edge arc through P1 and P2
    # carried by edge 4.
    edge4 = {"base_id": triangulation["id"], "start_corner": [2, 1], "crossings": [], "end_corner": [2, 2]}
    trivial = {"v": edge4, "w": edge4}
    records = [
        record("trivial knot", "trivial.json", data, trivial, {"type": "exact", "value": 0},
               {"name": "0_1", "alexander": "1"},
               "identical shadows; distance 0 holds by definition"),
    ]
    for name, (p, q) in TORUS.items():
        pair, got = found[name]
        records.append(record(
            f"torus knot {name}", f"torus_{p}_{q}.json", data, pair, {"type": "exact", "value": 1},
            {"name": name, "alexander": got["alexander"], "torus_class": [p, q]},
            "shortest disjoint pair whose closed loop has class (p, q) up to sign and order; "
            "knot type confirmed offline by tools/identify_knots.py"))
    pair, got = found["4_1"]
    records.append(record(
        "figure-8 knot", "figure8.json", data, pair, {"type": "exact", "value": 2},
        {"name": "4_1", "alexander": got["alexander"]},
        "shortest pair classified exact(2) whose knot is identified as 4_1 by tools/identify_knots.py; "
        "see docs/figure8.md"))

    os.makedirs(args.out_dir, exist_ok=True)
    for file, rec in records:
        with open(os.path.join(args.out_dir, file), "w") as f:
            json.dump(rec, f, indent=2)
            f.write("\n")
        print(file, rec["knot"]["name"], len(rec["v_side"][0]["crossings"]), len(rec["w_side"][0]["crossings"]))


if __name__ == "__main__":
    main()
