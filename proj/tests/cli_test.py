#!/usr/bin/env python3
"""End-to-end checks of the arcdist command line.

    cli_test.py ARCDIST_BINARY REPO_ROOT

Every JSON output is validated against schemas/ and every certificate is fed
back through check-cert. Exit codes of the failure classes are pinned.
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

BIN, ROOT = sys.argv[1], sys.argv[2]
SCHEMAS = os.path.join(ROOT, "schemas")
EXAMPLES = os.path.join(ROOT, "data", "examples")

registry = Registry()
for f in os.listdir(SCHEMAS):
    doc = json.load(open(os.path.join(SCHEMAS, f)))
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

failures = []
checks = 0


def check(ok, what):
    global checks
    checks += 1
    if not ok:
        failures.append(what)
        print("FAIL", what)


def validate(doc, name):
    schema = registry.contents(f"urn:arcdist:{name}")
    errors = list(jsonschema.Draft202012Validator(schema, registry=registry).iter_errors(doc))
    check(not errors, f"{name} schema: {errors[0].message if errors else ''}")


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def run_json(*args):
    code, out, err = run(*args)
    check(code == 0, f"{' '.join(args)} exited {code}: {err.strip()}")
    return json.loads(out) if code == 0 else None


def check_cert(path, expect_valid=True):
    code, out, err = run("check-cert", path)
    check(code == (0 if expect_valid else 1), f"check-cert {os.path.basename(path)} exited {code}: {err.strip()}")
    if out:
        validate(json.loads(out), "check-result")


def write(tmp, name, doc):
    path = os.path.join(tmp, name)
    with open(path, "w") as f:
        json.dump(doc, f)
    return path


with tempfile.TemporaryDirectory() as tmp:
    # Bundled corpus.
    code, out, _ = run("examples", "--data", EXAMPLES, "--out", os.path.join(tmp, "reports"))
    check(code == 0, "examples exited nonzero")
    check(out.count("PASS ") >= 4 and "FAIL" not in out, "examples output")
    code2, out2, _ = run("examples", "--data", EXAMPLES)
    check(out == out2, "examples output differs between runs")
    for f in sorted(os.listdir(EXAMPLES)):
        rec = json.load(open(os.path.join(EXAMPLES, f)))
        validate(rec, "example")
        check_cert(os.path.join(EXAMPLES, f))
        report = os.path.join(tmp, "reports", f)
        validate(json.load(open(report)), "level-report")
        check_cert(report)

    # Every subcommand on every record.
    for f in sorted(os.listdir(EXAMPLES)):
        rec = json.load(open(os.path.join(EXAMPLES, f)))
        stem = f[:-5]
        pair = write(tmp, stem + "_pair.json", {"v": rec["v_side"][0], "w": rec["w_side"][0]})
        validate(json.load(open(pair)), "pair-input")
        v = write(tmp, stem + "_v.json", rec["v_side"][0])
        w = write(tmp, stem + "_w.json", rec["w_side"][0])
        outputs = {
            "dist": (["dist", pair], "distance-certificate"),
            "search": (["dist", pair, "--max-len", "6", "--max-depth", "3"], "distance-certificate"),
            "path": (["path", v, w], "path-certificate"),
            "level": (["level", pair], "level-report"),
        }
        for key, (args, schema) in outputs.items():
            doc = run_json(*args)
            if doc is None:
                continue
            validate(doc, schema)
            cert = write(tmp, f"{stem}_{key}.json", doc)
            check_cert(cert)
            again = run_json(*args)
            check(again == doc, f"{key} on {stem} is not deterministic")
            if key in ("dist", "level"):
                svg = os.path.join(tmp, "svg", stem + key)
                code, out, _ = run("render", cert, "--svg", svg)
                check(code == 0 and all(os.path.exists(p) for p in out.split()), f"render {stem} {key}")
        lp = run_json("level", pair)
        if lp and lp["level_position"] is not None:
            validate(lp["level_position"], "level-position")
            check_cert(write(tmp, stem + "_lp.json", lp["level_position"]))
            check(lp["level_position"]["n"] == rec["expected"]["value"], f"{stem}: level count")

    # Triangulations.
    for g in (1, 2, 3, 4):
        t = run_json("tri", "--standard", str(g))
        validate(t, "triangulation")
        rep = run_json("tri", "--check", write(tmp, f"t{g}.json", t))
        validate(rep, "triangulation-check")
        check(rep["valid"] and rep["edges"] == 6 * g and rep["triangles"] == 4 * g, f"tri --check genus {g}")
    bad = run_json("tri", "--standard", "1")
    bad["triangles"][0][0] = 99
    code, out, _ = run("tri", "--check", write(tmp, "badtri.json", bad))
    check(code == 1 and not json.loads(out)["valid"], "tri --check accepts a broken table")

    # Failure classes.
    fig8 = json.load(open(os.path.join(EXAMPLES, "figure8.json")))
    pair = {"v": fig8["v_side"][0], "w": fig8["w_side"][0]}
    with open(os.path.join(tmp, "malformed.json"), "w") as f:
        f.write("{not json")
    broken = json.loads(json.dumps(pair))
    del broken["w"]["start_corner"]
    invalid = json.loads(json.dumps(pair))
    invalid["w"]["crossings"] = [{"edge": 1, "side": "+"}]
    t2 = run_json("tri", "--standard", "2")
    cases = [
        (["dist", os.path.join(tmp, "malformed.json")], 3, "malformed JSON"),
        (["dist", write(tmp, "schema.json", broken)], 4, "schema violation"),
        (["dist", write(tmp, "p.json", pair), "--tri", write(tmp, "t2.json", t2)], 5, "base mismatch"),
        (["dist", write(tmp, "invalid.json", invalid)], 6, "invalid input"),
        (["dist", os.path.join(tmp, "missing.json")], 9, "I/O error"),
        (["dist"], 2, None),
        (["frobnicate"], 2, None),
    ]
    for args, want, message in cases:
        code, _, err = run(*args)
        check(code == want, f"{' '.join(os.path.basename(a) for a in args)}: exit {code}, wanted {want}")
        if message:
            check(message in err, f"message for exit {want}: {err.strip()}")

    # Tampered certificates fail with exit 1.
    dist = run_json("dist", write(tmp, "fig8.json", pair))
    dist["verdict"] = {"type": "exact", "value": 1}
    check_cert(write(tmp, "tampered_dist.json", dist), expect_valid=False)
    level = run_json("level", os.path.join(tmp, "fig8.json"))
    level["level_position"]["cycle"].reverse()
    level["level_position"]["cycle"][0], level["level_position"]["cycle"][1] = (
        level["level_position"]["cycle"][1], level["level_position"]["cycle"][0])
    check_cert(write(tmp, "tampered_level.json", level), expect_valid=False)

print(f"{checks} checks, {len(failures)} failures")
sys.exit(1 if failures else 0)
