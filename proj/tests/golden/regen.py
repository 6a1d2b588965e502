#!/usr/bin/env python3
"""Rebuild derived inputs and expected outputs of the golden suite.

usage: regen.py <path to shtk binary>
"""
import json
import os
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
INPUTS = os.path.join(HERE, "inputs")
EXPECTED = os.path.join(HERE, "expected")


def run(cli, args, env=None):
    full_env = dict(os.environ)
    full_env.pop("SHTK_BUDGET", None)
    full_env.update(env or {})
    p = subprocess.run([cli] + args, cwd=INPUTS, capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout, p.stderr


def derive(cli, name, args):
    code, out, err = run(cli, args)
    if code != 0:
        sys.exit(f"deriving {name} failed: {err}")
    with open(os.path.join(INPUTS, name), "w") as f:
        f.write(out)


def main():
    cli = os.path.abspath(sys.argv[1])
    derive(cli, "cone-id-z2.json", ["cone", "id-z2-step.json"])
    derive(cli, "cone-filtered.json", ["cone", "filtered-map.json"])
    derive(cli, "cert-graded-1.json", ["certify-map", "graded-1.json"])
    derive(cli, "cert-graded-2.json", ["certify-map", "graded-2.json"])
    derive(cli, "cert-compose-f.json", ["certify-map", "compose-f.json"])
    derive(cli, "cert-compose-g.json", ["certify-map", "compose-g.json"])
    derive(cli, "empty-cert.json", ["reduce", "zero.json"])
    derive(cli, "cert-lift.json", ["lift", "filtered-map.json", "cert-graded-1.json", "cert-graded-2.json"])
    derive(cli, "scenario-seed7.json",
           ["scenario", "generate", "--seed", "7", "--steps", "2", "--clusters", "3", "--rank", "2",
            "--group", "cyclic:5"])

    with open(os.path.join(INPUTS, "cert-lift.json")) as f:
        cert = json.load(f)
    cert["moves"] = cert["moves"][:-1]
    with open(os.path.join(INPUTS, "cert-lift-truncated.json"), "w") as f:
        json.dump(cert, f, indent=2)

    with open(os.path.join(INPUTS, "scenario-seed7.json")) as f:
        sc = json.load(f)
    for step in sc["steps"]:
        step["gap"] = "3"
    with open(os.path.join(INPUTS, "scenario-gap.json"), "w") as f:
        json.dump(sc, f, indent=2)

    os.makedirs(EXPECTED, exist_ok=True)
    with open(os.path.join(HERE, "cases.json")) as f:
        cases = json.load(f)
    for case in cases:
        code, out, err = run(cli, case["args"], case.get("env"))
        with open(os.path.join(EXPECTED, case["name"] + ".out"), "w") as f:
            f.write(f"exit: {code}\n--- stdout\n{out}--- stderr\n{err}")
        print(f"{case['name']}: exit {code}")


if __name__ == "__main__":
    main()
