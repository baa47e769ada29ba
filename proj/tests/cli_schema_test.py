"""Runs the sympow binary on the fixtures and validates every document it
prints against the schema for that subcommand."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BINARY = Path(sys.argv[1])
ROOT = Path(sys.argv[2])
DATA = ROOT / "data"
SCHEMAS = ROOT / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(args):
    proc = subprocess.run([str(BINARY), *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


failures = []


def expect(args, code, schema_name):
    got, out = run(args)
    label = " ".join(args)
    if got != code:
        failures.append(f"{label}: exit {got}, expected {code}")
        return None
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        failures.append(f"{label}: stdout is not JSON ({e})")
        return None
    try:
        jsonschema.validate(doc, schema(schema_name))
    except jsonschema.ValidationError as e:
        failures.append(f"{label}: {e.message}")
    return out


def d(name):
    return str(DATA / name)


tri = d("triangle.json")
fano = d("fano.json")

expect(["power", "--ideal", tri, "-n", "2"], 0, "ideal")
expect(["symbolic", "--ideal", tri, "-n", "3"], 0, "ideal")
expect(["minor", "--ideal", tri, "--assign", "k1k"], 0, "ideal")
expect(["sr-ideal", "--complex", d("fano_lines.json")], 0, "ideal")
expect(["equal", "--ideal", fano, "-n", "2"], 0, "equal")
expect(["equal", "--ideal", tri, "-n", "1"], 0, "equal")
expect(["contain", "--ideal", tri, "-a", "2", "-b", "2"], 0, "contain")
expect(["koenig", "--ideal", tri], 0, "koenig")
expect(["koenig", "--ideal", d("c4_ideal.json"), "-k", "2"], 0, "koenig")
expect(["packing", "--ideal", tri], 0, "packing")
expect(["kpacked", "--ideal", d("c4_ideal.json"), "-k", "2"], 0, "kpacked")
expect(["edge-analyze", "--graph", d("c7.json"), "--verify", "4"], 0, "edge-analyze")
expect(["edge-analyze", "--graph", d("c4.json")], 0, "edge-analyze")
expect(["sr-complex", "--ideal", fano], 0, "complex")
expect(["matroid", "--complex", d("fano_lines.json")], 0, "matroid")
expect(["matroid", "--complex", d("two_edges_complex.json")], 0, "matroid")
expect(["alpha", "--ideal", tri], 0, "alpha")
expect(["alpha", "--ideal", tri, "-n", "3"], 0, "alpha")
expect(["waldschmidt", "--ideal", d("maximal3.json"), "--sequence", "3"], 0, "waldschmidt")
expect(["resurgence", "--ideal", tri, "-N", "3"], 0, "resurgence")
expect(["--help"], 0, "help")
expect(["equal", "--help"], 0, "help")
expect(["hunt", "--family", "edge_ideals", "--count", "10"], 0, "hunt")
expect(["hunt", "--family", "cubic_ideals", "-k", "3", "--count", "5"], 0, "hunt")

with tempfile.TemporaryDirectory() as tmp:
    bad = Path(tmp) / "bad.json"
    bad.write_text('{"variables": ["x"], "generators": [[-1]]}')
    expect(["equal", "--ideal", str(bad), "-n", "2"], 2, "error")
expect(["equal", "--ideal", tri], 2, "error")
expect(["nonsense"], 2, "error")
expect(["--max-symbolic-gens", "2", "symbolic", "--ideal", tri, "-n", "4"], 3, "error")
expect(["edge-analyze", "--graph", d("c5.json"), "--verify", "9"], 3, "error")

# Fixtures themselves follow the input formats.
for name in ["triangle", "fano", "c4_ideal", "maximal3"]:
    jsonschema.validate(json.loads((DATA / f"{name}.json").read_text()), schema("ideal"))
for name in ["c3", "c4", "c5", "c7"]:
    jsonschema.validate(json.loads((DATA / f"{name}.json").read_text()), schema("graph"))
for name in ["fano_lines", "two_edges_complex"]:
    jsonschema.validate(json.loads((DATA / f"{name}.json").read_text()), schema("complex"))

# Separate processes produce byte-identical hunt reports.
first = expect(["hunt", "--seed", "42"], 0, "hunt")
second = expect(["hunt", "--seed", "42"], 0, "hunt")
threaded = expect(["hunt", "--seed", "42", "--jobs", "2"], 0, "hunt")
if first is not None and not (first == second == threaded):
    failures.append("hunt --seed 42 output differs between runs")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
