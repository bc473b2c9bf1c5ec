"""Runs the jtk executable and validates every report against the schema."""
import json
import subprocess
import sys

import jsonschema

jtk, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

runs = [
    (["info", "--triple", "matrix:2x3"], 0),
    (["decompose", "--triple", "matrix:2x2", "z0*z3"], 0),
    (["fibers", "--triple", "matrix:2x3", "--partition", "2,1"], 0),
    (["fibers", "--triple", "matrix:2x3", "--partition", "1,1", "--degree", "2"], 0),
    (["fibers", "--triple", "matrix:2x3", "--partition", "1,1", "--degree", "2", "--strict"], 1),
    (["verify", "--suite", "all", "--triple", "matrix:2x2", "--seed", "3"], 0),
    (["verify", "--suite", "kernels", "--triple", "asym:4"], 0),
]

failed = 0
for args, want in runs:
    proc = subprocess.run([jtk, *args, "--json", "-"], capture_output=True, text=True)
    try:
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, schema)
        ok = proc.returncode == want
        detail = f"exit {proc.returncode}, want {want}"
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        ok, detail = False, str(e).splitlines()[0]
    print(("PASS " if ok else "FAIL ") + " ".join(args) + "  " + detail)
    failed += not ok

again = [subprocess.run([jtk, "verify", "--triple", "matrix:2x2", "--seed", "3", "--json", "-"],
                        capture_output=True, text=True).stdout for _ in range(2)]
same = again[0] == again[1]
print(("PASS" if same else "FAIL") + " byte-identical reports under a fixed seed")
failed += not same

bad = subprocess.run([jtk, "info", "--triple", "matrix:3x2"], capture_output=True, text=True)
print(("PASS" if bad.returncode != 0 else "FAIL") + f" bad descriptor exits {bad.returncode}")
failed += bad.returncode == 0
sys.exit(1 if failed else 0)
