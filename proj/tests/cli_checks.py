#!/usr/bin/env python3
# Copyright 2026 The realqm Authors
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
"""Black-box checks of the realqm executable.

  cli_checks.py reproducible <realqm>
  cli_checks.py schemas <realqm> <schema-dir>
"""

import filecmp
import json
import os
import subprocess
import sys
import tempfile

RUNS = [
    ["larmor", "--omega", "1", "--tmax", "6.283", "--steps", "100"],
    ["larmor", "--omega", "2.5", "--tmax", "20", "--steps", "400"],
    ["mzi"],
    ["mzi", "--phase", "1.2"],
    ["mzi", "--grid", "64"],
    ["entropy-scan", "--alpha-steps", "13", "--beta-steps", "11"],
    ["audit"],
    ["audit", "--seed", "7", "--trials", "50"],
    ["ghosts"],
    ["ghosts", "--cutoff", "10", "--lambda", "1.5"],
    ["local-phase-demo"],
    ["local-phase-demo", "--seed", "99"],
]


def run(exe, args, threads):
    env = dict(os.environ, OMP_NUM_THREADS=str(threads))
    proc = subprocess.run([exe] + args, capture_output=True, env=env, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"{args} exited with {proc.returncode}: {proc.stderr.decode()}")
    return proc.stdout, proc.stderr


def reproducible(exe):
    failures = 0
    for base in RUNS:
        for fmt in ("csv", "json"):
            args = base + ["--format", fmt]
            first = run(exe, args, 1)
            second = run(exe, args, 4)
            ok = first == second and len(first[0]) > 0
            print(("PASS " if ok else "FAIL ") + " ".join(args))
            failures += not ok
    with tempfile.TemporaryDirectory() as a, tempfile.TemporaryDirectory() as b:
        run(exe, ["fixtures", "--dir", a], 1)
        run(exe, ["fixtures", "--dir", b], 4)
        names = sorted(os.listdir(a))
        match, mismatch, errors = filecmp.cmpfiles(a, b, names, shallow=False)
        ok = len(names) > 0 and not mismatch and not errors and names == sorted(os.listdir(b))
        print(("PASS " if ok else "FAIL ") + f"fixtures ({len(names)} files)")
        failures += not ok
        for name in names:
            out, _ = run(exe, ["audit", "--matrix", os.path.join(a, name)], 1)
            verdict = out.decode().splitlines()[1].split(",")[2]
            want = "AntiLinear" if name == "universal_not.json" else "Physical"
            ok = verdict == want
            print(("PASS " if ok else "FAIL ") + f"audit {name}: {verdict}")
            failures += not ok
    return failures


def schemas(exe, schema_dir):
    import jsonschema

    failures = 0
    checks = [(args, args[0]) for args in RUNS]
    with tempfile.TemporaryDirectory() as d:
        run(exe, ["fixtures", "--dir", d], 1)
        for name in sorted(os.listdir(d)):
            checks.append((["audit", "--matrix", os.path.join(d, name)], "audit"))
        for args, sub in checks:
            with open(os.path.join(schema_dir, f"{sub}.schema.json")) as f:
                schema = json.load(f)
            out, _ = run(exe, args + ["--format", "json"], 1)
            try:
                jsonschema.validate(json.loads(out), schema)
                print("PASS " + " ".join(args))
            except jsonschema.ValidationError as e:
                print("FAIL " + " ".join(args) + ": " + e.message)
                failures += 1
    return failures


def main():
    if len(sys.argv) >= 3 and sys.argv[1] == "reproducible":
        failures = reproducible(sys.argv[2])
    elif len(sys.argv) >= 4 and sys.argv[1] == "schemas":
        failures = schemas(sys.argv[2], sys.argv[3])
    else:
        raise SystemExit(__doc__)
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
