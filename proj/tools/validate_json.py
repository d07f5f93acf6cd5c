#!/usr/bin/env python3
# Copyright 2026 The gkpsim Authors
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

"""Runs gkpsim on every circuit file and validates its JSON output."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema
import referencing


def load_registry(schema_dir):
    schemas = {}
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.name] = doc
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    return schemas, referencing.Registry().with_resources(resources)


def validator(schemas, registry, name):
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("circuits", type=pathlib.Path)
    parser.add_argument("schemas", type=pathlib.Path)
    args = parser.parse_args()

    schemas, registry = load_registry(args.schemas)
    by_kind = {"comb1d": "comb1d.schema.json", "combNd": "combNd.schema.json"}
    checked = 0
    failures = []

    for circuit in sorted(args.circuits.glob("*.circ")):
        for command in ("check", "pdf", "compare"):
            proc = subprocess.run([args.binary, command, str(circuit)], capture_output=True, text=True)
            label = f"{command} {circuit.name}"
            if proc.returncode not in (0, 1, 2, 3):
                failures.append(f"{label}: exit {proc.returncode}")
                continue
            if not proc.stdout.strip():
                if command == "check" or proc.returncode == 0:
                    failures.append(f"{label}: no output (exit {proc.returncode})")
                continue
            doc = json.loads(proc.stdout)
            if command == "check":
                name = "check.schema.json"
                if (proc.returncode == 0) != doc["accepted"]:
                    failures.append(f"{label}: exit {proc.returncode} disagrees with accepted")
            elif command == "pdf":
                name = by_kind.get(doc.get("kind"), "comb1d.schema.json")
            else:
                name = "compare.schema.json"
            errors = list(validator(schemas, registry, name).iter_errors(doc))
            for e in errors:
                failures.append(f"{label}: {e.message} at {list(e.absolute_path)}")
            checked += 1
            print(f"ok {label} ({name})" if not errors else f"FAIL {label} ({name})")

    # Argument errors exit with status 1.
    identity = str(args.circuits / "identity.circ")
    for argv in ([], ["check"], ["nonsense", identity], ["sample", identity, "--count", "abc"],
                 ["check", identity, "--no-such-flag"]):
        code = subprocess.run([args.binary, *argv], capture_output=True, text=True).returncode
        if code != 1:
            failures.append(f"gkpsim {' '.join(argv)}: exit {code}, expected 1")

    # The schemas must reject malformed documents.
    bad = {"kind": "comb1d", "spacings": [-1.0], "offset": 0.0, "cases": []}
    if validator(schemas, registry, "comb1d.schema.json").is_valid(bad):
        failures.append("comb1d schema accepts a negative spacing")
    bad = {"accepted": True, "class": "none", "per_mode": [], "reason": ""}
    if validator(schemas, registry, "check.schema.json").is_valid(bad):
        failures.append("check schema accepts class none for an accepted circuit")

    if checked == 0:
        failures.append("no outputs validated")
    for f in failures:
        print(f, file=sys.stderr)
    print(f"{checked} documents validated, {len(failures)} problems")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
