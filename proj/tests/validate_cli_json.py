#!/usr/bin/env python3
# Copyright 2026 The hharm Authors.
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
"""Validates every JSON document the CLI emits against the published schema.

Usage: validate_cli_json.py HHARM_BINARY SCHEMA
"""
import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    ["verify", "--n", "4", "--all", "--format", "json"],
    ["verify", "--n", "3", "--suite", "fourier", "--format", "json", "--timing"],
    ["kernel", "--n", "4", "--r1", "2", "--r2", "2", "--s", "1", "--format", "json"],
    ["kernel", "--n", "7", "--r1", "2", "--r2", "5", "--s", "2", "--format", "json"],
    ["fourier-coeffs", "--n", "4", "--basis", "plain", "--format", "json"],
    ["fourier-coeffs", "--n", "4", "--basis", "tilde", "--format", "json"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    documents = 0
    for args in INVOCATIONS:
        proc = subprocess.run([binary] + args, capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print("exit", proc.returncode, "for", args, proc.stderr)
            return 1
        for line in proc.stdout.splitlines():
            validator.validate(json.loads(line))
            documents += 1
    print("validated", documents, "documents")
    return 0


if __name__ == "__main__":
    sys.exit(main())
