# Copyright 2026 The Amoebavol Authors
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

"""Validates every shipped config against the published schemas."""

import json
import pathlib
import sys

import jsonschema


def main(root):
    root = pathlib.Path(root)
    variety = json.loads((root / "schemas/variety.schema.json").read_text())
    plane = json.loads((root / "schemas/plane.schema.json").read_text())
    checked = 0
    for path in sorted((root / "configs").glob("*.json")):
        schema = plane if path.name.endswith(".plane.json") else variety
        jsonschema.validate(json.loads(path.read_text()), schema)
        checked += 1
    bad = {"schema_version": 1, "k": 1, "n": 2, "components": ["t1", "t1"],
           "domain": [{"kind": "box", "re": [0, 1], "im": [0, 1]}], "extra": 1}
    try:
        jsonschema.validate(bad, variety)
    except jsonschema.ValidationError:
        pass
    else:
        print("schema accepted an unknown field")
        return 1
    print(f"{checked} configs valid")
    return 0 if checked else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
