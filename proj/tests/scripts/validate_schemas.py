"""Validate solsap JSON output against docs/schema with the jsonschema package."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main(solsap: str, schema_dir: str) -> int:
    schemas = {}
    for path in pathlib.Path(schema_dir).glob("*.schema.json"):
        schemas[path.name] = json.loads(path.read_text())
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in schemas.items()
    )

    def check(schema_name, args):
        out = subprocess.run([solsap, *args], check=True, capture_output=True, text=True).stdout
        validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
        errors = sorted(validator.iter_errors(json.loads(out)), key=lambda e: list(e.path))
        for e in errors:
            print(f"{' '.join(args)}: {list(e.path)}: {e.message}")
        return not errors

    ok = check("atlas.schema.json", ["atlas", "--max-entry", "4"])
    for m in ["1 1; 1 2", "1 2; 1 3", "3 2; 4 3"]:
        ok &= check("covers.schema.json", ["covers", m, "--format", "json"])
    for m in ["1 1; 1 2", "1 1; 2 3", "5 4; 6 5", "3 2; 4 3"]:
        ok &= check("involutions.schema.json", ["involutions", m, "--format", "json"])
    print("schemas ok" if ok else "schema violations found")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
