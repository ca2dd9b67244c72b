"""Validate JSON documents against the schemas in a directory.

usage: validate_json.py SCHEMA_DIR SCHEMA_FILE DOCUMENT...
"""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource


def main(argv):
    if len(argv) < 4:
        print(__doc__, file=sys.stderr)
        return 2
    schema_dir = pathlib.Path(argv[1])
    registry = Registry()
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.name] = doc
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    validator = jsonschema.Draft202012Validator(schemas[argv[2]], registry=registry)
    failed = 0
    for name in argv[3:]:
        errors = list(validator.iter_errors(json.loads(pathlib.Path(name).read_text())))
        for e in errors:
            print(f"{name}: {'/'.join(map(str, e.absolute_path))}: {e.message}", file=sys.stderr)
        failed += bool(errors)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
