"""Validate sample configs and CLI reports against the bundled JSON schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

root = pathlib.Path(sys.argv[1])
cli = sys.argv[2]
config_schema = json.loads((root / "schemas/run_config.schema.json").read_text())
report_schema = json.loads((root / "schemas/report.schema.json").read_text())

for path in sorted((root / "configs").glob("*.json")):
    jsonschema.validate(json.loads(path.read_text()), config_schema)
    for extra in ([], ["--timings"]):
        out = subprocess.run([cli, "verify", "--config", str(path), *extra], capture_output=True, text=True)
        report = json.loads(out.stdout)
        jsonschema.validate(report, report_schema)
        jsonschema.validate(report["config"], config_schema)
    print("ok", path.name)
