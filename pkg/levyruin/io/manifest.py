""" manifest.py

    Run manifests. Every CLI command records what it ran (argv included)
    and which files it wrote; `replay` feeds the argv back to the CLI.
"""

import json

from datetime import datetime, timezone
from os import path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError

from ..consts import MANIFEST_SCHEMA_VERSION, VERSION
from ..errors import MalformedInput


class RunManifest(BaseModel):
    schema_version: int = MANIFEST_SCHEMA_VERSION
    command: str
    argv: List[str]
    model: Optional[Dict[str, Any]] = None
    domain: Optional[List[float]] = None
    parameters: Dict[str, Any] = {}
    version: str = VERSION
    started: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    wall_time: float = 0.0
    outputs: Dict[str, str] = {}
    """ role -> path of every file the command wrote """
    exit_code: int = 0

    def output(self, role: str) -> str:
        if role not in self.outputs:
            raise MalformedInput(f'manifest of {self.command} lists no {role} output')
        return self.outputs[role]


def manifest_path(output: str) -> str:
    """ The manifest that sits next to a primary output file """
    return f'{path.splitext(output)[0]}.manifest.json'


def write_manifest(filename: str, manifest: RunManifest) -> str:
    with open(filename, 'w') as f:
        f.write(manifest.model_dump_json(indent=2))
    return filename


def load_manifest(filename: str) -> RunManifest:
    try:
        with open(filename, 'r') as f:
            text = f.read()
    except FileNotFoundError as e:
        raise MalformedInput(f'manifest {filename} does not exist') from e
    if not text.strip():
        raise MalformedInput(f'manifest {filename} is empty')
    try:
        manifest = RunManifest.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise MalformedInput(f'manifest {filename} is malformed: {e}') from e
    if manifest.schema_version > MANIFEST_SCHEMA_VERSION:
        raise MalformedInput(f'manifest schema {manifest.schema_version} is newer than this tool '
                             f'({MANIFEST_SCHEMA_VERSION})')
    return manifest
