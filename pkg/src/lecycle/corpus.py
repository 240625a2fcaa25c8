"""Corpus entry files: one germ per file in a flat ``key = value`` format.

Example::

    # cusp singularity moving along a line
    name = cusp_line
    variables = t, x, y
    f = x^2 + y^3
    expected_s = 1
    frame = identity
    seeds = 11, 12, 13, 14, 15, 16, 17, 18
    samples = 1, 0, 0; -1, 0, 0; 2, 0, 0
    y_ideal = 1
    expect.mu0 = 2

Lists are comma separated; ``samples`` holds points separated by ``;``.
``y_ideal`` lists polynomial generators (``1`` declares Y empty).
Keys starting with ``expect.`` hold expected outputs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .cycles import Germ
from .errors import InputError, LecycleError
from .parser import parse
from .poly import Ring, format_qq, partial, qq

KNOWN_KEYS = {"name", "variables", "f", "expected_s", "frame", "seeds", "samples", "y_ideal"}
SUFFIX = ".germ"


def default_seeds():
    base = int(os.environ.get("LECYCLE_SEED", "1"))
    return [base + i for i in range(8)]


def parse_point(text: str) -> tuple:
    try:
        return tuple(qq(c) for c in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point {text!r}: {exc}") from None


def _parse_value(raw: str):
    raw = raw.strip()
    if raw in ("true", "false"):
        return raw == "true"
    if "," in raw:
        return [_parse_value(x) for x in raw.split(",")]
    try:
        return int(raw)
    except ValueError:
        return raw


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value)
    return str(value)


@dataclass
class CorpusEntry:
    name: str
    variables: list
    f: str
    expected_s: int | None = None
    frame: str = "identity"
    seeds: list = field(default_factory=default_seeds)
    samples: list = field(default_factory=list)
    y_ideal: list | None = None
    expectations: dict = field(default_factory=dict)
    path: Path | None = None

    def __post_init__(self):
        if self.frame not in ("identity", "random"):
            raise InputError(f"frame must be 'identity' or 'random', got {self.frame!r}")
        self.ring = Ring(self.variables)
        self.polynomial = parse(self.f, self.ring)
        self.germ()  # validates f(0) = 0 and non-constancy
        partials = [partial(self.polynomial, i) for i in range(self.ring.n_plus_1)]
        for p in self.samples:
            if len(p) != self.ring.n_plus_1:
                raise InputError(f"{self.name}: sample {p} has wrong length")
            if any(d.evaluate(p) != 0 for d in partials):
                raise InputError(f"{self.name}: sample {[format_qq(c) for c in p]} is not on the critical locus")
        self.y_polys = None if self.y_ideal is None else [parse(g, self.ring) for g in self.y_ideal]

    def germ(self) -> Germ:
        return Germ(self.ring, self.polynomial, self.expected_s)


def load_entry(path) -> CorpusEntry:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_entry(text, path)


def parse_entry(text: str, path: Path | None = None) -> CorpusEntry:
    fields = {}
    expectations = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key.startswith("expect."):
            expectations[key[len("expect."):]] = _parse_value(value)
        elif key in KNOWN_KEYS:
            if key in fields:
                raise InputError(f"line {lineno}: duplicate key {key!r}")
            fields[key] = value
        else:
            raise InputError(f"line {lineno}: unknown key {key!r}")
    for required in ("variables", "f"):
        if required not in fields:
            raise InputError(f"missing required key {required!r}")
    kwargs = {
        "name": fields.get("name") or (path.stem if path else "entry"),
        "variables": [v.strip() for v in fields["variables"].split(",")],
        "f": fields["f"],
        "expectations": expectations,
        "path": path,
    }
    if "expected_s" in fields:
        kwargs["expected_s"] = int(fields["expected_s"])
    if "frame" in fields:
        kwargs["frame"] = fields["frame"]
    if "seeds" in fields:
        kwargs["seeds"] = [int(x) for x in fields["seeds"].split(",")]
    if fields.get("samples"):
        kwargs["samples"] = [parse_point(p) for p in fields["samples"].split(";") if p.strip()]
    if "y_ideal" in fields:
        kwargs["y_ideal"] = [g.strip() for g in fields["y_ideal"].split(",")]
    try:
        return CorpusEntry(**kwargs)
    except LecycleError as exc:
        raise type(exc)(f"{kwargs['name']}: {exc}") from None


def entry_files(directory) -> list:
    return sorted(Path(directory).glob("*" + SUFFIX))


def write_expectations(path, expectations: dict, header: str = "# oracle expectations"):
    """Replace the ``expect.*`` lines for the given keys, keeping everything else."""
    path = Path(path)
    keep = []
    for line in path.read_text().splitlines():
        stripped = line.strip()
        if stripped == header:
            continue
        if stripped.startswith("expect."):
            key = stripped.split("=", 1)[0].strip()[len("expect."):]
            if key in expectations:
                continue
        keep.append(line)
    while keep and not keep[-1].strip():
        keep.pop()
    keep.append("")
    keep.append(header)
    for key in sorted(expectations):
        keep.append(f"expect.{key} = {format_value(expectations[key])}")
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text("\n".join(keep) + "\n")
    os.replace(tmp, path)
