"""Scenario configuration: the sectioned key-value file the CLI consumes.

Grammar (ASCII text, one entry per line):

    [masses]        mx my mp
    [calibration]   alpha dx dy fx fy
    [initial]       x0 y0 xd0 yd0
    [wrench]        taux tauy fexd feyd
    [sim]           dt t_end

Sections may appear in any order but each exactly once; every key is
required, belongs to the section shown, and may not repeat; unknown keys
and sections are rejected. Values are plain decimal or scientific-notation
numbers ('nan'/'inf' are rejected). Blank lines and lines starting with
'#' are ignored. `serialize_config` writes values with 17 significant
digits, so parse -> serialize -> parse is lossless.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .dynamics import MassParams, StageState, Wrench
from .errors import DomainError, ParseError
from .frames import Calibration

_SECTIONS: dict[str, tuple[str, ...]] = {
    "masses": ("mx", "my", "mp"),
    "calibration": ("alpha", "dx", "dy", "fx", "fy"),
    "initial": ("x0", "y0", "xd0", "yd0"),
    "wrench": ("taux", "tauy", "fexd", "feyd"),
    "sim": ("dt", "t_end"),
}

_NUMBER_RE = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\Z")

#: Keys that must be strictly positive, with the reason shown on violation.
_POSITIVE_KEYS = {
    "mx": "mass of the x table",
    "my": "mass of the y table",
    "mp": "mass of the working plate",
    "dx": "origin displacement",
    "dy": "origin displacement",
    "fx": "display resolution",
    "fy": "display resolution",
    "dt": "integration step",
    "t_end": "simulation horizon",
}


@dataclass(frozen=True)
class ScenarioConfig:
    """One fully specified simulation scenario."""

    masses: MassParams
    calibration: Calibration
    initial: StageState
    wrench: Wrench
    dt: float
    t_end: float


def parse_config(text: bytes | str) -> ScenarioConfig:
    """Parse scenario text; raise ParseError (with line and key) on any defect."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"config must be ASCII text: {exc}", line=0) from exc

    values: dict[str, float] = {}
    lines: dict[str, int] = {}
    seen_sections: dict[str, int] = {}
    current: str | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(f"malformed section header {line!r}", lineno)
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise ParseError(f"unknown section [{name}]", lineno)
            if name in seen_sections:
                raise ParseError(
                    f"duplicate section [{name}] (first at line {seen_sections[name]})",
                    lineno,
                )
            seen_sections[name] = lineno
            current = name
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        if current is None:
            raise ParseError(f"entry {line!r} before any section header", lineno)
        key, _, value_text = line.partition("=")
        key = key.strip()
        value_text = value_text.strip()
        if key not in _SECTIONS[current]:
            raise ParseError(f"unknown key {key!r} in section [{current}]", lineno, key)
        if key in values:
            raise ParseError(
                f"duplicate key {key!r} (first at line {lines[key]})", lineno, key
            )
        if not _NUMBER_RE.match(value_text):
            raise ParseError(f"malformed number {value_text!r} for {key!r}", lineno, key)
        value = float(value_text)
        if not math.isfinite(value):
            raise ParseError(f"{key!r} overflows to {value!r}", lineno, key)
        if key in _POSITIVE_KEYS and not value > 0.0:
            raise ParseError(
                f"{key} must be positive ({_POSITIVE_KEYS[key]}), got {value_text}",
                lineno,
                key,
            )
        values[key] = value
        lines[key] = lineno

    for section, keys in _SECTIONS.items():
        if section not in seen_sections:
            raise ParseError(f"missing section [{section}]", line=0)
        for key in keys:
            if key not in values:
                raise ParseError(
                    f"missing key {key!r} in section [{section}]",
                    seen_sections[section],
                    key,
                )

    try:
        return ScenarioConfig(
            masses=MassParams(values["mx"], values["my"], values["mp"]),
            calibration=Calibration(
                alpha=values["alpha"],
                dx=values["dx"],
                dy=values["dy"],
                fx=values["fx"],
                fy=values["fy"],
            ),
            initial=StageState(
                t=0.0,
                x=values["x0"],
                y=values["y0"],
                xdot=values["xd0"],
                ydot=values["yd0"],
            ),
            wrench=Wrench(
                taux=values["taux"],
                tauy=values["tauy"],
                fexd=values["fexd"],
                feyd=values["feyd"],
            ),
            dt=values["dt"],
            t_end=values["t_end"],
        )
    except DomainError as exc:
        # Leftover constructor-level violations (e.g. the minimum-mass guard).
        key = _guess_key(str(exc))
        raise ParseError(str(exc), lines.get(key, 0), key) from exc


def _guess_key(message: str) -> str | None:
    first = message.split(" ", 1)[0]
    for keys in _SECTIONS.values():
        if first in keys:
            return first
    return None


def serialize_config(config: ScenarioConfig) -> str:
    """Canonical text form; parses back to an equal ScenarioConfig."""
    c = config.calibration
    m = config.masses
    i = config.initial
    w = config.wrench
    ordered = {
        "masses": {"mx": m.mx, "my": m.my, "mp": m.mp},
        "calibration": {"alpha": c.alpha, "dx": c.dx, "dy": c.dy, "fx": c.fx, "fy": c.fy},
        "initial": {"x0": i.x, "y0": i.y, "xd0": i.xdot, "yd0": i.ydot},
        "wrench": {"taux": w.taux, "tauy": w.tauy, "fexd": w.fexd, "feyd": w.feyd},
        "sim": {"dt": config.dt, "t_end": config.t_end},
    }
    chunks = []
    for section, entries in ordered.items():
        chunks.append(f"[{section}]")
        for key, value in entries.items():
            chunks.append(f"{key} = {value:.17g}")
        chunks.append("")
    return "\n".join(chunks)
