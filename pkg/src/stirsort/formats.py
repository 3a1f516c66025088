"""
File Formats and Records

Readers for configuration, mask, program and step files, and the JSON
records printed by the CLI. Rationals are written as "p/q" strings.
"""

import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from .analysis.bounds import BoundCertificate
from .books.configuration import Configuration, format_config, parse_config
from .books.moves import Rearrangement, Transposition, ValidationReport
from .errors import ConfigurationError, FlowError, FormatError, TranspositionError
from .search.solvers import SolveResult, TargetPredicate
from .torus.flow import Axis, FlowProgram, GridMask, ShearStep

logger = logging.getLogger(__name__)

Record = Dict[str, Any]


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or an integer into an exact rational

    Raises:
        FormatError: If the text is not a rational
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise FormatError(f"Invalid rational {text!r}, expected p/q")


def format_fraction(value: Fraction) -> str:
    return str(Fraction(value))


def format_decimal(value: Optional[Fraction]) -> str:
    """Decimal rendering with 15 significant digits (empty for None)"""
    if value is None:
        return ""
    return f"{float(value):.15g}"


def parse_target(text: str) -> TargetPredicate:
    """Parse "sorted" or "run:COLOR:S"

    Raises:
        FormatError: If the text is not a target
    """
    if text == "sorted":
        return TargetPredicate.sorted()
    parts = text.split(":")
    if len(parts) == 3 and parts[0] == "run" and parts[1] in ("0", "1") and parts[2].isdigit():
        s = int(parts[2])
        if s >= 1:
            return TargetPredicate.run(int(parts[1]), s)
    raise FormatError(f"Invalid target {text!r}, expected sorted or run:COLOR:S")


def _read_text(path: str) -> str:
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"{path}: not valid UTF-8 at byte {e.start}", position=e.start)


def read_config_file(path: str) -> Configuration:
    """Read a single-line bit file

    Raises:
        FormatError: If the content is not a configuration
    """
    text = _read_text(path)
    try:
        return parse_config(text)
    except ConfigurationError as e:
        raise FormatError(f"{path}: {e}", position=e.position)


def _step_from_record(item: Any, index: int) -> Transposition:
    if not isinstance(item, dict) or set(item) != {"y", "a", "b"}:
        raise FormatError(f"Step {index} must be an object with keys y, a, b", position=index)
    values = [item[key] for key in ("y", "a", "b")]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise FormatError(f"Step {index} values must be integers", position=index)
    try:
        return Transposition(*values)
    except TranspositionError as e:
        raise FormatError(f"Step {index}: {e}", position=index)


def rearrangement_from_record(record: Record) -> Rearrangement:
    """Build a rearrangement from {"initial": bits, "steps": [...]}

    Raises:
        FormatError: If the record is malformed
    """
    if not isinstance(record, dict) or "initial" not in record or "steps" not in record:
        raise FormatError("Rearrangement record needs keys initial and steps")
    try:
        initial = parse_config(str(record["initial"]))
    except ConfigurationError as e:
        raise FormatError(f"initial: {e}", position=e.position)
    return Rearrangement(initial, steps_from_record(record["steps"]))


def steps_from_record(items: Any) -> Tuple[Transposition, ...]:
    if not isinstance(items, list):
        raise FormatError("Steps must be a list")
    return tuple(_step_from_record(item, i) for i, item in enumerate(items))


def _load_json(path: str) -> Any:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON: {e.msg}", line=e.lineno, position=e.pos)


def read_steps_file(path: str, initial: Configuration) -> Rearrangement:
    """Read a step list or a full rearrangement record for the given initial configuration

    Raises:
        FormatError: If the file is malformed or its initial configuration differs
    """
    data = _load_json(path)
    if isinstance(data, list):
        return Rearrangement(initial, steps_from_record(data))
    r = rearrangement_from_record(data)
    if r.initial != initial:
        raise FormatError(f"{path}: initial configuration {r.initial} does not match {initial}")
    return r


def rearrangement_record(r: Rearrangement) -> Record:
    n = r.initial.n
    gamma = r.total_cost
    return {
        "initial": format_config(r.initial),
        "steps": [{"y": t.y, "a": t.a, "b": t.b} for t in r.steps],
        "cost_cells": gamma,
        "cost_normalized": format_fraction(Fraction(gamma, n)),
    }


def solve_record(result: SolveResult, target: TargetPredicate) -> Record:
    record = rearrangement_record(result.witness)
    record.update({
        "target": str(target),
        "cost_cells": result.cost,
        "cost_normalized": format_fraction(result.normalized_cost),
        "explored": result.explored,
    })
    return record


def validation_record(report: ValidationReport) -> Record:
    return {
        "valid": report.valid,
        "complete": report.complete,
        "gamma": report.gamma,
        "gamma_normalized": format_fraction(report.normalized_gamma()),
        "failing_step": report.failing_step,
        "final": format_config(report.final),
    }


def certificate_record(cert: BoundCertificate) -> Record:
    return {
        "kappa": format_fraction(cert.kappa),
        "eps": format_fraction(cert.eps),
        "n_eps": cert.n_eps,
        "bound": format_fraction(cert.bound),
        "degenerate": cert.degenerate,
        "chain": [[n, format_fraction(v)] for n, v in cert.chain],
    }


def dumps(record: Union[Record, List[Any]]) -> str:
    return json.dumps(record, indent=2, sort_keys=True)


def read_mask_file(path: str) -> GridMask:
    """Read M lines of M '0'/'1' characters

    Raises:
        FormatError: If the grid is ragged, not square or has another character
    """
    lines = _read_text(path).splitlines()
    while lines and not lines[-1]:
        lines.pop()
    m = len(lines)
    if m == 0:
        raise FormatError(f"{path}: mask is empty")
    rows = []
    for number, line in enumerate(lines, start=1):
        if len(line) != m:
            raise FormatError(f"{path}: line {number} has {len(line)} cells, expected {m}", line=number)
        for i, ch in enumerate(line):
            if ch not in "01":
                raise FormatError(f"{path}: illegal character {ch!r} on line {number}", line=number, position=i)
        rows.append([int(ch) for ch in line])
    return GridMask(np.array(rows, dtype=np.uint8))


def format_mask(mask: GridMask) -> str:
    return "".join("".join(str(v) for v in row) + "\n" for row in mask.cells)


def write_mask(mask: GridMask, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_mask(mask))


def program_from_record(items: Any) -> FlowProgram:
    """Build a program from [{"axis": "H"|"V", "shifts": [...]}, ...]

    Raises:
        FormatError: If the record is malformed or sizes disagree
    """
    if not isinstance(items, list) or not items:
        raise FormatError("Program must be a non-empty list of steps")
    steps = []
    for index, item in enumerate(items):
        if not isinstance(item, dict) or item.get("axis") not in ("H", "V"):
            raise FormatError(f"Step {index} needs axis H or V", position=index)
        shifts = item.get("shifts")
        if not isinstance(shifts, list) or not all(isinstance(s, int) and not isinstance(s, bool) for s in shifts):
            raise FormatError(f"Step {index} needs an integer shift list", position=index)
        try:
            steps.append(ShearStep(Axis(item["axis"]), tuple(shifts)))
        except FlowError as e:
            raise FormatError(f"Step {index}: {e}", position=index)
    try:
        return FlowProgram(steps[0].m, tuple(steps))
    except FlowError as e:
        raise FormatError(str(e))


def program_record(program: FlowProgram) -> List[Record]:
    return [{"axis": step.axis.value, "shifts": list(step.shifts)} for step in program.steps]


def read_program_file(path: str) -> FlowProgram:
    return program_from_record(_load_json(path))
