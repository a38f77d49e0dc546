from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from sympow.errors import IdealParseError
from sympow.monomial.ideal import normalize
from sympow.monomial.types import Monomial, MonomialIdeal, Ring

_VARIABLE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_KEYS = ("vars", "gens", "component", "degree", "c", "name", "description")


@dataclass
class IdealDocument:
    """
    An ideal as written in a file: variables, generators, and the optional
    inputs some computations take (primary components, the generating degree
    n of the symbolic Rees algebra, the value c).
    """

    vars: List[str]
    gens: List[Monomial]
    components: List[List[Monomial]] = field(default_factory=list)
    generating_degree: Optional[int] = None
    c_value: Optional[int] = None
    name: Optional[str] = None
    description: Optional[str] = None

    @property
    def ring(self) -> Ring:
        return Ring(tuple(self.vars))

    def ideal(self) -> MonomialIdeal:
        return normalize(self.gens, self.ring)

    def component_ideals(self) -> List[MonomialIdeal]:
        return [normalize(q, self.ring) for q in self.components]


def parse_monomial(text: str, variables: List[str], line: int = 0, column: int = 1) -> Monomial:
    """
    Parse "x^2*y" style text; "1" is the unit monomial.
    """
    exponents = [0] * len(variables)
    stripped = text.strip()
    if not stripped:
        raise IdealParseError("Empty monomial", line, column)
    if stripped == "1":
        return tuple(exponents)

    offset = column + (len(text) - len(text.lstrip()))
    for factor in stripped.split("*"):
        token = factor.strip()
        at = offset + (len(factor) - len(factor.lstrip()))
        name, _, power = token.partition("^")
        name = name.strip()
        if name not in variables:
            raise IdealParseError(f"Unknown variable '{name}'", line, at)
        if power:
            power = power.strip()
            if power.startswith("-"):
                raise IdealParseError(f"Negative exponent in '{token}'", line, at)
            if not power.isdigit():
                raise IdealParseError(f"Bad exponent in '{token}'", line, at)
            e = int(power)
        else:
            e = 1
        exponents[variables.index(name)] += e
        offset += len(factor) + 1
    return tuple(exponents)


def _parse_list(text: str, variables: List[str], line: int, column: int) -> List[Monomial]:
    out = []
    offset = column
    for item in text.split(","):
        if item.strip():
            out.append(parse_monomial(item, variables, line, offset))
        offset += len(item) + 1
    return out


def _check_variables(names: List[str], line: int = 0) -> None:
    seen = set()
    for name in names:
        if not isinstance(name, str) or not _VARIABLE.match(name):
            raise IdealParseError(f"Invalid variable name {name!r}", line, 1)
        if name in seen:
            raise IdealParseError(f"Duplicate variable '{name}'", line, 1)
        seen.add(name)
    if not names:
        raise IdealParseError("No variables declared", line, 1)


def _json_monomial(value: Any, variables: List[str]) -> Monomial:
    if isinstance(value, str):
        return parse_monomial(value, variables)
    if not isinstance(value, list) or not all(isinstance(e, int) for e in value):
        raise IdealParseError(f"Generator {value!r} is neither a string nor an exponent list")
    if len(value) != len(variables):
        raise IdealParseError(
            f"Generator {value} has {len(value)} exponents for {len(variables)} variables"
        )
    if any(e < 0 for e in value):
        raise IdealParseError(f"Negative exponent in {value}")
    return tuple(value)


def _optional_positive(data: Dict[str, Any], *keys: str) -> Optional[int]:
    for key in keys:
        if data.get(key) is not None:
            value = data[key]
            if not isinstance(value, int) or value < 1:
                raise IdealParseError(f"'{key}' must be a positive integer")
            return value
    return None


def _parse_json(text: str) -> IdealDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise IdealParseError(e.msg, e.lineno, e.colno) from e
    if not isinstance(data, dict):
        raise IdealParseError("Ideal document must be a JSON object", 1, 1)

    variables = data.get("vars")
    if not isinstance(variables, list):
        raise IdealParseError("Missing 'vars' list", 1, 1)
    _check_variables(variables, 1)
    gens = [_json_monomial(g, variables) for g in data.get("gens") or []]
    if not gens:
        raise IdealParseError("Empty generator list", 1, 1)
    components = [
        [_json_monomial(g, variables) for g in component]
        for component in data.get("components") or []
    ]
    return IdealDocument(
        vars=list(variables),
        gens=gens,
        components=components,
        generating_degree=_optional_positive(data, "generating_degree", "degree"),
        c_value=_optional_positive(data, "c_value", "c"),
        name=data.get("name"),
        description=data.get("description"),
    )


def _parse_human(text: str) -> IdealDocument:
    variables: Optional[List[str]] = None
    pending: List[tuple[str, str, int, int]] = []
    scalars: Dict[str, Any] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise IdealParseError("Expected 'key: value'", number, len(line) - len(line.lstrip()) + 1)
        key, value = line.split(":", 1)
        key = key.strip().lower()
        column = line.index(":") + 2
        if key not in _KEYS:
            raise IdealParseError(f"Unknown key '{key}'", number, 1)

        if key == "vars":
            variables = value.replace(",", " ").split()
            _check_variables(variables, number)
        elif key in ("gens", "component"):
            pending.append((key, value, number, column))
        elif key in ("degree", "c"):
            token = value.strip()
            if not token.isdigit() or int(token) < 1:
                raise IdealParseError(f"'{key}' must be a positive integer", number, column)
            scalars[key] = int(token)
        else:
            scalars[key] = value.strip()

    if variables is None:
        raise IdealParseError("Missing 'vars:' line", 1, 1)

    gens: List[Monomial] = []
    components: List[List[Monomial]] = []
    for key, value, number, column in pending:
        parsed = _parse_list(value, variables, number, column)
        if key == "gens":
            gens.extend(parsed)
        else:
            components.append(parsed)
    if not gens:
        raise IdealParseError("Empty generator list", pending[0][2] if pending else 1, 1)

    return IdealDocument(
        vars=variables,
        gens=gens,
        components=components,
        generating_degree=scalars.get("degree"),
        c_value=scalars.get("c"),
        name=scalars.get("name"),
        description=scalars.get("description"),
    )


def parse_ideal(source: Union[Path, str]) -> IdealDocument:
    """
    Parse an ideal document from a path or from text.

    JSON form: {"vars": [...], "gens": [[...] or "x*y", ...], "components": [...],
    "generating_degree": n, "c_value": c}. Human form: "vars: x y z" and
    "gens: x*y, x*z, y*z" lines, plus optional "component:", "degree:" and "c:".

    Parameters:
        source (Path | str): file path or document text.

    Returns:
        IdealDocument: validated document.
    """
    text = source.read_text(encoding="utf-8") if isinstance(source, Path) else source
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_human(text)


def serialize(doc: IdealDocument) -> str:
    data: Dict[str, Any] = {
        "vars": doc.vars,
        "gens": [list(g) for g in doc.gens],
    }
    if doc.components:
        data["components"] = [[list(g) for g in q] for q in doc.components]
    if doc.generating_degree is not None:
        data["generating_degree"] = doc.generating_degree
    if doc.c_value is not None:
        data["c_value"] = doc.c_value
    if doc.name is not None:
        data["name"] = doc.name
    if doc.description is not None:
        data["description"] = doc.description
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
