"""Facet files.

Text format: the first non-blank line holds n, every further line one facet
as whitespace-separated vertex ids; '#' starts a comment. Structured format:
a JSON object {"n": int, "facets": [[...], ...]}.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Literal

from .complex import Complex, ComplexError, from_facets


class FacetFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_text(text: str) -> Complex:
    n = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise FacetFileError(f"not an integer list: {raw.strip()!r}", lineno) from None
        if n is None:
            if len(values) != 1:
                raise FacetFileError("first line must hold the vertex count", lineno)
            n = values[0]
            continue
        for v in values:
            if not 1 <= v <= n:
                raise FacetFileError(f"vertex {v} out of range 1..{n}", lineno)
        facets.append(values)
    if n is None:
        raise FacetFileError("empty facet file")
    try:
        return from_facets(n, facets)
    except ComplexError as exc:
        raise FacetFileError(str(exc)) from exc


def parse_structured(text: str) -> Complex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FacetFileError(exc.msg, exc.lineno) from exc
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise FacetFileError('expected an object with integer field "n"')
    facets = data.get("facets")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise FacetFileError('expected "facets" as an array of arrays')
    try:
        return from_facets(data["n"], facets)
    except (ComplexError, TypeError) as exc:
        raise FacetFileError(str(exc)) from exc


def loads(text: str) -> Complex:
    if text.lstrip().startswith("{"):
        return parse_structured(text)
    return parse_text(text)


def read_facet_file(path: str | Path) -> Complex:
    return loads(Path(path).read_text())


def dumps(K: Complex, fmt: Literal["text", "structured"] = "text") -> str:
    if fmt == "structured":
        return json.dumps({"n": K.n, "facets": [list(f) for f in K.facets]}) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown facet format {fmt!r}")
    return "\n".join([str(K.n)] + [" ".join(map(str, f)) for f in K.facets]) + "\n"


def write_facet_file(K: Complex, path: str | Path, fmt: Literal["text", "structured"] = "text") -> None:
    Path(path).write_text(dumps(K, fmt))
