"""Deterministic JSON emission and the aligned-text view derived from it."""
from __future__ import annotations

import json
from collections.abc import Mapping
from fractions import Fraction
from typing import Any

INT64_LIMIT = 2**63


def jsonable(obj: Any) -> Any:
    """Convert to plain JSON types.

    Integers outside the signed 64-bit range become decimal strings, and
    fractions become ``"p/q"`` strings, so consumers never lose precision.
    """
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if not -INT64_LIMIT <= obj < INT64_LIMIT else obj
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Mapping):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((jsonable(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def _scalar(v: Any) -> bool:
    return not isinstance(v, (dict, list))


def render_text(doc: Any, indent: int = 0) -> str:
    """Aligned ``key  value`` lines; short lists of scalars stay on one line."""
    doc = jsonable(doc)
    pad = " " * indent
    lines: list[str] = []
    if isinstance(doc, dict):
        width = max((len(k) for k in doc), default=0)
        for k in sorted(doc):
            v = doc[k]
            if _scalar(v) or (isinstance(v, list) and all(_scalar(x) for x in v)):
                lines.append(f"{pad}{k.ljust(width)}  {_inline(v)}")
            else:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 2).rstrip("\n"))
    elif isinstance(doc, list):
        for x in doc:
            if _scalar(x) or (isinstance(x, list) and all(_scalar(y) for y in x)):
                lines.append(f"{pad}- {_inline(x)}")
            else:
                lines.append(f"{pad}-")
                lines.append(render_text(x, indent + 2).rstrip("\n"))
    else:
        lines.append(f"{pad}{_inline(doc)}")
    return "\n".join(lines) + "\n"


def _inline(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)
