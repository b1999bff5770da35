"""Presentation files and canonical JSON output.

A presentation file looks like::

    {"field": {"kind": "rationals"},
     "generators": [1],
     "relations": [{"degree": 2,
                    "terms": [{"gen": 0, "map": [1], "coeff": "1/1"}]}]}

Prime fields are written ``{"kind": "prime", "p": 5}``.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .combinatorics import IncreasingMap
from .linalg import Field
from .module import Element, FreeModule, Presentation


class PresentationFormatError(ValueError):
    pass


def _require(cond, msg):
    if not cond:
        raise PresentationFormatError(msg)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def field_from_dict(d) -> Field:
    _require(isinstance(d, dict) and "kind" in d, "field must be an object with a 'kind'")
    kind = d["kind"]
    try:
        if kind == "rationals":
            _require(set(d) == {"kind"}, "rationals field takes no other keys")
            return Field("rationals")
        if kind == "prime":
            _require(set(d) == {"kind", "p"} and _is_int(d["p"]), "prime field needs an integer 'p'")
            return Field("prime", d["p"])
    except ValueError as exc:
        raise PresentationFormatError(str(exc)) from exc
    raise PresentationFormatError(f"unknown field kind {kind!r}")


def presentation_from_dict(data) -> Presentation:
    _require(isinstance(data, dict), "presentation must be a JSON object")
    extra = set(data) - {"field", "generators", "relations"}
    _require(not extra, f"unexpected keys: {sorted(extra)}")
    _require("field" in data and "generators" in data, "missing 'field' or 'generators'")
    field = field_from_dict(data["field"])
    gens = data["generators"]
    _require(isinstance(gens, list) and all(_is_int(g) and g >= 0 for g in gens),
             "generators must be a list of non-negative integers")
    F = FreeModule(tuple(gens))
    relations = []
    for k, rel in enumerate(data.get("relations", [])):
        _require(isinstance(rel, dict) and set(rel) == {"degree", "terms"},
                 f"relation {k} must have exactly 'degree' and 'terms'")
        deg = rel["degree"]
        _require(_is_int(deg) and deg >= 0, f"relation {k}: degree must be a non-negative integer")
        _require(isinstance(rel["terms"], list), f"relation {k}: terms must be a list")
        terms = []
        for t in rel["terms"]:
            _require(isinstance(t, dict) and set(t) == {"gen", "map", "coeff"},
                     f"relation {k}: each term needs exactly 'gen', 'map', 'coeff'")
            j, values, coeff = t["gen"], t["map"], t["coeff"]
            _require(_is_int(j) and 0 <= j < len(F), f"relation {k}: bad generator index {j!r}")
            _require(isinstance(values, list) and all(_is_int(v) for v in values),
                     f"relation {k}: map must be a list of integers")
            _require(isinstance(coeff, str), f"relation {k}: coefficients are strings like \"3/2\"")
            try:
                alpha = IncreasingMap(deg, tuple(values))
                c = field.parse(coeff)
            except (ValueError, ZeroDivisionError) as exc:
                raise PresentationFormatError(f"relation {k}: {exc}") from exc
            _require(alpha.source == F.generator_degrees[j],
                     f"relation {k}: map {values} does not start at generator {j}'s degree")
            terms.append((j, alpha, c))
        relations.append(Element.build(field, deg, terms, F))
    return Presentation(field, F, tuple(relations))


def presentation_to_dict(P: Presentation) -> dict:
    fmt = P.field.format
    return {
        "field": P.field.describe(),
        "generators": list(P.free.generator_degrees),
        "relations": [
            {
                "degree": w.degree,
                "terms": [{"gen": j, "map": list(a.values), "coeff": fmt(c)} for j, a, c in w.terms],
            }
            for w in P.relations
        ],
    }


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def loads(text: str) -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationFormatError(f"invalid JSON: {exc}") from exc
    return presentation_from_dict(data)


def dumps(P: Presentation) -> str:
    return canonical_json(presentation_to_dict(P))


def load(path) -> Presentation:
    return loads(Path(path).read_text())


def dump(P: Presentation, path) -> None:
    Path(path).write_text(dumps(P) + "\n")


FIXTURES = ("example42", "ramos", "M0", "M1", "M2", "M3")


def fixture_path(name: str):
    if name.endswith(".json"):
        name = name[:-5]
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    return resources.files("oimod") / "fixtures" / f"{name}.json"


def fixture(name: str) -> Presentation:
    return loads(fixture_path(name).read_text())


def fixtures() -> dict[str, Presentation]:
    return {name: fixture(name) for name in FIXTURES}
