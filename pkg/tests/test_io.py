import json
from math import comb

import pytest

from oimod import io
from oimod.linalg import GF
from oimod.module import hilbert


def test_round_trip(gen_corpus, tmp_path):
    for P in gen_corpus:
        text = io.dumps(P)
        Q = io.loads(text)
        assert Q == P
        assert io.dumps(Q) == text
    path = tmp_path / "p.json"
    io.dump(gen_corpus[0], path)
    assert io.load(path) == gen_corpus[0]


def test_fixtures_ship():
    fx = io.fixtures()
    assert set(fx) == set(io.FIXTURES)
    assert fx["example42"].free.generator_degrees == (1, 0)
    assert not fx["example42"].relations
    for m in range(4):
        assert hilbert(fx[f"M{m}"], 0, 5) == [comb(n, m) for n in range(6)]
    with pytest.raises(KeyError):
        io.fixture("nope")


BASE = {"field": {"kind": "prime", "p": 5}, "generators": [1],
        "relations": [{"degree": 2, "terms": [{"gen": 0, "map": [2], "coeff": "3"}]}]}


def mutate(path, value):
    d = json.loads(json.dumps(BASE))
    target = d
    for key in path[:-1]:
        target = target[key]
    if value is KeyError:
        del target[path[-1]]
    else:
        target[path[-1]] = value
    return json.dumps(d)


@pytest.mark.parametrize("path,value", [
    (("field", "kind"), "reals"),
    (("field", "p"), 6),
    (("field", "p"), True),
    (("generators",), [-1]),
    (("generators",), [1.0]),
    (("relations", 0, "degree"), "2"),
    (("relations", 0, "terms", 0, "gen"), 1),
    (("relations", 0, "terms", 0, "map"), [3]),
    (("relations", 0, "terms", 0, "map"), [1, 2]),
    (("relations", 0, "terms", 0, "coeff"), 3),
    (("relations", 0, "terms", 0, "coeff"), "1/5"),
    (("relations", 0, "terms", 0, "coeff"), "abc"),
    (("relations", 0, "terms", 0, "extra"), 1),
    (("generators",), KeyError),
])
def test_schema_errors(path, value):
    with pytest.raises(io.PresentationFormatError):
        io.loads(mutate(path, value))


def test_invalid_json():
    with pytest.raises(io.PresentationFormatError):
        io.loads("{not json")


def test_prime_coefficients_canonical():
    P = io.loads(mutate(("relations", 0, "terms", 0, "coeff"), "-1/2"))
    assert P.field == GF(5)
    assert io.presentation_to_dict(P)["relations"][0]["terms"][0]["coeff"] == "2"
