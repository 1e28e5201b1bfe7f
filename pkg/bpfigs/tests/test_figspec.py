import json

import pytest

from bpfigs import (DEFAULT_GROUP_KEYS, DEFAULT_SCALES, FigureSpec, SpecError,
                    spec_from_json)


def test_unknown_kind_rejected():
    with pytest.raises(SpecError, match="kind"):
        FigureSpec(csvs=("a.csv",), kind="scatter", out="x.png")


def test_empty_csvs_rejected():
    with pytest.raises(SpecError, match="CSV"):
        FigureSpec(csvs=(), kind="error_rate", out="x.png")


def test_missing_out_rejected():
    with pytest.raises(SpecError, match="output"):
        FigureSpec(csvs=("a.csv",), kind="error_rate", out="")


@pytest.mark.parametrize("axis", ["xscale", "yscale"])
def test_bad_scale_rejected(axis):
    with pytest.raises(SpecError, match=axis):
        FigureSpec(csvs=("a.csv",), kind="trace", out="x.png",
                   **{axis: "loglog"})


def test_single_string_csvs_coerced():
    spec = FigureSpec(csvs="a.csv", kind="trace", out="x.png")
    assert spec.csvs == ("a.csv",)


@pytest.mark.parametrize("kind", ["error_rate", "avg_iter", "trace"])
def test_per_kind_defaults(kind):
    spec = FigureSpec(csvs=("a.csv",), kind=kind, out="x.png")
    assert spec.series_keys() == DEFAULT_GROUP_KEYS[kind]
    assert spec.scales() == DEFAULT_SCALES[kind]


def test_overrides_win():
    spec = FigureSpec(csvs=("a.csv",), kind="error_rate", out="x.png",
                      group_keys=("code_id",), xscale="linear")
    assert spec.series_keys() == ("code_id",)
    assert spec.scales() == ("linear", "log")  # yscale still the kind default


def test_empty_group_key_rejected():
    with pytest.raises(SpecError, match="group_keys"):
        FigureSpec(csvs=("a.csv",), kind="error_rate", out="x.png",
                   group_keys=("decoder", ""))


def test_spec_from_json():
    text = json.dumps({
        "csvs": ["sweep.csv"],
        "kind": "error_rate",
        "out": "fig.png",
        "group_keys": ["schedule"],
        "yscale": "log",
        "title": "sweep",
    })
    spec = spec_from_json(text)
    assert spec.csvs == ("sweep.csv",)
    assert spec.group_keys == ("schedule",)
    assert spec.title == "sweep"


def test_spec_from_json_string_csvs():
    spec = spec_from_json('{"csvs": "t.csv", "kind": "trace", "out": "t.png"}')
    assert spec.csvs == ("t.csv",)


def test_spec_from_json_unknown_key():
    with pytest.raises(SpecError, match="unknown"):
        spec_from_json('{"csvs": "a.csv", "kind": "trace", "out": "x.png", '
                       '"colour": "red"}')


def test_spec_from_json_missing_required():
    with pytest.raises(SpecError, match="required"):
        spec_from_json('{"kind": "trace"}')


def test_spec_from_json_not_json():
    with pytest.raises(SpecError, match="JSON"):
        spec_from_json("kind: trace")


def test_spec_from_json_not_object():
    with pytest.raises(SpecError, match="object"):
        spec_from_json('["a.csv"]')
