import io
import json
import subprocess
import sys

import pytest

from natrees import bijections as bj
from natrees import gallery as g
from natrees import natdk as dk
from natrees.cli import run
from natrees.nat import enumerate_nats_by_size, nat_to_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


@pytest.fixture
def fig1(tmp_path):
    path = tmp_path / "fig1.json"
    path.write_text(json.dumps(nat_to_json(g.EX22_NAT)))
    return str(path)


def test_count_forced_shape():
    code, out, _ = call("count", "--shape", "((. .) (. .))")
    assert code == 0
    [rec] = records(out)
    assert (rec["hook"], rec["recursive"], rec["brute_force"], rec["agree"]) == (1, 1, 1, True)


def test_count_csv():
    code, out, _ = call("count", "--shape", "((. .) ((. .) .))", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["shape,hook,recursive,brute_force,agree", "((. .) ((. .) .)),2,2,2,True"]


def test_series_table():
    code, out, _ = call("series", "--which", "gfn", "--order", "4")
    assert code == 0
    rows = {tuple(r["exponents"]): r for r in records(out)}
    assert rows[(1, 1)]["count"] == 3
    assert rows[(2, 2)]["count"] == len(enumerate_nats_by_size(2, 2))


def test_series_variants():
    code, out, _ = call("series", "--which", "gfnab", "--order", "2")
    assert code == 0
    params = {tuple(r["params"]) for r in records(out) if r["exponents"] == [1, 1]}
    assert params == {(1, 1), (1, 0), (0, 1)}
    code, out, _ = call("series", "--which", "dk", "--d", "3", "--k", "1", "--order", "3", "--restrict", "3")
    code2, out2, _ = call("series", "--which", "dk", "--d", "2", "--k", "1", "--order", "3")
    assert code == code2 == 0 and out == out2
    code, out, _ = call("series", "--which", "gfh", "--order", "3", "--format", "csv")
    assert out.splitlines()[0] == "x,y,numerator,denominator"
    code, _, err = call("series", "--which", "dk", "--order", "3")
    assert code == 2 and err.startswith("natrees: error:")


def test_enumerate_and_stats():
    code, out, _ = call("enumerate", "--size", "1,1", "--stats")
    recs = records(out)
    assert code == 0 and len(recs) == 3
    assert sorted(r["hook_number"] for r in recs) == [1, 2, 2]
    code, out, _ = call("enumerate", "--shape", "((. .) ((. .) .))", "--mode", "brute_force")
    assert len(records(out)) == 2


def test_qhook():
    code, out, _ = call("qhook", "--shape", "((. .) ((. .) .))", "--stat", "imaj")
    [rec] = records(out)
    assert code == 0 and rec["equal"] and rec["product"] == [[0, 0, 1], [1, 0, 1]]


def test_biject(fig1):
    code, out, _ = call("biject", "--to", "words", "--in", fig1)
    assert code == 0
    assert bj.word_pair_from_json(records(out)[0]) == g.EX22_WORDS
    code, out, _ = call("biject", "--to", "tuple", "--in", fig1)
    assert bj.four_tuple_from_json(records(out)[0]).as_tuple() == g.EX22_FOUR_TUPLE
    code, out, _ = call("biject", "--to", "not", "--in", fig1)
    assert bj.not_from_json(records(out)[0]) == bj.xi(g.EX22_NAT)


def test_stirling():
    code, out, _ = call("stirling", "--w", "2", "--h", "1", "--alpha", "1", "--beta", "1")
    recs = records(out)
    assert code == 0
    assert recs[-1] == {"p": "total", "summand": len(enumerate_nats_by_size(2, 1))}


def test_dk_commands(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(dk.dk_to_json(g.DK32_EXAMPLE)))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(dk.dk_to_json(g.DK31_REPEATED_LABEL)))
    assert call("dk", "--validate", str(good))[0] == 0
    code, out, _ = call("dk", "--validate", str(bad))
    assert code == 1 and records(out)[0]["kind"] == "interval"
    code, out, _ = call("dk", "--geometric", str(good))
    geo = tmp_path / "geo.json"
    geo.write_text(out)
    code, out, _ = call("dk", "--geometric", str(geo))
    assert code == 0 and dk.dk_from_json(records(out)[0]) == g.DK32_EXAMPLE
    code, out, _ = call("dk", "--enumerate", str(good))
    assert code == 0 and len(out.splitlines()) == 1440


def test_render(fig1):
    code, out, _ = call("render", "--in", fig1)
    assert code == 0 and out.startswith("digraph")
    code, out, _ = call("render", "--format", "text", "--in", fig1)
    assert out.splitlines()[0] == "(11,12)"


def test_verify():
    code, out, _ = call("verify", "--suite", "qhook", "--max-size", "6")
    recs = records(out)
    assert code == 0 and recs and all(r["pass"] for r in recs)


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--shape", "((. ."],
        ["count", "--shape", "."],
        ["enumerate", "--size", "1"],
        ["enumerate"],
        ["series", "--which", "gfn", "--order", "-1"],
        ["stirling", "--w", "x", "--h", "1"],
        ["render", "--in", "/nonexistent/file.json"],
        ["frobnicate"],
    ],
)
def test_errors_are_single_line(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and err.startswith("natrees: error:")


def test_invalid_json(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{not json")
    code, _, err = call("biject", "--to", "words", "--in", str(path))
    assert code == 2 and "invalid JSON" in err
    path.write_text(json.dumps({"shape": "((. .) .)", "left": [2], "right": []}))
    code, _, err = call("biject", "--to", "words", "--in", str(path))
    assert code == 2 and "not a NAT" in err


def test_deterministic_output():
    a = call("enumerate", "--size", "2,2", "--stats")
    b = call("enumerate", "--size", "2,2", "--stats")
    assert a == b


def test_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "natrees.cli", "count", "--shape", "((. .) (. .))"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["hook"] == 1
