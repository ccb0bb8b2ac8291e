from __future__ import annotations

import json

import pytest

from quintri.cli import main
from quintri.construct import complete_bipartite_34, complete_graph, cube_graph
from quintri.formats import parse_qmg, write_graph
from quintri.mgraph import Multigraph, is_quintic


def run(capsys, *argv: str) -> tuple[int, list[dict]]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in (
        ("k6", complete_graph(6)),
        ("k55", Multigraph(10, [(i, j, 1) for i in range(5) for j in range(5, 10)])),
        ("cube", cube_graph()),
        ("k34", complete_bipartite_34().as_multigraph()),
    ):
        paths[name] = str(tmp_path / f"{name}.qmg")
        write_graph(g, paths[name])
    paths["bad"] = str(tmp_path / "bad.qmg")
    (tmp_path / "bad.qmg").write_text("n=3\n0 1 1\n1 x 1\n")
    return paths


def test_check(capsys, files):
    code, [rec] = run(capsys, "check", files["k6"])
    assert code == 0 and rec["outcome"] == "ok"
    assert rec["min_edge_triangles"] == 4 and rec["corollary1"]["holds"]
    code, [rec] = run(capsys, "check", files["k55"])
    assert code == 1 and rec["triangle_property"] is False
    code, [rec] = run(capsys, "check", files["bad"])
    assert code == 1 and "line 3" in rec["error"]


def test_canon_and_classify(capsys, files):
    _, [rec] = run(capsys, "canon", files["k6"])
    assert parse_qmg(rec["canonical"].replace(";", "\n")).order == 6
    _, [rec] = run(capsys, "classify", files["k6"])
    assert rec["class"] == "NotTerminal"


def test_reduce_with_trace(capsys, files, tmp_path):
    trace = tmp_path / "trace.jsonl"
    code, [rec] = run(capsys, "reduce", files["k6"], "--emit-trace", str(trace))
    assert code == 0 and rec["terminals"] == ["SmallBase-4b"]
    steps = [json.loads(x) for x in trace.read_text().splitlines()]
    assert len(steps) == rec["step_count"] == 1
    assert {"rule", "match", "before", "after"} <= set(steps[0])
    code, _ = run(capsys, "reduce", files["k55"])
    assert code == 1


def test_generate(capsys, files, tmp_path):
    code, recs = run(capsys, "generate", "base")
    assert code == 0 and [r["order"] for r in recs] == [4, 4, 6, 6]
    code, [rec] = run(capsys, "generate", "foundational", files["cube"], "--out", str(tmp_path / "g"))
    assert code == 0 and rec["order"] == 12
    _, [rec] = run(capsys, "classify", rec["artifacts"][0])
    assert rec["class"] == "Foundational" and rec["root"].startswith("n=8")
    code, [rec] = run(capsys, "generate", "q-of", files["k34"])
    assert code == 0 and rec["order"] == 12
    code, recs = run(capsys, "generate", "expand", files["k6"], "--steps", "2", "--seed", "4")
    assert code == 0 and [r["order"] for r in recs] == [8, 10]
    assert all(is_quintic(parse_qmg(r["qmg"].replace(";", "\n"))) for r in recs)
    code, [rec] = run(capsys, "generate", "foundational", files["k6"])
    assert code == 1 and rec["outcome"] == "error"


def test_expand_is_seeded(capsys, files):
    a = run(capsys, "generate", "expand", files["k6"], "--steps", "3", "--seed", "9")
    b = run(capsys, "generate", "expand", files["k6"], "--steps", "3", "--seed", "9")
    assert a == b


def test_enumerate(capsys, tmp_path):
    code, recs = run(capsys, "enumerate", "quintic-tp", "--n", "6", "--connected", "--out", str(tmp_path / "e"))
    assert code == 0 and recs[-1]["count"] == 12 and len(recs) == 13
    assert (tmp_path / "e" / "census.jsonl").exists()
    _, recs = run(capsys, "enumerate", "cubic", "--n", "6")
    assert recs[-1]["count"] == 2
    code, [rec] = run(capsys, "enumerate", "quintic-tp", "--n", "5")
    assert code == 1 and "even" in rec["error"]


def test_verify_closure_small(capsys):
    code, recs = run(capsys, "verify-closure", "--n", "6")
    assert code == 0 and len(recs) == 12
    assert all(r["outcome"] == "ok" for r in recs)


def test_verify_closure_threads_agree(capsys):
    one = run(capsys, "verify-closure", "--n", "6", "--threads", "1")
    two = run(capsys, "verify-closure", "--n", "6", "--threads", "2")
    assert one == two


def test_verify_corollary(capsys):
    code, recs = run(capsys, "verify-corollary", "--n", "6")
    assert code == 0 and recs and all(r["rich_edges"] >= r["needed"] for r in recs)


def test_generate_needs_file(capsys):
    assert main(["generate", "q-of"]) == 2
