import json
import subprocess
import sys
from itertools import combinations

import pytest

from lawsmith import approx_min_gap_free_reduction, is_gap_free_law, is_minimal_useful_law, is_useful_law
from lawsmith.cli import run_command
from lawsmith.documents import bundled, game_from_document
from lawsmith.generators import _unrank_combination

from helpers import FACTORY_LAWS, factory


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "factory.json").write_text(json.dumps(bundled("factory.json")))
    for name, banned in FACTORY_LAWS.items():
        (tmp_path / f"{name}.json").write_text(json.dumps({"banned": sorted(banned)}))
    (tmp_path / "day3.json").write_text(json.dumps({x: f"d_{x}^3" for x in "abc"}))
    return tmp_path


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_gapfree_inline_law(workdir, capsys):
    code, out, _ = run(capsys, "check-gapfree", "--game", "factory.json", "--law", '{"banned":["d_a^1"]}')
    assert code == 0
    assert out.strip() == "gap-free: true"


def test_check_exit_code_one_when_false(workdir, capsys):
    code, out, _ = run(capsys, "check-useful", "--game", "factory.json", "--law", "L2.json")
    assert code == 1 and out.strip() == "useful: false"


@pytest.mark.parametrize("command,func", [
    ("check-useful", is_useful_law),
    ("check-minimal-useful", is_minimal_useful_law),
    ("check-gapfree", is_gap_free_law),
])
@pytest.mark.parametrize("law", sorted(FACTORY_LAWS))
def test_verdicts_match_library(workdir, capsys, command, func, law):
    code, _, _ = run(capsys, command, "--game", "factory.json", "--law", f"{law}.json")
    assert code == (0 if func(factory(), FACTORY_LAWS[law]) else 1)


def test_check_minimal_gapfree(workdir, capsys):
    assert run(capsys, "check-minimal-gapfree", "--game", "factory.json", "--law", "L3.json")[0] == 0
    assert run(capsys, "check-minimal-gapfree", "--game", "factory.json", "--law", "L2.json")[0] == 1


def test_reduce_useful_with_exact(workdir, capsys):
    code, out, _ = run(capsys, "reduce-useful", "--game", "factory.json", "--law", "L0.json", "--exact")
    assert code == 0
    doc_end = out.index("}\n") + 2
    law = json.loads(out[:doc_end])
    assert len(law["banned"]) == 3
    report = dict(line.split(": ", 1) for line in out[doc_end:].splitlines())
    assert report["size"] == "3"
    assert report["exact minimum"] == "3"
    assert float(report["ratio"]) <= 3.0
    assert report["witness"] == "useful-cover"


def test_reduce_gapfree_output_file(workdir, capsys):
    code, out, _ = run(capsys, "reduce-gapfree", "--game", "factory.json", "--law", "L1.json", "--output", "out.json")
    assert code == 0
    written = json.loads((workdir / "out.json").read_text())
    expected = approx_min_gap_free_reduction(factory(), FACTORY_LAWS["L1"])
    assert set(written["banned"]) == expected.law.banned
    assert f"witness: {expected.witness}" in out


def test_reduce_requires_property(workdir, capsys):
    code, _, err = run(capsys, "reduce-useful", "--game", "factory.json", "--law", "L2.json")
    assert code == 2 and "not useful" in err


def test_attribute(workdir, capsys):
    code, out, _ = run(capsys, "attribute", "--game", "factory.json", "--law", "L2.json", "--profile", "day3.json")
    assert code == 0
    assert "c: counterfactual" in out.splitlines()


def test_attribute_unprohibited_profile(workdir, capsys):
    code, _, err = run(capsys, "attribute", "--game", "factory.json", "--law", "L2.json",
                       "--profile", '{"a": "d_a^1", "b": "d_b^2", "c": "d_c^3"}')
    assert code == 2 and "not a prohibited profile" in err


def test_convert_round_trip(workdir, capsys):
    assert run(capsys, "convert", "--to", "graph", "--game", "factory.json", "--output", "g.json")[0] == 0
    graph = json.loads((workdir / "g.json").read_text())
    assert graph["rank"] == 3 and len(graph["edges"]) == 3
    assert run(capsys, "convert", "--to", "game", "--graph", "g.json", "--output", "back.json")[0] == 0
    back = game_from_document(json.loads((workdir / "back.json").read_text()))
    assert back.agents == ("1", "2", "3")
    code, out, _ = run(capsys, "convert", "--to", "gapfree-game", "--game", "factory.json")
    assert code == 0 and len(json.loads(out)["prohibited"]) == 13


def test_generate_is_deterministic(workdir, capsys):
    args = ["generate", "--kind", "random-game", "--seed", "5", "--agents", "3", "--prohibitions", "10"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    game_from_document(json.loads(first))


def test_generate_graph_gadget_from_source(workdir, capsys):
    (workdir / "tri.json").write_text(json.dumps(bundled("triangle.json")))
    code, out, _ = run(capsys, "generate", "--kind", "graph-gadget", "--source", "tri.json")
    assert code == 0
    g = game_from_document(json.loads(out))
    assert len(g.agents) == 2 and len(g.prohibition) == 3


def test_generate_cap(workdir, capsys):
    code, _, err = run(capsys, "generate", "--kind", "random-game", "--agents", "9")
    assert code == 2 and "cap" in err


def test_exact(workdir, capsys):
    (workdir / "tri.json").write_text(json.dumps(bundled("triangle.json")))
    code, out, _ = run(capsys, "exact", "--problem", "vc", "--graph", "tri.json")
    assert code == 0 and json.loads(out[: out.index("}") + 1]) == {"cover": ["1", "2"]}
    code, out, _ = run(capsys, "exact", "--problem", "gapfree", "--game", "factory.json", "--law", "L1.json")
    assert code == 0 and "size: 1" in out
    code, _, err = run(capsys, "exact", "--problem", "useful", "--game", "factory.json", "--law", "L1.json",
                       "--max-universe", "2")
    assert code == 2 and "budget" in err


def test_usage_and_parse_errors(workdir, capsys):
    assert run(capsys, "check-useful", "--game", "factory.json")[0] == 2
    (workdir / "broken.json").write_text('{"actions": {}, "prohibited": []}')
    code, _, err = run(capsys, "check-useful", "--game", "broken.json", "--law", "L1.json")
    assert code == 2 and "agents" in err
    code, _, err = run(capsys, "check-useful", "--game", "missing.json", "--law", "L1.json")
    assert code == 2
    code, _, err = run(capsys, "check-useful", "--game", "factory.json", "--law", '{"banned": ["zz"]}')
    assert code == 2 and "outside" in err


def test_law_banning_an_agent_out_warns(workdir, capsys):
    code, _, err = run(capsys, "check-useful", "--game", "factory.json",
                       "--law", '{"banned": ["d_a^1", "d_a^2", "d_a^3"]}')
    assert code == 0 and "warning" in err


def test_module_entry_point(workdir):
    proc = subprocess.run(
        [sys.executable, "-m", "lawsmith", "check-useful", "--game", "factory.json", "--law", "L1.json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "useful: true"


def test_unrank_combination_matches_itertools():
    for n in range(6):
        for s in range(n + 1):
            expected = list(combinations(range(n), s))
            assert [tuple(_unrank_combination(n, s, i)) for i in range(len(expected))] == expected
