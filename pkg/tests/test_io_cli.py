import json
import subprocess
import sys

import pytest

from oddcover.core import Graph, OddCover
from oddcover.io import (
    emit_edge_list,
    load_witness,
    parse_edge_list,
    parse_graph6,
    witness_json,
)

from conftest import random_graph, rng_for


def run_cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "oddcover.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )
    return proc


def test_parse_edge_list_basic():
    g = parse_edge_list("3 2\n0 1\n1 2\n")
    assert g == Graph(3, [(0, 1), (1, 2)])


def test_parse_edge_list_comments_and_blanks():
    g = parse_edge_list("# header\n\n4 1\n0 3  # pendant\n")
    assert g == Graph(4, [(0, 3)])


def test_parse_edge_list_errors_carry_line_numbers():
    with pytest.raises(ValueError, match="line 2"):
        parse_edge_list("3 1\n0 0\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_edge_list("4 2\n0 1\n0 1\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_edge_list("3 1\n0 5\n")
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")  # count mismatch


def test_edge_list_round_trip():
    rng = rng_for("roundtrip")
    for _ in range(60):
        g = random_graph(rng.randrange(1, 15), rng.random(), rng)
        assert parse_edge_list(emit_edge_list(g)) == g


def test_graph6_known_codes():
    k4 = parse_graph6("C~")
    assert k4 == Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert parse_graph6("D??") == Graph(5)  # empty on 5 vertices
    # path 0-1-2: column-major bits 101 -> value 40 -> chr(103)
    assert parse_graph6("B" + chr(40 + 63)) == Graph(3, [(0, 1), (1, 2)])


def test_graph6_cross_parse_matches_edge_list():
    # same 3-vertex triangle through both parsers
    tri_el = parse_edge_list("3 3\n0 1\n0 2\n1 2\n")
    tri_g6 = parse_graph6("B" + chr(0b111000 + 63))
    assert tri_el == tri_g6


def test_graph6_errors():
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("C~~")  # length mismatch
    with pytest.raises(ValueError):
        parse_graph6("C" + chr(20))  # byte out of range


def test_witness_json_and_load():
    g = Graph(3, [(0, 1), (1, 2)])
    cover = OddCover(g, [(0, 1, 2)], "path")
    doc = witness_json(cover, bounds={"lower": 1, "upper": 2, "method": "x"})
    assert doc["valid"] and doc["count"] == 1 and doc["n"] == 3
    back = load_witness(json.dumps(doc), g)
    assert back.members == [(0, 1, 2)]
    with pytest.raises(ValueError):
        load_witness(json.dumps({"n": 5, "kind": "path", "members": []}), g)


def test_cli_cover_self_verifies(tmp_path):
    proc = run_cli("cover", "-", stdin="4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["valid"] and doc["count"] == 2
    # density folds in arboricity: a cycle needs two forests
    assert doc["bounds"]["lower"] == 2 and doc["bounds"]["upper"] == 2


def test_cli_exact_two_triangles():
    text = "6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n"
    proc = run_cli("exact", "-", "--max-k", "4", stdin=text)
    doc = json.loads(proc.stdout)
    assert doc["k"] == 2 and doc["valid"]


def test_cli_exact_cycle_kind():
    text = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
    doc = json.loads(run_cli("exact", "-", "--kind", "cycle", stdin=text).stdout)
    assert doc["k"] == 1 and doc["kind"] == "cycle"
    # odd-degree input cannot have a cycle cover
    proc = run_cli("exact", "-", "--kind", "cycle", stdin="2 1\n0 1\n")
    assert proc.returncode == 1


def test_cli_exact_budget_exceeded():
    text = "5 10\n" + "".join(
        f"{u} {v}\n" for u in range(5) for v in range(u + 1, 5)
    )
    proc = run_cli("exact", "-", "--max-k", "2", stdin=text)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["k"] is None and doc["exceeded"]


def test_cli_verify_round_trip(tmp_path):
    gpath = tmp_path / "g.txt"
    wpath = tmp_path / "w.json"
    gpath.write_text("4 3\n0 1\n1 2\n2 3\n")
    proc = run_cli("cover", str(gpath), "-o", str(wpath))
    assert proc.returncode == 0
    proc = run_cli("verify", str(gpath), str(wpath))
    assert proc.returncode == 0 and json.loads(proc.stdout)["valid"]
    doc = json.loads(wpath.read_text())
    doc["members"][0] = [0, 2]
    wpath.write_text(json.dumps(doc))
    proc = run_cli("verify", str(gpath), str(wpath))
    assert proc.returncode == 1
    assert not json.loads(proc.stdout)["valid"]


def test_cli_exit_codes():
    assert run_cli("cover", "-", stdin="3 1\n0 0\n").returncode == 1
    assert run_cli("cover", "/no/such/file").returncode == 2
    assert run_cli("frobnicate").returncode == 1


def test_cli_gen_families_round_trip():
    proc = run_cli("gen", "--family", "cycles", "--k", "4", "--len", "4")
    g = parse_edge_list(proc.stdout)
    assert g.n == 16 and g.m == 16
    proc = run_cli("gen", "--family", "counterexample", "--k", "3")
    g = parse_edge_list(proc.stdout)
    assert g.n == 14 and g.m == 38


def test_cli_gen_walecki_comments_partition():
    proc = run_cli("gen", "--family", "walecki", "--k", "3")
    g = parse_edge_list(proc.stdout)
    assert g.m == 21
    cyc_lines = [
        line for line in proc.stdout.splitlines() if line.startswith("# cycle")
    ]
    assert len(cyc_lines) == 3
    seen = set()
    for line in cyc_lines:
        vs = [int(x) for x in line.split()[2:]]
        for i in range(len(vs)):
            e = tuple(sorted((vs[i], vs[(i + 1) % len(vs)])))
            assert e not in seen
            seen.add(e)
    assert seen == g.edges


def test_cli_top_cover_subdivision_payload():
    proc = run_cli("top-cover", "-", stdin="4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert proc.returncode == 1  # single cycle: exceptional family
    proc = run_cli(
        "top-cover", "-", stdin="4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    )
    doc = json.loads(proc.stdout)
    assert doc["valid"] and doc["count"] == 2
    assert len(doc["subdivision"]) == 6


def test_cli_cycle_cover_and_iso_cover():
    eul = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
    doc = json.loads(run_cli("cycle-cover", "-", stdin=eul).stdout)
    assert doc["valid"] and doc["kind"] == "cycle" and doc["count"] == 1
    doc = json.loads(run_cli("iso-cover", "-", stdin=eul).stdout)
    assert doc["valid"] and doc["count"] == 2


def test_cli_bench_json_lines():
    proc = run_cli(
        "bench",
        "--family",
        "gnp",
        "--count",
        "4",
        "--n",
        "12",
        "--p",
        "0.3",
        "--seed",
        "3",
        "--ordered",
    )
    assert proc.returncode == 0
    lines = [json.loads(x) for x in proc.stdout.splitlines()]
    assert [r["instance"] for r in lines] == [0, 1, 2, 3]
    assert all(r["valid"] and r["count"] <= r["bound"] for r in lines)


def test_cli_bench_parallel_workers_deterministic():
    args = [
        "bench", "--family", "eulerian-random", "--verb", "cycle-cover",
        "--count", "6", "--n", "14", "--seed", "11", "--ordered",
    ]
    import subprocess as sp

    seq = sp.run(
        [sys.executable, "-m", "oddcover.cli", *args],
        capture_output=True, text=True, env={"ODDCOVER_THREADS": "1", "PATH": "/usr/bin:/bin"},
    )
    par = sp.run(
        [sys.executable, "-m", "oddcover.cli", *args],
        capture_output=True, text=True, env={"ODDCOVER_THREADS": "3", "PATH": "/usr/bin:/bin"},
    )
    assert seq.returncode == par.returncode == 0
    strip = lambda out: [
        {k: v for k, v in json.loads(x).items() if k != "seconds"}
        for x in out.splitlines()
    ]
    assert strip(seq.stdout) == strip(par.stdout)


def test_cli_broken_solver_exits_3(monkeypatch, capsys):
    # a solver returning an invalid witness must be a loud internal error
    import io

    from oddcover import cli as climod
    from oddcover.core import OddCover

    monkeypatch.setattr(
        climod, "path_odd_cover", lambda g: OddCover(g, [(0, 1)], "path")
    )
    monkeypatch.setattr("sys.stdin", io.StringIO("3 2\n0 1\n1 2\n"))
    rc = climod.main(["cover", "-"])
    assert rc == 3  # never silently prints a bad witness


def test_cli_main_inprocess_reads_stdin(monkeypatch, capsys):
    from oddcover import cli as climod

    monkeypatch.setattr(
        "sys.stdin", __import__("io").StringIO("3 2\n0 1\n1 2\n")
    )
    rc = climod.main(["cover", "-"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["valid"]
