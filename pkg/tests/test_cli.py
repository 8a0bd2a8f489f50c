import json

import pytest

from factorkit import format_edge_list, parse_instance
from factorkit.cli import main
from helpers import complete, cycle, path, star


def write_graph(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(format_edge_list(g))
    return str(p)


def write_instance(tmp_path, obj, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


# --- check-factor ------------------------------------------------------------


def test_check_factor_found(tmp_path, capsys):
    code = main(["check-factor", "--graph", write_graph(tmp_path, complete(4)),
                 "--f", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("4 2\n")
    assert len(out.strip().split("\n")) == 3


def test_check_factor_absent(tmp_path, capsys):
    code = main(["check-factor", "--graph", write_graph(tmp_path, path(3)),
                 "--f", "1"])
    assert code == 1
    assert capsys.readouterr().out == "absent\n"


def test_check_factor_gf_mode(tmp_path, capsys):
    code = main(["check-factor", "--graph", write_graph(tmp_path, path(3)),
                 "--g", "[1,1,1]", "--f", "[2,2,2]"])
    assert code == 0
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_check_factor_bad_inputs(tmp_path, capsys):
    g = write_graph(tmp_path, path(3))
    assert main(["check-factor", "--graph", g, "--f", "[1,1]"]) == 2
    assert main(["check-factor", "--graph", g, "--f", "not json"]) == 2
    assert main(["check-factor", "--graph", g, "--f", "[1,1,true]"]) == 2
    assert main(["check-factor", "--graph",
                 str(tmp_path / "missing.txt"), "--f", "1"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n1 0\n")
    assert main(["check-factor", "--graph", str(bad), "--f", "1"]) == 2
    assert "error:" in capsys.readouterr().err


# --- check-all-factors ---------------------------------------------------------


def _star_instance(tmp_path, g_fn, f_fn):
    return write_instance(tmp_path, {
        "graph": {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]},
        "g": list(g_fn), "f": list(f_fn)})


def test_all_factors_holds(tmp_path, capsys):
    inst = write_instance(tmp_path, {
        "graph": {"n": 2, "edges": [[0, 1]]}, "g": [1, 1], "f": [1, 1]})
    for method in ("criterion", "enum", "both"):
        code = main(["check-all-factors", "--instance", inst,
                     "--method", method])
        assert code == 0
        assert json.loads(capsys.readouterr().out) == {
            "holds": True, "vacuous": False, "witness": None}


def test_all_factors_fails_with_witness(tmp_path, capsys):
    inst = _star_instance(tmp_path, (1,) * 4, (1,) * 4)
    code = main(["check-all-factors", "--instance", inst])
    assert code == 1
    obj = json.loads(capsys.readouterr().out)
    assert obj["holds"] is False
    assert obj["witness"]["h"] == [1, 1, 1, 1]
    assert obj["witness"]["niessen"]["d_set"] == [0]


def test_all_factors_vacuous_exit(tmp_path, capsys):
    inst = write_instance(tmp_path, {
        "graph": {"n": 3, "edges": [[0, 1], [1, 2]]},
        "g": [1, 1, 1], "f": [1, 1, 1]})
    for method in ("criterion", "enum", "both"):
        code = main(["check-all-factors", "--instance", inst,
                     "--method", method])
        assert code == 3
        assert json.loads(capsys.readouterr().out) == {
            "holds": True, "vacuous": True, "witness": None}


def test_all_factors_large_both_degrades_to_enum(tmp_path, capsys):
    inst = write_instance(tmp_path, {
        "graph": {"n": 18, "edges": [[i, i + 1] for i in range(17)]},
        "g": [1] * 18, "f": [1] * 18})
    code = main(["check-all-factors", "--instance", inst, "--method", "both"])
    captured = capsys.readouterr()
    assert code == 0
    assert "falling back to enumeration" in captured.err
    assert json.loads(captured.out)["holds"] is True


def test_all_factors_bad_instance(tmp_path, capsys):
    inst = write_instance(tmp_path, {"graph": {"n": 2, "edges": []}})
    assert main(["check-all-factors", "--instance", inst]) == 2
    assert "error:" in capsys.readouterr().err


# --- toughness -----------------------------------------------------------------


def test_toughness_value(tmp_path, capsys):
    code = main(["toughness", "--graph", write_graph(tmp_path, path(3))])
    assert code == 0
    assert capsys.readouterr().out == \
        '{"toughness":{"num":1,"den":2},"cut":[1]}\n'


def test_toughness_infinite(tmp_path, capsys):
    code = main(["toughness", "--graph", write_graph(tmp_path, complete(4))])
    assert code == 0
    assert json.loads(capsys.readouterr().out) == {
        "toughness": "infinite", "cut": None}


def test_toughness_predicates(tmp_path, capsys):
    g = write_graph(tmp_path, star(3))
    assert main(["toughness", "--graph", g, "--mode", "one-tough"]) == 1
    assert json.loads(capsys.readouterr().out) == {
        "one_tough": False, "cut": [0]}
    assert main(["toughness", "--graph", g, "--mode", "almost"]) == 1
    assert json.loads(capsys.readouterr().out) == {
        "almost_one_tough": False, "cut": [0]}
    c6 = write_graph(tmp_path, cycle(6), "c6.txt")
    assert main(["toughness", "--graph", c6, "--mode", "one-tough"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "one_tough": True, "cut": None}


# --- reduce ---------------------------------------------------------------------


def test_reduce_writes_instance(tmp_path, capsys):
    out = str(tmp_path / "inst.json")
    code = main(["reduce", "--graph", write_graph(tmp_path, complete(4)),
                 "--out", out])
    assert code == 0
    assert "lifted n=12" in capsys.readouterr().out
    obj = json.loads(open(out).read())
    host, g_fn, f_fn = parse_instance(obj)
    assert host.n == 12
    assert g_fn == (1,) * 12
    assert f_fn == (2,) * 4 + (1,) * 8
    assert obj["x_of"] == [4, 5, 6, 7]
    assert obj["y_of"] == [8, 9, 10, 11]


def test_reduce_then_check_pipeline(tmp_path, capsys):
    out = str(tmp_path / "inst.json")
    main(["reduce", "--graph", write_graph(tmp_path, complete(4)),
          "--out", out])
    capsys.readouterr()
    assert main(["check-all-factors", "--instance", out,
                 "--method", "both"]) == 0
    assert json.loads(capsys.readouterr().out)["holds"] is True


def test_reduce_error_paths(tmp_path, capsys):
    assert main(["reduce", "--graph", write_graph(tmp_path, cycle(4)),
                 "--out", str(tmp_path / "x.json")]) == 2
    assert "not cubic" in capsys.readouterr().err
    two_k4 = write_graph(
        tmp_path,
        __import__("factorkit").Graph(
            8, list(complete(4).edges) +
            [(u + 4, v + 4) for u, v in complete(4).edges]),
        "twok4.txt")
    assert main(["reduce", "--graph", two_k4,
                 "--out", str(tmp_path / "y.json")]) == 2
    assert "not connected" in capsys.readouterr().err


def test_reduce_stdout(tmp_path, capsys):
    code = main(["reduce", "--graph", write_graph(tmp_path, complete(4)),
                 "--out", "-"])
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["f"] == [2, 2, 2, 2] + [1] * 8


# --- verify-lemmas ----------------------------------------------------------------


def test_verify_lemmas_22_small(capsys):
    code = main(["verify-lemmas", "--lemma", "2.2", "--n-max", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "38 graphs, 0 counterexamples" in out
    assert "all checks passed" in out


def test_verify_lemmas_all_tiny(capsys):
    code = main(["verify-lemmas", "--n-max", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "2.4: skipped" in out
    assert "2.5: skipped" in out
    assert "1.5 n=3: 4 graphs, 0 counterexamples" in out


def test_verify_lemmas_24_25(capsys):
    code = main(["verify-lemmas", "--lemma", "2.4", "--n-max", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "2.4 n=4 [bruteforce-vs-lift]: 1 graph, 16 specs" in out
    code = main(["verify-lemmas", "--lemma", "2.5", "--n-max", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "2.5 totals: 1 positive, 0 negative" in out


def test_verify_lemmas_flag_validation(capsys):
    assert main(["verify-lemmas", "--n-max", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify-lemmas", "--lemma", "9.9"])
    assert exc.value.code == 2


def test_output_is_deterministic(tmp_path, capsys):
    g = write_graph(tmp_path, star(3))
    main(["toughness", "--graph", g])
    first = capsys.readouterr().out
    main(["toughness", "--graph", g])
    assert capsys.readouterr().out == first


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
