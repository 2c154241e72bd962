"""The command-line front end, called in-process."""

import pytest

from wqokit.cli import main
from wqokit.qo import format_qo, product, chain


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tree_cmp(capsys):
    assert run(capsys, "tree", "cmp", "--qo", "chain2", "a", "(a)") == (0, "true\n", "")
    assert run(capsys, "tree", "cmp", "--qo", "chain2", "0^4", "(1, 0^2)")[:2] == (1, "false\n")


def test_tree_cmp_kruskal(capsys):
    args = ("tree", "cmp", "--qo", "anti2", "(a, a)", "(a)")
    assert run(capsys, *args)[:2] == (0, "true\n")
    assert run(capsys, *args[:2], "--kruskal", *args[2:])[:2] == (1, "false\n")


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "tree", "cmp", "--qo", "chain2", "(a", "a")
    assert code == 2 and out == ""
    assert err == "error: expected ')', found end of input at position 2\n"


def test_unknown_label(capsys):
    code, _, err = run(capsys, "seq", "cmp", "--qo", "chain2", "c", "a")
    assert code == 2 and "unknown label 'c'" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["tree"])
    assert exc.value.code == 2


def test_seq_cmp(capsys):
    assert run(capsys, "seq", "cmp", "--qo", "anti3", "(a + b + c)^w", "(c + b + a)^w")[:2] == (0, "true\n")
    assert run(capsys, "seq", "cmp", "--qo", "anti3", "(a)^w + (a)^w", "(a)^w")[:2] == (1, "false\n")


def test_convert(capsys):
    assert run(capsys, "convert", "tree2seq", "(a, b)") == (0, "(a + b)^w\n", "")
    assert run(capsys, "convert", "seq2tree", "--qo", "chain2", "(a + b)^w")[:2] == (0, "(b)\n")
    code, _, err = run(capsys, "convert", "seq2tree", "a + b")
    assert code == 2 and "indecomposable" in err


def test_otype(capsys):
    assert run(capsys, "otype", "tf", "--qo", "chain2")[1] == "e_0\n"
    assert run(capsys, "otype", "tf", "--qo", "1")[1] == "w\n"
    assert run(capsys, "otype", "seq", "--qo", "anti5")[1] == "e_3\n"
    assert run(capsys, "otype", "qo", "--qo", "anti3")[1] == "3\n"


def test_otype_of_empty_file(capsys, tmp_path):
    path = tmp_path / "empty.qo"
    path.write_text("# nothing\n")
    assert run(capsys, "otype", "tf", "--qo", str(path))[1] == "0\n"


def test_qo_stats_from_file(capsys, tmp_path):
    path = tmp_path / "diamond.qo"
    path.write_text(format_qo(product(chain(2), chain(2))))
    code, out, _ = run(capsys, "qo", "stats", "--qo", str(path))
    assert code == 0
    assert out == "elements: 4\nclasses: 4\notype: 4\nheight: 3\nwidth: 2\n"


def test_missing_qo_file(capsys, tmp_path):
    code, _, err = run(capsys, "qo", "stats", "--qo", str(tmp_path / "nope"))
    assert code == 2 and "neither a built-in" in err


def test_eps(capsys):
    assert run(capsys, "eps", "cmp", "<w, 0>", "e(0)")[1] == "less\n"
    assert run(capsys, "eps", "cmp", "--omega", "2", "e(1)", "e(0)")[1] == "greater\n"
    assert run(capsys, "eps", "cmp", "<<0>>", "<<0>>")[1] == "equal\n"
    assert run(capsys, "eps", "totree", "w")[1] == "((1))\n"
    code, _, err = run(capsys, "eps", "cmp", "<w>", "0")
    assert code == 2 and "single summand" in err


def test_check_correspondence(capsys):
    assert run(capsys, "check", "correspondence", "--seed", "1", "--cases", "100") == (0, "100/100 ok\n", "")


def test_check_epsilon(capsys):
    code, out, _ = run(capsys, "check", "epsilon", "--omega", "1", "--max-size", "4")
    assert code == 0 and out == "16 terms over a chain of 1\n256/256 ok\n"


def test_check_trees_and_sequences(capsys):
    code, out, _ = run(capsys, "check", "trees", "--qo", "anti2", "--max-size", "4")
    assert code == 0 and out.endswith("484/484 ok\n")
    code, out, _ = run(capsys, "check", "sequences", "--seed", "2", "--cases", "50")
    assert code == 0 and out == "50/50 ok\n"


def test_check_caps(capsys):
    assert run(capsys, "check", "trees", "--max-size", "9")[0] == 2
    assert run(capsys, "check", "sequences", "--cases", "-1")[0] == 2


def test_determinism(capsys):
    first = run(capsys, "check", "correspondence", "--seed", "9", "--cases", "40")
    assert run(capsys, "check", "correspondence", "--seed", "9", "--cases", "40") == first
