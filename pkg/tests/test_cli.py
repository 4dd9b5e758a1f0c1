from pathlib import Path

import pytest

from mlttcheck.cli import main

FIXDIR = Path(__file__).parent.parent / "fixtures"


def run(capsys, monkeypatch, text, *args):
    import io
    import sys

    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code = main(["-", *args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_conv_accepts_with_typed_trace(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch,
                         "conv (x : Nat -> Nat) |- x == x : Nat -> Nat\n",
                         "--trace")
    assert code == 0
    assert out.strip() == "accept"
    lines = err.strip().split("\n")
    assert lines[0] == "TTmRed"
    assert any(line.strip() == "FunExp" for line in lines)


def test_conv_accepts_with_untyped_trace(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch,
                         "conv (x : Nat -> Nat) |- x == x : Nat -> Nat\n",
                         "--algo", "untyped", "--trace")
    assert code == 0
    names = [line.strip() for line in err.strip().split("\n")]
    assert "NeuNeu" in names and "UVar" in names
    assert "FunExp" not in names


def test_trace_lines_are_depth_indented(capsys, monkeypatch):
    _, _, err = run(capsys, monkeypatch,
                    "conv (x : Nat -> Nat) |- x == x : Nat -> Nat\n",
                    "--trace")
    for line in err.rstrip("\n").split("\n"):
        indent = len(line) - len(line.lstrip(" "))
        assert indent % 2 == 0
        assert line.strip().isidentifier()


def test_nf_of_two_plus_two(capsys, monkeypatch):
    query = ("nf |- natrec (n. Nat) (succ (succ zero)) (n r. succ r) "
             "(succ (succ zero))\n")
    code, out, _ = run(capsys, monkeypatch, query)
    assert code == 0
    assert out.strip() == "succ (succ (succ (succ zero)))"


def test_infer_prints_surface_type(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, "infer |- \\x:Nat. x\n")
    assert code == 0
    assert out.strip() == "Nat -> Nat"


def test_whnf_directive(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       "whnf |- fst (pair {x:Nat. Nat} (zero, succ zero))\n")
    assert code == 0
    assert out.strip() == "zero"


def test_reject_is_exit_1(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, "check |- succ zero : Nat -> Nat\n")
    assert code == 1
    assert out.startswith("reject:")


def test_out_of_fuel_is_exit_2_never_reject(capsys, monkeypatch):
    omega = "(\\x:Nat. x x) (\\x:Nat. x x)"
    code, out, _ = run(capsys, monkeypatch, f"whnf |- {omega}\n",
                       "--fuel", "50")
    assert code == 2
    assert out.strip() == "out of fuel"


def test_scope_error_is_exit_3(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, "check |- y : Nat\n")
    assert code == 3
    assert "unbound name" in err


def test_validate_fixture(capsys, monkeypatch):
    fixture = sorted(FIXDIR.glob("*.deriv"))[0]
    code, out, _ = run(capsys, monkeypatch, f"validate {fixture}\n")
    assert code == 0
    assert out.strip() == "accept"


def test_batch_worst_exit_code_wins(capsys, monkeypatch):
    text = ("check |- zero : Nat\n"
            "check |- succ zero : Nat -> Nat\n"
            "check |- zero : Nat\n")
    code, out, _ = run(capsys, monkeypatch, text)
    assert code == 1
    assert out.strip().split("\n") == ["accept", *out.strip().split("\n")[1:2],
                                       "accept"]


def test_blank_lines_and_comments_skipped(capsys, monkeypatch):
    text = "\n-- a comment line\ncheck |- zero : Nat\n\n"
    code, out, _ = run(capsys, monkeypatch, text)
    assert code == 0
    assert out.strip() == "accept"


def test_debug_assert_preconditions_flags_bad_context(capsys, monkeypatch):
    with pytest.raises(AssertionError):
        run(capsys, monkeypatch, "infer (x : zero) |- x\n",
            "--debug-assert-preconditions")


def test_missing_input_file(capsys):
    code = main(["/no/such/queries.txt"])
    captured = capsys.readouterr()
    assert code == 3
    assert "cannot read input" in captured.err
