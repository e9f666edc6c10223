# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""test_cmdline.py - test the ocf-* command line tools"""

import json
from shlex import split as shlex_split

import pytest

from ocftools.cmdline.ocfaccepts import main as run_ocfaccepts
from ocftools.cmdline.ocfbeliefs import main as run_ocfbeliefs
from ocftools.cmdline.ocfcheck import main as run_ocfcheck
from ocftools.cmdline.ocforacle import main as run_ocforacle
from ocftools.cmdline.ocfpcpcheck import main as run_ocfpcpcheck
from ocftools.cmdline.ocfrevise import main as run_ocfrevise
from ocftools.ranking.ocffile import read_ocf
from tests.common import (
    PENGUIN_BOUNDS_TEXT,
    PENGUIN_CONDS_TEXT,
    PENGUIN_DESCRIPTOR_TEXT,
    make_contents2destdir,
    penguin_posterior,
    penguin_prior,
)

testdatapkg = "tests.cmdline.test_cmdline_data"

PENGUIN_FORMULA = "(b & f & !p) | (!b & f & !p) | (!b & !f & !p)"


@pytest.fixture
def datadir(tmpdir):
    """tmpdir holding a copy of every test data file"""
    make_contents2destdir(testdatapkg, tmpdir)()
    return tmpdir


def run_exiting(run, args):
    """run a tool that should exit with an error, return its exit status"""
    with pytest.raises(SystemExit) as excinfo:
        run(shlex_split(args))
    return excinfo.value.code


# === ocf-beliefs ===


@pytest.mark.parametrize("base", ["penguin.ocf", "penguin.ocf.toml"])
def test_beliefs(datadir, capsys, base):
    run_ocfbeliefs(shlex_split(f'"{datadir.join(base)}"'))
    assert capsys.readouterr().out == (
        "worlds: b f !p, !b f !p, !b !f !p\n" f"formula: {PENGUIN_FORMULA}\n"
    )


def test_beliefs_symbols_json(datadir, capsys):
    run_ocfbeliefs(shlex_split(f'--json --symbols "{datadir.join("penguin.ocf")}"'))
    data = json.loads(capsys.readouterr().out)
    assert data == {
        "worlds": ["b f !p", "!b f !p", "!b !f !p"],
        "formula": "(b∧f∧¬p) ∨ (¬b∧f∧¬p) ∨ (¬b∧¬f∧¬p)",
    }


def test_beliefs_uniform(datadir, capsys):
    run_ocfbeliefs(shlex_split(f'"{datadir.join("uniform_ab.ocf")}"'))
    assert capsys.readouterr().out.splitlines()[1] == "formula: top"


def test_beliefs_write(datadir, capsys):
    """ocf-beliefs penguin.ocf --write converted.ocf.toml"""
    outpath = datadir.join("converted.ocf.toml")
    run_ocfbeliefs(shlex_split(f'"{datadir.join("penguin.ocf")}" -w "{outpath}"'))
    capsys.readouterr()
    assert read_ocf(str(outpath)) == penguin_prior()


def test_beliefs_missing_row(datadir, capsys):
    code = run_exiting(run_ocfbeliefs, f'"{datadir.join("missing_row.ocf")}"')
    assert code == 3
    assert "!b f p" in capsys.readouterr().err


def test_beliefs_bad_extension(datadir):
    assert run_exiting(run_ocfbeliefs, f'"{datadir.join("run.toml")}"') == 2


# === ocf-accepts and ocf-check ===


@pytest.mark.parametrize(
    "cond, expected", [("(f|b)", "true"), ("(p|b)", "false"), ("(!p|top)", "true")]
)
def test_accepts(datadir, capsys, cond, expected):
    run_ocfaccepts(shlex_split(f'"{datadir.join("penguin.ocf")}" "{cond}"'))
    assert capsys.readouterr().out == f"{expected}\n"


def test_accepts_json(datadir, capsys):
    run_ocfaccepts(shlex_split(f'--json "{datadir.join("penguin.ocf")}" "(f|b)"'))
    assert json.loads(capsys.readouterr().out) == {"accepted": True}


def test_accepts_unknown_atom(datadir, capsys):
    code = run_exiting(run_ocfaccepts, f'"{datadir.join("penguin.ocf")}" "(q|b)"')
    assert code == 2
    assert "error: " in capsys.readouterr().err


@pytest.mark.parametrize(
    "base, descriptor, expected",
    [
        ("penguin_posterior.ocf", "B(!b) | B(p), !B(b & f)", "true"),
        ("penguin_posterior.ocf", PENGUIN_DESCRIPTOR_TEXT, "true"),
        ("penguin.ocf", PENGUIN_DESCRIPTOR_TEXT, "false"),
        ("penguin.ocf", "", "true"),
    ],
)
def test_check(datadir, capsys, base, descriptor, expected):
    run_ocfcheck(shlex_split(f'"{datadir.join(base)}" "{descriptor}"'))
    assert capsys.readouterr().out == f"{expected}\n"


def test_check_json(datadir, capsys):
    args = f'--json "{datadir.join("penguin.ocf")}" "{PENGUIN_DESCRIPTOR_TEXT}"'
    run_ocfcheck(shlex_split(args))
    assert json.loads(capsys.readouterr().out) == {"holds": False}


# === ocf-revise ===


def revise_args(datadir, extra=""):
    base = datadir.join("penguin.ocf")
    return (
        f'"{base}" "{PENGUIN_DESCRIPTOR_TEXT}" --bounds "{PENGUIN_BOUNDS_TEXT}" {extra}'
    )


def test_revise_all_solutions(datadir, capsys):
    run_ocfrevise(shlex_split(revise_args(datadir)))
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[:3] == [
        "status: ok",
        "solutions: 9",
        "[1] g1+=-2 g1-=0 g2+=-1 g2-=0 g3+=0 g3-=0 k0=1",
    ]
    assert lines[3:11] == [
        "  b f p = 0",
        "  b f !p = 1",
        "  b !f p = 0",
        "  b !f !p = 2",
        "  !b f p = 4",
        "  !b f !p = 1",
        "  !b !f p = 3",
        "  !b !f !p = 1",
    ]
    assert len(lines) == 2 + 9 * 9
    assert lines[-9] == "[9] g1+=0 g1-=2 g2+=-1 g2-=0 g3+=0 g3-=0 k0=0"
    assert "warning" not in captured.err


def test_revise_select(datadir, capsys):
    run_ocfrevise(shlex_split(revise_args(datadir, "--select min-sum")))
    lines = capsys.readouterr().out.splitlines()
    assert lines[:4] == [
        "status: ok",
        "solutions: 9",
        "select: min-sum",
        "[1] g1+=-2 g1-=0 g2+=-1 g2-=0 g3+=0 g3-=0 k0=1",
    ]
    assert len(lines) == 4 + 8


def test_revise_prefer_json(datadir, capsys):
    prefer = datadir.join("penguin_posterior.ocf")
    run_ocfrevise(shlex_split(revise_args(datadir, f'--json --prefer "{prefer}"')))
    data = json.loads(capsys.readouterr().out)
    assert (data["status"], data["count"], data["select"]) == ("ok", 9, "prefer")
    [solution] = data["solutions"]
    assert solution["gamma"] == {
        "g1+": 0,
        "g1-": 2,
        "g2+": -1,
        "g2-": 0,
        "g3+": 0,
        "g3-": 0,
    }
    assert solution["kappa0"] == 0
    assert solution["posterior"] == penguin_posterior().as_dict()


def test_revise_config(datadir, capsys):
    """bounds and selection policy come from run.toml"""
    base = datadir.join("penguin.ocf")
    config = datadir.join("run.toml")
    run_ocfrevise(shlex_split(f'-c "{config}" "{base}" "{PENGUIN_DESCRIPTOR_TEXT}"'))
    captured = capsys.readouterr()
    assert captured.out.splitlines()[2:4] == [
        "select: min-sum",
        "[1] g1+=-2 g1-=0 g2+=-1 g2-=0 g3+=0 g3-=0 k0=1",
    ]
    assert "warning" not in captured.err

    # a flag overrides the config file
    args = f'-c "{config}" -s lex --dedup "{base}" "{PENGUIN_DESCRIPTOR_TEXT}"'
    run_ocfrevise(shlex_split(args))
    assert capsys.readouterr().out.splitlines()[2] == "select: lex"


def test_revise_verbose_and_default_bounds(datadir, capsys):
    base = datadir.join("penguin.ocf")
    bounds = "g1+=-2..0,g1-=0..2,g2+=-1..1,g2-=-1..1"
    args = f'-v -s lex "{base}" "{PENGUIN_DESCRIPTOR_TEXT}" -b "{bounds}"'
    run_ocfrevise(shlex_split(args))
    captured = capsys.readouterr()
    assert captured.out.startswith("status: ok\n")
    assert "solving g1+=-2 (1/3)" in captured.err
    assert "bounds: g1+=-2..0,g1-=0..2,g2+=-1..1,g2-=-1..1,g3+=-7..7,g3-=-7..7" in (
        captured.err
    )
    assert "using heuristic default bounds -7..7 for g3+, g3-" in captured.err


def test_revise_no_solution(datadir, capsys):
    base = datadir.join("uniform_ab.ocf")
    args = f'"{base}" "B(a), !B(a)" -b "g1+=-1..1,g1-=-1..1"'
    assert run_exiting(run_ocfrevise, args) == 1
    assert capsys.readouterr().out == (
        "status: no admissible successor\nsolutions: 0\n"
    )


@pytest.mark.parametrize(
    "descriptor, extra, code",
    [
        ("B(a) | B(b)", "", 4),
        ("B(a", "", 2),
        ("B(c)", "", 2),
        ("B(a)", '-b "g1+=0..1,g2+=0..1"', 2),
        ("B(a)", '-b "g1+=0..1" -s max', 2),
        ("B(a)", "--workers 0", 2),
    ],
)
def test_revise_errors(datadir, capsys, descriptor, extra, code):
    base = datadir.join("uniform_ab.ocf")
    assert run_exiting(run_ocfrevise, f'"{base}" "{descriptor}" {extra}') == code
    assert "error: " in capsys.readouterr().err


def test_revise_budget(datadir, capsys):
    assert run_exiting(run_ocfrevise, revise_args(datadir, "--max-leaves 1")) == 5
    assert "exceeded the budget of 1" in capsys.readouterr().err


def test_revise_prefer_other_signature(datadir, capsys):
    prefer = datadir.join("uniform_ab.ocf")
    assert run_exiting(run_ocfrevise, revise_args(datadir, f'--prefer "{prefer}"')) == 3


# === ocf-pcpcheck ===


def pcpcheck_args(datadir, posterior, extra=""):
    prior = datadir.join("penguin.ocf")
    return (
        f'"{prior}" "{datadir.join(posterior)}" --conds "{PENGUIN_CONDS_TEXT}" {extra}'
    )


def test_pcpcheck_representable(datadir, capsys):
    args = pcpcheck_args(datadir, "penguin_posterior.ocf", "-d 2")
    run_ocfpcpcheck(shlex_split(args))
    assert capsys.readouterr().out.splitlines() == [
        "representable: true",
        "witness: k0=0, g1+=0, g1-=2, g2+=-1, g2-=0, g3+=0, g3-=0 (free: g3+, g3-)",
        "integer witness: k0=0 g=(0, 2, -1, 0, 0, 0)",
        "balanced: true",
    ]


def test_pcpcheck_json(datadir, capsys):
    args = pcpcheck_args(datadir, "penguin_posterior.ocf", "--json")
    run_ocfpcpcheck(shlex_split(args))
    data = json.loads(capsys.readouterr().out)
    assert data["representable"] is True
    assert data["witness"]["g1-"] == "2"
    assert data["free"] == ["g3+", "g3-"]
    assert data["integer_witness"]["kappa0"] == 0
    assert "balanced" not in data


def test_pcpcheck_tampered(datadir, capsys):
    """every output line says why the change isn't conditionally preserving"""
    args = pcpcheck_args(datadir, "penguin_tampered.ocf", "-d 1")
    run_ocfpcpcheck(shlex_split(args))
    assert capsys.readouterr().out.splitlines() == [
        "representable: false",
        "reason: profile class fnn is shifted unevenly (b f !p: +2, b !f !p: +3)",
        "balanced: false",
        "imbalance: {b f !p} vs {b !f !p}: prior difference -1, "
        "posterior difference -2",
    ]


def test_pcpcheck_errors(datadir, capsys):
    args = pcpcheck_args(datadir, "penguin_posterior.ocf", "-d 2 --max-pairs 10")
    assert run_exiting(run_ocfpcpcheck, args) == 5
    args = pcpcheck_args(datadir, "uniform_ab.ocf")
    assert run_exiting(run_ocfpcpcheck, args) == 3
    capsys.readouterr()


# === ocf-oracle ===


def test_oracle(datadir, capsys):
    base = datadir.join("uniform_ab.ocf")
    args = f'-v "{base}" "B(b|a)" -b "g1+=-2..2,g1-=-2..2"'
    run_ocforacle(shlex_split(args))
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[:6] == [
        "examined: 65",
        "satisfying: 23",
        "representable: 7",
        "integer witnesses: 7",
        "rational-only: 0",
        "violations: 0",
    ]
    assert lines[-4:] == ["solutions: 10", "unsound: 0", "mismatches: 0", "ok: true"]
    assert captured.err.splitlines()[0] == "enumerating 65 OCFs"


def test_oracle_json(datadir, capsys):
    base = datadir.join("uniform_ab.ocf")
    run_ocforacle(shlex_split(f'--json -r 1 "{base}" "B(b|a)"'))
    data = json.loads(capsys.readouterr().out)
    assert data["examined"] == 15
    assert data["ok"] is True
    assert "solutions" not in data


def test_oracle_errors(datadir, capsys):
    base = datadir.join("uniform_ab.ocf")
    assert run_exiting(run_ocforacle, f'--budget 10 "{base}" "B(b|a)"') == 5
    assert run_exiting(run_ocforacle, f'-r -1 "{base}" "B(b|a)"') == 2
    assert run_exiting(run_ocforacle, f'"{base}" "B(a) | B(b)"') == 4
    capsys.readouterr()
