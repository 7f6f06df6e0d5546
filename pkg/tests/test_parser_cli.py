import json
import random
from fractions import Fraction

import pytest

from weakid.cli import Report, build_parser, main
from weakid.freealg import NcPoly, commutator, jordan
from weakid.parser import (
    ParseError,
    format_expr,
    parse_expr,
    parse_poly,
    var_index,
    var_name,
)

x = NcPoly.gen


class TestVarMapping:
    def test_interleaved_indices(self):
        assert var_index("x", 1) == 1
        assert var_index("y", 1) == 2
        assert var_index("x", 3) == 5
        assert var_index("y", 3) == 6

    def test_round_trip(self):
        for i in range(1, 20):
            kind = "x" if i % 2 else "y"
            num = (i + 1) // 2
            assert var_name(i) == f"{kind}{num}"

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            var_index("x", 0)


class TestParser:
    def test_variables(self):
        assert parse_poly("x1") == x(1)
        assert parse_poly("y2") == x(4)

    def test_arithmetic(self):
        assert parse_poly("x1*x2 - x2*x1") == x(1) * x(3) - x(3) * x(1)
        assert parse_poly("2*x1 + 3/2*y1") == 2 * x(1) + Fraction(3, 2) * x(2)
        assert parse_poly("-x1") == -x(1)

    def test_power(self):
        assert parse_poly("x1^3") == x(1) ** 3
        assert parse_poly("(x1+x2)^2") == (x(1) + x(3)) ** 2

    def test_commutator_and_jordan(self):
        assert parse_poly("[x1,x2]") == commutator(x(1), x(3))
        assert parse_poly("jord(x1,x2)") == jordan(x(1), x(3))
        assert parse_poly("[x1^2,x2]") == commutator(x(1) ** 2, x(3))

    def test_standard(self):
        s2 = parse_poly("S(2)")
        assert s2 == x(1) * x(3) - x(3) * x(1)

    def test_whitespace_insensitive(self):
        assert parse_poly(" [ x1 ^ 2 , x2 ] ") == parse_poly("[x1^2,x2]")

    def test_precedence(self):
        assert parse_poly("x1 + x2*x3") == x(1) + x(3) * x(5)
        assert parse_poly("(x1 + x2)*x3") == (x(1) + x(3)) * x(5)

    def test_nested(self):
        f = parse_poly("[[x1,x2],x3] - 1/3*jord(x1,[x2,x3])")
        want = commutator(commutator(x(1), x(3)), x(5)) - Fraction(1, 3) * jordan(
            x(1), commutator(x(3), x(5))
        )
        assert f == want


class TestParseErrors:
    @pytest.mark.parametrize(
        "text,pos",
        [
            ("x1*(", 4),
            ("x1 +", 4),
            ("[x1,x2", 6),
            ("x1 x2", 3),
            ("1/0", 2),
            ("x1^0", 3),
            ("S(0)", 2),
            ("x", 1),
            ("", 0),
        ],
    )
    def test_position(self, text, pos):
        with pytest.raises(ParseError) as ei:
            parse_expr(text)
        assert ei.value.pos == pos
        assert f"position {pos}" in str(ei.value)

    def test_is_value_error(self):
        with pytest.raises(ValueError):
            parse_poly("@@")


def random_expr(rng, depth=0):
    choice = rng.random()
    if depth > 3 or choice < 0.35:
        kind = rng.choice(["x", "y"])
        return f"{kind}{rng.randint(1, 4)}"
    if choice < 0.45:
        return f"{rng.randint(1, 9)}/{rng.randint(1, 9)}"
    if choice < 0.6:
        return f"({random_expr(rng, depth + 1)} + {random_expr(rng, depth + 1)})"
    if choice < 0.72:
        return f"({random_expr(rng, depth + 1)} - {random_expr(rng, depth + 1)})"
    if choice < 0.84:
        return f"{random_expr(rng, depth + 1)}*{random_expr(rng, depth + 1)}"
    if choice < 0.92:
        return f"[{random_expr(rng, depth + 1)},{random_expr(rng, depth + 1)}]"
    return f"jord({random_expr(rng, depth + 1)},{random_expr(rng, depth + 1)})"


class TestFormatExpr:
    def test_examples(self):
        assert format_expr(x(1) * x(3) - x(3) * x(1)) == "x1*x2 - x2*x1"
        assert format_expr(NcPoly.zero()) == "0"
        assert format_expr(NcPoly.one()) == "1"
        assert format_expr(-2 * x(1) ** 2) == "-2*x1^2"

    def test_round_trip_random(self):
        rng = random.Random(101)
        for _ in range(200):
            f = parse_poly(random_expr(rng))
            assert parse_poly(format_expr(f)) == f

    def test_format_idempotent(self):
        rng = random.Random(202)
        for _ in range(50):
            f = parse_poly(random_expr(rng))
            s = format_expr(f)
            assert format_expr(parse_poly(s)) == s


class TestCli:
    def test_check_holds(self, capsys):
        assert main(["check", "--pair", "clifford:3", "[x1^2,x2]"]) == 0
        assert "holds" in capsys.readouterr().out

    def test_check_fails_with_witness(self, capsys):
        code = main(["check", "--pair", "clifford:2", "x1*x2 - x2*x1"])
        out = capsys.readouterr().out
        assert code == 1
        assert "x1 -> e1" in out and "x2 -> e2" in out
        assert "2*e{1,2}" in out

    def test_parse_error_exit_2(self, capsys):
        assert main(["check", "--pair", "clifford:2", "x1*("]) == 2
        assert "position" in capsys.readouterr().err

    def test_bad_pair_exit_2(self, capsys):
        assert main(["check", "--pair", "clifford:0", "x1"]) == 2
        assert main(["check", "--pair", "m3", "x1"]) == 2
        capsys.readouterr()

    def test_dim_json(self, capsys):
        assert main(["--json", "dim", "--n", "3", "--pair", "clifford:3"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["outcome"]["quotient_dim"] == 4
        assert data["outcome"]["kernel_dim"] == 2

    def test_span(self, capsys):
        assert main(["span", "--n", "4", "--gens", "[x1^2,x2]"]) == 0
        assert "rank          14" in capsys.readouterr().out

    def test_theorem1(self, capsys):
        assert main(["theorem1", "--n", "3"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_corollary1(self, capsys):
        assert main(["corollary1", "--n", "3", "--k", "2"]) == 0
        capsys.readouterr()

    def test_lemma2(self, capsys):
        assert main(["lemma2", "--n", "3", "--k", "1"]) == 0
        out = capsys.readouterr().out
        assert "-2/3" in out and "1/3" in out

    def test_lemma1(self, capsys):
        assert main(["lemma1", "--n", "2"]) == 0
        out = capsys.readouterr().out
        assert "[x1,x2]" in out and "y1" in out

    def test_factor(self, capsys):
        assert main(["factor", "--n", "2", "--ys", "y1"]) == 0
        out = capsys.readouterr().out
        assert "two-sided" in out and "verified" in out

    def test_standard(self, capsys):
        assert main(["standard", "--n", "2"]) == 0
        assert capsys.readouterr().out.strip() == "x1*x2 - x2*x1"

    def test_diagrams(self, capsys):
        assert main(["diagrams", "min", "2,1;2,2;3,1"]) == 0
        assert "2,1" in capsys.readouterr().out

    def test_seeds_flag(self, capsys):
        assert main(["--seeds", "none", "dim", "--n", "3", "--pair", "clifford:3"]) == 0
        assert main(
            ["--seeds", "2,3,5;7,11,13", "dim", "--n", "3", "--pair", "clifford:3"]
        ) == 0
        capsys.readouterr()

    def test_max_degree_env(self, capsys, monkeypatch):
        monkeypatch.setenv("WID_MAX_DEGREE", "3")
        args = build_parser().parse_args(["check", "--pair", "m2", "x1"])
        assert args.max_degree == 3
        capsys.readouterr()


class TestReport:
    def test_json_round_trip(self, capsys):
        main(["--json", "lemma2", "--n", "2", "--k", "1"])
        text = capsys.readouterr().out
        rep = Report.from_json(text)
        assert rep.command == "lemma2"
        assert rep.outcome["alpha"] == "-1/2"
        assert Report.from_json(rep.to_json()) == rep

    def test_round_trip_is_lossless(self):
        rep = Report(
            command="check",
            inputs={"pair": "m2", "expr": "x1"},
            outcome={"holds": False},
            seconds=0.125,
            seeds=[[2, 3]],
        )
        assert Report.from_json(rep.to_json()) == rep
