import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reciprocity.cli import main
from reciprocity.eisenstein import EisensteinInt as E
from reciprocity.gaussian import GaussianInt as G
from reciprocity.literals import LiteralError, parse_eisenstein, parse_gaussian


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_eis_split_json(capsys):
    code, out, _ = run(capsys, "eis", "split", "7", "--json")
    assert code == 0
    assert json.loads(out) == {"p": 7, "class": "split", "pi": "2+3*w", "conj": "-1-3*w"}


def test_legendre_zero(capsys):
    code, data = run_json(capsys, "legendre", "0", "7")
    assert code == 0 and data["value"] == 0


def test_cubic_verify(capsys):
    code, data = run_json(capsys, "cubic-verify", "--max-norm", "100")
    assert code == 0 and data["failures"] == [] and data["cases_checked"] > 0


def test_biquad_verify_forms(capsys):
    code, data = run_json(capsys, "biquad-verify", "--max-norm", "100")
    assert code == 1 and data["failures"]
    code, data = run_json(capsys, "biquad-verify", "--max-norm", "100", "--form", "quotient")
    assert code == 0 and data["failures"] == []


def test_jobs_do_not_change_report(capsys):
    _, one = run_json(capsys, "cubic-verify", "--max-norm", "400", "--seed", "9")
    _, two = run_json(capsys, "cubic-verify", "--max-norm", "400", "--seed", "9", "--jobs", "2")
    one.pop("elapsed_ms"), two.pop("elapsed_ms")
    assert one == two


def test_negative_literals_are_arguments(capsys):
    code, data = run_json(capsys, "eis", "primary", "-1-3*w")
    assert code == 0 and data["primary"] == "-1-3*w"
    code, data = run_json(capsys, "biquad-char", "-1+2*i", "2")
    assert code == 0 and data["value"] == "-i"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "eis", "norm", "2+3w")
    assert code == 2 and "position 3" in err
    assert run(capsys, "legendre", "1", "9")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "identity-check", "jacobi-relation", "5", "2")[0] == 2


def test_resource_guard(capsys):
    assert run(capsys, "hausner", "7", "3")[0] == 0
    assert run(capsys, "gauss-sum", "1009", "2")[0] == 3


@pytest.mark.parametrize("argv", [
    ("qr-check", "3", "7"), ("mobius", "30"), ("count-irreducibles", "2", "3"),
    ("field-census", "2", "3"), ("hausner", "3", "5"), ("eis", "norm", "2+3*w"),
    ("cubic-char", "2+3*w", "2"), ("supplement", "omega", "2+3*w"),
    ("supplement", "one-minus-omega", "5"), ("two-cubic", "31"),
    ("gauss-sum", "7", "3", "--a", "2"), ("jacobi-sum", "13", "4", "4"),
    ("identity-check", "magnitude", "13", "4"), ("identity-check", "gauss-cube", "31"),
    ("identity-check", "power-formula", "7", "6"), ("qr-verify", "--bound", "100"),
    ("gauss-verify", "--bound", "20"), ("field-verify", "--bound", "30"),
    ("hausner-verify", "--bound", "1000"),
])
def test_commands_succeed(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out
    code, data = run_json(capsys, *argv)
    assert code == 0 and isinstance(data, dict)


def test_csv_output(capsys, tmp_path):
    path = tmp_path / "r.csv"
    assert run(capsys, "qr-verify", "--bound", "50", "--csv", str(path))[0] == 0
    assert path.read_text().splitlines()[0].startswith("law,bound")


def test_big_ints_are_strings(capsys):
    _, data = run_json(capsys, "eis", "norm", f"{10**12}+{10**12}*w")
    assert data["norm"] == str(10**24)


coord = st.integers(-10**20, 10**20)


@given(coord, coord)
def test_literal_roundtrip(a, b):
    assert parse_eisenstein(str(E(a, b))) == E(a, b)
    assert parse_gaussian(str(G(a, b))) == G(a, b)


@pytest.mark.parametrize("text,pos", [("2+3w", 3), ("2++w", 2), ("2+3*i", 4), ("", 0), ("7x", 1), ("2*", 2)])
def test_literal_errors(text, pos):
    with pytest.raises(LiteralError) as e:
        parse_eisenstein(text)
    assert e.value.position == pos
