# tests/test_cli.py
import io
import json

from folpol.cli import EXIT_MATH, EXIT_OK, EXIT_USAGE, main


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_gsv_report():
    code, text = run("gsv", "x dy - y dx", "--curve", "x")
    assert code == EXIT_OK
    report = json.loads(text)
    assert report["schema"] == "folpol/1"
    assert report["status"] == "ok"
    assert report["command"] == "gsv"
    assert report["data"]["gsv"] == 1
    assert report["meta"]["field"] == "QQ"


def test_form_from_stdin():
    code, text = run("second-type", "-", stdin="-y^2 dx + (x^2 + x*y) dy")
    assert code == EXIT_OK
    data = json.loads(text)["data"]
    assert data["second_type"] is False
    assert data["tau"] == 1


def test_form_from_file(tmp_path):
    path = tmp_path / "form.txt"
    path.write_text("x dy - 2y dx\n", encoding="utf-8")
    code, text = run("reduce", f"@{path}")
    assert code == EXIT_OK
    assert json.loads(text)["data"]["invariants"]["length"] == 2


def test_example_supplies_form():
    code, text = run("invariants", "--example", "cusp")
    assert code == EXIT_OK
    data = json.loads(text)["data"]
    assert data["milnor"] == 2
    assert data["multiplicity_identity"]["holds"]


def test_text_output():
    code, text = run("linsneto", "--alpha", "2", "--lines", "1", "2", "--text")
    assert code == EXIT_OK
    assert "status: ok" in text
    assert "d0: 9" in text


def test_parse_error_exit_code():
    code, text = run("gsv", "x dy + + y", "--curve", "x")
    assert code == EXIT_USAGE
    report = json.loads(text)
    assert report["status"] == "error"
    assert report["error"]["code"] == "PARSE_ERROR"
    assert report["error"]["details"]["column"] == 8


def test_mathematical_error_exit_code():
    code, text = run("linsneto", "--alpha", "j")
    assert code == EXIT_MATH
    assert json.loads(text)["error"]["code"] == "EXCLUDED_PARAMETER"


def test_usage_errors():
    assert run()[0] == EXIT_USAGE
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("gsv", "x dy - y dx")[0] == EXIT_USAGE
    assert run("reduce", "x dy - y dx", "--trunc", "2")[0] == EXIT_USAGE
    code, text = run("reduce", "--example", "no-such-germ")
    assert code == EXIT_USAGE
    assert "known" in json.loads(text)["error"]["details"]
