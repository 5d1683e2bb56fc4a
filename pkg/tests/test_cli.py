import io
import json

from ndglie.cli import EX_USAGE, run


def _run(*args):
    out = io.StringIO()
    code = run(list(args), out=out)
    return code, out.getvalue()


def test_cohomology_suite():
    code, text = _run("verify", "--suite", "cohomology")
    assert code == 0
    assert "0 fail" in text


def test_json_output_is_deterministic():
    a = _run("verify", "--suite", "stabilizers", "--format", "json")
    b = _run("verify", "--suite", "stabilizers", "--format", "json", "--seed", "0")
    assert a == b
    assert all(e["status"] == "pass" for e in json.loads(a[1]))


def test_catalog_commands():
    code, text = _run("catalog", "show", "l0")
    assert code == 0 and "[p1a, p1b]" in text
    code, text = _run("catalog", "list")
    assert code == 0 and "quotient so5_u2" in text


def test_usage_errors():
    assert _run("verify", "--suite", "nope")[0] == EX_USAGE
    assert _run("frobnicate")[0] == EX_USAGE
    assert _run("catalog", "show")[0] == EX_USAGE
    assert _run("verify", "--jobs", "0")[0] == EX_USAGE


def test_dump_system():
    code, text = _run("verify", "--suite", "cohomology", "--dump-system")
    assert code == 0
    assert "# jacobi l0 params" in text and "# witness l0 0" in text
