import io
import json
import subprocess
import sys

import pytest

from infinitesimal.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_mult_json():
    code, out, _ = call("mult", "--c1", "y", "--c2", "y*z - x^2", "--point", "[0:0:1]", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["points"][0]["mult_nonstandard"] == 2 and d["points"][0]["mult_oracle"] == 2
    assert d["verdict"] is True


def test_bezout_needs_extension():
    code, _, err = call("bezout", "--c1", "x^2+y^2-z^2", "--c2", "x^2+y^2-2*z^2")
    assert code == 3
    assert "t^2 + 1" in err


def test_bezout_over_gaussian_field():
    code, out, _ = call("bezout", "--c1", "x^2+y^2-z^2", "--c2", "x^2+y^2-2*z^2", "--field", "t^2+1", "--json")
    assert code == 0
    d = json.loads(out)
    assert [p["mult_nonstandard"] for p in d["points"]] == [2, 2] and d["sum"] == 4


def test_duality_selftest():
    code, out, _ = call("duality-selftest", "--samples", "200", "--seed", "7", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_expand():
    code, out, _ = call("expand", "--poly", "x^2 + eps", "--json")
    assert code == 3
    code, out, _ = call("expand", "--poly", "x^2 + eps", "--field", "t^2+1", "--json")
    assert code == 0 and json.loads(out)["count"] == 2
    code, out, _ = call("expand", "--poly", "x^2 - (1 + eps)*x + eps", "--positive-only", "--json")
    assert json.loads(out)["branches"] == [{"series": "eps", "field": "QQ", "conjugates": 1}]


def test_specialize():
    code, out, _ = call("specialize", "--point", "[eps : eps]", "--json")
    assert code == 0 and json.loads(out)["specialization"] == "[1:1]"


def test_text_output_matches_json():
    _, text, _ = call("specialize", "--point", "[eps : 1]")
    assert "specialization: [0:1]" in text


@pytest.mark.parametrize(
    "argv,code",
    [
        (("mult", "--c1", "x*y", "--c2", "x*z", "--point", "[0:0:1]"), 2),
        (("mult", "--c1", "x", "--c2", "y", "--point", "[0:0:1]", "--truncation", "64", "--cap", "32"), 6),
        (("mult", "--c1", "x", "--c2", "y+", "--point", "[0:0:1]"), 6),
        (("mult", "--c1", "x", "--c2", "y^2 + x", "--point", "[0:0:1]"), 6),
        (("mult", "--c1", "x", "--c2", "y", "--point", "[1:0:1]"), 6),
        (("mult", "--c1", "x", "--c2", "y", "--point", "[0:0:1]", "--field", "t^2-1"), 6),
        (("nonsense",), 6),
        (("mult", "--c1", "x"), 6),
        (("mult", "--c1", "x", "--c2", "y", "--point", "[0:0:1]", "--seeds", "a,b"), 6),
        (("expand", "--poly", "(x - eps)^2"), 6),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_json_is_byte_identical():
    argv = ("bezout", "--c1", "y*z - x^2", "--c2", "y^2*z - x^3", "--json")
    assert call(*argv)[1] == call(*argv)[1]


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "infinitesimal", "specialize", "--point", "[1 : eps]", "--json"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0 and json.loads(p.stdout)["specialization"] == "[1:0]"
