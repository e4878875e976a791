import json

import pytest

from cwcodes import canonical_code, format_code, parse_code, parse_cycles, permute_code
from cwcodes.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "-k", "2", "-m", "2", "-n", "6")
    assert code == 0 and out == "6 2\n110011\n001111\n"
    assert parse_code(out) == parse_code("6 2\n111100\n110011\n")
    code, out, _ = run(capsys, "construct", "-k", "3", "-m", "1", "-n", "7")
    assert code == 0 and parse_code(out) == canonical_code(3, 1, 7)
    code, _, err = run(capsys, "construct", "-k", "3", "-m", "1", "-n", "6")
    assert code == 2 and "length 6 below (2^k-1)m=7" in err
    dest = tmp_path / "c.txt"
    code, out, _ = run(capsys, "construct", "-k", "2", "-m", "1", "-n", "4", "-o", str(dest))
    assert code == 0 and out == "" and dest.read_text() == "4 2\n1010\n0110\n"
    code, out, _ = run(capsys, "construct", "-k", "2", "-m", "1", "-n", "3", "--json")
    assert json.loads(out) == {"n": 3, "k": 2, "rows": ["101", "011"]}


@pytest.mark.parametrize("k, m, pad", [(2, 1, 0), (2, 3, 1), (3, 1, 2), (3, 2, 0), (4, 1, 1)])
def test_construct_verify_round_trip(capsys, write, k, m, pad):
    n = ((1 << k) - 1) * m + pad
    _, out, _ = run(capsys, "construct", "-k", str(k), "-m", str(m), "-n", str(n))
    code, _, _ = run(capsys, "verify", write("c.txt", out))
    assert code == 0


def test_verify(capsys, write):
    code, out, _ = run(capsys, "verify", write("d.txt", "6 2\n111100\n001111\n"))
    assert code == 0 and out.startswith("constant weight, w=4, m=2")
    assert "I={1,2} -> {3,4}" in out
    code, out, _ = run(capsys, "verify", write("bad.txt", "4 2\n1110\n0111\n"))
    assert code == 1 and "not a multiple" in out
    code, _, err = run(capsys, "verify", write("short.txt", "4 2\n1110\n011\n"))
    assert code == 2 and "expected 4 symbols" in err
    code, out, _ = run(capsys, "verify", write("d.txt", "6 2\n111100\n001111\n"), "--json")
    data = json.loads(out)
    assert data["constant_weight"] and data["w"] == 4 and data["m"] == 2


def test_verify_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", str(tmp_path / "nope.txt"))
    assert code == 2


def test_partition(capsys, write):
    code, out, _ = run(capsys, "partition", write("d.txt", "6 2\n111100\n001111\n"))
    assert code == 0 and out == "I={1} -> {1,2}\nI={2} -> {5,6}\nI={1,2} -> {3,4}\n"
    code, out, _ = run(capsys, "partition", write("d.txt", "6 2\n111100\n001111\n"), "--json")
    assert json.loads(out)["cells"][0] == {"I": [1], "coords": [1, 2]}


def test_equiv(capsys, write):
    d = write("d.txt", "6 2\n111100\n001111\n")
    code, out, _ = run(capsys, "equiv", d, d)
    assert code == 0 and out == "()\n"
    a = write("a.txt", "4 2\n1100\n1010\n")
    b = write("b.txt", "4 2\n0110\n0101\n")
    code, out, _ = run(capsys, "equiv", a, b)
    assert code == 0 and out == "(1 2 3 4)\n"
    sigma = parse_cycles(out, 4)
    ca, cb = parse_code(open(a).read()), parse_code(open(b).read())
    assert format_code(permute_code(sigma, ca)) == format_code(cb)
    c1 = canonical_code(3, 1, 7)
    c2 = permute_code(parse_cycles("(1 5 7)(2 6)", 7), c1)
    code, out, _ = run(capsys, "equiv", write("s1.txt", format_code(c1)), write("s2.txt", format_code(c2)), "--json")
    assert code == 0 and permute_code(parse_cycles(json.loads(out)["permutation"], 7), c1) == c2


def test_equiv_mismatch(capsys, write):
    d = write("d.txt", "6 2\n111100\n001111\n")
    e = write("e.txt", "6 2\n110000\n101000\n")
    assert run(capsys, "equiv", d, e)[0] == 1
    assert run(capsys, "equiv", d, write("x.txt", "6 2\n111000\n000111\n"))[0] == 1
    assert run(capsys, "equiv", d, write("y.txt", "6 2\n11100\n000111\n"))[0] == 2


def test_paut(capsys, write):
    d = write("d.txt", "6 2\n111100\n001111\n")
    code, out, _ = run(capsys, "paut", d, "--brute-force")
    assert code == 0 and "order (formula): 48" in out and "order (brute-force): 48" in out
    code, out, _ = run(capsys, "paut", d, "--json", "--generators")
    data = json.loads(out)
    assert data["order"] == "48" and data["method"] == "formula" and data["generators"]
    code, out, _ = run(capsys, "paut", write("w2.txt", "4 2\n1100\n1010\n"), "--brute-force", "--json")
    data = json.loads(out)
    assert data["order"] == "6" and data["transitive"] is False and data["orbits"] == [[1, 2, 3], [4]]
    code, out, _ = run(capsys, "paut", write("s.txt", format_code(canonical_code(3, 1, 7))), "--brute-force")
    assert code == 0 and "168" in out


def test_paut_errors(capsys, write):
    big = write("big.txt", format_code(canonical_code(2, 1, 9)))
    assert run(capsys, "paut", big, "--brute-force")[0] == 2
    assert run(capsys, "paut", big)[0] == 0
    assert run(capsys, "paut", write("x.txt", "6 2\n111000\n000111\n"))[0] == 1


@pytest.mark.parametrize("k, m, n, expected", [(2, 2, 6, "15"), (2, 1, 4, "4"), (3, 1, 7, "30")])
def test_count(capsys, k, m, n, expected):
    code, out, _ = run(capsys, "count", "-k", str(k), "-m", str(m), "-n", str(n))
    assert code == 0 and out.strip() == expected
    code, out, _ = run(capsys, "count", "-k", str(k), "-m", str(m), "-n", str(n), "--exhaustive", "--json")
    assert code == 0 and json.loads(out)["count"] == expected


def test_count_inadmissible(capsys):
    assert run(capsys, "count", "-k", "3", "-m", "1", "-n", "5")[0] == 2


def test_feasible(capsys, write):
    code, out, _ = run(capsys, "feasible", write("a.txt", "4 2\n1100\n1010\n"))
    assert code == 1 and out.startswith("impossible")
    code, out, _ = run(capsys, "feasible", write("b.txt", "7 2\n1111000\n0011110\n"))
    assert code == 1
    code, out, _ = run(capsys, "feasible", write("c.txt", "3 2\n110\n101\n"), "--json")
    assert code == 0 and json.loads(out) == {"possible": True, "orbits": [[1, 2, 3]]}


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "construct", "-k", "x", "-m", "1", "-n", "3")[0] == 2
