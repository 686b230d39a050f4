import json

import pytest

from toricpeaks.cli import main
from toricpeaks.dag import Dag

D3_JSON = Dag.make(
    [1, 2, 3, 4], [(2, 1), (2, 4), (2, 3), (4, 1), (4, 3)]
).to_json()


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_stats_output(capsys):
    code, out = run(capsys, "stats", "3124")
    assert code == 0
    data = json.loads(out)
    assert data["des"] == [1]
    assert data["cdes"] == [1, 4]
    assert data["peak"] == []
    assert data["cpeak"] == [4]


def test_stats_comma_words(capsys):
    code, out = run(capsys, "stats", "10,2,3")
    assert code == 0
    assert json.loads(out)["word"] == [10, 2, 3]


def test_stats_parse_error():
    with pytest.raises(SystemExit):
        main(["stats", "1a2"])


def test_expand_fcyc_monomial_basis(capsys):
    code, out = run(capsys, "expand", "Fcyc", "4", "1,3", "--basis", "M")
    assert code == 0
    terms = {tuple(t["set"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert terms == {(2,): 2, (1, 2): 2, (1, 3): 2, (2, 3): 2, (1, 2, 3): 4}


def test_expand_single_monomial(capsys):
    code, out = run(capsys, "expand", "M", "4", "1,3")
    assert json.loads(out)["terms"] == [{"coeff": 1, "set": [1, 3]}]


def test_expand_delta_cyc_from_dag(capsys):
    code, out = run(capsys, "expand", "delta-cyc", "--dag", D3_JSON)
    assert code == 0
    terms = {tuple(t["set"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert terms == {
        (1,): 4,
        (1, 2): 20,
        (1, 3): 16,
        (1, 2, 3): 64,
        (1, 2, 3, 4): 32,
    }


def test_expand_rejects_invalid_peak_set():
    with pytest.raises(SystemExit):
        main(["expand", "Kcyc", "4", "1,2"])


def test_extensions_linear_and_toric(capsys):
    _, out = run(capsys, "extensions", "linear", "--dag", D3_JSON)
    assert json.loads(out)["extensions"] == [[2, 4, 1, 3], [2, 4, 3, 1]]
    _, out = run(capsys, "extensions", "toric", "--dag", D3_JSON)
    assert json.loads(out)["extensions"] == [[1, 2, 4, 3], [1, 3, 2, 4]]


def test_enumerate_enriched_ndjson(capsys):
    code, out = run(capsys, "enumerate", "enriched", "--word", "12", "--m", "1", "--ndjson")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 2
    assert all(set(row["f"]) == {"1", "2"} for row in lines)


def test_enumerate_markings(capsys):
    _, out = run(capsys, "enumerate", "markings", "--word", "1324", "--m", "2")
    data = json.loads(out)
    assert data["count"] == len(data["markings"]) > 0


def test_order_poly_tsv(capsys):
    _, out = run(capsys, "order-poly", "1", "--m", "3")
    lines = out.strip().splitlines()
    assert lines[0] == "m\tomega\tomega_cyc"
    assert lines[2] == "1\t2\t2"


def test_series_json(capsys):
    _, out = run(capsys, "series", "1", "--order", "4")
    assert json.loads(out)["omega"] == [0, 2, 4, 6, 8]


def test_table_matches_expand(capsys):
    _, out = run(capsys, "table")
    rows = json.loads(out)["rows"]
    assert len(rows) == 5
    assert rows[0]["composition"] == [4]


def test_verify_exit_codes(capsys):
    assert main(["verify", "table1"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 5 and out.strip().endswith("OK")
    with pytest.raises(SystemExit):
        main(["verify", "no-such-suite"])


def test_deterministic_output(capsys):
    _, first = run(capsys, "expand", "Kcyc", "5", "1,3")
    _, second = run(capsys, "expand", "Kcyc", "5", "1,3")
    assert first == second
