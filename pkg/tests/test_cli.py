"""CLI tests: JSON schema, determinism, round-trips, CSV, exit codes."""

import json

import pytest

from twocubes.cli import main


def run_json(capsys, *argv) -> dict:
    code = main(list(argv))
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["status"] in ("ok", "failed", "exhausted")
    assert (code == 0) == (doc["status"] == "ok")
    return doc


def test_taxicab_cli(capsys):
    doc = run_json(capsys, "identities", "taxicab", "--bound", "2000", "--reps", "2")
    assert doc["status"] == "ok"
    entries = doc["results"]["entries"]
    assert entries == [{"n": "1729", "representations": [["1", "12"], ["9", "10"]]}]


def test_identities_verify_cli(capsys):
    doc = run_json(capsys, "identities", "verify")
    assert doc["results"]["all_verified"]
    assert doc["results"]["identity_1913"]["zero_polynomial"]
    assert doc["results"]["entry_20_iii"]["zero_polynomial"]
    assert doc["results"]["euler_family"]["symbolic_zero"]
    assert doc["results"]["euler_family"]["example"]["common_value"] == "1729"


def test_nearmiss_cli_both_families(capsys):
    doc = run_json(capsys, "identities", "nearmiss", "--family", "zero", "--count", "4")
    tuples = doc["results"]["tuples"]
    assert tuples[1] == {"n": 1, "a": "135", "b": "138", "c": "172", "epsilon": -1}
    doc = run_json(capsys, "identities", "nearmiss", "--family", "infinity", "--count", "2")
    assert doc["results"]["tuples"][0]["a"] == "9"


def test_ec_count_cli(capsys):
    doc = run_json(capsys, "ec", "count", "--p", "7", "--a", "1")
    assert doc["results"]["count"] == "12"
    assert doc["results"]["trace"] == "-4"
    doc = run_json(capsys, "ec", "count", "--p", "17", "--n", "2", "--a", "3,1")
    assert int(doc["results"]["count"]) > 0


def test_ec_map_cli(capsys):
    doc = run_json(capsys, "ec", "map", "--d", "1729", "--x", "9", "--y", "10")
    assert doc["results"]["u"] == "1092"
    assert doc["results"]["v"] == "-3276"
    assert doc["results"]["on_curve"]


def test_ec_map_rejects_off_curve(capsys):
    doc = run_json(capsys, "ec", "map", "--d", "1729", "--x", "1", "--y", "1")
    assert doc["status"] == "failed"
    assert "error" in doc["results"]


def test_ff_differentials_cli(capsys):
    doc = run_json(capsys, "ff", "differentials")
    res = doc["results"]
    assert res["z_rank_rational"] == 2
    assert res["z_rank_cm_extended"] == 4
    assert res["differentials"]["P1"] == "-42*T^2 + 84*T"
    assert res["differentials"]["P2"] == "-84*T + 42"


def test_ff_lfunction_cli_p5(capsys):
    doc = run_json(capsys, "ff", "lfunction", "--p", "5")
    res = doc["results"]
    assert res["degree"] == 8
    assert res["coeffs"][-1] == str(5**8)
    assert res["functional_equation_sign"] == 1


def test_ff_lfunction_cli_p17(capsys):
    doc = run_json(capsys, "ff", "lfunction", "--p", "17")
    res = doc["results"]
    assert res["coeffs"] == [
        "1", "0", "-544", "0", "147390", "0", "-45435424", "0", "6975757441",
    ]
    factors = {tuple(f["factor"]): f["multiplicity"] for f in res["factorization"]}
    assert factors[("-1", "17")] == 2
    assert factors[("1", "17")] == 2
    assert factors[("1", "0", "34", "0", "83521")] == 1
    assert res["arith_bound"] == 2 and res["geom_bound"] == 4


def test_ff_rank_cli(capsys):
    doc = run_json(capsys, "ff", "rank")
    res = doc["results"]
    assert res["rank"] == 2
    assert res["geometric_rank"] == 4


def test_surface_analyze_cli(capsys):
    doc = run_json(capsys, "surface", "analyze")
    res = doc["results"]
    assert res["picard"] == 18
    assert res["is_k3"]
    assert res["euler_number"] == 24
    assert len(res["fibers"]) == 3


def test_surface_analyze_custom_k(capsys):
    doc = run_json(capsys, "surface", "analyze", "--k", "T^6 - 1")
    res = doc["results"]
    assert res["euler_number"] == 24 and res["is_k3"]
    doc = run_json(capsys, "surface", "analyze", "--k=-2,0,0,1")
    assert doc["results"]["euler_number"] == 12
    assert not doc["results"]["is_k3"]


def test_twists_table_cli_json(capsys):
    doc = run_json(capsys, "twists", "table", "--from", "0", "--to", "3")
    recs = doc["results"]["records"]
    assert [r["d"] for r in recs] == ["7", "7", "9", "1729"]
    t3 = recs[-1]
    assert (t3["x1"], t3["y1"], t3["x2"], t3["y2"]) == ("46/3", "-37/3", "10", "9")
    assert doc["results"]["summary"]["distinct_d"] == 3


def test_twists_table_cli_csv(capsys):
    code = main(["twists", "table", "--from", "3", "--to", "3", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,k,d,x1,y1,x2,y2,cert_prime"
    assert lines[1].startswith("3,46683,1729,46/3,-37/3,10,9")


def test_round_trip_parse_what_you_print(capsys):
    for argv in (
        ["identities", "taxicab", "--bound", "1729"],
        ["ec", "count", "--p", "13", "--a", "2"],
        ["ff", "differentials"],
        ["twists", "table", "--from", "1", "--to", "2"],
    ):
        doc = run_json(capsys, *argv)
        assert json.loads(json.dumps(doc)) == doc
        assert doc["command"] == " ".join(argv[:2])
        assert isinstance(doc["parameters"], dict)


def test_unknown_subcommand_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["identities", "nonsense"])
    assert exc.value.code != 0
    err = capsys.readouterr().err
    assert "invalid choice" in err


def test_determinism(capsys):
    doc1 = run_json(capsys, "twists", "table", "--from", "0", "--to", "2")
    doc2 = run_json(capsys, "twists", "table", "--from", "0", "--to", "2")
    assert doc1["results"] == doc2["results"]
