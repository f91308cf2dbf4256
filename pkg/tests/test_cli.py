import json

from click.testing import CliRunner

from kleinprym.cli import cli, main


def run(*args):
    return CliRunner().invoke(cli, args, catch_exceptions=False)


def test_involution_report():
    result = run("involution", "--a", "0", "--b", "1")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["phi_params"] == ["-6", "-10"]
    assert report["j_pair_bottom"] == ["1728", "21952/9"]
    assert report["consistency"]["fiber_invariants_match"]


def test_phi_undefined_exits_1(capsys):
    assert main(["involution", "--a", "1", "--b", "-1"]) == 1
    assert "a + b = 0" in capsys.readouterr().err


def test_unknown_flag_exits_1():
    assert main(["involution", "--a", "1", "--b", "2", "--bogus", "3"]) == 1


def test_json_output_is_deterministic():
    a = run("analyze", "--a", "1/3", "--b", "5").output
    b = run("analyze", "--a", "1/3", "--b", "5").output
    assert a == b
    report = json.loads(a)
    assert all(report["quotient_identities_verified"].values())
    assert report["fixed_points"]["sigma"]["count"] == 4
    assert report["fixed_points"]["iota_tau"]["count"] == 0


def test_text_format_is_projection_of_json():
    as_json = json.loads(run("torsion", "--d", "2").output)
    as_text = run("torsion", "--d", "2", "--format", "text").output
    for key in as_json:
        assert key in as_text
    assert "all_ok: True" in as_text


def test_normalize_round_trip():
    result = run("normalize", "--tuple", "-1/3,-5;inf,2,-2!0", "--convention", "ordered")
    report = json.loads(result.output)
    assert report["normalizations"] == [{
        "a": "1/3", "b": "5", "witness_map": ["1", "0", "0", "1"]}]


def test_normalize_all_unordered_gives_both_signs():
    result = run("normalize", "--tuple", "-1,-5;inf,2,-2!0",
                 "--convention", "all-unordered")
    report = json.loads(result.output)
    got = {(n["a"], n["b"]) for n in report["normalizations"]}
    assert got == {("1", "5"), ("-1", "-5")}


def test_duality_certificate():
    result = run("duality", "--curveE", "-7,-6", "--pointP", "3,0",
                 "--curveF", "-19,-30", "--pointQ", "5,0", "--assert-nonisogenous")
    cert = json.loads(result.output)
    assert cert["premise_holds"]
    assert cert["conclusion"] == "A is not isomorphic to its dual"


def test_duality_without_assertion_is_gated():
    result = run("duality", "--curveE", "-7,-6", "--pointP", "3,0",
                 "--curveF", "-19,-30", "--pointQ", "5,0")
    assert json.loads(result.output)["conclusion"].startswith("hypothesis unverified")


def test_example_surj_lists_kernel():
    report = json.loads(run("example-surj").output)
    assert len(report["ker_phi_A"]) == 4
    assert report["all_ok"]


def test_periods_respects_env_default(monkeypatch):
    monkeypatch.setenv("KLEINPRYM_DEFAULT_BITS", "128")
    report = json.loads(run("periods", "--a", "0", "--b", "1").output)
    assert report["precision_bits"] == 128
    monkeypatch.setenv("KLEINPRYM_DEFAULT_BITS", "not-a-number")
    assert main(["periods", "--a", "0", "--b", "1"]) == 1


def test_periods_rejects_tiny_bits():
    assert main(["periods", "--a", "0", "--b", "1", "--bits", "16"]) == 1


def test_torsion_range_is_validated():
    assert main(["torsion", "--d", "9"]) == 1
