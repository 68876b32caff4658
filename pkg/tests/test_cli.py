import json

from pptoggle.cli import main
from pptoggle.serialize import config_to_json
from pptoggle.configurations import OneLegSPP, PlanePartition, TwoLegSPP

FIG_SIGMA_JSON = config_to_json(
    OneLegSPP((2, 1), {(1, 3): 3, (2, 2): 4, (2, 3): 2,
                       (3, 1): 5, (3, 2): 3, (3, 3): 2}))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_series_macmahon(capsys):
    code, out = run(capsys, "series", "--macmahon", "--degree", "6")
    assert code == 0
    assert "48*q^6" in out and "13*q^4" in out


def test_series_one_leg_degree_zero(capsys):
    code, out = run(capsys, "series", "--one-leg", "2,1", "--degree", "0")
    assert code == 0
    assert out.strip() == "1*q^0"


def test_series_two_leg_cross_check(capsys):
    code, out = run(capsys, "series", "--two-leg", "2,2/3,1",
                    "--degree", "4", "--cross-check")
    assert code == 0
    assert "PASS product-identity" in out


def test_series_requires_a_shape(capsys):
    assert main(["series"]) == 2


def test_biject_one_leg_round_trip(tmp_path, capsys):
    src = tmp_path / "sigma.json"
    src.write_text(json.dumps(FIG_SIGMA_JSON))
    code, out = run(capsys, "biject", "one-leg", "--direction", "forward",
                    "--input", str(src), "--round-trip")
    assert code == 0
    payload = json.loads(out.splitlines()[0])
    rho_weight = sum(v for _, _, v in payload["rho"]["entries"])
    pi_weight = sum(v for _, _, v in payload["pi"]["entries"])
    assert (rho_weight, pi_weight) == (3, 16)
    assert "PASS round-trip" in out and "PASS weight" in out


def test_biject_empty_plane(tmp_path, capsys):
    src = tmp_path / "pp.json"
    src.write_text(json.dumps(config_to_json(PlanePartition())))
    code, out = run(capsys, "biject", "plane", "--input", str(src))
    assert code == 0
    assert json.loads(out.splitlines()[0])["values"] == []


def test_biject_two_leg_round_trip(tmp_path, capsys):
    sigma = TwoLegSPP(((2,), (1,)), {(1, 1): 1, (1, 2): 1})
    src = tmp_path / "sigma2.json"
    src.write_text(json.dumps(config_to_json(sigma)))
    code, out = run(capsys, "biject", "two-leg", "--input", str(src),
                    "--round-trip")
    assert code == 0
    assert "FAIL" not in out


def test_toggle_verbs(capsys):
    code, out = run(capsys, "toggle", "--upper", "5,3,1,1",
                    "--middle", "3,2,1", "--lower", "3,2")
    assert code == 0 and json.loads(out) == [5, 3, 1]
    code, out = run(capsys, "toggle", "--upper", "4,2,1",
                    "--middle", "5,3,1,1", "--lower", "3,2,1")
    assert code == 0 and json.loads(out) == {"toggled": [2, 2], "popped": 1}
    code, out = run(capsys, "toggle", "--upper", "4,2,1",
                    "--middle", "2,2", "--lower", "3,2,1", "--push", "1")
    assert code == 0 and json.loads(out) == [5, 3, 1, 1]


def test_enumerate_then_verify_census(tmp_path, capsys):
    census = tmp_path / "plane.jsonl"
    code, _ = run(capsys, "enumerate", "--family", "plane", "--bound", "4",
                  "--output", str(census))
    assert code == 0
    head = json.loads(census.read_text().splitlines()[0])
    assert head["count"] == 1 + 1 + 3 + 6 + 13
    code, out = run(capsys, "verify", "--census", str(census))
    assert code == 0 and "PASS census-plane" in out


def test_verify_none_is_vacuous(capsys):
    code, out = run(capsys, "verify", "--suite", "none")
    assert code == 0
    assert "vacuous" in out


def test_verify_suite_with_bounds(capsys):
    code, out = run(capsys, "verify", "--suite", "toggles", "--max-part", "2")
    assert code == 0
    assert "FAIL" not in out


def test_report_determinism(capsys):
    code1, out1 = run(capsys, "series", "--macmahon", "--degree", "5", "--json")
    code2, out2 = run(capsys, "series", "--macmahon", "--degree", "5", "--json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_usage_exit_code(capsys):
    assert main(["series", "--degree", "nonsense"]) == 2
    assert main(["biject", "sideways"]) == 2


def test_render_ascii_and_svg(tmp_path, capsys):
    src = tmp_path / "pp.json"
    src.write_text(json.dumps(config_to_json(
        PlanePartition.from_rows([[2, 1], [1]]))))
    code, out = run(capsys, "render", "--input", str(src))
    assert code == 0 and out.splitlines()[0].split() == ["2", "1"]
    code, out = run(capsys, "render", "--input", str(src), "--format", "svg")
    assert code == 0 and out.startswith("<svg")
