import json

from sympacket import cli
from sympacket.params import ArthurParameter, DiscreteBlock, UnipotentBlock


WORKED_JSON = json.dumps(
    {
        "n": 2,
        "unipotent": [
            {"char": "sgn", "dim": 3},
            {"char": "triv", "dim": 1},
            {"char": "sgn", "dim": 1},
        ],
        "discrete": [],
    }
)


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_worked_case(capsys):
    code, out, _ = run(capsys, ["decide", "--param", WORKED_JSON, "--pi", "1"])
    assert code == 0
    report = json.loads(out)
    assert report["results"]["member"] is True
    assert report["results"]["route"] == "THM71_II_A1"
    assert report["results"]["oracle_agrees"] is True
    assert report["schema_version"] == 1


def test_enumerate_pi_worked_case(capsys):
    code, out, _ = run(capsys, ["enumerate-pi", "2", "1"])
    assert code == 0
    report = json.loads(out)
    packets = report["results"]["packets"]
    assert len(packets) == 1
    assert packets[0]["route"] == "THM71_II_A1"
    assert packets[0]["parameter"] == json.loads(WORKED_JSON)


def test_invariants(capsys):
    code, out, _ = run(capsys, ["invariants", "2", "0", "--delta", "-1"])
    assert code == 0
    report = json.loads(out)
    assert report["results"]["hasse"] == {"-1": -1}
    assert report["results"]["discriminant"] == -1


def test_parameter_roundtrip(capsys):
    from sympacket.params import enumerate_params
    from sympacket.weights import inf_char_of_weight, pi_nm

    # parse(print(psi)) is the identity on every canonical parameter
    for m in range(0, 3):
        chi = inf_char_of_weight(pi_nm(2, m))
        for psi in enumerate_params(chi, 2):
            assert cli.param_from_json(cli.param_to_json(psi)) == psi

    psi = ArthurParameter(
        5, (UnipotentBlock(0, 7),), (DiscreteBlock(1, 2),)
    ).canonical()
    blob = cli.param_to_json(psi)
    assert cli.param_from_json(blob) == psi
    code, out, _ = run(
        capsys, ["decide", "--param", json.dumps(blob), "--sigma", "2"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["inputs"]["parameter"] == blob
    assert report["results"]["member"] is True
    assert report["results"]["route"] == "SIGMA"


def test_malformed_parameter_exits_2(capsys):
    bad = json.dumps({"n": 2, "unipotent": [{"char": "triv", "dim": 3}], "discrete": []})
    code, _, err = run(capsys, ["decide", "--param", bad, "--pi", "1"])
    assert code == 2
    payload = json.loads(err)
    assert "DIM_SUM" in payload["violations"]

    unknown = json.dumps({"n": 1, "unipotent": [], "discrete": [], "bogus": 1})
    code, _, err = run(capsys, ["decide", "--param", unknown, "--pi", "0"])
    assert code == 2
    assert "UNKNOWN_FIELD:bogus" in json.loads(err)["violations"]

    disordered = json.dumps(
        {
            "n": 2,
            "unipotent": [
                {"char": "triv", "dim": 1},
                {"char": "sgn", "dim": 3},
                {"char": "sgn", "dim": 1},
            ],
            "discrete": [],
        }
    )
    code, _, err = run(capsys, ["decide", "--param", disordered, "--pi", "1"])
    assert code == 2
    assert "ORDER" in json.loads(err)["violations"]


def test_usage_error_exits_1(capsys):
    assert cli.main(["decide", "--param", WORKED_JSON]) == 1
    assert cli.main(["nonsense"]) == 1


def test_rho_discrepancy_exit_3(capsys):
    # unipotent member of the sigma_{5,2} packet with a trivial rank-one
    # block: the two printed character recipes disagree on this row
    psi = json.dumps(
        {
            "n": 5,
            "unipotent": [
                {"char": "triv", "dim": 7},
                {"char": "triv", "dim": 3},
                {"char": "triv", "dim": 1},
            ],
            "discrete": [],
        }
    )
    code, out, _ = run(
        capsys, ["rho", "--param", psi, "--module", "sigma", "--k", "2"]
    )
    assert code == 3
    report = json.loads(out)
    assert report["results"]["table_agrees"] is False
    assert "discrepancy" in report["results"]


def test_rho_agreeing_case_exit_0(capsys):
    code, out, _ = run(
        capsys,
        ["rho", "--param", WORKED_JSON, "--module", "pi", "--m", "1", "--whittaker", "-1"],
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"]["table_agrees"] is True
    char = report["results"]["character"]
    assert sorted(char["signs"]) in ([-1, -1, 1], [1, 1, 1], [-1, 1, 1], [-1, -1, -1])


def test_standard_and_tableau_and_howe_and_cohind(capsys):
    code, out, _ = run(capsys, ["standard", "sigma", "5", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["results"]["max_exponent"] == 3
    assert report["results"]["exponents"] == [
        {"sgn_power": 0, "exponent": 3},
        {"sgn_power": 0, "exponent": 1},
    ]

    code, out, _ = run(capsys, ["tableau", "3", "1"])
    report = json.loads(out)
    assert code == 0
    assert report["results"]["chain_index"] == 2
    assert sorted(report["results"]["rows"]) == ["+", "+-", "+-", "-"]

    code, out, _ = run(
        capsys,
        ["howe", "--p", "0", "--q", "4", "--eta", "triv", "--tau", "0", "--rank", "3"],
    )
    report = json.loads(out)
    assert code == 0
    assert report["results"]["ktype"] == [-2, -2, -2]
    assert report["results"]["first_occurrence"] == 0

    code, out, _ = run(
        capsys,
        ["howe", "--p", "0", "--q", "4", "--char", "det", "--rank", "5"],
    )
    report = json.loads(out)
    assert code == 0
    assert report["results"]["first_occurrence"] == 4
    assert report["results"]["degree"] == 4
    assert cli.main(["howe", "--p", "0", "--q", "4", "--rank", "5"]) == 1

    code, out, _ = run(capsys, ["cohind", "4", "1", "2", "--t", "3"])
    report = json.loads(out)
    assert code == 0
    assert report["results"]["S"] == 1 * 3 + 1 * 2
    assert report["results"]["delta_u"]["half"] is True
    assert report["results"]["weakly_fair"] is True


def test_decide_regular(capsys):
    psi = json.dumps(
        {
            "n": 3,
            "unipotent": [{"char": "sgn", "dim": 5}],
            "discrete": [{"t": 10, "a": 1}],
        }
    )
    code, out, _ = run(capsys, ["decide", "--param", psi, "--regular", "2"])
    assert code == 0
    assert json.loads(out)["results"]["member"] is True
    code, out, _ = run(capsys, ["decide", "--param", psi, "--regular", "1"])
    assert code == 0
    assert json.loads(out)["results"]["member"] is False
    # out-of-range ladder index is a validation error
    code, _, err = run(capsys, ["decide", "--param", psi, "--regular", "3"])
    assert code == 2


def test_text_format(capsys):
    code, out, _ = run(capsys, ["--format", "text", "enumerate-pi", "2", "1"])
    assert code == 0
    assert "# enumerate-pi" in out
    assert "[results]" in out
