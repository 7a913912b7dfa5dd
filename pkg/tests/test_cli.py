import json

import jsonschema
import pytest

from twistdiv.cli import main

CLASSIFY_SCHEMA = {
    "type": "object",
    "required": ["group", "basis", "mode", "counts", "survivors", "rejected"],
    "properties": {
        "group": {"type": "string"},
        "basis": {"type": "string"},
        "mode": {"type": "string"},
        "counts": {
            "type": "object",
            "required": ["examined", "rejected", "survivors", "undetermined"],
            "additionalProperties": {"type": "integer"},
        },
        "survivors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["C", "certificate_kind"],
            },
        },
    },
}

IDENTITIES_SCHEMA = {
    "type": "object",
    "required": ["algebra", "pattern", "dimension", "monomials"],
    "properties": {
        "dimension": {"type": "integer"},
        "monomials": {"type": "integer"},
        "pattern": {"type": "array", "items": {"type": "integer"}},
    },
}


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_json(capsys):
    code, out = run_cli(
        capsys, "classify", "--group", "Z2", "--basis", "left", "--mode", "shaped"
    )
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, CLASSIFY_SCHEMA)
    assert data["counts"] == {
        "examined": 2, "rejected": 1, "survivors": 1, "undetermined": 0,
    }
    assert data["survivors"][0]["C"] == [[1, 1], [1, -1]]


def test_classify_markdown_reproduces_table(capsys):
    code, out = run_cli(
        capsys, "classify", "--group", "Z4", "--basis", "left",
        "--mode", "shaped", "--format", "md",
    )
    assert code == 0
    assert "| 1 | 1 | 1 | 1 | -1 |" in out
    assert "| 2 | 1 | -1 | -1 | 1 |" in out
    assert "| 3 | 1 | 1 | -1 | 1 |" in out


def test_classify_markdown_klein_table(capsys):
    code, out = run_cli(
        capsys, "classify", "--group", "Z2xZ2", "--basis", "right",
        "--mode", "shaped", "--format", "md",
    )
    assert code == 0
    assert "| (1,0) | 1 | -1 | 1 | -1 |" in out
    assert "| (0,1) | 1 | -1 | -1 | 1 |" in out
    assert "| (1,1) | 1 | 1 | -1 | -1 |" in out


def test_classify_deterministic(capsys):
    _, first = run_cli(capsys, "classify", "--group", "Z2xZ2", "--basis", "right")
    _, second = run_cli(capsys, "classify", "--group", "Z2xZ2", "--basis", "right")
    assert first == second


def test_identities_json(capsys, tmp_path):
    emit = tmp_path / "basis.json"
    code, out = run_cli(
        capsys, "identities", "--algebra", "tes", "--pattern", "2,2",
        "--emit", str(emit),
    )
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, IDENTITIES_SCHEMA)
    assert data["dimension"] == 14 and data["monomials"] == 30
    payload = json.loads(emit.read_text())
    assert payload["dimension"] == 14
    assert len(payload["basis"]) == 14
    assert len(payload["basis_by_monomial"]) == 14


def test_identities_pattern_six(capsys):
    code, out = run_cli(capsys, "identities", "--algebra", "tes", "--pattern", "6")
    assert code == 0
    assert json.loads(out)["dimension"] == 34


def test_cohomology_checks(capsys):
    code, out = run_cli(
        capsys, "cohomology", "--algebra", "tes",
        "--check", "cocycle", "--check", "coboundary", "--check", "separable",
    )
    assert code == 0
    data = json.loads(out)
    assert data["checks"]["cocycle"] is True
    assert data["checks"]["coboundary"] is True
    assert data["checks"]["separable"] is False
    assert data["checks"]["violating_triple"] == [1, 1, 1]
    code, _ = run_cli(
        capsys, "cohomology", "--algebra", "tes", "--check", "separable",
        "--fail-on-false",
    )
    assert code == 1


def test_cohomology_show_kappa(capsys):
    code, out = run_cli(capsys, "cohomology", "--algebra", "quat", "--show", "kappa")
    assert code == 0
    assert json.loads(out)["kappa"] == [1, 1, 1, -1]


def test_analyze(capsys):
    code, out = run_cli(
        capsys, "analyze", "--algebra", "tes",
        "--report", "lie,jordan,series,inverses",
    )
    assert code == 0
    data = json.loads(out)
    assert data["lie"]["jacobi"] is True
    assert data["lie"]["heisenberg_ideal"] is True
    assert data["jordan"]["holds"] is False
    assert data["series"]["derived_dimensions"] == [4, 3, 1, 0]
    assert data["series"]["solvable"] is True
    assert data["series"]["nilpotent"] is False
    assert data["inverses"]["kind"] == "chiral"


def test_norms_schwarz(capsys):
    code, out = run_cli(capsys, "norms", "--check", "schwarz", "--samples", "20")
    assert code == 0
    data = json.loads(out)
    assert data["fourth_power_defects"] == {"(p,p)": "-16", "(p,q)": "0", "(s,t)": "8"}
    assert data["pure_factor_nonzero_defects"] == 0


def test_norms_triangle_seeded_deterministic(capsys):
    _, first = run_cli(
        capsys, "norms", "--check", "triangle", "--samples", "5", "--seed", "7"
    )
    _, second = run_cli(
        capsys, "norms", "--check", "triangle", "--samples", "5", "--seed", "7"
    )
    assert first == second
    assert all(v is True for v in json.loads(first)["triangle"].values())


def test_deform(capsys):
    code, out = run_cli(
        capsys, "deform", "--family", "1", "--k", "4",
        "--checks", "neccons,witness,inverse-iso,commutator",
    )
    assert code == 0
    data = json.loads(out)
    assert data["neccons"]["pass"] is True
    assert data["witness_search"]["found"] is False
    assert data["k_inverse_isomorphism"] is True
    assert data["in_range"] is True


def test_deform_fraction_k(capsys):
    code, out = run_cli(capsys, "deform", "--family", "5", "--k", "1/2")
    assert code == 0
    assert json.loads(out)["in_range"] is True


def test_encrypt_round_trip(capsys):
    code, out = run_cli(
        capsys, "encrypt", "--p", "257", "--key", "1,1,0,0", "--msg", "5,6,7,8"
    )
    assert code == 0
    encoded = out.strip()
    code, out = run_cli(
        capsys, "encrypt", "--p", "257", "--key", "1,1,0,0",
        "--msg", encoded, "--decrypt",
    )
    assert code == 0
    assert out.strip() == "5,6,7,8"


def test_encrypt_invalid_key_exit_code(capsys):
    code = main(["encrypt", "--p", "257", "--key", "4,1,0,0", "--msg", "1,2,3,4"])
    assert code == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--group", "Z7"])
    assert exc.value.code == 2


def test_algebra_json_file_selector(capsys, tmp_path):
    spec = {
        "group": "Z4",
        "basis": "left-standard",
        "ring": "rational",
        "C": [[1, 1, 1, 1], [1, 1, 1, -1], [1, -1, -1, 1], [1, 1, -1, 1]],
    }
    path = tmp_path / "tes.json"
    path.write_text(json.dumps(spec))
    code, out = run_cli(capsys, "identities", "--algebra", str(path), "--pattern", "2,1")
    assert code == 0
    assert json.loads(out)["dimension"] == 1


def test_accept_subset(capsys):
    code, out = run_cli(capsys, "accept", "--only", "2,14")
    assert code == 0
    assert "[PASS] criterion  2" in out
    assert "[PASS] criterion 14" in out
    assert "2/2 criteria passed" in out
