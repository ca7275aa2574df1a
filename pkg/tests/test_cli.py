"""CLI round trips through main(argv) with temporary files."""

import json

import numpy as np
import pytest

from pwt.cli import main
from pwt.core import Instance
from pwt.experiments import (
    CONVERGENCE_HEADER,
    SCALING_HEADER,
    geometric_grid,
    instance_batch,
)


def test_gen_single_file(tmp_path, capsys):
    out = tmp_path / "one.json"
    assert main(["gen", "--n", "12", "--seed", "4", "--out", str(out)]) == 0
    inst = Instance.load(out)
    assert inst.n == 12 and inst.correlated
    expect = instance_batch(12, 4, 1)[0]
    assert np.array_equal(inst.profits, expect.profits)
    assert "wrote" in capsys.readouterr().out


def test_gen_batch_directory(tmp_path):
    out = tmp_path / "batch"
    assert main(
        ["gen", "--n", "8", "--seed", "2", "--instances", "3", "--out", str(out)]
    ) == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == [f"instance_8_2_{i}.json" for i in range(3)]
    # uniform flag produces unit weights
    out2 = tmp_path / "flat.json"
    assert main(["gen", "--n", "8", "--uniform", "--out", str(out2)]) == 0
    assert Instance.load(out2).uniform


def test_gen_rejects_multi_instance_json(tmp_path, capsys):
    out = tmp_path / "one.json"
    code = main(["gen", "--instances", "2", "--out", str(out)])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_run_round_trip(tmp_path, capsys):
    out = tmp_path / "results.json"
    code = main(
        [
            "run", "--n", "15", "--seed", "6", "--instances", "2",
            "--algorithms", "rls_swap,gsemo", "--budget", "500",
            "--init", "zero", "--out", str(out),
        ]
    )
    assert code == 0
    records = json.loads(out.read_text())
    assert len(records) == 4
    for rec in records:
        assert rec["algorithm"] in ("rls_swap", "gsemo")
        assert rec["n"] == 15 and len(rec["bits"]) == 15
        assert rec["evaluations"] <= rec["rawIterations"] <= 500
        assert rec["weight"] >= 0
    assert "benefit" in capsys.readouterr().out


def test_run_loads_instance_paths(tmp_path):
    gen_dir = tmp_path / "inst"
    main(["gen", "--n", "10", "--seed", "9", "--instances", "2", "--out", str(gen_dir)])
    out = tmp_path / "res.json"
    code = main(
        [
            "run", "--instances", str(gen_dir), "--algorithms", "rls_swap",
            "--budget", "200", "--out", str(out),
        ]
    )
    assert code == 0
    assert len(json.loads(out.read_text())) == 2
    single = gen_dir / "instance_10_9_0.json"
    code = main(
        [
            "run", "--instances", str(single), "--algorithms", "rls_swap",
            "--budget", "200", "--out", str(out),
        ]
    )
    assert code == 0
    assert len(json.loads(out.read_text())) == 1


def test_convergence_csv(tmp_path):
    out = tmp_path / "conv.csv"
    code = main(
        [
            "convergence", "--n", "10", "--seed", "3", "--instances", "2",
            "--algorithms", "rls_swap,semo", "--budget", "400",
            "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CONVERGENCE_HEADER)
    assert len(lines) == 1 + 2 * len(geometric_grid(400))


def test_scaling_csv(tmp_path):
    out = tmp_path / "scale.csv"
    code = main(
        [
            "scaling", "--sizes", "6,9", "--instances", "2",
            "--algorithms", "rls_swap", "--seed", "1", "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(SCALING_HEADER)
    assert len(lines) == 3
    assert lines[1].startswith("rls_swap,6,") and lines[2].startswith("rls_swap,9,")


def test_verify_report(tmp_path, capsys):
    out = tmp_path / "verify.json"
    code = main(["verify", "--instances", "10", "--seed", "2", "--out", str(out)])
    assert code == 0
    assert "verify: OK" in capsys.readouterr().out
    payload = json.loads(out.read_text())
    assert payload["ok"] is True
    assert payload["sampleCount"] == 10
    assert len(payload["checks"]) == 11


def test_pareto_output(tmp_path, capsys):
    out = tmp_path / "front.csv"
    code = main(["pareto", "--n", "12", "--seed", "5", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "cardinality,weight,benefit"
    assert len(lines) >= 2
    assert "front size" in capsys.readouterr().out
    # without --out the rows go to stdout
    assert main(["pareto", "--n", "12", "--seed", "5"]) == 0
    assert "cardinality,weight,benefit" in capsys.readouterr().out


def test_error_paths(tmp_path, capsys):
    assert main(["run", "--algorithms", "nope", "--budget", "10"]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["run", "--instances", str(tmp_path / "missing"), "--budget", "10"]) == 1
    capsys.readouterr()
    assert main(["scaling", "--sizes", "9,6", "--out", str(tmp_path / "x.csv")]) == 1
    err = capsys.readouterr().err
    assert "error:" in err
    with pytest.raises(SystemExit):
        main(["bogus-command"])
