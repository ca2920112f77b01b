import json

import pytest

from baystow import read_instance, read_stats
from baystow.cli import main


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "inst.json"
    code = main(["generate", "--dims", "2x2x2", "--nc", "8", "--seed", "3", "--out", str(path)])
    assert code == 0
    return path


def solve(instance_file, out_dir, *extra):
    return main(
        ["solve", str(instance_file), "--pop-size", "10", "--generations", "15",
         "--seed", "5", "--out", str(out_dir), *extra]
    )


class TestGenerate:
    def test_writes_readable_instance(self, instance_file):
        inst = read_instance(instance_file)
        assert inst.n_containers == 8

    def test_same_seed_same_file(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["generate", "--dims", "3x3x3", "--nc", "20", "--seed", "9", "--out", str(a)])
        main(["generate", "--dims", "3x3x3", "--nc", "20", "--seed", "9", "--out", str(b)])
        assert a.read_text() == b.read_text()

    def test_overfull_is_usage_error(self, tmp_path):
        code = main(["generate", "--dims", "1x1x2", "--nc", "5", "--out", str(tmp_path / "x.json")])
        assert code == 1

    def test_malformed_dims_is_usage_error(self, tmp_path):
        code = main(["generate", "--dims", "2by2", "--nc", "4", "--out", str(tmp_path / "x.json")])
        assert code == 1


class TestSolve:
    def test_writes_stats_and_best(self, tmp_path, instance_file, capsys):
        out = tmp_path / "run"
        assert solve(instance_file, out) == 0
        printed = capsys.readouterr().out
        assert "F_i =" in printed and "F_f =" in printed and "elapsed_ms =" in printed
        records = read_stats(out / "stats.csv")
        assert len(records) == 15
        assert main(["validate", str(instance_file), str(out / "best.json")]) == 0

    def test_single_generation_prints_equal_initial_and_final(self, tmp_path, instance_file, capsys):
        out = tmp_path / "one"
        code = main(["solve", str(instance_file), "--generations", "1", "--out", str(out)])
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        fi = next(line.split("=")[1] for line in lines if line.startswith("F_i"))
        ff = next(line.split("=")[1] for line in lines if line.startswith("F_f"))
        assert fi == ff

    def test_reruns_are_identical(self, tmp_path, instance_file):
        out1, out2 = tmp_path / "r1", tmp_path / "r2"
        solve(instance_file, out1)
        solve(instance_file, out2)
        assert (out1 / "best.json").read_text() == (out2 / "best.json").read_text()
        a = [(r.generation, r.best_fitness, r.mean_fitness) for r in read_stats(out1 / "stats.csv")]
        b = [(r.generation, r.best_fitness, r.mean_fitness) for r in read_stats(out2 / "stats.csv")]
        assert a == b

    def test_missing_instance_is_parse_error(self, tmp_path):
        assert solve(tmp_path / "nope.json", tmp_path / "out") == 2

    def test_corrupt_instance_is_parse_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert solve(bad, tmp_path / "out") == 2

    def test_bad_probability_is_usage_error(self, tmp_path, instance_file):
        code = main(["solve", str(instance_file), "--pc", "1.7", "--out", str(tmp_path / "o")])
        assert code == 1


class TestValidate:
    def test_reports_violations_with_status_3(self, tmp_path, instance_file, capsys):
        floating = tmp_path / "float.json"
        floating.write_text(json.dumps({
            "dims": {"n1": 2, "n2": 2, "n3": 2},
            "cells": [{"x": 0, "y": 0, "z": 1, "id": 1}],
        }))
        code = main(["validate", str(instance_file), str(floating)])
        assert code == 3
        out = capsys.readouterr().out
        assert "support" in out

    def test_duplicate_id_is_parse_error_not_constraint_report(self, tmp_path, instance_file):
        dup = tmp_path / "dup.json"
        dup.write_text(json.dumps({
            "dims": {"n1": 2, "n2": 2, "n3": 2},
            "cells": [
                {"x": 0, "y": 0, "z": 0, "id": 1},
                {"x": 0, "y": 1, "z": 0, "id": 1},
            ],
        }))
        assert main(["validate", str(instance_file), str(dup)]) == 2

    def test_dims_mismatch_is_constraint_failure(self, tmp_path, instance_file):
        other = tmp_path / "other.json"
        other.write_text(json.dumps({
            "dims": {"n1": 3, "n2": 3, "n3": 3},
            "cells": [{"x": 0, "y": 0, "z": 0, "id": 1}],
        }))
        assert main(["validate", str(instance_file), str(other)]) == 3


class TestSweep:
    def test_containers_sweep_writes_summary(self, tmp_path, capsys):
        out = tmp_path / "sw"
        code = main(
            ["sweep", "containers", "--values", "4,8", "--pop-size", "6",
             "--generations", "3", "--reps", "2", "--seed", "1", "--out", str(out)]
        )
        assert code == 0
        lines = (out / "summary.csv").read_text().strip().splitlines()
        assert lines[0] == "swept_value,mean_fi,mean_ff,mean_elapsed_ms"
        assert len(lines) == 3

    def test_keep_runs_writes_per_run_stats(self, tmp_path):
        out = tmp_path / "swk"
        code = main(
            ["sweep", "generations", "--values", "2,4", "--dims", "2x2x2", "--nc", "8",
             "--pop-size", "6", "--reps", "2", "--seed", "1", "--out", str(out), "--keep-runs"]
        )
        assert code == 0
        names = sorted(p.name for p in (out / "runs").iterdir())
        assert names == [
            "generations_2_rep0.csv",
            "generations_2_rep1.csv",
            "generations_4_rep0.csv",
            "generations_4_rep1.csv",
        ]
        assert len(read_stats(out / "runs" / "generations_4_rep1.csv")) == 4

    def test_population_sweep_needs_fixed_shape(self, tmp_path):
        code = main(["sweep", "population", "--values", "4,6", "--out", str(tmp_path / "x")])
        assert code == 1

    def test_descending_values_is_usage_error(self, tmp_path):
        code = main(["sweep", "containers", "--values", "8,4", "--out", str(tmp_path / "x")])
        assert code == 1


class TestUsage:
    def test_no_command(self):
        assert main([]) == 1

    def test_unknown_command(self):
        assert main(["optimize"]) == 1

    def test_unknown_flag(self, tmp_path):
        assert main(["generate", "--dims", "2x2x2", "--nc", "4", "--turbo",
                     "--out", str(tmp_path / "x.json")]) == 1
