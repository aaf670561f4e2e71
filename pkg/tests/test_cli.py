import csv
import json

import pytest

from kernmedian.cli import main
from kernmedian.dataio import DataFormatError, parse_dataset, write_dataset
from kernmedian.domains.rankings import Ranking


@pytest.fixture
def string_file(tmp_path):
    path = tmp_path / "set.txt"
    path.write_text("AAAA\nBBB\n", encoding="utf-8")
    return path


class TestParseDataset:
    def test_string_file_is_one_set(self, string_file):
        sets = parse_dataset(string_file, "string")
        assert len(sets) == 1
        assert sets[0].objects == ("AAAA", "BBB")

    def test_string_directory(self, tmp_path):
        (tmp_path / "b.txt").write_text("xy\n", encoding="utf-8")
        (tmp_path / "a.txt").write_text("ab\ncd\n", encoding="utf-8")
        sets = parse_dataset(tmp_path, "string")
        assert [s.objects for s in sets] == [("ab", "cd"), ("xy",)]

    def test_clustering_rows(self, tmp_path):
        path = tmp_path / "c.csv"
        path.write_text("1,1,2\n1,2,2\n\n3,3,3\n0,1,2\n", encoding="utf-8")
        sets = parse_dataset(path, "clustering")
        assert len(sets) == 2
        assert sets[0].objects[0] == (1, 1, 2)

    def test_ranking_lines(self, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text("a>b=c>d\nb>a=c=d\n", encoding="utf-8")
        sets = parse_dataset(path, "ranking")
        assert sets[0].objects[0] == Ranking.parse("a>b=c>d")
        assert sets[0].objects[0].buckets == (("a",), ("b", "c"), ("d",))

    def test_malformed_line_reports_position(self, tmp_path):
        path = tmp_path / "c.csv"
        path.write_text("1,1,2\n1,x,2\n", encoding="utf-8")
        with pytest.raises(DataFormatError, match=r"c\.csv:2"):
            parse_dataset(path, "clustering")

    def test_round_trip(self, tmp_path):
        sets = [[(1, 1, 2), (1, 2, 2)], [(0, 0, 0)]]
        path = tmp_path / "out.csv"
        write_dataset(path, "clustering", sets, {"seed": 1})
        parsed = parse_dataset(path, "clustering")
        assert [list(s.objects) for s in parsed] == sets
        assert (tmp_path / "out.csv.meta.json").exists()

    def test_generated_sets_round_trip_all_domains(self, tmp_path):
        from kernmedian.datagen import gen_clusterings, gen_rankings, gen_strings

        cases = [
            ("string", [gen_strings(1, 5, (4, 9))], tmp_path / "s.txt"),
            ("clustering", [gen_clusterings(2, 5, 8)], tmp_path / "c.csv"),
            ("ranking", [gen_rankings(3, 5, 6, tie_prob=0.4)], tmp_path / "r.txt"),
        ]
        for domain, sets, path in cases:
            write_dataset(path, domain, sets)
            parsed = parse_dataset(path, domain)
            assert [list(s.objects) for s in parsed] == [list(s) for s in sets]


class TestMedianCommand:
    def test_two_string_set(self, string_file, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main([
            "median", "--domain", "string", "--input", str(string_file),
            "--kernel", "lin", "--reconstruct", "lin-rec", "--search",
            "--output", str(out),
        ])
        assert code == 0
        report = json.loads(out.read_text())
        assert len(report["runs"]) == 1
        row = report["runs"][0]
        assert row["sod"] == 4.0
        assert row["lower_bound"] == 4.0
        assert row["normalized_sod"] == 0.0
        assert row["kernel"] == "lin"

    def test_csv_report(self, string_file, tmp_path):
        out = tmp_path / "report.csv"
        code = main([
            "median", "--domain", "string", "--input", str(string_file),
            "--format", "csv", "--output", str(out),
        ])
        assert code == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 1
        assert float(rows[0]["sod"]) == 4.0

    def test_sod_reproducible_from_serialized_median(self, tmp_path):
        from kernmedian.datagen import gen_strings
        from kernmedian.domains.strings import levenshtein

        data = tmp_path / "data.txt"
        words = gen_strings(5, 8, (8, 14), perturb_rate=0.2, mode="perturbed")
        data.write_text("".join(w + "\n" for w in words), encoding="utf-8")
        out = tmp_path / "report.json"
        assert main(["median", "--domain", "string", "--input", str(data),
                     "--output", str(out)]) == 0
        row = json.loads(out.read_text())["runs"][0]
        recomputed = sum(levenshtein(w, row["median"]) for w in words)
        assert recomputed == row["sod"]

    def test_reports_identical_modulo_runtime(self, string_file, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        args = ["median", "--domain", "string", "--input", str(string_file), "--seed", "3"]
        assert main(args + ["--output", str(a)]) == 0
        assert main(args + ["--output", str(b)]) == 0
        ra = json.loads(a.read_text())
        rb = json.loads(b.read_text())
        for row in ra["runs"] + rb["runs"]:
            row["runtime_ms"] = 0.0
        assert ra == rb


class TestOtherCommands:
    def test_eval_baseline(self, string_file, tmp_path):
        out = tmp_path / "eval.json"
        assert main(["eval", "--domain", "string", "--input", str(string_file),
                     "--output", str(out)]) == 0
        row = json.loads(out.read_text())["runs"][0]
        assert row["reconstruction"] == "set-median"
        assert row["sod"] == 4.0

    def test_distortion_lin_all_ones(self, tmp_path):
        data = tmp_path / "d.txt"
        data.write_text("abcd\nacbd\nabdc\nabce\n", encoding="utf-8")
        out = tmp_path / "dist.json"
        assert main(["distortion", "--domain", "string", "--input", str(data),
                     "--kernel", "lin", "--output", str(out)]) == 0
        row = json.loads(out.read_text())["runs"][0]
        assert row["ratio_mean"] == 1.0
        assert row["ratio_std"] == 0.0
        assert row["ncc"] == 1.0

    def test_convergence_summary(self, tmp_path):
        data = tmp_path / "c.csv"
        from kernmedian.datagen import gen_clusterings

        sets = [gen_clusterings(s, 8, 12) for s in range(3)]
        write_dataset(data, "clustering", sets)
        out = tmp_path / "conv.json"
        assert main(["convergence", "--domain", "clustering", "--input", str(data),
                     "--kernel", "partition", "--output", str(out)]) == 0
        report = json.loads(out.read_text())
        assert len(report["runs"]) == 3
        assert report["summary"]["complex_weight_count"] == 0
        assert report["summary"]["max_iter"] <= 200

    def test_gen_deterministic(self, tmp_path):
        out1 = tmp_path / "g1.txt"
        out2 = tmp_path / "g2.txt"
        base = ["gen", "--domain", "ranking", "--seed", "7", "--count", "6", "--m", "5"]
        assert main(base + ["--output", str(out1)]) == 0
        assert main(base + ["--output", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        meta = json.loads((tmp_path / "g1.txt.meta.json").read_text())
        assert meta["generator"] == "numpy-pcg64"

    def test_gen_string_directory(self, tmp_path):
        out = tmp_path / "sets"
        assert main(["gen", "--domain", "string", "--seed", "1", "--sets", "3",
                     "--count", "4", "--len-range", "5", "8",
                     "--output", str(out)]) == 0
        files = sorted(out.glob("*.txt"))
        assert len(files) == 3
        parsed = parse_dataset(out, "string")
        assert len(parsed) == 3


class TestExitCodes:
    def test_usage_error(self):
        assert main(["median", "--domain", "nowhere"]) == 1

    def test_kernel_domain_mismatch(self, string_file):
        assert main(["median", "--domain", "string", "--input", str(string_file),
                     "--kernel", "partition"]) == 1

    def test_kendall_with_ties_rejected(self, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text("a>b=c\nb>a=c\n", encoding="utf-8")
        assert main(["median", "--domain", "ranking", "--input", str(path),
                     "--kernel", "kendall"]) == 1

    def test_missing_input(self, tmp_path):
        assert main(["median", "--domain", "string",
                     "--input", str(tmp_path / "nope.txt")]) == 2

    def test_malformed_data(self, tmp_path):
        path = tmp_path / "c.csv"
        path.write_text("1,oops\n", encoding="utf-8")
        assert main(["median", "--domain", "clustering", "--input", str(path)]) == 2
