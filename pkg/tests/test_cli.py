import json
from pathlib import Path

import pytest

from factory import synth_turkish_records
from morphsuite import cli
from morphsuite.jsonl import write_jsonl
from morphsuite.suite import record_to_row


def write_corpus(path, per_stratum=30, strata=(1, 2, 3), seed=61):
    records = synth_turkish_records(per_stratum, list(strata), seed=seed)
    write_jsonl(path, (record_to_row(r) for r in records))
    return records


def mock_config(path, endpoint="mock://echo-gold", **extra):
    cfg = {"endpoint_url": endpoint, "model_name": endpoint.split("//")[1]}
    cfg.update(extra)
    path.write_text(json.dumps(cfg), encoding="utf-8")
    return path


def run(argv):
    return cli.main(argv)


class TestUsage:
    def test_unknown_flag_exits_1(self, capsys):
        assert run(["build-suite", "--bogus"]) == 1
        assert "usage error" in capsys.readouterr().err

    def test_unknown_subcommand_exits_1(self):
        assert run(["frobnicate"]) == 1

    def test_missing_required_flag_exits_1(self):
        assert run(["score"]) == 1


class TestPipeline:
    @pytest.fixture()
    def workdir(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        return tmp_path

    def test_full_pipeline_echo_gold(self, workdir, capsys):
        write_corpus(Path("corpus.jsonl"))
        assert run([
            "gen-nonce", "--lang", "turkish", "--seed", "3",
            "--in", "corpus.jsonl", "--out", "nonced.jsonl",
        ]) == 0
        assert run([
            "build-suite", "--task", "systematicity", "--dist", "ood",
            "--strategy", "lang_agnostic", "--seed", "3",
            "--in", "nonced.jsonl", "--out", "suite.jsonl",
        ]) == 0
        assert run([
            "render", "--suite", "suite.jsonl", "--lang", "english",
            "--variant", "standard", "--shots", "1", "--seed", "3",
            "--out", "prompts.jsonl",
        ]) == 0
        mock_config(Path("model.json"))
        assert run([
            "evaluate", "--prompts", "prompts.jsonl", "--model-config", "model.json",
            "--cache", "cache", "--out", "records.jsonl",
        ]) == 0
        assert run([
            "score", "--records", "records.jsonl", "--suite", "suite.jsonl",
            "--out-dir", "report",
        ]) == 0
        report = json.loads(Path("report/report.json").read_text(encoding="utf-8"))
        assert report["overall"]["macro_f1"] == 100.0
        assert report["overall"]["coherence"] == 100.0
        assert Path("suite.jsonl.manifest.json").exists()
        assert Path("prompts.jsonl.manifest.json").exists()

    def test_gen_nonce_manifest_warns_without_lexicon(self, workdir):
        write_corpus(Path("corpus.jsonl"), per_stratum=3, strata=(2,))
        run([
            "gen-nonce", "--lang", "turkish", "--seed", "3",
            "--in", "corpus.jsonl", "--out", "nonced.jsonl",
        ])
        manifest = json.loads(Path("nonced.jsonl.manifest.json").read_text("utf-8"))
        assert "NONE" in manifest["lexicon"]

    def test_gen_nonce_with_lexicon(self, workdir):
        records = write_corpus(Path("corpus.jsonl"), per_stratum=3, strata=(2,))
        lex = Path("words.txt")
        lex.write_text("\n".join(r.root for r in records), encoding="utf-8")
        run([
            "gen-nonce", "--lang", "turkish", "--seed", "3", "--lexicon", "words.txt",
            "--in", "corpus.jsonl", "--out", "nonced.jsonl",
        ])
        manifest = json.loads(Path("nonced.jsonl.manifest.json").read_text("utf-8"))
        assert manifest["lexicon"]["words"] == len(records)

    def test_stratified_sampling_flags(self, workdir, capsys):
        write_corpus(Path("corpus.jsonl"), per_stratum=40, strata=(1, 2))
        assert run([
            "build-suite", "--task", "productivity", "--dist", "id",
            "--per-stratum", "20", "--strata", "1-2", "--seed", "1",
            "--in", "corpus.jsonl", "--out", "suite.jsonl",
        ]) == 0
        manifest = json.loads(Path("suite.jsonl.manifest.json").read_text("utf-8"))
        assert manifest["sampling"]["achieved"] == {"1": 20, "2": 20}
        rows = Path("suite.jsonl").read_text("utf-8").splitlines()
        assert len(rows) == 40

    def test_transport_error_exit_2(self, workdir):
        write_corpus(Path("corpus.jsonl"), per_stratum=12, strata=(2,))
        run([
            "build-suite", "--task", "productivity", "--dist", "id",
            "--seed", "1", "--in", "corpus.jsonl", "--out", "suite.jsonl",
        ])
        run([
            "render", "--suite", "suite.jsonl", "--shots", "1", "--seed", "1",
            "--out", "prompts.jsonl",
        ])
        mock_config(
            Path("model.json"),
            endpoint="http://127.0.0.1:9/unreachable",
            max_retries=0,
            timeout=2,
        )
        code = run([
            "evaluate", "--prompts", "prompts.jsonl", "--model-config", "model.json",
            "--out", "records.jsonl",
        ])
        assert code == 2

    def test_kappa_subcommand(self, workdir, capsys):
        write_jsonl("a.jsonl", [{"instance_id": f"i{k}", "label": "yes"} for k in range(6)])
        write_jsonl("b.jsonl", [{"instance_id": f"i{k}", "label": "yes"} for k in range(6)])
        assert run(["kappa", "--a", "a.jsonl", "--b", "b.jsonl"]) == 0
        assert capsys.readouterr().out.strip() == "1.000000"

    def test_report_subcommand_bundled_corpus(self, workdir, capsys):
        mock_config(Path("model.json"))
        config = {
            "language": "turkish",
            "seed": 11,
            "input": "bundled:turkish_demo",
            "out_dir": "run",
            "model_config": "model.json",
            "tasks": ["productivity"],
            "distributions": ["id"],
            "shots": 1,
        }
        Path("run.json").write_text(json.dumps(config), encoding="utf-8")
        assert run(["report", "--config", "run.json"]) == 0
        summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert summary["productivity_id"]["exact_match"] == 100.0
        assert Path("run/productivity_id/report.csv").exists()
        assert Path("run/run.json").exists()


class TestReproducibility:
    def test_same_seed_same_bytes(self, tmp_path, monkeypatch):
        corpus = tmp_path / "corpus.jsonl"
        write_corpus(corpus, per_stratum=20, strata=(1, 2, 3))
        outputs = {}
        for name in ("run1", "run2"):
            base = tmp_path / name
            base.mkdir()
            monkeypatch.chdir(base)
            (base / "corpus.jsonl").write_bytes(corpus.read_bytes())
            mock_config(Path("model.json"))
            for argv in (
                ["gen-nonce", "--lang", "turkish", "--seed", "9",
                 "--in", "corpus.jsonl", "--out", "nonced.jsonl"],
                ["build-suite", "--task", "systematicity", "--dist", "ood",
                 "--seed", "9", "--in", "nonced.jsonl", "--out", "suite.jsonl"],
                ["render", "--suite", "suite.jsonl", "--shots", "1", "--seed", "9",
                 "--out", "prompts.jsonl"],
                ["evaluate", "--prompts", "prompts.jsonl", "--model-config",
                 "model.json", "--cache", "cache", "--out", "records.jsonl"],
                ["score", "--records", "records.jsonl", "--suite", "suite.jsonl",
                 "--out-dir", "report"],
            ):
                assert run(argv) == 0
            outputs[name] = {
                rel: (base / rel).read_bytes()
                for rel in (
                    "nonced.jsonl", "suite.jsonl", "prompts.jsonl", "records.jsonl",
                    "report/report.json", "report/report.csv", "report/report.txt",
                )
            }
        assert outputs["run1"] == outputs["run2"]
