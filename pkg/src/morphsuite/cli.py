"""Command-line entry point.

Subcommands: gen-nonce, build-suite, render, evaluate, score, kappa, report.
Exit codes: 0 success, 1 validation/usage error, 2 transport error. All
diagnostics go to stderr; data lands in files only. Every run writes a
manifest next to its output so it can be reproduced byte for byte.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from morphsuite import __version__, client, derive, metrics, nonce, prompts, suite
from morphsuite.errors import (
    AuthError,
    LengthMismatch,
    MorphSuiteError,
    RateLimited,
    SchemaError,
    TransportError,
    UsageError,
)
from morphsuite.jsonl import read_jsonl, write_json, write_jsonl
from morphsuite.rng import derive_seed

# Answer-normalization rules recorded in evaluate manifests so reported
# scores stay auditable.
_NORMALIZATION_NOTE = {
    "productivity": "last <Answer> tag else last nonempty line; text after last "
    "colon; surrounding quotes/punctuation stripped; NFC; profile case fold",
    "systematicity": "last <Answer> tag else last nonempty line; accepted tokens "
    "yes/no/evet/hayır/kyllä/ei (case-insensitive); anything else is a parse "
    "failure and scores as wrong",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _eprint(*parts):
    print(*parts, file=sys.stderr)


def resolve_input(path: str) -> Path:
    """Resolve an input path; bundled:<name> maps to packaged corpora."""
    if path.startswith("bundled:"):
        import tempfile
        from importlib import resources

        name = path.removeprefix("bundled:")
        ref = resources.files("morphsuite").joinpath(f"data/corpora/{name}.jsonl")
        concrete = Path(str(ref))
        if concrete.is_file():
            return concrete
        # zip-installed package: materialize a stable copy
        tmp = Path(tempfile.gettempdir()) / f"morphsuite-{name}.jsonl"
        tmp.write_bytes(ref.read_bytes())
        return tmp
    return Path(path)


def _ingest_or_die(path) -> list:
    result = suite.ingest(path)
    for issue in result.issues:
        _eprint(f"reject line {issue.lineno} ({issue.record_id}): {issue.error}: {issue.message}")
    if not result.records:
        raise SchemaError(f"no valid records in {path}")
    return result.records


def _parse_strata(spec: str) -> list[int]:
    if "-" in spec:
        lo, hi = spec.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in spec.split(",")]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gen_nonce(args) -> int:
    in_path = resolve_input(args.input)
    profile = suite.profile_for(args.lang)
    records = [r for r in _ingest_or_die(in_path) if r.language_id == args.lang]
    if not records:
        raise SchemaError(f"no {args.lang} records in {in_path}")

    lexicon = None
    if args.lexicon:
        lexicon = nonce.load_lexicon(args.lexicon, profile)

    rows = []
    skipped = []
    for record in records:
        try:
            mapping = nonce.make_nonce(
                record.root, profile, lexicon, seed=derive_seed(args.seed, record.record_id)
            )
        except MorphSuiteError as exc:
            skipped.append(record.record_id)
            _eprint(f"skip {record.record_id}: {type(exc).__name__}: {exc}")
            continue
        record.nonce_root = mapping.nonce_root
        rows.append(suite.record_to_row(record))
    write_jsonl(args.out, rows)
    manifest = {
        "command": "gen-nonce",
        "version": __version__,
        "language": args.lang,
        "seed": args.seed,
        "input": str(in_path),
        "input_digest": suite.file_digest(in_path),
        "lexicon": (
            {"path": args.lexicon, "words": len(lexicon)}
            if lexicon is not None
            else "NONE: collision check degrades to nonce != original"
        ),
        "retry_limit": nonce.RETRY_LIMIT,
        "skipped_records": skipped,
        "written": len(rows),
    }
    write_json(str(args.out) + ".manifest.json", manifest)
    _eprint(f"gen-nonce: wrote {len(rows)} records, skipped {len(skipped)}")
    return 0


def cmd_build_suite(args) -> int:
    in_path = resolve_input(args.input)
    records = _ingest_or_die(in_path)
    languages = {r.language_id for r in records}
    if len(languages) > 1:
        raise SchemaError(f"input mixes languages {sorted(languages)}; split first")

    sampling = None
    if args.per_stratum:
        strata = _parse_strata(args.strata) if args.strata else sorted(
            {r.morpheme_count for r in records}
        )
        sample = suite.stratified_sample(records, args.per_stratum, strata, args.seed)
        records = sample.records
        sampling = {
            "per_stratum": args.per_stratum,
            "strata": strata,
            "achieved": {str(k): v for k, v in sample.achieved.items()},
            "deficits": {str(k): v for k, v in sample.deficits.items()},
        }
        for stratum, short in sample.deficits.items():
            _eprint(f"stratum {stratum}: short {short} records")

    instances, manifest = suite.build_suite(
        records,
        args.task,
        args.dist,
        context=args.context,
        order_mode=args.order,
        strategy=args.strategy,
        k=args.k,
        seed=args.seed,
        demo_fraction=args.demo_fraction,
    )
    for warning in manifest["warnings"]:
        _eprint(f"warning: {warning}")
    suite.write_suite(args.out, instances)
    manifest.update(
        {
            "command": "build-suite",
            "version": __version__,
            "language": languages.pop(),
            "input": str(in_path),
            "input_digest": suite.file_digest(in_path),
            "sampling": sampling,
            "output": str(args.out),
        }
    )
    write_json(args.manifest or str(args.out) + ".manifest.json", manifest)
    _eprint(f"build-suite: wrote {len(instances)} instances")
    return 0


def cmd_render(args) -> int:
    instances = suite.read_suite(args.suite)
    catalog = prompts.load_templates(args.templates)
    if catalog.missing and args.templates is not None:
        for key in catalog.missing:
            _eprint(f"missing template for {key}")
    rows = prompts.render_suite(
        instances, catalog, args.lang, args.variant, args.shots, args.seed
    )
    write_jsonl(args.out, rows)
    manifest = {
        "command": "render",
        "version": __version__,
        "suite": str(args.suite),
        "suite_digest": suite.file_digest(args.suite),
        "templates": args.templates or "bundled",
        "instruction_language": args.lang,
        "variant": args.variant,
        "shots": args.shots,
        "seed": args.seed,
        "prompts": len(rows),
    }
    write_json(str(args.out) + ".manifest.json", manifest)
    _eprint(f"render: wrote {len(rows)} prompts")
    return 0


def cmd_evaluate(args) -> int:
    cfg = client.ModelConfig.from_file(args.model_config)
    if args.parallelism:
        cfg.parallelism = args.parallelism
    cache = client.ResponseCache(args.cache) if args.cache else None
    rows = [row for _, row in read_jsonl(args.prompts)]
    records = client.evaluate_rows(rows, cfg, cache)
    write_jsonl(args.out, (r.to_row() for r in records))
    n_cached = sum(1 for r in records if r.cached)
    n_failed = sum(1 for r in records if r.parsed_kind == client.PARSE_FAILURE)
    manifest = {
        "command": "evaluate",
        "version": __version__,
        "prompts": str(args.prompts),
        "prompts_digest": suite.file_digest(args.prompts),
        "model": {
            "endpoint_url": cfg.endpoint_url,
            "model_name": cfg.model_name,
            "temperature": cfg.temperature,
            "top_p": cfg.top_p,
            "max_tokens": cfg.max_tokens,
            "auth_token_env": cfg.auth_token_env,
        },
        "answer_normalization": _NORMALIZATION_NOTE,
        "records": len(records),
        "cached": n_cached,
        "parse_failures": n_failed,
    }
    write_json(str(args.out) + ".manifest.json", manifest)
    _eprint(f"evaluate: {len(records)} records ({n_cached} cached, {n_failed} parse failures)")
    return 0


def cmd_score(args) -> int:
    records = [client.EvalRecord.from_row(row) for _, row in read_jsonl(args.records)]
    instances = suite.read_suite(args.suite)
    manifest = {
        "records": str(args.records),
        "records_digest": suite.file_digest(args.records),
        "suite": str(args.suite),
        "suite_digest": suite.file_digest(args.suite),
        "version": __version__,
    }
    report = metrics.stratify_report(records, instances, manifest)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_json(out_dir / "report.json", report.to_dict())
    (out_dir / "report.csv").write_text(report.to_csv(), encoding="utf-8")
    (out_dir / "report.txt").write_text(report.to_text(), encoding="utf-8")
    _eprint(f"score: wrote report.{{json,csv,txt}} to {out_dir}")
    return 0


def _read_labels(path):
    ids = []
    labels = []
    for lineno, row in read_jsonl(path):
        if "label" not in row:
            raise SchemaError(f"{path}:{lineno}: rows need a 'label' field")
        labels.append(row["label"])
        ids.append(row.get("instance_id"))
    return ids, labels


def cmd_kappa(args) -> int:
    ids_a, labels_a = _read_labels(args.a)
    ids_b, labels_b = _read_labels(args.b)
    if all(ids_a) and all(ids_b):
        by_a = dict(zip(ids_a, labels_a))
        by_b = dict(zip(ids_b, labels_b))
        if set(by_a) != set(by_b):
            raise LengthMismatch("annotation files cover different instance ids")
        keys = sorted(by_a)
        labels_a = [by_a[k] for k in keys]
        labels_b = [by_b[k] for k in keys]
    value = metrics.cohens_kappa(labels_a, labels_b)
    print(f"{value:.6f}")
    return 0


def cmd_report(args) -> int:
    with open(args.config, encoding="utf-8") as f:
        cfg = json.load(f)

    out_dir = Path(cfg.get("out_dir") or args.out_dir or "morphsuite-run")
    seed = cfg.get("seed", 0)
    language = cfg["language"]
    in_path = resolve_input(cfg["input"])
    records = [r for r in _ingest_or_die(in_path) if r.language_id == language]

    distributions = cfg.get("distributions", list(suite.DISTRIBUTIONS))
    if suite.OUT_DIST in distributions and any(not r.nonce_root for r in records):
        profile = suite.profile_for(language)
        lexicon = None
        if cfg.get("lexicon"):
            lexicon = nonce.load_lexicon(cfg["lexicon"], profile)
        kept = []
        for record in records:
            try:
                record.nonce_root = nonce.make_nonce(
                    record.root, profile, lexicon, seed=derive_seed(seed, record.record_id)
                ).nonce_root
                kept.append(record)
            except MorphSuiteError as exc:
                _eprint(f"skip {record.record_id}: {exc}")
        records = kept

    model_cfg = cfg["model_config"]
    if isinstance(model_cfg, str):
        model = client.ModelConfig.from_file(model_cfg)
    else:
        model = client.ModelConfig(**model_cfg)
    cache = client.ResponseCache(cfg.get("cache") or out_dir / "cache")
    catalog = prompts.load_templates(cfg.get("templates"))

    summary = {}
    for task in cfg.get("tasks", list(suite.TASKS)):
        for dist in distributions:
            cell_dir = out_dir / f"{task}_{dist}"
            cell_dir.mkdir(parents=True, exist_ok=True)
            instances, manifest = suite.build_suite(
                records,
                task,
                dist,
                context=cfg.get("context", False),
                order_mode=cfg.get("order_mode", suite.SHUFFLED),
                strategy=cfg.get("strategy", derive.LANG_AGNOSTIC),
                k=cfg.get("k"),
                seed=seed,
                demo_fraction=cfg.get("demo_fraction", 0.1),
            )
            suite.write_suite(cell_dir / "suite.jsonl", instances)
            write_json(cell_dir / "suite.jsonl.manifest.json", manifest)
            rows = prompts.render_suite(
                instances,
                catalog,
                cfg.get("instruction_language", prompts.ENGLISH),
                cfg.get("variant", prompts.STANDARD),
                cfg.get("shots", 5),
                seed,
            )
            write_jsonl(cell_dir / "prompts.jsonl", rows)
            eval_records = client.evaluate_rows(rows, model, cache)
            write_jsonl(cell_dir / "records.jsonl", (r.to_row() for r in eval_records))
            report = metrics.stratify_report(eval_records, instances, manifest)
            write_json(cell_dir / "report.json", report.to_dict())
            (cell_dir / "report.csv").write_text(report.to_csv(), encoding="utf-8")
            (cell_dir / "report.txt").write_text(report.to_text(), encoding="utf-8")
            summary[f"{task}_{dist}"] = {
                m: metrics.round1(v) for m, v in report.overall.items()
            }
            _eprint(f"report: {task}/{dist} -> {cell_dir}")

    run_manifest = {
        "command": "report",
        "version": __version__,
        "config": cfg,
        "input_digest": suite.file_digest(in_path),
        "summary": summary,
    }
    write_json(out_dir / "run.json", run_manifest)
    print(json.dumps(summary, ensure_ascii=False, sort_keys=True))
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="morphsuite", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-nonce", help="add nonce roots to a segmented corpus")
    p.add_argument("--lang", required=True, choices=["turkish", "finnish"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lexicon", help="word list; absent words are required for nonces")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_nonce)

    p = sub.add_parser("build-suite", help="build a task suite from segmented records")
    p.add_argument("--task", required=True, choices=list(suite.TASKS))
    p.add_argument("--dist", required=True, choices=list(suite.DISTRIBUTIONS))
    p.add_argument("--context", action="store_true")
    p.add_argument("--order", default=suite.SHUFFLED, choices=list(suite.ORDER_MODES))
    p.add_argument("--strategy", default=derive.LANG_AGNOSTIC, choices=list(derive.STRATEGIES))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--per-stratum", type=int, default=None)
    p.add_argument("--strata", default=None, help="e.g. 1-7 or 1,2,3")
    p.add_argument("--demo-fraction", type=float, default=0.1)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--manifest", default=None)
    p.set_defaults(func=cmd_build_suite)

    p = sub.add_parser("render", help="render few-shot prompts for a suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--templates", default=None, help="template dir (default: bundled)")
    p.add_argument("--lang", default=prompts.ENGLISH, choices=list(prompts.INSTRUCTION_LANGUAGES))
    p.add_argument("--variant", default=prompts.STANDARD, choices=list(prompts.VARIANTS))
    p.add_argument("--shots", type=int, default=5, choices=[1, 3, 5])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("evaluate", help="answer prompts with a model, baseline, or mock")
    p.add_argument("--prompts", required=True)
    p.add_argument("--model-config", required=True)
    p.add_argument("--cache", default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--parallelism", type=int, default=None)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("score", help="score evaluation records against a suite")
    p.add_argument("--records", required=True)
    p.add_argument("--suite", required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("kappa", help="Cohen's kappa between two annotation files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("report", help="run the full pipeline from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _eprint(f"usage error: {exc}")
        return 1
    try:
        return args.func(args) or 0
    except (TransportError, RateLimited, AuthError) as exc:
        _eprint(f"transport error: {exc}")
        return 2
    except MorphSuiteError as exc:
        _eprint(f"error: {type(exc).__name__}: {exc}")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
