"""Command-line entry point tying the pipeline together.

Exit codes: 0 success, 1 usage or I/O failure, 2 validation violations,
3 generation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import costmodel
from .diagnostics import Diagnostic
from .featmodel import (
    Configuration, ModelParseError, SearchSpaceTooLarge, check_configuration,
    count_configurations, parse_model, serialize_model,
)
from .generator import GenerationError, generate_primer, write_bundle
from .idinstance import (
    EmptyWordError, InstanceParseError, decompose_word, parse_instance,
    validate_instance,
)
from .idspec import (
    DerivationError, IdSpecification, SpecError, derive_specification,
    generate_editor_schema, preset_specification,
)

OK = 0
USAGE_OR_IO = 1
VALIDATION = 2
GENERATION = 3


class CliError(Exception):
    def __init__(self, status: int, message: str,
                 diagnostics: list[Diagnostic] | None = None):
        super().__init__(message)
        self.status = status
        self.diagnostics = diagnostics or []


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(USAGE_OR_IO, message)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(USAGE_OR_IO, f"cannot read {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(USAGE_OR_IO, f"cannot write {path}: {exc}") from exc


def _load_model(path: str):
    try:
        return parse_model(_read(path))
    except ModelParseError as exc:
        raise CliError(VALIDATION, f"feature model {path} has errors",
                       exc.diagnostics) from exc


def _load_config(path: str) -> Configuration:
    try:
        return Configuration.from_dict(json.loads(_read(path)))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CliError(USAGE_OR_IO, f"cannot parse configuration {path}: {exc}") from exc


def _load_spec(path: str) -> IdSpecification:
    try:
        return IdSpecification.from_json(_read(path))
    except (json.JSONDecodeError, KeyError, SpecError) as exc:
        raise CliError(USAGE_OR_IO, f"cannot parse specification {path}: {exc}") from exc


def _load_instance(path: str):
    try:
        return parse_instance(_read(path))
    except InstanceParseError as exc:
        raise CliError(VALIDATION, f"instance {path} has errors",
                       exc.diagnostics) from exc


# --- subcommand handlers (return (status, result, diagnostics)) ------------

def _cmd_model_check(args):
    model = _load_model(args.model)
    return OK, {"features": len(model.features()), "model": model.name,
                "canonical": serialize_model(model)}, []


def _cmd_model_count(args):
    model = _load_model(args.model)
    try:
        count = count_configurations(model, args.clone_cap)
    except SearchSpaceTooLarge as exc:
        raise CliError(VALIDATION, str(exc)) from exc
    return OK, {"clone_cap": args.clone_cap, "count": count,
                "model": model.name}, []


def _cmd_config_check(args):
    model = _load_model(args.model)
    config = _load_config(args.config)
    report = check_configuration(model, config)
    status = OK if report.valid else VALIDATION
    return status, {"model": model.name, "valid": report.valid}, report.diagnostics


def _cmd_spec_derive(args):
    model = _load_model(args.model)
    config = _load_config(args.config)
    try:
        spec = derive_specification(model, config)
    except DerivationError as exc:
        status = VALIDATION if exc.code == "INVALID_CONFIG" else USAGE_OR_IO
        raise CliError(status, str(exc), exc.diagnostics) from exc
    _write(args.output, spec.to_json())
    return OK, {"output": args.output, "spec": spec.to_dict()}, []


def _cmd_spec_preset(args):
    spec = preset_specification(args.number)
    _write(args.output, spec.to_json())
    return OK, {"output": args.output, "spec": spec.to_dict()}, []


def _cmd_editor_schema(args):
    spec = _load_spec(args.spec)
    schema = generate_editor_schema(spec)
    _write(args.output, schema.to_json())
    return OK, {"output": args.output, "sections": len(schema.sections)}, []


def _cmd_instance_validate(args):
    spec = _load_spec(args.spec)
    instance = _load_instance(args.instance)
    diags = validate_instance(instance, spec, base_dir=args.assets)
    errors = [d for d in diags if d.severity == "error"]
    status = VALIDATION if errors else OK
    return status, {"errors": len(errors), "lessons": len(instance.lessons),
                    "valid": not errors,
                    "warnings": len(diags) - len(errors)}, diags


def _cmd_primer_build(args):
    spec = _load_spec(args.spec)
    instance = _load_instance(args.instance)
    diags = validate_instance(instance, spec, base_dir=args.assets)
    errors = [d for d in diags if d.severity == "error"]
    if errors:
        raise CliError(VALIDATION, "instance has validation errors", diags)
    try:
        bundle = generate_primer(instance, spec, assets_dir=args.assets)
        files = write_bundle(bundle, args.output)
    except GenerationError as exc:
        raise CliError(GENERATION, str(exc), exc.diagnostics) from exc
    except OSError as exc:
        raise CliError(USAGE_OR_IO, f"cannot write bundle: {exc}") from exc
    return OK, {"files": files, "lessons": len(bundle.timelines),
                "output": args.output}, diags


def _cmd_cost_report(args):
    try:
        inputs = costmodel.CostInputs(
            c_org=args.org, c_cab=args.cab, c_unique=args.unique,
            c_reuse=args.reuse, c_product=args.product, n=args.n)
        report = costmodel.build_report(inputs, n_max=args.curve)
    except costmodel.CostInputError as exc:
        raise CliError(USAGE_OR_IO, str(exc)) from exc
    if args.csv:
        _write(args.csv, costmodel.curve_csv(report.curve))
    return OK, report.to_dict(), []


def _cmd_word_decompose(args):
    taught = [t for t in args.taught.split(",") if t]
    if not args.word or not taught:
        raise CliError(USAGE_OR_IO, "word and --taught must be nonempty")
    try:
        parts = decompose_word(args.word, taught)
    except EmptyWordError as exc:
        raise CliError(USAGE_OR_IO, str(exc)) from exc
    if parts is None:
        raise CliError(VALIDATION,
                       f"no decomposition of {args.word!r} over taught facts")
    return OK, {"parts": parts, "taught": taught, "word": args.word}, []


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="primerline",
                             description="Instructional-design product-line toolchain")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="group", required=True)

    model = sub.add_parser("model", help="feature-model operations")
    model_sub = model.add_subparsers(dest="command", required=True)
    p = model_sub.add_parser("check", help="parse and well-formedness check")
    p.add_argument("model")
    p.set_defaults(handler=_cmd_model_check)
    p = model_sub.add_parser("count", help="count valid configurations")
    p.add_argument("model")
    p.add_argument("--clone-cap", type=int, default=3)
    p.set_defaults(handler=_cmd_model_count)

    config = sub.add_parser("config", help="configuration operations")
    config_sub = config.add_subparsers(dest="command", required=True)
    p = config_sub.add_parser("check", help="validate a configuration")
    p.add_argument("model")
    p.add_argument("config")
    p.set_defaults(handler=_cmd_config_check)

    spec = sub.add_parser("spec", help="specification operations")
    spec_sub = spec.add_subparsers(dest="command", required=True)
    p = spec_sub.add_parser("derive", help="derive a spec from a configuration")
    p.add_argument("model")
    p.add_argument("config")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_spec_derive)
    p = spec_sub.add_parser("preset", help="emit one of the four preset specs")
    p.add_argument("number", type=int, choices=(1, 2, 3, 4))
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_spec_preset)

    editor = sub.add_parser("editor", help="editor-schema operations")
    editor_sub = editor.add_subparsers(dest="command", required=True)
    p = editor_sub.add_parser("schema", help="generate a form schema")
    p.add_argument("spec")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_editor_schema)

    instance = sub.add_parser("instance", help="instance-document operations")
    instance_sub = instance.add_subparsers(dest="command", required=True)
    p = instance_sub.add_parser("validate", help="validate an instance")
    p.add_argument("spec")
    p.add_argument("instance")
    p.add_argument("--assets")
    p.set_defaults(handler=_cmd_instance_validate)

    primer = sub.add_parser("primer", help="bundle generation")
    primer_sub = primer.add_subparsers(dest="command", required=True)
    p = primer_sub.add_parser("build", help="generate a primer bundle")
    p.add_argument("spec")
    p.add_argument("instance")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--assets")
    p.set_defaults(handler=_cmd_primer_build)

    cost = sub.add_parser("cost", help="product-line economics")
    cost_sub = cost.add_subparsers(dest="command", required=True)
    p = cost_sub.add_parser("report", help="SIMPLE cost report")
    p.add_argument("--org", type=int, required=True, help="person-weeks")
    p.add_argument("--cab", type=int, required=True, help="person-weeks")
    p.add_argument("--unique", type=int, required=True, help="pw per product")
    p.add_argument("--reuse", type=int, required=True, help="pw per product")
    p.add_argument("--product", type=int, required=True, help="pw per product")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--curve", type=int)
    p.add_argument("--csv")
    p.set_defaults(handler=_cmd_cost_report)

    word = sub.add_parser("word", help="syllable decomposition")
    word_sub = word.add_subparsers(dest="command", required=True)
    p = word_sub.add_parser("decompose", help="segment a word into taught facts")
    p.add_argument("word")
    p.add_argument("--taught", required=True,
                   help="comma-separated taught fact texts in teaching order")
    p.set_defaults(handler=_cmd_word_decompose)

    return parser


def _print_text(result: dict, diagnostics: list[Diagnostic],
                out, err) -> None:
    for diag in diagnostics:
        print(str(diag), file=err)
    for key in sorted(result):
        value = result[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, ensure_ascii=False)
        print(f"{key}: {value}", file=out)


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    fmt = "text"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        status, result, diagnostics = args.handler(args)
    except CliError as exc:
        payload = {"error": str(exc)}
        if fmt == "json":
            doc = {"diagnostics": [str(d) for d in exc.diagnostics],
                   "result": payload, "status": exc.status}
            print(json.dumps(doc, sort_keys=True, ensure_ascii=False), file=out)
        else:
            for diag in exc.diagnostics:
                print(str(diag), file=err)
            print(f"error: {exc}", file=err)
        return exc.status

    if fmt == "json":
        doc = {"diagnostics": [str(d) for d in diagnostics],
               "result": result, "status": status}
        print(json.dumps(doc, sort_keys=True, ensure_ascii=False), file=out)
    else:
        _print_text(result, diagnostics, out, err)
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
