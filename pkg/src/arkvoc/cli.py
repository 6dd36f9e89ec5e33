"""Command-line entry point.

One subcommand per workflow: mint, parse, check, registry lookup,
vocab load/export, publish, verify, serve, trace, index, drift.
Machine-readable results go to stdout, diagnostics to stderr; exit
status is 0 on success, 1 on a domain error, 2 on a usage error.

Every state-touching subcommand takes explicit paths; nothing is read
from or written to hidden per-user locations.
"""

import argparse
import json
import sys

from arkvoc import anvl, core, indexer, minter, publisher, registry as registry_mod
from arkvoc import resolver, vocab as vocab_mod
from arkvoc.errors import ArkvocError


def _print(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


def _load_document(path: str):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _minter_from_args(args) -> object:
    if getattr(args, "minter_state", None):
        return minter.load_state(args.minter_state)
    if getattr(args, "template", None):
        return minter.new_state(args.template, prefix=args.prefix,
                                mode=args.mode, seed=args.seed)
    return None


def _save_minter(args, state) -> None:
    if getattr(args, "minter_state", None) and state is not None:
        minter.save_state(state, args.minter_state)


def _load_vocab(path: str, args=None):
    state = _minter_from_args(args) if args is not None else None
    result = vocab_mod.load_vocabulary(_load_document(path), state)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if args is not None:
        _save_minter(args, result.minter_state)
    return result


def _add_minter_flags(p, with_state=True):
    if with_state:
        p.add_argument("--minter-state", help="minter state file for terms lacking names")
    p.add_argument("--template", help="minter template over d/e/k, e.g. eedddddk")
    p.add_argument("--prefix", default="", help="prefix for check-character computation")
    p.add_argument("--mode", default="sequential", choices=sorted(minter.MODES))
    p.add_argument("--seed", type=int, default=0, help="quasi-random offset seed")


def cmd_parse(args) -> int:
    ark = core.parse(args.ark)
    shoulder = core.split_shoulder(ark.assigned_name)
    if args.format == "json":
        _print(json.dumps({
            "ark": core.canonical_string(ark),
            "naan": ark.naan,
            "name": ark.assigned_name,
            "shoulder": shoulder.shoulder,
            "blade": shoulder.blade,
            "qualifiers": list(ark.qualifiers),
            "inflection": ark.inflection.name.lower(),
        }, indent=2))
        return 0
    pairs = [
        ("ark", core.canonical_string(ark)),
        ("naan", ark.naan),
        ("name", ark.assigned_name),
        ("shoulder", shoulder.shoulder),
        ("blade", shoulder.blade),
    ]
    pairs.extend(("qualifier", q) for q in ark.qualifiers)
    pairs.append(("inflection", ark.inflection.name.lower()))
    _print(anvl.format_record(pairs))
    return 0


def cmd_check(args) -> int:
    if args.verify:
        if core.verify_check(args.string):
            _print("valid")
            return 0
        print(f"error: check character mismatch in {args.string!r}", file=sys.stderr)
        return 1
    _print(core.check_char(args.string))
    return 0


def cmd_mint(args) -> int:
    if args.minter_state:
        try:
            state = minter.load_state(args.minter_state)
        except ArkvocError as exc:
            if exc.code != "missing-state-file" or not args.template:
                raise
            state = minter.new_state(args.template, prefix=args.prefix,
                                     mode=args.mode, seed=args.seed)
    elif args.template:
        state = minter.new_state(args.template, prefix=args.prefix,
                                 mode=args.mode, seed=args.seed)
    else:
        state = minter.new_state(minter.DEFAULT_TEMPLATE, prefix=args.prefix,
                                 mode=args.mode, seed=args.seed)
    names = []
    for _ in range(args.count):
        name, state = minter.mint(state)
        names.append(state.prefix + name if args.full else name)
    _save_minter(args, state)
    _print("\n".join(names))
    return 0


def cmd_registry_lookup(args) -> int:
    with open(args.registry, encoding="utf-8") as handle:
        reg = registry_mod.parse_registry(handle.read())
    record = registry_mod.lookup(reg, args.naan)
    shared = registry_mod.classify_shared(args.naan)
    if record is None:
        print(f"error: not-found: naan {args.naan} (class: {shared.value})", file=sys.stderr)
        return 1
    pairs = [("naan", record.naan), ("class", shared.value)]
    for key in ("who", "where", "when", "commitment"):
        value = getattr(record, key)
        if value:
            pairs.append((key, value))
    _print(anvl.format_record(pairs))
    return 0


def cmd_vocab_load(args) -> int:
    state = _minter_from_args(args)
    document = _load_document(args.input)
    result = vocab_mod.load_vocabulary(document, state)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    _save_minter(args, result.minter_state)
    _print(json.dumps(vocab_mod.document_with_names(document, result), indent=2))
    return 0


def cmd_vocab_export(args) -> int:
    result = _load_vocab(args.input, args)
    sys.stdout.write(vocab_mod.linked_data(result.vocabulary, args.resolver_host))
    return 0


def cmd_publish(args) -> int:
    result = _load_vocab(args.input, args)
    manifest = publisher.publish(result.vocabulary, args.out, args.resolver_host)
    _print(publisher.format_manifest(manifest))
    return 0


def cmd_verify(args) -> int:
    result = _load_vocab(args.input, args)
    report = publisher.verify_published(result.vocabulary, args.out)
    _print(publisher.format_verify_report(report))
    return 0 if report.clean else 1


def _config_from_args(args) -> resolver.ResolverConfig:
    if args.config:
        return resolver.load_config(args.config)
    config = resolver.ResolverConfig()
    if args.listen:
        host, sep, port = args.listen.rpartition(":")
        if not sep:
            raise resolver.ResolveError("bad-config", f"--listen must be host:port, got {args.listen!r}")
        config.listen_host, config.listen_port = host, int(port)
    if args.hostname:
        config.public_hostname = args.hostname
    if args.registry:
        with open(args.registry, encoding="utf-8") as handle:
            config.registry = registry_mod.parse_registry(handle.read())
    commitment = ""
    if args.commitment_file:
        with open(args.commitment_file, encoding="utf-8") as handle:
            commitment = handle.read().strip()
    for spec in args.vocab or ():
        vocab_id, sep, path = spec.partition("=")
        if not sep:
            raise resolver.ResolveError("bad-config", f"--vocab expects <id>=<path>, got {spec!r}")
        config.vocabularies[vocab_id] = resolver.load_vocabulary_file(path).vocabulary
    for spec in args.route or ():
        key, sep, vocab_id = spec.partition("=")
        if not sep:
            raise resolver.ResolveError("bad-config", f"--route expects <naan>/<name>=<vocab-id>, got {spec!r}")
        naan, _, assigned = key.partition("/")
        config.add_route(resolver.HostedRoute(naan=naan, assigned_name=assigned,
                                              vocab_id=vocab_id, commitment=commitment))
    return config


def cmd_serve(args) -> int:
    resolver.serve(_config_from_args(args))
    return 0


def cmd_trace(args) -> int:
    config = _config_from_args(args)
    hops = resolver.resolve_chain(args.ark, config)
    _print("\n".join(hops))
    return 0


def cmd_index(args) -> int:
    with open(args.text, encoding="utf-8") as handle:
        text = handle.read()
    vocabularies = [_load_vocab(path).vocabulary for path in args.input]
    results = indexer.index(text, vocabularies, max_n=args.max_n,
                            top_k=args.top_k, doc_id=args.doc_id)
    if args.format == "json":
        sys.stdout.write(indexer.format_matches_json(results))
    else:
        sys.stdout.write(indexer.format_matches_lines(results))
    return 0


def cmd_drift(args) -> int:
    with open(args.text, encoding="utf-8") as handle:
        text = handle.read()
    vocab_a = _load_vocab(args.vocab_a).vocabulary
    vocab_b = _load_vocab(args.vocab_b).vocabulary
    result_a, result_b = indexer.index(text, [vocab_a, vocab_b], max_n=args.max_n)
    if args.mode == "exclusive":
        report = indexer.drift_exclusive(result_a, result_b)
    else:
        report = indexer.drift_vocab_absence(result_a, vocab_b)
    _print(indexer.format_drift_anvl(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arkvoc",
                                     description="ARK identifier and vocabulary toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse an ARK and print its fields")
    p.add_argument("ark")
    p.add_argument("--format", choices=("anvl", "json"), default="anvl")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("check", help="compute or verify a check character")
    p.add_argument("string")
    p.add_argument("--verify", action="store_true",
                   help="treat the last character as a check character and verify it")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mint", help="mint names from a template")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--full", action="store_true", help="print prefix+name instead of the bare name")
    _add_minter_flags(p)
    p.set_defaults(func=cmd_mint)

    p = sub.add_parser("registry", help="NAAN registry operations")
    rsub = p.add_subparsers(dest="registry_command", required=True)
    rl = rsub.add_parser("lookup", help="look up one NAAN")
    rl.add_argument("naan")
    rl.add_argument("--registry", required=True, help="registry file path")
    rl.set_defaults(func=cmd_registry_lookup)

    p = sub.add_parser("vocab", help="vocabulary operations")
    vsub = p.add_subparsers(dest="vocab_command", required=True)
    vl = vsub.add_parser("load", help="load, validate, and print the document with names filled")
    vl.add_argument("--input", required=True, help="vocabulary JSON document")
    _add_minter_flags(vl)
    vl.set_defaults(func=cmd_vocab_load)
    ve = vsub.add_parser("export", help="print the N-Triples export")
    ve.add_argument("--input", required=True)
    ve.add_argument("--resolver-host", default=vocab_mod.DEFAULT_RESOLVER_HOST)
    _add_minter_flags(ve)
    ve.set_defaults(func=cmd_vocab_export)

    p = sub.add_parser("publish", help="write the static page tree for a vocabulary")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--resolver-host", default=vocab_mod.DEFAULT_RESOLVER_HOST)
    _add_minter_flags(p)
    p.set_defaults(func=cmd_publish)

    p = sub.add_parser("verify", help="check a published tree against its manifest")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    _add_minter_flags(p)
    p.set_defaults(func=cmd_verify)

    def add_server_flags(sp):
        sp.add_argument("--config", help="ANVL resolver config file")
        sp.add_argument("--listen", help="host:port")
        sp.add_argument("--hostname", help="public hostname used in emitted URIs")
        sp.add_argument("--registry", help="NAAN registry file")
        sp.add_argument("--vocab", action="append", metavar="ID=PATH")
        sp.add_argument("--route", action="append", metavar="NAAN/NAME=ID")
        sp.add_argument("--commitment-file", help="persistence commitment text for hosted routes")

    p = sub.add_parser("serve", help="run the resolution service")
    add_server_flags(p)
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("trace", help="print the resolution hop chain for an ARK")
    p.add_argument("ark")
    add_server_flags(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("index", help="index a text against vocabularies")
    p.add_argument("--text", required=True)
    p.add_argument("--input", action="append", required=True, help="vocabulary JSON (repeatable)")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--top-k", type=int, default=None)
    p.add_argument("--doc-id", default="doc")
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("drift", help="drift metrics between two vocabularies over one text")
    p.add_argument("--text", required=True)
    p.add_argument("--vocab-a", required=True)
    p.add_argument("--vocab-b", required=True)
    p.add_argument("--mode", choices=("exclusive", "absence"), default="absence")
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_drift)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArkvocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
