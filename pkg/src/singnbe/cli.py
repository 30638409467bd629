"""Command-line front end.

    python3 -m singnbe {check,normalize,infer} FILE [--allow-star]
        [--proof-relevant] [--depth-limit N] [--machine]

Every declaration yields one ACCEPT/REJECT record.  ``normalize`` also
prints the normal form of each ``check`` subject and ``infer`` the inferred
type of each neutral ``check`` subject; ``normalize`` and ``infer``
declarations always print theirs.  Exit status: 0 when everything is
accepted, 1 when some declaration is rejected, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import sys
import threading
from dataclasses import dataclass

from . import config
from .errors import DepthExceeded, KernelError, TypeCheckError
from .session import Session
from .surface.ast import Check
from .surface.parser import ParseError, parse
from .surface.printer import print_term
from .syntax import is_neutral

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2
STACK_SIZE = 512 * 1024 * 1024


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str
    allow_star: bool = False
    proof_relevant: bool = False
    depth_limit: int = config.DEFAULT_DEPTH_LIMIT
    machine: bool = False


def format_diagnostic(err, names) -> str:
    if not isinstance(err, TypeCheckError):
        return f"{type(err).__name__}: {err}"
    depth = err.context_depth
    show = ((lambda t: print_term(t, ctx_names=names)) if depth == len(names)
            else (lambda t: print_term(t, depth)))
    parts = [str(err)]
    for label, t in (("expected", err.expected), ("got", err.got)):
        if t is not None:
            parts.append(f"{label} {show(t)}")
    if err.erased_expected is not None and err.erased_expected != err.expected:
        parts.append(f"expected without singleton tags {show(err.erased_expected)}")
    return "; ".join(parts)


def run_text(text: str, cfg: RunConfig, out=None) -> int:
    """Process a declaration file's contents, writing the report to ``out``."""
    out = out or sys.stdout
    try:
        decl_file = parse(text)
    except ParseError as err:
        print(f"{cfg.input_path}:{err}", file=sys.stderr)
        return EXIT_USAGE
    except RecursionError:
        print(f"{cfg.input_path}: input nested beyond the depth limit", file=sys.stderr)
        return EXIT_USAGE

    session = Session(allow_star=cfg.allow_star)
    status = EXIT_OK
    with config.options(proof_relevant=cfg.proof_relevant, depth_limit=cfg.depth_limit):
        for index, d in enumerate(decl_file.decls):
            names_before = session.names
            try:
                payload = session.run_decl(d)
                extra = _extra_output(cfg.command, session, d)
                payload = payload or extra
                verdict = "ACCEPT"
            except RecursionError:
                # elaboration and printing recurse outside the checker's guard
                payload = format_diagnostic(DepthExceeded("recursion depth exceeded"),
                                            names_before)
                verdict = "REJECT"
                status = EXIT_REJECTED
            except (TypeCheckError, KernelError) as err:
                payload = format_diagnostic(err, names_before)
                verdict = "REJECT"
                status = EXIT_REJECTED
            _report(out, cfg, index, d, verdict, payload)
    return status


def _extra_output(command, session, d) -> str:
    if not isinstance(d, Check):
        return ""
    if command == "normalize":
        return session.normalize(d.term, d.ty)
    if command == "infer":
        t = session.elab(d.term)
        if is_neutral(t):
            return session.infer(d.term)
    return ""


def _report(out, cfg, index, d, verdict, payload):
    if cfg.machine:
        print(f"{index}\t{d.verb}\t{verdict}\t{payload}", file=out)
        return
    where = f"{cfg.input_path}:{d.span.line}" if d.span else cfg.input_path
    label = f" {d.name}" if hasattr(d, "name") else ""
    if verdict == "ACCEPT":
        print(f"{where}: ACCEPT {d.verb}{label}", file=out)
        if payload:
            print(payload, file=out)
    else:
        print(f"{where}: REJECT {d.verb}{label}: {payload}", file=out)


def run(cfg: RunConfig, out=None) -> int:
    try:
        with open(cfg.input_path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        print(f"{cfg.input_path}: {err.strerror}", file=sys.stderr)
        return EXIT_USAGE
    return run_text(text, cfg, out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="singnbe", description=__doc__.split("\n\n")[0].strip())
    ap.add_argument("command", choices=("check", "normalize", "infer"))
    ap.add_argument("file")
    ap.add_argument("--allow-star", action="store_true",
                    help="admit * in input terms")
    ap.add_argument("--proof-relevant", action="store_true",
                    help="experimental: evaluate boxed proofs instead of erasing them")
    ap.add_argument("--depth-limit", type=int, default=config.DEFAULT_DEPTH_LIMIT,
                    metavar="N", help="maximum recursion depth (default %(default)s)")
    ap.add_argument("--machine", action="store_true",
                    help="print one tab-separated record per declaration")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.depth_limit < 100:
        print("--depth-limit must be at least 100", file=sys.stderr)
        return EXIT_USAGE
    cfg = RunConfig(args.command, args.file, args.allow_star, args.proof_relevant,
                    args.depth_limit, args.machine)
    return _run_with_stack(cfg)


def _run_with_stack(cfg: RunConfig) -> int:
    # Deep terms recurse deeply; give the worker a large stack and let the
    # configured limit, not the C stack, decide when to give up.
    result = [EXIT_USAGE]

    def work():
        result[0] = run(cfg)

    old_limit = sys.getrecursionlimit()
    old_stack = threading.stack_size()
    threading.stack_size(STACK_SIZE)
    sys.setrecursionlimit(max(cfg.depth_limit, 1000))
    try:
        worker = threading.Thread(target=work)
        worker.start()
        worker.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    return result[0]
