"""Command line front end: a REPL and a batch runner.

Lines are expressions (printed in normal form), ``let name = expr``
bindings, or ``:verb argument`` commands; see ``:help``.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from .conway import format_surreal, is_omnific, oz_truncation, srl_cmp
from .errors import ParseError, SurrealError
from .expansion import birthday, sign_expansion, srl_simpler
from .genetic import genetic_add_oracle, genetic_mul_oracle
from .lang import Command, Let, evaluate, parse_expr, parse_line
from .ordinal import format_ordinal, parse_ordinal
from .signexp import format_signs
from .specfile import format_spec, parse_spec
from .structures import (archimedean_height, convex_verdicts, is_discrete, is_initial,
                         is_subdomain_of_oz)

__all__ = ["main", "Session"]

HELP = """\
expressions: rationals p or p/q, w, w^n, w^(expr), + - *, {L | R}, names
let name = expr          bind a name for this session
:eval expr               normal form
:nf expr                 normal form with every exponent and coefficient
:sign expr               sign expansion
:rank expr               birthday (ordinal)
:cmp a, b                less / equal / greater
:simpler a, b            is a strictly simpler than b
:oz expr                 is expr an omnific integer
:ozfloor expr            the omnific truncation of expr
:gadd a, b               a + b by the genetic recursion (dyadics)
:gmul a, b               a * b by the genetic recursion (dyadics)
:defgroup name spec      define a group spec (file path or inline, ';'-separated)
:defdomain name spec     define a domain spec
:show name               print a spec
:check name              initiality, discreteness and Oz containment
:convex name tau         convex restriction A[w^tau] and its verdicts
:height name             archimedean height
:help                    this text
:quit                    stop"""


class CommandError(SurrealError):
    code = "E_COMMAND"


class _Quit(Exception):
    pass


class Result:
    def __init__(self, value, witness=None):
        self.value = value
        self.witness = witness


class Session:
    """Bindings, spec definitions and output options for one run."""

    def __init__(self, fuel=64, rank_bound=7, unicode=False):
        self.fuel = fuel
        self.rank_bound = rank_bound
        self.omega = "ω" if unicode else "w"
        self.env = {}
        self.specs = {}

    # -- helpers -------------------------------------------------------

    def fmt(self, x):
        return format_surreal(x, self.omega)

    def value(self, text):
        return evaluate(parse_expr(text), self.env, self.fuel)

    def pair(self, text):
        parts = _split_pair(text)
        if len(parts) != 2:
            raise CommandError("expected two expressions separated by a comma")
        out = []
        start = 0
        for part in parts:
            try:
                out.append(self.value(part))
            except ParseError as exc:
                raise ParseError(exc.message, text, start + exc.pos) from None
            start += len(part) + 1
        return tuple(out)

    def spec(self, name):
        name = name.strip()
        if name not in self.specs:
            raise CommandError("no spec named %r" % name)
        return self.specs[name]

    # -- dispatch ------------------------------------------------------

    def run(self, line):
        """Execute one line; returns (verb, Result) or None for blanks."""
        parsed = parse_line(line)
        if isinstance(parsed, Let):
            v = evaluate(parsed.expr, self.env, self.fuel)
            self.env[parsed.name] = v
            return "let", Result("%s = %s" % (parsed.name, self.fmt(v)))
        if not isinstance(parsed, Command):
            return "eval", Result(self.fmt(evaluate(parsed, self.env, self.fuel)))
        handler = getattr(self, "cmd_" + parsed.verb, None)
        if handler is None:
            raise ParseError("unknown command :%s" % parsed.verb, line, line.index(":") + 1)
        if not parsed.argument and parsed.verb not in ("quit", "help"):
            raise ParseError(":%s needs an argument" % parsed.verb, line, len(line))
        try:
            return parsed.verb, handler(parsed.argument)
        except ParseError as exc:
            if exc.text == parsed.argument:
                raise ParseError(exc.message, line, parsed.offset + exc.pos) from None
            raise

    def cmd_eval(self, arg):
        return Result(self.fmt(self.value(arg)))

    def cmd_nf(self, arg):
        return Result(format_surreal(self.value(arg), self.omega, explicit=True))

    def cmd_sign(self, arg):
        se = sign_expansion(self.value(arg), self.fuel)
        return Result(format_signs(se, self.omega) or "()")

    def cmd_rank(self, arg):
        return Result(format_ordinal(birthday(self.value(arg), self.fuel), self.omega))

    def cmd_cmp(self, arg):
        a, b = self.pair(arg)
        return Result({-1: "less", 0: "equal", 1: "greater"}[srl_cmp(a, b)])

    def cmd_simpler(self, arg):
        a, b = self.pair(arg)
        return Result(_bool(srl_simpler(a, b, self.fuel)))

    def cmd_oz(self, arg):
        return Result(_bool(is_omnific(self.value(arg))))

    def cmd_ozfloor(self, arg):
        return Result(self.fmt(oz_truncation(self.value(arg))))

    def cmd_gadd(self, arg):
        a, b = self.pair(arg)
        return Result(self.fmt(genetic_add_oracle(a, b, self.rank_bound)))

    def cmd_gmul(self, arg):
        a, b = self.pair(arg)
        return Result(self.fmt(genetic_mul_oracle(a, b, self.rank_bound)))

    def _define(self, arg, kind):
        name, _, body = arg.strip().partition(" ")
        if not name or not body.strip():
            raise CommandError("usage: :def%s name (file | inline spec)" % kind)
        body = body.strip()
        if ":" not in body and Path(body).is_file():
            body = Path(body).read_text()
        elif ":" not in body:
            raise CommandError("spec file %r not found" % body)
        if "kind:" not in body:
            body = "kind: %s\n%s" % (kind, body)
        spec = parse_spec(body)
        if spec.kind != kind:
            raise CommandError("spec declares kind %s but :def%s was used" % (spec.kind, kind))
        self.specs[name] = spec
        return Result("defined %s (%s)" % (name, kind))

    def cmd_defgroup(self, arg):
        return self._define(arg, "group")

    def cmd_defdomain(self, arg):
        return self._define(arg, "domain")

    def cmd_show(self, arg):
        return Result(format_spec(self.spec(arg)).rstrip("\n").replace("\n", "; "))

    def cmd_check(self, arg):
        spec = self.spec(arg)
        v = is_initial(spec, fuel=self.fuel)
        parts = ["initial: %s" % v.status]
        if v.condition:
            parts.append("condition: %s" % v.condition)
        if v.passed:
            parts.append("discrete: %s" % _fmt_disc(is_discrete(spec, fuel=self.fuel), self))
            if spec.kind == "domain":
                parts.append("oz: %s" % _bool(is_subdomain_of_oz(spec, self.fuel)))
        witness = {k: self.fmt(x) for k, x in v.witness} or None
        if witness:
            parts.append("witness: " + ", ".join("%s=%s" % kv for kv in witness.items()))
        return Result("; ".join(parts), witness)

    def cmd_convex(self, arg):
        name, _, tau_text = arg.strip().rpartition(" ")
        if not name:
            raise CommandError("usage: :convex name tau")
        try:
            tau = parse_ordinal(tau_text)
        except ParseError as exc:
            raise CommandError("bad ordinal %r: %s" % (tau_text, exc.message)) from None
        r = convex_verdicts(self.spec(name), tau, fuel=self.fuel)
        parts = ["tau=%s" % format_ordinal(tau, self.omega),
                 "initial=%s" % r.initial.status,
                 "group=%s" % _bool(r.group_closed),
                 "convex=%s" % _bool(r.convex),
                 "products=%s" % _bool(r.product_closed),
                 "indecomposable=%s" % _bool(r.expected_product_closed)]
        witness = None
        if r.product_witness:
            a, b, p = r.product_witness
            parts.append("witness %s*%s=%s" % (self.fmt(a), self.fmt(b), self.fmt(p)))
            witness = {"left": self.fmt(a), "right": self.fmt(b), "product": self.fmt(p)}
        return Result(" ".join(parts), witness)

    def cmd_height(self, arg):
        h = archimedean_height(self.spec(arg), self.fuel)
        text = format_ordinal(h.ordinal, self.omega)
        return Result(text if h.exact else ">= " + text)

    def cmd_help(self, arg):
        return Result(HELP)

    def cmd_quit(self, arg):
        raise _Quit()


def _fmt_disc(d, session):
    return "Discrete(%s)" % session.fmt(d.least) if d.kind == "Discrete" else "Dense"


def _bool(b):
    return "true" if b else "false"


def _split_pair(text):
    depth = 0
    for i, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "," and depth == 0:
            return [text[:i], text[i + 1:]]
    return [text]


def _error_text(exc):
    return "error[%s]: %s" % (exc.code, exc)


def run_lines(lines, session, out, json_mode=False, echo=False, fail_fast=False):
    """Run lines in order; returns the exit code (0 iff no errors)."""
    status = 0
    for raw in lines:
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        start = time.perf_counter()
        verb, result, error = None, None, None
        try:
            verb, result = session.run(line)
        except _Quit:
            break
        except SurrealError as exc:
            error = exc
        except RecursionError:
            error = CommandError("expression too deeply nested")
        micros = int((time.perf_counter() - start) * 1e6)
        if error is not None:
            status = 1
            if verb is None:
                cmd = line.strip()
                verb = cmd[1:].split()[0] if cmd.startswith(":") and len(cmd) > 1 else "eval"
        if json_mode:
            record = {
                "verb": verb,
                "input": line,
                "ok": error is None,
                "value": result.value if result else None,
                "witness": result.witness if result else None,
                "error": {"code": error.code, "message": str(error)} if error else None,
                "micros": micros,
            }
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
        else:
            if echo:
                out.write(">>> %s\n" % line)
            out.write((_error_text(error) if error else result.value) + "\n")
        out.flush()
        if error is not None and fail_fast:
            break
    return status


def _repl(session, args):
    status = 0
    while True:
        try:
            line = input("surreal> ")
        except EOFError:
            print()
            return status
        try:
            code = run_lines([line], session, sys.stdout, args.json, False, False)
        except _Quit:
            return status
        status = max(status, code)
        if line.strip() == ":quit":
            return status


def build_parser():
    p = argparse.ArgumentParser(prog="surreal", description="Exact surreal-number calculator.")
    p.add_argument("--batch", metavar="FILE", help="run commands from FILE ('-' for stdin)")
    p.add_argument("--json", action="store_true", help="one JSON record per command")
    p.add_argument("--fuel", type=int, default=64, help="recursion and search budget (default 64)")
    p.add_argument("--rank-bound", type=int, default=7,
                   help="birthday bound for the genetic oracles (default 7)")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first error")
    p.add_argument("--unicode", action="store_true", help="print ω instead of w")
    p.add_argument("--echo", action="store_true", help="echo each input line in text mode")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.fuel < 1 or args.rank_bound < 0:
        print("surreal: --fuel must be positive and --rank-bound non-negative", file=sys.stderr)
        return 2
    session = Session(args.fuel, args.rank_bound, args.unicode)
    if args.batch is None and sys.stdin.isatty():
        return _repl(session, args)
    if args.batch in (None, "-"):
        lines = sys.stdin.readlines()
    else:
        try:
            lines = Path(args.batch).read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            print("surreal: cannot read %s: %s" % (args.batch, exc.strerror), file=sys.stderr)
            return 2
    try:
        return run_lines(lines, session, sys.stdout, args.json, args.echo, args.fail_fast)
    except BrokenPipeError:
        sys.stderr.close()
        return 1


if __name__ == "__main__":
    sys.exit(main())
