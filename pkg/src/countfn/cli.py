"""Command-line front end.

    countfn <command> --mode <monoid|group|brooks> --rank <n> [--maxlen L]
            [--steps K] [--format text|json] [--plot PNG] <expr> [<expr2>]

Exit status: 0 on success, 1 when the answer is "not equivalent" / "not
bounded" / "no witness", 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import brooks as br
from . import canon_group as cg
from . import canon_monoid as cm
from . import oracle
from .counting import format_terms
from .errors import BoundedFunction, CountfnError, ParseError
from .parsing import MODES, alphabet_for, parse_expression
from .words import Word, parse_word

SCHEMA_VERSION = 1
DEFAULT_MAXLEN = 10
# cap on the number of words enumerated for empirical sup-norms
MAX_ENUMERATION = 2_000_000

COMMANDS = ("eval", "canon", "equiv", "kernel", "witness", "defect", "basis")
_SECOND_ARG = {"eval": "word", "equiv": "expr2"}
_FIRST_IS_WORD = {"defect", "basis"}


@dataclass
class Query:
    mode: str
    rank: int
    command: str
    expressions: list = field(default_factory=list)
    word: Word | None = None
    maxlen: int = DEFAULT_MAXLEN
    steps: int = oracle.DEFAULT_STEPS
    fmt: str = "text"
    plot: str | None = None


@dataclass
class Report:
    query: Query
    result: dict
    certificate: list | None = None
    witness: dict | None = None
    exit_code: int = 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "mode": self.query.mode,
            "rank": self.query.rank,
            "command": self.query.command,
            "result": self.result,
            "certificate": self.certificate,
            "witness": self.witness,
        }

    def to_text(self) -> str:
        lines = [f"{k}: {_text(v)}" for k, v in self.result.items()]
        if self.certificate is not None:
            lines.append(f"certificate: {len(self.certificate)} item(s)")
            for it in self.certificate:
                lines.append(f"  {it['coef']} {it['kind']} [{it['word']}]")
        if self.witness is not None:
            w = self.witness
            lines.append(f"witness: {w['description']} prefix={w['prefix'] or '1'} period={w['period']} slope={w['slope']}")
        return "\n".join(lines)


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ", ".join(map(str, v)) if v else "-"
    return str(v)


def _canonicalize(f):
    if isinstance(f, br.BrooksFunction):
        form, cert = br.canonicalize_brooks(f)
        bound = cert.bound() * 2
        return form, cert, bound
    if f.alphabet.is_group:
        form, cert = cg.canonicalize_group(f)
    else:
        form, cert = cm.canonicalize_monoid(f)
    return form, cert, cert.bound()


def _base_text(base) -> str:
    if isinstance(base, br.BrooksFunction):
        return format_terms(base.coordinates(), "phi")
    return str(base)


def _effective_maxlen(alphabet, maxlen: int) -> int:
    total, L = 1, 0
    while L < maxlen:
        total += oracle.count_words(alphabet, L + 1)
        if total > MAX_ENUMERATION:
            break
        L += 1
    return L


def _boundedness(q: Query, f, result: dict) -> Report:
    form, cert, bound = _canonicalize(f)
    bounded = form.is_zero()
    result.update(canonical=_base_text(form.base), bounded=bounded)
    L = _effective_maxlen(f.alphabet, q.maxlen)
    sup, at = oracle.sup_norm_estimate(f, L)
    if bounded:
        result["certificate_bound"] = str(bound)
    result.update(empirical_sup=str(sup), argmax=str(at), maxlen=L)
    fam = None
    if not bounded:
        fam = oracle.witness(form.base, q.steps)
    if q.plot:
        _plot(q, f, L, fam)
    if bounded:
        return Report(q, result, certificate=cert.to_json())
    return Report(q, result, witness=fam.to_json(), exit_code=1)


def _plot(q: Query, f, maxlen: int, fam) -> None:
    from .plotting import plot_growth

    plot_growth(q.plot, f, maxlen, fam, title=f"{q.command} ({q.mode}, rank {q.rank})")


def run(q: Query) -> Report:
    cmd = q.command
    if cmd == "eval":
        f = q.expressions[0]
        return Report(q, {"word": str(q.word), "value": str(f.evaluate(q.word))})

    if cmd == "canon":
        f = q.expressions[0]
        form, cert, bound = _canonicalize(f)
        coords = form.base.coordinates() if isinstance(form.base, br.BrooksFunction) else form.base.items()
        result = {
            "basis": form.kind.value,
            "canonical": _base_text(form.base),
            "coordinates": [{"word": w.text, "coef": str(c)} for w, c in coords],
            "certificate_bound": str(bound),
        }
        return Report(q, result, cert.to_json())

    if cmd == "kernel":
        return _boundedness(q, q.expressions[0], {})

    if cmd == "equiv":
        f, g = q.expressions
        rep = _boundedness(q, f - g, {})
        rep.result = {"equivalent": rep.result.pop("bounded"), "difference": rep.result.pop("canonical"), **rep.result}
        return rep

    if cmd == "witness":
        f = q.expressions[0]
        try:
            fam = oracle.witness(f, q.steps)
        except BoundedFunction:
            return Report(q, {"bounded": True, "found": False}, exit_code=1)
        if q.plot:
            _plot(q, f, _effective_maxlen(f.alphabet, q.maxlen), fam)
        return Report(q, {"bounded": False, "found": True, "slope": str(fam.slope)}, witness=fam.to_json())

    if cmd == "defect":
        w = q.word
        if q.mode == "monoid":
            k, m = cm._split(w)
            return Report(q, {"word": str(w), "k": k, "m": m, "norm": k + m})
        p = cg.defect(w)
        return Report(
            q,
            {
                "word": str(w),
                "k": p.k,
                "m": p.m,
                "k_prime": p.k_prime,
                "m_prime": p.m_prime,
                "p_norm": p.p_norm,
                "p_prime_norm": p.p_prime_norm,
                "defect": p.defect,
            },
        )

    if cmd == "basis":
        w = q.word
        if q.mode == "monoid":
            failed = [] if cm.in_basis_monoid(w) else [c for c, bad in (("w_1 = a_1", w[:1] == (1,)), ("w_fin = a_1", w[-1:] == (1,))) if bad]
            member = not failed
        elif q.mode == "group":
            failed = cg.basis_failures_group(w)
            member = not failed
        else:
            member = br.in_basis_brooks(w)
            failed = []
            if not member:
                if not w:
                    failed = ["w = ε (excluded)"]
                elif br.basis_key(w) is None:
                    failed = ["neither w nor w^-1 lies in W_Br'"]
                else:
                    failed = [f"class representative is {br.basis_key(w)}"]
        return Report(q, {"word": str(w), "in_basis": member, "failed": failed})

    raise ValueError(f"unknown command {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=MODES, required=True)
    common.add_argument("--rank", type=int, required=True)
    common.add_argument("--maxlen", type=int, default=None, help="enumeration depth for empirical sup-norms")
    common.add_argument("--steps", type=int, default=oracle.DEFAULT_STEPS, help="witness validation range K")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--plot", default=None, metavar="PNG", help="write a growth figure to this file")

    parser = argparse.ArgumentParser(prog="countfn", description="Counting functions on free monoids and groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd, parents=[common])
        p.add_argument("word" if cmd in _FIRST_IS_WORD else "expr")
        if cmd in _SECOND_ARG:
            p.add_argument(_SECOND_ARG[cmd])
    return parser


def _maxlen(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("COUNTFN_MAXLEN")
    return int(env) if env else DEFAULT_MAXLEN


def make_query(ns: argparse.Namespace) -> Query:
    alphabet = alphabet_for(ns.mode, ns.rank)
    q = Query(ns.mode, ns.rank, ns.command, maxlen=_maxlen(ns.maxlen), steps=ns.steps, fmt=ns.fmt, plot=ns.plot)
    if q.maxlen < 0:
        raise ValueError("--maxlen must be >= 0")
    if q.steps < 2:
        raise ValueError("--steps must be >= 2")
    if ns.command in _FIRST_IS_WORD:
        q.word = parse_word(ns.word, alphabet)
        return q
    q.expressions.append(parse_expression(ns.expr, ns.mode, ns.rank))
    if ns.command == "equiv":
        q.expressions.append(parse_expression(ns.expr2, ns.mode, ns.rank))
    if ns.command == "eval":
        q.word = parse_word(ns.word, alphabet)
    return q


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        q = make_query(ns)
        report = run(q)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.caret():
            print(e.caret(), file=sys.stderr)
        return 2
    except (CountfnError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if q.fmt == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
