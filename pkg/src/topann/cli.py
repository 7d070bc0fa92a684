"""Command-line interface: parsing, dispatch, JSON reports.

Reports go to stdout as canonical JSON (sorted keys, fixed indentation),
a one-line human summary with timing goes to stderr. Exit codes: 0 ok,
1 usage or parse error, 2 hypothesis violation, 3 verification failure,
4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .annihilators import (
    ann_top,
    att_codim1_membership,
    att_codim1_onedim,
    att_top,
    att_upper_check,
    mult_criterion,
    t_submodule,
)
from .cohdim import CdValue, betti_table, cd_quotient, lhv_check
from .decompose import (
    MonomialPrime,
    associated_primes,
    krull_dim_height,
    primary_decomposition,
)
from .errors import (
    HypothesisError,
    LimitExceeded,
    ParseError,
    TopAnnError,
    VerificationFailure,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    RingSpec,
    format_ideal,
    format_monomial,
    minimal_generators,
)
from .verify import run_verification

COMMANDS = (
    "decompose", "cd", "dim", "ann-top", "t-submodule", "att-top",
    "att-test", "att-onedim", "lhv", "betti", "verify",
)


def parse_monomial(text: str, ring: RingSpec) -> Monomial:
    """Parse a monomial: '*'-separated (or juxtaposed) var / var^k factors,
    with '1' for the empty product. Whitespace-insensitive."""
    s = text
    n = len(s)
    exps = [0] * ring.n
    # Longest-match so multi-character names win over their prefixes.
    order = sorted(range(ring.n), key=lambda j: -len(ring.vars[j]))
    i = 0
    seen = False
    while i < n:
        if s[i].isspace():
            i += 1
            continue
        if s[i] == "*":
            if not seen:
                raise ParseError("unexpected '*'", text, i)
            i += 1
            continue
        if s[i] == "1":
            i += 1
            seen = True
            continue
        hit = None
        for j in order:
            if s.startswith(ring.vars[j], i):
                hit = j
                i += len(ring.vars[j])
                break
        if hit is None:
            raise ParseError("unknown variable", text, i)
        k = 1
        if i < n and s[i] == "^":
            i += 1
            start = i
            while i < n and s[i].isdigit():
                i += 1
            if start == i:
                raise ParseError("malformed exponent", text, i)
            k = int(s[start:i])
            if k < 1:
                raise ParseError("exponent must be at least 1", text, start)
        exps[hit] += k
        seen = True
    if not seen:
        raise ParseError("empty monomial", text, 0)
    return Monomial(tuple(exps))


def parse_ideal(gens: list[str], ring: RingSpec) -> MonomialIdeal:
    """Generator strings to a canonical ideal; [] is the zero ideal."""
    return minimal_generators(ring, [parse_monomial(g, ring) for g in gens])


def parse_prime(names: list[str], ring: RingSpec) -> MonomialPrime:
    return MonomialPrime(tuple(sorted(ring.var_index(v) for v in names)))


def _cd_json(cd: CdValue):
    return "no-support" if cd.is_no_support else cd.value


def _prime_json(ring: RingSpec, p: MonomialPrime) -> list[str]:
    return p.names(ring)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise ParseError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="topann", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--ring", help="comma-separated variable names")
        p.add_argument("--char", type=int, default=None, help="field characteristic")
        p.add_argument("--a", help="comma-separated generators of the ideal a")
        p.add_argument("--i", help="comma-separated generators of the ideal I")
        p.add_argument("--prime", help="comma-separated variable names ('' = zero prime)")
        p.add_argument("--x", help="a single monomial")
        p.add_argument("--box-depth", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--count", type=int, default=None)
        p.add_argument("--max-vars", type=int, default=None)
        p.add_argument("--max-gens", type=int, default=None)
        p.add_argument("--json", dest="json_file", help="JSON request file")
    return parser


def _split_csv(text: str) -> list[str]:
    if text is None or text.strip() == "":
        return []
    return [part.strip() for part in text.split(",")]


class Request:
    """Merged view of command-line flags over an optional JSON request file."""

    def __init__(self, args):
        data = {}
        if args.json_file:
            with open(args.json_file, encoding="utf-8") as fh:
                data = json.load(fh)
        options = data.get("options", {})
        ring_spec = data.get("ring", {})
        vars_ = _split_csv(args.ring) if args.ring else list(ring_spec.get("vars", []))
        char = args.char if args.char is not None else int(ring_spec.get("char", 0))
        if not vars_ and args.command != "verify":
            raise ParseError("--ring is required")
        self.command = args.command
        self.ring = RingSpec(tuple(vars_), char) if vars_ else None
        self.a_gens = _split_csv(args.a) if args.a is not None else list(data.get("a", []))
        self.i_gens = _split_csv(args.i) if args.i is not None else list(data.get("i", []))
        if args.prime is not None:
            self.prime_names = _split_csv(args.prime)
            self.has_prime = True
        else:
            self.prime_names = list(data.get("prime", []))
            self.has_prime = "prime" in data
        self.x_text = args.x if args.x is not None else data.get("x")
        opt = lambda flag, key, default: flag if flag is not None else options.get(key, default)
        self.box_depth = opt(args.box_depth, "box_depth", 1)
        self.seed = opt(args.seed, "seed", 1)
        self.count = opt(args.count, "count", None)
        self.max_vars = opt(args.max_vars, "max_vars", None)
        self.max_gens = opt(args.max_gens, "max_gens", None)

    def ideal_a(self) -> MonomialIdeal:
        return parse_ideal(self.a_gens, self.ring)

    def ideal_i(self) -> MonomialIdeal:
        return parse_ideal(self.i_gens, self.ring)

    def prime(self) -> MonomialPrime:
        if not self.has_prime:
            raise ParseError("--prime is required for this command")
        return parse_prime(self.prime_names, self.ring)

    def monomial_x(self) -> Monomial:
        if self.x_text is None:
            raise ParseError("--x is required for this command")
        return parse_monomial(self.x_text, self.ring)


def _run_command(req: Request) -> dict:
    ring = req.ring
    char = ring.char if ring else 0
    if req.command == "decompose":
        a = req.ideal_a()
        decomp = primary_decomposition(a)
        ass, mass, assh = associated_primes(a)
        key = MonomialPrime.sort_key
        return {
            "components": [
                {
                    "component": format_ideal(c.component),
                    "prime": _prime_json(ring, c.rad_prime),
                }
                for c in decomp.components
            ],
            "ass": [_prime_json(ring, p) for p in sorted(ass, key=key)],
            "mass": [_prime_json(ring, p) for p in sorted(mass, key=key)],
            "assh": [_prime_json(ring, p) for p in sorted(assh, key=key)],
        }
    if req.command == "dim":
        dim, height = krull_dim_height(req.ideal_a())
        return {"dim": dim, "height": height}
    if req.command == "cd":
        return {"cd": _cd_json(cd_quotient(req.ideal_a(), req.ideal_i(), char))}
    if req.command == "ann-top":
        rep = ann_top(req.ideal_a(), req.ideal_i(), char)
        out = {
            "c": _cd_json(rep.c),
            "dim": rep.dim_m,
            "hypothesis_met": rep.hypothesis_met,
            "t_lift": format_ideal(rep.t_lift),
            "ann": format_ideal(rep.ann),
        }
        if req.x_text is not None:
            mc = mult_criterion(req.ideal_a(), req.ideal_i(), req.monomial_x(), char)
            out["mult"] = {"x": req.x_text, "kills": mc.kills, "cd_drop": mc.cd_drop}
        return out
    if req.command == "t-submodule":
        return {"t_lift": format_ideal(t_submodule(req.ideal_a(), req.ideal_i(), char))}
    if req.command == "att-top":
        att = att_top(req.ideal_a(), req.ideal_i(), char)
        return {
            "primes": [_prime_json(ring, p) for p in att.primes],
            "mode": att.mode.value,
        }
    if req.command == "att-test":
        a, I, p = req.ideal_a(), req.ideal_i(), req.prime()
        out = {
            "prime": _prime_json(ring, p),
            "upper_check": att_upper_check(a, I, p, char),
        }
        if I.is_zero:
            try:
                out["codim1_membership"] = att_codim1_membership(a, p, char)
            except HypothesisError:
                out["codim1_membership"] = None
        else:
            out["codim1_membership"] = None
        return out
    if req.command == "att-onedim":
        att = att_codim1_onedim(req.ideal_a(), char)
        return {
            "primes": [_prime_json(ring, p) for p in att.primes],
            "mode": att.mode.value,
        }
    if req.command == "lhv":
        return {"holds": lhv_check(req.ideal_a(), req.prime())}
    if req.command == "betti":
        table = betti_table(req.ideal_a(), char, max_vars=req.max_vars or 12)
        names = lambda mask: [ring.vars[i] for i in range(ring.n) if mask >> i & 1]
        return {
            "entries": [
                {"i": i, "degree": names(mask), "value": v}
                for i, mask, v in table.entries
            ],
            "totals": {str(i): t for i, t in sorted(table.totals().items())},
            "proj_dim": table.proj_dim(),
        }
    if req.command == "verify":
        count = req.count if req.count is not None else 20
        rep = run_verification(
            seed=req.seed,
            count=count,
            max_vars=req.max_vars or 6,
            max_gens=req.max_gens or 8,
            box_depth=req.box_depth,
        )
        return {
            "seed": rep.seed,
            "count": rep.count,
            "passed": rep.passed,
            "checks": [
                {
                    "name": c.name,
                    "instances": c.instances,
                    "failures": c.failures,
                    "first_counterexample": c.first_counterexample,
                }
                for c in rep.checks
            ],
        }
    raise ParseError(f"unknown command {req.command!r}")


def _report(req: Request, result: dict) -> dict:
    report = {
        "version": __version__,
        "command": req.command,
        "result": result,
    }
    if req.ring is not None:
        report["ring"] = {"vars": list(req.ring.vars), "char": req.ring.char}
        inputs = {}
        if req.a_gens or req.command in ("decompose", "cd", "dim", "betti"):
            inputs["a"] = format_ideal(req.ideal_a())
        if req.i_gens:
            inputs["i"] = format_ideal(req.ideal_i())
        if req.has_prime:
            inputs["prime"] = _prime_json(req.ring, req.prime())
        if req.x_text is not None:
            inputs["x"] = format_monomial(req.ring, req.monomial_x())
        report["inputs"] = inputs
    return report


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        req = Request(args)
        started = time.perf_counter()
        result = _run_command(req)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        print(json.dumps(_report(req, result), indent=2, sort_keys=True))
        print(f"topann {req.command}: ok ({elapsed_ms:.1f} ms)", file=sys.stderr)
        if req.command == "verify" and not result["passed"]:
            print("topann verify: FAILED", file=sys.stderr)
            return 3
        return 0
    except TopAnnError as exc:
        code = 1
        if isinstance(exc, HypothesisError):
            code = 2
        elif isinstance(exc, VerificationFailure):
            code = 3
        elif isinstance(exc, LimitExceeded):
            code = 4
        error_report = {
            "version": __version__,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(json.dumps(error_report, indent=2, sort_keys=True))
        print(f"topann: error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
