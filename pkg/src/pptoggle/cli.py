"""Command-line front end: series, biject, enumerate, toggle, verify, render.

Exit codes are a stable contract: 0 success, 2 usage, 3 non-convergence,
4 invariant failure. Reports on stdout are byte-deterministic for identical
inputs and seeds; wall time goes to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import bijections as bj
from . import configurations as cf
from . import oracle as oc
from . import serialize as sz
from . import series as sr
from . import verify as vf
from .errors import DomainError, NonConvergenceError, ScheduleError
from .halfint import HalfInt
from .partitions import as_partition
from .render import render_ascii, render_svg
from .toggles import toggle_between, toggle_pop, toggle_push
from .partitions import interlaces

EXIT_OK, EXIT_USAGE, EXIT_NONCONV, EXIT_INVARIANT = 0, 2, 3, 4


def parse_partition(text: str):
    text = text.strip()
    if text in ("", "-", "empty"):
        return ()
    return as_partition(int(p) for p in text.split(","))


def parse_legs(text: str):
    parts = text.split("/")
    if len(parts) != 2:
        raise DomainError(f"legs look like 2,2/3,1 (got {text!r})")
    return parse_partition(parts[0]), parse_partition(parts[1])


def series_text(s: sr.TruncatedSeries) -> str:
    if not s.coeffs:
        return "0"
    return " + ".join(f"{c}*q^{HalfInt(e)}" for e, c in sorted(s.coeffs.items()))


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


class Report:
    """Collects outputs and named checks for one command run."""

    def __init__(self, args):
        self.command = " ".join(sys.argv[1:])
        self.inputs_digest = _digest(vars(args) | {"_": None})
        self.outputs: list[str] = []
        self.checks: list[dict] = []
        self.started = time.monotonic()
        self.as_json = getattr(args, "json", False)

    def emit(self, text: str):
        self.outputs.append(text)

    def check(self, name: str, passed: bool, detail: str = ""):
        self.checks.append({"name": name, "passed": passed, "detail": detail})

    def finish(self) -> int:
        failed = [c for c in self.checks if not c["passed"]]
        if self.as_json:
            print(json.dumps({"command": self.command,
                              "inputs": self.inputs_digest,
                              "outputs": self.outputs,
                              "checks": self.checks,
                              "wall_time_s": 0.0}, sort_keys=True))
        else:
            for line in self.outputs:
                print(line)
            for c in self.checks:
                mark = "PASS" if c["passed"] else "FAIL"
                tail = f": {c['detail']}" if c["detail"] else ""
                print(f"{mark} {c['name']}{tail}")
        print(f"wall time: {time.monotonic() - self.started:.2f}s",
              file=sys.stderr)
        return EXIT_INVARIANT if failed else EXIT_OK


def cmd_series(args) -> int:
    report = Report(args)
    degree = args.degree
    if args.macmahon:
        kind, legs = "macmahon", None
    elif args.one_leg is not None:
        kind, legs = "one-leg", parse_partition(args.one_leg)
    elif args.two_leg is not None:
        kind, legs = "two-leg-spp", parse_legs(args.two_leg)
    elif args.two_leg_rpp is not None:
        kind, legs = "two-leg-rpp", parse_legs(args.two_leg_rpp)
    else:
        print("series: pick one of --macmahon/--one-leg/--two-leg/--two-leg-rpp",
              file=sys.stderr)
        return EXIT_USAGE
    result = sr.evaluate_stable(kind, legs, degree)
    report.emit(series_text(result))
    if args.cross_check:
        if kind == "macmahon":
            census = oc.census_series(oc.WeightCensus.take("plane", None, degree))
            report.check("census-agreement", census == result)
        elif kind == "one-leg":
            census = oc.census_series(
                oc.WeightCensus.take("one-leg-spp", legs, degree))
            report.check("census-agreement", census == result)
            report.check("hook-product-agreement",
                         sr.hook_product("outside", legs, degree) == result)
        else:
            lam, mu = legs
            m = sr.macmahon_series(degree)
            other = sr.evaluate_stable(
                "two-leg-rpp" if kind == "two-leg-spp" else "two-leg-spp",
                (mu, lam), degree)
            lhs = result if kind == "two-leg-spp" else other
            rhs = (m * other) if kind == "two-leg-spp" else (m * result)
            residual = lhs - rhs
            report.check("product-identity", residual.is_zero(),
                         f"residual {series_text(residual)}")
    return report.finish()


def _load_json(args):
    if args.input and args.input != "-":
        with open(args.input) as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _write_json(args, obj):
    text = json.dumps(obj, sort_keys=True)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_biject(args) -> int:
    report = Report(args)
    schedule = bj.ToggleSchedule.parse(args.schedule)
    payload = _load_json(args)
    if args.family == "plane":
        if args.direction == "forward":
            pi = sz.config_from_json(payload)
            t = bj.pp_to_tableau(pi, schedule)
            _write_json(args, sz.config_to_json(t))
            if args.round_trip:
                report.check("round-trip", bj.tableau_to_pp(t) == pi)
                report.check("weight", t.hook_weight() == sum(pi.entries.values()))
        else:
            t = sz.config_from_json(payload)
            _write_json(args, sz.config_to_json(bj.tableau_to_pp(t)))
    elif args.family == "one-leg":
        if args.direction == "forward":
            sigma = sz.config_from_json(payload)
            rho, pi = bj.one_leg_forward(sigma, schedule)
            _write_json(args, {"rho": sz.config_to_json(rho),
                               "pi": sz.config_to_json(pi)})
            if args.round_trip:
                report.check("round-trip", bj.one_leg_inverse(rho, pi) == sigma)
                report.check("weight", sum(sigma.entries.values())
                             == sum(rho.entries.values()) + sum(pi.entries.values()))
        else:
            rho = sz.config_from_json(payload["rho"])
            pi = sz.config_from_json(payload["pi"])
            _write_json(args, sz.config_to_json(bj.one_leg_inverse(rho, pi)))
    elif args.family == "two-leg":
        if args.direction == "forward":
            sigma = sz.config_from_json(payload)
            rho, pi = bj.two_leg_forward(sigma)
            _write_json(args, {"rho": sz.config_to_json(rho),
                               "pi": sz.config_to_json(pi)})
            if args.round_trip:
                report.check("round-trip", bj.two_leg_inverse(rho, pi) == sigma)
                report.check("weight", cf.cfg_weight(sigma)
                             == cf.cfg_weight(rho) + sum(pi.entries.values()))
        else:
            rho = sz.config_from_json(payload["rho"])
            pi = sz.config_from_json(payload["pi"])
            _write_json(args, sz.config_to_json(bj.two_leg_inverse(rho, pi)))
    else:
        print(f"biject: unknown family {args.family}", file=sys.stderr)
        return EXIT_USAGE
    return report.finish()


def cmd_enumerate(args) -> int:
    legs = None
    if args.family in ("one-leg-spp", "one-leg-rpp"):
        legs = parse_partition(args.legs or "")
    elif args.family in ("two-leg-spp", "two-leg-rpp"):
        legs = parse_legs(args.legs or "/")
    census = oc.WeightCensus.take(args.family, legs, args.bound)
    configs = oc.enum_configs(args.family, legs,
                              oc._budget_for(args.family, legs, args.bound))
    if legs is None:
        legs_json = []
    elif legs and isinstance(legs[0], tuple):
        legs_json = [list(p) for p in legs]
    else:
        legs_json = [list(legs)]
    lines = [json.dumps({"family": args.family,
                         "legs": legs_json,
                         "bound": {"doubled": HalfInt.of(args.bound).doubled},
                         "count": sum(census.counts.values())}, sort_keys=True)]
    for cfg in sorted(configs, key=lambda c: json.dumps(sz.config_to_json(c),
                                                        sort_keys=True)):
        if cf.cfg_weight(cfg) <= HalfInt.of(args.bound):
            lines.append(json.dumps(sz.config_to_json(cfg), sort_keys=True))
    text = "\n".join(lines)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_toggle(args) -> int:
    lam = parse_partition(args.upper)
    nu = parse_partition(args.middle)
    mu = parse_partition(args.lower)
    if args.push is not None:
        result = toggle_push(lam, nu, mu, args.push)
        print(json.dumps(list(result)))
    elif interlaces(nu, lam) and interlaces(nu, mu):
        toggled, popped = toggle_pop(lam, nu, mu)
        print(json.dumps({"toggled": list(toggled), "popped": popped}))
    else:
        print(json.dumps(list(toggle_between(lam, nu, mu))))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = Report(args)
    overrides = {}
    if args.degree is not None:
        overrides["degree"] = int(args.degree.doubled // 2)
    if args.max_part is not None:
        overrides["max_part"] = args.max_part
    if args.max_weight is not None:
        overrides["max_weight"] = args.max_weight
    if args.shape is not None:
        overrides["shapes"] = (parse_partition(args.shape),)
    if args.census:
        return _verify_census(args, report)
    names = "all" if args.suite == "all" else [args.suite]
    if args.suite == "none":
        report.emit("no suites requested; vacuous pass")
        return report.finish()
    results = vf.run_suites(names, **overrides)
    for row in results:
        report.check(row.name, row.passed,
                     row.detail + (f" counterexample={row.counterexample!r}"
                                   if row.counterexample is not None else ""))
    return report.finish()


def _verify_census(args, report) -> int:
    with open(args.census) as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    head, body = lines[0], lines[1:]
    configs = [sz.config_from_json(obj) for obj in body]
    bound = HalfInt(head["bound"]["doubled"])
    counts: dict[HalfInt, int] = {}
    for cfg in configs:
        w = cf.cfg_weight(cfg)
        counts[w] = counts.get(w, 0) + 1
    got = sr.TruncatedSeries.from_terms(bound, list(counts.items()))
    family = head["family"]
    legs = [as_partition(p) for p in head.get("legs", [])]
    if family == "plane":
        want = sr.macmahon_series(bound)
    elif family == "one-leg-spp":
        want = sr.hook_product("outside", legs[0], bound)
    elif family == "one-leg-rpp":
        want = _rpp_hook_series(legs[0], bound)
    elif family == "two-leg-spp":
        want = sr.evaluate_stable("two-leg-spp", (legs[0], legs[1]), bound)
    elif family == "two-leg-rpp":
        want = sr.evaluate_stable("two-leg-rpp", (legs[0], legs[1]), bound)
    else:
        print(f"verify: unknown census family {family}", file=sys.stderr)
        return EXIT_USAGE
    report.check(f"census-{family}", got == want,
                 f"{len(configs)} configurations vs series")
    return report.finish()


def _rpp_hook_series(lam, bound) -> sr.TruncatedSeries:
    out = sr.TruncatedSeries.one(HalfInt.of(bound))
    from .partitions import hook_length
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            out = out * sr.geometric(hook_length(lam, (i, j), "inside"), bound)
    return out


def cmd_render(args) -> int:
    payload = _load_json(args)
    cfg = sz.config_from_json(payload)
    text = render_svg(cfg) if args.format == "svg" else render_ascii(cfg)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pptoggle",
        description="toggle bijections, vertex-operator series, and brute-force "
                    "verification for plane-partition-like objects")
    top.add_argument("--json", action="store_true", help="machine-readable report")
    top.add_argument("--seed", type=int, default=0, help="seed for seeded orders")
    # the global flags are also accepted after the verb
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    shared.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("series", help="evaluate a generating function",
                       parents=[shared])
    p.add_argument("--macmahon", action="store_true")
    p.add_argument("--one-leg", metavar="PARTS")
    p.add_argument("--two-leg", metavar="LAM/MU")
    p.add_argument("--two-leg-rpp", metavar="LAM/MU")
    p.add_argument("--degree", type=HalfInt.parse, default=HalfInt.of(6),
                   help="truncation degree, e.g. 6 or 13/2")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("biject", parents=[shared], help="run a decomposition on JSON input")
    p.add_argument("family", choices=["plane", "one-leg", "two-leg"])
    p.add_argument("--direction", choices=["forward", "inverse"],
                   default="forward")
    p.add_argument("--schedule", default="off-diagonal")
    p.add_argument("--round-trip", action="store_true")
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=cmd_biject)

    p = sub.add_parser("enumerate", parents=[shared], help="write a census as JSON lines")
    p.add_argument("--family", required=True,
                   choices=["plane", "one-leg-spp", "one-leg-rpp",
                            "two-leg-spp", "two-leg-rpp"])
    p.add_argument("--legs", help="2,1 for one-leg, 2,2/3,1 for two-leg")
    p.add_argument("--bound", type=HalfInt.parse, required=True)
    p.add_argument("--output", default="-")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("toggle", parents=[shared], help="toggle a middle partition")
    p.add_argument("--upper", required=True)
    p.add_argument("--middle", required=True)
    p.add_argument("--lower", required=True)
    p.add_argument("--push", type=int, help="push this value (valley case)")
    p.set_defaults(fn=cmd_toggle)

    p = sub.add_parser("verify", parents=[shared], help="run invariant suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--degree", type=HalfInt.parse)
    p.add_argument("--max-part", type=int, dest="max_part")
    p.add_argument("--max-weight", type=int, dest="max_weight")
    p.add_argument("--lambda", dest="shape", metavar="PARTS",
                   help="restrict shape-indexed suites to one shape")
    p.add_argument("--census", help="check a census file against its series")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", parents=[shared], help="draw a configuration")
    p.add_argument("--input", default="-")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=cmd_render)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except NonConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONV
    except (DomainError, ScheduleError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
