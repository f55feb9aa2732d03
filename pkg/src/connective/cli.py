"""Command-line front end: ``connective mu|series|enumerate|table``.

Product spec files are line oriented::

    # K2 * K3
    factor complete 2
    factor cycle 3
    factor ladder 1
    factor file graphs/petersen.txt
    factor rational num=[0,4,4,4] den=[1,0,-2]
    option tol 1/1000000000000
    option series-order 20

``factor cycle 2`` means K_2 and ``factor cycle inf`` the bi-infinite line
(rational 2z/(1-z)). In ``table`` runs, ``{name}`` placeholders are filled
from ``--param name=a..b``.

Exit codes: 0 ok, 1 no positive root, 2 result not certified, 3 series and
brute-force disagree, 4 node budget exceeded, 64 bad spec or arguments, 66 unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .genfun import FactorGenFun, GenFunError, expand_M, genfun_from_counts, genfun_from_rational
from .graphs import GraphError, RootedGraph, build_complete, build_cycle, build_ladder_segment, parse_graph
from .pipeline import connective_constant
from .poly import Polynomial
from .roots import DEFAULT_TOL, NoPositiveRoot
from .walks import BudgetExceeded, default_budget, factor_saw_counts, free_product_saw_counts

EXIT_OK = 0
EXIT_NO_ROOT = 1
EXIT_NOT_CERTIFIED = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4
EXIT_USAGE = 64
EXIT_NOINPUT = 66

FORMATS = ("json", "csv", "text")


class SpecError(ValueError):
    pass


@dataclass
class FactorDecl:
    kind: str
    args: tuple[str, ...]
    graph: RootedGraph | None = None
    genfun: FactorGenFun | None = None


@dataclass
class ProductSpec:
    factors: list[FactorDecl]
    options: dict[str, str] = field(default_factory=dict)

    @property
    def genfuns(self) -> list[FactorGenFun]:
        return [f.genfun for f in self.factors]

    @property
    def finite(self) -> bool:
        return all(f.graph is not None for f in self.factors)

    @property
    def graphs(self) -> list[RootedGraph]:
        return [f.graph for f in self.factors]


OPTION_NAMES = {"tol", "series-order", "enum-depth", "budget", "format", "digits"}


def _int(text: str, what: str, lo: int = 0) -> int:
    try:
        v = int(text)
    except ValueError:
        raise SpecError(f"{what} must be an integer, got {text!r}") from None
    if v < lo:
        raise SpecError(f"{what} must be >= {lo}, got {v}")
    return v


def _coeff_list(text: str, what: str) -> Polynomial:
    m = re.fullmatch(r"\[([^\]]*)\]", text)
    if not m:
        raise SpecError(f"{what} must look like [c0,c1,...], got {text!r}")
    try:
        return Polynomial(Fraction(x.strip()) for x in m.group(1).split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"bad coefficient in {what}: {text!r}") from None


def graph_factor(graph: RootedGraph, kind: str, args: tuple[str, ...]) -> FactorDecl:
    gf = genfun_from_counts(factor_saw_counts(graph), str(graph) or f"{kind} {' '.join(args)}")
    return FactorDecl(kind, args, graph, gf)


def resolve_factor(kind: str, args: Sequence[str], base_dir: Path = Path(".")) -> FactorDecl:
    args = tuple(args)
    try:
        if kind in ("complete", "cycle", "ladder"):
            if len(args) != 1:
                raise SpecError(f"factor {kind} takes one argument")
            if kind == "cycle" and args[0] in ("inf", "infinity"):
                gf = genfun_from_rational(Polynomial([0, 2]), Polynomial([1, -1]), "Cinf")
                return FactorDecl(kind, args, None, gf)
            n = _int(args[0], f"factor {kind} size")
            if kind == "complete":
                g = build_complete(n)
            elif kind == "cycle":
                g = build_complete(2) if n == 2 else build_cycle(n)
                g = RootedGraph(g.adjacency, g.root, f"C{n}")
            else:
                g = build_ladder_segment(n)
            return graph_factor(g, kind, args)
        if kind == "file":
            if len(args) != 1:
                raise SpecError("factor file takes one path")
            path = Path(args[0])
            if not path.is_absolute():
                path = base_dir / path
            g = parse_graph(path.read_text(encoding="utf-8"))
            g = RootedGraph(g.adjacency, g.root, path.stem)
            return graph_factor(g, kind, args)
        if kind == "rational":
            kv = dict(a.split("=", 1) for a in args if "=" in a)
            if set(kv) != {"num", "den"} or len(args) != 2:
                raise SpecError("factor rational needs num=[...] den=[...]")
            gf = genfun_from_rational(_coeff_list(kv["num"], "num"), _coeff_list(kv["den"], "den"))
            return FactorDecl(kind, args, None, gf)
    except (GraphError, GenFunError) as exc:
        raise SpecError(f"factor {kind} {' '.join(args)}: {exc}") from None
    raise SpecError(f"unknown factor kind {kind!r}")


def parse_spec(text: str, base_dir: Path = Path("."), params: dict[str, str] | None = None) -> ProductSpec:
    """Parse a product spec; ``{name}`` placeholders are substituted from ``params``."""
    factors, options = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if params:
            for k, v in params.items():
                line = line.replace("{" + k + "}", v)
        if "{" in line:
            raise SpecError(f"line {lineno}: unfilled placeholder in {line!r}")
        parts = line.split()
        try:
            if parts[0] == "factor" and len(parts) >= 2:
                factors.append(resolve_factor(parts[1], parts[2:], base_dir))
            elif parts[0] == "option" and len(parts) == 3:
                if parts[1] not in OPTION_NAMES:
                    raise SpecError(f"unknown option {parts[1]!r}")
                options[parts[1]] = parts[2]
            else:
                raise SpecError(f"expected 'factor ...' or 'option <name> <value>', got {line!r}")
        except SpecError as exc:
            raise SpecError(f"line {lineno}: {exc}") from None
    if len(factors) < 2:
        raise SpecError(f"a free product needs at least 2 factors, got {len(factors)}")
    return ProductSpec(factors, options)


def _read_spec(path: str, params: dict[str, str] | None = None) -> ProductSpec:
    if path == "-":
        return parse_spec(sys.stdin.read(), Path("."), params)
    p = Path(path)
    return parse_spec(p.read_text(encoding="utf-8"), p.parent, params)


def _tol(args, spec: ProductSpec) -> Fraction:
    raw = args.tol or spec.options.get("tol")
    if raw is None:
        return DEFAULT_TOL
    try:
        t = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"tolerance must be a rational or decimal, got {raw!r}") from None
    if t <= 0:
        raise SpecError("tolerance must be positive")
    return t


def _format(args, spec: ProductSpec | None, default: str) -> str:
    fmt = args.format or (spec.options.get("format") if spec else None) or default
    if fmt not in FORMATS:
        raise SpecError(f"unknown output format {fmt!r}")
    return fmt


def _digits(args, spec: ProductSpec | None) -> int:
    if args.digits is not None:
        return args.digits
    if spec and "digits" in spec.options:
        return _int(spec.options["digits"], "option digits", 1)
    return 6


def _budget(args, spec: ProductSpec | None) -> int:
    if args.budget is not None:
        return args.budget
    if spec and "budget" in spec.options:
        return _int(spec.options["budget"], "option budget", 1)
    return default_budget()


def _emit_table(header: Sequence[str], rows: list[Sequence], fmt: str, out) -> None:
    if fmt == "json":
        json.dump([dict(zip(header, r)) for r in rows], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        widths = [max(len(str(x)) for x in [h] + [r[k] for r in rows]) for k, h in enumerate(header)]
        out.write("  ".join(h.rjust(wd) for h, wd in zip(header, widths)) + "\n")
        for r in rows:
            out.write("  ".join(str(x).rjust(wd) for x, wd in zip(r, widths)) + "\n")


def cmd_mu(args, out=sys.stdout) -> int:
    spec = _read_spec(args.spec)
    digits = _digits(args, spec)
    res = connective_constant(spec.genfuns, _tol(args, spec))
    fmt = _format(args, spec, "json")
    doc = res.to_json(digits)
    doc["factors"] = [str(f) for f in spec.genfuns]
    if fmt == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        _emit_table(["mu", "mu_lo", "mu_hi", "z_star", "amplitude", "certified"],
                    [[doc["mu"]["value"], doc["mu"]["lo"], doc["mu"]["hi"], doc["z_star"]["value"],
                      doc["amplitude"]["value"] if doc["amplitude"] else "", res.certified]], "csv", out)
    else:
        out.write(f"product    {' * '.join(doc['factors'])}\n")
        out.write(f"mu         {doc['mu']['value']}" + ("  (exact)\n" if res.z_star.exact else "\n"))
        out.write(f"z*         {doc['z_star']['value']}\n")
        if doc["amplitude"]:
            out.write(f"amplitude  {doc['amplitude']['value']}\n")
        out.write(f"D~(z)      {res.witness_poly}\n")
        for c in res.diagnostics:
            mark = "ok  " if c.passed else "FAIL"
            flag = f" [{c.flag}]" if c.flag else ""
            out.write(f"  {mark} {c.name}: {c.detail}{flag}\n")
    return EXIT_OK if res.certified else EXIT_NOT_CERTIFIED


def cmd_series(args, out=sys.stdout) -> int:
    spec = _read_spec(args.spec)
    n = args.N if args.N is not None else _int(spec.options.get("series-order", "10"), "series-order")
    s = expand_M(spec.genfuns, n)
    if not s.is_integral() or any(c < 0 for c in s):
        raise SpecError("series has non-integral or negative coefficients")
    sigma = s.as_ints()
    fmt = _format(args, spec, "csv")
    if not args.verify:
        _emit_table(["n", "sigma"], [[k, str(v)] for k, v in enumerate(sigma)], fmt, out)
        return EXIT_OK
    if not spec.finite:
        raise SpecError("--verify needs finite factors only")
    depth = min(n, _int(spec.options.get("enum-depth", str(n)), "enum-depth"))
    oracle = free_product_saw_counts(spec.graphs, depth, budget=_budget(args, spec), force=args.force)
    rows, ok = [], True
    for k, v in enumerate(sigma):
        if k > depth:
            rows.append([k, str(v), "", ""])
            continue
        match = oracle[k] == v
        ok &= match
        rows.append([k, str(v), str(oracle[k]), match])
    _emit_table(["n", "sigma", "brute_force", "match"], rows, fmt, out)
    return EXIT_OK if ok else EXIT_MISMATCH


def _graph_arg(text: str) -> RootedGraph:
    m = re.fullmatch(r"(complete|cycle|ladder):(\d+)", text)
    if m:
        return resolve_factor(m.group(1), [m.group(2)]).graph
    return parse_graph(Path(text).read_text(encoding="utf-8"))


def cmd_enumerate(args, out=sys.stdout) -> int:
    try:
        g = _graph_arg(args.graph)
    except GraphError as exc:
        raise SpecError(str(exc)) from None
    counts = list(factor_saw_counts(g))
    if args.N is not None:
        counts = (counts + [0] * (args.N + 1))[: args.N + 1]
    fmt = _format(args, None, "csv")
    _emit_table(["n", "count"], [[k, str(c)] for k, c in enumerate(counts)], fmt, out)
    return EXIT_OK


def _param_values(text: str) -> tuple[str, list[str]]:
    m = re.fullmatch(r"(\w+)=(.+)", text)
    if not m:
        raise SpecError(f"--param must be name=a..b or name=v1,v2,..., got {text!r}")
    name, rng = m.groups()
    values = []
    for part in rng.split(","):
        r = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", part)
        if r:
            a, b = int(r.group(1)), int(r.group(2))
            values += [str(v) for v in range(a, b + 1)]
        else:
            values.append(part)
    return name, values


def cmd_table(args, out=sys.stdout) -> int:
    name, values = _param_values(args.param)
    text = Path(args.spec).read_text(encoding="utf-8") if args.spec != "-" else sys.stdin.read()
    base = Path(args.spec).parent
    rows, status = [], EXIT_OK
    digits = None
    fmt = None
    for v in values:
        spec = parse_spec(text, base, {name: v})
        digits = digits or _digits(args, spec)
        fmt = fmt or _format(args, spec, "csv")
        res = connective_constant(spec.genfuns, _tol(args, spec))
        if not res.certified:
            status = EXIT_NOT_CERTIFIED
        rows.append([v, f"{res.mu:#.{digits}g}", res.z_star.exact, res.certified])
    _emit_table([name, "mu", "exact", "certified"], rows, fmt or "csv", out)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="connective", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    for f in FORMATS:
        fmt.add_argument(f"--{f}", dest="format", action="store_const", const=f)
    common.add_argument("--tol", help="width of the z* interval (rational, default 1e-12)")
    common.add_argument("--digits", type=int, help="significant digits for floats (default 6)")
    common.add_argument("--budget", type=int, help="node budget for brute force (env CONNECTIVE_BUDGET)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", parents=[common], help="connective constant of a free product")
    p.add_argument("spec")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("series", parents=[common], help="SAW counts of a free product")
    p.add_argument("spec")
    p.add_argument("-N", type=int)
    p.add_argument("--verify", action="store_true", help="compare with brute-force enumeration")
    p.add_argument("--force", action="store_true", help="allow brute force beyond length 25")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("enumerate", parents=[common], help="SAW counts of a single factor")
    p.add_argument("graph", help="edge-list file or complete:N / cycle:N / ladder:K")
    p.add_argument("-N", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", parents=[common], help="mu over a parameter range")
    p.add_argument("spec")
    p.add_argument("--param", required=True, help="name=a..b or name=v1,v2")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except SpecError as exc:
        print(f"connective: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"connective: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except NoPositiveRoot as exc:
        print(f"connective: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    except BudgetExceeded as exc:
        print(f"connective: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"connective: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
