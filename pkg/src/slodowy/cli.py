"""Command-line front end.

Slice verbs take the base-point partition first: ``slodowy decompose <d'> <d>``
works with ``S_{d',d}``, the slice at a point of ``O_{d'}`` inside the
closure of ``O_d``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .chambers import Chamber, enumerate_chambers, flop_graph, locate, slice_chambers
from .errors import (
    ConsistencyError,
    DimensionMismatch,
    InputError,
    InternalInconsistency,
    ParseError,
    SamplingExhausted,
)
from .liealg import (
    expected_slice_basis_dim,
    jordan_nilpotent,
    slice_sample_dim,
    sl2_completion,
    slodowy_slice_basis,
    transversality_check,
)
from .linalg import Matrix, fraction_to_str, matrix_to_json
from .partitions import (
    ASCII_BOX,
    BOX,
    Partition,
    count_resolutions,
    dominates,
    dual,
    format_partition,
    orbit_dim,
    parse,
    render,
)
from .quiverlab import (
    QuiverRep,
    all_A_surjective,
    from_flag,
    is_one_stable,
    moment_map,
    nilpotent_partition,
    random_flag_point,
    reflect,
    reflection_sequence_exact,
    sample_tilde,
    theta,
)
from .slices import (
    count_slice_resolutions,
    decompose_quiver,
    decompose_young,
    decomposition_report,
    dimension_vectors,
    make_slice_pair,
    slice_dim,
    tilde_vectors,
)
from .verify import SUITES, run_suite


@dataclass
class Output:
    data: dict
    text: str
    dot: str | None = None
    status: int = 0
    notes: list[str] = field(default_factory=list)


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- small helpers ------------------------------------------------------------


def _glyph(args) -> str:
    return ASCII_BOX if args.ascii else BOX


def _side_by_side(left: str, right: str, gap: int = 4) -> str:
    ls, rs = left.splitlines(), right.splitlines()
    width = max((len(x) for x in ls), default=0)
    rows = max(len(ls), len(rs))
    ls += [""] * (rows - len(ls))
    rs += [""] * (rows - len(rs))
    return "\n".join((a.ljust(width + gap) + b).rstrip() for a, b in zip(ls, rs))


def _frac_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t) for t in text.replace(" ", "").split(",") if t != "")
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"expected comma-separated rationals, got {text!r}") from exc


def _composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ParseError(f"expected comma-separated positive integers, got {text!r}") from exc
    if not parts or any(x <= 0 for x in parts):
        raise ParseError(f"expected comma-separated positive integers, got {text!r}")
    return parts


def _matrix_text(m: Matrix, indent: str = "  ") -> str:
    if m.nrows == 0 or m.ncols == 0:
        return f"{indent}({m.nrows}x{m.ncols})"
    cells = [[str(x) for x in row] for row in m.rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(indent + "[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def _pair(args):
    return make_slice_pair(parse(args.dp), parse(args.d))


def _partitions(args) -> list[Partition]:
    return [parse(p) for p in args.partitions]


# -- verbs ---------------------------------------------------------------------


def cmd_dual(args) -> Output:
    d = parse(args.d)
    a = dual(d)
    glyph = _glyph(args)
    text = f"{format_partition(a)}\n\n" + _side_by_side(render(d, glyph), render(a, glyph))
    return Output({"partition": list(d), "dual": list(a)}, text)


def cmd_leq(args) -> Output:
    dp, d = parse(args.dp), parse(args.d)
    ok = dominates(dp, d)
    return Output({"dp": list(dp), "d": list(d), "leq": ok}, "true" if ok else "false")


def cmd_dim(args) -> Output:
    parts = _partitions(args)
    if len(parts) == 1:
        (d,) = parts
        data = {"partition": list(d), "orbit_dim": orbit_dim(d)}
        lines = [f"orbit_dim: {data['orbit_dim']}"]
        if not d.is_trivial():
            tv = tilde_vectors(d)
            data["tilde"] = {"v": list(tv.v), "w": list(tv.w)}
            lines += [f"tilde v: {format_partition(tv.v)}", f"tilde w: {format_partition(tv.w)}"]
        return Output(data, "\n".join(lines))
    if len(parts) != 2:
        raise UsageError("dim takes <d> or <d'> <d>")
    sp = make_slice_pair(*parts)
    data = {"dp": list(sp.dp), "d": list(sp.d), "slice_dim": slice_dim(sp)}
    lines = [f"slice_dim: {data['slice_dim']}"]
    if not sp.d.is_trivial():
        dv = dimension_vectors(sp)
        data["v"], data["w"] = list(dv.v), list(dv.w)
        lines += [f"v: {format_partition(dv.v)}", f"w: {format_partition(dv.w)}"]
    notes = []
    if args.trials is not None:
        try:
            est = slice_sample_dim(sp, args.trials, args.seed)
            data["sample_dim"] = est
            lines.append(f"sample_dim: {est} (randomized, {args.trials} trials)")
        except SamplingExhausted as exc:
            data["sample_dim"] = None
            notes.append(_diagnostic(exc))
            lines.append("sample_dim: none found")
    return Output(data, "\n".join(lines), notes=notes)


def cmd_count(args) -> Output:
    d = parse(args.d)
    n = count_resolutions(d)
    return Output({"partition": list(d), "count": n}, str(n))


def _factor_text(report: dict, args) -> str:
    glyph = _glyph(args)
    blocks = []
    for k, f in enumerate(report["factors"], start=1):
        head = (
            f"factor {k}: d={format_partition(f['d'])}  dp={format_partition(f['dp'])}"
            f"  N={f['N']}  count={f['count']}"
        )
        pic = _side_by_side(render(Partition(f["d"]), glyph), render(Partition(f["dp"]), glyph))
        blocks.append(head + "\n" + pic)
    blocks.append(f"total_count: {report['total_count']}\nslice_dim: {report['slice_dim']}")
    return "\n\n".join(blocks)


def cmd_decompose(args) -> Output:
    sp = _pair(args)
    if sp.d.is_trivial():
        factors = []
    elif args.method == "quiver":
        factors = decompose_quiver(sp)
    elif args.method == "young":
        factors = decompose_young(sp)
    else:
        factors = decompose_quiver(sp)
        other = decompose_young(sp)
        if [f.key() for f in factors] != [f.key() for f in other]:
            raise InternalInconsistency(
                f"quiver gives {[f.key() for f in factors]}, young gives {[f.key() for f in other]}"
            )
    report = decomposition_report(sp, factors)
    return Output(report, _factor_text(report, args))


def cmd_count_slice(args) -> Output:
    sp = _pair(args)
    n = count_slice_resolutions(sp)
    return Output({"dp": list(sp.dp), "d": list(sp.d), "count": n}, str(n))


def _chamber_line(c: Chamber) -> str:
    return f"perm {format_partition(c.perm)}  flag type {format_partition(c.flag_type)}"


def cmd_chambers(args) -> Output:
    parts = _partitions(args)
    if len(parts) == 1:
        (d,) = parts
        g = flop_graph(d)
        if args.at is not None:
            chi = _frac_list(args.at)
            hit = locate(chi, d)
            data = {"d": list(d), "at": [fraction_to_str(c) for c in chi]}
            if isinstance(hit, Chamber):
                data["chamber"] = hit.to_json()
                text = "chamber " + _chamber_line(hit)
            else:
                data["wall"] = {"z": [fraction_to_str(z) for z in hit.z], "ties": [list(t) for t in hit.ties]}
                ties = " ".join(f"z{i}=z{j}" for i, j in hit.ties)
                text = f"wall ({ties})"
            return Output(data, text, dot=g.to_dot())
        chambers = enumerate_chambers(d)
        data = {
            "d": list(d),
            "chambers": [c.to_json() for c in chambers],
            "resolutions": count_resolutions(d),
        }
        text = "\n".join(_chamber_line(c) for c in chambers)
        text += f"\n{len(chambers)} chambers, {data['resolutions']} distinct flag types"
        return Output(data, text, dot=g.to_dot())
    if len(parts) != 2:
        raise UsageError("chambers takes <d> or <d'> <d>")
    if args.at is not None:
        raise UsageError("--at needs a single partition <d>")
    sc = slice_chambers(make_slice_pair(*parts))
    per_factor = sc.chambers
    data = {
        "factors": [
            {"d": list(f), "chambers": [c.to_json() for c in cs]} for f, cs in zip(sc.factors, per_factor)
        ],
        "graph": sc.graph.to_json(),
    }
    lines = []
    for f, cs in zip(sc.factors, per_factor):
        lines.append(f"factor d={format_partition(f)}: {len(cs)} chambers")
        lines += ["  " + _chamber_line(c) for c in cs]
    lines.append(f"product: {len(sc.graph.nodes)} resolutions, {len(sc.graph.edges)} flops")
    return Output(data, "\n".join(lines), dot=sc.graph.to_dot())


def cmd_flops(args) -> Output:
    parts = _partitions(args)
    if len(parts) == 1:
        g = flop_graph(parts[0])
    elif len(parts) == 2:
        g = slice_chambers(make_slice_pair(*parts)).graph
    else:
        raise UsageError("flops takes <d> or <d'> <d>")
    data = g.to_json()
    data["connected"] = g.is_connected()
    lines = [f"{len(g.nodes)} nodes, {len(g.edges)} edges"]
    lines += [f"{a} -- {b}" for a, b in data["edges"]]
    return Output(data, "\n".join(lines), dot=g.to_dot())


def _rep_text(r: QuiverRep) -> str:
    lines = [f"v: {format_partition(r.v)}", f"w: {format_partition(r.w)}"]
    for name, maps in (("A", r.A), ("B", r.B), ("Gamma", r.Gamma), ("Delta", r.Delta)):
        for k, m in enumerate(maps, start=1):
            lines.append(f"{name}_{k}:")
            lines.append(_matrix_text(m))
    return "\n".join(lines)


def cmd_quiver_sample(args) -> Output:
    d = parse(args.d)
    a = tuple(dual(d))
    flag_type = a if args.flag_type is None else _composition(args.flag_type)
    if tuple(sorted(flag_type, reverse=True)) != a:
        raise DimensionMismatch(f"DimensionMismatch: flag type {list(flag_type)} does not rearrange {list(a)}")
    if len(a) < 2:
        raise DimensionMismatch("DimensionMismatch: the partition must have at least two columns")
    rng = random.Random(args.seed)
    data = {"d": list(d), "flag_type": list(flag_type)}
    if args.unstable:
        v = [sum(flag_type[k + 1 :]) for k in range(len(flag_type) - 1)]
        ranks = list(v)
        ranks[rng.randrange(len(ranks))] -= 1
        r = sample_tilde(flag_type, rng, a_ranks=ranks)
    else:
        point = random_flag_point(flag_type, rng)
        r = from_flag(point)
        data["flag_point"] = point.to_json()
    data["rep"] = r.to_json()
    return Output(data, _rep_text(r))


def _load_rep(path: str) -> QuiverRep:
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                raw = fh.read()
        data = json.loads(raw)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}") from exc
    if isinstance(data, dict) and "rep" in data:
        data = data["rep"]
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object describing a quiver representation")
    return QuiverRep.from_json(data)


def cmd_quiver_check(args) -> Output:
    r = _load_rep(args.file)
    mu = moment_map(r)
    fiber = all(m.is_zero() for m in mu)
    data = {"v": list(r.v), "w": list(r.w), "on_fiber": fiber, "moment_map": [matrix_to_json(m) for m in mu]}
    lines = [f"v: {format_partition(r.v)}", f"w: {format_partition(r.w)}", f"moment map zero: {fiber}"]
    if fiber:
        stable = is_one_stable(r)
        data["one_stable"] = stable
        lines.append(f"1-stable: {stable}")
        if r.is_tilde():
            onto = all_A_surjective(r)
            data["all_A_surjective"] = onto
            lines.append(f"all A surjective: {onto}")
            if onto != stable:
                raise InternalInconsistency("stability and surjectivity of A disagree")
            if stable:
                point = theta(r)
                kind = nilpotent_partition(point.x)
                data["theta"] = point.to_json()
                data["x_partition"] = list(kind)
                data["flag_type"] = list(point.flag_type())
                lines.append(f"theta: x of type {format_partition(kind)}, flag type {format_partition(point.flag_type())}")
    if args.reflect is not None:
        chi = None if args.chi is None else _frac_list(args.chi)
        r2 = reflect(r, args.reflect, chi)
        exact = reflection_sequence_exact(r, r2, args.reflect)
        kept = r2.Delta[0] @ r2.Gamma[0] == r.Delta[0] @ r.Gamma[0]
        data["reflected"] = {"vertex": args.reflect, "rep": r2.to_json(), "exact": exact, "B0A0_kept": kept}
        lines.append(f"reflected at {args.reflect}: v = {format_partition(r2.v)}, exact: {exact}, B0A0 kept: {kept}")
    return Output(data, "\n".join(lines))


def cmd_sl2(args) -> Output:
    d = parse(args.d)
    t = sl2_completion(d)
    if jordan_nilpotent(d) != t.x:
        raise InternalInconsistency("triple does not pass through the Jordan representative")
    basis = slodowy_slice_basis(t)
    data = {
        "d": list(d),
        "x": matrix_to_json(t.x),
        "y": matrix_to_json(t.y),
        "h": matrix_to_json(t.h),
        "relations_hold": t.relations_hold(),
        "x_partition": list(nilpotent_partition(t.x)),
        "slice_basis_dim": len(basis),
        "expected_slice_basis_dim": expected_slice_basis_dim(d),
        "transversal": transversality_check(t, d),
    }
    lines = []
    for name in ("x", "y", "h"):
        lines.append(f"{name}:")
        lines.append(_matrix_text(getattr(t, name)))
    lines += [
        f"relations hold: {data['relations_hold']}",
        f"dim Ker(ad y) in sl_N: {len(basis)} (expected {data['expected_slice_basis_dim']})",
        f"transversal: {data['transversal']}",
    ]
    return Output(data, "\n".join(lines))


def cmd_verify(args) -> Output:
    names = args.suites or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    results = [run_suite(n, seed=args.seed, trials=args.trials) for n in names]
    ok = all(r.passed for r in results)
    rows = [f"{'suite':<24}{'checked':>9}{'failed':>8}  result"]
    for r in results:
        rows.append(f"{r.name:<24}{r.checked:>9}{r.failed:>8}  {'PASS' if r.passed else 'FAIL'}")
        rows += [f"    {msg}" for msg in r.failures]
    return Output({"suites": [r.to_json() for r in results], "passed": ok}, "\n".join(rows), status=0 if ok else 2)


@dataclass(frozen=True)
class Verb:
    handler: Callable
    help: str
    ops: tuple[str, ...]  # module operations this verb reaches


DISPATCH: dict[str, Verb] = {
    "dual": Verb(cmd_dual, "dual partition and Young diagrams", ("parse", "dual", "render")),
    "leq": Verb(cmd_leq, "dominance test: is O_{d'} in the closure of O_d", ("dominates",)),
    "dim": Verb(
        cmd_dim,
        "orbit dimension, or slice dimension with quiver data",
        ("orbit_dim", "tilde_vectors", "make_slice_pair", "slice_dim", "dimension_vectors", "slice_sample_dim"),
    ),
    "count": Verb(cmd_count, "number of symplectic resolutions of the orbit closure", ("count_resolutions",)),
    "decompose": Verb(
        cmd_decompose, "split a slice into a product of smaller slices", ("decompose_quiver", "decompose_young")
    ),
    "count-slice": Verb(cmd_count_slice, "number of symplectic resolutions of a slice", ("count_slice_resolutions",)),
    "chambers": Verb(
        cmd_chambers, "Weyl chambers labelled by flag type", ("enumerate_chambers", "locate", "slice_chambers")
    ),
    "flops": Verb(cmd_flops, "flop graph of resolutions", ("flop_graph",)),
    "quiver-sample": Verb(
        cmd_quiver_sample, "random quiver representation from a flag", ("from_flag", "random_flag_point", "sample_tilde")
    ),
    "quiver-check": Verb(
        cmd_quiver_check,
        "check a quiver representation given as JSON",
        ("moment_map", "is_one_stable", "all_A_surjective", "theta", "nilpotent_partition", "reflect"),
    ),
    "sl2": Verb(
        cmd_sl2,
        "sl2-triple, slice basis and transversality",
        ("jordan_nilpotent", "sl2_completion", "slodowy_slice_basis", "transversality_check"),
    ),
    "verify": Verb(cmd_verify, "run the property suites", ()),
}


# -- parser --------------------------------------------------------------------


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2^64)")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--ascii", action="store_true", help="draw Young diagrams with '#'")
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--trials", type=_positive, default=None)

    parser = _Parser(
        prog="slodowy",
        description="Nilpotent orbits of sl_N, Slodowy slices and their symplectic resolutions.",
        epilog="Slice verbs take the base-point partition first: <d'> <d>.",
    )
    sub = parser.add_subparsers(dest="verb", metavar="verb", required=True)

    def add(name: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=DISPATCH[name].help)

    add("dual").add_argument("d")
    p = add("leq")
    p.add_argument("dp", metavar="d'")
    p.add_argument("d")
    add("dim").add_argument("partitions", nargs="+", metavar="partition", help="<d> or <d'> <d>")
    add("count").add_argument("d")
    p = add("decompose")
    p.add_argument("dp", metavar="d'")
    p.add_argument("d")
    p.add_argument("--method", choices=("young", "quiver", "both"), default="quiver")
    p = add("count-slice")
    p.add_argument("dp", metavar="d'")
    p.add_argument("d")
    p = add("chambers")
    p.add_argument("partitions", nargs="+", metavar="partition", help="<d> or <d'> <d>")
    p.add_argument("--at", metavar="CHI", help="locate a character, e.g. --at=1,-1/2")
    p.add_argument("--dot", action="store_true", help="emit the flop graph in DOT")
    add("flops").add_argument("partitions", nargs="+", metavar="partition", help="<d> or <d'> <d>")
    p = add("quiver-sample")
    p.add_argument("d")
    p.add_argument("--flag-type", metavar="T", help="rearrangement of dual(d); default dual(d)")
    p.add_argument("--unstable", action="store_true", help="sample a fiber point with a non-surjective A")
    p = add("quiver-check")
    p.add_argument("file", help="JSON file, or - for stdin")
    p.add_argument("--reflect", type=_positive, metavar="I", help="apply the reflection at vertex I")
    p.add_argument("--chi", metavar="CHI", help="character for --reflect (default 1,...,1)")
    add("sl2").add_argument("d")
    add("verify").add_argument("suites", nargs="*", metavar="suite", help=f"any of {', '.join(SUITES)}")
    return parser


def _diagnostic(exc: Exception) -> str:
    name = type(exc).__name__
    msg = str(exc)
    if msg.startswith(name + ":"):
        msg = msg[len(name) + 1 :].strip()
    return f"{name}: {msg}"


def render_output(out: Output, args) -> str:
    if args.format == "json":
        return json.dumps(out.data, sort_keys=True, indent=2)
    if args.format == "dot" or getattr(args, "dot", False):
        if out.dot is None:
            raise UsageError(f"{args.verb} has no DOT output")
        return out.dot.rstrip("\n")
    return out.text


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        out = DISPATCH[args.verb].handler(args)
        text = render_output(out, args)
    except InputError as exc:
        print(f"error: {_diagnostic(exc)}", file=stderr)
        return 1
    except ConsistencyError as exc:
        print(f"internal inconsistency: {_diagnostic(exc)}", file=stderr)
        return 2
    print(text, file=stdout)
    for note in out.notes:
        print(f"note: {note}", file=stderr)
    return out.status


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run(argv)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
