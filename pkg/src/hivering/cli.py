"""Command-line front end.

Examples::

    hivering lrcoef --lambda 2,1,0 --mu 2,1,0 --nu 3,2,1
    hivering expand --lambda 2,1,0 --mu 2,1,0
    hivering hives --lambda 2,1,0 --mu 2,1,0 --nu 3,2,1 --format json
    hivering pieri --lambda 2,1,0 --i 1
    hivering excavate --lambda 1,0 --mu 1,0 --nu 1,0 --pi 2,1
    hivering check-assoc --lambda 1,0 --mu 1,0 --nu 1,0 --pi 2,1
    hivering honeycomb --lambda 2,1,0 --mu 2,1,0 --nu 3,2,1 --svg out.svg
    hivering speyer --n 4 --entry 1,0,1,2
    hivering laurent --n 3
"""

from __future__ import annotations

import argparse
import json
import sys

from . import excavation, honeycomb, hive, laurent, ring, schur, speyer


class UsageError(Exception):
    pass


def _weight(text: str):
    try:
        return hive.parse_weight(text)
    except hive.HiveError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text: str):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad point {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=False)


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _same_length(*ws):
    if len({len(w) for w in ws}) != 1:
        raise hive.HiveError("weights must have equal length")


def cmd_lrcoef(args) -> str:
    _same_length(args.lam, args.mu, args.nu)
    if args.method == "schur":
        return str(schur.lr_coef_oracle(args.lam, args.mu, args.nu))
    return str(ring.structure_constant(args.lam, args.mu, args.nu))


def cmd_expand(args) -> str:
    _same_length(args.lam, args.mu)
    prod = ring.product_expand(args.lam, args.mu)
    if args.format == "json":
        return _dump(prod.to_json())
    return "\n".join(f"{hive.format_weight(w)}: {prod[w]}" for w in prod)


def cmd_pieri(args) -> str:
    prod = ring.pieri_expand(args.lam, args.i)
    if args.format == "json":
        return _dump(prod.to_json())
    return "\n".join(f"{hive.format_weight(w)}: {prod[w]}" for w in prod)


def cmd_hives(args) -> str:
    hs = hive.enumerate_hives(hive.BoundarySpec(args.lam, args.mu, args.nu))
    if args.format == "json":
        return _dump([h.to_json() for h in hs])
    return "\n\n".join(str(h) for h in hs) if hs else "(no hives)"


def _pair_json(p: excavation.HivePair) -> dict:
    return {"left": p.left.to_json(), "right": p.right.to_json(), "shared": list(p.shared)}


def cmd_excavate(args) -> str:
    if args.input:
        data = _read_json(args.input)
        pairs = [(hive.Hive.from_json(data["left"]), hive.Hive.from_json(data["right"]))]
    else:
        ws = (args.lam, args.mu, args.nu, args.pi)
        if any(w is None for w in ws):
            raise UsageError("give --input or all of --lambda --mu --nu --pi")
        _same_length(*ws)
        pairs = excavation.top_pairs(*ws)
    out = []
    for h1, h2 in pairs:
        trace: list = []
        t = excavation.assemble_top(h1, h2)
        bottom = excavation.excavate(t, trace=trace if args.trace else None)
        entry = {"top": _pair_json(excavation.top_pair(t)), "bottom": _pair_json(bottom)}
        if args.trace:
            entry["trace"] = trace
        out.append(entry)
    if args.format == "json":
        return _dump(out)
    blocks = []
    for entry, (h1, h2) in zip(out, pairs):
        b = entry["bottom"]
        g1, g2 = hive.Hive.from_json(b["left"]), hive.Hive.from_json(b["right"])
        blocks.append(
            f"top sigma={hive.format_weight(entry['top']['shared'])}\n{h1}\n\n{h2}\n"
            f"bottom tau={hive.format_weight(b['shared'])}\n{g1}\n\n{g2}"
        )
    return "\n\n".join(blocks) if blocks else "(no top pairs)"


def cmd_check_assoc(args) -> str:
    _same_length(args.lam, args.mu, args.nu, args.pi)
    rep = excavation.verify_star(args.lam, args.mu, args.nu, args.pi)
    if args.format == "json":
        return _dump(rep.to_json())
    lines = [f"lhs={rep.lhs} rhs={rep.rhs} bijection={'ok' if rep.bijection_ok else 'FAILED'}"]
    lines.extend(rep.problems)
    return "\n".join(lines)


def cmd_honeycomb(args) -> str:
    if args.input:
        h = hive.Hive.from_json(_read_json(args.input))
    else:
        if any(w is None for w in (args.lam, args.mu, args.nu)):
            raise UsageError("give --input or all of --lambda --mu --nu")
        hs = hive.enumerate_hives(hive.BoundarySpec(args.lam, args.mu, args.nu))
        if not 0 <= args.index < len(hs):
            raise hive.HiveError(f"there are {len(hs)} hives; index {args.index} is out of range")
        h = hs[args.index]
    hc = honeycomb.hive_to_honeycomb(h)
    if args.svg:
        svg = honeycomb.render_svg(hc)
        if args.svg == "-":
            return svg.rstrip("\n")
        with open(args.svg, "w") as fh:
            fh.write(svg)
    return _dump(hc.to_json())


def cmd_speyer(args) -> str:
    n = args.n
    entry = args.entry or (speyer.ENTRY_BELOW_F if n == 4 else None)
    if entry is None:
        raise UsageError("--entry is required unless n = 4")
    if len(entry) != 4 or sum(entry) != n or min(entry) < 0 or not excavation.on_bottom(entry):
        raise hive.HiveError(f"{list(entry)} is not a bottom-face point of tet_{n}")
    g = speyer.build_scatter_graph(n)
    name = speyer.speyer_name if n == 4 else laurent.default_name
    cf = speyer.closed_form(g, entry)
    if args.format == "json":
        return _dump({"entry": list(entry), "laurent": cf.laurent.to_json(name)})
    return f"{cf.laurent.format(name)}\n{cf.tropical.format(name)}"


def cmd_laurent(args) -> str:
    labels = laurent.symbolic_excavate(args.n, allow_large=args.allow_large)
    if args.format == "json":
        return _dump([{"p": list(p), "poly": labels[p].to_json()} for p in sorted(labels)])
    return "\n".join(f"{list(p)}: {labels[p].format()}" for p in sorted(labels))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hivering", description="Hive model of GL(n) tensor products")
    sub = parser.add_subparsers(dest="command", required=True)

    def weights(p, *names, required=True):
        for name in names:
            dest = "lam" if name == "lambda" else name
            p.add_argument(f"--{name}", dest=dest, type=_weight, required=required)

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("lrcoef", help="one structure constant")
    weights(p, "lambda", "mu", "nu")
    p.add_argument("--method", choices=("hive", "schur"), default="hive")
    p.set_defaults(func=cmd_lrcoef)

    p = sub.add_parser("expand", help="b_lambda * b_mu")
    weights(p, "lambda", "mu")
    fmt(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("hives", help="list HIVE(lambda, mu; nu)")
    weights(p, "lambda", "mu", "nu")
    fmt(p)
    p.set_defaults(func=cmd_hives)

    p = sub.add_parser("pieri", help="Pieri rule for b_lambda * b_omega_i")
    weights(p, "lambda")
    p.add_argument("--i", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("excavate", help="transport top hive pairs to the bottom faces")
    weights(p, "lambda", "mu", "nu", "pi", required=False)
    p.add_argument("--input", help='JSON {"left": hive, "right": hive}, or - for stdin')
    p.add_argument("--trace", action="store_true", help="include the removal events")
    fmt(p)
    p.set_defaults(func=cmd_excavate)

    p = sub.add_parser("check-assoc", help="both sides of the associativity identity")
    weights(p, "lambda", "mu", "nu", "pi")
    fmt(p)
    p.set_defaults(func=cmd_check_assoc)

    p = sub.add_parser("honeycomb", help="honeycomb of a hive")
    weights(p, "lambda", "mu", "nu", required=False)
    p.add_argument("--index", type=int, default=0, help="which hive of HIVE(lambda, mu; nu)")
    p.add_argument("--input", help="hive JSON file, or - for stdin")
    p.add_argument("--svg", help="write SVG to this path (- for stdout)")
    p.set_defaults(func=cmd_honeycomb)

    p = sub.add_parser("speyer", help="matching closed form of a bottom label")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--entry", type=_point, help="bottom point x,y,z,w")
    fmt(p)
    p.set_defaults(func=cmd_speyer)

    p = sub.add_parser("laurent", help="bottom labels as Laurent polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_laurent)
    return parser


DOMAIN_ERRORS = (
    hive.HiveError,
    excavation.GluingError,
    excavation.ExcavationError,
    laurent.DivisionError,
    laurent.TropicalizationError,
    honeycomb.HoneycombError,
    OSError,
    ValueError,
    KeyError,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
