"""Command-line front end.

Subcommands read and write plain files or standard streams so they can be
piped, e.g.::

    spinlogic adder --bits 4 --variant all-nand | spinlogic compile | spinlogic graph --metrics
"""
from __future__ import annotations

import argparse
import json
import sys

from . import analysis, gates, poly, symmetry
from .circuits import CompiledCircuit, adders, compile_netlist, parse_netlist, verify
from .errors import SpinLogicError
from .solver import AnnealConfig, anneal, read_wires


class CliError(Exception):
    def __init__(self, category, message, code=2):
        super().__init__(message)
        self.category = category
        self.code = code


def _read(path: str) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _clamps(items) -> dict[str, int]:
    out = {}
    for item in items or []:
        wire, eq, val = item.partition("=")
        if not eq or val not in ("0", "1"):
            raise CliError("usage", f"--clamp expects wire=0 or wire=1, got {item!r}")
        out[wire] = int(val)
    return out


def _params(args, default=(1.0, 1.0, 1.0)):
    vals = (args.c1, args.c2, args.c12)
    return tuple(d if v is None else v for v, d in zip(vals, default))


def _load_circuit(path) -> CompiledCircuit:
    text = _read(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        # a bare netlist is accepted too
        return compile_netlist(parse_netlist(text))
    return CompiledCircuit.from_dict(data)


def _spectrum_table(sp: poly.Spectrum) -> str:
    rows = ["energy\tmultiplicity"]
    rows += [f"{e:g}\t{m}" for e, m in sp.levels]
    return "\n".join(rows)


# subcommands ---------------------------------------------------------------------

def cmd_gate(args):
    name = args.name.upper()
    params = None
    if any(v is not None for v in (args.c1, args.c2, args.c12)):
        params = _params(args)
    h = gates.gate_by_name(name, params)
    sp = poly.spectrum(h, cap=args.cap)
    wires = ["x", "y", "z", "anc"][: h.n_spins]
    text = poly.to_json(h, wires)
    if args.json == "-":
        sys.stdout.write(text)
        return 0
    if args.json:
        _write(args.json, text)
    print(f"{name}: H = {h}")
    print(_spectrum_table(sp))
    print(f"ground energy {sp.ground_energy:g}, {sp.degeneracy} ground states: "
          + " ".join(sorted(sp.ground_bits())))
    return 0


def cmd_adder(args):
    net = adders.ripple_adder(args.bits, args.variant)
    _write(args.out, net.to_text())
    return 0


def cmd_compile(args):
    net = parse_netlist(_read(args.netlist))
    if args.clamp:
        net = net.with_clamps(_clamps(args.clamp))
    c = compile_netlist(net, _params(args))
    _write(args.out, c.to_json())
    return 0


def cmd_verify(args):
    c = _load_circuit(args.circuit)
    rep = verify(c, cap=args.cap)
    text = rep.format() + "\n"
    if args.report:
        _write(args.report, text)
    sys.stdout.write(text)
    if not rep.passed:
        raise CliError("mismatch", "ground space does not match the Boolean evaluation", code=1)
    return 0


def cmd_solve(args):
    c = _load_circuit(args.circuit)
    if args.clamp:
        c = c.with_clamps(_clamps(args.clamp))
    cfg_data = json.loads(_read(args.config)) if args.config else {}
    for key in ("sweeps", "restarts", "t_hi", "t_lo", "seed", "threads"):
        val = getattr(args, key)
        if val is not None:
            cfg_data[key] = val
    cfg = AnnealConfig.from_dict(cfg_data)
    res = anneal(c.hamiltonian, c.ground_energy_expected, cfg)
    print(f"best energy {res.best_energy:g} (expected {c.ground_energy_expected:g}) "
          f"success={'yes' if res.success else 'no'}")
    for group, wires in (("inputs", c.inputs), ("outputs", c.outputs)):
        bits = read_wires(res, c, wires)
        print(f"{group}: " + " ".join(f"{w}={b}" for w, b in zip(wires, bits)))
    return 0


def cmd_orbit(args):
    for orb in symmetry.orbits():
        names = [t.name or str(t) for t in orb.members]
        print(f"orbit size {orb.size}\tstabilizer order {orb.stabilizer_order}\t"
              + " ".join(names))
    return 0


def cmd_stab(args):
    try:
        t = symmetry.lookup_table(args.table)
    except ValueError as exc:
        raise CliError("lookup", str(exc)) from None
    elems = symmetry.stabilizer(t)
    print(f"{t.name or t}: stabilizer order {len(elems)}, orbit size {16 // len(elems)}")
    for g in elems:
        print(g.label())
    return 0


def cmd_graph(args):
    c = _load_circuit(args.circuit)
    g = analysis.to_graph(c)
    if args.dot:
        _write(args.dot, analysis.export_graph(g, "dot"))
    if args.json:
        _write(args.json, analysis.export_graph(g, "json"))
    if args.dot == "-" or args.json == "-":
        return 0
    mean, var = analysis.variance_and_mean(analysis.degree_centrality(g))
    print(f"nodes {g.n_nodes}\tedges {g.n_edges}\tmean degree {2 * g.n_edges / g.n_nodes:.4f}"
          f"\tmean D {mean:.4f}\tvar D {var:.6f}")
    if args.metrics:
        sys.stdout.write(analysis.metrics_table(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spinlogic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_params(sp):
        sp.add_argument("--c1", type=float)
        sp.add_argument("--c2", type=float)
        sp.add_argument("--c12", type=float)

    def add_cap(sp):
        sp.add_argument("--cap", type=int, default=poly.DEFAULT_CAP,
                        help="largest spin count to enumerate exhaustively")

    sp = sub.add_parser("gate", help="gate Hamiltonian and its spectrum")
    sp.add_argument("name")
    add_params(sp)
    add_cap(sp)
    sp.add_argument("--json", metavar="PATH", help="write Hamiltonian JSON ('-' for stdout)")
    sp.set_defaults(func=cmd_gate)

    sp = sub.add_parser("adder", help="emit a ripple-carry adder netlist")
    sp.add_argument("--bits", type=int, default=1)
    sp.add_argument("--variant", choices=adders.VARIANTS, default="standard")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(func=cmd_adder)

    sp = sub.add_parser("compile", help="netlist to Hamiltonian JSON")
    sp.add_argument("netlist", nargs="?", default="-")
    add_params(sp)
    sp.add_argument("--clamp", action="append", metavar="WIRE=BIT")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(func=cmd_compile)

    sp = sub.add_parser("verify", help="exhaustive ground-space check")
    sp.add_argument("circuit", nargs="?", default="-")
    add_cap(sp)
    sp.add_argument("--report", metavar="PATH")
    sp.add_argument("--threads", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("solve", help="simulated annealing with optional clamps")
    sp.add_argument("circuit", nargs="?", default="-")
    sp.add_argument("--clamp", action="append", metavar="WIRE=BIT")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--sweeps", type=int)
    sp.add_argument("--restarts", type=int)
    sp.add_argument("--t-hi", dest="t_hi", type=float)
    sp.add_argument("--t-lo", dest="t_lo", type=float)
    sp.add_argument("--threads", type=int)
    sp.add_argument("--config", metavar="PATH", help="JSON file with AnnealConfig fields")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("orbit", help="orbits of the 16 two-input tables")
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("stab", help="stabilizer of a table (name or bits like 1110)")
    sp.add_argument("table")
    sp.set_defaults(func=cmd_stab)

    sp = sub.add_parser("graph", help="interaction graph statistics and export")
    sp.add_argument("circuit", nargs="?", default="-")
    sp.add_argument("--metrics", action="store_true", help="per-node centrality table")
    sp.add_argument("--dot", metavar="PATH")
    sp.add_argument("--json", metavar="PATH")
    sp.set_defaults(func=cmd_graph)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return exc.code
    except SpinLogicError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: value: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
