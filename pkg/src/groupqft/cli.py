"""Command-line front end.

Commands: synth (serialized circuit), verify (defect report), count
(cost table over an n range), emit (transform matrix).  Payloads go to
stdout, diagnostics to stderr; exit codes: 0 ok, 2 usage, 3 verification
failure, 4 internal error.

The structured format is line oriented: one self-describing header line
followed by one record per line; complex numbers are re,im pairs printed
with 17 significant digits, which round-trips float64 exactly.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .circuit import (
    Circuit,
    CNot,
    Gate,
    Local,
    MultiControlled,
    QubitPerm,
    cost,
    embed,
)
from .circuit_library import (
    equalizer_circuit,
    qft_circuit,
    qft_cyclic_circuit,
    reorder_circuit,
    twiddle_circuit,
)
from .groups import Family, GroupSpec
from .linalg import Matrix
from .synthesis import assemble
from .verify import full_report

FAMILIES = {f.value: f for f in Family}

# matrix-level commands (verify, emit) cap at n = 8; gate-level at n = 16
GATE_LEVEL_MAX = 16
MATRIX_LEVEL_MAX = 8


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_u(u: Matrix) -> str:
    parts = []
    for v in np.asarray(u).ravel():
        parts += [_fmt(v.real), _fmt(v.imag)]
    return ",".join(parts)


def _parse_u(token: str) -> np.ndarray:
    vals = [float(v) for v in token.split(",")]
    if len(vals) != 8:
        raise ValueError(f"expected 8 reals for a 2x2 unitary, got {len(vals)}")
    re = np.array(vals[0::2]).reshape(2, 2)
    im = np.array(vals[1::2]).reshape(2, 2)
    return re + 1j * im


def format_gate(g: Gate) -> str:
    if isinstance(g, Local):
        return f"local q={g.target} u={_fmt_u(g.u)}"
    if isinstance(g, CNot):
        return f"cnot c={g.control} t={g.target}"
    if isinstance(g, MultiControlled):
        ctrls = ",".join(f"{q}:{'+' if p else '-'}" for q, p in g.controls)
        return f"mcu controls={ctrls} t={g.target} u={_fmt_u(g.u)}"
    return "perm " + ",".join(str(s) for s in g.sigma)


def format_circuit(c: Circuit) -> str:
    lines = [f"circuit width={c.width} gates={len(c.gates)}"]
    lines += [format_gate(g) for g in c.gates]
    return "\n".join(lines)


def _fields(tokens: list[str]) -> dict[str, str]:
    return dict(t.split("=", 1) for t in tokens)


def _parse_controls(token: str) -> tuple[tuple[int, bool], ...]:
    out = []
    for part in token.split(","):
        q, pol = part.rsplit(":", 1)
        if pol not in ("+", "-"):
            raise ValueError(f"bad control polarity in {part!r}")
        out.append((int(q), pol == "+"))
    return tuple(out)


def parse_circuit(text: str) -> Circuit:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "circuit":
        raise ValueError(f"expected circuit header, got {lines[0]!r}")
    meta = _fields(head[1:])
    width, count = int(meta["width"]), int(meta["gates"])
    if len(lines) - 1 != count:
        raise ValueError(f"header claims {count} gates, found {len(lines) - 1}")
    gates: list[Gate] = []
    for ln in lines[1:]:
        kind, *rest = ln.split()
        if kind == "perm":
            gates.append(QubitPerm(tuple(int(v) for v in rest[0].split(","))))
            continue
        f = _fields(rest)
        if kind == "local":
            gates.append(Local(_parse_u(f["u"]), int(f["q"])))
        elif kind == "cnot":
            gates.append(CNot(int(f["c"]), int(f["t"])))
        elif kind == "mcu":
            gates.append(MultiControlled(
                _parse_u(f["u"]), _parse_controls(f["controls"]), int(f["t"])))
        else:
            raise ValueError(f"unknown gate kind {kind!r}")
    return Circuit(width, tuple(gates))


def format_matrix(m: Matrix) -> str:
    m = np.asarray(m, dtype=np.complex128)
    lines = [f"matrix rows={m.shape[0]} cols={m.shape[1]}"]
    for row in m:
        lines.append(" ".join(f"{_fmt(v.real)},{_fmt(v.imag)}" for v in row))
    return "\n".join(lines)


def parse_matrix(text: str) -> Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "matrix":
        raise ValueError(f"expected matrix header, got {lines[0]!r}")
    meta = _fields(head[1:])
    rows, cols = int(meta["rows"]), int(meta["cols"])
    if len(lines) - 1 != rows:
        raise ValueError(f"header claims {rows} rows, found {len(lines) - 1}")
    out = np.zeros((rows, cols), dtype=np.complex128)
    for i, ln in enumerate(lines[1:]):
        entries = ln.split()
        if len(entries) != cols:
            raise ValueError(f"row {i} has {len(entries)} entries, expected {cols}")
        for j, e in enumerate(entries):
            re, im = e.split(",")
            out[i, j] = complex(float(re), float(im))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupqft",
        description="Fourier transform circuits for 2-groups with a "
                    "cyclic subgroup of index at most 2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_n: bool) -> None:
        p.add_argument("--family", required=True, choices=sorted(FAMILIES),
                       help="group family")
        if with_n:
            p.add_argument("--n", required=True, type=int,
                           help="cyclic subgroup is Z_{2^n}")
        p.add_argument("--format", choices=("text", "structured"),
                       default="text", help="output style")

    p_synth = sub.add_parser("synth", help="print the transform circuit")
    add_common(p_synth, with_n=True)

    p_verify = sub.add_parser("verify", help="run the numeric checks")
    add_common(p_verify, with_n=True)
    p_verify.add_argument("--tol", type=float, default=1e-10,
                          help="defect threshold (default 1e-10)")

    p_count = sub.add_parser("count", help="cost table over a range of n")
    add_common(p_count, with_n=False)
    p_count.add_argument("--range", required=True, metavar="A..B",
                         dest="n_range", help="inclusive n range, e.g. 3..8")

    p_emit = sub.add_parser("emit", help="print the transform matrix")
    p_emit.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p_emit.add_argument("--n", required=True, type=int)
    return parser


def _check_n(family: Family, n: int, top: int) -> GroupSpec:
    low = 1 if family is Family.CYCLIC else 3
    if not low <= n <= top:
        raise ValueError(f"n for {family.value} must be in {low}..{top}")
    return GroupSpec(family, n)


def _run_synth(args) -> int:
    G = _check_n(FAMILIES[args.family], args.n, GATE_LEVEL_MAX)
    c = qft_circuit(G)
    if args.format == "text":
        print(f"family={args.family} n={args.n} width={c.width} "
              f"gates={len(c.gates)} cost={cost(c):g}")
    print(format_circuit(c))
    return 0


def _run_verify(args) -> int:
    G = _check_n(FAMILIES[args.family], args.n, MATRIX_LEVEL_MAX)
    rep = full_report(G)
    passed = rep.passed(args.tol)
    (n, total), = rep.cost_by_n
    if args.format == "structured":
        print(f"verify family={args.family} n={n} "
              f"unitarity={rep.unitarity_defect:.3e} "
              f"offblock={rep.max_offblock:.3e} "
              f"equal={rep.equal_summands_defect:.3e} "
              f"census={int(rep.census_ok)} "
              f"circuit={rep.circuit_matrix_defect:.3e} "
              f"cost={total:g} pass={int(passed)}")
    else:
        print(f"family={args.family} n={n} |G|={G.order}")
        print(f"unitarity_defect       {rep.unitarity_defect:.3e}")
        print(f"max_offblock           {rep.max_offblock:.3e}")
        print(f"equal_summands_defect  {rep.equal_summands_defect:.3e}")
        print(f"census_ok              {'yes' if rep.census_ok else 'NO'}")
        print(f"circuit_matrix_defect  {rep.circuit_matrix_defect:.3e}")
        print(f"total_cost             {total:g}")
        print(f"result                 "
              f"{'PASS' if passed else 'FAIL'} (tol={args.tol:g})")
    return 0 if passed else 3


def _parse_range(spec: str) -> tuple[int, int]:
    lo, _, hi = spec.partition("..")
    if not _:
        raise ValueError(f"range must look like 3..8, got {spec!r}")
    a, b = int(lo), int(hi)
    if a > b:
        raise ValueError(f"empty range {spec!r}")
    return a, b


def _count_row(G: GroupSpec) -> dict[str, float]:
    if G.is_abelian:
        c = qft_cyclic_circuit(G.n)
        return {"width": c.width, "total": cost(c)}
    w = G.n + 1
    pdc = cost(embed(reorder_circuit(G), w)) \
        + cost(twiddle_circuit(G)) + cost(equalizer_circuit(G))
    cyclic_part = cost(embed(qft_cyclic_circuit(G.n), w))
    return {"width": w, "total": pdc + cyclic_part + 1.0,
            "cyclic": cyclic_part, "pdc": pdc, "hadamard": 1.0}


def _run_count(args) -> int:
    family = FAMILIES[args.family]
    a, b = _parse_range(args.n_range)
    rows = [(n, _count_row(_check_n(family, n, GATE_LEVEL_MAX)))
            for n in range(a, b + 1)]
    keys = list(rows[0][1])
    if args.format == "structured":
        for n, row in rows:
            cells = " ".join(f"{k}={row[k]:g}" for k in keys)
            print(f"count family={args.family} n={n} {cells}")
    else:
        print("  n " + "".join(f"{k:>10}" for k in keys))
        for n, row in rows:
            print(f"{n:3d} " + "".join(f"{row[k]:10g}" for k in keys))
    return 0


def _run_emit(args) -> int:
    G = _check_n(FAMILIES[args.family], args.n, MATRIX_LEVEL_MAX)
    print(format_matrix(assemble(G).b))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    runners = {"synth": _run_synth, "verify": _run_verify,
               "count": _run_count, "emit": _run_emit}
    try:
        return runners[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 4
    except Exception as exc:  # noqa: BLE001 - last-resort exit code 4
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
