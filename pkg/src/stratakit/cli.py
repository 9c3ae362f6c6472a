"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 counterexample in a strict sweep.
Values starting with a minus sign must be attached with "=", for example
``--sig=-4,8``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import classify as cl
from . import divisor_count as dc
from . import oplus as op
from . import parity as pa
from .cover import cover_profile
from .errors import ConjectureCounterexample, StrataError
from .strata_core import divisors, format_signature, parse_orders, validate_stratum


@dataclass
class CommandResult:
    exit_code: int
    payload: str
    stderr: str = ""


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _stratum(args):
    return validate_stratum(args.k, parse_orders(args.sig))


def _maybe_verify(args) -> None:
    if getattr(args, "verify", False) and args.k % 2:
        dc.verify_and_stamp(d for d in divisors(args.k) if d > 1)


def cmd_classify(args) -> CommandResult:
    _maybe_verify(args)
    res = cl.classify(_stratum(args))
    return CommandResult(0, _json(res.to_json()))


def cmd_parity(args) -> CommandResult:
    _maybe_verify(args)
    st = _stratum(args)
    if st.genus == 0:
        par = pa.genus0_parity(st)
    elif st.genus == 1 and st.k % 2:
        if args.d is None:
            raise StrataError("genus-one strata with odd k need --d (rotation number)")
        par = pa.genus1_parity(st.k, [m // 2 for m in st.orders], args.d)
    elif st.k % 2 == 0:
        par = pa.even_k_parity(st)
    else:
        raise StrataError(
            "for odd k and genus >= 2 the parity differs between components"
        )
    out = {
        "k": st.k,
        "signature": format_signature(st.orders),
        "genus": st.genus,
        "parity": par.name,
        "conditional": par.conditional,
    }
    return CommandResult(0, _json(out))


def cmd_nk(args) -> CommandResult:
    mu = parse_orders(args.mu)
    value = pa.nk(args.k, mu)
    out = {"k": args.k, "mu": format_signature(mu), "nk": value, "parity": "odd" if value % 2 else "even"}
    return CommandResult(0, _json(out))


def cmd_cover(args) -> CommandResult:
    st = _stratum(args)
    prof = cover_profile(st)
    out = {
        "k": st.k,
        "signature": format_signature(st.orders),
        "genus": st.genus,
        "cover_genus": prof.cover_genus,
        "assumes_primitive": prof.assumes_primitive,
        "power_loci": list(prof.power_loci),
        "locals": [
            {"m": m, "r": c.r, "ell": c.ell, "m_hat": c.m_hat}
            for m, c in zip(st.orders, prof.locals)
        ],
    }
    return CommandResult(0, _json(out))


def cmd_conjecture(args) -> CommandResult:
    rows = dc.sweep_conjecture(args.kmin, args.kmax, strict=False, jobs=args.jobs)
    text = dc.format_tsv(rows)
    if args.strict:
        for row in rows:
            if not row.passed:
                err = ConjectureCounterexample(row)
                return CommandResult(2, text, f"counterexample: {err}\n")
    return CommandResult(0, text)


def cmd_oplus(args) -> CommandResult:
    base = op.make_state(args.k, parse_orders(args.base), holomorphic_power=args.holomorphic_power)
    ops = parse_orders(args.ops) if args.ops else []
    seq = op.OplusSequence(base, tuple(ops))
    final = seq.final()
    out = {
        "sequence": seq.text(),
        "k": args.k,
        "zero_orders": [seq.zero_order_at(i) for i in range(len(ops) + 1)],
        "final": {
            "genus": final.genus,
            "signature": format_signature((final.zero_order,) + final.other_orders),
            "holomorphic_power": final.holomorphic_power,
        },
    }
    if args.normalize:
        res = op.normalize(seq, max_states=args.max_states, gcd_moves=args.gcd_moves)
        out["representatives"] = [r.text() for r in res.representatives]
        out["explored"] = res.explored
        out["complete"] = res.complete
    return CommandResult(0, _json(out))


def cmd_merge(args) -> CommandResult:
    res = cl.merge_to_minimal(_stratum(args), b=args.b, poles=args.poles)
    out = res.to_json()
    out["source_count"] = cl.classify(res.source).count
    return CommandResult(0, _json(out))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stratakit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_sig(sp, k_default=None):
        sp.add_argument("--k", type=int, required=k_default is None, default=k_default)
        sp.add_argument("--sig", required=True, help='orders, e.g. "12,-8"')

    sp = sub.add_parser("classify", help="list connected components")
    with_sig(sp)
    sp.add_argument("--verify", action="store_true", help="check the divisor-count conjecture for divisors of k first")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("parity", help="spin parity")
    with_sig(sp)
    sp.add_argument("--d", type=int, help="rotation number (genus one)")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_parity)

    sp = sub.add_parser("nk", help="the counting function n_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mu", required=True)
    sp.set_defaults(func=cmd_nk)

    sp = sub.add_parser("cover", help="canonical cover profile")
    with_sig(sp)
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("conjecture", help="divisor-count parity sweep (TSV)")
    sp.add_argument("--kmin", type=int, required=True)
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--jobs", type=int, default=None)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("oplus", help="bubbling sequences")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--base", required=True, help="tracked zero first, e.g. 0,-4")
    sp.add_argument("--ops", default="")
    sp.add_argument("--normalize", action="store_true")
    sp.add_argument("--holomorphic-power", action="store_true")
    sp.add_argument("--gcd-moves", action="store_true")
    sp.add_argument("--max-states", type=int, default=256)
    sp.set_defaults(func=cmd_oplus)

    sp = sub.add_parser("merge", help="merge to a minimal quadratic stratum")
    with_sig(sp, k_default=2)
    sp.add_argument("--b", type=int, default=0)
    sp.add_argument("--poles", action="store_true")
    sp.set_defaults(func=cmd_merge)
    return p


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse already printed the usage message
        return CommandResult(0 if exc.code == 0 else 1, "")
    try:
        return args.func(args)
    except StrataError as exc:
        return CommandResult(1, "", f"error: {exc}\n")


def main(argv: Sequence[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.payload)
    if res.stderr:
        sys.stderr.write(res.stderr)
    return res.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
