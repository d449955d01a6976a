"""Command-line interface: every computation as a reproducible report.

Subcommands: classes, table, dims, orbits, basis, verify.  JSON is the
machine format and is byte-identical across runs for identical arguments;
CSV is available for the character table; pretty mode renders character
values as trigonometric expressions next to their exact coordinates.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
refusal.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import chartab, dims, group, symclass
from .chartab import CharacterId
from .cyclo import CycloInt
from .group import SDElement
from .symclass import BudgetExceededError

USAGE_ERROR = 2
VERIFY_ERROR = 1
BUDGET_ERROR = 3


def _cyclo_json(x: CycloInt) -> dict:
    return {"order": x.order, "coeffs": list(x.coeffs)}


def _approx_str(x: CycloInt) -> str:
    z = x.to_complex()
    return f"{z.real:+.6f}{z.imag:+.6f}i"


def _element_json(g: SDElement) -> dict:
    return {"s": g.s, "r": g.r, "name": group.element_name(g)}


def _trig_str(n: int, cid: CharacterId, g: SDElement) -> str:
    """Human-readable exact form of a character value."""
    if cid.kind == "chi":
        value = chartab.character_value(n, cid, g)
        z = value.to_complex()
        if abs(z.imag) < 1e-9:
            return str(int(round(z.real)))
        return "i" if z.imag > 0 else "-i"
    if g.s:
        return "0"
    h = cid.param
    frac = Fraction(h * g.r, 2 * n) % 2
    if h % 2 == 0 or g.r % 2 == 0:
        return f"2cos({frac}*pi)" if frac else "2"
    # odd h at an odd rotation exponent: purely imaginary sine value
    return f"2i*sin({frac}*pi)"


def _dump_json(payload, stream) -> None:
    json.dump(payload, stream, indent=2, sort_keys=True)
    stream.write("\n")


def _classes_payload(n: int) -> dict:
    report = group.conjugacy_classes(n)
    return {
        "n": n,
        "group_order": 8 * n,
        "class_count": report.count,
        "classes": [
            {
                "representative": _element_json(rep),
                "size": len(members),
                "members": [group.element_name(g) for g in members],
            }
            for rep, members in report.classes
        ],
    }


def _classes_pretty(payload: dict) -> str:
    lines = [f"SD_{payload['group_order']}: {payload['class_count']} conjugacy classes"]
    for c in payload["classes"]:
        lines.append(
            f"  [{c['representative']['name']}] size {c['size']}: "
            + " ".join(c["members"])
        )
    return "\n".join(lines) + "\n"


def _table_payload(n: int) -> dict:
    table = chartab.character_table(n)
    return {
        "n": n,
        "class_labels": [group.element_name(rep) for rep in table.class_reps],
        "class_sizes": [len(m) for _, m in table.classes.classes],
        "rows": [
            {
                "character": cid.label(),
                "degree": cid.degree,
                "values": [
                    {
                        "exact": _cyclo_json(value),
                        "approx": _approx_str(value),
                    }
                    for value in table.entries[i]
                ],
            }
            for i, cid in enumerate(table.ids)
        ],
    }


def _table_csv(n: int) -> str:
    table = chartab.character_table(n)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["character"] + [group.element_name(rep) for rep in table.class_reps])
    for i, cid in enumerate(table.ids):
        row = [cid.label()]
        for value in table.entries[i]:
            coeffs = ";".join(str(c) for c in value.coeffs)
            row.append(f"({coeffs}) {_approx_str(value)}")
        writer.writerow(row)
    return out.getvalue()


def _table_pretty(n: int) -> str:
    table = chartab.character_table(n)
    labels = [group.element_name(rep) for rep in table.class_reps]
    rows = []
    for i, cid in enumerate(table.ids):
        cells = [cid.label()]
        for j, rep in enumerate(table.class_reps):
            coeffs = ";".join(str(c) for c in table.entries[i][j].coeffs)
            cells.append(f"{_trig_str(n, cid, rep)} ({coeffs})")
        rows.append(cells)
    widths = [max(len(r[c]) for r in rows + [["character"] + labels]) for c in range(len(labels) + 1)]
    lines = ["  ".join(s.ljust(w) for s, w in zip(["character"] + labels, widths))]
    for row in rows:
        lines.append("  ".join(s.ljust(w) for s, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _dims_payload(n: int, m: int) -> dict:
    report = dims.dim_report(n, m)
    return {
        "n": n,
        "m": m,
        "dims": [
            {
                "character": e.character.label(),
                "general": e.general,
                "closed_form": e.closed_form,
                "agree": e.agree,
                **({"note": e.note} if e.note else {}),
            }
            for e in report.entries
        ],
        "total": report.total,
        "total_identity_holds": report.total_identity_holds,
    }


def _dims_pretty(payload: dict) -> str:
    lines = [f"dim V_chi(SD_{8 * payload['n']}) at m = {payload['m']}"]
    for e in payload["dims"]:
        closed = "-" if e["closed_form"] is None else str(e["closed_form"])
        flag = "ok" if e["agree"] else "MISMATCH"
        lines.append(f"  {e['character']:>8}  general={e['general']}  closed={closed}  {flag}")
    lines.append(
        f"  total {payload['total']} "
        + ("== m^4n" if payload["total_identity_holds"] else "!= m^4n (BROKEN)")
    )
    return "\n".join(lines) + "\n"


def _orbits_payload(n: int, m: int, char_spec: str | None, budget: int | None) -> dict:
    orbit_list = symclass.orbits(n, m, budget)
    cid = None
    if char_spec and char_spec != "all":
        (cid,) = chartab.parse_character_spec(n, char_spec)
    payload = {
        "n": n,
        "m": m,
        "orbit_count": len(orbit_list),
        "orbits": [],
    }
    if cid is not None:
        payload["character"] = cid.label()
    for o in orbit_list:
        entry = {
            "representative": list(o.representative),
            "orbit_size": o.size,
            "stabilizer_order": o.stabilizer_order,
            "stabilizer": [group.element_name(g) for g in o.stabilizer],
        }
        if cid is not None:
            char_sum = symclass.stabilizer_char_sum(n, cid, o.representative)
            entry["char_sum"] = _cyclo_json(char_sum)
            entry["in_delta_bar"] = not char_sum.is_zero
        payload["orbits"].append(entry)
    return payload


def _orbits_pretty(payload: dict) -> str:
    lines = [
        f"{payload['orbit_count']} orbits of SD_{8 * payload['n']} on "
        f"{payload['m']}^{4 * payload['n']} sequences"
    ]
    for o in payload["orbits"]:
        line = (
            f"  {''.join(str(x) for x in o['representative'])}"
            f"  size {o['orbit_size']}  stab {o['stabilizer_order']}"
        )
        if "in_delta_bar" in o:
            line += "  in_delta_bar" if o["in_delta_bar"] else ""
        lines.append(line)
    return "\n".join(lines) + "\n"


def _basis_payload(
    n: int,
    m: int,
    cid: CharacterId,
    budget: int | None,
    jobs: int | None,
    orbit_list=None,
) -> dict:
    decision = symclass.decide_orthogonal_basis(n, m, cid, budget, jobs, orbit_list)
    predicted = symclass.predicted_basis(n, cid)
    return {
        "n": n,
        "m": m,
        "character": cid.label(),
        "predicted": predicted,
        "exhaustive": decision.exists,
        "agree": predicted == decision.exists,
        "orbits": [
            {
                "representative": list(o.representative),
                "orbit_size": o.orbit_size,
                "stabilizer_order": o.stabilizer_order,
                "orbital_dim": o.orbital_dim,
                **(
                    {"witness": [list(w) for w in o.witness]}
                    if o.witness is not None
                    else {"failure": "no orthogonal set of size orbital_dim exists"}
                ),
            }
            for o in decision.orbits
        ],
    }


def _basis_pretty(payload: dict) -> str:
    lines = [
        f"{payload['character']} at n={payload['n']}, m={payload['m']}: "
        f"predicted={payload['predicted']} exhaustive={payload['exhaustive']}"
        + ("" if payload["agree"] else "  (DISAGREE)")
    ]
    for o in payload["orbits"]:
        rep = "".join(str(x) for x in o["representative"])
        status = "ok" if "witness" in o else "FAIL"
        lines.append(
            f"  {rep}  dim {o['orbital_dim']}  size {o['orbit_size']}  {status}"
        )
    return "\n".join(lines) + "\n"


def _verify_checks(n: int, m: int | None, budget: int | None):
    """Yield (name, ok, detail) for the full invariant suite."""
    from . import verify as verify_mod

    return verify_mod.run_checks(n, m, budget)


def _add_common(parser, with_m=False, m_required=False, with_char=False, char_required=False):
    parser.add_argument("--n", type=int, required=True, help="group parameter; the group is SD_{8n}")
    if with_m:
        parser.add_argument("--m", type=int, required=m_required, help="alphabet size / dim V")
    if with_char:
        parser.add_argument(
            "--char",
            required=char_required,
            help="character spec: chi:<i> | zeta:<h> | psi:<h> | all",
        )
    parser.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    parser.add_argument("--output", help="write report to this path instead of stdout")
    parser.add_argument("--budget", type=int, help="sequence enumeration budget override")
    parser.add_argument("--jobs", type=int, default=os.cpu_count(), help="parallel workers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdtensor",
        description="Exact reports on SD_{8n}: conjugacy classes, character tables, "
        "symmetry-class dimensions, orbits, and orthogonal-basis decisions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_common(sub.add_parser("classes", help="conjugacy class report"))
    _add_common(sub.add_parser("table", help="character table (json, csv, or pretty)"))
    _add_common(sub.add_parser("dims", help="symmetry class dimensions"), with_m=True, m_required=True)
    _add_common(
        sub.add_parser("orbits", help="orbit / stabilizer listing"),
        with_m=True,
        m_required=True,
        with_char=True,
    )
    _add_common(
        sub.add_parser("basis", help="orthogonal-basis decision (predicted and exhaustive)"),
        with_m=True,
        m_required=True,
        with_char=True,
        char_required=True,
    )
    _add_common(sub.add_parser("verify", help="full invariant suite"), with_m=True)
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classes":
            payload = _classes_payload(args.n)
            if args.format == "pretty":
                _emit(_classes_pretty(payload), args.output)
            elif args.format == "json":
                _emit_json(payload, args.output)
            else:
                parser.error("csv format is only available for the character table")
        elif args.command == "table":
            if args.format == "csv":
                _emit(_table_csv(args.n), args.output)
            elif args.format == "pretty":
                _emit(_table_pretty(args.n), args.output)
            else:
                _emit_json(_table_payload(args.n), args.output)
        elif args.command == "dims":
            payload = _dims_payload(args.n, args.m)
            if args.format == "pretty":
                _emit(_dims_pretty(payload), args.output)
            elif args.format == "json":
                _emit_json(payload, args.output)
            else:
                parser.error("csv format is only available for the character table")
        elif args.command == "orbits":
            payload = _orbits_payload(args.n, args.m, args.char, args.budget)
            if args.format == "pretty":
                _emit(_orbits_pretty(payload), args.output)
            elif args.format == "json":
                _emit_json(payload, args.output)
            else:
                parser.error("csv format is only available for the character table")
        elif args.command == "basis":
            cids = chartab.parse_character_spec(args.n, args.char)
            shared_orbits = symclass.orbits(args.n, args.m, args.budget)
            payloads = [
                _basis_payload(args.n, args.m, cid, args.budget, args.jobs, shared_orbits)
                for cid in cids
            ]
            payload = payloads[0] if len(payloads) == 1 else {"decisions": payloads}
            if args.format == "pretty":
                text = "".join(
                    _basis_pretty(p) for p in (payloads if len(payloads) > 1 else [payload])
                )
                _emit(text, args.output)
            elif args.format == "json":
                _emit_json(payload, args.output)
            else:
                parser.error("csv format is only available for the character table")
        elif args.command == "verify":
            checks = list(_verify_checks(args.n, args.m, args.budget))
            ok = all(flag for _, flag, _ in checks)
            if args.format == "json":
                _emit_json(
                    {
                        "n": args.n,
                        "m": args.m,
                        "ok": ok,
                        "checks": [
                            {"name": name, "ok": flag, "detail": detail}
                            for name, flag, detail in checks
                        ],
                    },
                    args.output,
                )
            else:
                lines = [
                    f"{'PASS' if flag else 'FAIL'} {name}: {detail}"
                    for name, flag, detail in checks
                ]
                lines.append("all checks passed" if ok else "SOME CHECKS FAILED")
                _emit("\n".join(lines) + "\n", args.output)
            if not ok:
                return VERIFY_ERROR
        return 0
    except BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def _emit_json(payload, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            _dump_json(payload, fh)
    else:
        _dump_json(payload, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
