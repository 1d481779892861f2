"""Command-line entry point; every subcommand prints JSON on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import bumping, cossz, di, maxindex, rsk, shapes, verify
from .serialize import (
    multiset_from_json,
    multiset_to_json,
    set_partition_to_json,
    tableau_from_json,
    tableau_to_json,
    vt_from_json,
    vt_to_json,
)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def _load(arg: str) -> Any:
    """A JSON file path, or the JSON text itself."""
    path = Path(arg)
    if path.is_file():
        return json.loads(path.read_text())
    return json.loads(arg)


def _di_payload(seq: tuple[int, ...], n: int) -> dict[str, Any]:
    image = di.di_forward(seq, n)
    return {
        "n": n,
        "seq": list(seq),
        "p": tableau_to_json(image.p),
        "gamma": vt_to_json(image.gamma),
        "shape": list(image.shape),
        "vt_index": image.vt_index,
    }


def cmd_rsk(args: argparse.Namespace) -> dict[str, Any]:
    p, q = rsk.rsk_word(_ints(args.perm))
    return {"p": tableau_to_json(p), "q": tableau_to_json(q), "shape": list(p.shape)}


def cmd_jdt(args: argparse.Namespace) -> dict[str, Any]:
    t = rsk.jdt_delete(tableau_from_json(_load(args.tableau)), args.delete)
    return {"tableau": tableau_to_json(t)}


def cmd_insert(args: argparse.Namespace) -> dict[str, Any]:
    t, row, bumped = rsk.row_insert(tableau_from_json(_load(args.tableau)), args.value)
    return {"tableau": tableau_to_json(t), "row": row, "bumped_from_first_row": bumped}


def cmd_di(args: argparse.Namespace) -> dict[str, Any]:
    return _di_payload(_ints(args.seq), args.n)


def cmd_di_inv(args: argparse.Namespace) -> dict[str, Any]:
    gamma = vt_from_json(_load(args.gamma))
    seq = di.di_inverse(tableau_from_json(_load(args.p)), gamma)
    return {"n": gamma.n, "seq": list(seq)}


def cmd_psi(args: argparse.Namespace) -> dict[str, Any]:
    seq = _ints(args.seq)
    return {"n": args.n, "seq": list(seq), "perm": list(maxindex.psi(seq, args.n))}


def _perm_and_k(args: argparse.Namespace) -> tuple[tuple[int, ...], int]:
    w = _ints(args.perm)
    if args.n is not None and args.n != len(w):
        raise ValueError(f"--n {args.n} does not match a permutation of length {len(w)}")
    k = args.k if args.k is not None else len(w) - rsk.longest_increasing(w)
    return w, k


def cmd_psi_inv(args: argparse.Namespace) -> dict[str, Any]:
    w, k = _perm_and_k(args)
    return {"perm": list(w), "k": k, "seq": list(maxindex.psi_inverse(w, k))}


def cmd_algo_a(args: argparse.Namespace) -> dict[str, Any]:
    w, k = _perm_and_k(args)
    t, seq = maxindex.algorithm_a(w, k)
    out: dict[str, Any] = {"perm": list(w), "k": k, "t": list(t), "seq": list(seq)}
    if args.render_grid:
        out["grid"] = maxindex.render_grid(len(w), k, {"a": w[len(w) - k:], "t": t, "#": seq})
    return out


def cmd_algo_b(args: argparse.Namespace) -> dict[str, Any]:
    seq = _ints(args.seq)
    result = maxindex.algorithm_b(seq, args.n)
    out: dict[str, Any] = {
        "n": args.n,
        "seq": list(seq),
        "ok": result.ok,
        "failure": result.failure,
        "t": list(result.t),
        "a": list(result.a) if result.a is not None else None,
        "perm": list(result.w) if result.w is not None else None,
    }
    if args.render_grid:
        marks = {"i": seq, "t": result.t}
        if result.a is not None:
            marks["#"] = result.a
        out["grid"] = maxindex.render_grid(args.n, len(seq), marks)
    return out


def cmd_max_index_test(args: argparse.Namespace) -> dict[str, Any]:
    seq = _ints(args.seq)
    return {"n": args.n, "seq": list(seq), "max_vt_index": maxindex.has_max_vt_index(seq, args.n)}


def cmd_bump_check(args: argparse.Namespace) -> dict[str, Any]:
    t = _ints(args.t)
    return {"n": args.n, "t": list(t), "bumping_sequence": bumping.bumping_criterion(t, args.n)}


def cmd_suffix_check(args: argparse.Namespace) -> dict[str, Any]:
    a = _ints(args.a)
    return {"n": args.n, "a": list(a), "suffix": bumping.suffix_criterion(a, args.n)}


def cmd_repark(args: argparse.Namespace) -> dict[str, Any]:
    out = bumping.repark(args.n, _ints(args.cars), args.dir)
    return {
        "n": args.n,
        "direction": args.dir,
        "success": out.success,
        "positions": list(out.positions),
        "predicted": out.predicted,
    }


def cmd_cossz(args: argparse.Namespace) -> dict[str, Any]:
    seq = _ints(args.seq)
    s, t = cossz.cossz_forward(seq, args.n)
    return {"n": args.n, "seq": list(seq), "s": tableau_to_json(s), "t": multiset_to_json(t),
            "shape": list(s.shape)}


def cmd_cossz_inv(args: argparse.Namespace) -> dict[str, Any]:
    s = tableau_from_json(_load(args.s))
    seq = cossz.cossz_inverse(s, multiset_from_json(_load(args.t)))
    return {"n": s.size, "seq": list(seq)}


def cmd_shape_test(args: argparse.Namespace) -> dict[str, Any]:
    seq = _ints(args.seq)
    n = args.n
    k = len(seq)
    if args.k is not None and args.k != k:
        raise ValueError(f"--k {args.k} does not match a sequence of length {k}")
    out: dict[str, Any] = {"n": n, "k": k, "seq": list(seq)}
    if shapes.is_one_row(seq, n):
        out["shape_class"] = "one-row"
        out["set_partition"] = set_partition_to_json(shapes.one_row_to_set_partition(seq, n))
    elif n >= k + 1 and shapes.is_hook_sequence(seq, n):
        out["shape_class"] = "hook"
    elif shapes.is_two_row_sequence(seq, n):
        d = shapes.two_row_decompose(seq, n)
        out.update(shape_class="two-row", v=list(d.v), eps=list(d.eps), path=d.path.steps,
                   second_row=list(d.second_row))
    else:
        out["shape_class"] = "other"
    out["vt_shape"] = list(di.vt_shape(seq, n))
    return out


def cmd_one_row_count(args: argparse.Namespace) -> dict[str, Any]:
    return {"n": args.n, "k": args.k, "count": shapes.one_row_count(args.n, args.k)}


def cmd_verify_identity(args: argparse.Namespace) -> dict[str, Any]:
    return verify.verify_identity(args.n, args.k, workers=args.workers).to_json()


def cmd_verify_theorem(args: argparse.Namespace) -> dict[str, Any]:
    return verify.verify_theorem(args.name, args.n, args.k).to_json()


def cmd_verify_two_row_count(args: argparse.Namespace) -> dict[str, Any]:
    report = verify.two_row_count_report(args.n_max).to_json()
    report["table"] = [
        {"n": r.n, "k": r.k, "syt_count": r.syt_count,
         "printed_fraction": str(r.printed_fraction), "ballot_fraction": str(r.ballot_fraction)}
        for r in verify.two_row_count_table(args.n_max)
    ]
    return report


def _render(value: Any, indent: int = 0) -> list[str]:
    pad = " " * indent
    if isinstance(value, dict) and set(value) == {"rows"}:
        rows = [[("{" + ",".join(map(str, c)) + "}" if c else "{}") if isinstance(c, list) else str(c)
                 for c in row] for row in value["rows"]]
        width = max((len(c) for row in rows for c in row), default=1)
        return [pad + " ".join(c.rjust(width) for c in row) for row in rows]
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, list) and item and all(isinstance(x, dict) for x in item):
                lines.append(f"{pad}{key}:")
                lines.extend(f"{pad}  {json.dumps(x)}" for x in item)
            elif isinstance(item, dict) or (isinstance(item, str) and "\n" in item):
                lines.append(f"{pad}{key}:")
                sub = item.splitlines() if isinstance(item, str) else _render(item, indent + 2)
                lines.extend(sub if not isinstance(item, str) else [pad + "  " + s for s in sub])
            else:
                lines.append(f"{pad}{key}: {json.dumps(item)}")
        return lines
    return [pad + json.dumps(value)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vtab", description=__doc__)
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable[[argparse.Namespace], dict[str, Any]], help: str,
            parent: Any = sub) -> argparse.ArgumentParser:
        p = parent.add_parser(name, help=help)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("rsk", cmd_rsk, "RSK of a permutation")
    p.add_argument("--perm", required=True)
    p = add("jdt", cmd_jdt, "delete an entry by jeu de taquin")
    p.add_argument("--tableau", required=True)
    p.add_argument("--delete", type=int, required=True)
    p = add("insert", cmd_insert, "row-insert a value")
    p.add_argument("--tableau", required=True)
    p.add_argument("--value", type=int, required=True)

    p = add("di", cmd_di, "delete-insert image of a sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True)
    p = add("di-inv", cmd_di_inv, "sequence from (P, gamma)")
    p.add_argument("--p", required=True)
    p.add_argument("--gamma", required=True)

    p = add("psi", cmd_psi, "permutation of a sequence with VT-index k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True)
    for name, func, help in [
        ("psi-inv", cmd_psi_inv, "sequence of a permutation in R_k^n"),
        ("algo-a", cmd_algo_a, "Algorithm A"),
    ]:
        p = add(name, func, help)
        p.add_argument("--perm", required=True)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int, help="defaults to n - is(perm)")
        if name == "algo-a":
            p.add_argument("--render-grid", action="store_true")
    p = add("algo-b", cmd_algo_b, "Algorithm B")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--render-grid", action="store_true")
    p = add("max-index-test", cmd_max_index_test, "does the sequence have VT-index k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True)

    p = add("bump-check", cmd_bump_check, "is t a bumping sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True)
    p = add("suffix-check", cmd_suffix_check, "is a the suffix of a permutation in R_k^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p = add("repark", cmd_repark, "simulate reparking")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cars", required=True)
    p.add_argument("--dir", choices=["right", "left"], required=True)

    p = add("cossz", cmd_cossz, "COSSZ image of a sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True)
    p = add("cossz-inv", cmd_cossz_inv, "sequence from (S, T)")
    p.add_argument("--s", required=True)
    p.add_argument("--t", required=True)

    p = add("shape-test", cmd_shape_test, "classify a sequence by special VT-shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--seq", required=True)
    p = add("one-row-count", cmd_one_row_count, "number of sequences with VT-shape (n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    vp = sub.add_parser("verify", help="exhaustive checks")
    vsub = vp.add_subparsers(dest="what", required=True)
    p = add("identity", cmd_verify_identity, "shape tally over [n]^k", parent=vsub)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p = add("theorem", cmd_verify_theorem, "one named characterization", parent=vsub)
    p.add_argument("--name", required=True, choices=sorted(verify.CHECKS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("two-row-count", cmd_verify_two_row_count, "two-row count against both fractions",
            parent=vsub)
    p.add_argument("--n-max", type=int, default=10)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    if args.pretty:
        print("\n".join(_render(result)))
    else:
        print(json.dumps(result))
    return 1 if result.get("violations") else 0


if __name__ == "__main__":
    sys.exit(main())
