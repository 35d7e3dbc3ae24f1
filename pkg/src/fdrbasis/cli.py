"""Command-line client for the verification service.

Every subcommand builds one request, sends it to the service (an in-process
instance by default, or a remote server via --server), and renders the JSON
response as text, json, or csv.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_REWRITE_LIMIT = 3


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server.rstrip("/"), timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(args, path: str, payload: dict) -> dict:
    with _client(args.server) as client:
        response = client.post(path, json=payload)
    if response.status_code != 200:
        try:
            body = response.json()
        except ValueError:
            body = {"error": response.text, "kind": "unknown"}
        print(f"error: {body.get('error', 'request failed')}", file=sys.stderr)
        if body.get("kind") == "rewrite-limit":
            raise SystemExit(EXIT_REWRITE_LIMIT)
        raise SystemExit(EXIT_FAILURE)
    return response.json()


def _emit_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _render(args, doc: dict, text_fn, csv_rows_fn=None) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.format == "csv":
        rows = csv_rows_fn(doc) if csv_rows_fn else [doc]
        print(_emit_csv(rows))
    else:
        print(text_fn(doc))


def cmd_enumerate(args) -> int:
    payload = {
        "n": args.n,
        "k": args.k,
        "t": args.t,
        "x": args.x,
        "bidegree": args.bidegree,
        "noncrossing_only": not args.all_labeled,
        "count_only": args.count,
    }
    doc = _post(args, "/v1/enumerate", payload)

    def text(d):
        if d["partitions"] is None:
            return str(d["total"])
        return "\n".join(d["partitions"] + [f"total {d['total']}"])

    _render(
        args,
        doc,
        text,
        lambda d: [{"partition": p} for p in d["partitions"] or []]
        or [{"total": d["total"]}],
    )
    return EXIT_OK


def cmd_gpi(args) -> int:
    doc = _post(
        args,
        "/v1/gpi",
        {"n": args.n, "pi": args.pi, "construction": args.construction},
    )
    _render(
        args,
        doc,
        lambda d: d["multivector"],
        lambda d: [
            {
                "pi": d["pi"],
                "bidegree_t": d["bidegree"][0],
                "bidegree_x": d["bidegree"][1],
                "multivector": d["multivector"],
            }
        ],
    )
    return EXIT_OK


def cmd_straighten(args) -> int:
    doc = _post(
        args,
        "/v1/straighten",
        {
            "n": args.n,
            "sigma": args.sigma,
            "pi": args.pi,
            "oracle": args.oracle,
            "max_rewrites": args.max_rewrites,
        },
    )

    def text(d):
        lines = [f"{t['coeff']}\t{t['partition']}" for t in d["terms"]]
        if d["oracle_checked"]:
            lines.append(f"oracle_agrees {str(d['oracle_agrees']).lower()}")
        return "\n".join(lines)

    _render(args, doc, text, lambda d: d["terms"])
    return EXIT_OK


def cmd_verify_basis(args) -> int:
    doc = _post(
        args,
        "/v1/verify-basis",
        {"n": args.n, "injectivity": args.injectivity},
    )

    def text(d):
        lines = [
            f"n {d['n']}",
            f"indexed {d['indexed_count']}  dimension {d['dim_total']}  "
            f"match {str(d['count_matches_dimension']).lower()}",
            f"columns_independent {str(d['columns_independent']).lower()}",
            f"leading_terms_ok {str(d['leading_terms_ok']).lower()}",
            "bidegree  monomials  ideal_rank  dim  indexed",
        ]
        for c in d["bidegrees"]:
            lines.append(
                f"({c['i']},{c['j']})  {c['monomials']}  {c['ideal_rank']}  "
                f"{c['dim']}  {c['indexed']}"
            )
        lines.append("k  dim  narayana")
        for r in d["narayana"]:
            lines.append(f"{r['k']}  {r['dim']}  {r['narayana']}")
        if d.get("injectivity"):
            lines.append(
                "injectivity " + ("pass" if d["injectivity"]["passed"] else "fail")
            )
        for w in d["witnesses"]:
            lines.append(f"witness: {w}")
        lines.append("PASS" if d["passed"] else "FAIL")
        return "\n".join(lines)

    _render(args, doc, text, lambda d: d["bidegrees"])
    return EXIT_OK if doc["passed"] else EXIT_FAILURE


def cmd_frobenius(args) -> int:
    doc = _post(
        args, "/v1/frobenius", {"n": args.n, "compare_product_form": True}
    )

    def text(d):
        lines = [f"({e['i']},{e['j']})  dim {e['dim']}  {e['schur']}" for e in d["entries"]]
        lines.append(f"product_form_matches {str(d['product_form_matches']).lower()}")
        return "\n".join(lines)

    _render(args, doc, text, lambda d: d["entries"])
    return EXIT_OK if doc["product_form_matches"] else EXIT_FAILURE


def cmd_sieve(args) -> int:
    doc = _post(args, "/v1/sieve", {"n": args.n})

    def text(d):
        lines = [f"set size {d['set_size']}"]
        for inst in d["instances"]:
            lines.append(
                f"{inst['name']}: {'pass' if inst['passed'] else 'fail'}\n"
                f"  reduced   {inst['candidate_reduced']}\n"
                f"  orbits    {inst['orbit_polynomial']}\n"
                f"  fixed     {inst['fixed_counts']}\n"
                f"  orbit sizes {inst['orbit_sizes']}"
            )
        lines.append("PASS" if d["passed"] else "FAIL")
        return "\n".join(lines)

    def rows(d):
        out = []
        for inst in d["instances"]:
            for dd, fixed in enumerate(inst["fixed_counts"]):
                out.append({"name": inst["name"], "d": dd, "fixed": fixed})
        return out

    _render(args, doc, text, rows)
    return EXIT_OK if doc["passed"] else EXIT_FAILURE


def cmd_congruence(args) -> int:
    doc = _post(args, "/v1/congruence", {"n": args.n})

    def text(d):
        return "\n".join(
            [
                f"fd side    {d['fd_side']}",
                f"q-catalan  {d['q_catalan']}",
                f"mod q^{args.n - 1}-1: {d['residue_small']}"
                f" ({'zero' if d['zero_mod_small'] else 'nonzero'})",
                f"mod q^{args.n}-1: {d['residue_large']}"
                f" ({'zero' if d['zero_mod_large'] else 'nonzero'})",
            ]
        )

    _render(args, doc, text)
    return EXIT_OK if doc["zero_mod_small"] else EXIT_FAILURE


def cmd_report(args) -> int:
    doc = _post(args, "/v1/report", {"n_max": args.n_max, "seed": args.seed})

    def text(d):
        lines = []
        for row in d["criteria"]:
            status = "PASS" if row["passed"] else "FAIL"
            lines.append(
                f"{status} {row['id']:2d} {row['name']:<22} {row['seconds']:8.3f}s  {row['detail']}"
            )
        lines.append("ALL PASS" if d["all_passed"] else "FAILURES PRESENT")
        return "\n".join(lines)

    _render(args, doc, text, lambda d: d["criteria"])
    return EXIT_OK if doc["all_passed"] else EXIT_FAILURE


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server", help="base URL of a running service; in-process by default"
    )
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )
    parser = argparse.ArgumentParser(
        prog="fdrbasis",
        description="Exact noncrossing-partition basis calculator and verifier",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("enumerate", help="list or count labeled partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="size of the block containing n")
    p.add_argument("--t", type=int, help="number of t-labeled singletons")
    p.add_argument("--x", type=int, help="number of x-labeled singletons")
    p.add_argument("--bidegree", type=int, nargs=2, metavar=("I", "J"))
    p.add_argument("--count", action="store_true", help="print the total only")
    p.add_argument(
        "--all-labeled", action="store_true", help="include crossing partitions"
    )
    p.set_defaults(fn=cmd_enumerate)

    p = add_parser("gpi", help="basis vector attached to a partition")
    p.add_argument("--n", type=int)
    p.add_argument("--pi", required=True)
    p.add_argument("--construction", choices=("blockops", "product"), default="blockops")
    p.set_defaults(fn=cmd_gpi)

    p = add_parser("straighten", help="expand a permuted vector over the basis")
    p.add_argument("--n", type=int)
    p.add_argument("--sigma", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--oracle", action="store_true", help="verify against both oracles")
    p.add_argument("--max-rewrites", type=int, default=10**6)
    p.set_defaults(fn=cmd_straighten)

    p = add_parser("verify-basis", help="dimension and independence report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--injectivity", action="store_true")
    p.set_defaults(fn=cmd_verify_basis)

    p = add_parser("frobenius", help="bigraded Schur expansion table")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_frobenius)

    p = add_parser("sieve", help="cyclic sieving checks")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_sieve)

    p = add_parser("congruence", help="fake-degree versus q-catalan residues")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_congruence)

    p = add_parser("report", help="run the acceptance suite")
    p.add_argument("--n-max", type=int)
    p.add_argument("--seed", type=int, default=20240817)
    p.set_defaults(fn=cmd_report)

    p = add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
