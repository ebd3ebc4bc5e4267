"""Command-line front-end.

By default commands dispatch to the bundled service in-process; --server URL
sends the same requests to a running instance instead.  Exit codes: 0 the
property holds or the construction succeeded, 1 a property fails
(counterexamples printed), 2 the input did not parse or validate.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx


def _read_source(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=sys.stderr)
        raise SystemExit(2) from None


def _post(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    if server is not None:
        with httpx.Client(base_url=server, timeout=60.0) as client:
            response = client.post(path, json=payload)
            return response.status_code, response.json()

    async def go() -> tuple[int, dict]:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://jjc"
        ) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()

    return asyncio.run(go())


def _fail_validation(body: dict) -> "SystemExit":
    detail = body.get("detail", body)
    if isinstance(detail, list):  # request-model validation errors
        detail = "; ".join(str(item.get("msg", item)) for item in detail)
    print(f"error: {detail}", file=sys.stderr)
    return SystemExit(2)


def _print_counterexamples(verdict: dict, stream) -> None:
    for ce in verdict.get("counterexamples", []):
        where = "(" + ",".join(str(i) for i in ce["indices"]) + ")"
        label = f" [{ce['label']}]" if ce.get("label") else ""
        print(f"  counterexample {where}{label}: {ce['residual']}", file=stream)


def _report_verdict(verdict: dict, as_json: bool) -> int:
    if as_json:
        print(json.dumps(verdict))
        return 0 if verdict["passed"] else 1
    word = "PASS" if verdict["passed"] else "FAIL"
    print(f"{word}: {verdict['object']} {verdict['property']} ({verdict['millis']} ms)")
    if verdict.get("note"):
        print(f"  note: {verdict['note']}")
    if not verdict["passed"]:
        _print_counterexamples(verdict, sys.stdout)
    conditions = verdict.get("conditions")
    if conditions:
        parts = [f"{name}={'ok' if good else 'FAIL'}" for name, good in conditions.items()]
        print("  conditions: " + " ".join(parts))
    return 0 if verdict["passed"] else 1


def _cmd_check(args) -> int:
    payload = {
        "source": _read_source(args.file),
        "object": args.object,
        "property": args.property,
    }
    status, body = _post(args.server, "/check", payload)
    if status != 200:
        raise _fail_validation(body)
    return _report_verdict(body, args.json)


def _cmd_construct(args) -> int:
    payload = {
        "source": _read_source(args.file),
        "kind": args.kind,
        "from": args.from_,
        "with": args.with_,
        "name": args.name,
    }
    status, body = _post(args.server, "/construct", payload)
    if status != 200:
        raise _fail_validation(body)
    if not body["ok"]:
        verdict = body["verdict"]
        if args.json:
            print(json.dumps(verdict))
        else:
            print(
                f"FAIL: cannot construct {body['name']}: {verdict.get('note', 'precondition failed')}",
                file=sys.stderr,
            )
            _print_counterexamples(verdict, sys.stderr)
        return 1
    if args.output is None:
        sys.stdout.write(body["source"])
    else:
        Path(args.output).write_text(body["source"], encoding="utf-8")
        print(f"wrote {body['name']} to {args.output}")
    return 0


def _cmd_product(args) -> int:
    payload = {
        "source": _read_source(args.file),
        "algebra": args.algebra,
        "left": args.left,
        "right": args.right,
        "at": args.at,
    }
    status, body = _post(args.server, "/product", payload)
    if status != 200:
        raise _fail_validation(body)
    if args.json:
        print(json.dumps(body))
    else:
        print(body["result"])
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jjc",
        description="Check and build Jacobi-Jordan conformal algebra structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify a property of a defined object")
    check.add_argument("file", metavar="FILE", help="definition file")
    check.add_argument("--object", required=True, help="object name")
    check.add_argument("--property", required=True, help="property to verify")
    check.add_argument("--json", action="store_true", help="emit the verdict as JSON")
    check.add_argument("--server", help="dispatch to a running service at URL")
    check.set_defaults(func=_cmd_check)

    construct = sub.add_parser("construct", help="build a derived structure")
    construct.add_argument("kind", metavar="KIND", help="construction kind")
    construct.add_argument("file", metavar="FILE", help="definition file")
    construct.add_argument("--from", dest="from_", required=True, help="source object name")
    construct.add_argument("--with", dest="with_", default=None, help="companion object name")
    construct.add_argument("--name", default=None, help="name for the result")
    construct.add_argument("-o", "--output", default=None, help="write DSL here")
    construct.add_argument("--json", action="store_true", help="emit failures as JSON")
    construct.add_argument("--server", help="dispatch to a running service at URL")
    construct.set_defaults(func=_cmd_construct)

    product = sub.add_parser("product", help="evaluate a product of two elements")
    product.add_argument("file", metavar="FILE", help="definition file")
    product.add_argument("--algebra", required=True, help="conformal algebra name")
    product.add_argument("--left", required=True, help="left element")
    product.add_argument("--right", required=True, help="right element")
    product.add_argument("--at", default="L", help="evaluation parameter (default L)")
    product.add_argument("--json", action="store_true", help="emit the result as JSON")
    product.add_argument("--server", help="dispatch to a running service at URL")
    product.set_defaults(func=_cmd_product)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
