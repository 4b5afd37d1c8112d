"""docketd command line: serve the HTTP service, manage users, seed the demo
docket, generate reports, and summarize evaluation scores."""

from __future__ import annotations

import argparse
import sys
from datetime import date
from decimal import Decimal, ROUND_HALF_UP
from pathlib import Path
from typing import Optional

from . import config, demo, evaluation, reports
from .domain import CaseStatus, CaseType, Role
from .reports import DocketSnapshot, ReportRequest
from .server import make_server
from .service import DocketService, create_user
from .store import RecordStore


def _open_store(cfg: config.Config) -> RecordStore:
    return RecordStore(cfg.data_dir, cfg.require_key())


def _cmd_serve(args: argparse.Namespace, cfg: config.Config) -> int:
    store = _open_store(cfg)
    service = DocketService(store, session_ttl_min=cfg.session_ttl_min)
    port = args.port if args.port is not None else cfg.port
    web_root = args.web_root or (str(cfg.web_root) if cfg.web_root else None)
    httpd = make_server(service, host=args.host, port=port, web_root=web_root)
    host, bound_port = httpd.server_address[:2]
    print(f"docketd listening on http://{host}:{bound_port}", flush=True)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
        store.close()
    return 0


def _cmd_user_add(args: argparse.Namespace, cfg: config.Config) -> int:
    with _open_store(cfg) as store:
        user = create_user(
            store, args.username, args.password, Role(args.role), args.office
        )
    print(f"created user {user.username} ({user.role.value}) id={user.user_id}")
    return 0


def _cmd_seed_demo(args: argparse.Namespace, cfg: config.Config) -> int:
    with _open_store(cfg) as store:
        summary = demo.seed_demo(store)
    print("demo docket seeded")
    print("accounts (username / password / role / office):")
    for user in summary["users"]:
        office = user["office_id"] if user["office_id"] is not None else "-"
        print(f"  {user['username']} / {user['password']} / {user['role']} / {office}")
    print("case numbers:", ", ".join(summary["case_numbers"]))
    print(f"try the public tracker with {summary['tracker_example']}")
    return 0


def _cmd_report(args: argparse.Namespace, cfg: config.Config) -> int:
    with _open_store(cfg) as store:
        snapshot = DocketSnapshot(
            cases=tuple(store.cases()),
            complaints={c.dispute_id: c for c in store.complaints()},
            audit=tuple(store.audit_events()),
        )
    request = ReportRequest(
        case_type=CaseType(args.type),
        remark=CaseStatus(args.remark),
        period_from=date.fromisoformat(args.date_from),
        period_to=date.fromisoformat(args.date_to),
        office_id=args.office,
    )
    # The local CLI is the operator's tool; it reports with executive scope.
    document = reports.generate_report(
        request, snapshot, requester_role=Role.EXECUTIVE_LABOR_ARBITER
    )
    out = Path(args.out)
    out.write_bytes(document.rendered)
    print(f"wrote {document.total_count} rows to {out}")
    return 0


def _cmd_eval(args: argparse.Namespace, cfg: config.Config) -> int:
    scores: dict[str, list[Decimal]] = {}
    for line_no, line in enumerate(Path(args.scores).read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            group, raw = (part.strip() for part in line.split(",", 1))
            value = Decimal(raw)
        except (ValueError, ArithmeticError):
            print(f"{args.scores}:{line_no}: expected 'group,score'", file=sys.stderr)
            return 2
        scores.setdefault(group, []).append(value)
    means = {
        group: (sum(values) / len(values)).quantize(Decimal("0.01"), ROUND_HALF_UP)
        for group, values in scores.items()
    }
    summary = evaluation.summarize(means)
    width = max(len("Overall Mean"), *(len(row.group) for row in summary.rows))
    print(f"{'Item'.ljust(width)}  Mean  Interpretation")
    for row in summary.rows:
        print(f"{row.group.ljust(width)}  {row.mean}  {row.label}")
    print(f"{'Overall Mean'.ljust(width)}  {summary.overall_mean}  {summary.overall_label}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="docketd", description="labor arbitration docket service"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=None, help="overrides DOCKETD_PORT")
    serve.add_argument("--web-root", default=None, help="directory of built UI assets")
    serve.set_defaults(func=_cmd_serve)

    user = sub.add_parser("user", help="account administration")
    user_sub = user.add_subparsers(dest="user_command", required=True)
    add = user_sub.add_parser("add", help="register an account")
    add.add_argument("--username", required=True)
    add.add_argument("--password", required=True)
    add.add_argument(
        "--role",
        required=True,
        choices=[role.value for role in Role if role is not Role.PUBLIC],
    )
    add.add_argument("--office", type=int, default=None)
    add.set_defaults(func=_cmd_user_add)

    seed = sub.add_parser("seed-demo", help="load the deterministic demo docket")
    seed.set_defaults(func=_cmd_seed_demo)

    report = sub.add_parser("report", help="write a docket report PDF")
    report.add_argument("--type", required=True, choices=[t.value for t in CaseType])
    report.add_argument(
        "--remark", required=True, choices=[s.value for s in CaseStatus]
    )
    report.add_argument("--from", dest="date_from", required=True, metavar="DATE")
    report.add_argument("--to", dest="date_to", required=True, metavar="DATE")
    report.add_argument(
        "--office", type=int, default=None, help="limit to one office (default: all)"
    )
    report.add_argument("--out", required=True)
    report.set_defaults(func=_cmd_report)

    ev = sub.add_parser("eval", help="summarize Likert evaluation scores")
    ev.add_argument("--scores", required=True, help="file of 'group,score' lines")
    ev.set_defaults(func=_cmd_eval)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config.from_env()
    try:
        return args.func(args, cfg)
    except config.ConfigError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
