"""Verification reports and their deterministic serialization.

A report is a flat list of check records for one group.  Two output formats:
an aligned text table, and JSON with schema

    {"schema": 1, "group": ..., "field_order": ...,
     "checks": [{"id", "status", "details", "millis"}, ...]}

Serialization is deterministic: keys are sorted, cyclotomic values are
rendered as power-basis coefficient-string arrays tagged with the field
order, and millis is zero unless timing was explicitly requested (so equal
inputs give byte-identical JSON).
"""

import json

from .field import Cyclotomic, Rational

STATUSES = ("pass", "fail", "skipped", "error")


class CheckRecord:
    def __init__(self, check_id, status, details=None, millis=0):
        if status not in STATUSES:
            raise ValueError("bad status %r" % status)
        self.check_id = check_id
        self.status = status
        self.details = details if details is not None else {}
        self.millis = millis

    def __eq__(self, other):
        return (isinstance(other, CheckRecord)
                and self.check_id == other.check_id
                and self.status == other.status
                and self.details == other.details
                and self.millis == other.millis)

    def __repr__(self):
        return "CheckRecord(%r, %r)" % (self.check_id, self.status)


class VerificationReport:
    def __init__(self, group, field_order, checks=()):
        self.group = group
        self.field_order = field_order
        self.checks = list(checks)

    def add(self, record):
        if any(c.check_id == record.check_id for c in self.checks):
            raise ValueError("duplicate check id %r" % record.check_id)
        self.checks.append(record)

    @property
    def overall(self):
        if any(c.status in ("fail", "error") for c in self.checks):
            return "fail"
        return "pass"

    def __eq__(self, other):
        return (isinstance(other, VerificationReport)
                and self.group == other.group
                and self.field_order == other.field_order
                and self.checks == other.checks)


def sanitize(value):
    """Map a detail value onto the JSON-stable subset.

    Cyclotomic -> {"field_order": n, "coeffs": [str, ...]}; Rational -> str;
    sets are sorted; tuples become lists.
    """
    if isinstance(value, Cyclotomic):
        return {"field_order": value.order,
                "coeffs": [str(c) for c in value.coeffs]}
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, Rational):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, str) or value is None:
        return value
    if isinstance(value, dict):
        return dict((str(k), sanitize(v)) for k, v in value.items())
    if isinstance(value, (set, frozenset)):
        return [sanitize(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [sanitize(v) for v in value]
    raise TypeError("cannot serialize %r in a report" % (value,))


def render_json(report):
    doc = {
        "schema": 1,
        "group": report.group,
        "field_order": report.field_order,
        "checks": [{
            "id": c.check_id,
            "status": c.status,
            "details": sanitize(c.details),
            "millis": c.millis,
        } for c in report.checks],
    }
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def report_from_json(text):
    doc = json.loads(text)
    if doc.get("schema") != 1:
        raise ValueError("unsupported report schema %r" % doc.get("schema"))
    report = VerificationReport(doc["group"], doc["field_order"])
    for c in doc["checks"]:
        report.add(CheckRecord(c["id"], c["status"], c["details"],
                               c["millis"]))
    return report


def _note(record):
    det = record.details
    if record.status == "skipped":
        return det.get("reason", "")
    if record.status == "error":
        return det.get("error", "")
    return det.get("note", "")


def render_text(report):
    lines = ["group %s  (field order %d)" % (report.group,
                                             report.field_order)]
    rows = [(c.check_id, c.status, _note(c)) for c in report.checks]
    wid = max([len("check")] + [len(r[0]) for r in rows])
    wst = max([len("status")] + [len(r[1]) for r in rows])
    lines.append("%-*s  %-*s  %s" % (wid, "check", wst, "status", "note"))
    for rid, status, note in rows:
        lines.append("%-*s  %-*s  %s" % (wid, rid, wst, status, note))
    lines.append("overall: %s" % report.overall)
    return "\n".join(lines) + "\n"
