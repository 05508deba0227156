"""Machine- and human-readable check reports.

Reports are deterministic given (input, seed): checks are sorted by name,
witnesses rendered through the canonical element printer, and the JSON
form is byte-stable (sorted keys, UTF-8, LF newlines).
"""

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    tag: str
    status: str  # "pass" | "fail" | "skipped"
    witness: str = None
    certificate: dict = None

    def to_json(self):
        out = {"name": self.name, "tag": self.tag, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name, tag, ok, witness=None, certificate=None):
        status = "pass" if ok else "fail"
        if ok is None:
            status = "skipped"
        if certificate is not None and hasattr(certificate, "to_json"):
            certificate = certificate.to_json()
        self.checks.append(Check(name, tag, status, witness, certificate))

    def extend(self, prefix, entries, tag_from_name=True):
        """Absorb (name, ok, witness) triples from a checker."""
        for name, ok, witness in entries:
            tag = name.rsplit("/", 1)[-1] if tag_from_name else name
            self.add("%s/%s" % (prefix, name) if prefix else name, tag, ok, witness)

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c.name)

    def to_json_obj(self):
        return {
            "command": self.command,
            "params": self.params,
            "status": "pass" if self.ok else "fail",
            "counts": {
                "pass": sum(1 for c in self.checks if c.status == "pass"),
                "fail": sum(1 for c in self.checks if c.status == "fail"),
                "skipped": sum(1 for c in self.checks if c.status == "skipped"),
            },
            "checks": [c.to_json() for c in self.sorted_checks()],
        }

    def to_text(self):
        lines = ["# xmod2 %s" % self.command]
        if self.params:
            lines.append("params: %s" % json.dumps(self.params, sort_keys=True))
        for c in self.sorted_checks():
            mark = {"pass": "ok  ", "fail": "FAIL", "skipped": "skip"}[c.status]
            line = "%s  %s" % (mark, c.name)
            if c.witness:
                line += "  [%s]" % c.witness
            lines.append(line)
        obj = self.to_json_obj()
        lines.append(
            "%s: %d pass, %d fail, %d skipped"
            % (obj["status"], obj["counts"]["pass"], obj["counts"]["fail"], obj["counts"]["skipped"])
        )
        return "\n".join(lines) + "\n"


def canonical_json(obj):
    """Byte-stable JSON: sorted keys, UTF-8, LF, trailing newline."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
