"""Pass/fail records for verified identities."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
TRIVIAL = "trivially-satisfied"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Certificate:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class CertificateTable:
    entries: list[Certificate] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.entries.append(Certificate(name, PASS if ok else FAIL, detail))
        return ok

    def trivial(self, name: str, detail: str = ""):
        self.entries.append(Certificate(name, TRIVIAL, detail))

    def not_applicable(self, name: str, detail: str = ""):
        self.entries.append(Certificate(name, NOT_APPLICABLE, detail))

    def extend(self, other: "CertificateTable") -> "CertificateTable":
        self.entries.extend(other.entries)
        return self

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, name: str) -> Certificate:
        for c in self.entries:
            if c.name == name:
                return c
        raise KeyError(name)

    def named(self, prefix: str) -> list[Certificate]:
        return [c for c in self.entries if c.name.startswith(prefix)]

    @property
    def all_passed(self) -> bool:
        return all(c.ok for c in self.entries)

    def failures(self) -> list[Certificate]:
        return [c for c in self.entries if not c.ok]

    def to_dict(self) -> dict[str, str]:
        return {c.name: c.status for c in self.entries}
