"""CodeRecord: one row of a parameter table, with JSON and CSV projections."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .cycliccode import BchCertificate

CSV_COLUMNS = ("family", "m", "n", "k", "d_lower", "d_exact", "d_upper", "method", "seed",
               "cert_u", "cert_start", "cert_length")


@dataclass(frozen=True)
class CodeRecord:
    family: str
    m: int
    n: int
    k: int
    d_lower: int | None
    method: str
    certificate: BchCertificate | None = None
    d_exact: int | None = None
    d_upper: int | None = None
    seed: int | None = None

    def __post_init__(self):
        lo, ex, up = self.d_lower, self.d_exact, self.d_upper
        if lo is not None and ex is not None and lo > ex:
            raise ValueError(f"d_lower {lo} exceeds d_exact {ex}")
        if ex is not None and up is not None and ex > up:
            raise ValueError(f"d_exact {ex} exceeds d_upper {up}")
        if lo is not None and up is not None and lo > up:
            raise ValueError(f"d_lower {lo} exceeds d_upper {up}")

    def to_dict(self) -> dict:
        return {
            "family": self.family, "m": self.m, "n": self.n, "k": self.k,
            "d_lower": self.d_lower, "d_exact": self.d_exact, "d_upper": self.d_upper,
            "method": self.method, "seed": self.seed,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_row(self) -> dict:
        d = self.to_dict()
        cert = d.pop("certificate") or {}
        for key in ("u", "start", "length"):
            d[f"cert_{key}"] = cert.get(key)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CodeRecord":
        cert = d.get("certificate")
        return cls(
            family=d["family"], m=d["m"], n=d["n"], k=d["k"], d_lower=d.get("d_lower"),
            method=d["method"], certificate=BchCertificate(**cert) if cert else None,
            d_exact=d.get("d_exact"), d_upper=d.get("d_upper"), seed=d.get("seed"),
        )

    def triple(self) -> tuple:
        """(n, k, d) with d exact if known, else None."""
        return self.n, self.k, self.d_exact


def to_jsonl(records) -> str:
    return "".join(r.to_json() + "\n" for r in records)


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow({k: "" if v is None else v for k, v in r.to_row().items()})
    return buf.getvalue()


def from_csv(text: str) -> list[CodeRecord]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        val = {k: (None if v == "" else (v if k in ("family", "method") else int(v))) for k, v in row.items()}
        cert = None
        if val["cert_u"] is not None:
            cert = BchCertificate(val["cert_u"], val["cert_start"], val["cert_length"])
        out.append(CodeRecord(val["family"], val["m"], val["n"], val["k"], val["d_lower"], val["method"],
                              cert, val["d_exact"], val["d_upper"], val["seed"]))
    return out
