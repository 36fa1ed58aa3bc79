"""The five weight-class families, their duadic structure, and the claim catalog.

Every containment lemma and every dimension/bound statement is a record in
``LEMMAS`` / ``THEOREMS``; one verifier evaluates them all.  Claim ids read
``<side>:<set>:m%<modulus>=<residue>``, e.g. ``in:T0:m%6=1`` says a progression
{a*v} lies inside T_(0,m) when m = 1 mod 6, and ``dual:T12:m%8=5`` gives the
dimension and distance bound of the dual of C_(1,2,m) when m = 5 mod 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from . import cycliccode as cc
from .cycliccode import CyclicCode
from .field import FieldSpec, make_field
from .formula import evaluate
from .gf2linalg import BitMatrix, is_self_dual, matmul_t, null_space, same_row_space
from .znsets import SplittingSpec, is_splitting, mod3_set, mod4_set, prm_defining_set


class ClaimNotApplicable(ValueError):
    pass


# ---------------------------------------------------------------- codes


def build_mod3_code(i: int, m: int, f: FieldSpec | None = None) -> CyclicCode:
    if i not in (0, 1, 2):
        raise ValueError(f"i must be 0, 1 or 2, got {i}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    f = f or make_field(m)
    return cc.from_defining_set(mod3_set(i, m), f)


def build_mod4_code(i1: int, i2: int, m: int, f: FieldSpec | None = None) -> CyclicCode:
    if not {i1, i2} <= {0, 1, 2, 3} or i1 == i2:
        raise ValueError(f"need two distinct residues in 0..3, got ({i1}, {i2})")
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and >= 3, got {m}")
    f = f or make_field(m)
    return cc.from_defining_set(mod4_set(i1, i2, m), f)


def duadic_members(m: int) -> tuple[tuple[int, int], tuple[int, int]]:
    if m % 2 == 0:
        raise ValueError(f"duadic pairs need odd m, got {m}")
    return ((0, 3), (1, 2)) if m % 4 == 1 else ((0, 1), (2, 3))


def duadic_pair(m: int, f: FieldSpec | None = None) -> tuple[CyclicCode, CyclicCode]:
    """The odd-like pair: (0,3)/(1,2) for m = 1 mod 4, (0,1)/(2,3) for m = 3 mod 4."""
    if m % 2 == 0 or m < 3:
        raise ValueError(f"duadic pairs need odd m >= 3, got {m}")
    f = f or make_field(m)
    a, b = duadic_members(m)
    return build_mod4_code(*a, m, f), build_mod4_code(*b, m, f)


FAMILIES = ("mod3", "mod3-dual", "duadic", "duadic-dual", "prm", "prm-dual")


def family_members(family: str, m: int) -> list:
    """Member keys of a family at m: i for mod3, pair index for duadic, order r for prm."""
    base = family.removesuffix("-dual")
    if base not in ("mod3", "duadic", "prm") or family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if base == "mod3":
        return [0, 1, 2] if m >= 2 else []
    if base == "duadic":
        return [0, 1] if m >= 3 and m % 2 else []
    return list(range(1, m - 1))


def member_label(family: str, m: int, member) -> str:
    base = family.removesuffix("-dual")
    if base == "mod3":
        tag = str(member)
    elif base == "duadic":
        tag = "%d,%d" % duadic_members(m)[member]
    else:
        tag = f"r={member}"
    return f"{family}[{tag}]"


def build_family_code(family: str, m: int, member, f: FieldSpec | None = None) -> CyclicCode:
    if member not in family_members(family, m):
        raise ValueError(f"{family} has no member {member!r} at m={m}")
    f = f or make_field(m)
    base = family.removesuffix("-dual")
    if base == "mod3":
        c = build_mod3_code(member, m, f)
    elif base == "duadic":
        c = duadic_pair(m, f)[member]
    else:
        c = cc.from_defining_set(prm_defining_set(member, m), f)
    return cc.dual(c) if family.endswith("-dual") else c


# ---------------------------------------------------------------- s-class counts


@dataclass(frozen=True)
class SClassCounts:
    m: int
    s0: int
    s1: int
    s2: int

    def sum_ok(self) -> bool:
        return self.s0 + self.s1 + self.s2 == 1 << self.m

    def identity_value(self) -> int:
        s0, s1, s2 = self.s0, self.s1, self.s2
        return s0 * s0 + s1 * s1 + s2 * s2 - s0 * s1 - s0 * s2 - s1 * s2


def s_class_counts(m: int) -> SClassCounts:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    s = [0, 0, 0]
    for i in range(m + 1):
        s[i % 3] += comb(m, i)
    return SClassCounts(m, *s)


# ---------------------------------------------------------------- claim records

# weight-class targets: name -> (r, residues)
SETS = {
    "T0": (3, (0,)), "T1": (3, (1,)), "T2": (3, (2,)),
    "T01": (4, (0, 1)), "T23": (4, (2, 3)), "T03": (4, (0, 3)), "T12": (4, (1, 2)),
}


@dataclass(frozen=True)
class Condition:
    modulus: int
    residue: int
    m_min: int

    def holds(self, m: int) -> bool:
        return m >= self.m_min and m % self.modulus == self.residue

    def values(self, m_max: int, m_lo: int = 1) -> list[int]:
        return [m for m in range(max(m_lo, self.m_min), m_max + 1) if self.holds(m)]

    def __str__(self):
        return f"m%{self.modulus}={self.residue}, m>={self.m_min}"


@dataclass(frozen=True)
class LemmaClaim:
    """{a*v mod n : a in ranges} lies in the target set (side "in") or avoids it (side "out")."""

    target: str
    side: str
    cond: Condition
    v: str
    ranges: tuple[tuple[str, str], ...]

    @property
    def id(self) -> str:
        return f"{self.side}:{self.target}:m%{self.cond.modulus}={self.cond.residue}"


@dataclass(frozen=True)
class TheoremClaim:
    """Dimension and distance lower bound for one code of a family under a congruence on m."""

    target: str
    kind: str  # "primal", "dual" or "extended"
    cond: Condition
    dim: str
    bound: str

    @property
    def id(self) -> str:
        return f"{self.kind}:{self.target}:m%{self.cond.modulus}={self.cond.residue}"


def _L(target, side, mod, res, m_min, v, *ranges):
    return LemmaClaim(target, side, Condition(mod, res, m_min), v, tuple(ranges))


H = "2^((m-1)/2)"      # half power, odd m
HP = "2^((m+1)/2)"
V_LO = f"{H}-1"
V_HI = f"{HP}-1"
E2 = "2^((m-2)/2)"     # even m, m = 0 mod 4 lemmas
E4 = "2^((m-4)/2)"     # even m, m = 2 mod 4 lemmas
MID = f"2^(m-1)+{H}+1"
WRAP1 = f"2^m-{H}-1"
WRAP5 = f"2^m-{H}-5"

LEMMAS: tuple[LemmaClaim, ...] = (
    # primal side, odd m
    _L("T0", "in", 6, 1, 7, V_LO, ("1", f"{H}+2")),
    _L("T1", "in", 6, 1, 7, V_HI, ("1", f"{H}+2")),
    _L("T2", "in", 6, 1, 7, V_LO, (MID, f"2^(m-1)+{H}+2^((m-3)/2)+1")),
    _L("T0", "in", 6, 3, 9, V_LO, (MID, f"2^(m-1)+{H}+2^((m-3)/2)")),
    _L("T1", "in", 6, 3, 9, V_LO, ("1", H)),
    _L("T2", "in", 6, 3, 9, V_HI, ("1", H)),
    _L("T0", "in", 6, 5, 5, V_HI, ("1", H)),
    _L("T1", "in", 6, 5, 5, V_HI, (MID, f"2^(m-1)+{H}+2^((m-3)/2)")),
    _L("T2", "in", 6, 5, 5, V_LO, ("1", H)),
    # primal side, even m
    _L("T2", "in", 12, 0, 12, f"{E2}-1", ("1", E2)),
    _L("T0", "in", 12, 8, 8, f"{E2}-1", ("1", E2)),
    _L("T1", "in", 12, 4, 4, f"{E2}-1", ("1", E2)),
    _L("T1", "in", 12, 6, 6, f"{E4}-1", ("1", E4)),
    _L("T2", "in", 12, 2, 14, f"{E4}-1", ("1", E4)),
    _L("T0", "in", 12, 10, 10, f"{E4}-1", ("1", E4)),
    # dual side, odd m: the progression avoids T
    _L("T0", "out", 6, 1, 7, V_HI, ("0", f"{H}+2")),
    _L("T1", "out", 6, 1, 7, V_LO, ("0", f"{H}+2")),
    _L("T2", "out", 6, 1, 7, V_HI, (WRAP5, "n-1"), ("0", f"{H}+4")),
    _L("T0", "out", 6, 3, 9, V_LO, (WRAP5, "n-1"), ("0", f"{H}+4")),
    _L("T1", "out", 6, 3, 9, V_HI, ("0", H)),
    _L("T2", "out", 6, 3, 9, V_LO, ("0", H)),
    _L("T0", "out", 6, 5, 5, V_LO, ("0", f"{H}+2")),
    _L("T1", "out", 6, 5, 5, V_LO, (WRAP1, "n-1"), ("0", H)),
    _L("T2", "out", 6, 5, 5, V_HI, ("0", f"{H}+2")),
    # dual side, m = 0 mod 4
    _L("T1", "out", 12, 0, 12, f"{E2}-1", ("0", E2)),
    _L("T2", "out", 12, 8, 8, f"{E2}-1", ("0", f"{E2}+4")),
    _L("T0", "out", 12, 4, 4, f"{E2}-1", ("0", f"{E2}+4")),
    _L("T0", "out", 12, 0, 12, f"{E2}-1", (f"2^m-{E2}-3", "n-1"), ("0", f"{E2}+2")),
    _L("T1", "out", 12, 8, 8, f"{E2}-1", (f"2^m-{E2}-3", "n-1"), ("0", f"{E2}+2")),
    _L("T2", "out", 12, 4, 4, f"{E2}-1", (f"2^m-{E2}-1", "n-1"), ("0", E2)),
    _L("T2", "out", 12, 0, 12, "2^((m+2)/2)-1", ("0", E2)),
    _L("T0", "out", 12, 8, 8, "2^((m+2)/2)-1", ("0", f"{E2}+4")),
    _L("T1", "out", 12, 4, 4, "2^((m+2)/2)-1", ("0", f"{E2}+4")),
    # dual side, m = 2 mod 4
    _L("T2", "out", 12, 6, 6, f"{E4}-1", ("0", E4)),
    _L("T0", "out", 12, 2, 14, f"{E4}-1", ("0", f"{E4}+2")),
    _L("T1", "out", 12, 10, 10, f"{E4}-1", ("0", f"{E4}+2")),
    _L("T0", "out", 12, 6, 6, f"{E4}-1", (f"2^m-{E4}-5", "n-1"), ("0", f"{E4}+4")),
    _L("T1", "out", 12, 2, 14, f"{E4}-1", (f"2^m-{E4}-1", "n-1"), ("0", E4)),
    _L("T2", "out", 12, 10, 10, f"{E4}-1", (f"2^m-{E4}-5", "n-1"), ("0", f"{E4}+4")),
    _L("T1", "out", 12, 6, 6, "2^((m+4)/2)-1", ("0", E4)),
    _L("T2", "out", 12, 2, 14, "2^((m+4)/2)-1", ("0", f"{E4}+2")),
    _L("T0", "out", 12, 10, 10, "2^((m+4)/2)-1", ("0", f"{E4}+2")),
    # duadic defining sets
    _L("T03", "in", 8, 1, 9, V_LO, ("1", f"{H}+2")),
    _L("T12", "in", 8, 1, 9, V_HI, ("1", f"{H}+2")),
    _L("T01", "in", 8, 3, 3, V_LO, ("1", H)),
    _L("T23", "in", 8, 3, 3, V_HI, ("1", H)),
    _L("T03", "in", 8, 5, 5, V_HI, ("1", H)),
    _L("T12", "in", 8, 5, 5, V_LO, ("1", H)),
    _L("T01", "in", 8, 7, 7, V_HI, ("1", f"{H}+2")),
    _L("T23", "in", 8, 7, 7, V_LO, ("1", f"{H}+2")),
)


def _T(target, kind, mod, res, m_min, dim, bound):
    return TheoremClaim(target, kind, Condition(mod, res, m_min), dim, bound)


THEOREMS: tuple[TheoremClaim, ...] = (
    # primal codes, odd m
    _T("T0", "primal", 6, 1, 7, "(2^(m+1)-1)/3", f"{H}+3"),
    _T("T1", "primal", 6, 1, 7, "(2^(m+1)-1)/3", f"{H}+3"),
    _T("T2", "primal", 6, 1, 7, "(2^(m+1)-1)/3", "2^((m-3)/2)+2"),
    _T("T0", "primal", 6, 3, 9, "(2^(m+1)+5)/3", "2^((m-3)/2)+1"),
    _T("T1", "primal", 6, 3, 9, "(2^(m+1)-4)/3", f"{H}+1"),
    _T("T2", "primal", 6, 3, 9, "(2^(m+1)-4)/3", f"{H}+1"),
    _T("T0", "primal", 6, 5, 5, "(2^(m+1)-1)/3", f"{H}+1"),
    _T("T1", "primal", 6, 5, 5, "(2^(m+1)-1)/3", "2^((m-3)/2)+1"),
    _T("T2", "primal", 6, 5, 5, "(2^(m+1)-1)/3", f"{H}+1"),
    # primal codes, m = 0 mod 4
    _T("T0", "primal", 12, 0, 12, "(2^(m+1)+1)/3", f"{E2}+1"),
    _T("T1", "primal", 12, 0, 12, "(2^(m+1)-2)/3", f"{E2}+1"),
    _T("T2", "primal", 12, 0, 12, "(2^(m+1)-2)/3", f"{E2}+1"),
    _T("T0", "primal", 12, 8, 8, "(2^(m+1)+1)/3", f"{E2}+1"),
    _T("T1", "primal", 12, 8, 8, "(2^(m+1)-5)/3", f"{E2}+1"),
    _T("T2", "primal", 12, 8, 8, "(2^(m+1)+1)/3", f"{E2}+1"),
    _T("T0", "primal", 12, 4, 4, "(2^(m+1)+1)/3", f"{E2}+1"),
    _T("T1", "primal", 12, 4, 4, "(2^(m+1)+1)/3", f"{E2}+1"),
    _T("T2", "primal", 12, 4, 4, "(2^(m+1)-5)/3", f"{E2}+1"),
    # primal codes, m = 2 mod 4
    _T("T0", "primal", 12, 6, 6, "(2^(m+1)+1)/3", f"{E4}+1"),
    _T("T1", "primal", 12, 6, 6, "(2^(m+1)-2)/3", f"{E4}+1"),
    _T("T2", "primal", 12, 6, 6, "(2^(m+1)-2)/3", f"{E4}+1"),
    _T("T0", "primal", 12, 2, 14, "(2^(m+1)+1)/3", f"{E4}+1"),
    _T("T1", "primal", 12, 2, 14, "(2^(m+1)-5)/3", f"{E4}+1"),
    _T("T2", "primal", 12, 2, 14, "(2^(m+1)+1)/3", f"{E4}+1"),
    _T("T0", "primal", 12, 10, 10, "(2^(m+1)+1)/3", f"{E4}+1"),
    _T("T1", "primal", 12, 10, 10, "(2^(m+1)+1)/3", f"{E4}+1"),
    _T("T2", "primal", 12, 10, 10, "(2^(m+1)-5)/3", f"{E4}+1"),
    # duals, odd m
    _T("T0", "dual", 6, 1, 7, "(2^m-2)/3", f"{H}+4"),
    _T("T0", "dual", 6, 5, 5, "(2^m-2)/3", f"{H}+4"),
    _T("T0", "dual", 6, 3, 9, "(2^m-8)/3", f"{HP}+10"),
    _T("T1", "dual", 6, 1, 7, "(2^m-2)/3", f"{H}+4"),
    _T("T1", "dual", 6, 3, 9, "(2^m+1)/3", f"{H}+2"),
    _T("T1", "dual", 6, 5, 5, "(2^m-2)/3", f"{HP}+2"),
    _T("T2", "dual", 6, 1, 7, "(2^m-2)/3", f"{HP}+10"),
    _T("T2", "dual", 6, 3, 9, "(2^m+1)/3", f"{H}+2"),
    _T("T2", "dual", 6, 5, 5, "(2^m-2)/3", f"{H}+4"),
    # duals, m = 0 mod 4
    _T("T0", "dual", 12, 0, 12, "(2^m-4)/3", "2^(m/2)+6"),
    _T("T0", "dual", 12, 8, 8, "(2^m-4)/3", f"{E2}+6"),
    _T("T0", "dual", 12, 4, 4, "(2^m-4)/3", f"{E2}+6"),
    _T("T1", "dual", 12, 0, 12, "(2^m-1)/3", f"{E2}+2"),
    _T("T1", "dual", 12, 8, 8, "(2^m+2)/3", "2^(m/2)+6"),
    _T("T1", "dual", 12, 4, 4, "(2^m-4)/3", f"{E2}+6"),
    _T("T2", "dual", 12, 0, 12, "(2^m-1)/3", f"{E2}+2"),
    _T("T2", "dual", 12, 8, 8, "(2^m-4)/3", f"{E2}+6"),
    _T("T2", "dual", 12, 4, 4, "(2^m+2)/3", "2^(m/2)+2"),
    # duals, m = 2 mod 4
    _T("T0", "dual", 12, 6, 6, "(2^m-4)/3", f"{E2}+10"),
    _T("T0", "dual", 12, 2, 14, "(2^m-4)/3", f"{E4}+4"),
    _T("T0", "dual", 12, 10, 10, "(2^m-4)/3", f"{E4}+4"),
    _T("T1", "dual", 12, 6, 6, "(2^m-1)/3", f"{E4}+2"),
    _T("T1", "dual", 12, 2, 14, "(2^m+2)/3", f"{E2}+2"),
    _T("T1", "dual", 12, 10, 10, "(2^m-4)/3", f"{E4}+4"),
    _T("T2", "dual", 12, 6, 6, "(2^m-1)/3", f"{E4}+2"),
    _T("T2", "dual", 12, 2, 14, "(2^m-4)/3", f"{E4}+4"),
    _T("T2", "dual", 12, 10, 10, "(2^m+2)/3", f"{E2}+10"),
    # duadic odd-like pairs, their duals (the even-like pairs) and extensions
    *(_T(t, "primal", 8, 1, 9, "2^(m-1)", f"{H}+3") for t in ("T03", "T12")),
    *(_T(t, "primal", 8, 5, 5, "2^(m-1)", f"{H}+1") for t in ("T03", "T12")),
    *(_T(t, "dual", 8, 1, 9, "2^(m-1)-1", f"{H}+4") for t in ("T03", "T12")),
    *(_T(t, "dual", 8, 5, 5, "2^(m-1)-1", f"{H}+2") for t in ("T03", "T12")),
    *(_T(t, "extended", 4, 1, 5, "2^(m-1)", f"{H}+4") for t in ("T03", "T12")),
    *(_T(t, "primal", 8, 3, 3, "2^(m-1)", f"{H}+1") for t in ("T01", "T23")),
    *(_T(t, "primal", 8, 7, 7, "2^(m-1)", f"{H}+3") for t in ("T01", "T23")),
    *(_T(t, "dual", 8, 3, 3, "2^(m-1)-1", f"{H}+2") for t in ("T01", "T23")),
    *(_T(t, "dual", 8, 7, 7, "2^(m-1)-1", f"{H}+4") for t in ("T01", "T23")),
    *(_T(t, "extended", 4, 3, 7, "2^(m-1)", f"{H}+4") for t in ("T01", "T23")),
)

LEMMA_BY_ID = {c.id: c for c in LEMMAS}
THEOREM_BY_ID = {c.id: c for c in THEOREMS}


def _require(cond: Condition, m: int, cid: str):
    if not cond.holds(m):
        raise ClaimNotApplicable(f"{cid} needs {cond}; got m={m}")


def in_target(x: int, target: str, m: int) -> bool:
    """x in T(target) for the given m (0 is never a member)."""
    r, S = SETS[target]
    return x != 0 and x.bit_count() % r in S


def lemma_witness(claim: LemmaClaim, m: int) -> int | None:
    """First a violating the claim (or -1 if gcd(v, n) != 1); None when the claim holds."""
    _require(claim.cond, m, claim.id)
    n = (1 << m) - 1
    v = evaluate(claim.v, m)
    if gcd(v, n) != 1:
        return -1
    want = claim.side == "in"
    for lo_expr, hi_expr in claim.ranges:
        lo, hi = evaluate(lo_expr, m), evaluate(hi_expr, m)
        for a in range(lo, hi + 1):
            if in_target(a * v % n, claim.target, m) != want:
                return a
    return None


def verify_lemma(claim: LemmaClaim, m: int) -> bool:
    return lemma_witness(claim, m) is None


def expected_dimension(claim: TheoremClaim, m: int) -> int:
    _require(claim.cond, m, claim.id)
    return evaluate(claim.dim, m)


def expected_bound(claim: TheoremClaim, m: int) -> int:
    _require(claim.cond, m, claim.id)
    return evaluate(claim.bound, m)


def target_set(target: str, m: int):
    r, S = SETS[target]
    return mod3_set(S[0], m) if r == 3 else mod4_set(*S, m)


def claim_code(claim: TheoremClaim, m: int, f: FieldSpec | None = None) -> CyclicCode:
    """The cyclic code a claim is about; for extended claims, the code that gets extended."""
    f = f or make_field(m)
    c = cc.from_defining_set(target_set(claim.target, m), f)
    return cc.dual(c) if claim.kind == "dual" else c


def measured_dimension(claim: TheoremClaim, m: int) -> int:
    """n - |defining set| of the claim's code (no generator polynomial is built)."""
    n = (1 << m) - 1
    T = target_set(claim.target, m)
    if claim.kind == "dual":
        return len(T)  # dim C^perp = |T| since -T has the size of T
    return n - len(T)


def extended_bound(lower: int, doubly_even: bool) -> int:
    """Lift a distance bound of a code to its extension (even weights, optionally = 0 mod 4)."""
    step = 4 if doubly_even else 2
    return -(-lower // step) * step


def certified_bound(claim: TheoremClaim, m: int, f: FieldSpec | None = None) -> tuple[int, cc.BchCertificate]:
    code = claim_code(claim, m, f)
    cert = cc.best_bch_certificate(code)
    if claim.kind != "extended":
        return cert.bound, cert
    return extended_bound(cert.bound, doubly_even=True), cert


# ---------------------------------------------------------------- reports


def lemma_report(m_max: int, m_min: int = 1) -> list[dict]:
    out = []
    for claim in LEMMAS:
        for m in claim.cond.values(m_max, m_min):
            w = lemma_witness(claim, m)
            row = {"claim_id": claim.id, "m": m, "status": "pass" if w is None else "fail"}
            if w is not None:
                row["witness"] = {"a": w}
            out.append(row)
    return out


def dimension_report(m_max: int, m_min: int = 1) -> list[dict]:
    out = []
    for claim in THEOREMS:
        for m in claim.cond.values(m_max, m_min):
            want, got = expected_dimension(claim, m), measured_dimension(claim, m)
            row = {"claim_id": claim.id, "m": m, "status": "pass" if want == got else "fail"}
            if want != got:
                row["witness"] = {"expected": want, "measured": got}
            out.append(row)
    return out


def bound_report(m_max: int, m_min: int = 1) -> list[dict]:
    """Certificate search must reach every stated bound."""
    out = []
    fields: dict[int, FieldSpec] = {}
    for claim in THEOREMS:
        for m in claim.cond.values(m_max, m_min):
            f = fields.setdefault(m, make_field(m))
            want = expected_bound(claim, m)
            got, cert = certified_bound(claim, m, f)
            row = {"claim_id": claim.id, "m": m, "status": "pass" if got >= want else "fail",
                   "expected": want, "certified": got, "certificate": cert.to_dict()}
            out.append(row)
    return out


def verify_duadic_structure(m: int, f: FieldSpec | None = None, k_limit: int = 26,
                            linear_algebra: bool = True) -> list[dict]:
    """Per-item structural report for the duadic pair at odd m; failures are reported, not raised."""
    from .distance import NoOddWeightError, min_odd_weight, weight_distribution

    if m % 2 == 0 or m < 3:
        raise ClaimNotApplicable(f"duadic structure needs odd m >= 3, got {m}")
    f = f or make_field(m)
    c1, c2 = duadic_pair(m, f)
    names = ["T%d%d" % s for s in duadic_members(m)]
    n = c1.n
    report = []

    def item(check, member, ok, **detail):
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        row = {"check": check, "member": member, "status": status}
        if detail:
            row["detail"] = detail
        report.append(row)

    item("splitting", "pair", is_splitting(SplittingSpec(c1.T, c2.T, -1)), mu=-1)
    for name, c in zip(names, (c1, c2)):
        d, ev = cc.dual(c), cc.even_like_subcode(c)
        ok = d.T == ev.T
        if ok and linear_algebra:
            ok = same_row_space(null_space(c.generator_matrix), ev.generator_matrix)
        item("dual_is_even_like", name, ok, k=c.k, dual_k=d.k)

        G = cc.extend(c)
        gram_zero = not any(matmul_t(G, G).rows)
        rows_de = all(w % 4 == 0 for w in G.row_weights())
        item("extended_self_dual", name, gram_zero and G.cols == 2 * G.nrows and is_self_dual(G),
             length=G.cols, k=G.nrows)
        item("extended_doubly_even_basis", name, rows_de, row_weight=G.row_weights()[0])
        if c.k <= k_limit:
            dist = weight_distribution(G)
            item("extended_doubly_even_enumerated", name,
                 all(a == 0 for w, a in enumerate(dist) if w % 4))
            try:
                do = min_odd_weight(c)
                item("square_root_bound", name, do * do - do + 1 >= n, d_o=do, lhs=do * do - do + 1, n=n)
            except NoOddWeightError:
                item("square_root_bound", name, False, reason="no odd-weight codewords")
        else:
            item("square_root_bound", name, None, reason=f"k={c.k} > {k_limit}")
    return report
