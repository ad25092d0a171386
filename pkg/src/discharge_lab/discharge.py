"""Charges, the two built-in discharging rule sets, and the per-case audit.

Initial charge is ``2d(v) - 6`` on vertices and ``d(f) - 6`` on faces, which
sums to -12 on any connected plane graph.  Rules are evaluated
simultaneously against the static classification of the graph, so every
transfer amount is fixed before any charge moves and evaluation order is
irrelevant.  All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .classify import FourKind, PoorClass, Structure, structure
from .plane_graph import PlaneGraph, in_class

Q = Fraction
BANK = "bank"


class RuleSet(str, enum.Enum):
    R110 = "R110"
    R300 = "R300"

    @classmethod
    def parse(cls, text: str) -> "RuleSet":
        if isinstance(text, cls):
            return text
        t = str(text).upper().lstrip("R")
        return {"110": cls.R110, "300": cls.R300}[t]


@dataclass(frozen=True)
class Transfer:
    source: str
    dest: str
    amount: Fraction
    rule: str

    def to_line(self) -> str:
        return f"{self.source} {self.dest} {fmt_q(self.amount)} {self.rule}"


def fmt_q(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def vkey(v: int) -> str:
    return f"v{v}"


def fkey(f: int) -> str:
    return f"f{f}"


@dataclass
class ChargeLedger:
    vertex: dict[int, Fraction]
    face: dict[int, Fraction]
    bank: Fraction = Q(0)
    transfers: list[Transfer] = field(default_factory=list)

    def total(self) -> Fraction:
        return sum(self.vertex.values(), Q(0)) + sum(self.face.values(), Q(0)) + self.bank

    def copy(self) -> "ChargeLedger":
        return ChargeLedger(dict(self.vertex), dict(self.face), self.bank, list(self.transfers))

    def get(self, key: str) -> Fraction:
        if key == BANK:
            return self.bank
        kind, idx = key[0], int(key[1:])
        return self.vertex[idx] if kind == "v" else self.face[idx]

    def _add(self, key: str, amount: Fraction) -> None:
        if key == BANK:
            self.bank += amount
        elif key[0] == "v":
            self.vertex[int(key[1:])] += amount
        else:
            self.face[int(key[1:])] += amount

    def apply(self, t: Transfer) -> None:
        self._add(t.source, -t.amount)
        self._add(t.dest, t.amount)
        self.transfers.append(t)

    def negative_elements(self) -> list[str]:
        out = [vkey(v) for v, c in sorted(self.vertex.items()) if c < 0]
        out += [fkey(f) for f, c in sorted(self.face.items()) if c < 0]
        if self.bank < 0:
            out.append(BANK)
        return out


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    return ChargeLedger(
        vertex={v: Q(2 * g.degree(v) - 6) for v in g.vertices},
        face={f.id: Q(f.degree - 6) for f in g.faces},
    )


def replay(initial: ChargeLedger, transfers: Iterable[Transfer]) -> ChargeLedger:
    ledger = initial.copy()
    ledger.transfers = []
    for t in transfers:
        ledger.apply(t)
    return ledger


# rule sets -------------------------------------------------------------------


def _give(out: list[Transfer], src: str, dst: str, amount, rule: str) -> None:
    amount = Q(amount)
    if amount:
        out.append(Transfer(src, dst, amount, rule))


def transfers_110(s: Structure) -> list[Transfer]:
    out: list[Transfer] = []
    terminals = s.chain_terminals
    for v in s.g.vertices:
        d = s.deg[v]
        tris = s.tris_at[v]
        pend = s.pendant_faces[v]
        src = vkey(v)
        if d == 4:
            for f in pend:
                _give(out, src, fkey(f), Q(1, 2), "R1")
            if tris:
                share = (2 - Q(len(pend), 2)) / len(tris)
                for f in tris:
                    _give(out, src, fkey(f), share, "R1")
        elif d == 5:
            has_bad345 = any(s.is_bad(f, "(3,4,5)") for f in tris)
            pend_low = any(s.sig_is(f, "(3,4-,4-)") for f in pend)
            for f in tris:
                if s.sig_is(f, "(3,3,5)"):
                    _give(out, src, fkey(f), 2, "R6a")
                elif s.sig_is(f, "(3,4,5)"):
                    if f in s.bad_345p:
                        _give(out, src, fkey(f), Q(9, 4), "R6a")
                    else:
                        _give(out, src, fkey(f), Q(7, 4) if has_bad345 else 2, "R6b")
                elif s.sig_is(f, "(3,5+,5+)"):
                    _give(out, src, fkey(f), Q(5, 4) if has_bad345 and pend_low else Q(3, 2), "R6c")
                elif s.sig_is(f, "(4+,4+,5)"):
                    _give(out, src, fkey(f), Q(3, 2) if f in terminals else 1, "R6d")
            for f in pend:
                if s.sig_is(f, "(3,4-,4-)") or s.sig_is(f, "(3,3,*)"):
                    _give(out, src, fkey(f), Q(1, 2), "R6e")
                else:
                    _give(out, src, fkey(f), Q(1, 4), "R6e")
        elif d >= 6:
            for f in tris:
                if d >= 7:
                    amount = Q(9, 4)
                elif s.is_bad(f, "(3,4,6)"):
                    amount = Q(9, 4)
                elif s.sig_is(f, "(3,4-,6)"):
                    amount = Q(2)
                else:
                    amount = Q(3, 2)
                _give(out, src, fkey(f), amount, "R2")
            for f in pend:
                _give(out, src, fkey(f), Q(1, 2), "R3")
    for f in s.triangles:
        if s.sig_is(f, "(4+,4+,5+)") and f in terminals:
            _give(out, fkey(f), BANK, Q(1, 2), "R4")
        elif s.sig_is(f, "(4,4,4)") and s.has_good4(f):
            _give(out, fkey(f), BANK, Q(1, 2), "R4")
        elif f in s.bad_345p:
            _give(out, fkey(f), BANK, Q(1, 4), "R4")
        if s.sig_is(f, "(3,4,4)") and not s.has_good4(f):
            _give(out, BANK, fkey(f), Q(1, 2), "R5")
    return out


def transfers_300(s: Structure) -> list[Transfer]:
    out: list[Transfer] = []
    for v in s.g.vertices:
        d = s.deg[v]
        src = vkey(v)
        for f in s.tris_at[v]:
            if d == 4:
                _give(out, src, fkey(f), 1, "R1")
            elif d in (5, 6):
                _give(out, src, fkey(f), 2, "R2")
            elif 7 <= d <= 10:
                cls = s.poor_class[f]
                if cls is PoorClass.POOR:
                    _give(out, src, fkey(f), 3, "R4")
                elif cls is PoorClass.SEMI_POOR:
                    special = d == 7 and v in s.special_semipoor_givers(f)
                    _give(out, src, fkey(f), 1 if special else 2, "R4")
                else:
                    _give(out, src, fkey(f), 1, "R4")
            elif d >= 11:
                _give(out, src, fkey(f), 3, "R5")
        if d >= 6:
            for f in s.pendant_faces[v]:
                _give(out, src, fkey(f), 1, "R3")
    return out


def rule_transfers(g: PlaneGraph, ruleset: RuleSet | str) -> list[Transfer]:
    ruleset = RuleSet.parse(ruleset) if not isinstance(ruleset, RuleSet) else ruleset
    s = structure(g)
    return transfers_110(s) if ruleset is RuleSet.R110 else transfers_300(s)


def apply_rules(g: PlaneGraph, ruleset: RuleSet | str) -> ChargeLedger:
    ledger = initial_charges(g)
    for t in rule_transfers(g, ruleset):
        ledger.apply(t)
    return ledger


def bank_balance(ledger: ChargeLedger, ruleset: RuleSet | str = RuleSet.R110) -> Fraction:
    if RuleSet.parse(ruleset) is not RuleSet.R110:
        raise ValueError("only the (1,1,0) rule set uses a bank")
    return ledger.bank


# audit -------------------------------------------------------------------------

UNMATCHED = "unmatched-case"


@dataclass(frozen=True)
class AuditEntry:
    element: str
    label: str
    final: Fraction
    bound: Fraction | None

    @property
    def ok(self) -> bool | None:
        return None if self.bound is None else self.final >= self.bound


@dataclass
class AuditReport:
    ruleset: RuleSet
    entries: list[AuditEntry]
    bank: Fraction | None
    total: Fraction
    conserved: bool

    def by_element(self) -> dict[str, AuditEntry]:
        return {e.element: e for e in self.entries}

    @property
    def failures(self) -> list[AuditEntry]:
        out = [e for e in self.entries if e.ok is False]
        return out

    @property
    def bank_ok(self) -> bool | None:
        return None if self.bank is None else self.bank >= 0

    @property
    def all_bounds_hold(self) -> bool:
        return not self.failures and self.bank_ok is not False


_FACE_CASES_110 = [
    ("Case 1: (3,3,5+)-face", lambda s, f: s.sig_is(f, "(3,3,5+)")),
    ("Case 2: (3,4,4)-face", lambda s, f: s.sig_is(f, "(3,4,4)")),
    ("Case 3: bad (3,4,5)-face", lambda s, f: s.is_bad(f, "(3,4,5)")),
    ("Case 4: non-bad (3,4,5)-face", lambda s, f: s.sig_is(f, "(3,4,5)")),
    ("Case 5: (3,4,6)-face", lambda s, f: s.sig_is(f, "(3,4,6)")),
    ("Case 6: (3,4,7+)-face", lambda s, f: s.sig_is(f, "(3,4,7+)")),
    ("Case 7: (3,5,5)-face", lambda s, f: s.sig_is(f, "(3,5,5)")),
    ("Case 8: (3,5,6+)-face", lambda s, f: s.sig_is(f, "(3,5,6+)")),
    ("Case 9: (3,6+,6+)-face", lambda s, f: s.sig_is(f, "(3,6+,6+)")),
    ("Case 10: (4,4,4)-face", lambda s, f: s.sig_is(f, "(4,4,4)")),
    ("Case 11: (4+,4+,5+)-face", lambda s, f: s.sig_is(f, "(4+,4+,5+)")),
]

_FACE_CASES_300 = [
    ("Case 1: (4+,4+,4+)-face", lambda s, f: s.sig_is(f, "(4+,4+,4+)")),
    ("Case 2: (3,4+,4+)-face", lambda s, f: s.sig_is(f, "(3,4+,4+)")),
    ("Case 3: (3,3,4+)-face", lambda s, f: s.sig_is(f, "(3,3,4+)")),
    ("Case 4: (3,3,3)-face", lambda s, f: s.sig_is(f, "(3,3,3)")),
]


def _vertex_case(ruleset: RuleSet, d: int) -> tuple[str, Fraction | None]:
    if d < 3:
        return UNMATCHED, None
    if ruleset is RuleSet.R110:
        if d <= 6:
            return f"k={d}", Q(0)
        slack = Q(7 * d - 43, 8) if d % 2 else Q(7 * d - 48, 8)
        return "k>=7", slack
    if d <= 10:
        return f"k={d}", Q(0)
    return "k>=11", Q(0)


def _face_case(s: Structure, ruleset: RuleSet, f: int) -> tuple[str, Fraction | None]:
    k = s.g.face(f).degree
    if k >= 6:
        return "k>=6", Q(0)
    if k != 3:
        return UNMATCHED, None
    cases = _FACE_CASES_110 if ruleset is RuleSet.R110 else _FACE_CASES_300
    for label, guard in cases:
        if guard(s, f):
            if label.startswith("Case 6") and f not in s.bad_345p:
                return label, Q(1, 4)
            return label, Q(0)
    return UNMATCHED, None


def audit(g: PlaneGraph, ruleset: RuleSet | str, ledger: ChargeLedger | None = None) -> AuditReport:
    ruleset = RuleSet.parse(ruleset) if not isinstance(ruleset, RuleSet) else ruleset
    if ledger is None:
        ledger = apply_rules(g, ruleset)
    s = structure(g)
    # case analyses presuppose the class; outside it nothing is claimed
    eligible = in_class(g)
    entries = []
    for v in g.vertices:
        label, bound = _vertex_case(ruleset, s.deg[v]) if eligible else (UNMATCHED, None)
        entries.append(AuditEntry(vkey(v), label, ledger.vertex[v], bound))
    for f in g.faces:
        label, bound = _face_case(s, ruleset, f.id) if eligible else (UNMATCHED, None)
        entries.append(AuditEntry(fkey(f.id), label, ledger.face[f.id], bound))
    total = ledger.total()
    return AuditReport(
        ruleset=ruleset,
        entries=entries,
        bank=ledger.bank if ruleset is RuleSet.R110 else None,
        total=total,
        conserved=total == Q(-12),
    )
