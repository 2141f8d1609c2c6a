"""Line-oriented code-record files.

A record file is a sequence of blocks.  A block starts with ``[code]``,
followed by ``key = value`` lines (keys: field, group, u, v, n, k, d, flags,
tier, shorten); ``#`` starts a comment and a blank line ends a block.  GF(4)
values use the same greedy ``a^2``/``a``/``1``/``0`` alphabet as printed
tables, so rows can be transcribed verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import List, Optional, Tuple

from .fields import GF, field_make, is_prime
from .groups import AbelianGroup, parse_group
from .groupring import GroupRingElement, from_string

__all__ = ["CodeRecord", "RecordError", "parse_record_file", "format_record"]

_KNOWN_KEYS = {"field", "group", "u", "v", "n", "k", "d", "flags", "tier", "shorten"}
_TIERS = {"normal", "extended"}


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class CodeRecord:
    field: GF
    group: AbelianGroup
    u: str
    v: Optional[str]
    n: int
    k: int
    d: int
    flags: frozenset  # subset of {"R", "C"}
    tier: str = "normal"
    shorten: Tuple[int, ...] = ()
    line: int = 0  # first line of the block, for error reporting

    def generator_element(self) -> GroupRingElement:
        return from_string(self.u, self.field, self.group)

    def check_element(self) -> Optional[GroupRingElement]:
        if self.v is None:
            return None
        return from_string(self.v, self.field, self.group)

    def describe(self) -> str:
        flags = "".join(sorted(self.flags))
        tag = f"[{self.n},{self.k},{self.d}]" + (f"_{flags}" if flags else "")
        return f"{tag} GF({self.field.q}) {self.group.notation()}"


def _parse_field(text: str, where: str) -> GF:
    text = text.strip()
    if "^" in text:
        p_str, m_str = text.split("^", 1)
        p, m = int(p_str), int(m_str)
    else:
        p, m = int(text), 1
    if not is_prime(p):
        raise RecordError(f"{where}: field characteristic {p} is not prime")
    return field_make(p, m)


def parse_record_file(path) -> List[CodeRecord]:
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise RecordError(f"cannot read {path}: {exc}") from exc

    records: List[CodeRecord] = []
    block: Optional[dict] = None
    block_line = 0

    def flush():
        nonlocal block
        if block is not None:
            records.append(_build_record(block, block_line))
            block = None

    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush()
            continue
        if line == "[code]":
            flush()
            block = {}
            block_line = lineno
            continue
        if block is None:
            raise RecordError(f"{path}:{lineno}: content outside a [code] block")
        if "=" not in line:
            raise RecordError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KNOWN_KEYS:
            raise RecordError(f"{path}:{lineno}: unknown key {key!r}")
        if key in block:
            raise RecordError(f"{path}:{lineno}: duplicate key {key!r}")
        block[key] = value
    flush()
    return records


def _build_record(block: dict, lineno: int) -> CodeRecord:
    where = f"record at line {lineno}"
    for required in ("field", "group", "n", "k", "d"):
        if required not in block:
            raise RecordError(f"{where}: missing key {required!r}")
    field = _parse_field(block["field"], where)
    try:
        group = parse_group(block["group"])
    except ValueError as exc:
        raise RecordError(f"{where}: {exc}") from exc
    try:
        n, k, d = int(block["n"]), int(block["k"]), int(block["d"])
    except ValueError as exc:
        raise RecordError(f"{where}: non-integer n/k/d") from exc

    shorten: Tuple[int, ...] = ()
    if "shorten" in block:
        try:
            shorten = tuple(sorted(int(p) for p in block["shorten"].split(",")))
        except ValueError as exc:
            raise RecordError(f"{where}: bad shorten positions") from exc

    if group.order != n + len(shorten):
        raise RecordError(
            f"{where}: group order {group.order} does not match "
            f"n = {n} plus {len(shorten)} shortened positions"
        )

    flags_text = block.get("flags", "").strip()
    flags = frozenset(f.strip() for f in flags_text.split(",") if f.strip())
    if not flags <= {"R", "C"}:
        raise RecordError(f"{where}: flags must be a subset of R,C, got {flags_text!r}")

    tier = block.get("tier", "normal").strip()
    if tier not in _TIERS:
        raise RecordError(f"{where}: unknown tier {tier!r}")

    u = block.get("u")
    if u is None:
        raise RecordError(f"{where}: missing key 'u'")
    v = block.get("v")
    for name, s in (("u", u), ("v", v)):
        if s is None:
            continue
        try:
            tokens = field.tokenize(s)
        except ValueError as exc:
            raise RecordError(f"{where}: bad {name} string: {exc}") from exc
        if len(tokens) != group.order:
            raise RecordError(
                f"{where}: {name} has {len(tokens)} coefficients, "
                f"group order is {group.order}"
            )
    return CodeRecord(
        field=field,
        group=group,
        u=u,
        v=v,
        n=n,
        k=k,
        d=d,
        flags=flags,
        tier=tier,
        shorten=shorten,
        line=lineno,
    )


def format_record(rec: CodeRecord) -> str:
    field = str(rec.field.p) if rec.field.m == 1 else f"{rec.field.p}^{rec.field.m}"
    lines = [
        "[code]",
        f"field = {field}",
        f"group = {rec.group.notation()}",
        f"n = {rec.n}",
        f"k = {rec.k}",
        f"d = {rec.d}",
    ]
    if rec.flags:
        lines.append("flags = " + ",".join(sorted(rec.flags)))
    if rec.tier != "normal":
        lines.append(f"tier = {rec.tier}")
    if rec.shorten:
        lines.append("shorten = " + ",".join(str(p) for p in rec.shorten))
    lines.append(f"u = {rec.u}")
    if rec.v is not None:
        lines.append(f"v = {rec.v}")
    return "\n".join(lines) + "\n"
