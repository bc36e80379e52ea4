"""Stable text and JSON records for verdicts, classifications and harness reports.

Text records are single ``key=value`` lines (RefutedUpTo adds one ``witness``
line per threshold). JSON records are emitted with sorted keys.
"""

from __future__ import annotations

import json
from typing import Any

from .archipelago import InKernel, KernelUnknown, KernelVerdict, RefutedUpTo
from .families import HarnessReport, PairRecord
from .transfinite import HEClassification, Member, MembershipUnknown, NotMember
from .word_dsl import format_word

__all__ = [
    "verdict_to_text",
    "verdict_to_dict",
    "classification_to_text",
    "classification_to_dict",
    "pair_to_text",
    "pair_to_dict",
    "harness_summary_text",
    "harness_summary_dict",
    "dumps_json",
]


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def verdict_to_text(v: KernelVerdict) -> str:
    if isinstance(v, InKernel):
        return f"verdict=InKernel N={v.N} depth={v.verified_depth}"
    if isinstance(v, RefutedUpTo):
        lines = [f"verdict=RefutedUpTo N_max={v.N_max} depth={v.depth}"]
        for N, wit in sorted(v.witnesses.items()):
            lines.append(f"witness N={N} level={wit.level} word={format_word(wit.word)}")
        return "\n".join(lines)
    if isinstance(v, KernelUnknown):
        return f"verdict=Unknown N_max={v.N_max} depth={v.depth} reason={v.reason}"
    raise TypeError(v)


def verdict_to_dict(v: KernelVerdict) -> dict[str, Any]:
    if isinstance(v, InKernel):
        return {"kind": v.kind, "N": v.N, "depth": v.verified_depth}
    if isinstance(v, RefutedUpTo):
        return {
            "kind": v.kind,
            "N_max": v.N_max,
            "depth": v.depth,
            "witnesses": [
                {"N": N, "level": w.level, "word": format_word(w.word)} for N, w in sorted(v.witnesses.items())
            ],
        }
    if isinstance(v, KernelUnknown):
        return {"kind": v.kind, "N_max": v.N_max, "depth": v.depth, "reason": v.reason}
    raise TypeError(v)


def classification_to_text(c: HEClassification) -> str:
    if isinstance(c, Member):
        bounds = ",".join(f"{i}:{m}" for i, m in sorted(c.bounds.items()))
        return f"classification=Member verified_depth={c.verified_depth} bounds={bounds}"
    if isinstance(c, NotMember):
        samples = ",".join(f"{n}:{k}" for n, k in c.growth_samples)
        return f"classification=NotMember witness=x{c.witness_index} samples={samples}"
    if isinstance(c, MembershipUnknown):
        return f"classification=Unknown verified_depth={c.verified_depth}"
    raise TypeError(c)


def classification_to_dict(c: HEClassification) -> dict[str, Any]:
    if isinstance(c, Member):
        return {
            "kind": c.kind,
            "verified_depth": c.verified_depth,
            "bounds": [[i, m] for i, m in sorted(c.bounds.items())],
        }
    if isinstance(c, NotMember):
        return {"kind": c.kind, "witness_index": c.witness_index, "growth_samples": [list(s) for s in c.growth_samples]}
    if isinstance(c, MembershipUnknown):
        return {"kind": c.kind, "verified_depth": c.verified_depth}
    raise TypeError(c)


def pair_to_text(p: PairRecord) -> str:
    levels = ",".join("-" if lv is None else str(lv) for lv in p.levels)
    return f"pair a={p.a} b={p.b} separated={'yes' if p.separated else 'no'} levels={levels}"


def pair_to_dict(p: PairRecord) -> dict[str, Any]:
    return {"record": "pair", "a": p.a, "b": p.b, "separated": p.separated, "levels": list(p.levels)}


def harness_summary_text(r: HarnessReport) -> str:
    line = (
        f"harness size={r.size} pairs={len(r.pairs)} N_max={r.N_max} depth={r.depth} "
        f"unseparated={len(r.unseparated)} max_level={r.max_level}"
    )
    if r.unseparated:
        line += f"\nnote: {len(r.unseparated)} pair(s) not separated within depth {r.depth}; not evidence of equality"
    return line


def harness_summary_dict(r: HarnessReport) -> dict[str, Any]:
    return {
        "record": "summary",
        "size": r.size,
        "pairs": len(r.pairs),
        "N_max": r.N_max,
        "depth": r.depth,
        "unseparated": len(r.unseparated),
        "max_level": r.max_level,
    }
