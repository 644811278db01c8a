"""JSON wire formats: exact scalars as "p/q" strings, signatures as integer
arrays, characters/block elements as sorted entry lists.

Parsing is strict and raises ValueError with a usable message; emitted
structures round-trip through the parsers bit for bit.
"""

import json
from fractions import Fraction

from .boundary import ExtremeApproximant
from .characters import CoherentFamily, LevelCharacter
from .combinatorics import BoundaryParam, Signature
from .blocks import BlockElement


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_scalar(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"exact scalars are 'p/q' strings, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad exact scalar {s!r}: {exc}") from None


def signature_to_json(sig: Signature) -> list[int]:
    return list(sig.parts)


def signature_from_json(data) -> Signature:
    if not isinstance(data, list) or not all(isinstance(p, int) for p in data):
        raise ValueError(f"a signature is a JSON array of integers, got {data!r}")
    return Signature(tuple(data))


def character_to_json(chi: LevelCharacter) -> dict:
    entries = [
        {"sig": signature_to_json(sig), "prob": format_scalar(chi.weights[sig])}
        for sig in chi.support()
    ]
    return {"level": chi.level, "q": format_scalar(chi.q), "entries": entries}


def character_from_json(data) -> LevelCharacter:
    if not isinstance(data, dict):
        raise ValueError("a character is a JSON object")
    try:
        level = data["level"]
        q = parse_scalar(data["q"])
        entries = data["entries"]
    except KeyError as exc:
        raise ValueError(f"character is missing key {exc}") from None
    weights = {}
    for entry in entries:
        sig = signature_from_json(entry["sig"])
        weights[sig] = parse_scalar(entry["prob"])
    return LevelCharacter(level, q, weights)


def family_to_json(family: CoherentFamily) -> dict:
    return {
        "q": format_scalar(family.q),
        "levels": [character_to_json(chi) for chi in family.measures],
    }


def family_from_json(data) -> CoherentFamily:
    if not isinstance(data, dict) or "levels" not in data or "q" not in data:
        raise ValueError('a family is {"q": ..., "levels": [...]}')
    q = parse_scalar(data["q"])
    return CoherentFamily(q, tuple(character_from_json(c) for c in data["levels"]))


def theta_to_json(theta: BoundaryParam) -> dict:
    return {"head": list(theta.head), "tail": theta.tail}


def theta_from_json(data) -> BoundaryParam:
    if (
        not isinstance(data, dict)
        or not isinstance(data.get("head"), list)
        or not isinstance(data.get("tail"), int)
    ):
        raise ValueError('a boundary parameter is {"head": [...], "tail": t}')
    return BoundaryParam(tuple(data["head"]), data["tail"])


def block_to_json(x: BlockElement) -> dict:
    blocks = []
    for sig in sorted(x.blocks, key=lambda s: s.parts):
        rows = x.blocks[sig]
        blocks.append(
            {
                "sig": signature_to_json(sig),
                "matrix": [[format_scalar(v) for v in row] for row in rows],
            }
        )
    return {"level": x.level, "q": format_scalar(x.q), "blocks": blocks}


def block_from_json(data) -> BlockElement:
    if not isinstance(data, dict):
        raise ValueError("a block element is a JSON object")
    try:
        level = data["level"]
        q = parse_scalar(data["q"])
        entries = data["blocks"]
    except KeyError as exc:
        raise ValueError(f"block element is missing key {exc}") from None
    blocks = {}
    for entry in entries:
        sig = signature_from_json(entry["sig"])
        blocks[sig] = tuple(
            tuple(parse_scalar(v) for v in row) for row in entry["matrix"]
        )
    return BlockElement(level, q, blocks)


def approximant_to_json(approx: ExtremeApproximant) -> dict:
    return {
        "theta": theta_to_json(approx.theta),
        "level": approx.level,
        "truncation": approx.truncation,
        "measure": character_to_json(approx.measure),
    }


def dumps(payload) -> str:
    """Canonical rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
