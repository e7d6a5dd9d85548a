"""JSON and DOT serialization of enhanced cover classes."""
from __future__ import annotations

import json

from ..perms import SignSplitting
from .covers import BLUE, LEFT, RED, RIGHT
from .enumerate import CoverClass, class_from_records, class_records

FORMATS = ("json", "dot")


def cover_to_dict(cls: CoverClass) -> dict:
    records = class_records(cls)
    pair_ids: dict[tuple, int] = {}
    edges = []
    for s, t, w, letter, dot in records:
        pid = None
        if dot:
            pid = pair_ids.setdefault((s, t, w), len(pair_ids))
        edges.append({
            "from": "-inf" if s == LEFT else s,
            "to": "+inf" if t == RIGHT else t,
            "weight": w,
            "colour": {"R": RED, "U": BLUE}.get(letter) if not dot else None,
            "dotted_pair": pid,
        })
    return {
        "degree": cls.cover.degree,
        "genus": cls.cover.genus,
        "pairs": [list(p) for p in cls.cover.pairs],
        "edges": edges,
        "splitting": str(cls.splitting),
    }


def cover_from_dict(data: dict) -> CoverClass:
    n = 2 * len(data["pairs"])
    records = []
    for e in data["edges"]:
        s = LEFT if e["from"] == "-inf" else int(e["from"])
        t = RIGHT if e["to"] == "+inf" else int(e["to"])
        w = int(e["weight"])
        if e.get("dotted_pair") is not None:
            records.append((s, t, w, "D", 1))
        elif w % 2:
            records.append((s, t, w, "B", 0))
        else:
            colour = e.get("colour")
            if colour not in (RED, BLUE):
                raise ValueError(f"even edge {e} needs a colour")
            records.append((s, t, w, "R" if colour == RED else "U", 0))
    return class_from_records(n, records, SignSplitting.parse(data["splitting"]))


def to_dot(cls: CoverClass, name: str = "cover") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=point];"]
    n = cls.cover.n_vertices
    for v in range(n):
        lines.append(f'  v{v} [shape=circle, label="{v}", width=0.2];')
    if n > 1:
        chain = " -> ".join(f"v{v}" for v in range(n))
        lines.append(f"  {chain} [style=invis, weight=100];")
    for i, (s, t, w, letter, dot) in enumerate(class_records(cls)):
        src = f"v{s}" if s != LEFT else f"left{i}"
        dst = f"v{t}" if t != RIGHT else f"right{i}"
        if s == LEFT:
            lines.append(f"  left{i};")
        if t == RIGHT:
            lines.append(f"  right{i};")
        attrs = [f'label="{w}"', f"weight={w}"]
        if dot:
            attrs.append("style=dotted")
        colour = {"R": "red", "U": "blue"}.get(letter)
        attrs.append(f"color={colour or 'black'}")
        lines.append(f"  {src} -> {dst} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_cover(cls: CoverClass, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(cover_to_dict(cls), indent=2) + "\n").encode()
    if fmt == "dot":
        return to_dot(cls).encode()
    raise ValueError(f"unknown export format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse_cover(data: bytes | str) -> CoverClass:
    """Inverse of the JSON export."""
    if isinstance(data, bytes):
        data = data.decode()
    return cover_from_dict(json.loads(data))
