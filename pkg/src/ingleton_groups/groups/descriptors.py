"""Text descriptors for groups and generator lists.

Grammar: ``sym:N``, ``alt:N``, ``cyc:N``, ``dih:N`` (N elements),
``gl:N:Q``, ``pgl:N:Q``, ``perm:D:(cycles);(cycles);...`` and products
``A*B`` of any of these.
"""

from __future__ import annotations

from ..errors import GroupError
from ..ffield import field_of_order
from .core import (
    Group,
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    general_linear_group,
    permutation_group,
    projective_linear_group,
    symmetric_group,
)


def _int(s: str, what: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise GroupError(f"bad {what} {s!r}") from None


def parse_group(desc: str) -> Group:
    desc = desc.strip()
    if "*" in desc:
        return direct_product(*[parse_group(p) for p in desc.split("*")])
    kind, _, rest = desc.partition(":")
    if kind == "sym":
        return symmetric_group(_int(rest, "degree"))
    if kind == "alt":
        return alternating_group(_int(rest, "degree"))
    if kind == "cyc":
        return cyclic_group(_int(rest, "order"))
    if kind == "dih":
        return dihedral_group(_int(rest, "order"))
    if kind in ("gl", "pgl"):
        n, _, q = rest.partition(":")
        f = field_of_order(_int(q, "field order"))
        make = general_linear_group if kind == "gl" else projective_linear_group
        return make(_int(n, "dimension"), f)
    if kind == "perm":
        d, _, gens = rest.partition(":")
        deg = _int(d, "degree")
        G = permutation_group(deg, [g for g in gens.split(";") if g.strip()] or ["()"])
        G.label = desc
        return G
    raise GroupError(f"unknown group descriptor {desc!r}")


def _wrapped(text: str) -> bool:
    """Is the whole text one bracketed list ``[...]``?"""
    if not (text.startswith("[") and text.endswith("]")):
        return False
    depth = 0
    for i, ch in enumerate(text):
        depth += ch in "[({"
        depth -= ch in "])}"
        if depth == 0 and i < len(text) - 1:
            return False
    return True


def parse_generators(G: Group, text: str) -> list:
    """A ``;``-separated element list, optionally wrapped as ``[g1;g2]``.
    ``[]`` or empty means no generators."""
    text = text.strip()
    if text in ("", "[]"):
        return []
    if _wrapped(text):
        try:
            return _parse_list(G, text[1:-1])
        except GroupError:
            pass  # a single bare matrix such as [[1,0],[0,1]]
    return _parse_list(G, text)


def _parse_list(G: Group, text: str) -> list:
    out = []
    for part in _split_top(text):
        g = G.parse(part)
        if g not in G:
            raise GroupError(f"{part} is not an element of {G.label}")
        out.append(g)
    return out


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[({":
            depth += 1
        elif ch in "])}":
            depth -= 1
        if ch == ";" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def format_generators(G: Group, gens) -> str:
    return "[" + ";".join(G.fmt(g) for g in gens) + "]"
