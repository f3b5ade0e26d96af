"""Named groups and the built-in test corpus."""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Callable

from .groups import (
    DEFAULT_SIZE_CAP,
    Group,
    GroupError,
    build_alternating,
    build_cyclic,
    build_dicyclic,
    build_dihedral,
    build_extraspecial,
    build_frobenius,
    build_psl27,
    build_quaternion,
    build_symmetric,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
)

CORPUS_VERSION = "builtin-1"


def _named(name: str, size_cap: int = DEFAULT_SIZE_CAP) -> Callable[[], Group] | None:
    table = {
        "Q8": build_quaternion,
        "PSL27": build_psl27,
        "PSL(2,7)": build_psl27,
        "F20": lambda: build_frobenius(5, 4),
        "F21": lambda: build_frobenius(7, 3),
        "E27": lambda: build_extraspecial(3),
        "E125": lambda: build_extraspecial(5),
    }
    if name.upper() in table:
        return table[name.upper()]
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if not m:
        return None
    fam, k = m.group(1).upper(), int(m.group(2))
    builders = {
        "Z": lambda k: build_cyclic(k, size_cap),
        "C": lambda k: build_cyclic(k, size_cap),
        "D": lambda k: build_dihedral(k, size_cap),
        "S": build_symmetric,
        "A": build_alternating,
        "DIC": lambda k: build_dicyclic(k // 4, size_cap),
    }
    if fam in builders:
        return lambda: builders[fam](k)
    return None


def parse_group_spec(spec: str, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    """Build a group from a short spec.

    Accepted forms: names such as ``S3``, ``A5``, ``Q8``, ``D18`` (order 18),
    ``Z12``, ``F21``, ``E27``, ``PSL27``; ``family:args`` such as
    ``cyclic:6``, ``dihedral:18``, ``frobenius:7,3``, ``extraspecial:3``,
    ``perm:(1 2 3),(1 2)``, ``file:path.json``; and products joined by
    ``x`` as in ``Z3xZ3`` or ``S3xS3``.
    """
    spec = spec.strip()
    if ":" in spec:
        fam, _, arg = spec.partition(":")
        fam = fam.lower()
        if fam == "perm":
            return from_permutation_generators(_split_perms(arg), size_cap=size_cap)
        if fam == "file":
            return from_cayley_table(json.loads(Path(arg).read_text()), size_cap=size_cap)
        nums = [int(t) for t in arg.split(",") if t.strip()]
        fams = {
            "cyclic": lambda n: build_cyclic(n, size_cap),
            "dihedral": lambda n: build_dihedral(n, size_cap),
            "extraspecial": lambda p: build_extraspecial(p, size_cap),
            "frobenius": lambda p, q: build_frobenius(p, q, size_cap),
            "symmetric": build_symmetric,
            "alternating": build_alternating,
            "dicyclic": lambda m: build_dicyclic(m, size_cap),
        }
        if fam not in fams:
            raise GroupError(f"unknown group family {fam!r}")
        return fams[fam](*nums)
    builder = _named(spec, size_cap)
    if builder is not None:
        return builder()
    parts = re.split(r"(?<=\d)[xX×](?=[A-Za-z])", spec)
    if len(parts) > 1:
        g = parse_group_spec(parts[0], size_cap)
        for p in parts[1:]:
            g = direct_product(g, parse_group_spec(p, size_cap), size_cap)
        return g
    raise GroupError(f"cannot parse group spec {spec!r}")


def _split_perms(text: str) -> list[str]:
    """Split ``"(1 2 3 4 5),(1 2 3)"`` on the commas outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        depth += (ch == "(") - (ch == ")")
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return [p for p in out if p]


def builtin_corpus() -> list[str]:
    """Group specs of the built-in corpus, in a fixed order."""
    return (
        [f"Z{n}" for n in range(1, 25)]
        + [f"D{2 * m}" for m in range(2, 16)]
        + ["Q8", "S3", "S4", "A4", "A5", "F20", "F21", "E27", "Z3xZ3", "S3xS3"]
    )
