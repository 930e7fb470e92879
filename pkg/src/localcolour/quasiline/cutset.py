"""Combining colourings of two graphs that overlap in a clique."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..errors import ColouringError, StructureError
from .graphs import is_clique, permutation_onto


def paste_on_clique_cutset(
    c1: Mapping[int, int],
    c2: Mapping[int, int],
    cut: Iterable[int],
    adj: Mapping[int, set[int]] | None = None,
) -> dict[int, int]:
    """Rename the colours of ``c2`` to agree with ``c1`` on ``cut`` and merge.

    The palette is ``1..max(colours of c1, colours of c2)``.  When ``adj`` is
    given, ``cut`` is checked to be a clique of it.
    """
    cut = list(cut)
    if adj is not None and not is_clique(adj, cut):
        raise StructureError("cutset is not a clique")
    for name, c in (("first", c1), ("second", c2)):
        missing = [v for v in cut if v not in c]
        if missing:
            raise StructureError(f"cut vertex {missing[0]} is not coloured in the {name} colouring")
        if len({c[v] for v in cut}) != len(cut):
            raise ColouringError(f"the {name} colouring repeats a colour on the cut clique")
    top = max(list(c1.values()) + list(c2.values()), default=0)
    perm = permutation_onto(c2, {c2[v]: c1[v] for v in cut}, range(1, top + 1))
    out = dict(c1)
    for v, col in c2.items():
        out[v] = perm[col]
    return out
