"""Choice of R- and L-class representatives for the length-preserving rules.

Within a D-class all R-class representatives must be L-related, all L-class
representatives R-related, and an R-representative and an L-representative
sharing an H-class must coincide.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .green import GreenData
from .semigroup import Semigroup


class RepresentativeError(ValueError):
    pass


@dataclass(frozen=True)
class RepChoice:
    """``rrep`` maps R-class id -> element, ``lrep`` maps L-class id -> element.

    Only classes of nonzero elements carry a representative.
    """

    rrep: dict
    lrep: dict
    R: tuple
    L: tuple

    def r(self, s: int) -> int:
        return self.rrep[self.R[s]]

    def l(self, s: int) -> int:
        return self.lrep[self.L[s]]

    def is_rrep(self, s: int) -> bool:
        return self.R[s] in self.rrep and self.r(s) == s

    def is_lrep(self, s: int) -> bool:
        return self.L[s] in self.lrep and self.l(s) == s


def _d_class_layout(S: Semigroup, G: GreenData):
    """Per nonzero D-class: sorted R-class ids, sorted L-class ids, and the
    elements of each (R, L) intersection."""
    layout = {}
    for s in S.nonzero:
        d = layout.setdefault(G.D[s], {"R": set(), "L": set(), "cells": {}})
        d["R"].add(G.R[s])
        d["L"].add(G.L[s])
        d["cells"].setdefault((G.R[s], G.L[s]), []).append(s)
    for d in layout.values():
        d["R"] = sorted(d["R"])
        d["L"] = sorted(d["L"])
    return layout


def _build(G, layout, anchors, picks=None):
    rrep, lrep = {}, {}
    for dcls, d in layout.items():
        r0, l0 = anchors[dcls]
        cells = d["cells"]
        for rc in d["R"]:
            cell = cells.get((rc, l0))
            if not cell:
                raise RepresentativeError(f"R-class {rc} does not meet L-class {l0} inside its D-class")
            rrep[rc] = picks.get(("R", rc), cell[0]) if picks else cell[0]
        for lc in d["L"]:
            cell = cells.get((r0, lc))
            if not cell:
                raise RepresentativeError(f"L-class {lc} does not meet R-class {r0} inside its D-class")
            lrep[lc] = picks.get(("L", lc), cell[0]) if picks else cell[0]
        h0 = rrep[r0]
        lrep[l0] = h0
    return RepChoice(rrep, lrep, G.R, G.L)


def choose_representatives(S: Semigroup, G: GreenData) -> RepChoice:
    """Canonical choice: anchor each D-class at its lowest-numbered R- and
    L-class and take smallest element indices."""
    layout = _d_class_layout(S, G)
    anchors = {dc: (d["R"][0], d["L"][0]) for dc, d in layout.items()}
    return _build(G, layout, anchors)


def all_valid_choices(S: Semigroup, G: GreenData, limit: int = 10_000) -> Iterator[RepChoice]:
    """Every valid representative choice (anchor H-class per D-class, then
    any element of each relevant intersection), up to ``limit`` of them."""
    layout = _d_class_layout(S, G)
    per_d = []
    for dc, d in sorted(layout.items()):
        options = []
        for r0 in d["R"]:
            for l0 in d["L"]:
                slots = []
                for rc in d["R"]:
                    if rc != r0:
                        slots.append([("R", rc, x) for x in d["cells"][(rc, l0)]])
                for lc in d["L"]:
                    if lc != l0:
                        slots.append([("L", lc, x) for x in d["cells"][(r0, lc)]])
                slots.append([("H", None, x) for x in d["cells"][(r0, l0)]])
                for combo in product(*slots):
                    options.append((dc, r0, l0, combo))
        per_d.append(options)
    count = 0
    for selection in product(*per_d):
        anchors, picks = {}, {}
        for dc, r0, l0, combo in selection:
            anchors[dc] = (r0, l0)
            for kind, cls, x in combo:
                if kind == "H":
                    picks[("R", r0)] = x
                    picks[("L", l0)] = x
                else:
                    picks[(kind, cls)] = x
        yield _build(G, layout, anchors, picks)
        count += 1
        if count >= limit:
            return


def validate_representatives(S: Semigroup, G: GreenData, rc: RepChoice) -> list:
    names = S.names
    out = []
    nz = S.nonzero
    for s in nz:
        if G.R[s] not in rc.rrep:
            out.append(f"R-class of {names[s]} has no representative")
        if G.L[s] not in rc.lrep:
            out.append(f"L-class of {names[s]} has no representative")
    if out:
        return out
    for cls, rep in sorted(rc.rrep.items()):
        if G.R[rep] != cls:
            out.append(f"R-rep {names[rep]} is not in its R-class {cls}")
    for cls, rep in sorted(rc.lrep.items()):
        if G.L[rep] != cls:
            out.append(f"L-rep {names[rep]} is not in its L-class {cls}")
    rreps = sorted(set(rc.rrep.values()))
    lreps = sorted(set(rc.lrep.values()))
    for a, b in ((a, b) for i, a in enumerate(rreps) for b in rreps[i + 1:]):
        if G.D[a] == G.D[b] and G.L[a] != G.L[b]:
            out.append(f"R-reps {names[a]}, {names[b]} not L-related")
    for a, b in ((a, b) for i, a in enumerate(lreps) for b in lreps[i + 1:]):
        if G.D[a] == G.D[b] and G.R[a] != G.R[b]:
            out.append(f"L-reps {names[a]}, {names[b]} not R-related")
    for a in rreps:
        for b in lreps:
            if a != b and G.H[a] == G.H[b]:
                out.append(f"R-rep {names[a]} and L-rep {names[b]} in the same H-class but unequal")
    return out


def make_choice(S: Semigroup, G: GreenData, rmap: dict, lmap: dict) -> RepChoice:
    """Build a (possibly invalid) choice from element -> representative maps
    keyed by any class member; classes not mentioned keep the canonical rep."""
    base = choose_representatives(S, G)
    rrep, lrep = dict(base.rrep), dict(base.lrep)
    for member, rep in rmap.items():
        rrep[G.R[member]] = rep
    for member, rep in lmap.items():
        lrep[G.L[member]] = rep
    return RepChoice(rrep, lrep, G.R, G.L)


def parse_override(S: Semigroup, G: GreenData, text: str) -> RepChoice:
    """Lines ``R <member> <rep>`` / ``L <member> <rep>``; ``#`` comments."""
    rmap, lmap = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("R", "L"):
            raise RepresentativeError(f"line {lineno}: expected 'R|L <member> <rep>'")
        try:
            member, rep = S.index(parts[1]), S.index(parts[2])
        except KeyError as exc:
            raise RepresentativeError(f"line {lineno}: {exc.args[0]}") from None
        if member == S.zero or rep == S.zero:
            raise RepresentativeError(f"line {lineno}: the zero has no representative")
        (rmap if parts[0] == "R" else lmap)[member] = rep
    return make_choice(S, G, rmap, lmap)
