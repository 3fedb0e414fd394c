"""Small named semigroups used by the tests, the benchmark and the CLI corpus."""
from __future__ import annotations

from itertools import product

from .semigroup import Semigroup, from_table


def _build(names, mul):
    idx = {nm: i for i, nm in enumerate(names)}
    return from_table(names, [[idx[mul(x, y)] for y in names] for x in names])


def left_zero(k: int) -> Semigroup:
    return _build("abcdefgh"[:k], lambda x, y: x)


def right_zero(k: int) -> Semigroup:
    return _build("abcdefgh"[:k], lambda x, y: y)


def chain(k: int) -> Semigroup:
    """Chain semilattice c0 < c1 < ... with product min; c0 is the zero."""
    names = [f"c{i}" for i in range(k)]
    return from_table(names, [[min(i, j) for j in range(k)] for i in range(k)])


def cyclic(k: int) -> Semigroup:
    names = ["e", "g"] + [f"g{i}" for i in range(2, k)]
    return from_table(names, [[(i + j) % k for j in range(k)] for i in range(k)])


def nilpotent3() -> Semigroup:
    # a, a^2, z with a^3 = z
    return from_table(["a", "a2", "z"], [[1, 2, 2], [2, 2, 2], [2, 2, 2]])


def brandt2() -> Semigroup:
    units = [(i, j) for i, j in product((1, 2), repeat=2)]
    names = [f"e{i}{j}" for i, j in units] + ["z"]

    def mul(x, y):
        if x == "z" or y == "z" or x[2] != y[1]:
            return "z"
        return f"e{x[1]}{y[2]}"

    return _build(names, mul)


def rectangular_band(m: int, k: int) -> Semigroup:
    names = [f"a{i}{j}" for i in range(1, m + 1) for j in range(1, k + 1)]
    return _build(names, lambda x, y: f"a{x[1]}{y[2]}")


def adjoin_identity(S: Semigroup, name="one") -> Semigroup:
    n = S.order
    table = [list(row) + [i] for i, row in enumerate(S.table)] + [list(range(n + 1))]
    return from_table(list(S.names) + [name], table)


def direct_product(S: Semigroup, T: Semigroup) -> Semigroup:
    names = [f"{x}_{y}" for y in T.names for x in S.names]
    n, m = S.order, T.order
    table = [[S.table[i % n][j % n] + n * T.table[i // n][j // n] for j in range(n * m)]
             for i in range(n * m)]
    return from_table(names, table)


def free_semilattice2(with_zero=True) -> Semigroup:
    """{a, b, ab}, by default with a separate zero z adjoined.

    Without z the meet ab is itself the zero, and the order above the
    remaining elements is trivially a forest.
    """
    names = ["a", "b", "ab"] + (["z"] if with_zero else [])

    def mul(x, y):
        if "z" in (x, y):
            return "z"
        return x if x == y else "ab"

    return _build(names, mul)


def left_zero_nil() -> Semigroup:
    """Left-zero {a, b} with u below both on the R side, u*u = z."""
    names = ["a", "b", "u", "z"]

    def mul(x, y):
        if x == "z" or y == "z":
            return "z"
        if x == "u":
            return "z" if y == "u" else "u"
        return "u" if y == "u" else x

    return _build(names, mul)


UNAMBIGUOUS = {
    "lz2": lambda: left_zero(2),
    "lz3": lambda: left_zero(3),
    "rz2": lambda: right_zero(2),
    "chain2": lambda: chain(2),
    "chain3": lambda: chain(3),
    "chain4": lambda: chain(4),
    "chain5": lambda: chain(5),
    "z2": lambda: cyclic(2),
    "z3": lambda: cyclic(3),
    "z4": lambda: cyclic(4),
    "n3": nilpotent3,
    "b2": brandt2,
    "rb22": lambda: rectangular_band(2, 2),
    "lz2one": lambda: adjoin_identity(left_zero(2)),
    "rb22one": lambda: adjoin_identity(rectangular_band(2, 2)),
}

CONTROLS = {
    "sl3": free_semilattice2,
    "lz2nil": left_zero_nil,
}

# too large for the exhaustive length-5 sweeps; used by the representative probe
EXTRA = {
    "rb22c2": lambda: direct_product(rectangular_band(2, 2), chain(2)),
}

CORPUS = {**UNAMBIGUOUS, **CONTROLS, **EXTRA}


def cyclic_invalid_choice(S, G):
    """Representatives on rb22c2 whose r/l maps cycle through all four cells
    of each layer (invalid: the H-class rule fails)."""
    from .representatives import make_choice
    ix = S.index
    rmap, lmap = {}, {}
    for h in ("c0", "c1"):
        rmap[ix(f"a11_{h}")] = ix(f"a12_{h}")
        rmap[ix(f"a21_{h}")] = ix(f"a21_{h}")
        lmap[ix(f"a11_{h}")] = ix(f"a11_{h}")
        lmap[ix(f"a12_{h}")] = ix(f"a22_{h}")
    return make_choice(S, G, rmap, lmap)


def load(name: str) -> Semigroup:
    try:
        return CORPUS[name]()
    except KeyError:
        raise KeyError(f"unknown corpus member {name!r}; known: {', '.join(CORPUS)}") from None


def write_files(directory) -> list:
    """Write every member as ``<name>.sgp`` into ``directory``."""
    from pathlib import Path
    out = []
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name in CORPUS:
        path = d / f"{name}.sgp"
        path.write_text(f"# {name}\n" + load(name).to_text(), encoding="utf-8")
        out.append(path)
    return out


if __name__ == "__main__":
    import sys
    for p in write_files(sys.argv[1] if len(sys.argv) > 1 else "corpus"):
        print(p)
