"""Finite lattices as immutable values.

A lattice is built once from its cover relation (Hasse diagram) and then
carries the full order matrix plus total meet/join tables. Everything
downstream (complexes, realizations, audits) works against this type.

Elements are identified by label; integer indices into ``elements`` are an
internal addressing detail. Index order is fixed by construction order and
by the ``elements`` array in the JSON form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .errors import CyclicCoversError, InvalidParamsError, NotALatticeError

__all__ = [
    "FiniteLattice",
    "LawWitness",
    "SublatticeWitness",
    "N5_TEMPLATE",
    "M3_TEMPLATE",
    "book_lattice",
    "chain_lattice",
    "book_params",
    "maximal_chains",
    "check_modular",
    "check_distributive",
    "find_forbidden_sublattice",
]


@dataclass(frozen=True)
class FiniteLattice:
    """A finite bounded lattice.

    ``leq[x][y]`` is the reflexive-transitive order relation;
    ``meet_table``/``join_table`` are total. Instances are immutable and
    hashable, so they are safe to share across threads and to use as cache
    keys. Construct via :meth:`from_covers` (which validates everything)
    rather than directly.
    """

    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @classmethod
    def from_covers(cls, labels, covers) -> "FiniteLattice":
        """Build a lattice from labels and a cover relation.

        ``covers`` is an iterable of (lower, upper) label pairs. The order is
        the reflexive-transitive closure of the covers; meet and join tables
        are found by exhaustive glb/lub search, O(n^3) overall.

        Raises ``CyclicCoversError`` if the closure is not antisymmetric and
        ``NotALatticeError`` on the first pair without a unique glb or lub.
        """
        labels = tuple(str(lab) for lab in labels)
        if not labels:
            raise InvalidParamsError("a lattice needs at least one element")
        if len(set(labels)) != len(labels):
            raise InvalidParamsError("element labels must be distinct")
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)

        leq = [[i == j for j in range(n)] for i in range(n)]
        for lo, hi in covers:
            if lo not in index or hi not in index:
                raise InvalidParamsError(f"cover ({lo!r}, {hi!r}) references an unknown label")
            if lo == hi:
                raise CyclicCoversError(f"self-cover on {lo!r}")
            leq[index[lo]][index[hi]] = True
        # Warshall closure
        for k in range(n):
            lk = leq[k]
            for i in range(n):
                if leq[i][k]:
                    li = leq[i]
                    for j in range(n):
                        if lk[j]:
                            li[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise CyclicCoversError(
                        f"covers put {labels[i]!r} and {labels[j]!r} on a cycle"
                    )

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
                glb = next((z for z in lower if all(leq[w][z] for w in lower)), None)
                if glb is None:
                    raise NotALatticeError(labels[x], labels[y], "greatest lower bound")
                upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
                lub = next((z for z in upper if all(leq[z][w] for w in upper)), None)
                if lub is None:
                    raise NotALatticeError(labels[x], labels[y], "least upper bound")
                meet[x][y] = meet[y][x] = glb
                join[x][y] = join[y][x] = lub

        bottom = reduce(lambda a, b: meet[a][b], range(n))
        top = reduce(lambda a, b: join[a][b], range(n))
        return cls(
            elements=labels,
            leq=tuple(tuple(row) for row in leq),
            meet_table=tuple(tuple(row) for row in meet),
            join_table=tuple(tuple(row) for row in join),
            bottom=bottom,
            top=top,
        )

    # -- basic queries ----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise InvalidParamsError(f"unknown element label {label!r}") from None

    def label(self, i: int) -> str:
        return self.elements[i]

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def atoms(self) -> tuple[int, ...]:
        """Elements covering bottom."""
        return tuple(x for x in range(self.size) if self._covers(self.bottom, x))

    def _covers(self, x: int, y: int) -> bool:
        if x == y or not self.leq[x][y]:
            return False
        return not any(
            z != x and z != y and self.leq[x][z] and self.leq[z][y] for z in range(self.size)
        )

    def cover_pairs(self) -> list[tuple[int, int]]:
        """The Hasse diagram as (lower, upper) index pairs, lexicographic."""
        n = self.size
        return [(x, y) for x in range(n) for y in range(n) if self._covers(x, y)]

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "covers": [[self.elements[x], self.elements[y]] for x, y in self.cover_pairs()],
        }

    @classmethod
    def from_json_dict(cls, obj) -> "FiniteLattice":
        if not isinstance(obj, dict) or "elements" not in obj or "covers" not in obj:
            raise InvalidParamsError('lattice JSON must have "elements" and "covers" keys')
        covers = [tuple(pair) for pair in obj["covers"]]
        if any(len(pair) != 2 for pair in covers):
            raise InvalidParamsError("covers must be [lower, upper] pairs")
        return cls.from_covers(obj["elements"], covers)

    def __repr__(self) -> str:
        shown = ",".join(self.elements[:8]) + ("..." if self.size > 8 else "")
        return f"FiniteLattice({self.size} elements: {shown})"


def book_lattice(d: int, n: int) -> FiniteLattice:
    """The book lattice on n + d elements: 0 < a_i < b_1 < ... < b_{d-2} < 1.

    d is the length of every maximal chain minus one (the dimension of the
    order complex), n the number of atoms (pages). d=2 gives the diamonds
    M_n; n=1 gives a chain with d+1 elements.
    """
    if d < 2 or n < 1:
        raise InvalidParamsError(f"book lattice needs d >= 2 and n >= 1, got d={d}, n={n}")
    labels = ["0"] + [f"a{i}" for i in range(1, n + 1)] + [f"b{j}" for j in range(1, d - 1)] + ["1"]
    spine = [f"b{j}" for j in range(1, d - 1)] + ["1"]
    covers = [("0", f"a{i}") for i in range(1, n + 1)]
    covers += [(f"a{i}", spine[0]) for i in range(1, n + 1)]
    covers += list(itertools.pairwise(spine))
    return FiniteLattice.from_covers(labels, covers)


def chain_lattice(k: int) -> FiniteLattice:
    """A chain with k elements, labelled 0, c1, ..., c_{k-2}, 1."""
    if k < 1:
        raise InvalidParamsError(f"chain needs at least one element, got k={k}")
    if k == 1:
        return FiniteLattice.from_covers(["0"], [])
    labels = ["0"] + [f"c{i}" for i in range(1, k - 1)] + ["1"]
    return FiniteLattice.from_covers(labels, itertools.pairwise(labels))


def book_params(L: FiniteLattice) -> tuple[int, int] | None:
    """Recognize ``L`` as a book lattice, returning (d, n), or None.

    Structural test, independent of labels: the non-atom part above the
    bottom must be a chain lying above every atom, and atoms must be
    pairwise incomparable.
    """
    n_elems = L.size
    if n_elems < 3:
        return None
    atoms = L.atoms()
    n = len(atoms)
    rest = [x for x in range(n_elems) if x != L.bottom and x not in atoms]
    d = len(rest) + 1
    if d < 2:
        return None
    for x, y in itertools.combinations(atoms, 2):
        if L.leq[x][y] or L.leq[y][x]:
            return None
    for x, y in itertools.combinations(rest, 2):
        if not (L.leq[x][y] or L.leq[y][x]):
            return None
    if any(not L.leq[a][r] for a in atoms for r in rest):
        return None
    return d, n


def maximal_chains(L: FiniteLattice) -> tuple[tuple[int, ...], ...]:
    """All maximal chains, bottom to top, as index tuples in cover order.

    In a bounded lattice the maximal chains are exactly the cover paths from
    bottom to top. Enumeration order is depth-first by index, so the result
    is deterministic.
    """
    n = L.size
    upper = [[y for y in range(n) if L._covers(x, y)] for x in range(n)]
    chains = []

    def walk(path):
        x = path[-1]
        if x == L.top:
            chains.append(tuple(path))
            return
        for y in upper[x]:
            path.append(y)
            walk(path)
            path.pop()

    walk([L.bottom])
    return tuple(chains)


# -- law checks -----------------------------------------------------------


@dataclass(frozen=True)
class LawWitness:
    """A triple violating a lattice identity.

    For the modular law the triple is (x, a, b) with x <= b and
    x v (a ^ b) != (x v a) ^ b; for the distributive law it is (x, y, z)
    with x ^ (y v z) != (x ^ y) v (x ^ z). ``lhs``/``rhs`` are the two
    differing sides.
    """

    law: str
    triple: tuple[int, int, int]
    lhs: int
    rhs: int

    def as_dict(self, L: FiniteLattice) -> dict:
        keys = ("x", "a", "b") if self.law == "modular" else ("x", "y", "z")
        out = {"law": self.law}
        out.update({k: L.elements[v] for k, v in zip(keys, self.triple)})
        out["lhs"] = L.elements[self.lhs]
        out["rhs"] = L.elements[self.rhs]
        return out


def check_modular(L: FiniteLattice) -> LawWitness | None:
    """First triple violating x <= b  =>  x v (a ^ b) = (x v a) ^ b, or None.

    The scan runs (a, b) in lexicographic index order with the constrained
    element x innermost, so witnesses are stable across runs.
    """
    n = L.size
    meet, join, leq = L.meet_table, L.join_table, L.leq
    for a in range(n):
        for b in range(n):
            ab = meet[a][b]
            for x in range(n):
                if not leq[x][b]:
                    continue
                lhs = join[x][ab]
                rhs = meet[join[x][a]][b]
                if lhs != rhs:
                    return LawWitness("modular", (x, a, b), lhs, rhs)
    return None


def check_distributive(L: FiniteLattice) -> LawWitness | None:
    """First triple violating x ^ (y v z) = (x ^ y) v (x ^ z), or None.

    Same scan convention as :func:`check_modular`: (y, z) outer, x innermost.
    """
    n = L.size
    meet, join = L.meet_table, L.join_table
    for y in range(n):
        for z in range(n):
            yz = join[y][z]
            for x in range(n):
                lhs = meet[x][yz]
                rhs = join[meet[x][y]][meet[x][z]]
                if lhs != rhs:
                    return LawWitness("distributive", (x, y, z), lhs, rhs)
    return None


N5_TEMPLATE = ("0", "a", "b", "c", "1")
M3_TEMPLATE = ("0", "a1", "a2", "a3", "1")


@dataclass(frozen=True)
class SublatticeWitness:
    """An embedding of the pentagon or the diamond into a lattice.

    ``images`` lists the images of the template elements in template order
    (N5: 0, a, b, c, 1 with 0<a<1 and 0<b<c<1; M3: bottom, three atoms,
    top). The map is injective and preserves meet and join, i.e. the image
    is a subuniverse.
    """

    kind: str
    images: tuple[int, int, int, int, int]

    def template(self) -> tuple[str, ...]:
        return N5_TEMPLATE if self.kind == "N5" else M3_TEMPLATE

    def as_dict(self, L: FiniteLattice) -> dict:
        return {
            "kind": self.kind,
            "images": {t: L.elements[i] for t, i in zip(self.template(), self.images)},
        }


def find_forbidden_sublattice(L: FiniteLattice, kind: str) -> SublatticeWitness | None:
    """Search for an N5 (pentagon) or M3 (diamond) sublattice.

    Exhaustive over candidate 5-element subuniverses, pruned to the interval
    between the candidate bottom and top. Scan order is lexicographic in
    (bottom, top, middle elements), so the first witness is deterministic.
    """
    if kind not in ("N5", "M3"):
        raise InvalidParamsError(f"kind must be 'N5' or 'M3', got {kind!r}")
    n = L.size
    meet, join, leq = L.meet_table, L.join_table, L.leq
    for z in range(n):
        for t in range(n):
            if z == t or not leq[z][t]:
                continue
            middle = [m for m in range(n) if m != z and m != t and leq[z][m] and leq[m][t]]
            if len(middle) < 3:
                continue
            if kind == "M3":
                for p, q, r in itertools.combinations(middle, 3):
                    if (
                        meet[p][q] == z
                        and meet[p][r] == z
                        and meet[q][r] == z
                        and join[p][q] == t
                        and join[p][r] == t
                        and join[q][r] == t
                    ):
                        return SublatticeWitness("M3", (z, p, q, r, t))
            else:
                for a in middle:
                    for b in middle:
                        if b == a or meet[a][b] != z or join[a][b] != t:
                            continue
                        for c in middle:
                            if (
                                c != b
                                and c != a
                                and leq[b][c]
                                and meet[a][c] == z
                                and join[a][c] == t
                            ):
                                return SublatticeWitness("N5", (z, a, b, c, t))
    return None
