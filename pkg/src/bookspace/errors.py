"""Exception types shared across the package.

Two broad families matter for the CLI exit-code contract: parameter and
input-format problems (usage, exit 2) versus mathematically invalid data
(exit 1). ``InvalidParamsError`` belongs to the first family; everything
else here to the second.
"""


class BookspaceError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParamsError(BookspaceError):
    """Parameters outside an operation's domain (bad d/n, malformed input)."""


class CyclicCoversError(BookspaceError):
    """The transitive closure of the cover relation is not antisymmetric."""


class NotALatticeError(BookspaceError):
    """Some pair of elements lacks a unique meet or join."""

    def __init__(self, x, y, which):
        self.pair = (x, y)
        self.which = which
        super().__init__(f"no unique {which} for elements {x!r} and {y!r}")


class NotPureError(BookspaceError):
    """Ridge analysis was requested on a complex with unequal facet sizes."""

    def __init__(self, sizes):
        self.sizes = tuple(sizes)
        super().__init__(f"complex is not pure: facet sizes {sorted(self.sizes)}")


class NotAdmissibleError(BookspaceError):
    """A function on the lattice has a level set that is not a principal ideal."""

    def __init__(self, level, detail=""):
        self.level = level
        msg = f"not admissible: level set at s={level} is not a principal ideal"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class LatticeMismatchError(BookspaceError):
    """Two realization points belong to different lattices."""


class UnsupportedDimensionError(BookspaceError):
    """OFF export is only defined for two-dimensional book complexes."""
