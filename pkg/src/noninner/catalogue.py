"""Built-in group catalogue with stable names."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Builtin, Cyclic, DirectProduct, GroupError, Permutation, Semidirect


def _heis(u="u", v="v", w="w"):
    # exponent-3 extraspecial group: w v w^-1 = u v, u central
    return Semidirect(DirectProduct((Cyclic(3, u), Cyclic(3, v))), Cyclic(3, w), ((u, f"{u}*{v}"),))


def _modular27(u="u", w="w"):
    return Semidirect(Cyclic(9, u), Cyclic(3, w), ((f"{u}^4",),))


def _d4(r="r", s="s"):
    return Semidirect(Cyclic(4, r), Cyclic(2, s), ((f"{r}^3",),))


# Names the example generators x..d: a, z span the abelian factor C3 x C9,
# y, b the normal C9 x C3, and t the acting C3.  Then x = t*z, c = z^3,
# d = y^-3 satisfy every listed relator.
PAPER_ACTION = ("y^7*b^2", "y^3*b")  # t y t^-1 = y^-2 b^-1, t b t^-1 = y^3 b


def paper_shape(action=PAPER_ACTION):
    """(C3 x C9) x ((C9 x C3) : C3) with the given action of ``t``."""
    kernel = Semidirect(DirectProduct((Cyclic(9, "y"), Cyclic(3, "b"))), Cyclic(3, "t"), (tuple(action),))
    return DirectProduct((Cyclic(3, "a"), Cyclic(9, "z"), kernel))


PAPER_WORDS = {"x": "t*z", "y": "y", "z": "z", "a": "a", "b": "b", "c": "z^3", "d": "y^-3"}


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    order: int
    spec: object
    applicable: bool
    prime: int
    h_order: int | None = None
    k_order: int | None = None


CATALOGUE: tuple[CatalogueEntry, ...] = (
    CatalogueEntry("D4", 8, _d4(), False, 2),
    CatalogueEntry("Q8", 8, Permutation(8, ("(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"), ("i", "j")),
                   False, 2),
    CatalogueEntry("C2xD4", 16, DirectProduct((Cyclic(2, "a"), Builtin("D4"))), True, 2, 2, 8),
    CatalogueEntry("C2xQ8", 16, DirectProduct((Cyclic(2, "a"), Builtin("Q8"))), True, 2, 2, 8),
    CatalogueEntry("heisenberg27", 27, _heis(), False, 3),
    CatalogueEntry("modular27", 27, _modular27(), False, 3),
    CatalogueEntry("C4xD4", 32, DirectProduct((Cyclic(4, "a"), Builtin("D4"))), True, 2, 4, 8),
    CatalogueEntry("C2xC2xD4", 32, DirectProduct((Cyclic(2, "a"), Cyclic(2, "b"), Builtin("D4"))),
                   True, 2, 2, 16),
    CatalogueEntry("C3xHeis27", 81, DirectProduct((Cyclic(3, "a"), Builtin("heisenberg27"))), True, 3, 3, 27),
    CatalogueEntry("C3xmodular27", 81, DirectProduct((Cyclic(3, "a"), Builtin("modular27"))), True, 3, 3, 27),
    CatalogueEntry("C9xHeis27", 243, DirectProduct((Cyclic(9, "a"), Builtin("heisenberg27"))), True, 3, 9, 27),
    CatalogueEntry("C3xHeis27xHeis27", 2187,
                   DirectProduct((Cyclic(3, "a"), _heis(), _heis("u2", "v2", "w2"))), True, 3, 3, 729),
    CatalogueEntry("paper3_7", 2187, paper_shape(), True, 3, 3, 729),
)

_BY_NAME = {e.name: e for e in CATALOGUE}


def catalogue_names() -> list[str]:
    return [e.name for e in CATALOGUE]


def builtin_spec(name: str):
    try:
        return _BY_NAME[name].spec
    except KeyError:
        raise GroupError(f"unknown builtin group {name!r}; known: {', '.join(_BY_NAME)}") from None


def entry(name: str) -> CatalogueEntry:
    builtin_spec(name)
    return _BY_NAME[name]
