"""Shipped example algebras, as algebra-file texts."""
from __future__ import annotations

from .algebra import PathAlgebra

FIXTURE_TEXTS = {
    # linear quiver 1 -> 2 -> 3, no relations (hereditary)
    "A3": """\
vertices 1 2 3
arrow x: 1 -> 2
arrow y: 2 -> 3
""",
    # 1 -a-> 2 -b-> 3 <-c- 4 modulo ab; exactly one side is (2,2)
    "ex57": """\
vertices 1 2 3 4
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 4 -> 3
relation a*b
""",
    # five vertices, ab = 0; fd profile [1, 1, 2] on both sides
    "ex572": """\
vertices 1 2 3 4 5
arrow c: 1 -> 3
arrow a: 2 -> 3
arrow d: 3 -> 4
arrow b: 3 -> 5
relation a*b
""",
    # k[x]/(x^2)
    "loop": """\
vertices 1
arrow x: 1 -> 1
relation x*x
""",
    # cyclic Nakayama algebra with two vertices and rad^2 = 0 (self-injective)
    "nakayama": """\
vertices 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
relation a*b
relation b*a
""",
    # k x k x k
    "semisimple": """\
vertices 1 2 3
""",
}

FIXTURE_NAMES = list(FIXTURE_TEXTS)


def fixture(name: str, p: int = 101) -> PathAlgebra:
    """Build a shipped fixture algebra over F_p."""
    from .formats import parse_algebra

    if name not in FIXTURE_TEXTS:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    return parse_algebra(FIXTURE_TEXTS[name], p=p, name=name).build()
