"""Fusion laws: eigenvalue sets with a star table, and their C2 gradings.

A law is a tuple of distinct scalars (1 always present, listed first) plus a
table mapping each index pair to the set of allowed product eigenvalue
indices.  The three catalog laws:

    A          1*1={1}  1*0={}  0*0={0}
    J(eta)     adds eta: 1*eta={eta}, 0*eta={eta}, eta*eta={1,0}
    M(a,b)     adds b:   a*a={1,0}, a*b={b}, b*b={1,0,a}
"""

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional, Tuple

from .errors import AxialError, DegenerateParameters, InvalidGrading
from .fields import FieldSpec

Table = Tuple[Tuple[frozenset, ...], ...]


@dataclass(frozen=True)
class FusionLaw:
    field: FieldSpec
    elements: tuple
    table: Table
    name: str

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise DegenerateParameters(f"law elements must be distinct: {self.name}")
        if self.field.one() not in self.elements:
            raise AxialError("a fusion law must contain the eigenvalue 1")

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, value) -> Optional[int]:
        value = self.field.coerce(value)
        for i, x in enumerate(self.elements):
            if x == value:
                return i
        return None

    @property
    def one_index(self) -> int:
        return self.index_of(self.field.one())

    @property
    def zero_index(self) -> Optional[int]:
        return self.index_of(self.field.zero())

    def star(self, i: int, j: int) -> frozenset:
        return self.table[i][j]


def _sc(field: FieldSpec, x):
    return field.parse(x) if isinstance(x, str) else field.coerce(x)


def _build(field, elements, cells, name) -> FusionLaw:
    n = len(elements)
    table = [[frozenset() for _ in range(n)] for _ in range(n)]
    for (i, j), targets in cells.items():
        table[i][j] = frozenset(targets)
        table[j][i] = frozenset(targets)
    return FusionLaw(field, tuple(elements), tuple(tuple(row) for row in table), name)


def law_A(field: FieldSpec) -> FusionLaw:
    one, zero = field.one(), field.zero()
    return _build(field, (one, zero), {(0, 0): {0}, (0, 1): set(), (1, 1): {1}}, "A")


def law_J(field: FieldSpec, eta) -> FusionLaw:
    eta = _sc(field, eta)
    one, zero = field.one(), field.zero()
    if eta == zero or eta == one:
        raise DegenerateParameters(f"eta must avoid {{0,1}}, got {field.fmt(eta)}")
    cells = {
        (0, 0): {0},
        (0, 1): set(),
        (0, 2): {2},
        (1, 1): {1},
        (1, 2): {2},
        (2, 2): {0, 1},
    }
    return _build(field, (one, zero, eta), cells, f"J({field.fmt(eta)})")


def law_M(field: FieldSpec, alpha, beta) -> FusionLaw:
    alpha, beta = _sc(field, alpha), _sc(field, beta)
    one, zero = field.one(), field.zero()
    if len({one, zero, alpha, beta}) != 4:
        raise DegenerateParameters(
            f"1, 0, {field.fmt(alpha)}, {field.fmt(beta)} must be pairwise distinct"
        )
    cells = {
        (0, 0): {0},
        (0, 1): set(),
        (0, 2): {2},
        (0, 3): {3},
        (1, 1): {1},
        (1, 2): {2},
        (1, 3): {3},
        (2, 2): {0, 1},
        (2, 3): {3},
        (3, 3): {0, 1, 2},
    }
    name = f"M({field.fmt(alpha)},{field.fmt(beta)})"
    return _build(field, (one, zero, alpha, beta), cells, name)


def is_symmetric(law: FusionLaw) -> bool:
    n = law.size
    return all(law.table[i][j] == law.table[j][i] for i in range(n) for j in range(n))


def is_seress(law: FusionLaw) -> bool:
    z = law.zero_index
    if z is None:
        return False
    return all(law.table[z][k] <= {k} for k in range(law.size))


@dataclass(frozen=True)
class Grading:
    """C2 sign map on law elements: +1 to the plus part, -1 to the minus part."""

    signs: Tuple[int, ...]

    @property
    def is_adequate(self) -> bool:
        return -1 in self.signs

    @property
    def minus_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.signs) if s < 0)

    @property
    def plus_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.signs) if s > 0)

    def is_valid_for(self, law: FusionLaw) -> bool:
        if len(self.signs) != law.size:
            return False
        s = self.signs
        n = law.size
        return all(
            s[k] == s[i] * s[j]
            for i in range(n)
            for j in range(n)
            for k in law.table[i][j]
        )


def find_c2_gradings(law: FusionLaw) -> Tuple[Grading, ...]:
    """All C2 gradings, trivial one first; sign-swapped twins are deduplicated
    keeping the representative with 1 in the plus part."""
    valid = []
    for signs in iproduct((1, -1), repeat=law.size):
        g = Grading(signs)
        if g.is_valid_for(law):
            valid.append(signs)
    valid_set = set(valid)
    one_idx = law.one_index
    kept = []
    for signs in valid:
        negated = tuple(-s for s in signs)
        if negated in valid_set and signs[one_idx] < 0:
            continue
        kept.append(Grading(signs))
    kept.sort(key=lambda g: tuple(0 if s > 0 else 1 for s in g.signs))
    return tuple(kept)


def unique_adequate_grading(law: FusionLaw) -> Optional[Grading]:
    """The single adequate C2 grading when there is exactly one; None when there
    is none; InvalidGrading when several exist and the choice is ambiguous."""
    adequate = [g for g in find_c2_gradings(law) if g.is_adequate]
    if not adequate:
        return None
    if len(adequate) > 1:
        raise InvalidGrading(f"{law.name} has {len(adequate)} adequate C2 gradings")
    return adequate[0]


def law_to_obj(law: FusionLaw) -> dict:
    field = law.field
    if law.name == "A":
        return {"kind": "A"}
    if law.name.startswith("J("):
        return {"kind": "J", "eta": field.fmt(law.elements[2])}
    if law.name.startswith("M("):
        return {
            "kind": "M",
            "alpha": field.fmt(law.elements[2]),
            "beta": field.fmt(law.elements[3]),
        }
    raise AxialError(f"law {law.name} has no JSON form")


def law_from_obj(field: FieldSpec, obj) -> FusionLaw:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise AxialError(f"bad law object {obj!r}")
    kind = obj["kind"]
    if kind == "A":
        return law_A(field)
    if kind == "J":
        return law_J(field, field.parse(obj["eta"]))
    if kind == "M":
        return law_M(field, field.parse(obj["alpha"]), field.parse(obj["beta"]))
    raise AxialError(f"unknown law kind {kind!r}")
