"""Sparse arithmetic for the Highwater algebra and its finite periodic quotients.

The algebra lives on an infinite basis: one idempotent a_i per integer i and
one distance element s_j per integer j >= 1 (s_0 is identically zero).  All
elements here are finitely supported, so products stay finitely supported and
everything is exact.  Reflections of the index line, the baric weight, the
ideal-type tuple predicate and a window-bounded ideal membership oracle round
out the surface; quotients by the translation ideals become ordinary Algebra
instances with their axes and fusion law attached.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .errors import ConsistencyFailure, DegenerateParameters, InvalidField, Unsupported
from .fields import QQ, FieldSpec, rational
from .fusion import law_M
from .linalg import Matrix, Subspace


class HighwaterElement:
    """Finitely supported element: maps a-indices and s-indices to scalars."""

    __slots__ = ("field", "a", "s")

    def __init__(self, field: FieldSpec, a=None, s=None):
        self.field = field
        aa: Dict[int, object] = {}
        ss: Dict[int, object] = {}
        for i, c in (a or {}).items():
            c = field.coerce(c)
            if c != field.zero():
                aa[int(i)] = c
        for j, c in (s or {}).items():
            j = int(j)
            if j < 0:
                raise InvalidField(f"negative distance index s_{j}")
            c = field.coerce(c)
            if j == 0 or c == field.zero():
                continue  # s_0 = 0 by convention
            ss[j] = c
        self.a = aa
        self.s = ss

    @classmethod
    def zero(cls, field: FieldSpec) -> "HighwaterElement":
        return cls(field)

    def is_zero(self) -> bool:
        return not self.a and not self.s

    def __eq__(self, other):
        if not isinstance(other, HighwaterElement):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.s == other.s

    def __hash__(self):
        return hash((tuple(sorted(self.a.items(), key=lambda kv: kv[0])),
                     tuple(sorted(self.s.items(), key=lambda kv: kv[0]))))

    def __add__(self, other: "HighwaterElement") -> "HighwaterElement":
        a = dict(self.a)
        s = dict(self.s)
        for i, c in other.a.items():
            a[i] = a.get(i, self.field.zero()) + c
        for j, c in other.s.items():
            s[j] = s.get(j, self.field.zero()) + c
        return HighwaterElement(self.field, a, s)

    def __sub__(self, other: "HighwaterElement") -> "HighwaterElement":
        return self + other.scale(-1)

    def scale(self, c) -> "HighwaterElement":
        c = self.field.coerce(c)
        return HighwaterElement(
            self.field,
            {i: c * v for i, v in self.a.items()},
            {j: c * v for j, v in self.s.items()},
        )

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for i in sorted(self.a):
            bits.append(f"{self.field.fmt(self.a[i])}*a{i}")
        for j in sorted(self.s):
            bits.append(f"{self.field.fmt(self.s[j])}*s{j}")
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "a": {str(i): self.field.fmt(c) for i, c in sorted(self.a.items())},
            "s": {str(j): self.field.fmt(c) for j, c in sorted(self.s.items())},
        }

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> "HighwaterElement":
        a = {int(k): field.parse(v) for k, v in (obj.get("a") or {}).items()}
        s = {int(k): field.parse(v) for k, v in (obj.get("s") or {}).items()}
        return cls(field, a, s)


def hw_a(i: int, field: FieldSpec = QQ) -> HighwaterElement:
    return HighwaterElement(field, {int(i): 1})


def hw_s(j: int, field: FieldSpec = QQ) -> HighwaterElement:
    return HighwaterElement(field, s={int(j): 1})


def _require_odd_char(field: FieldSpec, what: str):
    if field.characteristic == 2:
        raise Unsupported(f"{what} needs 2 invertible; characteristic 2 is refused")


def hw_mul(x: HighwaterElement, y: HighwaterElement) -> HighwaterElement:
    """Bilinear product from the three basis rules, with s_0 dropped.

    a_i a_j = (a_i + a_j)/2 + s_|i-j|
    a_i s_j = -(3/4) a_i + (3/8)(a_{i-j} + a_{i+j}) + (3/2) s_j
    s_j s_k = (3/4)(s_j + s_k) - (3/8)(s_|j-k| + s_{j+k})
    """
    field = x.field
    if field != y.field:
        raise InvalidField("mixed fields in product")
    _require_odd_char(field, "the product")
    half = field.parse("1/2")
    q34 = field.parse("3/4")
    q38 = field.parse("3/8")
    q32 = field.parse("3/2")
    zero = field.zero()
    a: Dict[int, object] = {}
    s: Dict[int, object] = {}

    def add_a(i, c):
        a[i] = a.get(i, zero) + c

    def add_s(j, c):
        if j != 0:
            s[j] = s.get(j, zero) + c

    for i, ci in x.a.items():
        for j, cj in y.a.items():
            c = ci * cj
            add_a(i, c * half)
            add_a(j, c * half)
            add_s(abs(i - j), c)
    for xa, xs in ((x.a, y.s), (y.a, x.s)):
        for i, ci in xa.items():
            for j, cj in xs.items():
                c = ci * cj
                add_a(i, -(c * q34))
                add_a(i - j, c * q38)
                add_a(i + j, c * q38)
                add_s(j, c * q32)
    for j, cj in x.s.items():
        for k, ck in y.s.items():
            c = cj * ck
            add_s(j, c * q34)
            add_s(k, c * q34)
            add_s(abs(j - k), -(c * q38))
            add_s(j + k, -(c * q38))
    return HighwaterElement(field, a, s)


def hw_reflect(x: HighwaterElement, center) -> HighwaterElement:
    """Index reflection a_j -> a_{2c-j}, s_j fixed; c must be a half-integer."""
    c2 = rational(2) * rational(center) if not isinstance(center, int) else 2 * center
    if rational(c2).denominator != 1:
        raise DegenerateParameters(f"reflection center {center} is not a half-integer")
    c2 = int(c2)
    return HighwaterElement(x.field, {c2 - j: c for j, c in x.a.items()}, dict(x.s))


def hw_baric(x: HighwaterElement):
    """Weight of x under the homomorphism sending every a_i to 1, every s_j to 0."""
    w = x.field.zero()
    for c in x.a.values():
        w = w + c
    return w


@dataclass(frozen=True)
class IdealTypeInfo:
    """Verdict on a coefficient tuple (alpha_0, ..., alpha_D).

    epsilons lists the signs e for which alpha_i = e * alpha_{D-i} holds
    throughout.  divergent_readings marks tuples accepted here that a strict
    palindrome-only reading of the symmetry condition would reject.
    """

    ok: bool
    epsilons: Tuple[int, ...]
    divergent_readings: bool


def ideal_type_info(t: Sequence, field: FieldSpec = QQ) -> IdealTypeInfo:
    vals = [field.coerce(field.parse(v) if isinstance(v, str) else v) for v in t]
    if not vals:
        return IdealTypeInfo(False, (), False)
    D = len(vals) - 1
    zero = field.zero()
    ends_ok = vals[0] != zero and vals[D] != zero
    total = zero
    for v in vals:
        total = total + v
    epsilons = tuple(
        e for e in (1, -1)
        if all(vals[i] == vals[D - i] * field.from_int(e) for i in range(D + 1))
    )
    ok = ends_ok and total == zero and bool(epsilons)
    return IdealTypeInfo(ok, epsilons, ok and 1 not in epsilons)


def is_ideal_type(t: Sequence, field: FieldSpec = QQ) -> bool:
    return ideal_type_info(t, field).ok


def hw_periodic_quotient(D: int, field: FieldSpec = QQ) -> Algebra:
    """Finite quotient identifying a_i with a_{i+D}, on D axes and floor(D/2)
    distance elements.

    Every structure constant is recomputed along several lifts of each basis
    element and the reductions must agree; a mismatch means the quotient is
    not well defined and raises ConsistencyFailure.
    """
    if D < 2:
        raise DegenerateParameters(f"period {D} is below 2")
    _require_odd_char(field, "the quotient")
    ns = D // 2
    n = D + ns
    basis = [f"a{i}" for i in range(D)] + [f"s{j}" for j in range(1, ns + 1)]
    zero = field.zero()

    def reduce_elem(x: HighwaterElement):
        vec = [zero] * n
        for i, c in x.a.items():
            vec[i % D] = vec[i % D] + c
        for j, c in x.s.items():
            r = j % D
            r = min(r, D - r)
            if r:
                k = D + r - 1
                vec[k] = vec[k] + c
        return tuple(vec)

    def lifts(k: int) -> List[HighwaterElement]:
        if k < D:
            return [hw_a(k, field), hw_a(k + D, field), hw_a(k - D, field)]
        j = k - D + 1
        out = [hw_s(j, field), hw_s(j + D, field)]
        if D - j != j:
            out.append(hw_s(D - j, field))
        return out

    products = {}
    for p in range(n):
        for q in range(p, n):
            seen = None
            for xl in lifts(p):
                for yl in lifts(q):
                    got = reduce_elem(hw_mul(xl, yl))
                    if seen is None:
                        seen = got
                    elif got != seen:
                        raise ConsistencyFailure(
                            f"period-{D} quotient: product of basis {p},{q} "
                            f"differs between lifts"
                        )
            products[(p, q)] = seen

    axes = []
    for i in range(D):
        v = [zero] * n
        v[i] = field.one()
        axes.append((f"a{i}", tuple(v)))
    # Frobenius form induced by the baric weight: (x, y) = w(x) w(y)
    one = field.one()
    wt = [one] * D + [zero] * ns
    gram = Matrix(field, [[wt[i] * wt[j] for j in range(n)] for i in range(n)])
    try:
        law = law_M(field, field.from_int(2), field.parse("1/2"))
    except DegenerateParameters:
        law = None  # char 3 folds 2 onto 1/2; quotient still exists, law does not
    return Algebra(field, basis, products, axes=axes, law=law, form=gram)


def hw_quotient_weights(alg: Algebra) -> Tuple:
    """Baric weights (1 on every a-basis element, 0 on every s) for a quotient."""
    one = alg.field.one()
    zero = alg.field.zero()
    return tuple(one if name.startswith("a") else zero for name in alg.basis)


def _window_coords(x: HighwaterElement, window: int, m: int):
    vec = [x.field.zero()] * m
    for i, c in x.a.items():
        if abs(i) > window:
            return None
        vec[i + window] = c
    for j, c in x.s.items():
        if j > 2 * window:
            return None
        vec[2 * window + j] = c
    return tuple(vec)


def hw_ideal_window_contains(
    t: Sequence,
    v: HighwaterElement,
    window: Optional[int] = None,
    rounds: int = 10,
    field: FieldSpec = QQ,
) -> str:
    """Window-bounded membership in the ideal generated by sum(alpha_i a_i).

    Grows a subspace of the ideal by translating the generator, multiplying
    by axes a_k with |k| <= window and reflecting, always discarding anything
    supported outside the window.  Returns "yes" when v lies in the grown
    span; otherwise "unknown" (the span is a lower bound on the ideal, so a
    miss proves nothing).
    """
    info = ideal_type_info(t, field)
    if not info.ok:
        raise DegenerateParameters("coefficient tuple is not of ideal type")
    vals = [field.coerce(field.parse(c) if isinstance(c, str) else c) for c in t]
    D = len(vals) - 1
    w = window if window is not None else 3 * D
    if v.a:
        w = max(w, max(abs(i) for i in v.a))
    if v.s:
        w = max(w, (max(v.s) + 1) // 2)
    m = 2 * w + 1 + 2 * w  # a_{-w}..a_w then s_1..s_{2w}

    span = Subspace.zero(field, m)
    frontier: List[HighwaterElement] = []

    def offer(x: HighwaterElement):
        nonlocal span
        vec = _window_coords(x, w, m)
        if vec is None or span.contains(vec):
            return
        span = span.sum(Subspace.from_vectors(field, m, [vec]))
        frontier.append(x)

    gen = HighwaterElement(field, {i: vals[i] for i in range(D + 1)})
    for shift in range(-w, w + 1):
        offer(HighwaterElement(field, {i + shift: c for i, c in gen.a.items()}))

    target = _window_coords(v, w, m)
    for _ in range(max(0, rounds)):
        if target is not None and span.contains(target):
            break
        batch, frontier = frontier, []
        if not batch:
            break
        for x in batch:
            for k in range(-w, w + 1):
                offer(hw_mul(x, hw_a(k, field)))
            for c2 in range(-2 * w, 2 * w + 1):
                offer(hw_reflect(x, rational(c2, 2)))
    if target is not None and span.contains(target):
        return "yes"
    return "unknown"
