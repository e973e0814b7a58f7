"""Permutations as image tuples on {0..n-1}, cycle notation, Dimino closure.

Composition is left-to-right: mul(p, q) applies p first, then q, so
conjugation a^b = mul(mul(inverse(b), a), b).
"""

import os
from typing import Iterable, Sequence, Tuple

from .errors import GroupCapExceeded, InvalidGroup

Perm = Tuple[int, ...]

DEFAULT_GROUP_CAP = 1_000_000


def group_cap(override=None) -> int:
    if override is not None:
        return override
    env = os.environ.get("AXIAL_CAP")
    return int(env) if env else DEFAULT_GROUP_CAP


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    """x -> q(p(x))."""
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conjugate(a: Perm, b: Perm) -> Perm:
    """a^b = b^-1 a b."""
    return mul(mul(inverse(b), a), b)


def perm_order(p: Perm) -> int:
    n = len(p)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length > 1:
            # lcm accumulate
            a, b = order, length
            while b:
                a, b = b, a % b
            order = order * length // a
    return order


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like "(1 2)(3 4)"; "()" is the identity."""
    s = text.strip()
    images = list(range(degree))
    if s in ("", "()"):
        return tuple(images)
    if not (s.startswith("(") and s.endswith(")")):
        raise InvalidGroup(f"bad cycle notation {text!r}")
    for chunk in s[1:-1].split(")("):
        pts = [tok for tok in chunk.replace(",", " ").split() if tok]
        try:
            cyc = [int(tok) - 1 for tok in pts]
        except ValueError:
            raise InvalidGroup(f"bad cycle notation {text!r}") from None
        if len(cyc) < 2 or len(set(cyc)) != len(cyc):
            raise InvalidGroup(f"bad cycle {chunk!r} in {text!r}")
        for x in cyc:
            if not 0 <= x < degree:
                raise InvalidGroup(f"point {x + 1} out of range 1..{degree}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if images[a] != a:
                raise InvalidGroup(f"point {a + 1} repeated across cycles in {text!r}")
            images[a] = b
    return tuple(images)


def format_cycles(p: Perm) -> str:
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def dimino(degree: int, generators: Iterable[Perm], cap=None) -> Tuple[Perm, ...]:
    """All elements of <generators>, deterministically ordered (Dimino's algorithm)."""
    limit = group_cap(cap)
    e = identity_perm(degree)
    gens = []
    for g in generators:
        if g != e and g not in gens:
            gens.append(tuple(g))
    elements = [e]
    index = {e: 0}

    def push(x):
        if len(elements) >= limit:
            raise GroupCapExceeded(f"group enumeration exceeded cap {limit}")
        index[x] = len(elements)
        elements.append(x)

    for i, s in enumerate(gens):
        if s in index:
            continue
        prev = elements[:]  # the subgroup generated so far
        push(s)
        for h in prev[1:]:
            x = mul(h, s)
            if x not in index:
                push(x)
        reps = [s]
        qi = 0
        while qi < len(reps):
            r = reps[qi]
            qi += 1
            for g in gens[: i + 1]:
                t = mul(r, g)
                if t not in index:
                    push(t)
                    reps.append(t)
                    for h in prev[1:]:
                        x = mul(h, t)
                        if x not in index:
                            push(x)
    return tuple(elements)


def orbits_of(perms: Sequence[Perm], n: int) -> Tuple[Tuple[int, ...], ...]:
    """Orbit partition of {0..n-1} under the listed permutations (union-find)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(n):
            a, b = find(i), find(p[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(groups[r]) for r in sorted(groups))
