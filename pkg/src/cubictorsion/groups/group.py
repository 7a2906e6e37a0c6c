"""Finite group containers.

MatrixGroup is the workhorse: a subgroup of GL_2(Z/nZ) stored as a sorted
tuple of matrix tuples.  FiniteGroup covers abstract groups (anything with
hashable elements and a multiplication callable); the structural predicates
in s3.py accept either kind.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

from cubictorsion.groups.matrices import (
    IDENTITY,
    Mat,
    gens_to_wire,
    is_invertible,
    mmul,
    mreduce,
    parse_gens,
)

GROUP_ORDER_LIMIT = 10 ** 6


def close_elements(generators: Sequence[Mat], n: int,
                   limit: int = GROUP_ORDER_LIMIT) -> tuple[Mat, ...]:
    """Subgroup of GL_2(Z/nZ) generated by `generators`, as a sorted tuple.

    Plain BFS over right multiplication.  Raises on non-invertible input and
    when the closure exceeds `limit` elements.
    """
    gens = []
    for g in generators:
        g = mreduce(g, n)
        if not is_invertible(g, n):
            raise ValueError("not a unit determinant")
        gens.append(g)
    seen = {IDENTITY if n > 1 else (0, 0, 0, 0)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mmul(x, g, n)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise ValueError(f"group closure exceeds {limit} elements")
        frontier = nxt
    return tuple(sorted(seen))


class MatrixGroup:
    """A subgroup of GL_2(Z/nZ) with its full element list."""

    __slots__ = ("n", "generators", "elements", "_member")

    def __init__(self, n: int, generators: Iterable[Mat]):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = n
        self.generators = tuple(mreduce(g, n) for g in generators)
        self.elements = close_elements(self.generators, n)
        self._member = frozenset(self.elements)

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[Mat],
                      generators: Iterable[Mat] | None = None) -> "MatrixGroup":
        """Wrap a known-closed element set without re-running the closure.

        The element set must already be a subgroup; generators default to
        the full element list.
        """
        obj = object.__new__(cls)
        obj.n = n
        elems = tuple(sorted(mreduce(e, n) for e in elements))
        obj.elements = elems
        obj._member = frozenset(elems)
        obj.generators = tuple(generators) if generators is not None else elems
        return obj

    @classmethod
    def full(cls, n: int) -> "MatrixGroup":
        from cubictorsion.groups.ambient import ambient
        amb = ambient(n)
        gens = [amb.tuple_of(g) for g in amb.generators]
        return cls.from_elements(n, amb.tuples_of(range(amb.size)), gens)

    @classmethod
    def from_gens_string(cls, text: str, n: int) -> "MatrixGroup":
        return cls(n, parse_gens(text, n))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Mat:
        return IDENTITY if self.n > 1 else (0, 0, 0, 0)

    def __contains__(self, m) -> bool:
        return mreduce(tuple(m), self.n) in self._member

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixGroup) and self.n == other.n
                and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash((self.n, self.elements))

    def __repr__(self) -> str:
        return f"MatrixGroup(n={self.n}, order={self.order})"

    def mul(self, x: Mat, y: Mat) -> Mat:
        return mmul(x, y, self.n)

    def subgroup(self, elements: Iterable[Mat]) -> "MatrixGroup":
        sub = MatrixGroup.from_elements(self.n, elements)
        if not all(e in self._member for e in sub.elements):
            raise ValueError("not a subset of the parent group")
        return sub

    def reduce_mod(self, m: int) -> "MatrixGroup":
        """Image of the group under reduction mod m, for m | n."""
        if m < 1 or self.n % m != 0:
            raise ValueError("target modulus must divide n")
        elems = {mreduce(e, m) for e in self.elements}
        gens = [mreduce(g, m) for g in self.generators]
        return MatrixGroup.from_elements(m, elems, gens)

    def gens_wire(self) -> str:
        return gens_to_wire(self.generators)

    def to_json(self) -> dict:
        return {
            "modulus": self.n,
            "generators": [list(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MatrixGroup":
        n = int(data["modulus"])
        gens = data["generators"]
        if isinstance(gens, str):
            return cls.from_gens_string(gens, n)
        return cls(n, [tuple(int(x) for x in g) for g in gens])


class FiniteGroup:
    """An abstract finite group given by its elements and multiplication."""

    __slots__ = ("elements", "_mul", "identity", "_member", "name")

    def __init__(self, elements: Iterable[Hashable], mul: Callable,
                 identity: Hashable, name: str = ""):
        self.elements = tuple(sorted(elements))
        self._mul = mul
        self.identity = identity
        self._member = frozenset(self.elements)
        self.name = name
        if identity not in self._member:
            raise ValueError("identity not among the elements")

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, x, y):
        return self._mul(x, y)

    def __contains__(self, x) -> bool:
        return x in self._member

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"{label}(order={self.order})"

    def subgroup(self, elements: Iterable[Hashable]) -> "FiniteGroup":
        elems = tuple(sorted(set(elements)))
        if not all(e in self._member for e in elems):
            raise ValueError("not a subset of the parent group")
        return FiniteGroup(elems, self._mul, self.identity, name=self.name)


def symmetric_group_3() -> FiniteGroup:
    """S_3 as permutation tuples p with p[i] = image of i."""
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]

    def mul(p, q):
        # (p * q)(i) = p(q(i)): apply q first
        return (p[q[0]], p[q[1]], p[q[2]])

    return FiniteGroup(perms, mul, (0, 1, 2), name="S3")


def direct_product(g1, g2, name: str = "") -> FiniteGroup:
    """Direct product of two groups (either kind), as a FiniteGroup over
    element pairs."""
    elems = [(a, b) for a in g1.elements for b in g2.elements]

    def mul(x, y):
        return (g1.mul(x[0], y[0]), g2.mul(x[1], y[1]))

    ident = (g1.identity, g2.identity)
    return FiniteGroup(elems, mul, ident, name=name or "product")


def is_normal(group, sub) -> bool:
    """True iff `sub` is a normal subgroup of `group` (checked on
    generator conjugates; both arguments of either group kind)."""
    members = frozenset(sub.elements)
    gens = getattr(group, "generators", None) or group.elements
    sub_gens = getattr(sub, "generators", None) or sub.elements
    mul = group.mul
    for g in gens:
        # find g^-1 by exhaustion; group orders here are small
        ginv = next(h for h in group.elements
                    if mul(g, h) == group.identity)
        for x in sub_gens:
            if mul(mul(g, x), ginv) not in members:
                return False
    return True


def quotient_group(group, normal_sub, name: str = "") -> FiniteGroup:
    """The quotient of `group` by a normal subgroup, as a FiniteGroup whose
    elements are canonical coset representatives (minimum element of each
    coset)."""
    mul = group.mul
    members = list(normal_sub.elements)
    rep_of: dict = {}
    reps = []
    for g in group.elements:
        if g in rep_of:
            continue
        coset = sorted(mul(g, x) for x in members)
        rep = coset[0]
        reps.append(rep)
        for y in coset:
            rep_of[y] = rep

    def qmul(a, b):
        return rep_of[mul(a, b)]

    return FiniteGroup(reps, qmul, rep_of[group.identity],
                       name=name or "quotient")
