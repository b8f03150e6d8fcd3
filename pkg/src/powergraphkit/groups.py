"""Finite group builders and cached cyclic-subgroup structure.

Groups are represented on element indices 0..n-1 with the identity always at
index 0. Element orders and cyclic subgroups (as index bitmasks) are computed
once at construction; instances are immutable afterwards and safe to share.

Families provided: the additive cyclic group mod n, direct products of
cyclic groups, the multiplicative units mod n, and the quadratic residues
mod n.
"""

import itertools
import math
from dataclasses import dataclass

from . import numtheory
from .errors import CapExceeded, GroupAxiomError, SpecParseError

DEFAULT_ORDER_CAP = 5000

# Exhaustive axiom checks are cubic/quadratic, so they only run automatically
# on small groups; FiniteGroup.validate() runs them on demand for any size.
_AUTO_AXIOM_CAP = 200
_AUTO_ASSOC_CAP = 32

_FAMILIES = ("zn", "prod", "un", "qn")


@dataclass(frozen=True)
class GroupSpec:
    """Parsed form of a group spec string such as ``zn:18`` or ``prod:2x6``."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise SpecParseError(f"unknown group family {self.family!r}")
        if not self.params:
            raise SpecParseError(f"group family {self.family!r} needs parameters")
        if any(p < 1 for p in self.params):
            raise SpecParseError(f"group parameters must be >= 1, got {self.params}")
        if self.family != "prod" and len(self.params) != 1:
            raise SpecParseError(
                f"family {self.family!r} takes exactly one parameter, got {self.params}"
            )

    def __str__(self) -> str:
        if self.family == "prod":
            return "prod:" + "x".join(str(p) for p in self.params)
        return f"{self.family}:{self.params[0]}"

    @staticmethod
    def parse(text: str) -> "GroupSpec":
        head, sep, tail = text.partition(":")
        if not sep:
            raise SpecParseError(f"group spec {text!r} is missing ':'")
        family = head.strip()
        if family not in _FAMILIES:
            raise SpecParseError(f"unknown group family token {family!r} in {text!r}")
        raw = tail.split("x") if family == "prod" else [tail]
        params = []
        for token in raw:
            token = token.strip()
            try:
                params.append(int(token))
            except ValueError:
                raise SpecParseError(
                    f"invalid integer token {token!r} in group spec {text!r}"
                ) from None
        return GroupSpec(family, tuple(params))


class FiniteGroup:
    """Enumerated finite group with cached orders and cyclic subgroups.

    `labels[i]` is the display form of element i (an int residue or a tuple),
    `compose` is the group law on indices, and `subgroup_masks[i]` is the
    bitmask of the cyclic subgroup generated by element i.
    """

    __slots__ = (
        "order",
        "label",
        "labels",
        "element_orders",
        "subgroup_masks",
        "is_abelian",
        "_compose",
    )

    def __init__(
        self,
        labels: list,
        compose,
        label: str,
        *,
        abelian: bool | None = None,
        order_cap: int | None = DEFAULT_ORDER_CAP,
    ):
        n = len(labels)
        if n == 0:
            raise ValueError("a group needs at least the identity element")
        if order_cap is not None and n > order_cap:
            raise CapExceeded(f"group {label!r} has order {n} > cap {order_cap}")
        self.order = n
        self.label = label
        self.labels = list(labels)
        self._compose = compose

        orders = [0] * n
        masks = [0] * n
        for x in range(n):
            mask = 1
            size = 1
            y = x
            while y != 0:
                mask |= 1 << y
                size += 1
                y = compose(y, x)
                if size > n + 1:
                    raise GroupAxiomError(
                        f"element {x} of {label!r} does not generate a subgroup"
                    )
            orders[x] = size
            masks[x] = mask
        self.element_orders = orders
        self.subgroup_masks = masks

        if abelian is None:
            abelian = all(
                compose(i, j) == compose(j, i)
                for i in range(n)
                for j in range(i + 1, n)
            )
        self.is_abelian = abelian

        if n <= _AUTO_AXIOM_CAP:
            self.validate(associativity=(n <= _AUTO_ASSOC_CAP))

    # -- group law ---------------------------------------------------------

    def compose(self, i: int, j: int) -> int:
        return self._compose(i, j)

    def validate(self, *, associativity: bool = True) -> None:
        """Exhaustively check identity, closure, inverses, Lagrange and the
        cached orders and subgroups; optionally full associativity (cubic)."""
        n = self.order
        compose = self._compose
        for x in range(n):
            if compose(0, x) != x or compose(x, 0) != x:
                raise GroupAxiomError(f"index 0 is not an identity in {self.label!r}")
        for x in range(n):
            row = set()
            inverse_found = False
            for y in range(n):
                z = compose(x, y)
                if not 0 <= z < n:
                    raise GroupAxiomError(f"composition left the index range in {self.label!r}")
                row.add(z)
                if z == 0:
                    inverse_found = True
            if len(row) != n:
                raise GroupAxiomError(f"row {x} of {self.label!r} is not a permutation")
            if not inverse_found:
                raise GroupAxiomError(f"element {x} of {self.label!r} has no inverse")
        if associativity:
            for a in range(n):
                for b in range(n):
                    ab = compose(a, b)
                    for c in range(n):
                        if compose(ab, c) != compose(a, compose(b, c)):
                            raise GroupAxiomError(
                                f"associativity fails at ({a},{b},{c}) in {self.label!r}"
                            )
        for x in range(n):
            if n % self.element_orders[x] != 0:
                raise GroupAxiomError(
                    f"order of element {x} does not divide |G| in {self.label!r}"
                )
            if self.subgroup_masks[x].bit_count() != self.element_orders[x]:
                raise GroupAxiomError(f"cached subgroup of {x} is inconsistent")
        if self.is_abelian and any(
            compose(i, j) != compose(j, i) for i in range(n) for j in range(i + 1, n)
        ):
            raise GroupAxiomError(f"{self.label!r} is marked abelian but is not")

    # -- cyclic subgroup structure ------------------------------------------

    def cyclic_subgroup(self, x: int) -> tuple[int, ...]:
        """The subgroup generated by x, as a sorted tuple of element indices."""
        return tuple(_iter_bits(self.subgroup_masks[x]))

    def subgroup_leq(self, x: int, y: int) -> bool:
        """True iff <x> is contained in <y> (equivalently x lies in <y>)."""
        return bool((self.subgroup_masks[y] >> x) & 1)

    def same_cyclic_subgroup(self, x: int, y: int) -> bool:
        return self.subgroup_masks[x] == self.subgroup_masks[y]

    def center(self) -> tuple[int, ...]:
        """Elements commuting with the whole group."""
        if self.is_abelian:
            return tuple(range(self.order))
        n = self.order
        compose = self._compose
        return tuple(
            g
            for g in range(n)
            if all(compose(g, h) == compose(h, g) for h in range(n))
        )

    def is_cyclic(self) -> bool:
        return max(self.element_orders) == self.order

    def order_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_orders))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- builders ---------------------------------------------------------------


def build_cyclic(n: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Additive group of integers mod n; element i has order n / gcd(n, i)."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    return FiniteGroup(
        list(range(n)),
        lambda i, j: (i + j) % n,
        f"zn:{n}",
        abelian=True,
        order_cap=order_cap,
    )


def build_product(ns, order_cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Direct product of cyclic groups, componentwise addition.

    Elements are indexed mixed-radix over `ns`, so the all-zeros identity
    sits at index 0 and labels are coordinate tuples.
    """
    ns = tuple(int(k) for k in ns)
    if not ns or any(k < 1 for k in ns):
        raise ValueError(f"product components must be positive, got {ns}")
    total = math.prod(ns)
    if order_cap is not None and total > order_cap:
        raise CapExceeded(f"product group order {total} > cap {order_cap}")
    labels = list(itertools.product(*(range(k) for k in ns)))
    index = {t: i for i, t in enumerate(labels)}

    def compose(i: int, j: int) -> int:
        a = labels[i]
        b = labels[j]
        return index[tuple((x + y) % m for x, y, m in zip(a, b, ns))]

    return FiniteGroup(
        labels,
        compose,
        "prod:" + "x".join(str(k) for k in ns),
        abelian=True,
        order_cap=order_cap,
    )


def build_units(n: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Multiplicative group of units mod n; the residue 1 maps to index 0."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if order_cap is not None and numtheory.totient(n) > order_cap:
        raise CapExceeded(f"unit group of {n} has order {numtheory.totient(n)} > cap {order_cap}")
    if n == 1:
        return FiniteGroup([0], lambda i, j: 0, "un:1", abelian=True, order_cap=order_cap)
    residues = [k for k in range(1, n) if math.gcd(k, n) == 1]
    return _multiplicative_group(residues, n, f"un:{n}", order_cap)


def build_quadratic_residues(n: int, order_cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Subgroup of squares inside the unit group mod n."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if order_cap is not None and numtheory.totient(n) > order_cap:
        raise CapExceeded(f"unit group of {n} has order {numtheory.totient(n)} > cap {order_cap}")
    if n == 1:
        return FiniteGroup([0], lambda i, j: 0, "qn:1", abelian=True, order_cap=order_cap)
    squares = sorted({k * k % n for k in range(1, n) if math.gcd(k, n) == 1})
    return _multiplicative_group(squares, n, f"qn:{n}", order_cap)


def _multiplicative_group(residues: list[int], n: int, label: str, order_cap) -> FiniteGroup:
    # residues are sorted ascending and contain 1, so the identity is index 0
    index = {r: i for i, r in enumerate(residues)}

    def compose(i: int, j: int) -> int:
        return index[residues[i] * residues[j] % n]

    return FiniteGroup(residues, compose, label, abelian=True, order_cap=order_cap)


def build_group(spec, order_cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a GroupSpec or a spec string."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    if spec.family == "zn":
        return build_cyclic(spec.params[0], order_cap)
    if spec.family == "prod":
        return build_product(spec.params, order_cap)
    if spec.family == "un":
        return build_units(spec.params[0], order_cap)
    if spec.family == "qn":
        return build_quadratic_residues(spec.params[0], order_cap)
    raise SpecParseError(f"unknown group family {spec.family!r}")


# -- module-level forms of the relational operations -------------------------


def cyclic_subgroup(group: FiniteGroup, x: int) -> tuple[int, ...]:
    return group.cyclic_subgroup(x)


def subgroup_leq(group: FiniteGroup, x: int, y: int) -> bool:
    return group.subgroup_leq(x, y)


def same_cyclic_subgroup(group: FiniteGroup, x: int, y: int) -> bool:
    return group.same_cyclic_subgroup(x, y)


def group_center(group: FiniteGroup) -> tuple[int, ...]:
    return group.center()


def abelian_order_multiset(group: FiniteGroup) -> tuple[int, ...]:
    """Multiset of element orders; a complete isomorphism invariant for
    finite abelian groups, which is the only context it may be used in."""
    if not group.is_abelian:
        raise ValueError(
            f"order multisets classify abelian groups only; {group.label!r} is not abelian"
        )
    return group.order_multiset()
