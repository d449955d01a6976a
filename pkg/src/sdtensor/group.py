"""The semi-dihedral group SD_{8n} = <a, b | a^(4n) = b^2 = 1, bab = a^(2n-1)>.

Elements are kept in the normal form b^s a^r with s in {0, 1} and
0 <= r < 4n, which is unique.  All operations are pure functions taking the
group parameter n explicitly; values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, order=True)
class SDElement:
    """Group element b^s a^r.  Ordering is lexicographic on (s, r)."""

    s: int
    r: int

    def __repr__(self):
        return f"SDElement({self.s}, {self.r})"


@dataclass(frozen=True)
class ConjClassReport:
    """Conjugacy classes, each as (representative, sorted members)."""

    n: int
    classes: tuple[tuple[SDElement, tuple[SDElement, ...]], ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> tuple[SDElement, ...]:
        return tuple(rep for rep, _ in self.classes)


def check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"group parameter n must be an integer >= 2, got {n}")


def check_element(n: int, g: SDElement) -> None:
    if g.s not in (0, 1) or not 0 <= g.r < 4 * n:
        raise ValueError(f"{g} is not a valid element of SD_{8 * n}")


def identity() -> SDElement:
    return SDElement(0, 0)


def elements(n: int) -> tuple[SDElement, ...]:
    """All 8n elements, rotations first, in (s, r) order."""
    check_n(n)
    return tuple(SDElement(s, r) for s in (0, 1) for r in range(4 * n))


def multiply(n: int, g: SDElement, h: SDElement) -> SDElement:
    """Normal-form product.

    Pushing a^r past b uses a^k b = b a^((2n-1)k), so
    (b^s1 a^r1)(b^s2 a^r2) = b^(s1 xor s2) a^((2n-1)^s2 * r1 + r2).
    """
    check_n(n)
    check_element(n, g)
    check_element(n, h)
    m = 4 * n
    r1 = (2 * n - 1) * g.r % m if h.s else g.r
    return SDElement(g.s ^ h.s, (r1 + h.r) % m)


def inverse(n: int, g: SDElement) -> SDElement:
    """(a^r)^(-1) = a^(4n-r) and (b a^r)^(-1) = b a^((2n+1)r)."""
    check_n(n)
    check_element(n, g)
    m = 4 * n
    if g.s == 0:
        return SDElement(0, (m - g.r) % m)
    return SDElement(1, (2 * n + 1) * g.r % m)


def power(n: int, g: SDElement, k: int) -> SDElement:
    """g^k by repeated multiplication (group order is tiny)."""
    if k < 0:
        return power(n, inverse(n, g), -k)
    acc = identity()
    for _ in range(k):
        acc = multiply(n, acc, g)
    return acc


def element_name(g: SDElement) -> str:
    """Conventional name: 1, a, a^2, ..., b, ba, ba^2, ..."""
    if g.s == 0:
        if g.r == 0:
            return "1"
        return "a" if g.r == 1 else f"a^{g.r}"
    if g.r == 0:
        return "b"
    return "ba" if g.r == 1 else f"ba^{g.r}"


def _class_size_profile(n: int) -> list[int]:
    if n % 2 == 0:
        return sorted([1, 1] + [2] * (2 * n - 1) + [2 * n, 2 * n])
    return sorted([1, 1, 1, 1] + [2] * (2 * n - 2) + [n, n, n, n])


def conjugacy_classes(n: int) -> ConjClassReport:
    """All conjugacy classes by brute-force conjugation.

    Representatives are the lexicographically least members under (s, r)
    order; classes are sorted by representative.  The class count is 2n+3
    for even n and 2n+6 for odd n, verified before returning.
    """
    check_n(n)
    all_elements = elements(n)
    seen: set[SDElement] = set()
    classes = []
    for h in all_elements:
        if h in seen:
            continue
        members = {multiply(n, multiply(n, g, h), inverse(n, g)) for g in all_elements}
        seen |= members
        members = tuple(sorted(members))
        classes.append((members[0], members))
    classes.sort(key=lambda pair: pair[0])
    report = ConjClassReport(n=n, classes=tuple(classes))

    expected_count = 2 * n + 3 if n % 2 == 0 else 2 * n + 6
    sizes = sorted(len(members) for _, members in report.classes)
    if report.count != expected_count or sizes != _class_size_profile(n):
        raise RuntimeError(f"conjugacy class structure of SD_{8 * n} is inconsistent")
    return report


def is_subgroup(n: int, subset) -> bool:
    """Closure test for an explicit element set."""
    members = set(subset)
    if identity() not in members:
        return False
    for g in members:
        check_element(n, g)
        if inverse(n, g) not in members:
            return False
        for h in members:
            if multiply(n, g, h) not in members:
                return False
    return True


def cyclic_intersection(n: int, subgroup) -> tuple[int, bool]:
    """Describe H intersect <a> for a subgroup H.

    Returns (r, proper) where the intersection equals <a^r>.  The trivial
    intersection {1} is encoded as r = 0; any r >= 1 is the least positive
    exponent generating the intersection, i.e. the gcd of the rotation
    exponents occurring in H together with 4n.  The proper flag is set when
    <a^r> is strictly smaller than H.
    """
    check_n(n)
    members = set(subgroup)
    if not is_subgroup(n, members):
        raise ValueError("input set is not closed under multiplication and inverse")
    exponents = [g.r for g in members if g.s == 0 and g.r != 0]
    if not exponents:
        return 0, len(members) > 1
    m = 4 * n
    r = 0
    for e in exponents:
        r = gcd(r, e)
    r = gcd(r, m)
    cyclic_size = m // gcd(m, r)
    return r, cyclic_size < len(members)
