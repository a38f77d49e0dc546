from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, List, Optional, Sequence

from sympow.errors import AmbientMismatchError, ResourceCapError, ZeroIdealError
from sympow.monomial.types import Containment, Monomial, MonomialIdeal, Ring

DEFAULT_GENERATOR_CAP = 200_000


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class DivisorTree:
    """
    Exponent-vector trie answering "does some stored monomial divide m?".

    Level k of the trie branches on the k-th exponent, so a query only
    descends into children whose exponent does not exceed m's.
    """

    def __init__(self) -> None:
        self.root: dict = {}
        self.size = 0

    def insert(self, m: Monomial) -> None:
        node = self.root
        for e in m:
            node = node.setdefault(e, {})
        self.size += 1

    def divides_any(self, m: Sequence[int]) -> bool:
        if not self.size:
            return False
        n = len(m)
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            if depth == n:
                return True
            bound = m[depth]
            for e, child in node.items():
                if e <= bound:
                    stack.append((child, depth + 1))
        return False


def _collect(candidates: Iterable[Monomial], cap: int) -> set:
    unique: set = set()
    for m in candidates:
        unique.add(m)
        if len(unique) > cap:
            raise ResourceCapError(
                f"Intermediate generator count exceeded cap {cap}",
                cap=cap,
                observed=len(unique),
            )
    return unique


def minimalize(
    candidates: Iterable[Monomial], cap: int = DEFAULT_GENERATOR_CAP
) -> List[Monomial]:
    """
    Keep the divisibility-minimal monomials of a candidate set, sorted lexicographically.
    """
    unique = _collect(candidates, cap)
    if not unique:
        return []

    by_degree = sorted(unique, key=sum)
    if sum(by_degree[0]) == sum(by_degree[-1]):
        # equal degree monomials never divide one another
        return sorted(unique)

    tree = DivisorTree()
    kept = []
    for m in by_degree:
        if not tree.divides_any(m):
            tree.insert(m)
            kept.append(m)
    kept.sort()
    return kept


def normalize(
    gens: Iterable[Sequence[int]],
    ring: Optional[Ring] = None,
    cap: int = DEFAULT_GENERATOR_CAP,
) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if ring is None:
        if not gens:
            raise AmbientMismatchError("Cannot infer the ring of an empty generator list")
        ring = Ring.of_size(len(gens[0]))
    n = ring.ngens
    for g in gens:
        if len(g) != n:
            raise AmbientMismatchError(
                f"Generator {g} has {len(g)} exponents, expected {n}",
                expected=n,
                actual=len(g),
            )
        if any(e < 0 for e in g):
            raise ValueError(f"Negative exponent in generator {g}")
    return MonomialIdeal(ring, tuple(minimalize(gens, cap)))


def zero_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, (ring.unit(),))


def multiply(
    I: MonomialIdeal, J: MonomialIdeal, cap: int = DEFAULT_GENERATOR_CAP
) -> MonomialIdeal:
    I.same_ring(J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.ring)
    products = (mul(g, h) for g in I.generators for h in J.generators)
    return MonomialIdeal(I.ring, tuple(minimalize(products, cap)))


def power(
    I: MonomialIdeal, r: int, cap: int = DEFAULT_GENERATOR_CAP
) -> MonomialIdeal:
    if r < 0:
        raise ValueError(f"Power exponent must be nonnegative, got {r}")
    if r == 0:
        return unit_ideal(I.ring)

    result: Optional[MonomialIdeal] = None
    base = I
    while r:
        if r & 1:
            result = base if result is None else multiply(result, base, cap)
        r >>= 1
        if r:
            base = multiply(base, base, cap)
    return result


def intersect(
    I: MonomialIdeal, J: MonomialIdeal, cap: int = DEFAULT_GENERATOR_CAP
) -> MonomialIdeal:
    I.same_ring(J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.ring)
    lcms = (lcm(g, h) for g in I.generators for h in J.generators)
    return MonomialIdeal(I.ring, tuple(minimalize(lcms, cap)))


def intersect_all(
    ideals: Sequence[MonomialIdeal], ring: Ring, cap: int = DEFAULT_GENERATOR_CAP
) -> MonomialIdeal:
    result = unit_ideal(ring)
    for J in sorted(ideals, key=len):
        result = intersect(result, J, cap)
    return result


def intersect_prime_power(
    I: MonomialIdeal,
    prime: Iterable[int],
    s: int,
    cap: int = DEFAULT_GENERATOR_CAP,
) -> MonomialIdeal:
    """
    Compute I ∩ P^s for the monomial prime P generated by the given variables.

    The minimal elements of lcm(g, P^s) are g raised on P by every distribution
    of the deficit s - deg_P(g), so the full lcm table is never formed.
    """
    if I.is_zero:
        return I
    prime = sorted(prime)

    def raised():
        for g in I.generators:
            deficit = s - sum(g[i] for i in prime)
            if deficit <= 0:
                yield g
                continue
            for combo in combinations_with_replacement(prime, deficit):
                m = list(g)
                for i in combo:
                    m[i] += 1
                yield tuple(m)

    return MonomialIdeal(I.ring, tuple(minimalize(raised(), cap)))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I.same_ring(J)
    return MonomialIdeal(I.ring, tuple(minimalize(I.generators + J.generators)))


def bracket_power(I: MonomialIdeal, r: int) -> MonomialIdeal:
    if r < 1:
        raise ValueError(f"Bracket power exponent must be positive, got {r}")
    return MonomialIdeal(
        I.ring, tuple(minimalize(tuple(r * e for e in g) for g in I.generators))
    )


def pi(I: MonomialIdeal) -> Monomial:
    if I.is_zero:
        raise ZeroIdealError("pi is undefined for the zero ideal")
    return tuple(max(column) for column in zip(*I.generators))


def principal(ring: Ring, m: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(ring, (tuple(m),))


def contains_monomial(I: MonomialIdeal, m: Sequence[int]) -> bool:
    return any(divides(g, m) for g in I.generators)


def is_subideal(A: MonomialIdeal, B: MonomialIdeal) -> Containment:
    A.same_ring(B)
    if len(B) > 32:
        tree = DivisorTree()
        for g in B.generators:
            tree.insert(g)
        test = tree.divides_any
    else:
        test = lambda m: contains_monomial(B, m)  # noqa: E731
    for g in A.generators:
        if not test(g):
            return Containment(False, g)
    return Containment(True)


def monomial_in_power(m: Sequence[int], I: MonomialIdeal, r: int) -> bool:
    """
    Decide m ∈ I^r without materializing I^r.

    Searches for generator multiplicities c_g with Σ c_g = r and
    Σ c_g·g ≤ m coordinatewise, largest generators first, remembering
    failed (index, remainder, count) states.
    """
    if r == 0:
        return True
    if I.is_zero:
        return False
    if I.is_unit:
        return True

    m = tuple(m)
    gens = [g for g in I.generators if divides(g, m)]
    if not gens:
        return False
    if r == 1:
        return True
    gens.sort(key=lambda g: (-sum(g), g))
    degrees = [sum(g) for g in gens]
    if r * degrees[-1] > sum(m):
        return False

    # suffix minimum degree, so a branch dies when even the cheapest
    # remaining generators overflow the leftover degree
    suffix_min = degrees[:]
    for k in range(len(gens) - 2, -1, -1):
        suffix_min[k] = min(suffix_min[k], suffix_min[k + 1])

    failed: set = set()
    last = len(gens) - 1

    def search(k: int, rem: Monomial, count: int) -> bool:
        if count == 0:
            return True
        if count * suffix_min[k] > sum(rem):
            return False
        key = (k, rem, count)
        if key in failed:
            return False
        g = gens[k]
        most = count
        for gi, ri in zip(g, rem):
            if gi and ri // gi < most:
                most = ri // gi
        if k == last:
            if most >= count:
                return True
            failed.add(key)
            return False
        for c in range(most, -1, -1):
            nxt = tuple(ri - c * gi for ri, gi in zip(rem, g)) if c else rem
            if search(k + 1, nxt, count - c):
                return True
        failed.add(key)
        return False

    return search(0, m, r)


def monomial_in_product(
    m: Sequence[int], A: MonomialIdeal, B: MonomialIdeal
) -> bool:
    for g in A.generators:
        if divides(g, m):
            rest = tuple(x - y for x, y in zip(m, g))
            if contains_monomial(B, rest):
                return True
    return False


def ideal_containment(A: MonomialIdeal, I: MonomialIdeal, r: int) -> Containment:
    """
    Test A ⊆ I^r generator by generator; the first failing generator is the witness.
    """
    A.same_ring(I)
    if A.is_zero or r == 0:
        return Containment(True)
    for g in A.generators:
        if not monomial_in_power(g, I, r):
            return Containment(False, g)
    return Containment(True)
