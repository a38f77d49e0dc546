from __future__ import annotations

from typing import List

from sympow.errors import ZeroIdealError
from sympow.logger import get_logger
from sympow.monomial.ideal import is_subideal, minimalize
from sympow.monomial.types import (
    DecompositionReport,
    MonomialIdeal,
    PrimeSupport,
    sort_primes,
)

logger = get_logger("sympow.monomial")


def _bits(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _minimal_sets(masks) -> List[int]:
    kept: List[int] = []
    for t in sorted(set(masks), key=lambda t: (t.bit_count(), t)):
        if not any(k & t == k for k in kept):
            kept.append(t)
    return kept


def minimal_primes(I: MonomialIdeal) -> List[PrimeSupport]:
    """
    Minimal primes as the minimal transversals of the generator supports.

    Supports are taken from the radical, so a non-squarefree ideal yields
    the minimal primes of its radical, which are its own minimal primes.
    """
    if I.is_zero:
        raise ZeroIdealError("The zero ideal has the zero prime as its only minimal prime")
    if I.is_unit:
        return []
    if not I.is_squarefree:
        logger.debug(f"Minimal primes of non-squarefree {I} taken from its radical")

    edges = _minimal_sets(
        sum(1 << i for i, e in enumerate(g) if e) for g in I.generators
    )
    transversals = [0]
    for edge in edges:
        grown = []
        for t in transversals:
            if t & edge:
                grown.append(t)
            else:
                grown.extend(t | (1 << v) for v in _bits(edge))
        transversals = _minimal_sets(grown)

    return sort_primes(PrimeSupport.of(_bits(t)) for t in transversals)


def _component_key(Q: MonomialIdeal):
    support = tuple(
        sorted(i for g in Q.generators for i, e in enumerate(g) if e)
    )
    return len(support), support, Q.generators


def irreducible_decomposition(I: MonomialIdeal) -> List[MonomialIdeal]:
    """
    Irredundant irreducible decomposition by recursive generator splitting.

    A generator with two or more variables is written u·v with u the pure
    power of its first variable, and I = (I + <u>) ∩ (I + <v>). Leaves are
    generated by pure powers. Monomial ideals form a distributive lattice, so
    a leaf is redundant exactly when it contains another leaf.
    """
    if I.is_zero:
        raise ZeroIdealError("The zero ideal has no irreducible decomposition")
    if I.is_unit:
        return []
    ring = I.ring
    if I.is_squarefree:
        return [P.as_ideal(ring) for P in minimal_primes(I)]

    leaves = set()
    seen = set()
    stack = [I.generators]
    while stack:
        gens = stack.pop()
        if gens in seen:
            continue
        seen.add(gens)
        mixed = next((g for g in gens if sum(1 for e in g if e) > 1), None)
        if mixed is None:
            leaves.add(gens)
            continue
        i = next(k for k, e in enumerate(mixed) if e)
        u = tuple(e if k == i else 0 for k, e in enumerate(mixed))
        v = tuple(0 if k == i else e for k, e in enumerate(mixed))
        stack.append(tuple(minimalize(gens + (u,))))
        stack.append(tuple(minimalize(gens + (v,))))

    candidates = [MonomialIdeal(ring, gens) for gens in leaves]
    components = [
        Q
        for Q in candidates
        if not any(R is not Q and is_subideal(R, Q).holds for R in candidates)
    ]
    components.sort(key=_component_key)
    logger.debug(f"Split {I} into {len(components)} irreducible components")
    return components


def component_support(Q: MonomialIdeal) -> PrimeSupport:
    return PrimeSupport.of(i for g in Q.generators for i, e in enumerate(g) if e)


def associated_primes(I: MonomialIdeal) -> List[PrimeSupport]:
    if I.is_squarefree:
        return minimal_primes(I)
    return sort_primes({component_support(Q) for Q in irreducible_decomposition(I)})


def big_height(I: MonomialIdeal) -> int:
    return max((P.height for P in associated_primes(I)), default=0)


def decompose(I: MonomialIdeal) -> DecompositionReport:
    components = irreducible_decomposition(I)
    minimal = minimal_primes(I)
    if I.is_squarefree:
        associated = minimal
    else:
        associated = sort_primes({component_support(Q) for Q in components})
    embedded = [P for P in associated if P not in minimal]
    return DecompositionReport(
        minimal_primes=tuple(minimal),
        associated_primes=tuple(associated),
        irreducible_components=tuple(components),
        big_height=max((P.height for P in associated), default=0),
        embedded_primes=tuple(embedded),
    )


def localize_contract(I: MonomialIdeal, P: PrimeSupport) -> MonomialIdeal:
    """
    I·R_P ∩ R for a monomial prime: variables outside P are set to 1.
    """
    keep = P.variables
    return MonomialIdeal(
        I.ring,
        tuple(
            minimalize(
                tuple(e if i in keep else 0 for i, e in enumerate(g))
                for g in I.generators
            )
        ),
    )
