from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Sequence

from sympow.errors import AmbientMismatchError

Monomial = tuple[int, ...]
Weight = tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    variables: tuple[str, ...]

    @classmethod
    def of_size(cls, n: int, prefix: str = "x") -> Ring:
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def unit(self) -> Monomial:
        return (0,) * self.ngens

    def variable(self, index: int) -> Monomial:
        return tuple(1 if i == index else 0 for i in range(self.ngens))

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def render(self, m: Sequence[int]) -> str:
        """
        Render an exponent vector in variable names, e.g. (2, 1, 0) -> "x^2*y".
        """
        if len(m) != self.ngens:
            raise AmbientMismatchError(
                f"Monomial {tuple(m)} does not live in a ring with {self.ngens} variables",
                expected=self.ngens,
                actual=len(m),
            )
        factors = []
        for name, e in zip(self.variables, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """
    A monomial ideal given by its minimal generators in lexicographic order.

    Build instances through sympow.monomial.ideal.normalize unless the
    generators are already known to be minimal and sorted.
    """

    ring: Ring
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        n = self.ring.ngens
        for g in self.generators:
            if len(g) != n:
                raise AmbientMismatchError(
                    f"Generator {g} has {len(g)} exponents, ring has {n} variables",
                    expected=n,
                    actual=len(g),
                )

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __contains__(self, m: object) -> bool:
        return any(all(a <= b for a, b in zip(g, m)) for g in self.generators)

    @property
    def ngens(self) -> int:
        return self.ring.ngens

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    @property
    def min_degree(self) -> int:
        return min((sum(g) for g in self.generators), default=0)

    def same_ring(self, other: MonomialIdeal) -> None:
        if self.ring != other.ring:
            raise AmbientMismatchError(
                f"Ideals live in different rings: {self.ring.variables} and {other.ring.variables}",
                expected=self.ring.ngens,
                actual=other.ring.ngens,
            )

    def render(self) -> List[str]:
        return [self.ring.render(g) for g in self.generators]

    @cached_property
    def fingerprint(self) -> str:
        payload = ",".join(self.ring.variables) + "|" + ";".join(
            ".".join(str(e) for e in g) for g in self.generators
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def __str__(self) -> str:
        return "<" + ", ".join(self.render()) + ">"


@dataclass(frozen=True)
class PrimeSupport:
    variables: frozenset[int]

    @classmethod
    def of(cls, indices) -> PrimeSupport:
        return cls(frozenset(indices))

    @property
    def height(self) -> int:
        return len(self.variables)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.variables), tuple(sorted(self.variables))

    def as_ideal(self, ring: Ring) -> MonomialIdeal:
        return MonomialIdeal(
            ring, tuple(sorted(ring.variable(i) for i in self.variables))
        )

    def render(self, ring: Ring) -> List[str]:
        return [ring.variables[i] for i in sorted(self.variables)]


def sort_primes(primes) -> List[PrimeSupport]:
    return sorted(primes, key=lambda p: p.sort_key)


@dataclass(frozen=True)
class DecompositionReport:
    minimal_primes: tuple[PrimeSupport, ...]
    associated_primes: tuple[PrimeSupport, ...]
    irreducible_components: tuple[MonomialIdeal, ...]
    big_height: int
    embedded_primes: tuple[PrimeSupport, ...] = field(default=())


@dataclass(frozen=True)
class Containment:
    holds: bool
    witness: Monomial | None = None

    def __bool__(self) -> bool:
        return self.holds
