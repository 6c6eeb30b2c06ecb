"""
Irreducible and primary decomposition of monomial ideals.

Every monomial ideal is an irredundant intersection of irreducible monomial
ideals ``(x_{i₁}^{a₁}, …, x_{i_r}^{a_r})``, and the radicals of those
components are exactly its associated primes. This module computes that
decomposition with the classical splitting rule and derives associated,
minimal and embedded primes and a primary decomposition from it.

Examples
--------
>>> from monideal.base import Ring, MonomialIdeal
>>> from monideal.decomposition import associated_primes
>>> ring = Ring(("x", "y", "z"))
>>> I = MonomialIdeal.from_exponents(ring, [[4, 0, 0], [0, 4, 0], [3, 1, 0], [1, 3, 0], [2, 2, 1]])
>>> sorted(p.names for p in associated_primes(I))
[('x', 'y'), ('x', 'y', 'z')]

See Also
--------
monideal.persistence.ass_powers : associated primes of successive powers
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from .base import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    _check_ring,
    colon_by_monomial,
    intersect,
)
from .errors import DegenerateIdealError, MonomialIdealError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IrreducibleComponent:
    """An irreducible monomial ideal generated by pure powers.

    Parameters
    ----------
    ring : Ring
        The ambient ring.
    pure_powers : Tuple[Tuple[int, int], ...]
        ``(variable index, positive exponent)`` pairs, stored sorted by index.

    Examples
    --------
    >>> ring = Ring(("x", "y", "z"))
    >>> Q = IrreducibleComponent(ring, ((2, 1), (0, 3)))
    >>> Q.pure_powers
    ((0, 3), (2, 1))
    >>> Q.radical().names
    ('x', 'z')
    """

    ring: Ring
    pure_powers: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        powers = tuple(sorted((int(i), int(a)) for i, a in dict(self.pure_powers).items()))
        object.__setattr__(self, "pure_powers", powers)
        if not powers:
            raise MonomialIdealError("an irreducible component needs at least one pure power")
        for i, a in powers:
            if a < 1 or not 0 <= i < self.ring.n:
                raise MonomialIdealError(f"invalid pure power x_{i}^{a} for ring {self.ring}")

    @property
    def exponent_map(self) -> Dict[int, int]:
        return dict(self.pure_powers)

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ring, tuple(i for i, _ in self.pure_powers))

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, tuple(self.ring.variable(i, a) for i, a in self.pure_powers))

    def contains(self, other: "IrreducibleComponent") -> bool:
        """True iff ``other ⊆ self`` as ideals."""
        mine = self.exponent_map
        return all(i in mine and mine[i] <= a for i, a in other.pure_powers)

    def sort_key(self):
        return (self.radical().sort_key(), self.pure_powers)


@dataclass(frozen=True)
class Decomposition:
    """An irredundant irreducible decomposition of ``source``.

    Attributes
    ----------
    source : MonomialIdeal
        The decomposed ideal.
    components : Tuple[IrreducibleComponent, ...]
        Components sorted by radical, then by exponent map.
    """

    source: MonomialIdeal
    components: Tuple[IrreducibleComponent, ...]

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def recompose(self) -> MonomialIdeal:
        """Intersect all components."""
        return reduce(intersect, (c.to_ideal() for c in self.components))

    def is_irredundant(self) -> bool:
        """True iff dropping any single component enlarges the intersection."""
        if len(self.components) == 1:
            return True
        for k in range(len(self.components)):
            others = self.components[:k] + self.components[k + 1:]
            if reduce(intersect, (c.to_ideal() for c in others)) == self.source:
                return False
        return True


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise DegenerateIdealError("the zero ideal has no irreducible decomposition")
    if I.is_unit:
        raise DegenerateIdealError("the unit ideal has no irreducible decomposition")


@lru_cache(maxsize=8192)
def _split(I: MonomialIdeal) -> FrozenSet[IrreducibleComponent]:
    rows = I.matrix
    mixed = np.flatnonzero(np.count_nonzero(rows, axis=1) >= 2)
    if len(mixed) == 0:
        powers = tuple((int(np.flatnonzero(row)[0]), int(row.max())) for row in rows)
        return frozenset([IrreducibleComponent(I.ring, powers)])
    u = I.generators[int(mixed[0])]
    i = min(u.support)
    a = u.exponents[i]
    rest = list(u.exponents)
    rest[i] = 0
    left = MonomialIdeal(I.ring, I.generators + (I.ring.variable(i, a),))
    right = MonomialIdeal(I.ring, I.generators + (Monomial(I.ring, tuple(rest)),))
    return _split(left) | _split(right)


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """Return the irredundant irreducible decomposition of ``I``.

    If every generator is a pure power, ``I`` is irreducible. Otherwise the
    first generator ``u`` (canonical order) involving two or more variables
    is split as ``u = x_i^a · w`` with ``x_i`` its smallest variable, and
    ``I = (I + (x_i^a)) ∩ (I + (w))`` is decomposed recursively, sharing
    sub-results between branches. Finally every component containing another
    one is dropped; for irreducible components that is exactly redundancy.

    Parameters
    ----------
    I : MonomialIdeal
        A nonzero proper ideal.

    Returns
    -------
    Decomposition
        Components in canonical order.

    Raises
    ------
    DegenerateIdealError
        If ``I`` is the zero or the unit ideal.

    Examples
    --------
    >>> ring = Ring(("x", "z"))
    >>> I = MonomialIdeal.from_exponents(ring, [[2, 0], [0, 3]])
    >>> [c.pure_powers for c in irreducible_decomposition(I)]
    [((0, 2), (1, 3))]
    """
    _require_proper(I)
    found = _split(I)
    components = [c for c in found if not any(o != c and c.contains(o) for o in found)]
    components.sort(key=IrreducibleComponent.sort_key)
    logger.debug("decomposed %d generators into %d components (%d before pruning)",
                 len(I), len(components), len(found))
    return Decomposition(I, tuple(components))


def associated_primes(I: MonomialIdeal) -> FrozenSet[MonomialPrime]:
    """Return ``Ass(R/I)`` as the radicals of the irreducible components."""
    return frozenset(c.radical() for c in irreducible_decomposition(I))


def minimal_primes(I: MonomialIdeal) -> FrozenSet[MonomialPrime]:
    """Return the inclusion-minimal associated primes of ``I``."""
    ass = associated_primes(I)
    return frozenset(p for p in ass if not any(q < p for q in ass))


def embedded_primes(I: MonomialIdeal) -> FrozenSet[MonomialPrime]:
    """Return the associated primes of ``I`` that are not minimal."""
    return associated_primes(I) - minimal_primes(I)


def primary_decomposition(I: MonomialIdeal) -> List[Tuple[MonomialPrime, MonomialIdeal]]:
    """Group irreducible components by radical and intersect each group.

    Returns
    -------
    List[Tuple[MonomialPrime, MonomialIdeal]]
        ``(𝔭, Q)`` pairs with ``Q`` a ``𝔭``-primary ideal, one per associated
        prime, sorted by prime. Only the set of radicals is canonical; the
        embedded components are one valid choice among many.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(ring, [[2, 0], [1, 1]])
    >>> [(p.names, len(Q)) for p, Q in primary_decomposition(I)]
    [(('x',), 1), (('x', 'y'), 2)]
    """
    groups: Dict[MonomialPrime, List[IrreducibleComponent]] = {}
    for c in irreducible_decomposition(I):
        groups.setdefault(c.radical(), []).append(c)
    return [
        (p, reduce(intersect, (c.to_ideal() for c in groups[p])))
        for p in sorted(groups, key=MonomialPrime.sort_key)
    ]


def ass_witness(I: MonomialIdeal, p: MonomialPrime) -> Optional[Monomial]:
    """Find a monomial ``u`` with ``(I : u) = p`` in the exponent box of ``I``.

    The box is ``[0, e_1] × … × [0, e_n]`` with ``e_j`` the largest exponent
    of ``x_j`` among the generators. Returns None when no box monomial works,
    which happens exactly when ``p ∉ Ass(R/I)``.
    """
    _check_ring(I.ring, p.ring)
    _require_proper(I)
    target = p.to_ideal()
    bounds = I.matrix.max(axis=0).tolist()
    for exponents in itertools.product(*(range(e + 1) for e in bounds)):
        u = Monomial(I.ring, exponents)
        if colon_by_monomial(I, u) == target:
            return u
    return None
