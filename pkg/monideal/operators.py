"""
Structure-transport operators on monomial ideals.

Three maps carry a monomial ideal into another ring (or the same one) while
preserving sums, products, intersections and colons:

- expansion ``I*``: each variable ``x_j`` becomes a block ``x_{j,1}, …,
  x_{j,i_j}`` and ``x_j^e`` becomes the ``e``-th power of the block prime;
- weighting ``I_W``: ``x_i ↦ x_i^{w_i}`` on generators;
- monomial localization ``I(𝔭)``: variables outside ``𝔭`` are set to 1.

Because these maps respect colon ideals and powers, strong persistence
indices and colon-power fluctuation transfer along them, which is how single
examples are turned into infinite families.

Examples
--------
>>> from monideal.base import Ring, MonomialIdeal
>>> from monideal.operators import ExpansionSpec, expand
>>> ring = Ring(("x1", "x2", "x3"))
>>> I = MonomialIdeal.from_exponents(ring, [[3, 0, 0], [0, 1, 2], [1, 0, 1]])
>>> len(expand(I, ExpansionSpec(ring, (3, 1, 2))))
19
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Tuple

import numpy as np

from .base import (
    MAX_EXPONENT,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    _check_ring,
    _ideal_from_rows,
    contains,
)
from .decomposition import associated_primes
from .errors import ExponentOverflowError, MonomialIdealError

logger = logging.getLogger(__name__)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Return ``I + J``, the minimalized union of generators."""
    _check_ring(I.ring, J.ring)
    return _ideal_from_rows(I.ring, np.concatenate([I.matrix, J.matrix]))


# -----------------------------------------------------------------------------
# expansion

@dataclass(frozen=True)
class ExpansionSpec:
    """An expansion of ``source`` by the tuple ``(i_1, …, i_n)``.

    The target ring has variables ``<name>_<k>`` for ``k = 1..i_j``, block by
    block in source order.

    Examples
    --------
    >>> spec = ExpansionSpec(Ring(("x", "y")), (2, 1))
    >>> spec.target.variables
    ('x_1', 'x_2', 'y_1')
    """

    source: Ring
    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.source.n:
            raise MonomialIdealError(
                f"expansion tuple has {len(counts)} entries, ring {self.source} has {self.source.n} variables"
            )
        if any(c < 1 for c in counts):
            raise MonomialIdealError(f"expansion tuple entries must be positive, got {counts}")

    @cached_property
    def target(self) -> Ring:
        return Ring(tuple(
            f"{name}_{k}"
            for name, count in zip(self.source.variables, self.counts)
            for k in range(1, count + 1)
        ))

    @cached_property
    def offsets(self) -> Tuple[int, ...]:
        return tuple(itertools.accumulate((0,) + self.counts[:-1]))

    def block(self, j: int) -> range:
        """Target indices of the block replacing source variable ``j``."""
        return range(self.offsets[j], self.offsets[j] + self.counts[j])


@lru_cache(maxsize=1024)
def _block_power(size: int, degree: int) -> np.ndarray:
    # all degree-`degree` exponent vectors on `size` variables
    rows = [np.bincount(np.array(c, dtype=np.int64), minlength=size)
            for c in itertools.combinations_with_replacement(range(size), degree)]
    out = np.array(rows, dtype=np.int64).reshape(-1, size)
    out.setflags(write=False)
    return out


def expand(I: MonomialIdeal, spec: ExpansionSpec) -> MonomialIdeal:
    """Return the expansion ``I*`` in ``spec.target``.

    Each generator ``x^a`` contributes the product ideal
    ``𝔭_1^{a(1)} ⋯ 𝔭_n^{a(n)}``, where ``𝔭_j`` is the prime of the j-th
    block; the sum over generators is minimalized once at the end.

    Parameters
    ----------
    I : MonomialIdeal
        Ideal over ``spec.source``.
    spec : ExpansionSpec
        The expansion tuple.

    Raises
    ------
    RingMismatchError
        If ``I`` is not over ``spec.source``.
    """
    _check_ring(I.ring, spec.source)
    target = spec.target
    if I.is_zero:
        return target.zero_ideal()
    pieces = []
    for row in I.matrix.tolist():
        combo = np.zeros((1, 0), dtype=np.int64)
        for count, e in zip(spec.counts, row):
            block = _block_power(count, e)
            combo = np.concatenate(
                [np.repeat(combo, len(block), axis=0), np.tile(block, (len(combo), 1))], axis=1
            )
        pieces.append(combo)
    return _ideal_from_rows(target, np.concatenate(pieces))


def contract_pi(m: Monomial, spec: ExpansionSpec) -> Monomial:
    """Map ``x_{j,k} ↦ x_j``: sum the exponents of each block.

    Examples
    --------
    >>> spec = ExpansionSpec(Ring(("x1", "x2", "x3")), (3, 1, 2))
    >>> m = Monomial(spec.target, (1, 2, 0, 0, 1, 0))
    >>> contract_pi(m, spec).exponents
    (3, 0, 1)
    """
    _check_ring(m.ring, spec.target)
    return Monomial(spec.source, tuple(
        sum(m.exponents[k] for k in spec.block(j)) for j in range(spec.source.n)
    ))


def expand_prime(p: MonomialPrime, spec: ExpansionSpec) -> MonomialPrime:
    """Return ``𝔭*``, the prime on every block variable of ``p``."""
    _check_ring(p.ring, spec.source)
    return MonomialPrime(spec.target, tuple(k for j in p.vars for k in spec.block(j)))


# -----------------------------------------------------------------------------
# weighting

@dataclass(frozen=True)
class WeightSpec:
    """Positive integer weights ``w_i = W(x_i)``, one per variable."""

    weights: Tuple[int, ...]

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights or any(w < 1 for w in weights):
            raise MonomialIdealError(f"weights must be positive integers, got {weights}")


def weight(I: MonomialIdeal, spec: WeightSpec) -> MonomialIdeal:
    """Return ``I_W``, generated by ``h(u)`` for ``u ∈ 𝒢(I)`` with ``h(x_i) = x_i^{w_i}``.

    Raises
    ------
    MonomialIdealError
        If the number of weights differs from the number of variables.
    ExponentOverflowError
        If a scaled exponent exceeds :data:`monideal.base.MAX_EXPONENT`.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(ring, [[1, 1]])
    >>> weight(I, WeightSpec((2, 3))).generators[0].exponents
    (2, 3)
    """
    if len(spec.weights) != I.ring.n:
        raise MonomialIdealError(
            f"{len(spec.weights)} weights given for ring {I.ring} with {I.ring.n} variables"
        )
    if I.is_zero:
        return I
    for col_max, w in zip(I.matrix.max(axis=0).tolist(), spec.weights):
        if col_max * w > MAX_EXPONENT:
            raise ExponentOverflowError(f"weight {w} pushes exponent {col_max} past {MAX_EXPONENT}")
    return _ideal_from_rows(I.ring, I.matrix * np.array(spec.weights, dtype=np.int64))


def lift(I: MonomialIdeal, expansion: ExpansionSpec, weights: WeightSpec) -> MonomialIdeal:
    """Return ``(I*)_W``; ``weights`` are over the expanded ring."""
    return weight(expand(I, expansion), weights)


# -----------------------------------------------------------------------------
# monomial localization

def local_ring(p: MonomialPrime) -> Ring:
    """The ring ``R(𝔭)`` on the variables of ``p``."""
    return Ring(p.names)


def localize(I: MonomialIdeal, p: MonomialPrime) -> MonomialIdeal:
    """Return the monomial localization ``I(𝔭)`` over ``R(𝔭)``.

    Examples
    --------
    >>> ring = Ring(("x", "y", "z"))
    >>> I = MonomialIdeal.from_exponents(ring, [[1, 0, 2], [0, 3, 1]])
    >>> str(localize(I, MonomialPrime.from_names(ring, ["x", "y"])))
    'x, y^3'
    """
    _check_ring(I.ring, p.ring)
    return _ideal_from_rows(local_ring(p), I.matrix[:, list(p.vars)])


def embed(J: MonomialIdeal, ring: Ring) -> MonomialIdeal:
    """Map an ideal over a sub-ring (such as ``R(𝔭)``) into ``ring`` by variable name."""
    columns = [ring.index(name) for name in J.ring.variables]
    rows = np.zeros((len(J), ring.n), dtype=np.int64)
    rows[:, columns] = J.matrix
    return _ideal_from_rows(ring, rows)


def containment_via_localization(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    """Decide ``J ⊆ I`` by checking ``J(𝔭) ⊆ I(𝔭)`` for every ``𝔭 ∈ Ass(R/I)``.

    Parameters
    ----------
    J : MonomialIdeal
        Candidate subideal.
    I : MonomialIdeal
        A nonzero proper ideal.

    Returns
    -------
    bool
        Always equal to ``contains(I, J)``; the local checks are sufficient
        and trivially necessary.
    """
    _check_ring(I.ring, J.ring)
    for p in sorted(associated_primes(I), key=MonomialPrime.sort_key):
        if not contains(localize(I, p), localize(J, p)):
            logger.debug("containment fails locally at %s", p.names)
            return False
    return True
