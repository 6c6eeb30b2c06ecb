"""
Core arithmetic on monomials and monomial ideals.

This module provides the value types every other module builds on
(:class:`Ring`, :class:`Monomial`, :class:`MonomialIdeal`,
:class:`MonomialPrime`) and the exact ideal operations on them:
minimalization, membership, containment, product, power, colon,
intersection, radical and support. The coefficient field is never
materialized; everything is combinatorics on exponent vectors.

Generator sets are stored as ``int64`` exponent matrices so that the
divisibility tests behind minimalization and membership run vectorized.

Examples
--------
>>> from monideal.base import Ring, MonomialIdeal, colon, power
>>> ring = Ring(("x", "y"))
>>> I = MonomialIdeal.from_exponents(ring, [[6, 0], [0, 6], [1, 5], [5, 1], [4, 4]])
>>> colon(power(I, 2), I) == I
True

See Also
--------
monideal.decomposition : irreducible decompositions and associated primes
monideal.operators : expansion, weighting and monomial localization
"""

import hashlib
import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import TYPE_CHECKING, FrozenSet, Iterable, Optional, Sequence, Tuple, Union

import numpy as np
import regex as re

from .errors import (
    ExponentOverflowError,
    MonomialIdealError,
    NotDivisibleError,
    RingMismatchError,
    ZeroIdealError,
)

if TYPE_CHECKING:
    from .cache import PowerCache

logger = logging.getLogger(__name__)

# Per-entry bound; keeps every total degree inside int64.
MAX_EXPONENT = 2**32 - 1

IDENTIFIER_PATTERN = r"[A-Za-z][A-Za-z0-9_]*"
_IDENTIFIER = re.compile(IDENTIFIER_PATTERN)

# boolean cells per vectorized divisibility block
_BLOCK_CELLS = 1 << 22


# -----------------------------------------------------------------------------
# value types

@dataclass(frozen=True)
class Ring:
    """The ambient polynomial ring, given by its ordered variable names.

    Parameters
    ----------
    variables : Sequence[str]
        Distinct identifiers (a letter followed by letters, digits or
        underscores). Their order fixes the exponent-vector coordinates.

    Raises
    ------
    MonomialIdealError
        If the list is empty, a name is not an identifier, or a name repeats.

    Examples
    --------
    >>> ring = Ring(("x", "y", "z"))
    >>> ring.n
    3
    >>> ring.index("y")
    1
    """

    variables: Tuple[str, ...]

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        if not variables:
            raise MonomialIdealError("a ring needs at least one variable")
        for name in variables:
            if not isinstance(name, str) or not _IDENTIFIER.fullmatch(name):
                raise MonomialIdealError(f"invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise MonomialIdealError(f"duplicate variable names in {variables}")

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        """Return the coordinate of variable ``name``."""
        try:
            return self.variables.index(name)
        except ValueError:
            raise MonomialIdealError(f"unknown variable {name!r} in ring {self}") from None

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def variable(self, i: int, exponent: int = 1) -> "Monomial":
        """Return the pure power ``x_i^exponent``."""
        exponents = [0] * self.n
        exponents[i] = exponent
        return Monomial(self, tuple(exponents))

    def zero_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, ())

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, (self.one(),))

    def __str__(self) -> str:
        return ", ".join(self.variables)


@dataclass(frozen=True)
class Monomial:
    """A monomial as a dense exponent vector over a :class:`Ring`.

    Parameters
    ----------
    ring : Ring
        The ambient ring.
    exponents : Sequence[int]
        One non-negative exponent per ring variable.

    Raises
    ------
    MonomialIdealError
        On a length mismatch or a negative exponent.
    ExponentOverflowError
        If an exponent exceeds :data:`MAX_EXPONENT`.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> u = Monomial(ring, (2, 1))
    >>> u.degree
    3
    >>> (u * u).exponents
    (4, 2)
    """

    ring: Ring
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exponents)
        if len(exponents) != self.ring.n:
            raise MonomialIdealError(
                f"monomial has {len(exponents)} exponents, ring {self.ring} has {self.ring.n} variables"
            )
        for e in exponents:
            if e < 0:
                raise MonomialIdealError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> FrozenSet[int]:
        """Indices of the variables dividing this monomial."""
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _check_ring(self.ring, other.ring)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        from .parser import print_canonical
        return print_canonical(self)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held as its minimal generating set 𝒢(I).

    The constructor minimalizes and canonically orders whatever it is given
    (ascending total degree, then lexicographic on exponent vectors), so two
    ideals are equal exactly when their representations are equal. The zero
    ideal has no generators; the unit ideal has the single all-zero one.

    Parameters
    ----------
    ring : Ring
        The ambient ring.
    generators : Sequence[Monomial]
        Any generating set; redundant and duplicate elements are dropped.

    Attributes
    ----------
    matrix : numpy.ndarray
        Read-only ``(len(generators), ring.n)`` int64 exponent matrix.
    fingerprint : str
        SHA-256 hex digest of the canonical serialization.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(ring, [[2, 0], [3, 0], [0, 1]])
    >>> [g.exponents for g in I.generators]
    [(0, 1), (2, 0)]
    >>> Monomial(ring, (5, 0)) in I
    True
    """

    ring: Ring
    generators: Tuple[Monomial, ...] = ()

    def __post_init__(self):
        generators = tuple(self.generators)
        for g in generators:
            _check_ring(self.ring, g.ring)
        rows = _minimal_rows(_rows_of(generators, self.ring.n))
        rows.setflags(write=False)
        object.__setattr__(self, "generators", _monomials_of(self.ring, rows))
        self.__dict__["matrix"] = rows

    @classmethod
    def from_exponents(cls, ring: Ring, rows: Iterable[Sequence[int]]) -> "MonomialIdeal":
        """Build an ideal from raw exponent vectors."""
        return cls(ring, tuple(Monomial(ring, tuple(row)) for row in rows))

    @classmethod
    def _from_canonical(cls, ring: Ring, rows: np.ndarray) -> "MonomialIdeal":
        # rows must already be minimal and canonically ordered
        ideal = object.__new__(cls)
        rows.setflags(write=False)
        object.__setattr__(ideal, "ring", ring)
        object.__setattr__(ideal, "generators", _monomials_of(ring, rows))
        ideal.__dict__["matrix"] = rows
        return ideal

    @cached_property
    def matrix(self) -> np.ndarray:
        return _rows_of(self.generators, self.ring.n)

    @cached_property
    def fingerprint(self) -> str:
        body = ";".join(",".join(str(e) for e in g.exponents) for g in self.generators)
        text = f"{','.join(self.ring.variables)}|{body}"
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit()

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return is_member(m, self)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        from .operators import ideal_sum
        return ideal_sum(self, other)

    def __pow__(self, s: int) -> "MonomialIdeal":
        return power(self, s)

    def __str__(self) -> str:
        from .parser import print_canonical
        return print_canonical(self)


@dataclass(frozen=True)
class MonomialPrime:
    """A monomial prime ideal ``(x_i : i ∈ vars)``.

    Parameters
    ----------
    ring : Ring
        The ambient ring.
    vars : Iterable[int]
        Non-empty set of variable indices; stored sorted.

    Examples
    --------
    >>> ring = Ring(("x", "y", "z"))
    >>> p = MonomialPrime(ring, (1, 0))
    >>> p.vars
    (0, 1)
    >>> p.names
    ('x', 'y')
    """

    ring: Ring
    vars: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(sorted(set(int(i) for i in self.vars)))
        object.__setattr__(self, "vars", indices)
        if not indices:
            raise MonomialIdealError("a monomial prime needs at least one variable")
        if indices[0] < 0 or indices[-1] >= self.ring.n:
            raise MonomialIdealError(f"variable index out of range for ring {self.ring}")

    @classmethod
    def from_names(cls, ring: Ring, names: Iterable[str]) -> "MonomialPrime":
        return cls(ring, tuple(ring.index(name) for name in names))

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> Optional["MonomialPrime"]:
        """Return the prime equal to ``ideal``, or None if it is not a monomial prime."""
        if ideal.is_zero or any(g.degree != 1 for g in ideal.generators):
            return None
        return cls(ideal.ring, tuple(next(iter(g.support)) for g in ideal.generators))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.ring.variables[i] for i in self.vars)

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, tuple(self.ring.variable(i) for i in self.vars))

    def __le__(self, other: "MonomialPrime") -> bool:
        _check_ring(self.ring, other.ring)
        return set(self.vars) <= set(other.vars)

    def __lt__(self, other: "MonomialPrime") -> bool:
        return self <= other and self != other

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.vars), self.vars)

    def __str__(self) -> str:
        from .parser import print_canonical
        return print_canonical(self)


# -----------------------------------------------------------------------------
# helpers on exponent matrices

def _check_ring(a: Ring, b: Ring) -> None:
    if a != b:
        raise RingMismatchError(f"ring mismatch: ({a}) vs ({b})")


def _rows_of(monomials: Sequence[Monomial], n: int) -> np.ndarray:
    return np.array([m.exponents for m in monomials], dtype=np.int64).reshape(-1, n)


def _monomials_of(ring: Ring, rows: np.ndarray) -> Tuple[Monomial, ...]:
    return tuple(Monomial(ring, tuple(row)) for row in rows.tolist())


def _divisible_mask(divisors: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Mark each target row that some divisor row divides componentwise."""
    out = np.zeros(len(targets), dtype=bool)
    if len(divisors) == 0 or len(targets) == 0:
        return out
    step = max(1, _BLOCK_CELLS // (len(divisors) * divisors.shape[1]))
    for start in range(0, len(targets), step):
        block = targets[start:start + step]
        out[start:start + step] = (divisors[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out


def _minimal_rows(rows: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows, deduplicated, in canonical order.

    Distinct monomials of equal degree never divide each other, so rows are
    processed one degree class at a time against everything kept so far.
    """
    n = rows.shape[1]
    if len(rows) == 0:
        return np.empty((0, n), dtype=np.int64)
    rows = np.unique(rows, axis=0)
    degrees = rows.sum(axis=1)
    order = np.lexsort([rows[:, j] for j in reversed(range(n))] + [degrees])
    rows, degrees = rows[order], degrees[order]
    kept = np.empty((0, n), dtype=np.int64)
    for group in np.split(rows, np.flatnonzero(np.diff(degrees)) + 1):
        if len(kept):
            group = group[~_divisible_mask(kept, group)]
        if len(group):
            kept = np.concatenate([kept, group])
    return kept


def _ideal_from_rows(ring: Ring, rows: np.ndarray) -> MonomialIdeal:
    return MonomialIdeal._from_canonical(ring, _minimal_rows(rows.reshape(-1, ring.n)))


def _checked(rows: np.ndarray) -> np.ndarray:
    if rows.size and int(rows.max()) > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent exceeds {MAX_EXPONENT}")
    return rows


# -----------------------------------------------------------------------------
# monomial operations

def gcd(a: Monomial, b: Monomial) -> Monomial:
    """Greatest common divisor, the componentwise minimum of exponents."""
    _check_ring(a.ring, b.ring)
    return Monomial(a.ring, tuple(min(x, y) for x, y in zip(a.exponents, b.exponents)))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    """Least common multiple, the componentwise maximum of exponents."""
    _check_ring(a.ring, b.ring)
    return Monomial(a.ring, tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def divide(a: Monomial, b: Monomial) -> Monomial:
    """Return ``a / b``.

    Raises
    ------
    NotDivisibleError
        If ``b`` does not divide ``a``.

    Examples
    --------
    >>> ring = Ring(("x", "y", "z"))
    >>> divide(Monomial(ring, (2, 1, 3)), Monomial(ring, (0, 1, 3))).exponents
    (2, 0, 0)
    """
    if not b.divides(a):
        raise NotDivisibleError(f"{b} does not divide {a}")
    return Monomial(a.ring, tuple(x - y for x, y in zip(a.exponents, b.exponents)))


# -----------------------------------------------------------------------------
# ideal operations

def minimalize(gens: Iterable[Monomial], ring: Ring) -> MonomialIdeal:
    """Return the ideal generated by ``gens``, keeping only the minimal generators.

    Parameters
    ----------
    gens : Iterable[Monomial]
        Any collection of monomials over ``ring``.
    ring : Ring
        The ambient ring.

    Returns
    -------
    MonomialIdeal
        The ideal with generator set equal to the divisibility-minimal,
        deduplicated elements of ``gens`` in canonical order.

    Raises
    ------
    RingMismatchError
        If some monomial lives in another ring.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = minimalize([Monomial(ring, (2, 0)), Monomial(ring, (3, 0)), Monomial(ring, (0, 1))], ring)
    >>> len(I)
    2
    >>> minimalize([], ring).is_zero
    True
    """
    return MonomialIdeal(ring, tuple(gens))


def is_member(m: Monomial, ideal: MonomialIdeal) -> bool:
    """True iff some generator of ``ideal`` divides ``m``."""
    _check_ring(m.ring, ideal.ring)
    target = np.array([m.exponents], dtype=np.int64)
    return bool(_divisible_mask(ideal.matrix, target)[0])


def contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Return True iff ``J ⊆ I``.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(ring, [[1, 0]])
    >>> contains(I, ring.zero_ideal()), contains(I, ring.unit_ideal())
    (True, False)
    """
    _check_ring(I.ring, J.ring)
    return bool(_divisible_mask(I.matrix, J.matrix).all())


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Ideal equality; by canonicity this is equality of generator lists."""
    _check_ring(I.ring, J.ring)
    return I.generators == J.generators


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Return ``I·J``, minimalized from all pairwise generator products.

    Raises
    ------
    ExponentOverflowError
        If a product exponent exceeds :data:`MAX_EXPONENT`.
    """
    _check_ring(I.ring, J.ring)
    n = I.ring.n
    if I.is_zero or J.is_zero:
        return I.ring.zero_ideal()
    sums = (I.matrix[:, None, :] + J.matrix[None, :, :]).reshape(-1, n)
    return _ideal_from_rows(I.ring, _checked(sums))


def power(I: MonomialIdeal, s: int, cache: Optional["PowerCache"] = None) -> MonomialIdeal:
    """Return ``I^s``.

    Powers are built incrementally as ``I^s = I^{s-1}·I`` and memoized per
    ``(fingerprint, s)`` in ``cache`` (the process-wide default cache when
    omitted), so repeated scans over the same ideal reuse work.

    Parameters
    ----------
    I : MonomialIdeal
        The base ideal.
    s : int
        Non-negative exponent; ``I^0`` is the unit ideal.
    cache : PowerCache, optional
        Memo to read from and write to.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(ring, [[1, 0], [0, 1]])
    >>> len(power(I, 3))
    4
    >>> power(I, 0).is_unit
    True
    """
    if s < 0:
        raise MonomialIdealError(f"power exponent must be non-negative, got {s}")
    if s == 0:
        return I.ring.unit_ideal()
    if s == 1 or I.is_zero or I.is_unit:
        return I
    if cache is None:
        from .cache import default_power_cache
        cache = default_power_cache()
    return cache.power(I, s)


def colon_by_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """Return ``(I : m)``, generated by ``u / gcd(u, m)`` over ``u ∈ 𝒢(I)``.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(ring, [[2, 1]])
    >>> [g.exponents for g in colon_by_monomial(I, Monomial(ring, (5, 0))).generators]
    [(0, 1)]
    """
    _check_ring(I.ring, m.ring)
    if I.is_zero:
        return I
    shifted = np.maximum(I.matrix - np.array(m.exponents, dtype=np.int64), 0)
    return _ideal_from_rows(I.ring, shifted)


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Return the colon ideal ``(I : J)``.

    Computed as the intersection of ``(I : v)`` over ``v ∈ 𝒢(J)``.

    Raises
    ------
    ZeroIdealError
        If ``J`` is the zero ideal.
    RingMismatchError
        If ``I`` and ``J`` live in different rings.
    """
    _check_ring(I.ring, J.ring)
    if J.is_zero:
        raise ZeroIdealError("colon by the zero ideal is not supported")
    if I.is_zero or J.is_unit:
        return I
    return reduce(intersect, (colon_by_monomial(I, v) for v in J.generators))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Return ``I ∩ J``, minimalized from pairwise generator lcms.

    A generator of one ideal that already lies in the other is itself a
    generator candidate, and every lcm it takes part in is a multiple of it,
    so lcms are only formed between the remaining generators.

    Examples
    --------
    >>> ring = Ring(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(ring, [[1, 0]])
    >>> J = MonomialIdeal.from_exponents(ring, [[0, 1]])
    >>> [g.exponents for g in intersect(I, J).generators]
    [(1, 1)]
    """
    _check_ring(I.ring, J.ring)
    if I.is_zero or J.is_unit:
        return I
    if J.is_zero or I.is_unit:
        return J
    n = I.ring.n
    a, b = I.matrix, J.matrix
    a_in_j = _divisible_mask(b, a)
    b_in_i = _divisible_mask(a, b)
    rest_a, rest_b = a[~a_in_j], b[~b_in_i]
    pieces = [a[a_in_j], b[b_in_i]]
    if len(rest_a) and len(rest_b):
        step = max(1, _BLOCK_CELLS // (len(rest_b) * n))
        for start in range(0, len(rest_a), step):
            block = np.maximum(rest_a[start:start + step, None, :], rest_b[None, :, :])
            pieces.append(np.unique(block.reshape(-1, n), axis=0))
    return _ideal_from_rows(I.ring, np.concatenate(pieces))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    """Return ``√I``: squarefree parts of the generators, minimalized.

    Examples
    --------
    >>> ring = Ring(("x", "y", "z"))
    >>> I = MonomialIdeal.from_exponents(ring, [[3, 0, 0], [0, 3, 0], [0, 0, 1]])
    >>> len(radical(I))
    3
    """
    return _ideal_from_rows(I.ring, (I.matrix > 0).astype(np.int64))


def support(obj: Union[Monomial, MonomialIdeal]) -> FrozenSet[int]:
    """Variable indices dividing a monomial, or the union over an ideal's generators."""
    if isinstance(obj, Monomial):
        return obj.support
    return frozenset(int(i) for i in np.flatnonzero(obj.matrix.any(axis=0)))
