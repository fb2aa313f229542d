"""Fields, places, and central simple algebras via Brauer invariants.

A central simple algebra Mat_m(D) is described by its capacity m and
the class of D: a single invariant in Q/Z over a local field, or a
finite family of local invariants summing to 0 in Q/Z over a global
field.  The index d is the denominator (local) or the lcm of the
denominators (global).

Number fields are never constructed.  An abstract monic irreducible p
carries its degree and, per place v of the base, the multiset of local
degrees [F_{p,w} : F_v] of the places w of F_p above v; this is exactly
the data needed to compute

    delta_p = index of D base-changed to F_p,

locally as d / gcd(d, deg p) and globally as an lcm of local indices of
scaled invariants.  delta_p is the scaling factor of the transfer map
and the weight in the mass identity classifying conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    InvalidBrauerClassError,
    MissingSplittingDataError,
)

REAL = "real"
COMPLEX = "complex"
FINITE = "finite"


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, n + 1):
        if p * p > n:
            return True  # n itself is prime
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return False


@dataclass(frozen=True)
class Place:
    """A place of the base field.

    Finite places carry the residue cardinality q and the exponent a
    with N(Delta_1) = p^a for the integral model of the rank-one
    algebra (0 for an absolutely unramified base).
    """

    label: str
    kind: str
    q: int | None = None
    disc_exp: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in (REAL, COMPLEX, FINITE):
            raise InvalidBrauerClassError(f"unknown place kind {self.kind!r}")
        if self.kind == FINITE:
            if self.q is None or not _is_prime_power(self.q):
                raise InvalidBrauerClassError(
                    f"finite place {self.label!r} needs a prime-power q, got {self.q}")
            if Fraction(self.disc_exp) < 0:
                raise InvalidBrauerClassError("disc_exp must be >= 0")
        object.__setattr__(self, "disc_exp", Fraction(self.disc_exp))


@dataclass(frozen=True)
class FieldSpec:
    """A local field (one place) or a global field (its listed places).

    Places not listed in a global spec implicitly carry invariant 0 and
    never need splitting data.
    """

    kind: str  # "local" | "global"
    places: tuple[Place, ...]

    def __post_init__(self):
        if self.kind not in ("local", "global"):
            raise InvalidBrauerClassError(f"unknown field kind {self.kind!r}")
        if self.kind == "local" and len(self.places) != 1:
            raise InvalidBrauerClassError("a local field has exactly one place")
        if self.kind == "global" and not self.places:
            raise InvalidBrauerClassError("a global field lists at least one place")
        labels = [p.label for p in self.places]
        if len(set(labels)) != len(labels):
            raise InvalidBrauerClassError("place labels must be distinct")

    def place(self, label: str) -> Place:
        for p in self.places:
            if p.label == label:
                return p
        raise InvalidBrauerClassError(f"no place labelled {label!r}")


def local_field(place: Place) -> FieldSpec:
    return FieldSpec("local", (place,))


def global_field(*places: Place) -> FieldSpec:
    return FieldSpec("global", tuple(places))


@dataclass(frozen=True)
class LocalBrauerClass:
    """An element of Q/Z, stored as a reduced rational in [0, 1)."""

    invariant: Fraction

    def __post_init__(self):
        object.__setattr__(self, "invariant", Fraction(self.invariant) % 1)

    @property
    def index(self) -> int:
        return self.invariant.denominator

    def restrict(self, g: int) -> "LocalBrauerClass":
        """Invariant of the base change along a degree-g extension."""
        if g < 1:
            raise ValueError("extension degree must be >= 1")
        return LocalBrauerClass(self.invariant * g)


SPLIT_LOCAL = LocalBrauerClass(Fraction(0))


def _check_arch(place: Place, inv: LocalBrauerClass):
    if place.kind == REAL and inv.invariant not in (Fraction(0), Fraction(1, 2)):
        raise InvalidBrauerClassError(
            f"real place {place.label!r} admits invariants 0 and 1/2 only")
    if place.kind == COMPLEX and inv.invariant != 0:
        raise InvalidBrauerClassError(
            f"complex place {place.label!r} admits invariant 0 only")


@dataclass(frozen=True)
class BrauerClass:
    """A global Brauer class: finitely many nonzero local invariants.

    The local invariants must sum to 0 in Q/Z and obey the archimedean
    constraints; the index is the lcm of the local indices.
    """

    base: FieldSpec
    invariants: tuple[tuple[str, LocalBrauerClass], ...]

    def __init__(self, base: FieldSpec, invariants):
        if base.kind != "global":
            raise InvalidBrauerClassError("BrauerClass needs a global base field")
        if isinstance(invariants, dict):
            invariants = invariants.items()
        cleaned = []
        for label, inv in sorted(invariants):
            if not isinstance(inv, LocalBrauerClass):
                inv = LocalBrauerClass(Fraction(inv))
            if inv.invariant == 0:
                continue
            _check_arch(base.place(label), inv)
            cleaned.append((label, inv))
        total = sum((inv.invariant for _, inv in cleaned), Fraction(0))
        if total % 1 != 0:
            raise InvalidBrauerClassError(
                f"local invariants must sum to 0 in Q/Z, got {total % 1}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "invariants", tuple(cleaned))

    @property
    def index(self) -> int:
        return lcm(*(inv.index for _, inv in self.invariants)) if self.invariants else 1

    def invariant_at(self, label: str) -> LocalBrauerClass:
        self.base.place(label)  # raises on unknown labels
        for lab, inv in self.invariants:
            if lab == label:
                return inv
        return SPLIT_LOCAL


def split_class(base: FieldSpec) -> BrauerClass:
    return BrauerClass(base, {})


@dataclass(frozen=True)
class IrreducibleSpec:
    """An abstract monic irreducible polynomial over the base field.

    ``splitting`` maps a place label to the multiset of local degrees
    [F_{p,w} : F_v] over that place (they sum to the degree).  The
    optional ``coefficients`` are c_0, ..., c_{g-1} of the monic
    polynomial, used only by the split-case oracle.
    """

    label: str
    degree: int
    splitting: tuple[tuple[str, tuple[int, ...]], ...] = ()
    coefficients: tuple[Fraction, ...] | None = None

    def __init__(self, label, degree, splitting=None, coefficients=None):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        entries = []
        for place_label, degs in sorted((splitting or {}).items()) \
                if isinstance(splitting, dict) else sorted(splitting or ()):
            degs = tuple(sorted(int(d) for d in degs))
            if any(d < 1 for d in degs):
                raise ValueError("local degrees must be positive")
            if sum(degs) != degree:
                raise ValueError(
                    f"local degrees over {place_label!r} must sum to deg = {degree}")
            entries.append((place_label, degs))
        if coefficients is not None:
            coefficients = tuple(Fraction(c) for c in coefficients)
            if len(coefficients) != degree:
                raise ValueError("need exactly deg coefficients c_0..c_{g-1}")
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "degree", int(degree))
        object.__setattr__(self, "splitting", tuple(entries))
        object.__setattr__(self, "coefficients", coefficients)

    def local_degrees(self, place_label: str) -> tuple[int, ...] | None:
        for lab, degs in self.splitting:
            if lab == place_label:
                return degs
        return None

    def validate_against(self, base: FieldSpec):
        """Archimedean sanity of the splitting data."""
        for lab, degs in self.splitting:
            place = base.place(lab)
            if place.kind == COMPLEX and any(d != 1 for d in degs):
                raise InvalidBrauerClassError(
                    f"complex place {lab!r} admits local degrees 1 only")
            if place.kind == REAL and any(d not in (1, 2) for d in degs):
                raise InvalidBrauerClassError(
                    f"real place {lab!r} admits local degrees 1 and 2 only")


def index(b: BrauerClass | LocalBrauerClass | int) -> int:
    """Index of a Brauer class (lcm of local indices in the global case)."""
    if isinstance(b, int):
        return b
    return b.index


def restrict_invariant(inv: LocalBrauerClass, g: int) -> LocalBrauerClass:
    """Invariant multiplied by the extension degree, reduced mod 1."""
    return inv.restrict(g)


def local_delta(d: int, g: int) -> int:
    """Index of D base-changed along a degree-g extension of a local field:
    d / gcd(d, g), by local class field theory."""
    if d < 1 or g < 1:
        raise ValueError("d and g must be >= 1")
    return d // gcd(d, g)


def capacity(b: LocalBrauerClass | int, g: int) -> int:
    """Capacity of D base-changed along a degree-g local extension:
    gcd(d, g), the complement of local_delta."""
    return gcd(index(b), g)


def global_delta(b: BrauerClass, p: IrreducibleSpec) -> int:
    """Index of D over the global field F_p = F[T]/(p).

    The lcm, over the places w of F_p, of the local indices; computed
    from the splitting data of p at every place where b is nonzero.
    """
    delta = 1
    for label, inv in b.invariants:
        degs = p.local_degrees(label)
        if degs is None:
            raise MissingSplittingDataError(
                f"irreducible {p.label!r} lacks splitting data at place "
                f"{label!r} where the class is nonzero")
        for g in degs:
            delta = lcm(delta, inv.restrict(g).index)
    return delta


@dataclass(frozen=True)
class CSAAlgebra:
    """Mat_m(D): capacity m and the (local or global) class of D."""

    m: int
    brauer: BrauerClass | LocalBrauerClass = field(default=SPLIT_LOCAL)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("capacity m must be >= 1")

    @property
    def index(self) -> int:
        return self.brauer.index

    @property
    def degree(self) -> int:
        return self.m * self.index

    @property
    def is_split(self) -> bool:
        return self.index == 1

    @property
    def is_global(self) -> bool:
        return isinstance(self.brauer, BrauerClass)

    def delta(self, p: IrreducibleSpec) -> int:
        """delta_p = index of D over F_p, local or global as appropriate."""
        if self.is_global:
            return global_delta(self.brauer, p)
        return local_delta(self.brauer.index, p.degree)

    def split_form(self) -> "CSAAlgebra":
        """The quasi-split inner form Mat_{md}(F) over the same base."""
        if self.is_global:
            return CSAAlgebra(self.degree, split_class(self.brauer.base))
        return CSAAlgebra(self.degree, SPLIT_LOCAL)
