"""Global numeric tolerances.

Defaults are chosen so that every derived golden value in the test suite
passes with double precision: entrywise equality at 1e-12, positive
semidefiniteness slack at 1e-10.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    eq: float = 1e-12        # entrywise equality, trace normalization
    psd: float = 1e-10       # slack on smallest eigenvalues
    herm: float = 1e-10      # hermiticity slack accepted by the eigensolver
    commute: float = 1e-10   # commutator Frobenius norm threshold


_current = Tolerances()


def tolerances() -> Tolerances:
    """Return the active tolerance set."""
    return _current


def set_tolerances(**kwargs: float) -> Tolerances:
    """Override selected tolerances globally; returns the new set."""
    global _current
    _current = replace(_current, **kwargs)
    return _current
