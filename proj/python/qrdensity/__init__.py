"""Exact and empirical densities of primes whose quadratic residue or
non-residue sets contain prescribed arithmetic-progression unions."""

import json
from fractions import Fraction

try:
    from . import _qrdensity as _impl  # installed layout
except ImportError:  # pragma: no cover - build-tree layout
    import _qrdensity as _impl

DomainError = _impl.DomainError
SizeLimitError = _impl.SizeLimitError
ResourceError = _impl.ResourceError

legendre = _impl.legendre
squarefree_part = _impl.squarefree_part
sieve_primes = _impl.sieve_primes


def _tuple_json(a, b, s):
    return json.dumps({"a": list(a), "b": list(b), "s": s})


def analyze(a, b, s, check=False):
    """Full analysis as a dict; see the ``density`` key for the result."""
    return json.loads(_impl.analyze_json(_tuple_json(a, b, s), check))


def density(a, b, s):
    """Exact density of the all-residue-pattern prime set, as a Fraction."""
    num, log2_den = _impl.density(_tuple_json(a, b, s))
    return Fraction(num, 2**log2_den)


def empirical(a, b, s, bound=1_000_000):
    """Sieve verification report as a dict."""
    return json.loads(_impl.empirical_json(_tuple_json(a, b, s), bound))


def qcount(a, b, s, p, epsilon=1):
    """Count of qualifying progression unions inside [1, p-1]."""
    return json.loads(_impl.qcount_json(_tuple_json(a, b, s), p, epsilon))


def generate(config):
    """Build a tuple from a gap prescription; returns {"a":..,"b":..,"s":..}."""
    return json.loads(_impl.generate_json(json.dumps(config)))


def render(source):
    """ASCII diagram for a tuple dict or a {"gaps": [...], "s": n} dict."""
    return _impl.render(json.dumps(source))


__all__ = [
    "analyze",
    "density",
    "empirical",
    "qcount",
    "generate",
    "render",
    "legendre",
    "squarefree_part",
    "sieve_primes",
    "DomainError",
    "SizeLimitError",
    "ResourceError",
]
