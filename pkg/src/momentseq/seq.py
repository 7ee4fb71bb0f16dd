"""Finite prefixes of real sequences and the combinatorial catalog.

Catalog families (all indexed from ``n = 0``):

==================  =====================================================  ===============
name                recurrence / definition                                claimed support
==================  =====================================================  ===============
catalan             C_{n+1} = C_n * 2(2n+1)/(n+2)                          [0, 4]
catalan_shifted     C_{n+1}                                                [0, 4]
central_binomial    a_{n+1} = a_n * (4n+2)/(n+1)                           [0, 4]
fine                F_0 = 1, F_1 = 0, 2 F_n + F_{n-1} = C_n                 [0, 4]
hexagonal           h_n = sum_k binom(n, k) C_{k+1}   (1, 3, 10, 36, ...)   [1, 5]
delannoy_central    n D_n = 3(2n-1) D_{n-1} - (n-1) D_{n-2}                [3-2√2, 3+2√2]
schroder_large      (n+1) r_n = 3(2n-1) r_{n-1} - (n-2) r_{n-2}             [3-2√2, 3+2√2]
schroder_little     same recurrence, S_0 = S_1 = 1                         [3-2√2, 3+2√2]
geometric(r)        r^n                                                    [r, r]
dirac(xi)           xi^n, the moments of a point mass at xi                [xi, xi]
==================  =====================================================  ===============

The claimed support is metadata carried along with the values; no verifier
reads it. Two of the claims do not survive verification: the Fine numbers
carry an atom at -1/2 (so they are Hamburger but not Stieltjes), and the
little Schröder numbers equal ``r_n/2 + [n = 0]/2``, which puts an atom at
0 outside the claimed interval.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .exact import Scalar, fmt, to_fraction
from .interval import QuadraticInterval


@dataclass(frozen=True)
class SequencePrefix:
    """A non-empty finite prefix ``(alpha_0, ..., alpha_N)``."""

    values: tuple[Fraction, ...]
    claimed_support: Optional[QuadraticInterval] = None
    label: Optional[str] = None
    provenance: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        vals = tuple(to_fraction(v) for v in self.values)
        if not vals:
            raise ValueError("a sequence prefix must be non-empty")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def with_values(self, values: Iterable[Scalar], label: Optional[str] = None, **provenance):
        return SequencePrefix(tuple(values), None, label, dict(provenance))


def as_prefix(alpha: Union[SequencePrefix, Sequence[Scalar]]) -> SequencePrefix:
    return alpha if isinstance(alpha, SequencePrefix) else SequencePrefix(tuple(alpha))


# ---------------------------------------------------------------------------
# catalog

_ZERO_FOUR = QuadraticInterval(2, 2, 1)
_ONE_FIVE = QuadraticInterval(3, 2, 1)
_SURD = QuadraticInterval(3, 2, 2)


def _catalan(n: int) -> list[int]:
    out = [1]
    for k in range(n - 1):
        out.append(out[-1] * 2 * (2 * k + 1) // (k + 2))
    return out


def _central_binomial(n: int) -> list[int]:
    out = [1]
    for k in range(n - 1):
        out.append(out[-1] * (4 * k + 2) // (k + 1))
    return out


def _fine(n: int) -> list[int]:
    cat = _catalan(n)
    out = [1, 0]
    for k in range(2, n):
        out.append((cat[k] - out[k - 1]) // 2)
    return out[:n]


def _hexagonal(n: int) -> list[int]:
    cat = _catalan(n + 1)
    return [sum(math.comb(m, k) * cat[k + 1] for k in range(m + 1)) for m in range(n)]


def _delannoy(n: int) -> list[int]:
    out = [1, 3]
    for k in range(2, n):
        out.append((3 * (2 * k - 1) * out[k - 1] - (k - 1) * out[k - 2]) // k)
    return out[:n]


def _schroder(n: int, first: int) -> list[int]:
    out = [1, first]
    for k in range(2, n):
        out.append((3 * (2 * k - 1) * out[k - 1] - (k - 2) * out[k - 2]) // (k + 1))
    return out[:n]


_FAMILIES = {
    "catalan": (_catalan, _ZERO_FOUR),
    "catalan_shifted": (lambda n: _catalan(n + 1)[1:], _ZERO_FOUR),
    "central_binomial": (_central_binomial, _ZERO_FOUR),
    "fine": (_fine, _ZERO_FOUR),
    "hexagonal": (_hexagonal, _ONE_FIVE),
    "delannoy_central": (_delannoy, _SURD),
    "schroder_large": (lambda n: _schroder(n, 2), _SURD),
    "schroder_little": (lambda n: _schroder(n, 1), _SURD),
}

CATALOG_NAMES = tuple(_FAMILIES) + ("geometric", "dirac")

_PARAM = re.compile(r"^(geometric|dirac)\((.+)\)$")


def catalog(name: str, length: int, param: Optional[Scalar] = None) -> SequencePrefix:
    """First ``length`` terms of a named family.

    ``geometric`` and ``dirac`` take a rational parameter, given either as
    ``param`` or inline as ``"geometric(2)"`` / ``"dirac(1/3)"``.
    """
    if not isinstance(length, int) or length < 1:
        raise ValueError(f"length must be a positive integer, got {length!r}")
    m = _PARAM.match(name.replace(" ", ""))
    if m:
        name, param = m.group(1), m.group(2)
    if name in ("geometric", "dirac"):
        if param is None:
            raise ValueError(f"{name} needs a parameter, e.g. {name}(2)")
        r = to_fraction(param)
        label = f"{name}({fmt(r)})"
        return SequencePrefix(tuple(r ** k for k in range(length)), QuadraticInterval(r, 0, 0), label)
    if name not in _FAMILIES:
        raise ValueError(f"unknown sequence {name!r}; known: {', '.join(CATALOG_NAMES)}")
    gen, support = _FAMILIES[name]
    return SequencePrefix(tuple(gen(length)), support, name)


# ---------------------------------------------------------------------------
# operators


def shift(alpha: SequencePrefix, k: int = 1) -> SequencePrefix:
    """Drop the first ``k`` terms (the shift operator applied ``k`` times)."""
    alpha = as_prefix(alpha)
    if k < 0 or k >= len(alpha):
        raise ValueError(f"cannot shift a prefix of length {len(alpha)} by {k}")
    label = f"E^{k} {alpha.label}" if alpha.label and k else alpha.label
    return SequencePrefix(alpha.values[k:], None, label)


def combine(alpha: SequencePrefix, beta: SequencePrefix, theta: Scalar = 1, mode: str = "linear") -> SequencePrefix:
    """Termwise ``alpha + theta*beta`` (``mode="linear"``) or ``alpha*beta``
    (``mode="product"``), truncated to the common length."""
    alpha, beta = as_prefix(alpha), as_prefix(beta)
    n = min(len(alpha), len(beta))
    if mode == "linear":
        theta = to_fraction(theta)
        vals = [alpha[i] + theta * beta[i] for i in range(n)]
    elif mode == "product":
        vals = [alpha[i] * beta[i] for i in range(n)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return SequencePrefix(tuple(vals))


def interval_transform(alpha: SequencePrefix, s: Scalar, q: Scalar) -> SequencePrefix:
    """``beta_n = s*alpha_{n+1} - alpha_{n+2} - q*alpha_n``.

    With ``s = a + b`` and ``q = a*b`` this is the sequence whose Hankel
    matrices must be PSD for ``alpha`` to live on ``[a, b]``.
    """
    alpha = as_prefix(alpha)
    if len(alpha) < 3:
        raise ValueError("interval_transform needs at least 3 terms")
    s, q = to_fraction(s), to_fraction(q)
    a = alpha.values
    return SequencePrefix(tuple(s * a[n + 1] - a[n + 2] - q * a[n] for n in range(len(a) - 2)))


# ---------------------------------------------------------------------------
# file formats


def to_json(alpha: SequencePrefix) -> dict:
    obj = {
        "label": alpha.label,
        "values": [fmt(v) for v in alpha.values],
        "support": alpha.claimed_support.to_json() if alpha.claimed_support else None,
    }
    obj.update(alpha.provenance)
    return obj


def from_json(obj: dict) -> SequencePrefix:
    if "values" not in obj:
        raise ValueError("sequence JSON needs a 'values' list")
    support = obj.get("support")
    extra = {k: v for k, v in obj.items() if k not in ("label", "values", "support")}
    return SequencePrefix(
        tuple(to_fraction(v) for v in obj["values"]),
        QuadraticInterval.from_json(support) if support else None,
        obj.get("label"),
        extra,
    )


def parse_plain(text: str) -> SequencePrefix:
    """One integer per line; blank lines and ``#`` comments are skipped."""
    vals = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            vals.append(int(line))
        except ValueError:
            raise ValueError(f"line {lineno}: not an integer: {line!r}") from None
    return SequencePrefix(tuple(vals))


def read_sequence(path: Union[str, Path]) -> SequencePrefix:
    """Read a JSON sequence file, falling back to the plain integer format."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(json.loads(text))
    return parse_plain(text)
