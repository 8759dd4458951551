"""Truncated noncommutative power-series expansion of free-group words.

Substituting x_i -> 1 + X_i and x_i^-1 -> 1 - X_i + X_i^2 - ... +- X_i^D
embeds the free group into the units of the integer series ring truncated
at total degree D. The embedding is injective as soon as D >= |w|, which
gives a computable bi-invariant order: compare the lowest (degree, then
lexicographic) monomial of the expansion minus 1.

Monomials are tuples of variable indices, so X_1 X_2 is (1, 2) and the
constant monomial is ().
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooSmall
from .words import Word, free_reduce

Monomial = tuple[int, ...]
Coefficients = dict[Monomial, int]


@dataclass(frozen=True, eq=True)
class MagnusSeries:
    """An integer polynomial in noncommuting variables, truncated by degree."""

    truncation_degree: int
    coefficients: Coefficients

    def __post_init__(self):
        for mono in self.coefficients:
            if len(mono) > self.truncation_degree:
                raise ValueError(f"monomial {mono} exceeds degree "
                                 f"{self.truncation_degree}")

    def coefficient(self, mono: Monomial) -> int:
        return self.coefficients.get(mono, 0)

    def is_one(self) -> bool:
        return all(c == 0 for m, c in self.coefficients.items() if m) \
            and self.coefficient(()) == 1

    def terms(self) -> list[tuple[Monomial, int]]:
        nonzero = [(m, c) for m, c in self.coefficients.items() if c != 0]
        return sorted(nonzero, key=lambda mc: deglex_key(mc[0]))

    def __str__(self) -> str:
        parts = []
        for mono, coeff in self.terms():
            name = "1" if not mono else "".join(f"X{i}" for i in mono)
            parts.append(f"{coeff:+d}*{name}")
        return " ".join(parts) if parts else "0"


def deglex_key(mono: Monomial) -> tuple:
    """Degree first, then lexicographic on the index sequence."""
    return (len(mono), mono)


def series_product(a: Coefficients, b: Coefficients, degree: int) -> Coefficients:
    out: Coefficients = {}
    for m1, c1 in a.items():
        if c1 == 0:
            continue
        for m2, c2 in b.items():
            if c2 == 0 or len(m1) + len(m2) > degree:
                continue
            mono = m1 + m2
            out[mono] = out.get(mono, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0} or {(): 0}


def generator_series(letter: int, degree: int) -> Coefficients:
    """Expansion of a single letter at the given truncation degree."""
    i = abs(letter)
    if letter > 0:
        coeffs: Coefficients = {(): 1}
        if degree >= 1:
            coeffs[(i,)] = 1
        return coeffs
    # geometric series: (1 + X)^-1 truncated
    return {(i,) * k: (-1) ** k for k in range(degree + 1)}


def expand_word(word: Word, degree: int) -> Coefficients:
    result: Coefficients = {(): 1}
    for letter in word:
        result = series_product(result, generator_series(letter, degree), degree)
    return result


def magnus_expand(word: Word, degree: int) -> MagnusSeries:
    """Expand a reduced word at truncation degree >= |w|.

    The degree bound keeps the expansion injective; shorter truncations are
    refused with DegreeTooSmall.
    """
    if degree < 1:
        raise ValueError("truncation degree must be positive")
    if len(word) > degree:
        raise DegreeTooSmall(f"word of length {len(word)} needs degree >= "
                             f"{len(word)}, got {degree}")
    coeffs = expand_word(word, degree)
    coeffs.setdefault((), 1)
    return MagnusSeries(degree, coeffs)


def leading_term(word: Word) -> tuple[Monomial, int] | None:
    """Deglex-least nonzero monomial of (expansion - 1), or None for identity.

    Expands at increasing truncation degree: coefficients of degree <= D are
    exact in a degree-D expansion, so the first degree showing a nonzero
    non-constant term pins down the global deglex minimum. This matches
    expanding once at D = max(|w|, 1) but is much cheaper, since most words
    already separate at degree 1 (their exponent vector).
    """
    reduced = free_reduce(word)
    if not reduced:
        return None
    for degree in range(1, len(reduced) + 1):
        coeffs = expand_word(reduced, degree)
        candidates = [(m, c) for m, c in coeffs.items() if m and c != 0]
        if candidates:
            return min(candidates, key=lambda mc: deglex_key(mc[0]))
    raise AssertionError(f"expansion of reduced word {reduced} vanished at "
                         f"degree {len(reduced)}; injectivity violated")
