"""Exact homogeneous quasi-symmetric and cyclic quasi-symmetric functions.

The monomial basis is the canonical internal representation. A ``QSym``
of degree n stores a sparse map from subsets of [n-1] to integer
coefficients; a ``CQSym`` maps canonical cyclic subset classes in [n] to
integers. Fundamental bases, cyclic bases and the truncated-polynomial
oracle are views and constructors on top of these.

All coefficients are exact Python integers.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from math import comb
from typing import Iterable, Iterator, Mapping

from .setcomp import (
    Composition,
    canonical_subset_class,
    phi,
    phi_inv,
    psi_preimage,
    shift_set,
    subset_class_members,
)


class NotCyclicError(ValueError):
    """A quasi-symmetric function does not lie in cQSym."""


def _clean(terms: Mapping[frozenset, int]) -> dict[frozenset, int]:
    return {k: v for k, v in terms.items() if v != 0}


def quasi_shuffle(alpha: Composition, beta: Composition) -> Iterator[Composition]:
    """Overlapping shuffles of two compositions, with multiplicity."""
    if not alpha:
        yield beta
        return
    if not beta:
        yield alpha
        return
    for tail in quasi_shuffle(alpha[1:], beta):
        yield (alpha[0],) + tail
    for tail in quasi_shuffle(alpha, beta[1:]):
        yield (beta[0],) + tail
    for tail in quasi_shuffle(alpha[1:], beta[1:]):
        yield (alpha[0] + beta[0],) + tail


class QSym:
    """Homogeneous degree-n quasi-symmetric function in the monomial basis."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[frozenset, int]):
        ambient = frozenset(range(1, degree))
        for E in terms:
            if not E <= ambient:
                raise ValueError(f"subset {sorted(E)} not inside [{degree - 1}]")
        self.degree = degree
        self.terms = _clean(terms)

    @classmethod
    def zero(cls, degree: int) -> "QSym":
        return cls(degree, {})

    @classmethod
    def unit(cls, coeff: int = 1) -> "QSym":
        return cls(0, {frozenset(): coeff})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QSym)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "QSym") -> "QSym":
        if self.degree != other.degree:
            if not self.terms:
                return other
            if not other.terms:
                return self
            raise ValueError("cannot add elements of different degrees")
        out = dict(self.terms)
        for E, c in other.terms.items():
            out[E] = out.get(E, 0) + c
        return QSym(self.degree, out)

    def __neg__(self) -> "QSym":
        return QSym(self.degree, {E: -c for E, c in self.terms.items()})

    def __sub__(self, other: "QSym") -> "QSym":
        return self + (-other)

    def scale(self, c: int) -> "QSym":
        return QSym(self.degree, {E: c * v for E, v in self.terms.items()})

    def __rmul__(self, c: int) -> "QSym":
        return self.scale(c)

    def __mul__(self, other: "QSym") -> "QSym":
        """Product via the quasi-shuffle of indexing compositions."""
        if isinstance(other, int):
            return self.scale(other)
        n = self.degree + other.degree
        out: dict[frozenset, int] = {}
        for E, a in self.terms.items():
            alpha = phi(E, self.degree)
            for L, b in other.terms.items():
                beta = phi(L, other.degree)
                for gamma in quasi_shuffle(alpha, beta):
                    key, _ = phi_inv(gamma) if gamma else (frozenset(), 0)
                    out[key] = out.get(key, 0) + a * b
        return QSym(n, out)

    def __repr__(self) -> str:
        if not self.terms:
            return f"QSym({self.degree}, 0)"
        parts = [
            f"{c}*M{{{','.join(map(str, sorted(E)))}}}"
            for E, c in sorted(self.terms.items(), key=lambda kv: sorted(kv[0]))
        ]
        return f"QSym({self.degree}, {' + '.join(parts)})"

    def to_fundamental(self) -> dict[frozenset, int]:
        """F-basis coefficients by inclusion-exclusion over supersets."""
        n = self.degree
        rest = frozenset(range(1, n))
        out: dict[frozenset, int] = {}
        for E, c in self.terms.items():
            for extra in _subsets(rest - E):
                L = E | extra
                out[L] = out.get(L, 0) + c * (-1) ** len(extra)
        return _clean(out)

    @classmethod
    def from_fundamental(cls, degree: int, coeffs: Mapping[frozenset, int]) -> "QSym":
        out = cls.zero(degree)
        for E, c in coeffs.items():
            out = out + fundamental(degree, E).scale(c)
        return out

    def specialize_ones(self, m: int) -> int:
        """Value at x_1 = ... = x_m = 1, all other variables 0."""
        total = 0
        for E, c in self.terms.items():
            parts = len(phi(E, self.degree))
            total += c * comb(m, parts)
        return total

    def truncate(self, m: int) -> "TruncPoly":
        """Exact polynomial in m variables; the independent oracle format."""
        out = TruncPoly.zero(m)
        for E, c in self.terms.items():
            alpha = phi(E, self.degree)
            s = len(alpha)
            for idx in itertools.combinations(range(m), s):
                expo = [0] * m
                for pos, a in zip(idx, alpha):
                    expo[pos] = a
                key = tuple(expo)
                out.terms[key] = out.terms.get(key, 0) + c
        out.terms = {k: v for k, v in out.terms.items() if v != 0}
        return out

    def to_json(self, basis: str = "M") -> str:
        if basis == "M":
            terms = self.terms
        elif basis == "F":
            terms = self.to_fundamental()
        else:
            raise ValueError(f"unknown basis {basis!r}")
        payload = {
            "degree": self.degree,
            "basis": basis,
            "terms": [
                {"set": sorted(E), "coeff": c}
                for E, c in sorted(terms.items(), key=lambda kv: sorted(kv[0]))
            ],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, payload: str) -> "QSym":
        data = json.loads(payload)
        coeffs = {frozenset(t["set"]): t["coeff"] for t in data["terms"]}
        if data["basis"] == "M":
            return cls(data["degree"], coeffs)
        if data["basis"] == "F":
            return cls.from_fundamental(data["degree"], coeffs)
        raise ValueError(f"unknown basis {data['basis']!r}")


def _subsets(s: frozenset) -> Iterator[frozenset]:
    items = sorted(s)
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def monomial(n: int, E: Iterable[int]) -> QSym:
    """M_{n,E} for E inside [n-1]."""
    E = frozenset(E)
    phi(E, n)  # range check
    return QSym(n, {E: 1})


def fundamental(n: int, E: Iterable[int]) -> QSym:
    """F_{n,E} = sum of M_{n,L} over supersets L of E in [n-1]."""
    E = frozenset(E)
    phi(E, n)  # range check
    rest = frozenset(range(1, n)) - E
    return QSym(n, {E | extra: 1 for extra in _subsets(rest)})


class CQSym:
    """Homogeneous cyclic quasi-symmetric function in the cyclic monomial basis.

    Term keys are canonical cyclic subset classes in [n] (degree 0 uses the
    empty frozenset as the unit key).
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[frozenset, int]):
        for E in terms:
            if degree == 0:
                if E:
                    raise ValueError("degree-0 element admits only the unit term")
            elif canonical_subset_class(E, degree) != E:
                raise ValueError(f"{sorted(E)} is not a canonical class key")
        self.degree = degree
        self.terms = _clean(terms)

    @classmethod
    def zero(cls, degree: int) -> "CQSym":
        return cls(degree, {})

    @classmethod
    def unit(cls, coeff: int = 1) -> "CQSym":
        return cls(0, {frozenset(): coeff})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CQSym)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "CQSym") -> "CQSym":
        if self.degree != other.degree:
            if not self.terms:
                return other
            if not other.terms:
                return self
            raise ValueError("cannot add elements of different degrees")
        out = dict(self.terms)
        for E, c in other.terms.items():
            out[E] = out.get(E, 0) + c
        return CQSym(self.degree, out)

    def __neg__(self) -> "CQSym":
        return CQSym(self.degree, {E: -c for E, c in self.terms.items()})

    def __sub__(self, other: "CQSym") -> "CQSym":
        return self + (-other)

    def scale(self, c: int) -> "CQSym":
        return CQSym(self.degree, {E: c * v for E, v in self.terms.items()})

    def __rmul__(self, c: int) -> "CQSym":
        return self.scale(c)

    def __mul__(self, other: "CQSym") -> "CQSym":
        """Product in cQSym, computed in QSym and folded back.

        A :class:`NotCyclicError` here signals an internal inconsistency:
        products of cyclic elements are always cyclic.
        """
        if isinstance(other, int):
            return self.scale(other)
        return from_qsym(self.as_qsym() * other.as_qsym())

    def __repr__(self) -> str:
        if not self.terms:
            return f"CQSym({self.degree}, 0)"
        parts = [
            f"{c}*Mcyc{{{','.join(map(str, sorted(E)))}}}"
            for E, c in sorted(self.terms.items(), key=lambda kv: sorted(kv[0]))
        ]
        return f"CQSym({self.degree}, {' + '.join(parts)})"

    def as_qsym(self) -> QSym:
        """Expansion into the monomial basis of QSym."""
        n = self.degree
        if n == 0:
            return QSym.unit(self.terms.get(frozenset(), 0))
        out: dict[frozenset, int] = {}
        for E, c in self.terms.items():
            for L, mult in _class_expansion(E, n).items():
                out[L] = out.get(L, 0) + c * mult
        return QSym(n, out)

    def specialize_ones(self, m: int) -> int:
        return self.as_qsym().specialize_ones(m)

    def truncate(self, m: int) -> "TruncPoly":
        return self.as_qsym().truncate(m)

    def to_json(self) -> str:
        payload = {
            "degree": self.degree,
            "basis": "Mcyc",
            "terms": [
                {"set": sorted(E), "coeff": c}
                for E, c in sorted(self.terms.items(), key=lambda kv: sorted(kv[0]))
            ],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, payload: str) -> "CQSym":
        data = json.loads(payload)
        if data["basis"] != "Mcyc":
            raise ValueError(f"unknown basis {data['basis']!r}")
        return cls(
            data["degree"],
            {frozenset(t["set"]): t["coeff"] for t in data["terms"]},
        )


def _class_expansion(E: frozenset[int], n: int) -> Counter:
    """Monomial expansion multiset of a cyclic monomial class.

    Mcyc_{n,E} is the sum of M_{n,(E-e) ∩ [n-1]} over e in E; equal subsets
    are collected with multiplicity.
    """
    out: Counter = Counter()
    for e in E:
        out[frozenset(x for x in shift_set(E, n, -e) if x != n)] += 1
    return out


def cyclic_monomial(n: int, E: Iterable[int]) -> CQSym:
    """Mcyc_{n,E}; the empty set gives the zero element."""
    E = frozenset(E)
    if not E:
        return CQSym.zero(n)
    if not E <= frozenset(range(1, n + 1)):
        raise ValueError(f"subset {sorted(E)} not contained in [{n}]")
    return CQSym(n, {canonical_subset_class(E, n): 1})


def cyclic_monomial_as_qsym(n: int, E: Iterable[int]) -> QSym:
    """Expansion of Mcyc_{n,E} into monomial quasi-symmetric functions."""
    return cyclic_monomial(n, E).as_qsym()


def cyclic_fundamental(n: int, E: Iterable[int]) -> CQSym:
    """Fcyc_{n,E}: sum of Mcyc_{n,L} over supersets L of E in [n].

    Supersets falling in the same cyclic class accumulate multiplicity.
    """
    E = frozenset(E)
    if not E:
        raise ValueError("Fcyc requires a nonempty index set")
    if not E <= frozenset(range(1, n + 1)):
        raise ValueError(f"subset {sorted(E)} not contained in [{n}]")
    out: dict[frozenset, int] = {}
    for extra in _subsets(frozenset(range(1, n + 1)) - E):
        key = canonical_subset_class(E | extra, n)
        out[key] = out.get(key, 0) + 1
    return CQSym(n, out)


def cyclic_fundamental_via_F(n: int, E: Iterable[int]) -> QSym:
    """Fcyc_{n,E} as a sum of shifted fundamental quasi-symmetric functions."""
    E = frozenset(E)
    if not E:
        raise ValueError("Fcyc requires a nonempty index set")
    out = QSym.zero(n)
    for i in range(1, n + 1):
        shifted = frozenset(x for x in shift_set(E, n, -i) if x != n)
        out = out + fundamental(n, shifted)
    return out


def from_qsym(a: QSym) -> CQSym:
    """Fold a QSym element lying in cQSym into the cyclic monomial basis.

    Raises :class:`NotCyclicError` when coefficients fail the
    class-consistency or divisibility conditions.
    """
    n = a.degree
    if n == 0:
        return CQSym.unit(a.terms.get(frozenset(), 0))
    class_keys = set()
    for L in a.terms:
        subset, _ = psi_preimage(phi(L, n))
        class_keys.add(canonical_subset_class(subset, n))
    coeffs: dict[frozenset, int] = {}
    reconstructed: dict[frozenset, int] = {}
    for key in class_keys:
        expansion = _class_expansion(key, n)
        L0, mult0 = next(iter(expansion.items()))
        c0 = a.terms.get(L0, 0)
        if c0 % mult0 != 0:
            raise NotCyclicError(
                f"coefficient {c0} of M_{{{n},{sorted(L0)}}} is not divisible "
                f"by its class multiplicity {mult0}"
            )
        c = c0 // mult0
        coeffs[key] = c
        for L, mult in expansion.items():
            reconstructed[L] = reconstructed.get(L, 0) + c * mult
    if _clean(reconstructed) != a.terms:
        raise NotCyclicError("coefficients are inconsistent across a cyclic class")
    return CQSym(n, coeffs)


class TruncPoly:
    """Exact polynomial in m variables, sparse map exponent-vector -> int."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[tuple[int, ...], int]):
        self.m = m
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @classmethod
    def zero(cls, m: int) -> "TruncPoly":
        return cls(m, {})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncPoly)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TruncPoly(self.m, out)

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        out: dict[tuple[int, ...], int] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                out[key] = out.get(key, 0) + va * vb
        return TruncPoly(self.m, out)

    def __repr__(self) -> str:
        return f"TruncPoly(m={self.m}, {len(self.terms)} terms)"


def fcyc_pair_oracle(n: int, E: Iterable[int], m: int) -> TruncPoly:
    """Brute-force Fcyc_{n,E} in m variables from its defining pair set.

    Enumerates all (w, k) with w in [m]^n cyclically weakly increasing from
    index k and strict rises at positions of E other than k-1 (mod n).
    """
    E = frozenset(E)
    if m < 1:
        raise ValueError("need at least one variable")
    out = TruncPoly.zero(m)
    for w in itertools.product(range(1, m + 1), repeat=n):
        for k in range(1, n + 1):
            seq = w[k - 1:] + w[: k - 1]
            if any(seq[i] > seq[i + 1] for i in range(n - 1)):
                continue
            skip = k - 1 if k >= 2 else n
            if any(
                w[i - 1] >= w[i % n] for i in E if i != skip
            ):
                continue
            expo = [0] * m
            for x in w:
                expo[x - 1] += 1
            key = tuple(expo)
            out.terms[key] = out.terms.get(key, 0) + 1
    out.terms = {k: v for k, v in out.terms.items() if v != 0}
    return out
