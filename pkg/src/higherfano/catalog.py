"""Polarized-pair catalog: divisor/curve lattices, cones, and the twist test.

Each PolarizedPair stores a polarized variety (Y, L) through its numerical
lattice: a divisor basis, a curve basis, the intersection pairing between
them, the canonical class, the polarization, and generators of the nef and
Mori cones.  Ampleness is decided by pairing against the Mori generators
(the nef cone is dual to the Mori cone); no general positivity algorithm is
involved, since every catalog entry has a classical finite cone description.

The `structure` tag records how the pair was built (product, blowup, divisor
in a product, ...).  It is honest catalog data and it is needed: the pairs
P^m x Q^(m+1) and P(T_(P^(m+1))) carry identical lattices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

CATALOG_VERSION = "1"

AMPLE = "AMPLE"
NEF_ONLY = "NEF_ONLY"
NEITHER = "NEITHER"

Vector = tuple[Fraction, ...]


def _vec(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


class UnsupportedPairError(ValueError):
    """Requested parameters outside the range where the stored cone data is valid."""


class NoMatchError(ValueError):
    """classify_pair found no matching case; would contradict the classification."""


@dataclass(frozen=True)
class PolarizedPair:
    label: str
    dim: int
    divisor_basis: tuple[str, ...]
    curve_basis: tuple[str, ...]
    pairing: tuple[Vector, ...]  # rows indexed by divisors, columns by curves
    K: Vector
    L: Vector
    nef_generators: tuple[Vector, ...]
    mori_generators: tuple[Vector, ...]
    structure: str

    @property
    def picard_rank(self) -> int:
        return len(self.divisor_basis)

    def intersect(self, divisor: Sequence, curve: Sequence) -> Fraction:
        divisor, curve = _vec(divisor), _vec(curve)
        return sum(
            divisor[i] * self.pairing[i][j] * curve[j]
            for i in range(len(self.divisor_basis))
            for j in range(len(self.curve_basis))
        )

    def degrees_on_mori(self, divisor: Sequence) -> tuple[Fraction, ...]:
        return tuple(self.intersect(divisor, r) for r in self.mori_generators)

    @property
    def pseudoindex(self) -> Fraction:
        return min(self.degrees_on_mori([-x for x in self.K]))

    def is_ample(self, divisor: Sequence) -> bool:
        return all(v > 0 for v in self.degrees_on_mori(divisor))

    def is_nef(self, divisor: Sequence) -> bool:
        return all(v >= 0 for v in self.degrees_on_mori(divisor))

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "dim": self.dim,
            "picard_rank": self.picard_rank,
            "structure": self.structure,
            "divisor_basis": list(self.divisor_basis),
            "curve_basis": list(self.curve_basis),
            "pairing": [[str(x) for x in row] for row in self.pairing],
            "K": [str(x) for x in self.K],
            "L": [str(x) for x in self.L],
            "nef_generators": [[str(x) for x in v] for v in self.nef_generators],
            "mori_generators": [[str(x) for x in v] for v in self.mori_generators],
            "pseudoindex": str(self.pseudoindex),
        }


# -- operations ---------------------------------------------------------------


def twist_class(pair: PolarizedPair) -> Vector:
    """-2K - dim * L in divisor coordinates."""
    return tuple(-2 * k - pair.dim * l for k, l in zip(pair.K, pair.L))


def positivity_of_twist(pair: PolarizedPair) -> str:
    """AMPLE / NEF_ONLY / NEITHER for -2K - dim*L, by pairing with the Mori generators."""
    values = pair.degrees_on_mori(twist_class(pair))
    if all(v > 0 for v in values):
        return AMPLE
    if all(v >= 0 for v in values):
        return NEF_ONLY
    return NEITHER


def extremal_L_degrees(pair: PolarizedPair) -> tuple[Fraction, ...]:
    """The polarization paired with each Mori generator."""
    return pair.degrees_on_mori(pair.L)


# -- constructors --------------------------------------------------------------


def pair_projective_space(d: int, polarization_degree: int = 1) -> PolarizedPair:
    """(P^d, O(m)): Picard rank one, lines generate the Mori cone."""
    if d < 1:
        raise UnsupportedPairError("projective space pair needs d >= 1")
    return PolarizedPair(
        label=f"P{d}(O{polarization_degree})",
        dim=d,
        divisor_basis=("h",),
        curve_basis=("l",),
        pairing=(_vec([1]),),
        K=_vec([-(d + 1)]),
        L=_vec([polarization_degree]),
        nef_generators=(_vec([1]),),
        mori_generators=(_vec([1]),),
        structure="projective_space",
    )


def pair_quadric(d: int) -> PolarizedPair:
    """(Q^d, O(1)); Q^1 is the conic (P^1, O(2)) and Q^2 is (P^1 x P^1, O(1,1))."""
    if d < 1:
        raise UnsupportedPairError("quadric pair needs d >= 1")
    if d == 1:
        base = pair_projective_space(1, polarization_degree=2)
        return _relabel(base, "Q1(O1)")
    if d == 2:
        base = pair_product(pair_projective_space(1), pair_projective_space(1))
        return _relabel(base, "Q2(O1)")
    return PolarizedPair(
        label=f"Q{d}(O1)",
        dim=d,
        divisor_basis=("h",),
        curve_basis=("l",),
        pairing=(_vec([1]),),
        K=_vec([-d]),
        L=_vec([1]),
        nef_generators=(_vec([1]),),
        mori_generators=(_vec([1]),),
        structure="quadric",
    )


def _relabel(pair: PolarizedPair, label: str) -> PolarizedPair:
    return PolarizedPair(
        label=label,
        dim=pair.dim,
        divisor_basis=pair.divisor_basis,
        curve_basis=pair.curve_basis,
        pairing=pair.pairing,
        K=pair.K,
        L=pair.L,
        nef_generators=pair.nef_generators,
        mori_generators=pair.mori_generators,
        structure=pair.structure,
    )


def pair_product(a: PolarizedPair, b: PolarizedPair, label: str | None = None) -> PolarizedPair:
    """Product polarized pair: lattices concatenate, cones multiply."""
    ra, rb = a.picard_rank, b.picard_rank
    ca, cb = len(a.curve_basis), len(b.curve_basis)

    def pad_div(v: Vector, left: bool) -> Vector:
        return v + (Fraction(0),) * rb if left else (Fraction(0),) * ra + v

    def pad_cur(v: Vector, left: bool) -> Vector:
        return v + (Fraction(0),) * cb if left else (Fraction(0),) * ca + v

    pairing = tuple(row + (Fraction(0),) * cb for row in a.pairing) + tuple(
        (Fraction(0),) * ca + row for row in b.pairing
    )
    if label is None:
        pol = ",".join(str(x) for x in a.L + b.L)
        core_a = a.label.split("(")[0]
        core_b = b.label.split("(")[0]
        label = f"{core_a}x{core_b}({pol})"
    return PolarizedPair(
        label=label,
        dim=a.dim + b.dim,
        divisor_basis=tuple(f"{x}.1" for x in a.divisor_basis) + tuple(f"{x}.2" for x in b.divisor_basis),
        curve_basis=tuple(f"{x}.1" for x in a.curve_basis) + tuple(f"{x}.2" for x in b.curve_basis),
        pairing=pairing,
        K=a.K + b.K,
        L=a.L + b.L,
        nef_generators=tuple(pad_div(v, True) for v in a.nef_generators)
        + tuple(pad_div(v, False) for v in b.nef_generators),
        mori_generators=tuple(pad_cur(v, True) for v in a.mori_generators)
        + tuple(pad_cur(v, False) for v in b.mori_generators),
        structure="product",
    )


def pair_linear_blowup(ambient_dim: int, center_dim: int, label: str | None = None) -> PolarizedPair:
    """Blowup of P^N along a linear P^s, polarized by 2H - E.

    Divisor basis (H, E); curve basis (l, e) with l a general line and e a
    line in a fiber of the exceptional divisor; H.l = 1, E.e = -1.
    Mori generators: e and the strict transform l - e of a line meeting the
    center.  Nef generators: H and H - E (the two contractions).
    """
    n, s = ambient_dim, center_dim
    if not 0 <= s <= n - 2:
        raise UnsupportedPairError("blowup center must have codimension >= 2")
    codim = n - s
    if label is None:
        label = f"BlP{s}(P{n})(2H-E)"
    return PolarizedPair(
        label=label,
        dim=n,
        divisor_basis=("H", "E"),
        curve_basis=("l", "e"),
        pairing=(_vec([1, 0]), _vec([0, -1])),
        K=_vec([-(n + 1), codim - 1]),
        L=_vec([2, -1]),
        nef_generators=(_vec([1, 0]), _vec([1, -1])),
        mori_generators=(_vec([1, -1]), _vec([0, 1])),
        structure="blowup",
    )


def pair_divisor_11(a: int, b: int, label: str | None = None) -> PolarizedPair:
    """Smooth divisor of type (1,1) in P^a x P^b with the restricted O(1,1).

    For a = b = 1 the divisor is a conic, i.e. (P^1, O(2)).
    """
    if a < 1 or b < 1:
        raise UnsupportedPairError("divisor pair needs positive-dimensional factors")
    if a == 1 and b == 1:
        base = pair_projective_space(1, polarization_degree=2)
        return _relabel(base, label or "D11(P1xP1)")
    return PolarizedPair(
        label=label or f"D11(P{a}xP{b})",
        dim=a + b - 1,
        divisor_basis=("h1", "h2"),
        curve_basis=("l1", "l2"),
        pairing=(_vec([1, 0]), _vec([0, 1])),
        K=_vec([-a, -b]),
        L=_vec([1, 1]),
        nef_generators=(_vec([1, 0]), _vec([0, 1])),
        mori_generators=(_vec([1, 0]), _vec([0, 1])),
        structure="divisor_in_product",
    )


def pair_case(case: str, m: int) -> PolarizedPair:
    """The five exceptional pairs, parametrized by m >= 1.

    (a) P^m x P^m, O(1,1)              d = 2m
    (b) P^(m+1) x P^m, O(1,1)          d = 2m+1
    (c) P(O(2) + O(1)^m) over P^(m+1)  d = 2m+1  (blowup of P^(2m+1) along P^(m-1))
    (d) P^m x Q^(m+1), O(1,1)          d = 2m+1
    (e) P(T) over P^(m+1), O(1)        d = 2m+1  ((1,1)-divisor in P^(m+1) x P^(m+1))
    """
    if m < 1:
        raise UnsupportedPairError("exceptional pairs need m >= 1")
    if case == "a":
        return pair_product(pair_projective_space(m), pair_projective_space(m))
    if case == "b":
        return pair_product(pair_projective_space(m + 1), pair_projective_space(m))
    if case == "c":
        return pair_linear_blowup(2 * m + 1, m - 1, label=f"P_P{m+1}(O2+O1^{m})(OP1)")
    if case == "d":
        return pair_product(pair_projective_space(m), pair_quadric(m + 1))
    if case == "e":
        return pair_divisor_11(m + 1, m + 1, label=f"P_P{m+1}(T)(OP1)")
    raise ValueError(f"unknown case {case!r}")


# -- classification -------------------------------------------------------------


def _equivalent(p: PolarizedPair, q: PolarizedPair) -> bool:
    """Same lattice data up to permutations of the stored bases, same structure."""
    if (
        p.dim != q.dim
        or p.picard_rank != q.picard_rank
        or len(p.curve_basis) != len(q.curve_basis)
        or p.structure != q.structure
    ):
        return False
    rho, nc = p.picard_rank, len(p.curve_basis)
    for dp in permutations(range(rho)):
        if tuple(q.K[i] for i in dp) != p.K or tuple(q.L[i] for i in dp) != p.L:
            continue
        for cp in permutations(range(nc)):
            if any(
                q.pairing[dp[i]][cp[j]] != p.pairing[i][j]
                for i in range(rho)
                for j in range(nc)
            ):
                continue
            nef_q = {tuple(v[i] for i in dp) for v in q.nef_generators}
            mori_q = {tuple(v[j] for j in cp) for v in q.mori_generators}
            if nef_q == set(p.nef_generators) and mori_q == set(p.mori_generators):
                return True
    return False


def classify_pair(pair: PolarizedPair) -> tuple[str, int]:
    """Match a pair against the exceptional cases (a)-(e); returns (case, m).

    Preconditions: Picard rank >= 2 and an ample twist.  Raises NoMatchError
    if nothing matches (which would contradict the classification).
    """
    if pair.picard_rank < 2:
        raise ValueError("classification applies to Picard rank >= 2")
    if positivity_of_twist(pair) != AMPLE:
        raise ValueError("classification applies to pairs with ample twist")
    candidates: list[tuple[str, int]] = []
    if pair.dim % 2 == 0:
        candidates.append(("a", pair.dim // 2))
    else:
        m = (pair.dim - 1) // 2
        candidates += [("b", m), ("c", m), ("d", m), ("e", m)]
    for case, m in candidates:
        if m < 1:
            continue
        if _equivalent(pair, pair_case(case, m)):
            return case, m
    raise NoMatchError(f"pair {pair.label} matches none of the cases (a)-(e)")


# -- the static catalog ----------------------------------------------------------


def catalog_entries() -> tuple[PolarizedPair, ...]:
    """The versioned static catalog used by the verification suite."""
    pairs: list[PolarizedPair] = []
    for d in range(1, 9):
        pairs.append(pair_projective_space(d, 1))
        pairs.append(pair_projective_space(d, 2))
    pairs.append(pair_projective_space(1, 3))
    for d in range(3, 9):
        pairs.append(pair_quadric(d))
    for case in "abcde":
        for m in range(1, 7):
            pairs.append(pair_case(case, m))
    # minimal-family pairs of hyperplane sections of Grassmannians
    for n in range(4, 11):
        for k in range(2, n // 2 + 1):
            pairs.append(pair_divisor_11(k - 1, n - k - 1))
    # minimal-family pairs of orthogonal Grassmannians (quadric factor of dim >= 2)
    for n in range(8, 15):
        for k in range(2, (n - 1) // 2):
            if 2 * k + 2 < n and n - 2 * k - 2 >= 2:
                pairs.append(pair_product(pair_projective_space(k - 1), pair_quadric(n - 2 * k - 2)))
    # dedupe by label, preserving order
    seen: dict[str, PolarizedPair] = {}
    for p in pairs:
        seen.setdefault(p.label, p)
    return tuple(seen.values())


def catalog_to_json() -> str:
    """Serialize the static catalog (exact integers/rationals as strings)."""
    doc = {
        "catalog_version": CATALOG_VERSION,
        "pairs": [p.to_dict() for p in catalog_entries()],
    }
    return json.dumps(doc, indent=2, sort_keys=True)
