"""Chern characters of a polarized minimal family of rational curves.

Engine for the family-side character formula

    ch_k(H) = sum_{j=0}^{k} A_j * l^j * t_{k+1-j}  -  l^k / k!,

where l is the polarization class, A_j the Todd coefficients, and t_j the
image of the ambient ch_j under the degree-lowering transfer (pull back along
evaluation, push down the universal P^1-bundle).  On classes proportional to
the j-th power of a divisor of fiber degree a, the transfer acts by
a^j * l^(j-1); that is the only case it is defined on here, and the only case
the complete-intersection families need.

The symbolic side re-derives the formula from scratch.  UniversalModel is a
graded model of the total space of the universal P^1-bundle: generators l
(degree 1, pulled back from the family), the section class s (degree 1), and
formal symbols e_j (degree j) standing for the evaluation pullbacks of the
ambient ch_j.  Relations: s^2 = -s*l and s*e_j = 0; every element normalizes
to p(l, e) + q(l)*s.  Pushforward down the bundle lands in FamilyModel, whose
generators are l and symbols t_j (degree j-1); pure powers of l push to zero,
q(l)*s pushes to q(l), and l^a*e_j pushes to l^a*t_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .numeric import Rational, power_sum, todd_coeff
from .rings import GradedClass, projective_space_ring

# -- symbolic universal-family model -----------------------------------------

# keys: (l-exponent, sorted tuple of e-indices, sigma flag in {0, 1})
_UKey = tuple[int, tuple[int, ...], int]
# keys: (l-exponent, sorted tuple of t-indices)
_HKey = tuple[int, tuple[int, ...]]


class UniversalModel:
    """Truncated model of the universal family's total space for given (n, d)."""

    def __init__(self, n: int, d: int, max_degree: int):
        if not 0 <= d <= n - 1:
            raise ValueError(f"need 0 <= d <= n-1, got n={n}, d={d}")
        self.n = n
        self.d = d
        self.max_degree = max_degree
        self.family = FamilyModel(max_degree - 1)

    def key_degree(self, key: _UKey) -> int:
        a, es, s = key
        return a + sum(es) + s

    def zero(self) -> "UClass":
        return UClass(self, {})

    def one(self, c: Rational = 1) -> "UClass":
        return UClass(self, {(0, (), 0): Fraction(c)})

    def ell(self) -> "UClass":
        return UClass(self, {(1, (), 0): Fraction(1)})

    def sigma(self) -> "UClass":
        return UClass(self, {(0, (), 1): Fraction(1)})

    def e(self, j: int) -> "UClass":
        if j < 1:
            raise ValueError("e_j needs j >= 1")
        return UClass(self, {(0, (j,), 0): Fraction(1)})

    # -- geometric series used in the derivation --------------------------

    def exp_of(self, x: "UClass") -> "UClass":
        out = self.one()
        power = self.one()
        for i in range(1, self.max_degree + 1):
            power = power * x
            if power.is_zero():
                break
            out = out + power * Fraction(1, factorial(i))
        return out

    def todd_of(self, x: "UClass") -> "UClass":
        out = self.one()
        power = self.one()
        for i in range(1, self.max_degree + 1):
            power = power * x
            if power.is_zero():
                break
            a = todd_coeff(i)
            if a:
                out = out + power * a
        return out

    def c1_relative_tangent(self) -> "UClass":
        return 2 * self.sigma() + self.ell()

    def tangent_pullback(self, e1_substitution: "UClass | None" = None) -> "UClass":
        """ev^* ch(T_X) = n + sum_j e_j, optionally with e_1 replaced."""
        out = self.one(self.n)
        start = 1
        if e1_substitution is not None:
            out = out + e1_substitution
            start = 2
        for j in range(start, self.max_degree + 1):
            out = out + self.e(j)
        return out

    def ch_o_minus_sigma(self) -> "UClass":
        return self.exp_of(-self.sigma())

    def z_class(self, e1_substitution: "UClass | None" = None) -> "UClass":
        """(ev^* ch(T_X) - ch(T_pi)) * ch(O(-s))."""
        ch_tpi = self.exp_of(self.c1_relative_tangent())
        return (self.tangent_pullback(e1_substitution) - ch_tpi) * self.ch_o_minus_sigma()

    def w_class(self, e1_substitution: "UClass | None" = None) -> "UClass":
        """z_class times the Todd class of the relative tangent bundle."""
        return self.z_class(e1_substitution) * self.todd_of(self.c1_relative_tangent())


class UClass:
    """Element of a UniversalModel, kept in normal form p(l, e) + q(l) s."""

    __slots__ = ("model", "terms")

    def __init__(self, model: UniversalModel, terms: Mapping[_UKey, Fraction]):
        self.model = model
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def degree_part(self, k: int) -> "UClass":
        return UClass(
            self.model,
            {key: c for key, c in self.terms.items() if self.model.key_degree(key) == k},
        )

    def scalar_part(self) -> Fraction:
        return self.terms.get((0, (), 0), Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.one(other)
        if other.model is not self.model:
            raise ValueError("model mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return UClass(self.model, out)

    __radd__ = __add__

    def __neg__(self):
        return UClass(self.model, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.one(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return UClass(self.model, {k: c * v for k, v in self.terms.items()})
        if other.model is not self.model:
            raise ValueError("model mismatch")
        n_max = self.model.max_degree
        out: dict[_UKey, Fraction] = {}
        for (a1, e1, s1), c1 in self.terms.items():
            for (a2, e2, s2), c2 in other.terms.items():
                c = c1 * c2
                a = a1 + a2
                es = tuple(sorted(e1 + e2))
                s = s1 + s2
                if s == 2:
                    # s^2 = -s*l
                    s = 1
                    a += 1
                    c = -c
                if s == 1 and es:
                    continue  # s * e_j = 0
                if a + sum(es) + s > n_max:
                    continue
                key = (a, es, s)
                out[key] = out.get(key, Fraction(0)) + c
        return UClass(self.model, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.model.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.one(other)
        if not isinstance(other, UClass):
            return NotImplemented
        return self.model is other.model and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, es, s) in sorted(self.terms):
            c = self.terms[(a, es, s)]
            mono = [f"l^{a}"] if a else []
            mono += [f"e_{j}" for j in es]
            mono += ["s"] if s else []
            bits.append(f"({c})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(bits)


class FamilyModel:
    """Polynomial model for the family side: generators l and t_j (degree j-1)."""

    def __init__(self, max_degree: int):
        self.max_degree = max_degree

    def key_degree(self, key: _HKey) -> int:
        a, ts = key
        return a + sum(j - 1 for j in ts)

    def zero(self) -> "HClass":
        return HClass(self, {})

    def one(self, c: Rational = 1) -> "HClass":
        return HClass(self, {(0, ()): Fraction(c)})

    def ell(self) -> "HClass":
        return HClass(self, {(1, ()): Fraction(1)})

    def t(self, j: int) -> "HClass":
        if j < 1:
            raise ValueError("t_j needs j >= 1")
        return HClass(self, {(0, (j,)): Fraction(1)})


class HClass:
    """Element of a FamilyModel (free commutative polynomial, truncated)."""

    __slots__ = ("model", "terms")

    def __init__(self, model: FamilyModel, terms: Mapping[_HKey, Fraction]):
        self.model = model
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def degree_part(self, k: int) -> "HClass":
        return HClass(
            self.model,
            {key: c for key, c in self.terms.items() if self.model.key_degree(key) == k},
        )

    def coefficient(self, key: _HKey) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.one(other)
        if other.model is not self.model:
            raise ValueError("model mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return HClass(self.model, out)

    __radd__ = __add__

    def __neg__(self):
        return HClass(self.model, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.one(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return HClass(self.model, {k: c * v for k, v in self.terms.items()})
        if other.model is not self.model:
            raise ValueError("model mismatch")
        out: dict[_HKey, Fraction] = {}
        for (a1, t1), c1 in self.terms.items():
            for (a2, t2), c2 in other.terms.items():
                key = (a1 + a2, tuple(sorted(t1 + t2)))
                if self.model.key_degree(key) > self.model.max_degree:
                    continue
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return HClass(self.model, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.model.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.one(other)
        if not isinstance(other, HClass):
            return NotImplemented
        return self.model is other.model and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, ts) in sorted(self.terms):
            c = self.terms[(a, ts)]
            mono = [f"l^{a}"] if a else []
            mono += [f"t_{j}" for j in ts]
            bits.append(f"({c})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(bits)


def model_ring(n: int, d: int, k_max: int) -> UniversalModel:
    """Universal-family model truncated so ch_k is available for k <= k_max."""
    return UniversalModel(n, d, k_max + 1)


def push_pi(x: UClass) -> HClass:
    """Pushforward down the universal P^1-bundle, into the family model.

    q(l)*s maps to q(l); pure powers of l map to 0; l^a*e_j maps to l^a*t_j.
    Products of two or more e-symbols have no expressible pushforward and are
    rejected (they never occur in the derivation).
    """
    fam = x.model.family
    out: dict[_HKey, Fraction] = {}
    for (a, es, s), c in x.terms.items():
        if s == 1:
            key = (a, ())
        elif not es:
            continue
        elif len(es) == 1:
            key = (a, es)
        else:
            raise ValueError(f"pushforward of a product of e-symbols is undefined: {es}")
        if fam.key_degree(key) > fam.max_degree:
            continue
        out[key] = out.get(key, Fraction(0)) + c
    return HClass(fam, out)


# -- verification reports ------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    params: tuple
    ok: bool
    lhs: str = ""
    rhs: str = ""


@dataclass
class VerificationReport:
    label: str
    checks: list[Check] = field(default_factory=list)

    def record(self, name: str, params: tuple, lhs, rhs) -> None:
        ok = lhs == rhs
        self.checks.append(
            Check(name, params, ok, "" if ok else repr(lhs), "" if ok else repr(rhs))
        )

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def verify_claim31(n: int, d: int, k_max: int) -> VerificationReport:
    """Check the closed formulas for the graded pieces of the character cycle.

    Exercises, for all k <= k_max: the normal form of Z_k, Z_k*s, their
    pushforwards, Z_0 = n-1, and the auxiliary product and pushforward
    identities used along the way.
    """
    u = model_ring(n, d, k_max)
    fam = u.family
    sig, ell = u.sigma(), u.ell()
    lh = fam.ell()
    report = VerificationReport(f"claim31(n={n}, d={d}, k_max={k_max})")

    z = u.z_class()
    report.record("Z_0 = n-1", (n, d, 0), z.degree_part(0), u.one(n - 1))
    for k in range(1, k_max + 1):
        zk = z.degree_part(k)
        co = Fraction((n + 1) * (-1) ** k, factorial(k))
        rhs = u.e(k) + co * sig**k - ell**k * Fraction(1, factorial(k))
        report.record("Z_k", (n, d, k), zk, rhs)

        rhs_zs = co * sig ** (k + 1) - (sig * ell**k) * Fraction(1, factorial(k))
        report.record("Z_k*s", (n, d, k), zk * sig, rhs_zs)

        rhs_push = fam.t(k) - lh ** (k - 1) * Fraction(n + 1, factorial(k))
        report.record("push(Z_k)", (n, d, k), push_pi(zk), rhs_push)

        rhs_push_zs = lh**k * Fraction(n, factorial(k))
        report.record("push(Z_k*s)", (n, d, k), push_pi(zk * sig), rhs_push_zs)

    c1 = u.c1_relative_tangent()
    top = u.max_degree
    for i in range(0, top + 1):
        for j in range(1, top - i + 1):
            report.record("(iv) l^i s^j", (n, d, i, j), ell**i * sig**j, (-1) ** i * sig ** (i + j))
            report.record("(v) c1^i s^j", (n, d, i, j), c1**i * sig**j, sig ** (i + j))
    for i in range(0, top + 1):
        rhs = ell**i if i % 2 == 0 else 2 * sig**i + ell**i
        report.record("(vi) c1^i", (n, d, i), c1**i, rhs)
    for k in range(1, top + 1):
        report.record(
            "(vii) push(s^k)", (n, d, k), push_pi(sig**k), (-1) ** (k - 1) * lh ** (k - 1)
        )
    for a in range(0, top):
        report.record("(viii) push(l^a)", (n, d, a), push_pi(ell**a), fam.zero())
    return report


def family_character_formula(fam: FamilyModel, k: int) -> HClass:
    """The family-side character formula in symbols: sum A_j l^j t_(k+1-j) - l^k/k!."""
    lh = fam.ell()
    out = fam.zero()
    for j in range(0, k + 1):
        aj = todd_coeff(j)
        if aj:
            out = out + aj * lh**j * fam.t(k + 1 - j)
    return out - lh**k * Fraction(1, factorial(k))


def verify_prop11_symbolic(n: int, d: int, k_max: int) -> VerificationReport:
    """Re-derive the family character formula from first principles.

    Expands the pushforward of the degree-(k+1) piece of the full
    character-times-Todd cycle and compares it with the closed formula, for
    each k <= k_max.  Then substitutes e_1 = (d+2)(s + l) (the evaluation
    pullback of the anticanonical class) and checks the k = 1, 2
    specializations, plus the coefficient -1/k! of the standalone l^k term.
    """
    u = model_ring(n, d, k_max)
    fam = u.family
    lh = fam.ell()
    report = VerificationReport(f"prop11_symbolic(n={n}, d={d}, k_max={k_max})")

    w = u.w_class()
    for k in range(1, k_max + 1):
        lhs = push_pi(w.degree_part(k + 1))
        rhs = family_character_formula(fam, k)
        report.record("ch_k(H) derivation", (n, d, k), lhs, rhs)
        report.record(
            "standalone l^k coefficient",
            (n, d, k),
            lhs.coefficient((k, ())),
            Fraction(-1, factorial(k)),
        )

    # substituting the anticanonical identity gives the k = 1, 2 closed forms
    sub = (d + 2) * (u.sigma() + u.ell())
    w_sub = u.w_class(e1_substitution=sub)
    if k_max >= 1:
        rhs1 = fam.t(2) + Fraction(d, 2) * lh
        report.record("c_1(H) specialization", (n, d, 1), push_pi(w_sub.degree_part(2)), rhs1)
    if k_max >= 2:
        rhs2 = fam.t(3) + Fraction(1, 2) * lh * fam.t(2) + Fraction(d - 4, 12) * lh**2
        report.record("ch_2(H) specialization", (n, d, 2), push_pi(w_sub.degree_part(3)), rhs2)
    return report


# -- concrete evaluation -------------------------------------------------------


def T_power(a: Rational, k: int, ell: GradedClass) -> GradedClass:
    """Transfer of the k-th power of a divisor with fiber degree a: a^k * l^(k-1)."""
    if k < 1:
        raise ValueError("the transfer acts on powers k >= 1")
    return Fraction(a) ** k * ell ** (k - 1)


@dataclass(frozen=True)
class MinimalFamilyInput:
    """Polarization class and transferred ambient characters for one family.

    t[j] is the image of the ambient ch_j under the degree-lowering transfer,
    homogeneous of degree j-1 in the family's ring; t[1] is the scalar d+2.
    """

    d: int
    ell: GradedClass
    t: Mapping[int, GradedClass]

    def __post_init__(self):
        ring = self.ell.ring
        if not self.ell.is_zero() and self.ell.homogeneous_degree() != 1:
            raise ValueError("polarization class must have degree 1")
        for j, tj in self.t.items():
            if tj.ring is not ring:
                raise ValueError("transfer images must share the polarization's ring")
            if not tj.is_zero() and tj.homogeneous_degree() != j - 1:
                raise ValueError(f"t_{j} must be homogeneous of degree {j - 1}")


class MissingTransferError(KeyError):
    """A required transferred class t_j was not supplied."""


def ch_Hx(inp: MinimalFamilyInput, k: int) -> GradedClass:
    """Evaluate the family character formula at concrete classes.

    ch_k(H) = sum_{j=0}^{k} A_j * l^j * t_{k+1-j} - l^k / k!.
    """
    if k < 1:
        raise ValueError("ch_k needs k >= 1")
    ring = inp.ell.ring
    out = ring.zero()
    for j in range(0, k + 1):
        aj = todd_coeff(j)
        if not aj:
            continue
        idx = k + 1 - j
        if idx not in inp.t:
            raise MissingTransferError(idx)
        out = out + aj * inp.ell**j * inp.t[idx]
    return out - inp.ell**k * Fraction(1, factorial(k))


def ci_dimension_of_family(n: int, degrees: Sequence[int]) -> int:
    """dim H for lines on a complete intersection of the given type in P^n."""
    d = n - 1 - sum(degrees)
    if d < 0:
        raise ValueError(f"no lines through a general point: dim H = {d} < 0")
    return d


def ci_T_images(n: int, degrees: Sequence[int], k_max: int) -> MinimalFamilyInput:
    """Transferred ambient characters for lines on a complete intersection.

    The ambient ch_j is ((n+1) - sum_i d_i^j) h^j / j!; lines have fiber
    degree 1, so the transfer gives t_j = ((n+1) - sum_i d_i^j)/j! * l^(j-1).
    """
    degrees = tuple(int(x) for x in degrees)
    if any(x < 1 for x in degrees):
        raise ValueError("hypersurface degrees must be >= 1")
    d = ci_dimension_of_family(n, degrees)
    ring = projective_space_ring(d, gen="l")
    ell = ring.hyperplane()
    t: dict[int, GradedClass] = {}
    for j in range(1, k_max + 2):
        coeff = Fraction((n + 1) - sum(x**j for x in degrees), factorial(j))
        t[j] = coeff * T_power(1, j, ell)
    return MinimalFamilyInput(d=d, ell=ell, t=t)


def ci_family_character_direct(
    n: int, degrees: Sequence[int], k: int, ell: GradedClass | None = None
) -> GradedClass:
    """Independent oracle: ch_k of the family of lines on a complete intersection.

    The family is itself a complete intersection of type
    (1, 2, ..., d_1, ..., 1, 2, ..., d_c) in P^(n-1), so
    ch_k = (n - sum_i (1^k + 2^k + ... + d_i^k)) * l^k / k!.
    Pass `ell` to express the result against an existing polarization class.
    """
    degrees = tuple(int(x) for x in degrees)
    d = ci_dimension_of_family(n, degrees)
    if ell is None:
        ell = projective_space_ring(d, gen="l").hyperplane()
    coeff = Fraction(n) - sum(power_sum(x, k) for x in degrees)
    return coeff * Fraction(1, factorial(k)) * ell**k


def verify_prop11_ci(n: int, degrees: Sequence[int], k_max: int) -> VerificationReport:
    """Cross-validate the formula against the direct complete-intersection oracle."""
    degrees = tuple(int(x) for x in degrees)
    inp = ci_T_images(n, degrees, k_max)
    report = VerificationReport(f"prop11_ci(n={n}, degrees={degrees}, k_max={k_max})")
    report.record("t_1 = d+2", (n, degrees), inp.t[1], inp.ell.ring.scalar(inp.d + 2))
    for k in range(1, k_max + 1):
        lhs = ch_Hx(inp, k)
        rhs = ci_family_character_direct(n, degrees, k, ell=inp.ell)
        report.record("formula vs direct", (n, degrees, k), lhs, rhs)
    return report
