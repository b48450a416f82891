"""Kronecker products of irreducible symmetric-group characters.

Two independent evaluation paths are provided and cross-checked in tests:

* ``brute``: pointwise multiply two character-table rows and project onto
  every irreducible by the class-size-weighted inner product.
* ``dvir``: a width recursion.  The coefficient of [lambda] is a sum of
  inner products of products of skew characters [mu/alpha].[nu/alpha] over
  alpha of size lambda_1 inside mu^nu, minus coefficients of partitions
  obtained from (lambda_2, lambda_3, ...) by adding a horizontal strip of
  size lambda_1 - those all have strictly larger first part, so the
  recursion terminates.  Corner cases: when lambda_1 equals |mu^nu| only
  alpha = mu^nu survives and the correction vanishes; when the length of
  lambda equals |mu^nu'| the coefficient is a single inner product against
  the first-column-stripped label.  The recursion never touches character
  tables; its skew characters come from the LR rule, so the two paths are
  genuinely independent oracles for each other.
"""

from __future__ import annotations

from functools import cache
from math import factorial

from . import characters as ch
from . import lr
from . import partitions as pt
from .errors import NonIntegralResult, SizeMismatch
from .partitions import Partition, SkewShape


class VirtualCharacter:
    """Integer combination of irreducibles of one symmetric group."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        data: dict[Partition, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for lam, c in items:
                if sum(lam) != n:
                    raise SizeMismatch(f"{lam} is not a partition of {n}")
                if c:
                    data[lam] = data.get(lam, 0) + c
        self.coeffs = {lam: c for lam, c in data.items() if c}

    def coeff(self, lam: Partition) -> int:
        return self.coeffs.get(lam, 0)

    def items_sorted(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), reverse=True)

    def constituents(self) -> list[Partition]:
        return sorted((lam for lam, c in self.coeffs.items() if c > 0), reverse=True)

    def num_components(self) -> int:
        """Number of components with positive coefficient."""
        return sum(1 for c in self.coeffs.values() if c > 0)

    def is_character(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        if self.n != other.n:
            raise SizeMismatch(f"degrees differ: {self.n} vs {other.n}")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return VirtualCharacter(self.n, out)

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter(self.n, {lam: k * c for lam, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VirtualCharacter)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"VirtualCharacter({self.n}, {self.items_sorted()})"


def _require_same_size(mu: Partition, nu: Partition) -> int:
    if sum(mu) != sum(nu):
        raise SizeMismatch(f"|{mu}| != |{nu}|")
    return sum(mu)


# ---------------------------------------------------------------------------
# brute-force path: character table rows and inner products


@cache
def _brute_items(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = sum(mu)
    table = ch.character_table(n)
    classes = table.labels
    sizes = [ch.class_size(t) for t in classes]
    rmu = table.rows[table.index(mu)]
    rnu = table.rows[table.index(nu)]
    prod = [a * b for a, b in zip(rmu, rnu)]
    order = factorial(n)
    out = []
    for lam in classes:
        rlam = table.rows[table.index(lam)]
        total = sum(s * p * v for s, p, v in zip(sizes, prod, rlam))
        c, rem = divmod(total, order)
        if rem:
            raise NonIntegralResult(f"non-integral multiplicity for {lam}")
        if c:
            out.append((lam, c))
    return tuple(out)


def kron_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """Multiplicity of [lam] in [mu].[nu] via character inner products."""
    n = _require_same_size(mu, nu)
    if sum(lam) != n:
        raise SizeMismatch(f"|{lam}| != {n}")
    if mu > nu:
        mu, nu = nu, mu
    return dict(_brute_items(mu, nu)).get(lam, 0)


# ---------------------------------------------------------------------------
# width-recursion path (no character tables anywhere below)


@cache
def _skew_pair_table(
    o1: Partition, i1: Partition, o2: Partition, i2: Partition
) -> dict[Partition, int]:
    """Inner products of [o1/i1].[o2/i2] against every irreducible."""
    d1 = lr.skew_decompose(SkewShape(o1, i1))
    d2 = lr.skew_decompose(SkewShape(o2, i2))
    k = sum(o1) - sum(i1)
    out: dict[Partition, int] = {}
    for sigma in pt.partitions_of(k):
        total = 0
        for rho, c1 in d1.items():
            for tau, c2 in d2.items():
                total += c1 * c2 * _dvir(rho, tau, sigma)
        if total:
            out[sigma] = total
    return out


def _pair_table(mu: Partition, a1: Partition, nu: Partition, a2: Partition):
    if (mu, a1) > (nu, a2):
        mu, a1, nu, a2 = nu, a2, mu, a1
    return _skew_pair_table(mu, a1, nu, a2)


@cache
def _dvir(mu: Partition, nu: Partition, lam: Partition) -> int:
    if mu > nu:
        mu, nu = nu, mu
    n = sum(mu)
    if n == 0:
        return 1
    gamma = pt.intersect(mu, nu)
    m = sum(gamma)
    if lam[0] > m:
        return 0
    gamma_t = pt.intersect(mu, pt.conjugate(nu))
    m_t = sum(gamma_t)
    if len(lam) > m_t:
        return 0
    if lam[0] == m:
        return _pair_table(mu, gamma, nu, gamma).get(lam[1:], 0)
    if len(lam) == m_t:
        co_gamma = pt.intersect(pt.conjugate(mu), nu)
        return _pair_table(mu, gamma_t, nu, co_gamma).get(
            pt.drop_first_column(lam), 0
        )
    head, tail = lam[0], lam[1:]
    total = 0
    for alpha in pt.partitions_within(head, gamma):
        total += _pair_table(mu, alpha, nu, alpha).get(tail, 0)
    for eta in pt.add_horizontal_strips(tail, head):
        if eta != lam and eta[0] <= m:
            total -= _dvir(mu, nu, eta)
    return total


def dvir_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """Multiplicity of [lam] in [mu].[nu] by the width recursion."""
    n = _require_same_size(mu, nu)
    if sum(lam) != n:
        raise SizeMismatch(f"|{lam}| != {n}")
    return _dvir(mu, nu, lam)


# ---------------------------------------------------------------------------
# shared surface


def kron_decompose(mu: Partition, nu: Partition, method: str = "brute") -> VirtualCharacter:
    """Full decomposition of [mu].[nu] by the chosen method."""
    n = _require_same_size(mu, nu)
    if method == "brute":
        a, b = (nu, mu) if mu > nu else (mu, nu)
        return VirtualCharacter(n, _brute_items(a, b))
    if method == "dvir":
        coeffs = {}
        for lam in pt.partitions_of(n):
            c = _dvir(mu, nu, lam)
            if c:
                coeffs[lam] = c
        return VirtualCharacter(n, coeffs)
    raise ValueError(f"unknown method {method!r}")


def rect_hull(mu: Partition, nu: Partition) -> tuple[int, int]:
    """Maximal constituent width and length: (|mu^nu|, |mu^nu'|)."""
    _require_same_size(mu, nu)
    if not mu or not nu:
        raise SizeMismatch("both partitions must be nonempty")
    return sum(pt.intersect(mu, nu)), sum(pt.intersect(mu, pt.conjugate(nu)))


def component_count(mu: Partition, nu: Partition) -> int:
    return kron_decompose(mu, nu).num_components()


def induce_one_step(psi: VirtualCharacter) -> VirtualCharacter:
    """Branching-rule induction: [theta] goes to the sum of [theta + node]."""
    out: dict[Partition, int] = {}
    for theta, c in psi.coeffs.items():
        for node in pt.addable_nodes(theta):
            bigger = pt.add_node(theta, node)
            out[bigger] = out.get(bigger, 0) + c
    return VirtualCharacter(psi.n + 1, out)


def multiply(x: VirtualCharacter, y: VirtualCharacter) -> VirtualCharacter:
    """Bilinear Kronecker product of two virtual characters (brute path)."""
    if x.n != y.n:
        raise SizeMismatch(f"degrees differ: {x.n} vs {y.n}")
    out: dict[Partition, int] = {}
    for rho, a in x.coeffs.items():
        for tau, b in y.coeffs.items():
            p, q = (tau, rho) if rho > tau else (rho, tau)
            for lam, c in _brute_items(p, q):
                out[lam] = out.get(lam, 0) + a * b * c
    return VirtualCharacter(x.n, out)


def skew_virtual(shape: SkewShape) -> VirtualCharacter:
    """The skew character as a (genuine) virtual character."""
    return VirtualCharacter(shape.size(), lr.skew_decompose(shape))
