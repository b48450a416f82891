"""Constituents of maximal and almost-maximal width or length.

For mu, nu of equal size set gamma = mu^nu of size m and d = n - m.  The
constituents of width m are (m, alpha) for alpha in [mu/gamma].[nu/gamma];
the ones of maximal length come from the conjugate-side inner product.
Width m-1 constituents are governed by the virtual character

    chi = sum over removable gamma-nodes A of [mu/gamma_A].[nu/gamma_A]
          minus the one-step induction of [mu/gamma].[nu/gamma]

whose inner product with [lambda_2, lambda_3, ...] equals the coefficient
of [m-1, lambda_2, ...] in [mu].[nu] whenever that label is a partition.
The report itself is always computed from the brute-force decomposition;
the shortcut formulas act as cross-checks, not as the source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kronecker as kr
from . import partitions as pt
from .errors import CrossCheckFailed, SizeMismatch, TrivialCharacter
from .kronecker import VirtualCharacter
from .partitions import Partition, SkewShape


@dataclass(frozen=True)
class StarVerdict:
    """Outcome of the three-clause nondegeneracy test on a pair."""

    satisfied: bool
    failed_clauses: frozenset[int]


def near_trivial_set(n: int) -> set[Partition]:
    out: set[Partition] = set()
    for p in ((n,), (n - 1, 1), (2,) + (1,) * (n - 2)):
        try:
            out.add(pt.as_partition(p))
        except Exception:
            continue
    out.add((1,) * n if n else ())
    return out


def hypothesis_star(mu: Partition, nu: Partition) -> StarVerdict:
    """Clauses: 1 no (near-)trivial label, 2 unequal and non-conjugate,
    3 not both 2-line and not both hooks."""
    n = kr._require_same_size(mu, nu)
    failed = set()
    if mu in near_trivial_set(n) or nu in near_trivial_set(n):
        failed.add(1)
    if mu == nu or mu == pt.conjugate(nu):
        failed.add(2)
    if (pt.is_two_line(mu) and pt.is_two_line(nu)) or (
        pt.is_hook(mu) and pt.is_hook(nu)
    ):
        failed.add(3)
    return StarVerdict(not failed, frozenset(failed))


def _skew_product(s1: SkewShape, s2: SkewShape) -> VirtualCharacter:
    return kr.multiply(kr.skew_virtual(s1), kr.skew_virtual(s2))


def extreme_components(
    mu: Partition, nu: Partition
) -> tuple[dict[Partition, int], dict[Partition, int]]:
    """Width-maximal and length-maximal constituents with multiplicities."""
    n = kr._require_same_size(mu, nu)
    if not mu or not nu:
        raise SizeMismatch("both partitions must be nonempty")
    gamma = pt.intersect(mu, nu)
    m = pt.size(gamma)
    width_max = {
        (m,) + alpha: c
        for alpha, c in _skew_product(SkewShape(mu, gamma), SkewShape(nu, gamma))
        .items_sorted()
    }
    gamma_t = pt.intersect(mu, pt.conjugate(nu))
    co_gamma = pt.intersect(pt.conjugate(mu), nu)
    m_t = pt.size(gamma_t)
    length_max = {}
    prod = _skew_product(SkewShape(mu, gamma_t), SkewShape(nu, co_gamma))
    for beta, c in prod.items_sorted():
        lam = tuple(pt.part_at(beta, i) + 1 for i in range(1, m_t + 1))
        length_max[lam] = c
    return width_max, length_max


def corner_sum_character(mu: Partition, nu: Partition) -> VirtualCharacter:
    """Sum of [mu/gamma_A].[nu/gamma_A] over removable gamma-nodes A."""
    n = kr._require_same_size(mu, nu)
    gamma = pt.intersect(mu, nu)
    total = VirtualCharacter(n - pt.size(gamma) + 1)
    for node in pt.removable_nodes(gamma):
        smaller = pt.remove_node(gamma, node)
        total = total + _skew_product(SkewShape(mu, smaller), SkewShape(nu, smaller))
    return total


def almost_width_chi(mu: Partition, nu: Partition) -> VirtualCharacter:
    """The virtual character controlling width-(m-1) multiplicities."""
    n = kr._require_same_size(mu, nu)
    gamma = pt.intersect(mu, nu)
    if not gamma:
        raise SizeMismatch("mu and nu must share at least one node")
    base = _skew_product(SkewShape(mu, gamma), SkewShape(nu, gamma))
    return corner_sum_character(mu, nu) - kr.induce_one_step(base)


@dataclass(frozen=True)
class ExtremeReport:
    """Constituents at and one below maximal width and length."""

    m: int
    m_tilde: int
    width_max: dict[Partition, int]
    width_almost: dict[Partition, int]
    length_max: dict[Partition, int]
    length_almost: dict[Partition, int]
    count: int

    def to_json_dict(self) -> dict:
        def render(d: dict[Partition, int]) -> dict:
            return {
                pt.format_partition(lam): c for lam, c in sorted(d.items(), reverse=True)
            }

        return {
            "m": self.m,
            "m_tilde": self.m_tilde,
            "width_max": render(self.width_max),
            "width_almost": render(self.width_almost),
            "length_max": render(self.length_max),
            "length_almost": render(self.length_almost),
            "count": self.count,
        }


def almost_extreme_report(
    mu: Partition, nu: Partition, cross_check: bool = True
) -> ExtremeReport:
    """Scan the full decomposition for (almost) extreme constituents.

    With cross_check enabled the width lists are revalidated against the
    shortcut formulas; disagreement raises CrossCheckFailed.
    """
    n = kr._require_same_size(mu, nu)
    if not mu or not nu:
        raise SizeMismatch("both partitions must be nonempty")
    dec = kr.kron_decompose(mu, nu)
    m, m_t = kr.rect_hull(mu, nu)
    width_max, width_almost, length_max, length_almost = {}, {}, {}, {}
    members: set[Partition] = set()
    for lam, c in dec.items_sorted():
        w, l = lam[0], len(lam)
        if w == m:
            width_max[lam] = c
        elif w == m - 1:
            width_almost[lam] = c
        if l == m_t:
            length_max[lam] = c
        elif l == m_t - 1:
            length_almost[lam] = c
        if w >= m - 1 or l >= m_t - 1:
            members.add(lam)
    if cross_check:
        wmax, lmax = extreme_components(mu, nu)
        if wmax != width_max or lmax != length_max:
            raise CrossCheckFailed(
                f"extreme lists disagree with decomposition scan for {mu}, {nu}"
            )
        if m > 1:
            chi = almost_width_chi(mu, nu)
            for lam in pt.partitions_of(n):
                if lam[0] == m - 1 and dec.coeff(lam) != chi.coeff(lam[1:]):
                    raise CrossCheckFailed(
                        f"almost-width formula disagrees at {lam} for {mu}, {nu}"
                    )
    return ExtremeReport(
        m, m_t, width_max, width_almost, length_max, length_almost, len(members)
    )


def hook_bound_check(mu: Partition, nu: Partition) -> bool:
    """Every constituent satisfies h11 < |mu^nu| + |mu^nu'| - 1."""
    n = kr._require_same_size(mu, nu)
    trivial = {(n,), (1,) * n}
    if mu in trivial or nu in trivial:
        raise TrivialCharacter(f"{mu} or {nu} has degree one")
    m, m_t = kr.rect_hull(mu, nu)
    bound = m + m_t - 1
    return all(
        pt.first_hook(lam) < bound for lam in kr.kron_decompose(mu, nu).constituents()
    )
