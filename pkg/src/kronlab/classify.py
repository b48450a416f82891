"""Exhaustive pair/shape sweeps and machine verification of classifications.

Each ``verify_*`` function replays one classification statement over every
instance up to a bound and reports counterexamples instead of asserting,
so a failure names the offending pair and both sides of the disagreement.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import extreme as ex
from . import kronecker as kr
from . import lr
from . import partitions as pt
from .errors import OutOfRange
from .partitions import Partition, SkewShape

DEFAULT_MAX_N = 12
MAX_COUNTEREXAMPLES = 20


@dataclass(frozen=True)
class SweepEntry:
    mu: Partition
    nu: Partition
    c: int
    extreme_count: int
    exception_tag: str | None

    def to_json_dict(self) -> dict:
        return {
            "mu": pt.format_partition(self.mu),
            "nu": pt.format_partition(self.nu),
            "c": self.c,
            "extreme_count": self.extreme_count,
            "exception_tag": self.exception_tag,
        }


@dataclass
class VerificationReport:
    theorem: str
    n_max: int
    passed: bool
    counterexamples: list[dict]
    total_counterexamples: int
    wall_time_s: float

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_max": self.n_max,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "total_counterexamples": self.total_counterexamples,
            "wall_time_s": round(self.wall_time_s, 3),
        }


class _Collector:
    """Keeps the first few counterexamples plus a total count."""

    def __init__(self):
        self.kept: list[dict] = []
        self.total = 0

    def add(self, **info) -> None:
        self.total += 1
        if len(self.kept) < MAX_COUNTEREXAMPLES:
            self.kept.append(
                {
                    k: (pt.format_partition(v) if isinstance(v, tuple) else v)
                    for k, v in info.items()
                }
            )

    def report(self, theorem: str, n_max: int, t0: float) -> VerificationReport:
        return VerificationReport(
            theorem, n_max, self.total == 0, self.kept, self.total, time.time() - t0
        )


def _render_dec(dec: dict[Partition, int]) -> str:
    if not dec:
        return "0"
    return " + ".join(
        ("" if c == 1 else str(c)) + pt.bracket(lam)
        for lam, c in sorted(dec.items(), reverse=True)
    )


# ---------------------------------------------------------------------------
# exception cases for the extreme-component classification


def _near_trivial(n: int) -> tuple[Partition, ...]:
    """(n-1,1) and its conjugate, when n allows them."""
    if n < 2:
        return ()
    if n == 2:
        return ((1, 1), (2,))
    return ((n - 1, 1), (2,) + (1,) * (n - 2))


def _is_nontrivial_rectangle(p: Partition) -> bool:
    return pt.is_rectangle(p) and len(p) > 1 and p[0] > 1


def exception_tag(mu: Partition, nu: Partition) -> str | None:
    """First matching case label among the seven exceptional situations."""
    n = sum(mu)
    trivial = {(n,), (1,) * n}
    near = set(_near_trivial(n))
    if mu in trivial or nu in trivial:
        return "i"
    if (_is_nontrivial_rectangle(mu) and nu in near) or (
        _is_nontrivial_rectangle(nu) and mu in near
    ):
        return "ii"
    if n > 1 and mu in near and nu in near:
        return "iii"
    if n >= 5 and n % 2 == 1 and (n - 1) // 2 > 1:
        k = (n - 1) // 2
        hooks = {(2 * k, 1), (2,) + (1,) * (2 * k - 1)}
        bal = {(k + 1, k), (2,) * k + (1,)}
        if (mu in hooks and nu in bal) or (nu in hooks and mu in bal):
            return "iv"
    if n == 6:
        left = {(3, 3), (2, 2, 2)}
        right = {(4, 2), (2, 2, 1, 1)}
        if (mu in left and nu in right) or (nu in left and mu in right):
            return "v"
    if mu == nu and pt.is_symmetric(mu):
        return "vi"
    for a in range(2, n):
        if a * (a + 1) > n:
            break
        if a * (a + 1) == n:
            squareish = {(a + 1,) * a, (a,) * (a + 1)}
            if mu in squareish and nu in squareish:
                return "vii"
    return None


def _conj_dec(dec: dict[Partition, int]) -> dict[Partition, int]:
    return {pt.conjugate(lam): c for lam, c in dec.items()}


def _balanced_product(k: int) -> dict[Partition, int]:
    """[2k,1].[k+1,k] for k > 1."""
    return {
        (k + 2, k - 1): 1,
        (k + 1, k): 1,
        (k + 1, k - 1, 1): 1,
        (k, k, 1): 1,
    }


def exception_product(tag: str, mu: Partition, nu: Partition) -> dict[Partition, int] | None:
    """Closed-form decomposition for the cases where it is known."""
    n = sum(mu)
    if tag == "i":
        if mu in {(n,), (1,) * n}:
            triv, other = mu, nu
        else:
            triv, other = nu, mu
        return {(other if triv == (n,) else pt.conjugate(other)): 1}
    if tag == "ii":
        rect, near = (mu, nu) if _is_nontrivial_rectangle(mu) else (nu, mu)
        a, b = rect[0], len(rect)
        if near == (n - 1, 1):
            return {
                (a + 1,) + (a,) * (b - 2) + (a - 1,): 1,
                (a,) * (b - 1) + (a - 1, 1): 1,
            }
        return {
            (b + 1,) + (b,) * (a - 2) + (b - 1,): 1,
            (b,) * (a - 1) + (b - 1, 1): 1,
        }
    if tag == "iii":
        if n == 3:
            return {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
        if mu == nu:
            return {(n,): 1, (n - 1, 1): 1, (n - 2, 2): 1, (n - 2, 1, 1): 1}
        return {
            (1,) * n: 1,
            (2,) + (1,) * (n - 2): 1,
            (2, 2) + (1,) * (n - 4): 1,
            (3,) + (1,) * (n - 3): 1,
        }
    if tag == "iv":
        k = (n - 1) // 2
        conj_labels = {(2,) + (1,) * (2 * k - 1), (2,) * k + (1,)}
        flips = sum(1 for p in (mu, nu) if p in conj_labels)
        base = _balanced_product(k)
        return base if flips % 2 == 0 else _conj_dec(base)
    if tag == "v":
        base = {(5, 1): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 1, (2, 2, 1, 1): 1}
        flips = sum(1 for p in (mu, nu) if p in {(2, 2, 2), (2, 2, 1, 1)})
        return base if flips % 2 == 0 else _conj_dec(base)
    return None


# ---------------------------------------------------------------------------
# sweeping


def _sweep_entry(pair: tuple[Partition, Partition]) -> SweepEntry:
    mu, nu = pair
    dec = kr.kron_decompose(mu, nu)
    report = ex.almost_extreme_report(mu, nu)
    return SweepEntry(mu, nu, dec.num_components(), report.count, exception_tag(mu, nu))


def sweep(n: int, threads: int = 1, max_n: int = DEFAULT_MAX_N) -> list[SweepEntry]:
    """One entry per unordered pair of partitions of n, in dec-lex order."""
    if not 2 <= n <= max_n:
        raise OutOfRange(f"n={n} outside [2, {max_n}]")
    ps = pt.partitions_of(n)
    pairs = [(ps[i], ps[j]) for i in range(len(ps)) for j in range(i, len(ps))]
    if threads <= 1:
        return [_sweep_entry(p) for p in pairs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_sweep_entry, pairs, chunksize=8))


def _unordered_pairs(n: int):
    ps = pt.partitions_of(n)
    for i in range(len(ps)):
        for j in range(i, len(ps)):
            yield ps[i], ps[j]


def _key(a: Partition, b: Partition) -> tuple[Partition, Partition]:
    return (a, b) if a >= b else (b, a)


def _pair_str(pair: tuple[Partition, Partition]) -> str:
    return f"{pt.bracket(pair[0])}.{pt.bracket(pair[1])}"


# ---------------------------------------------------------------------------
# the two headline classifications


def _expected_three(n: int) -> dict[tuple[Partition, Partition], dict]:
    if n == 3:
        return {((2, 1), (2, 1)): {(3,): 1, (2, 1): 1, (1, 1, 1): 1}}
    if n == 4:
        return {((2, 2), (2, 2)): {(4,): 1, (2, 2): 1, (1, 1, 1, 1): 1}}
    return {}


def _expected_four(n: int) -> dict[tuple[Partition, Partition], dict]:
    out: dict[tuple[Partition, Partition], dict] = {}
    if n >= 4:
        a, b = (n - 1, 1), (2,) + (1,) * (n - 2)
        same = {(n,): 1, (n - 1, 1): 1, (n - 2, 2): 1, (n - 2, 1, 1): 1}
        cross = {
            (1,) * n: 1,
            (2,) + (1,) * (n - 2): 1,
            (2, 2) + (1,) * (n - 4): 1,
            (3,) + (1,) * (n - 3): 1,
        }
        out[_key(a, a)] = same
        out[_key(b, b)] = same
        out[_key(a, b)] = cross
    if n >= 5 and n % 2 == 1 and (n - 1) // 2 >= 2:
        k = (n - 1) // 2
        base = _balanced_product(k)
        conj = _conj_dec(base)
        out[_key((2 * k, 1), (k + 1, k))] = base
        out[_key((2 * k, 1), (2,) * k + (1,))] = conj
        out[_key((2,) + (1,) * (2 * k - 1), (k + 1, k))] = conj
        out[_key((2,) + (1,) * (2 * k - 1), (2,) * k + (1,))] = base
    if n == 6:
        square = {(6,): 1, (4, 2): 1, (3, 1, 1, 1): 1, (2, 2, 2): 1}
        cross = {(1,) * 6: 1, (2, 2, 1, 1): 1, (4, 1, 1): 1, (3, 3): 1}
        out[_key((3, 3), (3, 3))] = square
        out[_key((2, 2, 2), (2, 2, 2))] = square
        out[_key((3, 3), (2, 2, 2))] = cross
    return out


def verify_34c(n_max: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Products with exactly three or four homogeneous components."""
    if n_max > max_n:
        raise OutOfRange(f"n_max={n_max} exceeds configured bound {max_n}")
    t0 = time.time()
    ces = _Collector()
    for n in range(2, n_max + 1):
        expected3 = _expected_three(n)
        expected4 = _expected_four(n)
        got3: set = set()
        got4: set = set()
        for mu, nu in _unordered_pairs(n):
            c = kr.component_count(mu, nu)
            if c == 3:
                got3.add((mu, nu))
            elif c == 4:
                got4.add((mu, nu))
        for pair in got3 ^ set(expected3):
            ces.add(n=n, pair=_pair_str(pair), issue="three-component set mismatch")
        for pair in got4 ^ set(expected4):
            ces.add(n=n, pair=_pair_str(pair), issue="four-component set mismatch")
        for pair, want in {**expected3, **expected4}.items():
            have = kr.kron_decompose(*pair).coeffs
            if have != want:
                ces.add(
                    n=n,
                    pair=_pair_str(pair),
                    issue="printed decomposition mismatch",
                    expected=_render_dec(want),
                    actual=_render_dec(have),
                )
    return ces.report("34c", n_max, t0)


def verify_extcomp(n_max: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """At least five (almost) extreme components outside the seven cases."""
    if n_max > max_n:
        raise OutOfRange(f"n_max={n_max} exceeds configured bound {max_n}")
    t0 = time.time()
    ces = _Collector()
    for n in range(2, n_max + 1):
        for mu, nu in _unordered_pairs(n):
            tag = exception_tag(mu, nu)
            count = ex.almost_extreme_report(mu, nu).count
            if tag is None and count < 5:
                ces.add(n=n, mu=mu, nu=nu, issue=f"untagged pair has only {count}")
            if tag is not None and count >= 5:
                ces.add(n=n, mu=mu, nu=nu, issue=f"case ({tag}) pair has {count}")
            if tag in {"i", "ii", "iii", "iv", "v"}:
                want = exception_product(tag, mu, nu)
                have = kr.kron_decompose(mu, nu).coeffs
                if have != want:
                    ces.add(
                        n=n,
                        mu=mu,
                        nu=nu,
                        issue=f"case ({tag}) printed product mismatch",
                        expected=_render_dec(want),
                        actual=_render_dec(have),
                    )
    return ces.report("extcomp", n_max, t0)


# ---------------------------------------------------------------------------
# special products: natural character, squares, 2-part partitions, hooks


def _natural_identity_counterexamples(n: int, ces: _Collector) -> None:
    natural = (n - 1, 1)
    for mu in pt.partitions_of(n):
        want: dict[Partition, int] = {}
        for node_a in pt.removable_nodes(mu):
            smaller = pt.remove_node(mu, node_a)
            for node_b in pt.addable_nodes(smaller):
                back = pt.add_node(smaller, node_b)
                want[back] = want.get(back, 0) + 1
        want[mu] = want.get(mu, 0) - 1
        want = {lam: c for lam, c in want.items() if c}
        have = kr.kron_decompose(mu, natural).coeffs
        if have != want:
            ces.add(n=n, mu=mu, issue="natural-character identity fails",
                    expected=_render_dec(want), actual=_render_dec(have))


def _natural_classification_counterexamples(n: int, ces: _Collector) -> None:
    natural = (n - 1, 1)
    k = (n - 1) // 2 if n % 2 == 1 else None
    for mu in pt.partitions_of(n):
        dec = kr.kron_decompose(mu, natural)
        c = dec.num_components()
        want_product: dict | None = None
        if mu in {(n,), (1,) * n}:
            want_c = 1
        elif _is_nontrivial_rectangle(mu):
            want_c = 2
            a, b = mu[0], len(mu)
            want_product = {
                (a + 1,) + (a,) * (b - 2) + (a - 1,): 1,
                (a,) * (b - 1) + (a - 1, 1): 1,
            }
        elif n == 3 and mu == (2, 1):
            want_c = 3
            want_product = {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
        elif n >= 4 and mu in {(n - 1, 1), (2,) + (1,) * (n - 2)}:
            want_c = 4
            same = {(n,): 1, (n - 1, 1): 1, (n - 2, 2): 1, (n - 2, 1, 1): 1}
            want_product = same if mu == natural else {
                (1,) * n: 1,
                (2,) + (1,) * (n - 2): 1,
                (2, 2) + (1,) * (n - 4): 1,
                (3,) + (1,) * (n - 3): 1,
            }
        elif k is not None and k >= 2 and mu in {(k + 1, k), (2,) * k + (1,)}:
            want_c = 4
            base = _balanced_product(k)
            want_product = base if mu == (k + 1, k) else _conj_dec(base)
        else:
            want_c = 5  # meaning: at least five
        if want_c == 5:
            if c < 5:
                ces.add(n=n, mu=mu, issue=f"natural product has only {c} components")
            continue
        if c != want_c:
            ces.add(n=n, mu=mu, issue=f"natural product has {c} components, wanted {want_c}")
        if want_product is not None and dec.coeffs != want_product:
            ces.add(n=n, mu=mu, issue="natural product decomposition mismatch",
                    expected=_render_dec(want_product), actual=_render_dec(dec.coeffs))
        if ex.almost_extreme_report(mu, natural).count != c:
            ces.add(n=n, mu=mu, issue="natural product has a non-extreme component")


def _square_counterexamples(n: int, ces: _Collector) -> None:
    for lam in pt.partitions_of(n):
        dec = kr.kron_decompose(lam, lam)
        c = dec.num_components()
        want: dict | None = None
        if lam in {(n,), (1,) * n}:
            want = {(n,): 1}
        elif n >= 4 and lam in {(n - 1, 1), (2,) + (1,) * (n - 2)}:
            want = {(n,): 1, (n - 1, 1): 1, (n - 2, 2): 1, (n - 2, 1, 1): 1}
        elif n == 3 and lam == (2, 1):
            want = {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
        elif n == 4 and lam == (2, 2):
            want = {(4,): 1, (2, 2): 1, (1, 1, 1, 1): 1}
        elif n == 6 and lam in {(3, 3), (2, 2, 2)}:
            want = {(6,): 1, (4, 2): 1, (3, 1, 1, 1): 1, (2, 2, 2): 1}
        if want is not None:
            if dec.coeffs != want:
                ces.add(n=n, mu=lam, issue="square decomposition mismatch",
                        expected=_render_dec(want), actual=_render_dec(dec.coeffs))
        elif c <= 4:
            ces.add(n=n, mu=lam, issue=f"unlisted square has only {c} components")
        listed_ae = (
            lam in {(n,), (1,) * n}
            or (n >= 4 and lam in {(n - 1, 1), (2,) + (1,) * (n - 2)})
            or (n > 1 and pt.is_symmetric(lam))
            or any(
                a * (a + 1) == n and lam in {(a + 1,) * a, (a,) * (a + 1)}
                for a in range(2, n)
            )
        )
        ae = ex.almost_extreme_report(lam, lam).count
        if listed_ae and ae > 4:
            ces.add(n=n, mu=lam, issue=f"listed square has {ae} (almost) extreme")
        if not listed_ae and ae <= 4:
            ces.add(n=n, mu=lam, issue=f"unlisted square has {ae} (almost) extreme")


def _two_part_counterexamples(n: int, ces: _Collector) -> None:
    for k in range(3, n // 2 + 1):
        for l in range(2, k):
            mu, nu = (n - k, k), (n - l, l)
            dec = kr.kron_decompose(mu, nu)
            m = n - k + l
            have = dec.coeffs

            def missing(lam: Partition) -> bool:
                return have.get(lam, 0) <= 0

            if missing((m, n - m)):
                ces.add(n=n, mu=mu, nu=nu, issue="missing widest 2-part constituent")
            if mu != (k, k) and missing((m - 1, n - m + 1)):
                ces.add(n=n, mu=mu, nu=nu, issue="missing almost-widest 2-part constituent")
            if missing((m - 1, n - m, 1)):
                ces.add(n=n, mu=mu, nu=nu, issue="missing almost-widest 3-row constituent")
            len4 = [lam for lam in dec.constituents() if len(lam) == 4]
            if l == 2:
                if len4 != [(m - 3, n - m + 1, 1, 1)]:
                    ces.add(n=n, mu=mu, nu=nu,
                            issue=f"length-4 constituents {len4} unexpected for second part 2")
                if missing((m - 2, n - m + 1, 1)):
                    ces.add(n=n, mu=mu, nu=nu, issue="missing length-3 constituent")
                if k > 3 and missing((m - 2, n - m, 2)):
                    ces.add(n=n, mu=mu, nu=nu, issue="missing second length-3 constituent")
                if k == 3 and n >= 7 and missing((n - 4, 2, 2)):
                    ces.add(n=n, mu=mu, nu=nu, issue="missing [n-4,2,2]")
            elif len(len4) < 2:
                ces.add(n=n, mu=mu, nu=nu, issue="fewer than 2 length-4 constituents")
            if mu == (k, k) and l > 3 and len(len4) < 3:
                ces.add(n=n, mu=mu, nu=nu, issue="fewer than 3 length-4 constituents")
            if mu == (k, k) and l == 3 and missing((k + 1, k - 1)):
                ces.add(n=n, mu=mu, nu=nu, issue="missing [k+1,k-1]")
            if (mu, nu) == ((3, 3), (4, 2)):
                want = exception_product("v", mu, nu)
                if have != want:
                    ces.add(n=n, mu=mu, nu=nu, issue="two-row exceptional product mismatch",
                            expected=_render_dec(want), actual=_render_dec(have))
            elif ex.almost_extreme_report(mu, nu).count < 5:
                ces.add(n=n, mu=mu, nu=nu, issue="fewer than 5 (almost) extreme")


def _hook_counterexamples(n: int, ces: _Collector) -> None:
    for k in range(3, n):
        if n - k <= k:
            break
        for l in range(2, k):
            mu = (n - k,) + (1,) * k
            nu = (n - l,) + (1,) * l
            have = kr.kron_decompose(mu, nu).coeffs
            m = n - k + l
            wanted = [
                (m,) + (1,) * (n - m),
                (m - 1, 2) + (1,) * (n - m - 1),
                (m - 1,) + (1,) * (n - m + 1),
                (n - k - l,) + (1,) * (k + l),
                (n - k - l + 1,) + (1,) * (k + l - 1),
                (n - k - l, 2) + (1,) * (k + l - 2),
            ]
            for lam in wanted:
                if have.get(lam, 0) <= 0:
                    ces.add(n=n, mu=mu, nu=nu, lam=lam, issue="missing hook-pair constituent")
            if ex.almost_extreme_report(mu, nu).count < 6:
                ces.add(n=n, mu=mu, nu=nu, issue="fewer than 6 (almost) extreme")


def verify_special(n_max: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Natural-character products, squares, 2-part and hook families."""
    if n_max > max_n:
        raise OutOfRange(f"n_max={n_max} exceeds configured bound {max_n}")
    t0 = time.time()
    ces = _Collector()
    for n in range(2, n_max + 1):
        if n >= 3:
            _natural_identity_counterexamples(n, ces)
            _natural_classification_counterexamples(n, ces)
        _square_counterexamples(n, ces)
        _two_part_counterexamples(n, ces)
        _hook_counterexamples(n, ces)
    return ces.report("special", n_max, t0)


# ---------------------------------------------------------------------------
# skew characters with exactly two components


def _segments(*segs: tuple[int, int]) -> Partition | None:
    parts: list[int] = []
    for value, count in segs:
        if count < 0 or value < 0:
            return None
        if value > 0:
            parts.extend([value] * count)
    p = tuple(parts)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        return None
    return p


def two_component_family_instances(size: int) -> set[frozenset[Partition]]:
    """RHS constituent pairs of the eight two-component families, by size."""
    out: set[frozenset[Partition]] = set()

    def families(r: int, s: int, a: int, b: int):
        yield _segments((r + 1, 1), (r, a)), _segments((r, a + 1), (1, 1))
        yield _segments((r, 1), (1, a + 1)), _segments((r + 1, 1), (1, a))
        yield (
            _segments((r + 1, a + 1), (r, b), (s, 1)),
            _segments((r + 1, a), (r, b + 1), (s + 1, 1)),
        )
        yield (
            _segments((r + 1, a), (r, 1), (s + 1, b + 1)),
            _segments((r + 1, a + 1), (s + 1, b), (s, 1)),
        )
        yield (
            _segments((r, a + 1), (s + 1, 1), (s, b)),
            _segments((r + 1, 1), (r, a), (s, b + 1)),
        )
        yield (
            _segments((r, a), (s, b + 1), (1, 1)),
            _segments((r, a), (s + 1, 1), (s, b)),
        )
        yield (
            _segments((r, 1), (s + 1, a + 1), (s, b)),
            _segments((r + 1, 1), (s + 1, a), (s, b + 1)),
        )
        yield (
            _segments((r, a), (s, 1), (1, b + 1)),
            _segments((r, a), (s + 1, 1), (1, b)),
        )

    for r in range(1, size + 1):
        for s in range(0, size + 1):
            for a in range(0, size + 1):
                for b in range(0, size + 1):
                    for p1, p2 in families(r, s, a, b):
                        if p1 is None or p2 is None or p1 == p2:
                            continue
                        if sum(p1) == size and sum(p2) == size:
                            out.add(frozenset((p1, p2)))
    return out


def _sorted_rows_partition(shape: SkewShape) -> Partition:
    lengths = [hi - lo + 1 for _, lo, hi in shape.row_intervals()]
    return tuple(sorted(lengths, reverse=True))


def _sorted_cols_partition(shape: SkewShape) -> Partition:
    cols: dict[int, int] = {}
    for _, c in shape.cells():
        cols[c] = cols.get(c, 0) + 1
    return pt.conjugate(tuple(sorted(cols.values(), reverse=True)))


def skew_two_component_census(size_max: int) -> VerificationReport:
    """Every 2-component skew character is one of the eight known families."""
    if size_max > 10:
        raise OutOfRange(f"size_max={size_max} exceeds 10")
    t0 = time.time()
    ces = _Collector()
    for size in range(1, size_max + 1):
        instances = two_component_family_instances(size)
        for shape in pt.reduced_skew_shapes(size):
            dec = lr.skew_decompose(shape)
            if len(dec) != 2:
                continue
            if any(c != 1 for c in dec.values()):
                ces.add(shape=str(shape), issue="two-component multiplicities not 1",
                        actual=_render_dec(dec))
                continue
            want = {_sorted_rows_partition(shape), _sorted_cols_partition(shape)}
            if set(dec) != want:
                ces.add(shape=str(shape), issue="row/column sort constituents missing",
                        actual=_render_dec(dec))
            if frozenset(dec) not in instances:
                ces.add(shape=str(shape), issue="decomposition outside the eight families",
                        actual=_render_dec(dec))
    return ces.report("skew2", size_max, t0)


def skew_product_censuses(size_max: int) -> VerificationReport:
    """Products of two skew characters with one or two components."""
    t0 = time.time()
    ces = _Collector()
    for n in range(1, size_max + 1):
        shapes = pt.reduced_skew_shapes(n)
        infos = []
        for shape in shapes:
            dec = lr.skew_decompose(shape)
            cls = lr.classify_skew_shape(shape)
            infos.append((shape, kr.VirtualCharacter(n, dec), cls))
        for i in range(len(infos)):
            for j in range(i, len(infos)):
                s1, v1, c1 = infos[i]
                s2, v2, c2 = infos[j]
                c = kr.multiply(v1, v2).num_components()
                expect1 = (
                    c1.is_irreducible() and (s2.is_row() or s2.is_column())
                ) or (c2.is_irreducible() and (s1.is_row() or s1.is_column()))
                if (c == 1) != expect1:
                    ces.add(n=n, shapes=f"{s1} * {s2}", issue=f"homogeneous census: c={c}")
                expect2 = _expect_two_component_product(n, s1, v1, c1, s2, v2, c2)
                if (c == 2) != expect2:
                    ces.add(n=n, shapes=f"{s1} * {s2}", issue=f"two-component census: c={c}")
    return ces.report("skew-products", size_max, t0)


def _expect_two_component_product(n, s1, v1, c1, s2, v2, c2) -> bool:
    two_nodes = {(2,): 1, (1, 1): 1}
    if n == 2 and v1.coeffs == two_nodes and v2.coeffs == two_nodes:
        return True
    for sa, va, ca, sb, vb, cb in ((s1, v1, c1, s2, v2, c2), (s2, v2, c2, s1, v1, c1)):
        if (sa.is_row() or sa.is_column()) and vb.num_components() == 2:
            return True
        if ca.is_irreducible() and _is_nontrivial_rectangle(ca.alpha):
            if cb.is_irreducible() and cb.alpha in set(_near_trivial(n)):
                return True
        if n == 4 and ca.is_irreducible() and ca.alpha == (2, 2):
            if vb.coeffs == {(3, 1): 1, (2, 1, 1): 1}:
                return True
    return False


# ---------------------------------------------------------------------------
# oracle equivalence of the two Kronecker paths


def verify_dvir_oracle(
    n_max: int,
    samples: int = 0,
    sample_n: int = 10,
    seed: int = 0,
    max_n: int = DEFAULT_MAX_N,
) -> VerificationReport:
    """dvir_coefficient == kron_coefficient, exhaustively then sampled."""
    if n_max > max_n or sample_n > max_n:
        raise OutOfRange(f"bound exceeds configured maximum {max_n}")
    t0 = time.time()
    ces = _Collector()
    for n in range(0, n_max + 1):
        ps = pt.partitions_of(n)
        for mu in ps:
            for nu in ps:
                for lam in ps:
                    b = kr.kron_coefficient(mu, nu, lam)
                    d = kr.dvir_coefficient(mu, nu, lam)
                    if b != d:
                        ces.add(mu=mu, nu=nu, lam=lam, issue=f"brute {b} vs recursion {d}")
    if samples:
        rng = random.Random(seed)
        ps = pt.partitions_of(sample_n)
        for _ in range(samples):
            mu, nu, lam = (rng.choice(ps) for _ in range(3))
            b = kr.kron_coefficient(mu, nu, lam)
            d = kr.dvir_coefficient(mu, nu, lam)
            if b != d:
                ces.add(mu=mu, nu=nu, lam=lam, issue=f"brute {b} vs recursion {d}")
    return ces.report("dvir-oracle", n_max, t0)


# ---------------------------------------------------------------------------
# hypothesis-to-conclusion lemmas about almost-maximal width


def _chi_matches(chi: kr.VirtualCharacter, want: dict[Partition, int]) -> bool:
    return chi.coeffs == want


def _match_three_component_case(mu, nu, d, chi) -> bool:
    c = chi.coeffs
    if d == 2:
        return True
    if d % 2 == 0 and d >= 4:
        k = d // 2
        if len(mu) == 2 and mu[0] == mu[1]:
            a = mu[0] - k
            if a > d and nu == (a, a, 2 * k) and c == {
                (k + 2, k - 1): 1, (k + 1, k): 1, (k + 1, k - 1, 1): 1,
            }:
                return True
        if set(mu) == {2}:
            a = len(mu) - k
            if a > 1 and nu == (2 * k + 2,) + (2,) * (a - 1) and c == {
                (2,) * k + (1,): 1,
                (3,) + (2,) * (k - 2) + (1, 1): 1,
                (2,) * (k - 1) + (1, 1, 1): 1,
            }:
                return True
        if mu == (k + 1,) * 3 and nu == (3 * k + 1, 2) and c == {
            (k + 1, k): 1, (k, k, 1): 1, (k + 1, k - 1, 1): 1,
        }:
            return True
        if mu == (2,) * (k + 2) and nu == (2 * k + 2, 1, 1) and c == {
            (3,) + (2,) * (k - 1): 1, (2,) * k + (1,): 1, (2,) * (k - 1) + (1, 1, 1): 1,
        }:
            return True
    if d > 2:
        if set(mu) == {2 * d} and len(mu) >= 2:
            a = len(mu) - 1
            if nu == (2 * d,) * a + (d, d) and c == {
                (d, 1): 2, (d - 1, 1, 1): 1, (d - 1, 2): 1,
            }:
                return True
        if len(mu) == d and pt.is_rectangle(mu) and mu[0] >= d + 2:
            a = mu[0] - d - 1
            if a >= 1 and nu == (mu[0] - 1,) * d + (d,) and c == {
                (2,) + (1,) * (d - 1): 1,
                (2, 2) + (1,) * (d - 3): 1,
                (3,) + (1,) * (d - 2): 1,
            }:
                return True
        if set(mu) == {d} and len(mu) >= 3:
            a = len(mu) - 2
            if a >= 1 and nu == (2 * d,) + (d,) * a and c == {
                (d, 1): 1, (d - 1, 2): 1, (d - 1, 1, 1): 1,
            }:
                return True
    return False


def _match_two_component_case(mu, nu, d, chi) -> bool:
    c = chi.coeffs
    if d == 1:
        return True
    if d != 2:
        return False
    if set(mu) == {4} and len(mu) >= 2:
        a = len(mu) - 1
        if nu == (4,) * a + (2, 2) and c == {(2, 1): 2, (1, 1, 1): 1}:
            return True
    if set(mu) == {2} and len(mu) >= 3:
        a = len(mu) - 2
        if nu == (4,) + (2,) * a and c == {(2, 1): 1, (1, 1, 1): 1}:
            return True
    if len(mu) == 2 and mu[0] == mu[1] and mu[0] >= 4:
        a = mu[0] - 3
        if nu == (a + 2, a + 2, 2) and c == {(2, 1): 1, (3,): 1}:
            return True
    return False


def verify_section5(n_max: int = 9, sparse_n_max: int = 12) -> VerificationReport:
    """Width-bound, case-table, production and five-component lemmas."""
    t0 = time.time()
    ces = _Collector()
    for n in range(2, sparse_n_max + 1):
        ps = pt.partitions_of(n)
        for mu in ps:
            for nu in ps:
                _check_section5_pair(n, mu, nu, n <= n_max, n <= sparse_n_max, ces)
    return ces.report("section5", n_max, t0)


def _check_section5_pair(n, mu, nu, dense: bool, sparse: bool, ces: _Collector) -> None:
    gamma = pt.intersect(mu, nu)
    m = pt.size(gamma)
    d = n - m
    if d == 0:
        return
    star = ex.hypothesis_star(mu, nu).satisfied
    mu_skew = SkewShape(mu, gamma)
    nu_skew = SkewShape(nu, gamma)
    mu_cls = lr.classify_skew_shape(mu_skew)
    nu_cls = lr.classify_skew_shape(nu_skew)
    nu_is_row = nu_skew.is_row()
    dec = None

    def brute() -> dict:
        nonlocal dec
        if dec is None:
            dec = kr.kron_decompose(mu, nu).coeffs
        return dec

    if star:
        # width bound for the corner sum, under either hypothesis; the
        # two-irreducible case first occurs above n = 9, so it runs over
        # the wider sparse range
        case_two = (
            sparse
            and mu_cls.is_irreducible()
            and nu_cls.is_irreducible()
            and kr.multiply(
                kr.VirtualCharacter(d, {mu_cls.alpha: 1}),
                kr.VirtualCharacter(d, {nu_cls.alpha: 1}),
            ).num_components() == 2
        )
        if (dense and nu_is_row) or case_two:
            expr = ex.corner_sum_character(mu, nu)
            for theta in expr.constituents():
                if theta[0] > m - 1:
                    ces.add(n=n, mu=mu, nu=nu, theta=theta,
                            issue="corner-sum constituent too wide")

    if dense and star and mu_cls.is_irreducible() and nu_is_row:
        # case table, when some corner of gamma avoids the nu-side row
        nu_cells = nu_skew.cells()
        if any(
            not pt.is_node_connected(node, nu_cells)
            for node in pt.removable_nodes(gamma)
        ):
            chi = ex.almost_width_chi(mu, nu)
            if not chi.is_character():
                ces.add(n=n, mu=mu, nu=nu, issue="case-table chi not a character")
            else:
                c = chi.num_components()
                ok = (
                    c >= 4
                    or (c == 3 and _match_three_component_case(mu, nu, d, chi))
                    or (c == 2 and _match_two_component_case(mu, nu, d, chi))
                )
                if not ok:
                    ces.add(n=n, mu=mu, nu=nu, issue=f"case table misses chi with c={c}",
                            actual=_render_dec(chi.coeffs))
                _production_check(n, mu, nu, m, chi, ces)

    if dense and nu_is_row and mu_cls.is_irreducible():
        # production of constituents without the 2-line/hook exclusions
        bad = {(n,), (1,) * n} | set(_near_trivial(n))
        if mu != nu and mu not in bad and nu not in bad:
            alpha = mu_cls.alpha
            if alpha[0] > m or brute().get((m,) + alpha, 0) <= 0:
                ces.add(n=n, mu=mu, nu=nu, issue="widest constituent missing")
            _production_check(n, mu, nu, m, ex.almost_width_chi(mu, nu), ces)

    if sparse and star and mu_cls.is_irreducible() and nu_cls.is_irreducible():
        # rectangle times near-row: five components of almost-maximal width
        alpha, beta = mu_cls.alpha, nu_cls.alpha
        if _is_nontrivial_rectangle(alpha) and beta == (d - 1, 1):
            chi = ex.almost_width_chi(mu, nu)
            if not chi.is_character():
                ces.add(n=n, mu=mu, nu=nu, issue="five-component chi not a character")
            elif chi.num_components() < 5:
                ces.add(n=n, mu=mu, nu=nu,
                        issue=f"five-component chi has {chi.num_components()}")
            else:
                _production_check(n, mu, nu, m, chi, ces)


def _production_check(n, mu, nu, m, chi, ces: _Collector) -> None:
    dec = kr.kron_decompose(mu, nu).coeffs
    for theta in chi.constituents():
        if theta[0] > m - 1:
            ces.add(n=n, mu=mu, nu=nu, theta=theta, issue="chi constituent too wide")
        elif dec.get((m - 1,) + theta, 0) <= 0:
            ces.add(n=n, mu=mu, nu=nu, theta=theta,
                    issue="chi constituent not produced in the product")
