import pytest

from kronlab import characters as ch
from kronlab import kronecker as kr
from kronlab import partitions as pt
from kronlab.errors import SizeMismatch


def all_pair_decompositions(n):
    ps = pt.partitions_of(n)
    return {
        (mu, nu): kr.kron_decompose(mu, nu).coeffs
        for i, mu in enumerate(ps)
        for nu in ps[i:]
    }


def test_virtual_character_basics():
    a = kr.VirtualCharacter(3, {(2, 1): 2, (3,): 1})
    b = kr.VirtualCharacter(3, {(2, 1): -2, (1, 1, 1): 1})
    s = a + b
    assert s.coeffs == {(3,): 1, (1, 1, 1): 1}
    assert (a - a).is_zero()
    assert a.num_components() == 2
    assert not b.is_character()
    assert a.constituents() == [(3,), (2, 1)]
    with pytest.raises(SizeMismatch):
        kr.VirtualCharacter(3, {(2, 2): 1})
    with pytest.raises(SizeMismatch):
        a + kr.VirtualCharacter(4)


@pytest.mark.parametrize(
    "mu,nu,expected",
    [
        ((2, 1), (2, 1), {(3,): 1, (2, 1): 1, (1, 1, 1): 1}),
        ((5, 1), (3, 3), {(4, 2): 1, (3, 2, 1): 1}),
        ((4,), (2, 2), {(2, 2): 1}),
        ((4, 1), (3, 2), {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}),
    ],
)
def test_kron_decompose_examples(mu, nu, expected):
    assert kr.kron_decompose(mu, nu, "brute").coeffs == expected
    assert kr.kron_decompose(mu, nu, "dvir").coeffs == expected


def test_kron_decompose_rejects():
    with pytest.raises(SizeMismatch):
        kr.kron_decompose((3, 1), (2, 1))
    with pytest.raises(ValueError):
        kr.kron_decompose((2, 1), (2, 1), method="belt-and-braces")


@pytest.mark.parametrize(
    "mu,nu,lam,expected",
    [
        ((3, 2), (4, 1), (4, 1), 1),
        ((2, 2), (4,), (2, 2), 1),
        ((2, 2), (4,), (3, 1), 0),
        ((3, 3), (3, 3), (6,), 1),
        ((2, 1), (2, 1), (2, 1), 1),
    ],
)
def test_coefficient_examples(mu, nu, lam, expected):
    assert kr.kron_coefficient(mu, nu, lam) == expected
    assert kr.dvir_coefficient(mu, nu, lam) == expected


def test_identity_with_trivial_character():
    for lam in pt.partitions_of(5):
        assert kr.kron_decompose((5,), lam).coeffs == {lam: 1}
        assert kr.kron_decompose((1, 1, 1, 1, 1), lam).coeffs == {pt.conjugate(lam): 1}


@pytest.mark.parametrize(
    "mu,nu,expected",
    [((3, 2), (4, 1), (4, 3)), ((2, 1), (2, 1), (3, 3)), ((4,), (2, 2), (2, 2))],
)
def test_rect_hull(mu, nu, expected):
    assert kr.rect_hull(mu, nu) == expected


def test_hull_is_attained():
    for n in range(2, 10):
        for (mu, nu), dec in all_pair_decompositions(n).items():
            m, m_t = kr.rect_hull(mu, nu)
            assert max(lam[0] for lam in dec) == m, (mu, nu)
            assert max(len(lam) for lam in dec) == m_t, (mu, nu)


def test_full_symmetry_and_conjugation():
    for n in range(2, 7):
        ps = pt.partitions_of(n)
        dec = {(a, b): kr.kron_decompose(a, b).coeffs for a in ps for b in ps}
        for mu in ps:
            for nu in ps:
                d = dec[(mu, nu)]
                assert d == dec[(nu, mu)]
                conj = {pt.conjugate(lam): c for lam, c in d.items()}
                assert conj == dec[(pt.conjugate(mu), nu)]
                assert d == dec[(pt.conjugate(mu), pt.conjugate(nu))]
                for lam, c in d.items():
                    assert dec[(mu, lam)].get(nu, 0) == c


def test_dimension_count():
    for n in range(2, 9):
        for (mu, nu), dec in all_pair_decompositions(n).items():
            total = sum(c * ch.degree(lam) for lam, c in dec.items())
            assert total == ch.degree(mu) * ch.degree(nu), (mu, nu)


def test_homogeneous_iff_trivial_factor():
    for n in range(2, 10):
        trivial = {(n,), (1,) * n}
        for (mu, nu), dec in all_pair_decompositions(n).items():
            if len(dec) == 1:
                (mult,) = dec.values()
                assert mult == 1
                assert mu in trivial or nu in trivial, (mu, nu)
            else:
                assert mu not in trivial and nu not in trivial


def test_two_components_iff_rectangle_times_near_trivial():
    for n in range(2, 10):
        near = {(n - 1, 1), (2,) + (1,) * (n - 2)}
        for (mu, nu), dec in all_pair_decompositions(n).items():
            two = len(dec) == 2
            rect_near = (
                pt.is_rectangle(mu) and len(mu) > 1 and mu[0] > 1 and nu in near
            ) or (pt.is_rectangle(nu) and len(nu) > 1 and nu[0] > 1 and mu in near)
            assert two == rect_near, (mu, nu)
            if two:
                rect = mu if pt.is_rectangle(mu) and mu not in near else nu
                other = nu if rect is mu else mu
                a, b = rect[0], len(rect)
                if other != (n - 1, 1):
                    a, b = b, a
                assert dec == {
                    (a + 1,) + (a,) * (b - 2) + (a - 1,): 1,
                    (a,) * (b - 1) + (a - 1, 1): 1,
                }, (mu, nu)


def test_oracle_equivalence_small():
    for n in range(0, 7):
        ps = pt.partitions_of(n)
        for mu in ps:
            for nu in ps:
                for lam in ps:
                    assert kr.dvir_coefficient(mu, nu, lam) == kr.kron_coefficient(
                        mu, nu, lam
                    )


def test_induce_one_step():
    assert kr.induce_one_step(kr.VirtualCharacter(2, {(2,): 1})).coeffs == {
        (3,): 1,
        (2, 1): 1,
    }
    assert kr.induce_one_step(kr.VirtualCharacter(1, {(1,): 1})).coeffs == {
        (2,): 1,
        (1, 1): 1,
    }
    both = kr.VirtualCharacter(2, {(2,): 1, (1, 1): 1})
    assert kr.induce_one_step(both).coeffs == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}


def test_component_count_examples():
    assert kr.component_count((2, 1), (2, 1)) == 3
    assert kr.component_count((3, 3), (3, 3)) == 4
    assert kr.component_count((4,), (2, 2)) == 1


def test_multiply_bilinearity():
    x = kr.VirtualCharacter(3, {(2, 1): 1, (3,): 2})
    y = kr.VirtualCharacter(3, {(1, 1, 1): 1})
    prod = kr.multiply(x, y)
    assert prod.coeffs == {(2, 1): 1, (1, 1, 1): 2}
    z = kr.multiply(kr.VirtualCharacter(3, {(2, 1): 1}), kr.VirtualCharacter(3, {(2, 1): 1}))
    assert z.coeffs == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
