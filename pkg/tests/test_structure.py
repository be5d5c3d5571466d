import pytest

from gaussian_ideals.algebra.poly import PolyRing
from gaussian_ideals.errors import RingMismatchError
from gaussian_ideals.verify.structure import (
    ALGEBRAS,
    capped_algebra,
    check_struct_content,
    cyclic_algebra,
    gauss_lemma_probe,
    is_associative,
    make_algebra,
    struct_content,
    struct_multiply,
    struct_reduction_probe,
    truncated_algebra,
)


@pytest.mark.parametrize("kind", sorted(ALGEBRAS))
@pytest.mark.parametrize("rank", [1, 2, 3])
def test_tables_are_associative(kind, rank):
    assert is_associative(make_algebra(kind, rank))


def test_unknown_kind_and_rank():
    with pytest.raises(ValueError):
        make_algebra("octonion", 2)
    with pytest.raises(ValueError):
        truncated_algebra(0)


def test_truncated_products():
    A = truncated_algebra(3)
    e1 = A.basis_element(1)
    assert struct_multiply(A, e1, e1) == A.basis_element(2)
    B = truncated_algebra(2)
    assert all(c.is_zero() for c in struct_multiply(B, B.basis_element(1), B.basis_element(1)))
    assert A.labels == ("1", "t", "t^2")


def test_capped_and_cyclic_products():
    A = capped_algebra(3)
    assert struct_multiply(A, A.basis_element(2), A.basis_element(1)) == A.basis_element(2)
    C = cyclic_algebra(3)
    assert struct_multiply(C, C.basis_element(2), C.basis_element(1)) == C.basis_element(0)


def test_struct_content_validation():
    A = truncated_algebra(2)
    with pytest.raises(ValueError):
        struct_content(A, A.basis_element(0)[:1])
    other = PolyRing(("a", "b"))
    with pytest.raises(RingMismatchError):
        struct_content(A, (other.one(), other.zero()))


def test_content_of_identity_is_unit():
    A = capped_algebra(2)
    I = struct_content(A, A.basis_element(0))
    assert I.generators == (A.ring.one(),)


def test_gauss_lemma_probe():
    assert gauss_lemma_probe(truncated_algebra(3))
    assert gauss_lemma_probe(capped_algebra(2))
    assert not gauss_lemma_probe(cyclic_algebra(2))


def test_capped_rank_two_is_not_a_reduction():
    assert struct_reduction_probe(capped_algebra(2), 2) is None


def test_truncated_rank_two_is_not_a_reduction():
    assert struct_reduction_probe(truncated_algebra(2), 1) is None


def test_check_struct_content_truncated():
    claims = {c.name: c for c in check_struct_content(truncated_algebra(3), bound=1)}
    assert set(claims) == {"associative", "polynomial_case", "reduction_probe", "gauss_lemma_probe"}
    assert claims["associative"].passed
    assert claims["polynomial_case"].passed
    assert claims["polynomial_case"].detail == {"m": 1, "n": 1}
    assert claims["reduction_probe"].exploratory
    assert claims["gauss_lemma_probe"].exploratory


def test_check_struct_content_cyclic_failures_are_exploratory():
    claims = {c.name: c for c in check_struct_content(cyclic_algebra(2))}
    assert "polynomial_case" not in claims
    assert not claims["gauss_lemma_probe"].passed
    assert claims["gauss_lemma_probe"].exploratory
