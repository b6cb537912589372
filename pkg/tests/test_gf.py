"""Field arithmetic and matrix algebra, checked against brute force.

Every derived expectation in here was computed by an independent
enumeration (product scans, span-size counts, kernel enumeration)
before being frozen into an assertion; several tests keep the
enumeration inline so the oracle stays visible.
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from secix import GF, FieldMatrix, is_prime, smallest_prime_at_least, vandermonde

SMALL_PRIMES = [2, 3, 5, 7]


# ---- independent oracles ---------------------------------------------------

def span_of_rows(q, rows):
    """All linear combinations of the given row vectors, by enumeration."""
    rows = [tuple(r) for r in rows]
    width = len(rows[0]) if rows else 0
    vectors = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        v = tuple(sum(c * r[i] for c, r in zip(coeffs, rows)) % q for i in range(width))
        vectors.add(v)
    return vectors


def rank_by_span(q, rows):
    size = len(span_of_rows(q, rows))
    r = 0
    while q ** r < size:
        r += 1
    assert q ** r == size, "span size is not a power of q"
    return r


def kernel_by_enumeration(mat: FieldMatrix):
    q = mat.q
    kernel = set()
    for v in itertools.product(range(q), repeat=mat.cols):
        col = FieldMatrix.column(q, v)
        if (mat @ col).is_zero():
            kernel.add(v)
    return kernel


# ---- primality helpers -----------------------------------------------------

def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for n in range(-3, 25):
        assert is_prime(n) == (n in primes)


def test_smallest_prime_at_least():
    assert smallest_prime_at_least(1) == 2
    assert smallest_prime_at_least(4) == 5
    assert smallest_prime_at_least(5) == 5
    assert smallest_prime_at_least(8) == 11


# ---- element arithmetic ------------------------------------------------------

def test_add_examples():
    assert GF(5).add(3, 4) == 2
    assert GF(2).add(1, 1) == 0


def test_mul_example_against_scan():
    # expected value fixed by scanning all products mod 7
    table = {(a, b): (a * b) % 7 for a in range(7) for b in range(7)}
    assert table[(3, 5)] == 1
    assert GF(7).mul(3, 5) == 1


def test_inverse_examples():
    assert GF(5).inv(2) == 3
    assert GF(2).inv(1) == 1


def test_inverse_by_exhaustive_scan_q11():
    matches = [b for b in range(11) if (7 * b) % 11 == 1]
    assert matches == [8]
    assert GF(11).inv(7) == 8


def test_inverse_of_zero_rejected():
    for q in SMALL_PRIMES:
        with pytest.raises(ZeroDivisionError):
            GF(q).inv(0)


def test_inverse_property_all_small_fields():
    for q in SMALL_PRIMES + [11]:
        gf = GF(q)
        for a in range(1, q):
            assert gf.mul(a, gf.inv(a)) == 1


def test_field_axioms_exhaustive():
    """Associativity, commutativity, distributivity for q <= 7."""
    for q in SMALL_PRIMES:
        gf = GF(q)
        elems = list(gf.elements())
        for a in elems:
            for b in elems:
                assert gf.add(a, b) == gf.add(b, a)
                assert gf.mul(a, b) == gf.mul(b, a)
                for c in elems:
                    assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
                    assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
                    assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_field_axioms_sampled_q11(a, b, c):
    gf = GF(11)
    assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
    assert gf.add(gf.sub(a, b), b) == a


def test_composite_modulus_rejected():
    for q in (0, 1, 4, 6, 9, 12):
        with pytest.raises(ValueError):
            GF(q)
        with pytest.raises(ValueError):
            FieldMatrix(q, [[1]])


# ---- matrices ----------------------------------------------------------------

def test_rank_trivial_cases():
    assert FieldMatrix.identity(2, 3).rank() == 3
    assert FieldMatrix.zeros(2, 2, 2).rank() == 0


def test_rank_dependent_rows_q3():
    # (2,1) = 2*(1,2) mod 3, so the span has 3 vectors: rank 1
    rows = [[1, 2], [2, 1]]
    assert rank_by_span(3, rows) == 1
    assert FieldMatrix(3, rows).rank() == 1


def test_rank_matches_span_oracle_on_random_matrices():
    rng = np.random.default_rng(7)
    for q in (2, 3, 5):
        for _ in range(20):
            shape = (rng.integers(1, 4), rng.integers(1, 4))
            data = rng.integers(0, q, size=shape)
            mat = FieldMatrix(q, data)
            assert mat.rank() == rank_by_span(q, data.tolist())


def test_solve_identity_and_scalar():
    eye = FieldMatrix.identity(2, 2)
    sol = eye.solve(FieldMatrix.column(2, [1, 0]))
    assert sol == FieldMatrix.column(2, [1, 0])
    scalar = FieldMatrix(5, [[2]])
    assert scalar.solve(FieldMatrix.column(5, [1])) == FieldMatrix.column(5, [3])


def test_solve_inconsistent_system():
    # overdetermined over GF(3); exhaustively confirmed unsolvable
    a = FieldMatrix(3, [[1], [1]])
    b = FieldMatrix.column(3, [0, 1])
    for x in range(3):
        assert [(x) % 3, (x) % 3] != [0, 1]
    assert a.solve(b) is None


def test_solve_unique_solution_is_returned():
    a = FieldMatrix(5, [[1, 2], [3, 4]])
    x = FieldMatrix.column(5, [2, 3])
    b = a @ x
    assert a.solve(b) == x


@st.composite
def matrix_and_vector(draw):
    q = draw(st.sampled_from([2, 3, 5]))
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    data = draw(
        st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols),
                 min_size=rows, max_size=rows)
    )
    x = draw(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols))
    return FieldMatrix(q, data), x


@given(matrix_and_vector())
@settings(max_examples=60)
def test_solve_roundtrip_property(mx):
    mat, x = mx
    b = mat @ FieldMatrix.column(mat.q, x)
    sol = mat.solve(b)
    assert sol is not None
    assert mat @ sol == b


def test_nullspace_parity_and_full_rank():
    parity = FieldMatrix(2, [[1, 1]])
    basis = parity.nullspace()
    assert basis.cols == 1
    assert basis.column_values(0) == (1, 1)
    assert FieldMatrix.identity(3, 2).nullspace().cols == 0


def test_nullspace_matches_kernel_enumeration_q5():
    mat = FieldMatrix(5, [[1, 2, 3]])
    kernel = kernel_by_enumeration(mat)
    assert len(kernel) == 25  # 5^(3-1): two free dimensions
    basis = mat.nullspace()
    assert basis.cols == 2
    spanned = span_of_rows(5, [basis.column_values(j) for j in range(basis.cols)])
    assert spanned == kernel


@given(matrix_and_vector())
@settings(max_examples=60)
def test_nullspace_properties(mx):
    mat, _ = mx
    basis = mat.nullspace()
    assert basis.cols == mat.cols - mat.rank()
    for j in range(basis.cols):
        col = FieldMatrix.column(mat.q, basis.column_values(j))
        assert (mat @ col).is_zero()
    if basis.cols:
        assert basis.rank() == basis.cols


def test_mismatched_moduli_raise():
    a = FieldMatrix(2, [[1]])
    b = FieldMatrix(3, [[1]])
    with pytest.raises(ValueError):
        a @ b
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a.solve(FieldMatrix.column(3, [1]))


def test_matrix_entries_reduced_and_immutable():
    mat = FieldMatrix(3, [[4, -1], [6, 2]])
    assert mat.to_lists() == [[1, 2], [0, 2]]
    with pytest.raises(ValueError):
        mat.data[0, 0] = 9


# ---- vandermonde -------------------------------------------------------------

def test_vandermonde_small_shapes():
    assert vandermonde(3, 1, 3).to_lists() == [[1], [1], [1]]
    assert vandermonde(3, 2, 3).to_lists() == [[1, 0], [1, 1], [1, 2]]


def test_vandermonde_every_row_subset_independent():
    for m, l, q in [(4, 2, 5), (5, 3, 5), (6, 4, 7), (4, 3, 5)]:
        mat = vandermonde(m, l, q)
        for subset in itertools.combinations(range(m), l):
            rows = [mat.to_lists()[i] for i in subset]
            assert rank_by_span(q, rows) == l, (m, l, q, subset)


def test_vandermonde_field_too_small():
    with pytest.raises(ValueError):
        vandermonde(4, 2, 3)
    with pytest.raises(ValueError):
        vandermonde(3, 4, 5)
