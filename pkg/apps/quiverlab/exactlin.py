"""Exact linear algebra over a prime field.

Matrices are plain ``numpy`` arrays of dtype ``int64`` whose entries are
residues ``0 <= x < p``. A ``PrimeField`` knows ``p`` and performs every
operation modulo ``p``. Elimination always pivots on the first nonzero entry, so
results are reproducible bit for bit.

The prime is kept below ``MAX_PRIME`` so that products of two residues, summed
over any realistic inner dimension, fit in an ``int64``.

>>> field = PrimeField(101)
>>> reduced, pivots, rank = field.rref([[1, 2], [2, 4]])
>>> reduced.tolist(), pivots, rank
([[1, 2], [0, 0]], [0], 1)

"""
import itertools

from django.core.exceptions import ValidationError
import numpy as np
from sympy import isprime

MAX_PRIME = 2 ** 20


def validate_prime(number):
    """Check whether ``number`` is a prime usable as a field order.

    If check fails, raise a ``ValidationError``.

    >>> from django.core.exceptions import ValidationError
    >>> validate_prime(2)
    >>> validate_prime(101)
    >>> try:
    ...     validate_prime(100)
    ... except ValidationError:
    ...     'an exception was raised'
    'an exception was raised'

    """
    if not isprime(number):
        raise ValidationError('{} is not prime.'.format(number))
    if number > MAX_PRIME:
        raise ValidationError(
            '{} exceeds the largest supported prime, {}.'.format(
                number, MAX_PRIME
            )
        )


def gaussian_binomial(n, k, prime):
    """Return the number of ``k``-dimensional subspaces of ``F_p^n``.

    >>> gaussian_binomial(2, 1, 101)
    102
    >>> gaussian_binomial(3, 0, 5), gaussian_binomial(2, 3, 5)
    (1, 0)

    """
    if k < 0 or k > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= prime ** (n - i) - 1
        denominator *= prime ** (i + 1) - 1
    return numerator // denominator


class PrimeField(object):
    """The field with ``prime`` elements, and matrix arithmetic over it."""

    def __init__(self, prime):
        validate_prime(prime)
        self.prime = int(prime)

    def __repr__(self):
        return 'PrimeField({})'.format(self.prime)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.prime == self.prime

    def __hash__(self):
        return hash(('PrimeField', self.prime))

    # constructors

    def matrix(self, rows, shape=None):
        """Return ``rows`` as a reduced ``int64`` array.

        ``shape`` is needed to build matrices with zero rows or columns from an
        empty sequence.

        >>> PrimeField(7).matrix([[8, -1]]).tolist()
        [[1, 6]]
        >>> PrimeField(7).matrix([], shape=(0, 3)).shape
        (0, 3)

        """
        array = np.array(rows, dtype=np.int64)
        if shape is not None:
            array = array.reshape(shape)
        return np.mod(array, self.prime)

    def zeros(self, rows, cols):
        """Return the zero matrix of the given shape."""
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, size):
        """Return the identity matrix of the given size."""
        return np.eye(size, dtype=np.int64)

    def scalar(self, value):
        """Return ``value`` reduced modulo the prime, as a python ``int``."""
        return int(value) % self.prime

    def inverse_scalar(self, value):
        """Return the multiplicative inverse of a nonzero residue.

        >>> PrimeField(7).inverse_scalar(3)
        5

        """
        value = self.scalar(value)
        if value == 0:
            raise ZeroDivisionError('0 has no inverse modulo {}'.format(
                self.prime
            ))
        return pow(value, self.prime - 2, self.prime)

    # arithmetic

    def mul(self, *matrices):
        """Return the product of ``matrices``, left to right."""
        result = matrices[0]
        for matrix in matrices[1:]:
            result = np.mod(result @ matrix, self.prime)
        return np.mod(result, self.prime)

    def add(self, *matrices):
        """Return the sum of ``matrices``."""
        result = matrices[0]
        for matrix in matrices[1:]:
            result = result + matrix
        return np.mod(result, self.prime)

    def neg(self, matrix):
        """Return ``-matrix``."""
        return np.mod(-matrix, self.prime)

    def scale(self, value, matrix):
        """Return ``value * matrix``."""
        return np.mod(self.scalar(value) * matrix, self.prime)

    def kron(self, left, right):
        """Return the Kronecker product of two matrices."""
        return np.mod(np.kron(left, right), self.prime).reshape(
            left.shape[0] * right.shape[0],
            left.shape[1] * right.shape[1],
        )

    def is_zero(self, matrix):
        """Tell whether every entry of ``matrix`` is zero."""
        return not np.any(matrix)

    # elimination

    def rref(self, matrix):
        """Return ``(reduced, pivots, rank)`` for ``matrix``.

        ``reduced`` is the reduced row echelon form, ``pivots`` the list of pivot
        columns and ``rank`` their number.

        >>> field = PrimeField(101)
        >>> reduced, pivots, rank = field.rref(field.identity(2))
        >>> reduced.tolist(), pivots, rank
        ([[1, 0], [0, 1]], [0, 1], 2)
        >>> field.rref(field.zeros(3, 2))[1:]
        ([], 0)

        """
        reduced = self.matrix(matrix).copy()
        if reduced.ndim != 2:
            raise ValueError('rref expects a two dimensional matrix')
        rows, cols = reduced.shape
        pivots = []
        row = 0
        for col in range(cols):
            if row == rows:
                break
            nonzero = np.nonzero(reduced[row:, col])[0]
            if not nonzero.size:
                continue
            pivot_row = row + int(nonzero[0])
            if pivot_row != row:
                reduced[[row, pivot_row]] = reduced[[pivot_row, row]]
            reduced[row] = np.mod(
                reduced[row] * self.inverse_scalar(reduced[row, col]),
                self.prime,
            )
            factors = reduced[:, col].copy()
            factors[row] = 0
            if np.any(factors):
                reduced = np.mod(
                    reduced - np.outer(factors, reduced[row]),
                    self.prime,
                )
            pivots.append(col)
            row += 1
        return reduced, pivots, len(pivots)

    def rank(self, matrix):
        """Return the rank of ``matrix``."""
        return self.rref(matrix)[2]

    def kernel_basis(self, matrix):
        """Return a matrix whose columns are a basis of the null space.

        >>> field = PrimeField(101)
        >>> kernel = field.kernel_basis([[1, 2], [2, 4]])
        >>> kernel.shape
        (2, 1)
        >>> field.mul(field.matrix([[1, 2], [2, 4]]), kernel).tolist()
        [[0], [0]]
        >>> field.kernel_basis(field.identity(3)).shape
        (3, 0)

        """
        reduced, pivots, _ = self.rref(matrix)
        cols = reduced.shape[1]
        pivot_set = set(pivots)
        free = [col for col in range(cols) if col not in pivot_set]
        kernel = self.zeros(cols, len(free))
        for j, free_col in enumerate(free):
            kernel[free_col, j] = 1
            for i, pivot_col in enumerate(pivots):
                kernel[pivot_col, j] = (-reduced[i, free_col]) % self.prime
        return kernel

    def column_space(self, matrix):
        """Return the pivot columns of ``matrix``, a basis of its image."""
        matrix = self.matrix(matrix)
        pivots = self.rref(matrix)[1]
        return matrix[:, pivots]

    def solve(self, matrix, vector):
        """Return some ``x`` with ``matrix @ x == vector``, or ``None``.

        >>> field = PrimeField(101)
        >>> x = field.solve([[1, 1], [0, 0]], [3, 0])
        >>> int(sum(x)) % 101
        3
        >>> field.solve(field.zeros(2, 2), [1, 0]) is None
        True

        """
        matrix = self.matrix(matrix)
        vector = self.matrix(vector).reshape(-1)
        rows, cols = matrix.shape
        if vector.shape[0] != rows:
            raise ValueError('right hand side has {} entries, expected {}'.format(
                vector.shape[0], rows
            ))
        augmented = np.concatenate([matrix, vector.reshape(rows, 1)], axis=1)
        reduced, pivots, _ = self.rref(augmented)
        if pivots and pivots[-1] == cols:
            return None
        solution = np.zeros(cols, dtype=np.int64)
        for i, pivot_col in enumerate(pivots):
            solution[pivot_col] = reduced[i, cols]
        return solution

    def solve_matrix(self, matrix, rhs):
        """Return some ``X`` with ``matrix @ X == rhs``, or ``None``."""
        matrix = self.matrix(matrix)
        rhs = self.matrix(rhs)
        columns = []
        for j in range(rhs.shape[1]):
            column = self.solve(matrix, rhs[:, j])
            if column is None:
                return None
            columns.append(column)
        if not columns:
            return self.zeros(matrix.shape[1], 0)
        return np.stack(columns, axis=1)

    def quotient_basis(self, subspace, ambient_dim):
        """Return ``(projection, coset_reps)`` for ``F^n / span(subspace)``.

        ``subspace`` is an ``n x k`` matrix whose columns span the subspace,
        where ``n`` is ``ambient_dim``. ``projection`` is ``(n - r) x n`` and
        annihilates the subspace; ``coset_reps`` is ``n x (n - r)``, made of
        unit vectors, and ``projection @ coset_reps`` is the identity.

        >>> field = PrimeField(101)
        >>> projection, reps = field.quotient_basis(field.matrix([[1], [0]]), 2)
        >>> projection.tolist(), reps.tolist()
        ([[0, 1]], [[0], [1]])
        >>> field.quotient_basis(field.zeros(3, 0), 3)[0].tolist()
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

        """
        subspace = self.matrix(subspace, shape=None)
        if subspace.size == 0:
            subspace = self.zeros(ambient_dim, 0)
        reduced, pivots, rank = self.rref(subspace.T)
        pivot_set = set(pivots)
        free = [col for col in range(ambient_dim) if col not in pivot_set]
        projection = self.zeros(ambient_dim - rank, ambient_dim)
        reps = self.zeros(ambient_dim, ambient_dim - rank)
        for i, free_col in enumerate(free):
            projection[i, free_col] = 1
            reps[free_col, i] = 1
            for j, pivot_col in enumerate(pivots):
                projection[i, pivot_col] = (-reduced[j, free_col]) % self.prime
        return projection, reps

    def inverse(self, matrix):
        """Return the inverse of a square matrix, or ``None`` if singular.

        >>> field = PrimeField(7)
        >>> field.inverse([[2, 0], [0, 3]]).tolist()
        [[4, 0], [0, 5]]
        >>> field.inverse([[1, 1], [1, 1]]) is None
        True

        """
        matrix = self.matrix(matrix)
        size = matrix.shape[0]
        if matrix.shape != (size, size):
            raise ValueError('only square matrices have inverses')
        augmented = np.concatenate([matrix, self.identity(size)], axis=1)
        reduced, pivots, _ = self.rref(augmented)
        if pivots[:size] != list(range(size)):
            return None
        return reduced[:, size:]

    def is_invertible(self, matrix):
        """Tell whether a square matrix is invertible."""
        matrix = self.matrix(matrix)
        return matrix.shape[0] == matrix.shape[1] and \
            self.rank(matrix) == matrix.shape[0]

    def is_nilpotent(self, matrix):
        """Tell whether a square matrix is nilpotent."""
        matrix = self.matrix(matrix)
        power = matrix
        for _ in range(max(matrix.shape[0].bit_length(), 1)):
            power = self.mul(power, power)
        return self.is_zero(power)

    def column_echelon_forms(self, rows, cols):
        """Yield every ``rows x cols`` matrix of rank ``cols`` in reduced column
        echelon form.

        Each one is the unique representative of a ``cols``-dimensional subspace
        of ``F^rows``, so there are ``gaussian_binomial(rows, cols, p)`` of them.

        >>> forms = list(PrimeField(3).column_echelon_forms(2, 1))
        >>> [form.T.tolist() for form in forms]
        [[[1, 0]], [[1, 1]], [[1, 2]], [[0, 1]]]

        """
        for pivots in itertools.combinations(range(rows), cols):
            pivot_set = set(pivots)
            free = [
                (j, row)
                for j, pivot in enumerate(pivots)
                for row in range(pivot + 1, rows)
                if row not in pivot_set
            ]
            for values in itertools.product(range(self.prime), repeat=len(free)):
                form = self.zeros(rows, cols)
                for j, pivot in enumerate(pivots):
                    form[pivot, j] = 1
                for (j, row), value in zip(free, values):
                    form[row, j] = value
                yield form
