"""
Exact rank and nullspace of rational matrices.

Rows are cleared of denominators and handed to sympy's DomainMatrix over ZZ;
nullspaces are computed over QQ and converted back to Fraction.
"""
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

Vector = List[Fraction]


def integer_row(row: Sequence) -> List[int]:
    """Scale a rational row to integers (row is assumed non-empty)."""
    fractions = [Fraction(v) for v in row]
    scale = lcm(*(f.denominator for f in fractions)) if fractions else 1
    return [int(f * scale) for f in fractions]


def _domain_matrix(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    data = [[ZZ(v) for v in integer_row(row)] for row in rows]
    return DomainMatrix(data, (len(data), ncols), ZZ)


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return _domain_matrix(rows, ncols).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Vector]:
    """Basis of {x : rows . x = 0}, as rows of exact fractions."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = _domain_matrix(rows, ncols).to_field().nullspace()
    return [
        [Fraction(int(q.numerator), int(q.denominator)) for q in vector]
        for vector in basis.to_list()
    ]


def dot(row: Sequence, vector: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(row, vector)), Fraction(0))


def combine(coefficients: Sequence, vectors: Sequence[Sequence]) -> Vector:
    size = len(vectors[0]) if vectors else 0
    total = [Fraction(0)] * size
    for c, vector in zip(coefficients, vectors):
        for k, value in enumerate(vector):
            total[k] += c * value
    return total


def primitive_integer_vector(vector: Sequence) -> List[Fraction]:
    """Positive rescaling of vector to coprime integers (zero stays zero)."""
    ints = integer_row(vector) if vector else []
    common = 0
    for v in ints:
        common = gcd(common, v)
    if common == 0:
        return [Fraction(0)] * len(ints)
    return [Fraction(v // common) for v in ints]
