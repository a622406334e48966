"""Alternating integer forms: restriction, polarization type, phi_L, K(L).

The form matrix lives in a fixed lattice basis. phi_L is only ever evaluated
on torsion points (that is all the downstream geometry needs), and K(L) is
computed as the quotient of the dual lattice of the form by the lattice.
"""

from dataclasses import dataclass

from .characters import Character, trivial_character
from .errors import DegenerateForm, IncompatibleLattice, InvalidRank
from .lattice import (Lattice, SublatticeEmbedding, quotient_group,
                      torsion_subgroup)
from .linalg import (determinant, diagonal, mat_mul, smith_normal_form,
                     transpose)


@dataclass(frozen=True)
class AlternatingForm:
    lattice: Lattice
    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix",
                           tuple(tuple(int(x) for x in row) for row in self.matrix))
        n = self.lattice.rank
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("matrix must be rank x rank")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError("matrix must be skew-symmetric")

    def rows(self):
        return [list(r) for r in self.matrix]

    def scaled(self, k):
        return AlternatingForm(self.lattice,
                               tuple(tuple(k * x for x in row) for row in self.matrix))

    def to_json(self):
        return {"lattice": self.lattice.to_json(),
                "matrix": [list(r) for r in self.matrix]}


@dataclass(frozen=True)
class PolarizationType:
    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 1 or self.d2 % self.d1 != 0:
            raise ValueError("need positive d1 | d2")

    def to_json(self):
        return [self.d1, self.d2]


def restrict_form(f, e):
    if f.lattice != e.ambient:
        raise IncompatibleLattice("form does not live on the ambient lattice")
    m = e.rows()
    restricted = mat_mul(mat_mul(transpose(m), f.rows()), m)
    return AlternatingForm(e.sub, tuple(tuple(row) for row in restricted))


def polarization_type(f):
    """Elementary divisors (d1, d2) of a nondegenerate rank-4 skew form.

    Each divisor appears twice in the Smith form of a skew matrix; they are
    reported once, matching the usual (d1, d2) polarization convention.
    """
    if f.lattice.rank != 4:
        raise InvalidRank("polarization type is defined for rank 4")
    if determinant(f.rows()) == 0:
        raise DegenerateForm("form is degenerate")
    _, d, _ = smith_normal_form(f.rows())
    diag = diagonal(d)
    if diag[0] != diag[1] or diag[2] != diag[3]:
        raise DegenerateForm("skew form divisors must pair up")
    return PolarizationType(diag[0], diag[2])


def phi_L_on_point(f, x):
    """The character exp(2*pi*i*f(., x)) evaluated on the basis vectors."""
    if x.lattice != f.lattice:
        raise IncompatibleLattice("point does not live on the form's lattice")
    values = tuple(sum(m_ij * xj for m_ij, xj in zip(row, x.coords))
                   for row in f.matrix)
    return Character(f.lattice, values)


def kernel_K_L(f):
    """The group of torsion points pairing integrally with the whole lattice.

    Equals dual-lattice / lattice; the embedding of the lattice into its dual
    has matrix f^T in the basis dual to f, so the quotient machinery applies
    directly and the generators come back in lattice coordinates.
    """
    if determinant(f.rows()) == 0:
        raise DegenerateForm("form is degenerate")
    dual = Lattice(f.lattice.rank,
                   tuple(label + "*" for label in f.lattice.basis_labels))
    e = SublatticeEmbedding(dual, f.lattice, tuple(zip(*f.matrix)))
    return quotient_group(e)


def phi_two_torsion_data(f):
    """(kernel, image) of phi_L on the 2-torsion points."""
    if determinant(f.rows()) == 0:
        raise DegenerateForm("form is degenerate")
    kernel = set()
    image = set()
    for x in torsion_subgroup(f.lattice, 2):
        chi = phi_L_on_point(f, x)
        image.add(chi)
        if chi == trivial_character(f.lattice):
            kernel.add(x)
    return kernel, image
