"""The reference (1,2)-polarized surface and its origin-singularity calculus.

The fixture is an index-2 sublattice of a product lattice. Everything the
classification needs is rational: the isogeny image of a torsion point, which
translated reducible members pass through the origin, and a two-route verdict
(closed form on character values vs exhaustive enumeration on 4-torsion).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import Character, trivial_character
from .errors import IncompatibleLattice, InvalidTwist
from .lattice import (Lattice, SublatticeEmbedding, TorsionPoint,
                      reduce_mod1, sublattice_index, torsion_subgroup)
from .linalg import integer_kernel_basis
from .polarization import (AlternatingForm, phi_L_on_point,
                           phi_two_torsion_data, polarization_type,
                           restrict_form)

SINGULARITY_NONE = "none"
SINGULARITY_SMOOTH = "smooth_point"
SINGULARITY_NODE = "node"

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SpecialAbelianSurface:
    embedding: SublatticeEmbedding
    form_B: AlternatingForm
    form_A: AlternatingForm

    def __post_init__(self):
        if sublattice_index(self.embedding) != 2:
            raise ValueError("embedding must have index 2")
        if self.form_A != restrict_form(self.form_B, self.embedding):
            raise ValueError("form_A must be the restriction of form_B")
        t = polarization_type(self.form_A)
        if (t.d1, t.d2) != (1, 2):
            raise ValueError("restricted form must have type (1,2)")


@dataclass(frozen=True)
class ProductPoint:
    e1: tuple  # (coefficient of tau1, coefficient of 1) mod 1
    e2: tuple

    def __post_init__(self):
        object.__setattr__(self, "e1", tuple(reduce_mod1(c) for c in self.e1))
        object.__setattr__(self, "e2", tuple(reduce_mod1(c) for c in self.e2))
        if len(self.e1) != 2 or len(self.e2) != 2:
            raise ValueError("factor points have two coordinates each")

    def to_json(self):
        return {"e1": [str(c) for c in self.e1], "e2": [str(c) for c in self.e2]}


def reference_lattice_b():
    return Lattice(4, ("lambda1", "lambda2", "mu1", "mu2"))


def reference_lattice_a():
    return Lattice(4, ("lambda1", "lambda1+lambda2", "mu1-mu2", "2mu2"))


def reference_embedding():
    # columns: lambda1, lambda1+lambda2, mu1-mu2, 2mu2 in the ambient basis
    return SublatticeEmbedding(reference_lattice_b(), reference_lattice_a(),
                               ((1, 1, 0, 0),
                                (0, 1, 0, 0),
                                (0, 0, 1, 0),
                                (0, 0, -1, 2)))


def reference_form_b():
    return AlternatingForm(reference_lattice_b(),
                           ((0, 0, 1, 0),
                            (0, 0, 0, 1),
                            (-1, 0, 0, 0),
                            (0, -1, 0, 0)))


def build_reference_surface():
    e = reference_embedding()
    fb = reference_form_b()
    return SpecialAbelianSurface(e, fb, restrict_form(fb, e))


def psi_image(s, x):
    """Image of a sub-torus point under the degree-2 isogeny, split by factor."""
    if x.lattice != s.embedding.sub:
        raise IncompatibleLattice("point must be in sublattice coordinates")
    b = [sum(row[j] * x.coords[j] for j in range(4)) for row in s.embedding.matrix]
    return ProductPoint((b[0], b[2]), (b[1], b[3]))


def reducible_through_origin(y):
    """Which translated reducible members pass through the origin.

    The pencil's reducible member translated by x contains 0 exactly when a
    factor coordinate of psi(x) is 0 or the half-period tau_i/2; the four
    cases follow the lemma's numbering.
    """
    zero = (Fraction(0), Fraction(0))
    half = (HALF, Fraction(0))
    cases = set()
    if y.e2 == zero:
        cases.add(1)
    if y.e2 == half:
        cases.add(2)
    if y.e1 == zero:
        cases.add(3)
    if y.e1 == half:
        cases.add(4)
    return frozenset(cases)


def translation_points_for_twist(s, xi, n_bound):
    """All n_bound-torsion points x with phi_L(x) = xi (possibly empty)."""
    return {x for x in torsion_subgroup(s.embedding.sub, n_bound)
            if phi_L_on_point(s.form_A, x) == xi}


@lru_cache(maxsize=None)
def _phi2_image(s):
    _, image = phi_two_torsion_data(s.form_A)
    return frozenset(image)


@lru_cache(maxsize=None)
def _factor_period_kernels(s):
    """Period generators of the two elliptic subtori, in sub coordinates.

    The subtorus over the first factor is the kernel of the composite map to
    the second factor, so its period lattice is the integer kernel of the
    (lambda2, mu2) rows of the embedding matrix; symmetrically for the other.
    """
    rows = s.embedding.rows()
    to_first = integer_kernel_basis([rows[1], rows[3]])
    to_second = integer_kernel_basis([rows[0], rows[2]])
    return tuple(map(tuple, to_first)), tuple(map(tuple, to_second))


def _check_pair(s, Q, Qhalf):
    lat = s.embedding.sub
    if Q.lattice != lat or Qhalf.lattice != lat:
        raise IncompatibleLattice("characters must live on the sublattice")
    if Q not in _phi2_image(s):
        raise InvalidTwist("Q must be in the image of phi on 2-torsion")
    if Qhalf * Qhalf != Q:
        raise InvalidTwist("Qhalf must be a square root of Q")
    if Q.is_trivial and Qhalf.is_trivial:
        raise InvalidTwist("the trivial pair is excluded")


def _trivial_on(chi, gens):
    return all(sum(g * v for g, v in zip(gen, chi.values)).denominator == 1
               for gen in gens)


def classify_origin_singularity(s, Q, Qhalf):
    """Closed-form verdict from triviality on the factor period lattices.

    The translated member through 0 has a component over the first factor iff
    Qhalf is trivial on the periods of the subtorus over the first factor,
    and symmetrically; both components give a node, one a smooth point.
    """
    _check_pair(s, Q, Qhalf)
    first, second = _factor_period_kernels(s)
    on_first = _trivial_on(Qhalf, first)
    on_second = _trivial_on(Qhalf, second)
    if on_first and on_second:
        return SINGULARITY_NODE
    if on_first or on_second:
        return SINGULARITY_SMOOTH
    return SINGULARITY_NONE


def classify_origin_singularity_oracle(s, Q, Qhalf):
    """Independent verdict by enumerating translation points on 4-torsion."""
    _check_pair(s, Q, Qhalf)
    points = translation_points_for_twist(s, Qhalf, 4)
    saw_side = False
    for x in points:
        cases = reducible_through_origin(psi_image(s, x))
        second_side = bool(cases & {1, 2})
        first_side = bool(cases & {3, 4})
        if second_side and first_side:
            return SINGULARITY_NODE
        saw_side = saw_side or second_side or first_side
    return SINGULARITY_SMOOTH if saw_side else SINGULARITY_NONE


def rf_pair(singularity):
    """Atiyah ranks {r(f1), r(f2)} of the two induced fibrations."""
    table = {SINGULARITY_NONE: (2, 2),
             SINGULARITY_NODE: (1, 1),
             SINGULARITY_SMOOTH: (1, 2)}
    return table[singularity]


def moduli_type(Q, Qhalf, phi2_image):
    if Qhalf * Qhalf != Q:
        raise InvalidTwist("Qhalf must be a square root of Q")
    if Q not in phi2_image:
        raise InvalidTwist("Q must be in the image of phi on 2-torsion")
    if Q.is_trivial and Qhalf.is_trivial:
        raise InvalidTwist("the trivial pair is excluded")
    if not Q.is_trivial:
        return "II"
    return "Ib" if Qhalf in phi2_image else "Ia"


def admissible_qhalf(s):
    """The 63 nontrivial characters realizable as phi_L(x) on 4-torsion."""
    seen = {phi_L_on_point(s.form_A, x)
            for x in torsion_subgroup(s.embedding.sub, 4)}
    return sorted((c for c in seen if not c.is_trivial),
                  key=lambda c: c.values)


def admissible_pairs(s):
    return [(q * q, q) for q in admissible_qhalf(s)]


def classification_report(s, Q, Qhalf):
    """Everything about one admissible pair, both routes asserted equal."""
    closed = classify_origin_singularity(s, Q, Qhalf)
    oracle = classify_origin_singularity_oracle(s, Q, Qhalf)
    witnesses = sorted(
        (x for x in translation_points_for_twist(s, Qhalf, 4)
         if reducible_through_origin(psi_image(s, x))),
        key=lambda p: p.coords)
    return {
        "Q": [str(v) for v in Q.values],
        "Qhalf": [str(v) for v in Qhalf.values],
        "singularity": closed,
        "singularity_oracle": oracle,
        "rf_pair": list(rf_pair(closed)),
        "moduli_type": moduli_type(Q, Qhalf, _phi2_image(s)),
        "witness_points": [x.to_json() for x in witnesses],
    }


# Display names for the 2-torsion characters of the two reference lattices,
# matching the usual tables; products are composed with "*".

def _pm(values):
    return tuple(Fraction(0) if v == 1 else HALF for v in values)


_B_BASE = {
    "chiB1": _pm((1, 1, -1, 1)),
    "chiB2": _pm((-1, 1, 1, 1)),
    "chiB3": _pm((-1, 1, -1, 1)),
    "chiB4": _pm((1, 1, 1, -1)),
    "chiB5": _pm((1, -1, 1, 1)),
    "chiB6": _pm((1, -1, 1, -1)),
}

_A_TABLE = {
    "trivial": _pm((1, 1, 1, 1)),
    "chiA1": _pm((1, 1, -1, 1)),
    "chiA2": _pm((-1, -1, 1, 1)),
    "chiA3": _pm((-1, -1, -1, 1)),
    "chiA5": _pm((1, -1, 1, 1)),
    "chiA1*chiA5": _pm((1, -1, -1, 1)),
    "chiA2*chiA5": _pm((-1, 1, 1, 1)),
    "chiA3*chiA5": _pm((-1, 1, -1, 1)),
    "eps1": _pm((1, 1, 1, -1)),
    "eps2": _pm((1, 1, -1, -1)),
    "eps3": _pm((1, -1, 1, -1)),
    "eps4": _pm((1, -1, -1, -1)),
    "eps5": _pm((-1, -1, 1, -1)),
    "eps6": _pm((-1, -1, -1, -1)),
    "eps7": _pm((-1, 1, 1, -1)),
    "eps8": _pm((-1, 1, -1, -1)),
}


def _b_table():
    # compose the factor-wise generators into all 16 names
    first = {"": (Fraction(0),) * 4, "chiB1": _B_BASE["chiB1"],
             "chiB2": _B_BASE["chiB2"], "chiB3": _B_BASE["chiB3"]}
    second = {"": (Fraction(0),) * 4, "chiB4": _B_BASE["chiB4"],
              "chiB5": _B_BASE["chiB5"], "chiB6": _B_BASE["chiB6"]}
    out = {}
    for n1, v1 in first.items():
        for n2, v2 in second.items():
            name = "*".join(n for n in (n1, n2) if n) or "trivial"
            out[name] = tuple(reduce_mod1(a + b) for a, b in zip(v1, v2))
    return out


A_CHARACTER_NAMES = {v: k for k, v in _A_TABLE.items()}
B_CHARACTER_NAMES = {v: k for k, v in _b_table().items()}


def character_name(chi):
    """Table name of a 2-torsion character on a reference lattice, if any."""
    if chi.lattice == reference_lattice_a():
        return A_CHARACTER_NAMES.get(chi.values)
    if chi.lattice == reference_lattice_b():
        return B_CHARACTER_NAMES.get(chi.values)
    return None


def parse_character(text, lattice):
    """Parse "chiA2*chiA5", "eps3", "trivial", or a raw "0,1/2,0,1/4" vector."""
    text = text.strip()
    if "," in text:
        values = tuple(Fraction(part) for part in text.split(","))
        if len(values) != lattice.rank:
            raise ValueError("expected %d coordinates" % lattice.rank)
        return Character(lattice, values)
    if lattice == reference_lattice_a():
        table = {k: v for k, v in _A_TABLE.items()}
    elif lattice == reference_lattice_b():
        table = _b_table()
    else:
        raise ValueError("names are only defined on the reference lattices")
    out = trivial_character(lattice)
    for part in text.split("*"):
        if part not in table:
            raise ValueError("unknown character name: %r" % part)
        out = out * Character(lattice, table[part])
    return out
