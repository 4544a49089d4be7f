"""Projective 2x2 matrix groups over finite fields.

A ProjectiveMatrix is a nonsingular 2x2 matrix modulo scalars, held in
the canonical form whose first nonzero entry (row-major) is 1, so
equality and hashing are entry-wise.  The canonical form works
uniformly for PGL and PSL; membership in PSL is decided by quadratic
residuosity of the determinant, which is well defined because
rescaling multiplies the determinant by a square.

The nonsplit torus of order q + 1 inside PGL_2(q) is realized as the
matrices [[x, d*y], [y, x]] with d a fixed nonsquare: the left-regular
representation of F_q[alpha] (alpha^2 = d) on the basis {1, alpha},
with projective points (x : y) as representatives.  The semi-direct
product of a vertex group with the torus acts on directed Cayley-graph
edges by (g', s) -> (g * (t g' t^-1), t s t^-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ConstructionError
from .fields import FieldElem, FiniteField, find_nonsquare, is_square


class ProjectiveMatrix:
    """2x2 matrix over a finite field, canonicalized modulo scalars."""

    __slots__ = ("field", "a", "b", "c", "d", "_hash")

    def __init__(self, field: FiniteField, a: FieldElem, b: FieldElem,
                 c: FieldElem, d: FieldElem, _canonical: bool = False):
        if not _canonical:
            raise TypeError("use ProjectiveMatrix.make()")
        self.field = field
        self.a, self.b, self.c, self.d = a, b, c, d
        self._hash = hash((field, a, b, c, d))

    @classmethod
    def make(cls, field: FiniteField, entries: Sequence) -> "ProjectiveMatrix":
        a, b, c, d = (field(e) for e in entries)
        det = a * d - b * c
        if det.is_zero():
            raise ConstructionError("singular matrix has no projective class")
        for lead in (a, b, c, d):
            if not lead.is_zero():
                inv = lead.inverse()
                return cls(field, a * inv, b * inv, c * inv, d * inv,
                           _canonical=True)
        raise AssertionError("unreachable")

    @classmethod
    def identity(cls, field: FiniteField) -> "ProjectiveMatrix":
        return cls(field, field.one, field.zero, field.zero, field.one,
                   _canonical=True)

    def __mul__(self, other: "ProjectiveMatrix") -> "ProjectiveMatrix":
        if other.field != self.field:
            raise ValueError("matrices live over different fields")
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return ProjectiveMatrix.make(
            self.field,
            (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h),
        )

    def inverse(self) -> "ProjectiveMatrix":
        # the adjugate is a scalar multiple of the inverse
        return ProjectiveMatrix.make(self.field, (self.d, -self.b, -self.c, self.a))

    def det(self) -> FieldElem:
        return self.a * self.d - self.b * self.c

    def is_in_psl(self) -> bool:
        """Whether this class lies in PSL_2: det of the canonical form
        is a square (invariant under rescaling by c, which scales the
        determinant by c^2)."""
        return is_square(self.det())

    def conjugate_by(self, t: "ProjectiveMatrix") -> "ProjectiveMatrix":
        return t * self * t.inverse()

    def entries(self) -> tuple[FieldElem, FieldElem, FieldElem, FieldElem]:
        return (self.a, self.b, self.c, self.d)

    def to_ints(self) -> list[list[int]]:
        """Serialization: each entry as its coefficient list."""
        return [e.to_coeff_list() for e in self.entries()]

    def embed(self, target: FiniteField) -> "ProjectiveMatrix":
        """Entry-wise embedding into an extension over the same p."""
        return ProjectiveMatrix.make(target, tuple(target.embed(e) for e in self.entries()))

    def __eq__(self, other):
        return (
            isinstance(other, ProjectiveMatrix)
            and other.field == self.field
            and other.a == self.a and other.b == self.b
            and other.c == self.c and other.d == self.d
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"[[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]]"


def proj(field: FiniteField, entries: Sequence) -> ProjectiveMatrix:
    return ProjectiveMatrix.make(field, entries)


# ---------------------------------------------------------------------------
# The nonsplit torus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TorusElement:
    """Point (x : y) of the projective line over F_q together with its
    matrix [[x, d*y], [y, x]].  Multiplication follows the norm form of
    F_q[alpha]: (x1 + y1 a)(x2 + y2 a) = (x1 x2 + d y1 y2) + (x1 y2 + y1 x2) a.
    """

    x: FieldElem
    y: FieldElem
    delta: FieldElem
    matrix: ProjectiveMatrix

    @classmethod
    def make(cls, x: FieldElem, y: FieldElem, delta: FieldElem) -> "TorusElement":
        if x.is_zero() and y.is_zero():
            raise ValueError("(0 : 0) is not a projective point")
        # normalize the representative: (1 : y/x) or (0 : 1)
        if not x.is_zero():
            y = y / x
            x = x.field.one
        else:
            y = y.field.one
        field = x.field
        mat = ProjectiveMatrix.make(field, (x, delta * y, y, x))
        return cls(x, y, delta, mat)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        x = self.x * other.x + self.delta * self.y * other.y
        y = self.x * other.y + self.y * other.x
        return TorusElement.make(x, y, self.delta)

    def inverse(self) -> "TorusElement":
        # (x + y a)^-1 is proportional to the conjugate x - y a
        return TorusElement.make(self.x, -self.y, self.delta)

    def is_identity(self) -> bool:
        return self.y.is_zero()


def nonsplit_torus(field: FiniteField, delta: FieldElem | None = None) -> list[TorusElement]:
    """The q + 1 elements of the nonsplit torus in PGL_2(q), enumerated
    as (1 : t) for t in F_q followed by (0 : 1)."""
    if field.p == 2:
        raise ValueError("odd characteristic required")
    if delta is None:
        delta = find_nonsquare(field)
    else:
        delta = field(delta)
        if is_square(delta):
            raise ValueError("delta must be a nonsquare")
    out = [TorusElement.make(field.one, y, delta) for y in field.elements()]
    out.append(TorusElement.make(field.zero, field.one, delta))
    if len({t.matrix for t in out}) != field.order + 1:
        raise AssertionError("torus enumeration produced duplicates")
    return out


def torus_element_order(t: TorusElement, cap: int) -> int:
    order = 1
    cur = t
    while not cur.is_identity():
        cur = cur * t
        order += 1
        if order > cap:
            raise AssertionError("torus element order exceeded group order")
    return order


def torus_generator(torus: list[TorusElement]) -> tuple[int, TorusElement]:
    """First element (in enumeration order) of order exactly q + 1,
    together with its index in the torus list."""
    size = len(torus)
    for idx, t in enumerate(torus):
        if torus_element_order(t, size) == size:
            return idx, t
    raise AssertionError("nonsplit torus is cyclic; a generator must exist")


def conj_action(t: ProjectiveMatrix, g: ProjectiveMatrix) -> ProjectiveMatrix:
    """t g t^-1 with t given over the base field and g over the ambient
    field; t is embedded first when the fields differ."""
    if t.field != g.field:
        t = t.embed(g.field)
    return g.conjugate_by(t)


# ---------------------------------------------------------------------------
# Semi-direct product elements and the directed-edge action
# ---------------------------------------------------------------------------

class SdpElement:
    """Pair (g, t) with g in the ambient matrix group and t in the
    torus; product (g1, t1)(g2, t2) = (g1 * t1 g2 t1^-1, t1 t2)."""

    __slots__ = ("g", "t", "t_mat")

    def __init__(self, g: ProjectiveMatrix, t: TorusElement,
                 t_mat: ProjectiveMatrix | None = None):
        self.g = g
        self.t = t
        # the torus matrix embedded into g's field, cached for the action
        self.t_mat = t.matrix.embed(g.field) if t_mat is None else t_mat

    @classmethod
    def identity(cls, field: FiniteField, torus: list[TorusElement]) -> "SdpElement":
        ident = next(t for t in torus if t.is_identity())
        return cls(ProjectiveMatrix.identity(field), ident)

    def __mul__(self, other: "SdpElement") -> "SdpElement":
        g = self.g * other.g.conjugate_by(self.t_mat)
        t = self.t * other.t
        return SdpElement(g, t)

    def inverse(self) -> "SdpElement":
        t_inv = self.t.inverse()
        t_inv_mat = self.t_mat.inverse()
        return SdpElement(self.g.inverse().conjugate_by(t_inv_mat), t_inv, t_inv_mat)

    def __eq__(self, other):
        return (isinstance(other, SdpElement)
                and other.g == self.g and other.t.matrix == self.t.matrix)

    def __hash__(self):
        return hash((self.g, self.t.matrix))

    def __repr__(self):
        return f"SdpElement(g={self.g!r}, t=({self.t.x!r}:{self.t.y!r}))"


def sdp_act_directed_edge(
    h: SdpElement,
    vertex: ProjectiveMatrix,
    gen_index: int,
    gens: Sequence[ProjectiveMatrix],
    gen_lookup: dict[ProjectiveMatrix, int],
) -> tuple[ProjectiveMatrix, int]:
    """Image of the directed edge (vertex, gens[gen_index]) under h:
    (g * t vertex t^-1, index of t s t^-1).

    The torus must permute the generator set; a conjugate falling
    outside it signals a broken orbit setup and raises.
    """
    new_vertex = h.g * vertex.conjugate_by(h.t_mat)
    s_conj = gens[gen_index].conjugate_by(h.t_mat)
    new_index = gen_lookup.get(s_conj)
    if new_index is None:
        raise ConstructionError(
            "torus conjugation left the generator set (mis-ordered or broken S)"
        )
    return new_vertex, new_index
