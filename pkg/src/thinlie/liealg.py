"""Generic finite-dimensional Lie algebra engine over an exact field.

A StructureTable stores sparse bracket coefficients for ordered basis pairs
(i < j); antisymmetry is implicit and diagonal brackets are zero even in
characteristic two (the tables are alternating).  All subspace work reduces
to row-reduced echelon form, which is canonical over an exact field, so
subspace equality is matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAnIdeal, NotASubalgebra, TableMismatch
from .ffield import FieldElement, FieldSpec

Row = tuple[FieldElement, ...]


class StructureTable:
    """A Lie algebra given by labeled basis and sparse bracket coefficients."""

    __slots__ = ("field", "labels", "brackets")

    def __init__(
        self,
        field: FieldSpec,
        labels: Sequence[str],
        brackets: dict[tuple[int, int], tuple[tuple[int, FieldElement], ...]],
    ):
        self.field = field
        self.labels = tuple(labels)
        self.brackets = brackets

    @classmethod
    def from_entries(
        cls,
        field: FieldSpec,
        labels: Sequence[str],
        entries: Iterable[tuple[int, int, Iterable[tuple[int, FieldElement]]]],
    ) -> "StructureTable":
        """Normalize arbitrary (i, j, terms) triples into the i < j convention."""
        dim = len(labels)
        brackets: dict[tuple[int, int], dict[int, FieldElement]] = {}
        for i, j, terms in entries:
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"basis index out of range in ({i}, {j})")
            if i == j:
                if any(c for _, c in terms):
                    raise ValueError(f"nonzero diagonal bracket at index {i}")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            acc = brackets.setdefault((i, j), {})
            for k, c in terms:
                if sign < 0:
                    c = -c
                c = acc.get(k, field.zero) + c
                if c:
                    acc[k] = c
                else:
                    acc.pop(k, None)
        packed = {
            key: tuple(sorted(val.items()))
            for key, val in brackets.items()
            if val
        }
        return cls(field, labels, packed)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_bracket(self, i: int, j: int) -> tuple[tuple[int, FieldElement], ...]:
        if i == j:
            return ()
        if i < j:
            return self.brackets.get((i, j), ())
        terms = self.brackets.get((j, i), ())
        return tuple((k, -c) for k, c in terms)

    def zero_element(self) -> "Element":
        return Element(self, {})

    def basis_element(self, i: int) -> "Element":
        return Element(self, {i: self.field.one})

    def element(self, coeffs: dict[int, FieldElement]) -> "Element":
        return Element(self, {k: c for k, c in coeffs.items() if c})

    def element_by_label(self, mapping: dict[str, FieldElement]) -> "Element":
        index = {lab: i for i, lab in enumerate(self.labels)}
        return self.element({index[lab]: c for lab, c in mapping.items()})

    def full_subspace(self) -> "Subspace":
        return Subspace.from_rows(self, [unit_row(self, i) for i in range(self.dim)])

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "labels": list(self.labels),
            "brackets": [
                [i, j, [[k, c.to_json()] for k, c in terms]]
                for (i, j), terms in sorted(self.brackets.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StructureTable":
        field = FieldSpec.from_json(data["field"])
        entries = [
            (i, j, [(k, field.element(c)) for k, c in terms])
            for i, j, terms in data["brackets"]
        ]
        return cls.from_entries(field, data["labels"], entries)

    def __repr__(self) -> str:
        return f"StructureTable(dim={self.dim}, field={self.field!r})"


class Element:
    """A sparse vector over a table's basis; zero coefficients are not stored."""

    __slots__ = ("table", "coords")

    def __init__(self, table: StructureTable, coords: dict[int, FieldElement]):
        self.table = table
        self.coords = coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.table is other.table
            and self.coords == other.coords
        )

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.coords)
        for k, c in other.coords.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Element(self.table, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.table, {k: -c for k, c in self.coords.items()})

    def scale(self, c: FieldElement) -> "Element":
        if not c:
            return Element(self.table, {})
        return Element(self.table, {k: c * v for k, v in self.coords.items()})

    def __rmul__(self, c: FieldElement) -> "Element":
        return self.scale(c)

    def dense(self) -> Row:
        zero = self.table.field.zero
        return tuple(self.coords.get(i, zero) for i in range(self.table.dim))

    def __repr__(self) -> str:
        if not self.coords:
            return "0"
        parts = [f"{c}*{self.table.labels[k]}" for k, c in sorted(self.coords.items())]
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[k, c.to_json()] for k, c in sorted(self.coords.items())]


def bracket(u: Element, v: Element) -> Element:
    """Bilinear, alternating extension of the stored basis brackets."""
    if u.table is not v.table:
        raise TableMismatch("elements live on different structure tables")
    table = u.table
    out: dict[int, FieldElement] = {}
    for i, ci in u.coords.items():
        for j, cj in v.coords.items():
            terms = table.basis_bracket(i, j)
            if not terms:
                continue
            c = ci * cj
            for k, ck in terms:
                s = out.get(k)
                s = c * ck if s is None else s + c * ck
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
    return Element(table, out)


# ---------------------------------------------------------------------------
# exact linear algebra: dense rows, reduced echelon form
# ---------------------------------------------------------------------------

def unit_row(table: StructureTable, i: int) -> Row:
    zero, one = table.field.zero, table.field.one
    return tuple(one if j == i else zero for j in range(table.dim))


def rref(field: FieldSpec, rows: Iterable[Sequence[FieldElement]]) -> list[list[FieldElement]]:
    """Reduced row echelon form with unit pivots; zero rows dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    out: list[list[FieldElement]] = []
    pivots: list[int] = []
    for row in mat:
        row = list(row)
        for prow, pc in zip(out, pivots):
            c = row[pc]
            if c:
                for idx in range(ncols):
                    row[idx] = row[idx] - c * prow[idx]
        pc = next((idx for idx, c in enumerate(row) if c), None)
        if pc is None:
            continue
        inv = row[pc].inverse()
        row = [inv * c for c in row]
        for prow in out:
            c = prow[pc]
            if c:
                for idx in range(ncols):
                    prow[idx] = prow[idx] - c * row[idx]
        out.append(row)
        pivots.append(pc)
    order = sorted(range(len(out)), key=lambda r: pivots[r])
    return [out[r] for r in order]


def _reduce_against(rows: list[list[FieldElement]], pivots: list[int], vec: list[FieldElement]) -> list[FieldElement]:
    for row, pc in zip(rows, pivots):
        c = vec[pc]
        if c:
            for idx in range(len(vec)):
                vec[idx] = vec[idx] - c * row[idx]
    return vec


class Subspace:
    """A subspace of a table's underlying vector space, held in RREF."""

    __slots__ = ("table", "rows", "pivots")

    def __init__(self, table: StructureTable, rows: Sequence[Row]):
        self.table = table
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(next(i for i, c in enumerate(r) if c) for r in self.rows)

    @classmethod
    def from_rows(cls, table: StructureTable, rows: Iterable[Sequence[FieldElement]]) -> "Subspace":
        return cls(table, rref(table.field, rows))

    @classmethod
    def from_elements(cls, table: StructureTable, elements: Iterable[Element]) -> "Subspace":
        return cls.from_rows(table, [e.dense() for e in elements])

    @classmethod
    def zero(cls, table: StructureTable) -> "Subspace":
        return cls(table, [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.table is other.table
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((id(self.table), self.rows))

    def contains(self, elem: Element) -> bool:
        vec = _reduce_against([list(r) for r in self.rows], list(self.pivots), list(elem.dense()))
        return not any(vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(e) for e in other.basis_elements())

    def basis_elements(self) -> list[Element]:
        out = []
        for row in self.rows:
            out.append(Element(self.table, {i: c for i, c in enumerate(row) if c}))
        return out

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace.from_rows(self.table, list(self.rows) + list(other.rows))

    def coords_of(self, elem: Element) -> list[FieldElement] | None:
        """Coordinates of elem in the RREF row basis, or None if outside."""
        vec = list(elem.dense())
        coords = []
        for row, pc in zip(self.rows, self.pivots):
            c = vec[pc]
            coords.append(c)
            if c:
                for idx in range(len(vec)):
                    vec[idx] = vec[idx] - c * row[idx]
        if any(vec):
            return None
        return coords

    def is_subalgebra(self) -> bool:
        basis = self.basis_elements()
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                if not self.contains(bracket(basis[a], basis[b])):
                    return False
        return True

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} of {self.table.dim})"


# ---------------------------------------------------------------------------
# table validation
# ---------------------------------------------------------------------------

@dataclass
class ValidationReport:
    ok: bool
    encoding_ok: bool
    jacobi_ok: bool
    violations: list[tuple[int, int, int]]
    messages: list[str]

    def __bool__(self) -> bool:
        return self.ok


def validate_table(t: StructureTable, max_violations: int = 10) -> ValidationReport:
    """Check the i < j encoding and the Jacobi identity on all basis triples."""
    messages: list[str] = []
    encoding_ok = True
    dim = t.dim
    for (i, j), terms in t.brackets.items():
        if not (0 <= i < j < dim):
            encoding_ok = False
            messages.append(f"bad key ({i}, {j})")
        for k, c in terms:
            if not (0 <= k < dim):
                encoding_ok = False
                messages.append(f"target {k} out of range in ({i}, {j})")
            if not c:
                encoding_ok = False
                messages.append(f"stored zero coefficient in ({i}, {j})")

    zero = t.field.zero
    table = t.brackets
    violations: list[tuple[int, int, int]] = []

    def pair(i: int, j: int):
        # signed lookup for i != j
        if i < j:
            return table.get((i, j), ()), False
        return table.get((j, i), ()), True

    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                acc: dict[int, FieldElement] = {}
                # [[b_i, b_j], b_k] + [[b_j, b_k], b_i] + [[b_k, b_i], b_j]
                for terms, neg, other in (
                    (table.get((i, j), ()), False, k),
                    (table.get((j, k), ()), False, i),
                    (table.get((i, k), ()), True, j),
                ):
                    for m, c in terms:
                        if neg:
                            c = -c
                        inner, flip = pair(m, other)
                        for n, cn in inner:
                            v = c * cn
                            if flip:
                                v = -v
                            s = acc.get(n)
                            s = v if s is None else s + v
                            if s:
                                acc[n] = s
                            else:
                                acc.pop(n, None)
                if acc:
                    violations.append((i, j, k))
                    if len(violations) >= max_violations:
                        messages.append("Jacobi scan aborted at violation cap")
                        return ValidationReport(False, encoding_ok, False, violations, messages)
    jacobi_ok = not violations
    return ValidationReport(encoding_ok and jacobi_ok, encoding_ok, jacobi_ok, violations, messages)


# ---------------------------------------------------------------------------
# subalgebras, ideals, centralizers
# ---------------------------------------------------------------------------

def subalgebra_generated(t: StructureTable, gens: Sequence[Element]) -> Subspace:
    """Smallest bracket-closed subspace containing the generators."""
    if not gens:
        raise ValueError("generator list must be nonempty")
    span = Subspace.from_elements(t, gens)
    frontier = span.basis_elements()
    while frontier:
        basis = span.basis_elements()
        new: list[Element] = []
        for u in frontier:
            for v in basis:
                w = bracket(u, v)
                if w and not span.contains(w):
                    new.append(w)
                    span = span.add(Subspace.from_elements(t, [w]))
        frontier = new
    return span


def derived_subalgebra(t: StructureTable, s: Subspace) -> Subspace:
    """Span of all brackets of basis pairs of s; s must be a subalgebra."""
    basis = s.basis_elements()
    products = []
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            w = bracket(basis[a], basis[b])
            if w:
                if not s.contains(w):
                    raise NotASubalgebra("subspace is not closed under the bracket")
                products.append(w)
    return Subspace.from_elements(t, products)


def centralizer_in(t: StructureTable, ambient: Subspace, target: Subspace) -> Subspace:
    """{a in ambient : [a, b] = 0 for every b in target}."""
    m = ambient.dim
    if m == 0 or target.dim == 0:
        return ambient
    arows = ambient.basis_elements()
    constraints: list[list[FieldElement]] = []
    for b in target.basis_elements():
        images = [bracket(a, b) for a in arows]
        support = sorted({k for img in images for k in img.coords})
        zero = t.field.zero
        for k in support:
            constraints.append([img.coords.get(k, zero) for img in images])
    kernel = _nullspace(t.field, constraints, m)
    rows = []
    for combo in kernel:
        acc = t.zero_element()
        for c, a in zip(combo, arows):
            if c:
                acc = acc + a.scale(c)
        rows.append(acc.dense())
    return Subspace.from_rows(t, rows)


def center(t: StructureTable, s: Subspace) -> Subspace:
    return centralizer_in(t, s, s)


def _nullspace(field: FieldSpec, constraints: list[list[FieldElement]], m: int) -> list[list[FieldElement]]:
    """Basis of {x in F^m : A x = 0} for constraint rows A."""
    reduced = rref(field, constraints) if constraints else []
    pivots = [next(i for i, c in enumerate(r) if c) for r in reduced]
    free = [i for i in range(m) if i not in pivots]
    zero, one = field.zero, field.one
    out = []
    for f in free:
        vec = [zero] * m
        vec[f] = one
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[f]
        out.append(vec)
    return out


def quotient_by_ideal(t: StructureTable, ideal: Subspace) -> StructureTable:
    """Structure table on the coordinate complement of a bracket-stable ideal."""
    for i in range(t.dim):
        bi = t.basis_element(i)
        for w in ideal.basis_elements():
            if not ideal.contains(bracket(bi, w)):
                raise NotAnIdeal("subspace is not bracket-stable under the full algebra")
    pivset = set(ideal.pivots)
    keep = [i for i in range(t.dim) if i not in pivset]
    pos = {c: n for n, c in enumerate(keep)}
    labels = [t.labels[c] for c in keep]
    irows = [list(r) for r in ideal.rows]
    entries = []
    for a in range(len(keep)):
        for b in range(a + 1, len(keep)):
            w = bracket(t.basis_element(keep[a]), t.basis_element(keep[b]))
            vec = _reduce_against(irows, list(ideal.pivots), list(w.dense()))
            terms = [(pos[c], vec[c]) for c in keep if vec[c]]
            if terms:
                entries.append((a, b, terms))
    return StructureTable.from_entries(t.field, labels, entries)


# ---------------------------------------------------------------------------
# gradings and structure maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeMap:
    """Assignment of each basis vector to a residue modulo N."""

    modulus: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(d % self.modulus for d in self.degrees))

    def degree(self, i: int) -> int:
        return self.degrees[i]

    def restrict(self, keep: Sequence[int]) -> "DegreeMap":
        return DegreeMap(self.modulus, tuple(self.degrees[i] for i in keep))

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "degrees": list(self.degrees)}

    @classmethod
    def from_json(cls, data: dict) -> "DegreeMap":
        return cls(data["modulus"], tuple(data["degrees"]))


def validate_grading(t: StructureTable, d: DegreeMap) -> bool:
    """True iff every stored bracket lands in the predicted degree class."""
    if len(d.degrees) != t.dim:
        raise ValueError("degree map does not match table dimension")
    n = d.modulus
    for (i, j), terms in t.brackets.items():
        want = (d.degrees[i] + d.degrees[j]) % n
        for k, _ in terms:
            if d.degrees[k] != want:
                return False
    return True


def check_structure_map(
    src: StructureTable,
    dst: StructureTable,
    images: Sequence[Element],
) -> bool:
    """True iff the basis map is injective and preserves all brackets."""
    if len(images) != src.dim:
        raise ValueError("need one image per src basis vector")
    if src.field != dst.field:
        raise ValueError("structure maps require a common ground field")
    if len(rref(dst.field, [e.dense() for e in images])) != src.dim:
        return False

    def push(u: Element) -> Element:
        acc = dst.zero_element()
        for k, c in u.coords.items():
            acc = acc + images[k].scale(c)
        return acc

    for i in range(src.dim):
        for j in range(i + 1, src.dim):
            lhs = push(Element(src, dict(src.basis_bracket(i, j))))
            rhs = bracket(images[i], images[j])
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# base change and subalgebra tables
# ---------------------------------------------------------------------------

def _mat_inverse(field: FieldSpec, rows: Sequence[Row]) -> list[list[FieldElement]]:
    n = len(rows)
    zero, one = field.zero, field.one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * c for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def change_basis(t: StructureTable, rows: Sequence[Sequence[FieldElement]], labels: Sequence[str]) -> StructureTable:
    """Rewrite the table in a new basis given by full-rank coordinate rows."""
    n = t.dim
    if len(rows) != n:
        raise ValueError("change of basis requires a square matrix")
    rows = [tuple(r) for r in rows]
    inv = _mat_inverse(t.field, rows)
    elems = [Element(t, {i: c for i, c in enumerate(r) if c}) for r in rows]
    entries = []
    for a in range(n):
        for b in range(a + 1, n):
            w = bracket(elems[a], elems[b]).dense()
            terms = []
            for c in range(n):
                acc = t.field.zero
                for i, wi in enumerate(w):
                    if wi:
                        acc = acc + wi * inv[i][c]
                if acc:
                    terms.append((c, acc))
            if terms:
                entries.append((a, b, terms))
    return StructureTable.from_entries(t.field, labels, entries)


def subalgebra_table(
    t: StructureTable,
    elements: Sequence[Element],
    labels: Sequence[str] | None = None,
) -> StructureTable:
    """Structure table on a given independent, bracket-closed family."""
    m = len(elements)
    rows = [e.dense() for e in elements]
    reduced = rref(t.field, rows)
    if len(reduced) != m:
        raise ValueError("elements are linearly dependent")
    span = Subspace(t, reduced)

    def coords_in_given(v: Element) -> list[FieldElement] | None:
        # solve sum_r x_r * elements[r] = v by elimination on an augmented system
        zero = t.field.zero
        aug = [list(rows[r]) + [t.field.one if s == r else zero for s in range(m)] for r in range(m)]
        red = rref(t.field, aug)
        vec = list(v.dense()) + [zero] * m
        n = t.dim
        for row in red:
            pc = next(i for i, c in enumerate(row) if c)
            if pc >= n:
                continue
            c = vec[pc]
            if c:
                for idx in range(len(vec)):
                    vec[idx] = vec[idx] - c * row[idx]
        if any(vec[:n]):
            return None
        return [-c for c in vec[n:]]

    if labels is None:
        labels = []
        for e in elements:
            if len(e.coords) == 1:
                (idx, c), = e.coords.items()
                labels.append(t.labels[idx] if c == t.field.one else f"{c}*{t.labels[idx]}")
            else:
                labels.append(f"v{len(labels)}")
    entries = []
    for a in range(m):
        for b in range(a + 1, m):
            w = bracket(elements[a], elements[b])
            if not w:
                continue
            coords = coords_in_given(w)
            if coords is None:
                raise NotASubalgebra("family is not closed under the bracket")
            terms = [(k, c) for k, c in enumerate(coords) if c]
            if terms:
                entries.append((a, b, terms))
    return StructureTable.from_entries(t.field, labels, entries)
