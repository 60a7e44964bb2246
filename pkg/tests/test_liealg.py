import random

import pytest

from thinlie.cartan import build_H2_phi1, build_W1n, phi1_monomials
from thinlie.errors import NotAnIdeal, NotASubalgebra, TableMismatch
from thinlie.ffield import field_create
from thinlie.grading import eigenbasis, grade_mixed, params_from_mu3, toral_params
from thinlie.liealg import (
    DegreeMap,
    StructureTable,
    Subspace,
    bracket,
    center,
    centralizer_in,
    derived_subalgebra,
    quotient_by_ideal,
    rref,
    subalgebra_generated,
    subalgebra_table,
    check_structure_map,
    validate_grading,
    validate_table,
)

F3 = field_create(3)


def w11():
    return build_W1n(3, 1)


def abelian(n=2, fieldspec=F3):
    return StructureTable.from_entries(fieldspec, [f"a{i}" for i in range(n)], [])


def three_dim(brackets, fieldspec=F3):
    one = fieldspec.one
    entries = [(i, j, [(k, one * c) for k, c in terms.items()])
               for (i, j), terms in brackets.items()]
    return StructureTable.from_entries(fieldspec, ["a", "b", "c"], entries)


def test_bracket_examples():
    t = w11()
    assert bracket(t.basis_element(0), t.basis_element(2)) == t.basis_element(1)
    assert bracket(t.basis_element(1), t.basis_element(2)) == t.basis_element(2)
    u = t.element({0: F3.one, 2: F3.element(2)})
    assert not bracket(u, u)


def test_bracket_table_mismatch():
    with pytest.raises(TableMismatch):
        bracket(w11().basis_element(0), w11().basis_element(1))


def test_validate_table_passes_w12_and_abelian():
    assert validate_table(build_W1n(3, 2)).ok
    assert validate_table(abelian(1)).ok


def test_validate_table_fails_on_broken_table():
    # [a,b]=c, [a,c]=a, [b,c]=b violates Jacobi: J(a,b,c) = -2c
    bad = three_dim({(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}})
    report = validate_table(bad)
    assert not report.ok
    assert (0, 1, 2) in report.violations


def test_twisted_heisenberg_satisfies_jacobi():
    # [a,b]=c, [a,c]=0, [b,c]=a: every term of J(a,b,c) vanishes, so this
    # "corruption" is in fact a Lie algebra and the scan accepts it.
    t = three_dim({(0, 1): {2: 1}, (1, 2): {0: 1}})
    assert validate_table(t).ok


def test_subalgebra_generated_zero():
    t = w11()
    assert subalgebra_generated(t, [t.zero_element()]).dim == 0


def test_subalgebra_generated_full_phi1():
    f9 = field_create(3, 2)
    table = build_H2_phi1(3, 1, 1, f9, 1)
    basis = eigenbasis(table, params_from_mu3(f9.generator()))
    x = basis.vectors[basis.position(1, 1)]
    y = basis.vectors[basis.position(-1, 1)]
    assert subalgebra_generated(table, [x, y]).dim == 9


def test_subalgebra_generated_sigma_zero_zassenhaus():
    table = build_H2_phi1(3, 1, 1, F3, 1)
    basis = eigenbasis(table, toral_params(F3, 0, eps=1))
    x = basis.vectors[basis.position(1, 0)]
    y = basis.vectors[basis.position(-1, 0)]
    span = subalgebra_generated(table, [x, y])
    assert span.dim == 3
    # idempotent: generating from a basis of the output returns the same span
    assert subalgebra_generated(table, span.basis_elements()) == span


def test_derived_subalgebra_examples():
    w22 = build_W1n(2, 2)
    derived = derived_subalgebra(w22, w22.full_subspace())
    assert derived.dim == 3
    assert not derived.contains(w22.basis_element(3))  # E_{p^n - 2} drops out
    assert derived_subalgebra(abelian(), abelian().full_subspace()).dim == 0
    h = build_H2_phi1(2, 1, 1, field_create(2), 1)
    assert derived_subalgebra(h, h.full_subspace()).dim == 3


def test_derived_chain_inclusions():
    t = build_H2_phi1(3, 1, 1, F3, 0)
    full = t.full_subspace()
    d1 = derived_subalgebra(t, full)
    d2 = derived_subalgebra(t, d1)
    assert full.contains_subspace(d1) and d1.contains_subspace(d2)


def test_derived_requires_subalgebra():
    t = w11()
    line = Subspace.from_elements(t, [t.basis_element(0) + t.basis_element(2)])
    two = line.add(Subspace.from_elements(t, [t.basis_element(2)]))
    # span{E_-1 + E_1, E_1} is not closed: [E_-1, E_1] = E_0 escapes
    with pytest.raises(NotASubalgebra):
        derived_subalgebra(t, two)


def test_center_examples():
    hhat = build_H2_phi1(3, 1, 1, F3, 0)
    c = center(hhat, hhat.full_subspace())
    mons = phi1_monomials(3, 1, 1)
    assert c.dim == 1 and c.contains(hhat.basis_element(mons.index((0, 0))))
    f9 = field_create(3, 2)
    simple = build_H2_phi1(3, 1, 1, f9, 1)
    assert center(simple, simple.full_subspace()).dim == 0
    ab = abelian()
    assert center(ab, ab.full_subspace()).dim == 2


def test_quotient_by_center():
    hhat = build_H2_phi1(3, 1, 1, F3, 0)
    c = center(hhat, hhat.full_subspace())
    q = quotient_by_ideal(hhat, c)
    assert q.dim == 8
    assert validate_table(q).ok


def test_quotient_by_zero_ideal_is_copy():
    t = w11()
    q = quotient_by_ideal(t, Subspace.zero(t))
    assert q.dim == t.dim and q.brackets == t.brackets


def test_quotient_rejects_non_ideal():
    t = w11()
    line = Subspace.from_elements(t, [t.basis_element(2)])
    with pytest.raises(NotAnIdeal):
        quotient_by_ideal(t, line)


def test_centralizer_examples():
    f25 = field_create(5, 2)
    table = build_H2_phi1(5, 1, 1, f25, 1)
    basis = eigenbasis(table, params_from_mu3(f25.generator()))
    et = basis.eigen_table
    x = et.basis_element(basis.position(1, 1))
    y = et.basis_element(basis.position(-3, 1))
    m1 = Subspace.from_elements(et, [x, y])
    m2 = Subspace.from_elements(et, [bracket(x, y)])
    cent = centralizer_in(et, m1, m2)
    assert cent == Subspace.from_elements(et, [y])
    assert centralizer_in(et, m1, Subspace.zero(et)) == m1
    # the component before the second diamond is centralized by neither alone
    m = m1
    for _ in range(2, 5):
        m = Subspace.from_elements(
            et, [bracket(u, v) for u in m.basis_elements() for v in (x, y)]
        )
    assert centralizer_in(et, m1, m).dim == 0


def test_validate_grading_examples():
    table = build_H2_phi1(3, 1, 1, F3, 1)
    dm = grade_mixed(table, 3, 3)
    assert validate_grading(table, dm)
    corrupted = list(dm.degrees)
    corrupted[phi1_monomials(3, 1, 1).index((1, 0))] += 1
    assert not validate_grading(table, DegreeMap(dm.modulus, tuple(corrupted)))
    assert validate_grading(abelian(), DegreeMap(5, (0, 3)))


def test_graded_centralizers_are_graded():
    table = build_H2_phi1(3, 1, 1, F3, 1)
    dm = grade_mixed(table, 3, 3)
    full = table.full_subspace()
    mons = phi1_monomials(3, 1, 1)
    target = Subspace.from_elements(table, [table.basis_element(mons.index((1, 0)))])
    cent = centralizer_in(table, full, target)
    for row in cent.rows:
        degrees = {dm.degrees[i] for i, c in enumerate(row) if c}
        assert len(degrees) == 1


def test_check_structure_map_identity_and_zero():
    t = w11()
    assert check_structure_map(t, t, [t.basis_element(i) for i in range(3)])
    assert not check_structure_map(t, t, [t.zero_element()] * 3)


def test_subalgebra_table_requires_closure():
    t = w11()
    with pytest.raises(NotASubalgebra):
        subalgebra_table(t, [t.basis_element(0), t.basis_element(2)])


def test_rref_is_canonical():
    rng = random.Random(11)
    t = build_W1n(3, 2)
    vecs = [
        t.element({i: F3.element(rng.randrange(3)) for i in range(9)})
        for _ in range(5)
    ]
    rows = [v.dense() for v in vecs]
    shuffled = rows[:]
    rng.shuffle(shuffled)
    scaled = [tuple(F3.element(2) * c for c in row) for row in rows]
    assert rref(F3, rows) == rref(F3, shuffled) == rref(F3, scaled)


def test_table_json_roundtrip():
    f9 = field_create(3, 2)
    table = build_H2_phi1(3, 1, 1, f9, f9.generator())
    again = StructureTable.from_json(table.to_json())
    assert again.labels == table.labels
    assert again.field == table.field
    assert again.brackets == table.brackets


def test_degree_map_json_roundtrip():
    dm = DegreeMap(6, (1, 2, 3, 4, 5, 0, 1, 2, 3))
    assert DegreeMap.from_json(dm.to_json()) == dm
