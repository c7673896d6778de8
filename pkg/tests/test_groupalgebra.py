"""Group algebra arithmetic, class sums, idempotents, spans, and the
theorem registry."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from peaklab import (
    GAElem,
    GAPoly,
    ResourceLimitError,
    class_sum,
    cyclic_isomorphism_check,
    eulerian_number,
    family_labels,
    idempotent_powers,
    idempotents,
    in_span,
    minimal_non_algebra_n,
    multiplicative_closure,
    refined_decomposition,
    span_rank,
    structure_constants,
    structure_polynomial,
    verify_identity,
    all_theorem_ids,
)
from peaklab.perms import eta, identity_perm, symmetric_group, hyperoctahedral_group


S3 = list(symmetric_group(3))

elem_strategy = st.dictionaries(
    st.sampled_from(S3), st.integers(-2, 2), max_size=4
).map(lambda d: GAElem("S", 3, d))


@given(a=elem_strategy, b=elem_strategy, c=elem_strategy)
@settings(deadline=None, max_examples=60)
def test_gaelem_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    one = GAElem.basis("S", identity_perm(3))
    assert one * a == a * one == a
    assert a.scale(2) == a + a
    assert (a - a).is_zero()


def test_gaelem_basics():
    e = GAElem("S", 3, {(1, 3, 2): Fraction(1, 2), (2, 1, 3): 0})
    assert e.support_size() == 1  # zero coefficients dropped
    assert e.coeff((1, 3, 2)) == Fraction(1, 2)
    assert e.coeff((1, 2, 3)) == 0
    with pytest.raises(AttributeError):
        e.n = 4
    with pytest.raises(ValueError):
        e + GAElem.zero("S", 2)
    with pytest.raises(ValueError):
        e + GAElem.zero("B", 3)
    assert GAElem.from_json(e.to_json()) == e
    assert e != object()
    assert 2 * e == e.scale(2)


def test_gapoly_basics():
    zero = GAElem.zero("S", 2)
    one = GAElem.basis("S", (1, 2))
    swap = GAElem.basis("S", (2, 1))
    p = GAPoly("S", 2, [one, swap, zero])
    assert p.degree == 1  # trailing zero trimmed
    assert p.coeff(5).is_zero()
    assert p(3) == one + swap.scale(3)
    assert p.left_mul(swap) == GAPoly("S", 2, [swap, one])
    with pytest.raises(ValueError):
        GAPoly("S", 2, [GAElem.zero("S", 3), one])


@pytest.mark.parametrize(
    "family,n",
    [("descent_set", 3), ("peak_interior_set", 4), ("B_peak_sign_set", 2)],
)
def test_class_sums_partition_group(family, n):
    sums = [class_sum(n, family, lab) for lab in family_labels(family, n)]
    group = "B" if family.startswith("B") else "S"
    elements = list(symmetric_group(n) if group == "S" else hyperoctahedral_group(n))
    total = GAElem.zero(group, n)
    for s in sums:
        total = total + s
    assert total == GAElem(group, n, {p: 1 for p in elements})
    assert sum(s.support_size() for s in sums) == len(elements)


def test_class_sum_errors_and_empty_class():
    with pytest.raises(ValueError):
        class_sum(3, "descent_amount", 0)
    with pytest.raises(ValueError):
        class_sum(3, "descent_num", 7)
    # list labels are accepted for the set families
    assert class_sum(3, "peak_interior_set", [2]).support_size() == 2
    with pytest.warns(UserWarning):
        empty = class_sum(2, "B_peak_sign_num", (1, 1))
    assert empty.is_zero()


def test_eulerian_class_sizes():
    for n in range(1, 6):
        for i in range(1, n + 1):
            assert class_sum(n, "descent_num", i - 1).support_size() == eulerian_number(n, i)
    assert [eulerian_number(4, i) for i in range(1, 5)] == [1, 11, 11, 1]
    assert eulerian_number(4, 0) == 0 and eulerian_number(4, 5) == 0


def test_eta_transfer():
    for n in (3, 4):
        et = GAElem.basis("S", eta(n))
        assert structure_polynomial(n, "rho") == structure_polynomial(n, "rho_bar").left_mul(et)
        assert structure_polynomial(n, "rho_l") == structure_polynomial(n, "rho_r").right_mul(et)


def test_idempotent_powers_pinned():
    assert idempotent_powers(3, "phi") == [1, 2, 3]
    assert idempotent_powers(1, "phi_c") == [0]
    assert idempotent_powers(3, "phi_c") == [1, 2]
    assert idempotent_powers(3, "rho") == [1, 3]
    assert idempotent_powers(4, "rho") == [2, 4]
    assert idempotent_powers(3, "rho_l") == [1, 3]
    assert idempotent_powers(4, "rho_l") == [0, 2, 4]
    assert idempotent_powers(2, "phi_B") == [0, 1, 2]
    assert idempotent_powers(2, "phi_B_c") == [1, 2]
    assert idempotent_powers(2, "rho_B") == [0, 1, 2]
    with pytest.raises(ValueError):
        idempotent_powers(2, "tau")
    with pytest.raises(ValueError):
        structure_polynomial(2, "tau")


def test_idempotents_orthogonal_smoke():
    # full sweep lives in the acceptance suite; pin two families here
    es = idempotents(3, "phi")
    for i, a in enumerate(es):
        for j, b in enumerate(es):
            assert a * b == (a if i == j else GAElem.zero("S", 3))
    total = GAElem.zero("S", 3)
    for a in es:
        total = total + a
    assert total == GAElem.basis("S", identity_perm(3))

    rs = idempotents(2, "rho_B")
    for i, a in enumerate(rs):
        for j, b in enumerate(rs):
            assert a * b == (a if i == j else GAElem.zero("B", 2))


def test_span_rank_and_in_span():
    assert span_rank([]) == 0
    e = class_sum(3, "descent_num", 0)
    assert span_rank([e, e, e.scale(5)]) == 1
    assert in_span(e.scale(3), [e])
    assert not in_span(class_sum(3, "descent_num", 1), [e])


def test_interior_peak_span_is_ideal_in_refined_span():
    for n in (3, 4):
        peak_basis = [class_sum(n, "peak_interior_num", i)
                      for i in family_labels("peak_interior_num", n)]
        refined = refined_decomposition(n, "typeA_F")
        dotted = [e for e in refined["elements"].values() if not e.is_zero()]
        assert span_rank(dotted) == n
        assert all(in_span(v, dotted) for v in peak_basis)
        for a in dotted:
            for v in peak_basis:
                assert in_span(a * v, peak_basis)
                assert in_span(v * a, peak_basis)


def test_descent_and_peak_number_spans_do_not_commute():
    def witnesses(n):
        E = [class_sum(n, "descent_num", i) for i in family_labels("descent_num", n)]
        G = [class_sum(n, "peak_interior_num", i) for i in family_labels("peak_interior_num", n)]
        return E, G, [(a, b) for a in E for b in G if a * b != b * a]

    E2, G2, w2 = witnesses(2)
    assert w2 == []
    E3, G3, w3 = witnesses(3)
    assert w3
    # the joint span is already closed under multiplication
    joint = E3 + G3
    assert span_rank(joint) == len(multiplicative_closure(joint)) == 4
    # peak sums on the left absorb the joint span; the other order escapes
    assert all(in_span(v * a, G3) for a in joint for v in G3)
    assert not all(in_span(a * v, G3) for a in joint for v in G3)


def test_right_peak_closure_contains_left_peak_span():
    n = 4
    sums = [class_sum(n, "right_peak_num", i) for i in family_labels("right_peak_num", n)]
    assert span_rank(sums) == 3
    closed = multiplicative_closure(sums)
    assert len(closed) == 5
    for a in closed:
        for b in closed:
            assert in_span(a * b, closed)
            assert a * b == b * a
    left = [class_sum(n, "peak_left_num", i) for i in family_labels("peak_left_num", n)]
    assert all(in_span(v, closed) for v in left)
    assert span_rank(left) == 3 < 5
    with pytest.raises(ResourceLimitError):
        multiplicative_closure(sums, cap=4)
    assert multiplicative_closure([]) == []


def test_structure_constants_descent_set():
    out = structure_constants(3, "descent_set")
    assert out["well_defined"] and out["violation"] is None
    labels = out["labels"]
    assert labels == [(), (1,), (2,), (1, 2)] or labels == sorted(labels)
    sizes = [class_sum(3, "descent_set", lab).support_size() for lab in labels]
    k = len(labels)
    for a in range(k):
        for b in range(k):
            mass = sum(out["tensor"][a][b][c] * sizes[c] for c in range(k))
            assert mass == sizes[a] * sizes[b]
    with pytest.raises(ValueError):
        structure_constants(3, "descent_num")
    with pytest.raises(ResourceLimitError):
        structure_constants(7, "descent_set")


def test_minimal_non_algebra():
    assert minimal_non_algebra_n("right_peak_set") == 3
    assert minimal_non_algebra_n("exterior_peak_set") == 4
    assert minimal_non_algebra_n("peak_interior_set") is None


def test_refined_decomposition_relations():
    for n in (2, 3, 4):
        out = refined_decomposition(n, "typeA_F")
        assert out["ok"], out["relations"]
    assert refined_decomposition(3, "typeA_F")["relations"]["odd_top_vanishes"]
    for n in (2, 3):
        out = refined_decomposition(n, "typeB_F")
        assert out["ok"], out["relations"]
        assert len(out["elements"]) == 2 * n
    with pytest.raises(ValueError):
        refined_decomposition(3, "typeC_F")


def test_cyclic_isomorphism():
    assert cyclic_isomorphism_check(3)
    assert cyclic_isomorphism_check(4)
    with pytest.raises(ValueError):
        cyclic_isomorphism_check(2)


def test_registry_all_pass_at_n2():
    ids = all_theorem_ids()
    assert len(ids) == 44
    for tid in ids:
        out = verify_identity(2, tid)
        assert out["ok"] is True, (tid, out)
        assert out["expected_ok"] is True, tid


def test_registry_negatives_at_n3():
    for tid in ("phi_times_rho", "right_peak_num_closure", "right_peak_set_constants"):
        out = verify_identity(3, tid)
        assert out["ok"] is False, tid
        assert out["expected_ok"] is False, tid
        assert out["counterexample"] is not None, tid
    with pytest.raises(ValueError):
        verify_identity(3, "no_such_theorem")


def test_registry_sampled_verification():
    out = verify_identity(3, "ges", sample=4)
    assert out["ok"] and out["expected_ok"]
