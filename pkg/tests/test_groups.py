"""Finite group actions on products of matrix algebras; free-ideal search."""

from __future__ import annotations

import pytest

import skewgrass as sg
from skewgrass.errors import SearchExhausted, ValidationError


def two_block_action(Qi, Q):
    """The conjugation-on-one-factor group used by the bundled demos."""
    conj = sg.AlgebraAutomorphism(Qi, [[1, 0], [0, -1]], name="conj")
    b1 = sg.Block(Qi, 2, sg.LiftTable.build(Qi, [conj]))
    b2 = sg.Block(Q, 2)
    product = sg.ProductAlgebra([b1, b2])
    ident = [
        sg.from_pair(b1, sg.MatrixOverD.identity(Qi, 2), b1.lifts.identity),
        sg.from_pair(b2, sg.MatrixOverD.identity(Q, 2), b2.lifts.identity),
    ]
    conj_maps = [
        sg.from_pair(b1, sg.MatrixOverD.identity(Qi, 2), b1.lifts.get("conj")),
        sg.from_pair(b2, sg.MatrixOverD.identity(Q, 2), b2.lifts.identity),
    ]
    elements = [
        sg.GroupElement("id", (0, 1), ident),
        sg.GroupElement("c", (0, 1), conj_maps),
    ]
    return product, sg.validate_group(product, elements)


def swap_action(Q):
    """Two identical factors exchanged by an involution with identity maps."""
    block = sg.Block(Q, 2)
    product = sg.ProductAlgebra([block, block])
    eye = sg.from_pair(block, sg.MatrixOverD.identity(Q, 2), block.lifts.identity)
    elements = [
        sg.GroupElement("id", (0, 1), [eye, eye]),
        sg.GroupElement("swap", (1, 0), [eye, eye]),
    ]
    return product, sg.validate_group(product, elements)


def test_validate_group_builds_table(Qi, Q):
    _, action = two_block_action(Qi, Q)
    assert action.order == 2
    assert action.identity_name == "id"
    assert action.composition[("c", "c")] == "id"
    assert action.inverses == {"id": "id", "c": "c"}
    assert [g.name for g in action.nontrivial()] == ["c"]


def test_closure_failure_is_reported(Q):
    block = sg.Block(Q, 2)
    product = sg.ProductAlgebra([block])
    eye = sg.from_pair(block, sg.MatrixOverD.identity(Q, 2), block.lifts.identity)
    # inner by diag(1, 2) squares to inner by diag(1, 4), which is missing
    diag = sg.MatrixOverD.from_rows(Q, [[Q.one(), Q.zero()], [Q.zero(), Q.one().scale(2)]])
    g = sg.GroupElement("g", (0,), [sg.from_pair(block, diag, block.lifts.identity)])
    with pytest.raises(ValidationError, match="not closed"):
        sg.validate_group(product, [sg.GroupElement("id", (0,), [eye]), g])


def test_central_conjugation_counts_as_identity(Q):
    # inner by the central matrix 2I acts as the identity, so this singleton
    # is a perfectly valid group of order one
    block = sg.Block(Q, 2)
    product = sg.ProductAlgebra([block])
    two = sg.MatrixOverD.scalar(Q, 2, Q.one().scale(2))
    g = sg.GroupElement("g", (0,), [sg.from_pair(block, two, block.lifts.identity)])
    action = sg.validate_group(product, [g])
    assert action.order == 1 and action.identity_name == "g"


def test_missing_identity_rejected(Q):
    block = sg.Block(Q, 2)
    product = sg.ProductAlgebra([block])
    diag = sg.MatrixOverD.from_rows(Q, [[Q.one(), Q.zero()], [Q.zero(), Q.one().scale(2)]])
    g = sg.GroupElement("g", (0,), [sg.from_pair(block, diag, block.lifts.identity)])
    with pytest.raises(ValidationError, match="identity"):
        sg.validate_group(product, [g])


def test_duplicate_actions_rejected(Q):
    block = sg.Block(Q, 2)
    product = sg.ProductAlgebra([block])
    eye = sg.from_pair(block, sg.MatrixOverD.identity(Q, 2), block.lifts.identity)
    # scalar conjugation is the identity automorphism: same action, new name
    two = sg.from_pair(block, sg.MatrixOverD.scalar(Q, 2, Q.one().scale(2)), block.lifts.identity)
    with pytest.raises(ValidationError, match="identical action"):
        sg.validate_group(product, [
            sg.GroupElement("id", (0,), [eye]),
            sg.GroupElement("dup", (0,), [two]),
        ])


def test_tau_needs_matching_factor_descriptions(Qi, Q):
    b1 = sg.Block(Qi, 2, sg.LiftTable.build(Qi, []))
    b2 = sg.Block(Q, 2)
    product = sg.ProductAlgebra([b1, b2])
    e1 = sg.from_pair(b1, sg.MatrixOverD.identity(Qi, 2), b1.lifts.identity)
    e2 = sg.from_pair(b2, sg.MatrixOverD.identity(Q, 2), b2.lifts.identity)
    with pytest.raises(ValidationError, match="descriptions differ"):
        sg.validate_group(product, [
            sg.GroupElement("id", (0, 1), [e1, e2]),
            sg.GroupElement("s", (1, 0), [e1, e2]),
        ])


def test_action_on_ideals_and_stabilizer(Qi, Q):
    _, action = two_block_action(Qi, Q)
    c = action.element("c")
    one, i = Qi.one(), Qi.basis_element(1)
    # span (1, i) is moved by entrywise conjugation, span (1, 0) is fixed
    moved = sg.column_echelon(sg.MatrixOverD.from_columns(Qi, [[one, i]], 2))
    fixed = sg.column_echelon(sg.MatrixOverD.from_columns(Qi, [[one, Qi.zero()]], 2))
    any_q = sg.random_subspace(Q, 2, 1, seed=61)

    ideal_moved = sg.ProductIdeal.from_subspaces([moved, any_q])
    image = sg.act_on_ideal(c, ideal_moved)
    assert image != ideal_moved
    assert image.subspaces[1] == any_q
    assert sg.stabilizer(action, ideal_moved) == ["id"]
    assert len(sg.orbit(action, ideal_moved)) == 2

    ideal_fixed = sg.ProductIdeal.from_subspaces([fixed, any_q])
    assert sg.act_on_ideal(c, ideal_fixed) == ideal_fixed
    assert sg.stabilizer(action, ideal_fixed) == ["c", "id"]
    assert len(sg.orbit(action, ideal_fixed)) == 1


def test_orbit_stabilizer_sizes_multiply(Qi, Q):
    _, action = two_block_action(Qi, Q)
    for t in range(6):
        ideal = sg.ProductIdeal.from_subspaces([
            sg.random_subspace(Qi, 2, 1, seed=sg.subseed(71, t, 0)),
            sg.random_subspace(Q, 2, 1, seed=sg.subseed(71, t, 1)),
        ])
        stab = sg.stabilizer(action, ideal)
        orb = sg.orbit(action, ideal)
        assert len(stab) * len(orb) == action.order


def test_acts_trivially_on_type(Qi, Q):
    _, action = two_block_action(Qi, Q)
    c = action.element("c")
    # conjugation moves lines of the first factor, so (1, k2) is never trivial
    assert not sg.acts_trivially_on_type(action, c, (1, 1))
    # on (0, k2) and (2, k2) the first factor is a single point and the second
    # factor map is the identity
    assert sg.acts_trivially_on_type(action, c, (0, 1))
    assert sg.acts_trivially_on_type(action, c, (2, 0))


def test_acts_trivially_needs_matching_extremes(Q):
    _, action = swap_action(Q)
    swap = action.element("swap")
    # exchanged factors with k=0 on one side and k=full on the other cannot
    # be trivial: the swap sends a zero component to a full one
    assert not sg.acts_trivially_on_type(action, swap, (0, 2))
    assert sg.acts_trivially_on_type(action, swap, (0, 0))
    assert sg.acts_trivially_on_type(action, swap, (2, 2))
    assert not sg.acts_trivially_on_type(action, swap, (1, 1))


def test_search_free_on_conjugation_action(Qi, Q):
    _, action = two_block_action(Qi, Q)
    report = sg.search_free(action, (1, 1), count=5, seed=42)
    assert len(report.ideals) == 5
    assert len(set(report.ideals)) == 5
    for ideal in report.ideals:
        assert sg.stabilizer(action, ideal) == ["id"]


def test_search_free_rejects_doomed_type(Qi, Q):
    _, action = two_block_action(Qi, Q)
    with pytest.raises(ValidationError, match="fixes every ideal"):
        sg.search_free(action, (0, 1), count=1, seed=0)


def test_exists_free_statuses(Qi, Q):
    _, action = two_block_action(Qi, Q)
    positive = sg.exists_free(action, (1, 1), seed=7)
    assert positive.status == "positive"
    assert positive.ideal is not None
    assert sg.stabilizer(action, positive.ideal) == ["id"]
    negative = sg.exists_free(action, (0, 1), seed=7)
    assert negative.status == "negative"
    assert negative.witness_name == "c"


def test_swap_group_needs_distinct_components(Q):
    # with swapped equal factors the second component must avoid the image
    # of the first under the cross-factor map, here simply V2 != V1
    _, action = swap_action(Q)
    report = sg.search_free(action, (1, 1), count=20, seed=42)
    assert len(set(report.ideals)) == 20
    for ideal in report.ideals:
        v1, v2 = ideal.subspaces
        assert v1 != v2
        assert sg.stabilizer(action, ideal) == ["id"]


def test_swap_group_diagonal_is_fixed(Q):
    _, action = swap_action(Q)
    v = sg.random_subspace(Q, 2, 1, seed=81)
    diagonal = sg.ProductIdeal.from_subspaces([v, v])
    assert sg.stabilizer(action, diagonal) == ["id", "swap"]


def test_search_exhaustion_is_inconclusive(Q):
    # type (2, 2) leaves single-point Grassmannians on both factors, so the
    # swap fixes everything and the precheck certifies a negative instead
    _, action = swap_action(Q)
    cert = sg.exists_free(action, (2, 2), seed=1)
    assert cert.status == "negative"
    assert cert.witness_name == "swap"
    # a genuinely impossible sampling goal must surface as SearchExhausted,
    # not hang: ask for more distinct lines than sampling can provide cheaply
    with pytest.raises(SearchExhausted) as err:
        sg.search_free(action, (1, 1), count=10 ** 6, seed=1, max_tries=3)
    assert err.value.tries_used > 0
