import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eadual.effect_algebras import (
    AxiomViolation, MalformedTables, boolean_ea, chain_ea, dirac_states, find_isomorphism,
    find_violation, is_morphism, is_state, mo_ea, precompose_state, product_ea, state_polytope,
    validate,
)
from eadual.polyhedra import contains
from corpus import effect_algebras
from oracles import brute_force_vertices, dirac_measures


def two_element():
    return dict(elements=["0", "1"], zero="0", one="1", orth={"0": "1", "1": "0"},
                sums=[("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1")])


def half_chain():
    e = ["0", "1/2", "1"]
    sums = [("0", x, x) for x in e] + [(x, "0", x) for x in e[1:]] + [("1/2", "1/2", "1")]
    return dict(elements=e, zero="0", one="1", orth={"0": "1", "1/2": "1/2", "1": "0"}, sums=sums)


class TestValidate:
    def test_two_element_boolean(self):
        A = validate(**two_element())
        assert len(A) == 2

    def test_half_chain(self):
        A = validate(**half_chain())
        assert A.sum("1/2", "1/2") == "1"
        assert A == chain_ea(2)

    def test_missing_commutative_pair(self):
        t = half_chain()
        t["sums"] = [s for s in t["sums"] if s != ("1/2", "0", "1/2")]
        with pytest.raises(AxiomViolation) as exc:
            validate(**t)
        assert exc.value.axiom == "commutativity"
        assert exc.value.witness == ("0", "1/2")

    def test_dangling_id(self):
        t = two_element()
        t["sums"] = t["sums"] + [("0", "x", "x")]
        with pytest.raises(MalformedTables):
            validate(**t)

    def test_orth_not_total(self):
        t = two_element()
        t["orth"] = {"0": "1"}
        with pytest.raises(MalformedTables):
            validate(**t)

    def test_trivial_algebra_rejected(self):
        with pytest.raises(AxiomViolation) as exc:
            validate(["0"], "0", "0", {"0": "0"}, [("0", "0", "0")])
        assert exc.value.axiom == "nontriviality"

    def test_zero_one_law(self):
        t = two_element()
        t["sums"] = t["sums"] + [("1", "1", "1")]
        with pytest.raises(AxiomViolation) as exc:
            validate(**t)
        # 1 + 1 = 1 already breaks the uniqueness of orthosupplements
        assert exc.value.axiom in {"orthosupplement", "zero-one"}

    def test_associativity(self):
        # a chain where 1/3 + 1/3 is defined but (1/3 + 1/3) + 1/3 is not reachable the other way
        A = chain_ea(3)
        sums = dict(A.sums)
        del sums[("1/3", "2/3")]
        del sums[("2/3", "1/3")]
        v = find_violation(A.__class__(A.elements, A.zero, A.one, A.orth, sums))
        assert v.axiom in {"associativity", "orthosupplement"}


class TestConstructions:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_boolean_sizes(self, n):
        assert len(boolean_ea(n)) == 2 ** n

    def test_boolean_disjoint_union(self):
        A = boolean_ea(2)
        assert A.sum("{1}", "{2}") == "{1,2}"
        assert A.sum("{1}", "{1,2}") is None

    def test_chain(self):
        assert len(chain_ea(1)) == 2
        assert chain_ea(2).perp("1/2") == "1/2"
        A = chain_ea(4)
        assert find_violation(A) is None
        assert all(A.perp(A.perp(a)) == a for a in A.elements)

    def test_mo1_is_boolean_square(self):
        assert find_isomorphism(mo_ea(1), boolean_ea(2)) is not None

    def test_mo2(self):
        A = mo_ea(2)
        assert len(A) == 6
        assert A.sum("a1", "a2") is None
        assert A.sum("a1", "a1'") == "1"
        assert find_violation(A) is None
        assert find_isomorphism(A, boolean_ea(2)) is None

    def test_products(self):
        assert find_isomorphism(product_ea(chain_ea(1), chain_ea(1)), boolean_ea(2)) is not None
        assert len(product_ea(chain_ea(2), chain_ea(2))) == 9
        with pytest.raises(AxiomViolation):
            validate(["0"], "0", "0", {"0": "0"}, [("0", "0", "0")])

    @pytest.mark.parametrize("A", effect_algebras(), ids=repr)
    def test_corpus_valid_and_involutive(self, A):
        assert find_violation(A) is None
        assert all(A.perp(A.perp(a)) == a for a in A.elements)

    def test_leq(self):
        A = boolean_ea(2)
        assert A.leq("{1}", "{1,2}")
        assert not A.leq("{1}", "{2}")


class TestMorphisms:
    def test_identity(self):
        A = boolean_ea(2)
        assert is_morphism(A, A, {a: a for a in A.elements}).ok

    def test_boolean_to_chain(self):
        m = {"{}": "0", "{1}": "1/2", "{2}": "1/2", "{1,2}": "1"}
        assert is_morphism(boolean_ea(2), chain_ea(2), m).ok

    def test_collapse_fails(self):
        m = {"{}": "0", "{1}": "1", "{2}": "1", "{1,2}": "1"}
        check = is_morphism(boolean_ea(2), chain_ea(1), m)
        assert not check.ok
        assert check.witness == ("{1}", "{2}")

    def test_not_total(self):
        with pytest.raises(ValueError):
            is_morphism(boolean_ea(2), chain_ea(1), {"{}": "0"})


def all_morphisms(A, B):
    for images in itertools.product(B.elements, repeat=len(A)):
        m = dict(zip(A.elements, images))
        if is_morphism(A, B, m).ok:
            yield m


class TestStates:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_boolean_dirac(self, n):
        P = state_polytope(boolean_ea(n)).polytope
        assert list(P.vertices) == dirac_measures(n)
        assert sorted(dirac_states(n)) == dirac_measures(n)

    def test_boolean3_brute_force(self):
        P = state_polytope(boolean_ea(3)).polytope
        assert list(P.vertices) == brute_force_vertices(P.halfspaces, P.equalities, 8)

    def test_chain2_point(self):
        S = state_polytope(chain_ea(2))
        assert S.vertices == ((0, F(1, 2), 1),)

    def test_mo2_square(self):
        A = mo_ea(2)
        S = state_polytope(A)
        pairs = sorted((S.value(v, "a1"), S.value(v, "a2")) for v in S.vertices)
        assert pairs == [(0, 0), (0, 1), (1, 0), (1, 1)]

    @pytest.mark.parametrize("A", effect_algebras(), ids=repr)
    def test_vertices_are_states(self, A):
        for v in state_polytope(A).vertices:
            assert is_state(A, v).ok

    @pytest.mark.parametrize("A,B", [(boolean_ea(2), chain_ea(2)), (chain_ea(2), chain_ea(4)),
                                      (boolean_ea(1), mo_ea(2)), (mo_ea(1), boolean_ea(2))])
    def test_functoriality(self, A, B):
        PA = state_polytope(A).polytope
        for m in all_morphisms(A, B):
            for phi in state_polytope(B).vertices:
                assert contains(PA, precompose_state(m, A, B, phi))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6))
def test_chain_products_validate(m, n):
    if (m + 1) * (n + 1) <= 20:
        assert find_violation(product_ea(chain_ea(m), chain_ea(n))) is None
