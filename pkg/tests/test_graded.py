import itertools

import pytest
from hypothesis import given, strategies as st

from ainfcheck.core import (QQ, PrimeField, GradedSpace, GradedMap, Matrix,
                            tensor_space, unit_space, element_map,
                            basis_element, koszul_sign, signed_permutation,
                            transposition, tensor_map, compose,
                            direct_sum_space)

from util import rng, random_graded_map


def brute_koszul(perm, degrees):
    # move elements one adjacent swap at a time, tracking the sign
    items = list(range(len(perm)))
    sign = 1
    # bubble into destination order
    target = sorted(items, key=lambda i: perm[i])
    cur = items[:]
    for pos, want in enumerate(target):
        i = cur.index(want)
        while i > pos:
            sign *= (-1) ** (degrees[cur[i - 1]] * degrees[cur[i]])
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
            i -= 1
    return sign


def test_koszul_sign_examples():
    assert koszul_sign((1, 0), (1, 1)) == -1
    assert koszul_sign((1, 0), (1, 2)) == 1
    assert koszul_sign((2, 1, 0), (1, 1, 1)) == -1
    assert koszul_sign((0, 1, 2), (5, 7, 9)) == 1


@given(st.integers(2, 5).flatmap(
    lambda n: st.tuples(st.permutations(range(n)),
                        st.lists(st.integers(-3, 4), min_size=n, max_size=n))))
def test_koszul_sign_matches_adjacent_swaps(pd):
    perm, degs = pd
    assert koszul_sign(tuple(perm), tuple(degs)) == brute_koszul(perm, degs)


def _spaces():
    A = GradedSpace(QQ, {0: ("a0",), 1: ("a1", "a1b")})
    B = GradedSpace(QQ, {-1: ("b",), 2: ("b2",)})
    C = GradedSpace(QQ, {0: ("c",), 1: ("c1",)})
    return A, B, C


def test_tensor_space_dims():
    A, B, C = _spaces()
    T = tensor_space([A, B, C])
    total = sum(T.dim(d) for d in T.degrees())
    assert total == 3 * 2 * 2
    # degree bookkeeping: a1 (x) b (x) c1 sits in degree 1
    assert T.dim(1 - 1 + 1) >= 1


def test_tensor_space_flattens():
    A, B, C = _spaces()
    T1 = tensor_space([tensor_space([A, B]), C])
    T2 = tensor_space([A, tensor_space([B, C])])
    T3 = tensor_space([A, B, C])
    assert T1 == T2 == T3
    assert len(T1.factors) == 3


def test_unit_space_is_unit():
    A = _spaces()[0]
    U = unit_space(QQ)
    assert tensor_space([U, A]) == tensor_space([A]) == A
    assert U.dim(0) == 1


def test_signed_permutation_composes():
    A, B, C = _spaces()
    T = tensor_space([A, B, C])
    p1 = signed_permutation(T, (1, 0, 2))      # swap first two
    p2 = signed_permutation(p1.target, (0, 2, 1))
    composed = tuple((0, 2, 1)[i] for i in (1, 0, 2))   # p1 then p2
    assert p1.then(p2) == signed_permutation(T, composed)


def test_signed_permutation_involution():
    A, B, _ = _spaces()
    T = tensor_space([A, B])
    sw = transposition(T, 0, 1)
    assert sw.then(transposition(sw.target, 0, 1)) == GradedMap.identity(T)


def test_koszul_transposition_sign_on_elements():
    # odd (x) odd should pick up -1
    A = GradedSpace(QQ, {1: ("x",)})
    B = GradedSpace(QQ, {1: ("y",)})
    T = tensor_space([A, B])
    sw = transposition(T, 0, 1)
    assert sw.block(2).data[0][0] == QQ.of(-1)


@pytest.mark.parametrize("seed", range(6))
def test_tensor_map_functorial(seed):
    # (f1 (x) g1) then (f2 (x) g2) = (-1)^{|g1||f2|} (f1 f2) (x) (g1 g2)
    r = rng(seed)
    A, B, C = _spaces()
    d1, d2, e1, e2 = (r.choice([-1, 0, 1, 2]) for _ in range(4))
    f1 = random_graded_map(r, QQ, A, B, d1)
    f2 = random_graded_map(r, QQ, B, C, d2)
    g1 = random_graded_map(r, QQ, C, A, e1)
    g2 = random_graded_map(r, QQ, A, B, e2)
    lhs = tensor_map(f1, g1).then(tensor_map(f2, g2))
    sgn = -1 if (e1 * d2) % 2 else 1
    rhs = tensor_map(f1.then(f2), g1.then(g2)).scale(sgn)
    assert lhs == rhs


def test_tensor_map_with_element_inserts_koszul_sign():
    # inserting odd x into slot 0 makes the map x cross the odd passenger y
    # ((y)(x (x) 1) = (-1)^{|x||y|} x (x) y); slot 1 crosses nothing
    A = GradedSpace(QQ, {1: ("x",)})
    B = GradedSpace(QQ, {1: ("y",)})
    x = basis_element(A, 1, 0)
    idB = GradedMap.identity(B)
    left = tensor_map(x, idB)          # y -> -(x (x) y)
    right = tensor_map(idB, x)         # y -> y (x) x
    assert left.block(1).data[0][0] == QQ.of(-1)
    assert right.block(1).data[0][0] == QQ.of(1)


def test_element_map_roundtrip():
    A = GradedSpace(QQ, {0: ("u", "v")})
    e = element_map(A, 0, [QQ.of(2), QQ.of(-3)])
    assert e.source == unit_space(QQ)
    assert e.apply(0, [QQ.one]) == (0, [QQ.of(2), QQ.of(-3)])


def test_direct_sum_roundtrip():
    A, B, _ = _spaces()
    total, inc, prj = direct_sum_space(QQ, [("a", A), ("b", B)])
    assert sum(total.dim(d) for d in total.degrees()) == 3 + 2
    assert inc["a"].then(prj["a"]) == GradedMap.identity(A)
    assert inc["a"].then(prj["b"]).is_zero()
    assert (inc["a"].then(prj["a"])).degree == 0


def test_graded_map_inverse():
    A = GradedSpace(QQ, {0: ("u", "v"), 1: ("w",)})
    f = GradedMap(A, A, 0, {0: Matrix(QQ, [[1, 1], [0, 1]], 2, 2),
                            1: Matrix(QQ, [[2]], 1, 1)})
    g = f.inverse()
    assert f.then(g) == GradedMap.identity(A)
    assert g.then(f) == GradedMap.identity(A)


def test_compose_chain():
    r = rng(0)
    A, B, C = _spaces()
    f = random_graded_map(r, QQ, A, B, 1)
    g = random_graded_map(r, QQ, B, C, -1)
    h = random_graded_map(r, QQ, C, A, 0)
    assert compose(f, g, h) == f.then(g).then(h)
