import itertools
import math

import numpy as np
import pytest
import sympy

import vinwit


def diagram_text(rank, edges):
    return "rank = %d\n" % rank + "".join("edge %d %d %d\n" % e for e in edges)


PENTAGON = diagram_text(5, [(1, 2, 4), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 5, 3)])


def float_cartan(rank, edges):
    a = 2 * np.eye(rank)
    for i, j, m in edges:
        a[i - 1, j - 1] = a[j - 1, i - 1] = -2 * math.cos(math.pi / m)
    return a


def test_signature_matches_float_eigenvalues():
    cases = [
        (5, [(1, 2, 4), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 5, 3)]),
        (3, [(1, 2, 3), (2, 3, 3)]),
        (3, [(1, 2, 4), (2, 3, 4)]),
        (3, [(1, 2, 3), (2, 3, 3), (1, 3, 3)]),
    ]
    for rank, edges in cases:
        ev = np.linalg.eigvalsh(float_cartan(rank, edges))
        expect = (int((ev > 1e-9).sum()), int((abs(ev) <= 1e-9).sum()), int((ev < -1e-9).sum()))
        assert vinwit.signature(diagram_text(rank, edges)) == expect


def test_char_poly_matches_sympy():
    rng = np.random.default_rng(7)
    for n in range(1, 6):
        m = rng.integers(-4, 5, size=(n, n)).tolist()
        x = sympy.Symbol("x")
        expect = sympy.Poly(sympy.Matrix(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
        assert vinwit.char_poly(m) == [int(c) for c in expect]


def test_factor_pattern_matches_sympy():
    x = sympy.Symbol("x")
    for coeffs in ([-1, -1, 0, 0, 0, 1], [-2, 0, 0, 0, 0, 1], [1, 0, 1, 0, 0, 1]):
        f = sum(c * x**k for k, c in enumerate(coeffs))
        for p in (3, 7, 11, 13):
            _, factors = sympy.factor_list(f, modulus=p)
            degrees = sorted((sympy.degree(g, x) for g, e in factors for _ in range(e)), reverse=True)
            squarefree = all(e == 1 for _, e in factors)
            assert vinwit.factor_pattern(coeffs, p) == (degrees, squarefree)


def test_reflection_generators_are_reflections():
    cartan = [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]
    gens = [np.array(g, dtype=np.int64) for g in vinwit.reflection_generators(cartan)]
    assert len(gens) == 3
    for i, g in enumerate(gens):
        assert (g @ g == np.eye(3, dtype=np.int64)).all()
        assert round(np.linalg.det(g)) == -1


def closure_order(mats):
    seen = {tuple(np.eye(len(mats[0]), dtype=np.int64).ravel())}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            m = np.array(w).reshape(len(mats[0]), -1)
            for g in mats:
                key = tuple((m @ g).ravel())
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return len(seen)


def coxeter_relators(labels):
    n = len(labels)
    rel = [[i + 1, i + 1] for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if labels[i][j] > 2:
            rel.append([i + 1, j + 1] * labels[i][j])
        else:
            rel.append([i + 1, j + 1] * 2)
    return rel


@pytest.mark.parametrize("cartan,labels", [
    ([[2, -1], [-1, 2]], [[1, 3], [3, 1]]),
    ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [[1, 3, 2], [3, 1, 3], [2, 3, 1]]),
    ([[2, -1, 0], [-2, 2, -1], [0, -1, 2]], [[1, 4, 2], [4, 1, 3], [2, 3, 1]]),
])
def test_coset_count_matches_matrix_group_order(cartan, labels):
    gens = [np.array(g, dtype=np.int64) for g in vinwit.reflection_generators(cartan)]
    assert vinwit.coset_count(len(labels), coxeter_relators(labels)) == closure_order(gens)


def test_coset_count_budget_exhausted_returns_none():
    # free group on two generators: trivial subgroup has infinite index
    assert vinwit.coset_count(2, [], max_cosets=50) is None


def test_abelianization_counts_odd_components():
    edges = [(1, 2, 4), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 5, 3)]
    labels = [[1 if i == j else 2 for j in range(5)] for i in range(5)]
    for i, j, m in edges:
        labels[i - 1][j - 1] = labels[j - 1][i - 1] = m
    # generators joined by odd labels are conjugate, hence equal in H_1
    parent = list(range(5))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i, j, m in edges:
        if m % 2:
            parent[find(i - 1)] = find(j - 1)
    components = len({find(i) for i in range(5)})
    factors, betti = vinwit.abelianization(5, coxeter_relators(labels))
    assert betti == 0
    assert factors == [2] * components


def test_cartan_matrix_diagonal_and_symmetry():
    a = vinwit.cartan_matrix(PENTAGON)
    assert all(a[i][i] == "2" for i in range(5))
    assert all(a[i][j] == a[j][i] for i in range(5) for j in range(5))


def test_malformed_diagram_names_line(root):
    with pytest.raises(vinwit.ParseError, match="line 3"):
        vinwit.signature((root / "data" / "malformed.txt").read_text())


def test_unknown_option_rejected():
    with pytest.raises(vinwit.InvalidInput):
        vinwit.run("rep verify", no_such_budget=3)
    with pytest.raises(vinwit.InvalidInput):
        vinwit.run("no such command")
