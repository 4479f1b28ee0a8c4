from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

import oracles
from weylenum import (UnsupportedRootSystem, cartan_matrix, inverse_cartan,
                      fundamental_weight_in_root_basis, load_cartan_file,
                      positive_root_count, reflection_matrix, root_system,
                      root_system_from_cartan, weyl_order)
from weylenum.rootsystems import parse_id, validate_cartan

SAMPLE_NAMES = ["A1", "A2", "A5", "B2", "B3", "B7", "C3", "C4", "D3", "D4",
                "D8", "E6", "E7", "E8", "F4", "G2"]


def test_parse_id_accepts_valid_names():
    assert parse_id("D4") == ("D", 4)
    assert parse_id("A1") == ("A", 1)
    assert parse_id("B2") == ("B", 2)
    assert parse_id("C2") == ("C", 2)
    assert parse_id("D3") == ("D", 3)
    assert parse_id(" E8 ") == ("E", 8)
    assert parse_id("A12") == ("A", 12)
    assert parse_id("F4") == ("F", 4)
    assert parse_id("G2") == ("G", 2)


@pytest.mark.parametrize("bad", ["E5", "E9", "F5", "F3", "G3", "G1", "D2",
                                 "B1", "C1", "A0", "H3", "X4", "D", "4D",
                                 "d4", "", "D-4"])
def test_parse_id_rejects_invalid_names(bad):
    with pytest.raises(UnsupportedRootSystem):
        parse_id(bad)


def test_cartan_d4_exact():
    expected = [[2, -1, 0, 0],
                [-1, 2, -1, -1],
                [0, -1, 2, 0],
                [0, -1, 0, 2]]
    assert cartan_matrix("D4").tolist() == expected


def test_cartan_b3_short_root_last():
    assert cartan_matrix("B3").tolist() == [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]


def test_cartan_c3_is_b3_transposed():
    assert np.array_equal(cartan_matrix("C3"), cartan_matrix("B3").T)


def test_cartan_g2_exact():
    assert cartan_matrix("G2").tolist() == [[2, -1], [-3, 2]]


def test_cartan_f4_exact():
    assert cartan_matrix("F4").tolist() == [[2, -1, 0, 0],
                                            [-1, 2, -2, 0],
                                            [0, -1, 2, -1],
                                            [0, 0, -1, 2]]


def test_cartan_e7_edges():
    c = cartan_matrix("E7")
    edges = {(i + 1, j + 1) for i in range(7) for j in range(7)
             if i < j and c[i, j] != 0}
    assert edges == {(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7)}


@pytest.mark.parametrize("name", SAMPLE_NAMES)
def test_cartan_matches_euclidean_realization(name):
    # row i of the Cartan matrix must be the weight coordinates of root i
    # in the explicit Euclidean realization
    family, rank = parse_id(name)
    model = oracles.EuclideanModel(family, rank)
    c = cartan_matrix(name)
    for i in range(rank):
        assert model.coords(model.roots[i]) == tuple(c[i])


@pytest.mark.parametrize("name", SAMPLE_NAMES)
def test_reflections_are_involutions(name):
    n = len(cartan_matrix(name))
    eye = np.eye(n, dtype=np.int64)
    for i in range(1, n + 1):
        r = reflection_matrix(name, i)
        assert np.array_equal(r @ r, eye)
        assert round(float(np.linalg.det(r))) == -1


def test_reflection_matrix_rows():
    r = reflection_matrix("D4", 2)
    assert r.tolist() == [[1, 0, 0, 0], [1, -1, 1, 1], [0, 0, 1, 0], [0, 0, 0, 1]]
    with pytest.raises(IndexError):
        reflection_matrix("D4", 0)
    with pytest.raises(IndexError):
        reflection_matrix("D4", 5)


def test_reflection_matrix_first_generator():
    r = reflection_matrix("D4", 1)
    assert r.tolist() == [[-1, 1, 0, 0],
                          [0, 1, 0, 0],
                          [0, 0, 1, 0],
                          [0, 0, 0, 1]]
    assert reflection_matrix("A1", 1).tolist() == [[-1]]


@pytest.mark.parametrize("name", SAMPLE_NAMES)
def test_reflection_action_matches_euclidean_model(name):
    # the matrix action on weight rows must agree with reflecting the
    # underlying vector in the Euclidean realization
    family, rank = parse_id(name)
    model = oracles.EuclideanModel(family, rank)
    refl = [reflection_matrix(name, i) for i in range(1, rank + 1)]
    rng = np.random.default_rng(7000 + SAMPLE_NAMES.index(name))
    for _ in range(60):
        m = rng.integers(-40, 41, size=rank)
        for i in range(1, rank + 1):
            ours = (m @ refl[i - 1]).tolist()
            theirs = model.reflect([int(x) for x in m], i)
            assert ours == list(theirs)


def test_positive_root_counts():
    assert positive_root_count("A3") == 6
    assert positive_root_count("B7") == 49
    assert positive_root_count("C4") == 16
    assert positive_root_count("D4") == 12
    assert positive_root_count("D8") == 56
    assert positive_root_count("E7") == 63
    assert positive_root_count("E8") == 120
    assert positive_root_count("F4") == 24
    assert positive_root_count("G2") == 6


def test_weyl_orders():
    assert weyl_order("A3") == 24
    assert weyl_order("B7") == 645120
    assert weyl_order("C4") == 384
    assert weyl_order("D4") == 192
    assert weyl_order("D8") == 5160960
    assert weyl_order("E7") == 2903040
    assert weyl_order("E8") == 696729600
    assert weyl_order("F4") == 1152
    assert weyl_order("G2") == 12


@pytest.mark.parametrize("name", SAMPLE_NAMES)
def test_order_and_root_count_match_degrees(name):
    family, rank = parse_id(name)
    degs = oracles.degrees(family, rank)
    product = 1
    for d in degs:
        product *= d
    assert product == weyl_order(name)
    assert sum(d - 1 for d in degs) == positive_root_count(name)


def test_inverse_cartan_exact():
    assert inverse_cartan("A2") == ((Fraction(2, 3), Fraction(1, 3)),
                                    (Fraction(1, 3), Fraction(2, 3)))
    assert inverse_cartan("G2") == ((Fraction(2), Fraction(1)),
                                    (Fraction(3), Fraction(2)))


@pytest.mark.parametrize("name", ["A4", "B5", "D4", "E6", "F4"])
def test_inverse_cartan_is_inverse(name):
    c = cartan_matrix(name)
    inv = inverse_cartan(name)
    n = len(c)
    for i in range(n):
        for j in range(n):
            acc = sum(inv[i][k] * int(c[k][j]) for k in range(n))
            assert acc == (1 if i == j else 0)


def test_inverse_cartan_d4_exact():
    h = Fraction(1, 2)
    assert inverse_cartan("D4") == ((1, 1, h, h),
                                    (1, 2, 1, 1),
                                    (h, 1, 1, h),
                                    (h, 1, h, 1))


def test_fundamental_weight_rows():
    inv = inverse_cartan("D4")
    assert fundamental_weight_in_root_basis("D4", 1) == inv[0]
    assert fundamental_weight_in_root_basis("D4", 4) == inv[3]
    with pytest.raises(IndexError):
        fundamental_weight_in_root_basis("D4", 5)


def test_fundamental_weight_values():
    h = Fraction(1, 2)
    assert fundamental_weight_in_root_basis("D4", 1) == (1, 1, h, h)
    assert fundamental_weight_in_root_basis("D4", 2) == (1, 2, 1, 1)
    assert fundamental_weight_in_root_basis("A1", 1) == (h,)


def test_validate_cartan_accepts():
    out = validate_cartan([[2, -1], [-1, 2]])
    assert out.dtype == np.int64
    # float input is fine when the entries are integral
    out = validate_cartan(np.array([[2.0, -1.0], [-1.0, 2.0]]))
    assert out.tolist() == [[2, -1], [-1, 2]]
    for name in SAMPLE_NAMES:
        validate_cartan(cartan_matrix(name))


@pytest.mark.parametrize("bad", [
    [[2, -1, 0], [-1, 2, -1]],              # not square
    [[1, -1], [-1, 2]],                     # diagonal entry not 2
    [[2, 1], [-1, 2]],                      # positive off-diagonal
    [[2, -4], [-1, 2]],                     # off-diagonal below -3
    [[2, 0], [-1, 2]],                      # zero not symmetric
    [[2, -2], [-2, 2]],                     # affine: determinant 0
    [[2, -3], [-3, 2]],                     # indefinite
    [[2.5, -1], [-1, 2]],                   # non-integer entry
])
def test_validate_cartan_rejects(bad):
    with pytest.raises(UnsupportedRootSystem):
        validate_cartan(bad)


def test_load_cartan_file(tmp_path):
    path = tmp_path / "g2.txt"
    path.write_text("# rank first, then the rows\n\n2\n2 -1\n-3 2  # long root row\n",
                    encoding="utf-8")
    assert load_cartan_file(path).tolist() == [[2, -1], [-3, 2]]


@pytest.mark.parametrize("body, hint", [
    ("2\n2 -1\n", "expected 2 matrix rows"),
    ("2 2\n2 -1\n-1 2\n", "rank alone"),
    ("2\n2 -1\n-1 2 0\n", "entries per row"),
    ("2\n2 x\n-1 2\n", "expected integers"),
    ("# nothing here\n", "no data lines"),
])
def test_load_cartan_file_errors(tmp_path, body, hint):
    path = tmp_path / "bad.txt"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(UnsupportedRootSystem, match=hint):
        load_cartan_file(path)


def test_root_system_fields():
    rs = root_system("D4")
    assert rs.name == "D4"
    assert rs.family == "D"
    assert rs.rank == 4
    assert rs.order == 192
    assert rs.n_positive_roots == 12
    assert np.array_equal(rs.reflection(2), reflection_matrix("D4", 2))
    with pytest.raises(IndexError):
        rs.reflection(0)


def test_root_system_arrays_frozen():
    rs = root_system("B3")
    with pytest.raises(ValueError):
        rs.cartan[0, 0] = 5
    with pytest.raises(ValueError):
        rs.reflections[0, 0, 0] = 5


def test_root_system_from_cartan():
    rs = root_system_from_cartan([[2, -1], [-3, 2]], name="mystery")
    assert rs.name == "mystery"
    assert rs.family is None
    assert rs.rank == 2
    assert rs.order is None
    assert rs.n_positive_roots is None
    assert np.array_equal(rs.cartan, cartan_matrix("G2"))
