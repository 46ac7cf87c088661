"""Smoke tests for the Python bindings."""

import heckenil as hn


def test_euler_product_pentagonal_signs():
    e = hn.euler_product(1, 5, 13)
    assert e.coeffs() == [1, 4, 4, 0, 0, 1, 0, 1, 0, 0, 0, 0, 4]


def test_delta_tau_values():
    d = hn.named_form("delta", 5, 4)
    assert d.coeffs() == [0, 1, 1, 2]  # tau(2) = -24, tau(3) = 252 mod 5
    assert d.weight == 12


def test_kronecker():
    assert hn.kronecker(-4, 3) == -1
    assert hn.kronecker(12, 5) == -1


def test_hecke_vanishing():
    d = hn.named_form("delta", 2, 500)
    assert hn.hecke_t(d, 5).is_zero()


def test_nilpotency_index():
    rep = hn.nilpotency_index(1, 5, 19)
    assert rep["index"] == 1
    rep = hn.nilpotency_index(10, 3, 7)
    assert rep["index"] <= 1 + 10 // 3
    assert rep["trajectory"][-1] == "-inf"


def test_degree_lower_table_values():
    assert hn.degree_lower(13, 5, 19) == 10
    assert hn.degree_lower(4, 5, 19) == 2
    assert hn.degree_lower(1, 5, 19) is None


def test_s_index():
    calc = hn.SIndex("s19", 60)
    assert calc.s_index(6) == 3  # c_1 + 1
    assert calc.s_index(2) == 1


def test_to_poly_roundtrip():
    d2 = hn.power(hn.named_form("delta", 5, 40), 2)
    poly = hn.to_poly(d2, "delta", 10)
    assert poly.degree == 2
    assert poly.coeffs[2] == 1


def test_tcore_triangular():
    a2 = hn.tcore_series(2, 5, 16)
    tri = {j * (j + 1) // 2 for j in range(6)}
    assert all(a2.at(n) == (1 if n in tri else 0) for n in range(16))
    assert hn.brute_force_tcore(2, 3) == 1


def test_ns_formula():
    assert hn.ns_formula(1) == 1
    assert hn.ns_formula(3) == 2


def test_run_suite():
    out = hn.run_suite("crossover")
    assert out["pass"] is True
