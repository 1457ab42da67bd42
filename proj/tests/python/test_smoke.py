import math

import _arcticlib as al


def test_counts():
    asm = al.named_point("asm")
    assert round(al.partition(asm, 4)) == 42
    assert al.enumerate_counts("6v", 4)["total"] == 42
    assert al.enumerate_counts("6vp", 3)["total"] == 26
    assert al.enumerate_counts("20v", 3)["total"] == 60
    assert al.aztec_triangle(4)["total"] == 3328
    assert al.product_formula_20v(5) == 678912


def test_refined_counts():
    e = al.enumerate_counts("6v", 3)
    assert e["by_exit"] == [2, 3, 2]
    dt = al.aztec_triangle(3)
    assert dt["by_exit"] == [37, 19, 4]


def test_one_point_and_paths():
    asm = al.named_point("asm")
    assert al.one_point(asm, 3, 0.0) == 1.0
    h = al.one_point(asm, 3, -0.3)
    z = al.partition(asm, 3)
    zr = al.refined_partition(asm, 3, -0.3)
    assert abs(zr - z * h) < 1e-12 * abs(zr)
    p = al.named_point("uniform")
    y1 = al.path_count(p, 3, 4)
    y2 = al.path_count_dp(p, 3, 4)
    assert abs(y1 - y2) < 1e-9 * abs(y1)
    assert abs(y1 - round(y1)) < 1e-9


def test_free_energy():
    up = al.named_point("uniform")
    f = al.free_energy(up)
    ref = math.log(3 ** 2.25 / 2 ** 4.5)
    assert abs(f - ref) < 1e-12


def test_half_circle_branch():
    ff = al.named_point("free-fermion")
    for pt in al.branch(ff, "ne", 17):
        r = (pt["x"] + 1) ** 2 + (pt["y"] - 1) ** 2 - 1
        assert abs(r) < 1e-10
        assert abs(pt["y"] + pt["A"] * pt["x"] - pt["B"]) < 1e-10


def test_saddle_and_exponent():
    dt = al.params("dt", math.pi / 8, math.pi / 8, -math.pi / 2, nu=math.sqrt(2))
    sd = al.saddle(dt, -math.pi / 8)
    assert abs(sd["kappa"] / sd["lambda"] - 1.0) < 1e-10
    vs = al.named_point("vsasm")
    assert abs(al.one_point_exponent(vs, 1e-20)) < 1e-12


def test_verify_counts_suite():
    rep = al.verify("counts")
    assert rep["ok"]
    assert all(c["pass"] for c in rep["checks"])


def test_domain_errors():
    try:
        al.params("6v", 0.4, 0.1, 0.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected a domain error")
