"""Smoke test for the pydeltakit extension.

Build and install first, e.g. `pip install --no-build-isolation -e crates/python`
or `maturin develop -m crates/python/Cargo.toml`, then run this file.
"""

import math
from fractions import Fraction

import pydeltakit as dk


def main():
    maps = dk.enumerate_maps(2, 2)
    assert len(maps) == dk.count_maps(2, 2) == 10
    assert [str(f) for f in dk.enumerate_maps(1, 1)] == ["0,0", "0,1", "1,1"]
    assert dk.count_maps(40, 40) == math.comb(81, 41)

    a = dk.MonotoneMap("0,2", target=2)
    b = dk.MonotoneMap([1, 2], target=2)
    h = dk.hadamard(a, b)
    assert str(h) == "0,4" and h.target == 4 and h.values == [0, 4]
    assert dk.factor_hadamard(dk.MonotoneMap("3,3", target=4), 2, 2) == []
    assert (a, b) in dk.factor_hadamard(h, 2, 2)

    big = 10**30
    wide = dk.hadamard(dk.MonotoneMap([1, big], target=big), dk.MonotoneMap([big, big], target=big))
    assert wide.target == big * big

    f, g = dk.eta(dk.identity(1), dk.MonotoneMap("1,2"), dk.MonotoneMap("1,1", target=1))
    assert (str(f), str(g)) == ("1,1", "2,2")
    assert str(dk.delta(dk.identity(1), dk.MonotoneMap("1,2"), dk.MonotoneMap("1,1", target=1))) == "2,2"

    half = Fraction(1, 2)
    assert dk.homotopy_point(dk.identity(1), dk.MonotoneMap("0,1"), "1/2,1/2") == [half, half]
    assert dk.standard_contraction([half, half], half) == [Fraction(3, 4), Fraction(1, 4)]

    probe = dk.compare_on_grid(1, 1, dk.identity(1), 2)
    assert probe["max_deviation"] == Fraction(1, 4)
    u, t, affine, contraction = probe["witness"]
    assert (u, t) == ([half, half], half)
    assert affine == [half, half] and contraction == [Fraction(3, 4), Fraction(1, 4)]
    assert probe["vertex_agreement"] and probe["slice_agreement"] and probe["note"]

    try:
        dk.MonotoneMap("1,0")
    except ValueError:
        pass
    else:
        raise AssertionError("non-monotone table accepted")

    reports = dk.verify(suite="hadamard", max_dim=2)
    assert reports and all(r["failed"] == 0 and r["instances"] > 0 for r in reports)

    print("pydeltakit smoke test passed")


if __name__ == "__main__":
    main()
