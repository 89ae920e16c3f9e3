#!/usr/bin/env python3
"""Smoke test for the ribbonkit_py extension module.

Builds the cdylib with cargo, copies it into a temporary directory under the
importable name, and checks a handful of known values end to end.

Usage: python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
SIX_ONE_PD = "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)"


def build_extension() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "ribbonkit-py"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "debug" / "libribbonkit_py.so"
    if not lib.exists():  # e.g. macOS
        lib = ROOT / "target" / "debug" / "libribbonkit_py.dylib"
    if not lib.exists():
        raise FileNotFoundError("built extension library not found under target/debug")
    return lib


def main() -> None:
    lib = build_extension()
    with tempfile.TemporaryDirectory() as tmp:
        shutil.copy(lib, Path(tmp) / "ribbonkit_py.so")
        sys.path.insert(0, tmp)
        import ribbonkit_py as rk

        code = rk.RibbonCode("vertices 2\nedge 1 2 : 2 1")
        assert code.vertices == 2 and code.edges == 1 and code.markings == 2
        assert code.alexander() == "2,-5"
        assert code.determinant() == 9
        assert code.is_irreducible()
        assert code.mirror().alexander() == "2,-5"

        reducible = rk.RibbonCode("vertices 3\nedge 1 2 : 2 1\nedge 2 3 :")
        reduced = reducible.reduce()
        assert reduced.is_irreducible()
        assert reduced.alexander() == reducible.alexander() == "2,-5"
        assert rk.RibbonCode(reduced.serialize()).alexander() == "2,-5"

        assert rk.ribbon_set(2) == ["1", "2,-5", "1,-2,3"]
        witnesses = rk.enumerate_witnesses(2)
        assert set(witnesses) == {"1", "2,-5", "1,-2,3"}
        for alex, text in witnesses.items():
            assert rk.RibbonCode(text).alexander() == alex

        assert rk.lower_bound("1,0,-3")[0] == 3
        value, rule, _detail = rk.lower_bound("1,-1,-1,3")
        assert (value, rule) == (3, "ribbon set")
        value, rule, _detail = rk.lower_bound("1,-1,-1,3", set_rmax=0)
        assert (value, rule) == (3, "factorization")

        assert rk.bracket(TREFOIL_PD) == "-1*A^-5 - 1*A^3 + 1*A^7"
        assert rk.jones_det_sq(TREFOIL_PD) == "9"
        assert rk.jones_det_sq(SIX_ONE_PD) == "81"

        assert rk.torus_gauss(2, 3) == "O1 U2 O3 U1 O2 U3"
        assert rk.underpass_upper_bound(rk.torus_gauss(2, 3)) == 2
        assert rk.underpass_upper_bound(rk.torus_gauss(3, 4)) == 6

        for bad in ["vertices 2\nedge 1 3 : 1", ""]:
            try:
                rk.RibbonCode(bad)
            except ValueError:
                pass
            else:
                raise AssertionError(f"RibbonCode({bad!r}) should have raised")

    print("smoke test passed")


if __name__ == "__main__":
    main()
