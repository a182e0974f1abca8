"""Smoke test for the Python bindings.

Uses an installed `cubic_hilbert` if there is one, otherwise loads the
library produced by `cargo build -p cubic-hilbert-py [--release]`.
"""

import importlib.util
import pathlib
import shutil
import sys
import tempfile


def load():
    try:
        import cubic_hilbert

        return cubic_hilbert
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        lib = root / "target" / profile / "libcubic_hilbert_py.so"
        if lib.exists():
            break
    else:
        sys.exit("build first: cargo build -p cubic-hilbert-py")
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "cubic_hilbert.so"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("cubic_hilbert", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    ch = load()

    r = ch.classify([12, 4, 4, 4, 4, 4, 2])
    assert r["verdict"] == "non_reduced_component", r
    assert (r["dim_w"], r["h0_normal"], r["h1_ideal_3"]) == (56, 57, 1)

    cls, word = ch.standardize(ch.DivisorClass(1, 1, 1, 0, 0, 0, 0))
    assert cls == ch.DivisorClass.exceptional(6), cls
    assert ch.apply_word([1, 1, 1, 0, 0, 0, 0], word) == cls

    assert ch.cohomology(ch.DivisorClass.hyperplane()) == (4, 0, 0)
    assert ch.classify_quadric(4, 3)["dim_w"] == 28
    assert len(ch.enumerate(14, 24)) == 2

    try:
        ch.classify([3, 0, 0, 0, 0, 0, 0])
    except ch.DomainError:
        pass
    else:
        raise AssertionError("degree 9 accepted")

    checks = ch.selftest(1, 14)
    failed = [c["name"] for c in checks if c["failures"]]
    assert not failed, failed

    print("smoke test passed")


if __name__ == "__main__":
    main()
