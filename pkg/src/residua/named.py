"""Small named permutation groups used by the corpus, the demos and the tests."""

from .groups import PermGroup
from .perm import Permutation


def _g(degree, *cycles, name=None):
    return PermGroup(degree, [Permutation.from_cycles(c, degree) for c in cycles], name=name)


def _cycle(points):
    return "(" + " ".join(map(str, points)) + ")"


def cyclic(n):
    if n == 1:
        return PermGroup(1, [], name="C1")
    return _g(n, _cycle(range(1, n + 1)), name=f"C{n}")


def symmetric(n):
    if n < 2:
        return PermGroup(max(n, 1), [], name=f"S{n}")
    if n == 2:
        return _g(2, "(1 2)", name="S2")
    return _g(n, "(1 2)", _cycle(range(1, n + 1)), name=f"S{n}")


def alternating(n):
    if n < 3:
        return PermGroup(max(n, 1), [], name=f"A{n}")
    gens = [_cycle((1, 2, 3))]
    if n > 3:
        # (1 2 3) with an (n-1)- or n-cycle of even parity
        gens.append(_cycle(range(2, n + 1)) if n % 2 == 0 else _cycle(range(1, n + 1)))
    return _g(n, *gens, name=f"A{n}")


def dihedral8():
    return _g(4, "(1 2 3 4)", "(1 3)", name="D8")


def klein4():
    return _g(4, "(1 2)(3 4)", "(1 3)(2 4)", name="V4")


def quaternion8():
    """Q8 in its regular representation."""
    return _g(8, "(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)", name="Q8")


def sl23():
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2 (Q8 extended by an element of order 3)."""
    return _g(8, "(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)", "(2 3 5)(6 7 8)", name="SL(2,3)")


def c2_x_a5():
    return _g(7, "(1 2 3)", "(3 4 5)", "(6 7)", name="C2xA5")


def s3_x_s3():
    return _g(6, "(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)", name="S3xS3")
