"""Exception hierarchy and resource caps shared by every module."""

from dataclasses import dataclass


class ResiduaError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class InputError(ResiduaError, ValueError):
    """Malformed or inconsistent input (bad permutation, non-normal subgroup, ...)."""

    exit_code = 2


class CapabilityError(ResiduaError):
    """The requested operation needs data the formation does not carry."""

    exit_code = 3


class ResourceError(ResiduaError, RuntimeError):
    """A desk-scale cap would be exceeded."""

    exit_code = 4


class InternalError(ResiduaError, AssertionError):
    """A postcondition check failed; indicates a bug or a bad user-supplied function."""

    exit_code = 5


@dataclass
class Caps:
    max_degree: int = 1000
    # coset enumerations: centralizer sections, cores, intersections
    max_index: int = 10**5
    # oracle normal lattice
    max_lattice_order: int = 10**6
    max_lattice_members: int = 1000
    # oracle subgroup enumeration
    max_subgroup_order: int = 500
    max_module_dim: int = 200


caps = Caps()


def chain_bound(degree):
    """Most strict inclusions a subgroup chain in S_degree can have."""
    return max(1, 2 * degree - 3)


# number of chains checked and the longest seen; read by the acceptance suite
chain_stats = {"checked": 0, "longest_ratio": 0.0, "violations": 0}


def check_chain(steps, degree, what="subgroup chain"):
    """Fail loudly when a chain with `steps` strict inclusions breaks the 2n-3 bound."""
    chain_stats["checked"] += 1
    bound = chain_bound(degree)
    chain_stats["longest_ratio"] = max(chain_stats["longest_ratio"], steps / bound)
    if steps > bound:
        chain_stats["violations"] += 1
        raise InternalError(
            f"{what} has {steps} strict steps, exceeding 2n-3 = {bound} for n = {degree}"
        )
