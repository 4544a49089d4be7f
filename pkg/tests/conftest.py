"""Shared fixtures: the q = 19 instances are expensive enough to build
once per session and reuse across test modules."""

import pytest

from cayleycodes import build_generators, choose_ideal
from cayleycodes.cyclic import CyclicCode
from cayleycodes.gf2poly import mul
from cayleycodes.graphs import graph_from_generators, symmetry_edge_permutations
from cayleycodes.tanner import build_parity_check


@pytest.fixture(scope="session")
def q19_psl_gens():
    return build_generators(choose_ideal(19, 1, "psl"))


@pytest.fixture(scope="session")
def q19_psl_graph(q19_psl_gens):
    return graph_from_generators(q19_psl_gens)


@pytest.fixture(scope="session")
def q19_pgl_gens():
    return build_generators(choose_ideal(19, 1, "pgl"))


@pytest.fixture(scope="session")
def q19_pgl_graph(q19_pgl_gens):
    return graph_from_generators(q19_pgl_gens)


@pytest.fixture(scope="session")
def inner20():
    # [20, 12] cyclic code: h = (x + 1)^4 (x^4 + x^3 + x^2 + x + 1)
    return CyclicCode(20, mul(0b10001, 0b11111))


@pytest.fixture(scope="session")
def q19_instance(q19_psl_graph, inner20):
    inst = build_parity_check(q19_psl_graph, inner20)
    inst.echelon  # force the expensive elimination once
    return inst


@pytest.fixture(scope="session")
def q19_perms(q19_psl_graph, q19_psl_gens):
    return symmetry_edge_permutations(q19_psl_graph, q19_psl_gens)
