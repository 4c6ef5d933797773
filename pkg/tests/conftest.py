import os
import subprocess
import sys

import pytest

from fusionrank import DualGraph, FusionData, GraphVertex, builtin_g2_level1


@pytest.fixture(scope="session")
def g2():
    return builtin_g2_level1()


def make_zn_ring(n, names=None):
    """Cyclic group ring on n labels: rank 1 exactly when the triple sums to zero.

    These are always valid fusion rings, which makes them useful as
    randomized round-trip and invariance material.
    """
    if names is None:
        names = tuple(f"z{i}" for i in range(n))
    dual = {names[i]: names[(-i) % n] for i in range(n)}
    table = {}
    for i in range(n):
        for j in range(n):
            k = (-(i + j)) % n
            table[(names[i], names[j], names[k])] = 1
    return FusionData(tuple(names), names[0], dual, table)


def make_nonassociative_ring():
    """Three labels with a product table that breaks associativity.

    Two-label tables with a valid vacuum rule are associative no matter
    what n3(mu, mu, mu) is, so a genuine associativity failure needs a
    third label.
    """
    return FusionData(
        labels=("0", "a", "b"),
        vacuum="0",
        dual={"0": "0", "a": "b", "b": "a"},
        table={("0", "0", "0"): 1, ("0", "a", "b"): 1, ("a", "a", "a"): 1},
    )


def random_stable_graph(rng, labels=("0", "mu"), max_vertices=4, max_extra_edges=3,
                        max_genus=2):
    """A random connected stable dual graph, small enough to brute force."""
    count = rng.randint(1, max_vertices)
    genera = [rng.randint(0, max_genus) for _ in range(count)]
    edges = []
    for v in range(1, count):
        edges.append((rng.randrange(v), v))
    for _ in range(rng.randint(0, max_extra_edges)):
        edges.append((rng.randrange(count), rng.randrange(count)))
    legs = [[rng.choice(labels) for _ in range(rng.randint(0, 3))]
            for _ in range(count)]
    valence = [len(legs[v]) for v in range(count)]
    for u, v in edges:
        valence[u] += 1
        valence[v] += 1
    for v in range(count):
        while 2 * genera[v] - 2 + valence[v] <= 0:
            legs[v].append(rng.choice(labels))
            valence[v] += 1
    vertices = tuple(
        GraphVertex(genus=genera[v], legs=tuple(legs[v])) for v in range(count)
    )
    return DualGraph(vertices, tuple(edges))


@pytest.fixture
def cli():
    """Run the installed CLI in a subprocess and return the completed process."""

    def run(*argv, env_extra=None):
        env = os.environ.copy()
        env.pop("FUSION_RANK_JOBS", None)
        if env_extra:
            env.update(env_extra)
        return subprocess.run(
            [sys.executable, "-m", "fusionrank", *argv],
            capture_output=True,
            text=True,
            env=env,
        )

    return run
