"""Certified solver for quaternionic semigroup unit equations.

Thin dict-level wrappers over the compiled core; every value that must stay
exact travels as a decimal or rational string.
"""

import json as _json

from ._quatunit import (
    bound_json,
    dynamics_json,
    enumerate_json,
    hyperplane_test_json,
    locus_json,
    matrix_demo_json,
    oracle_json,
    reduce_json,
    solve_json,
)

__all__ = [
    "solve",
    "reduce",
    "oracle",
    "locus",
    "bound",
    "enumerate_elements",
    "dynamics",
    "matrix_demo",
    "hyperplane_test",
]


def solve(instance, oracle_len=12, precision_bits=128, element_cap=10_000_000, threads=1):
    return _json.loads(
        solve_json(_json.dumps(instance), oracle_len, precision_bits, element_cap, threads)
    )


def reduce(instance, oracle_len=12, precision_bits=128, element_cap=10_000_000, threads=1):
    return _json.loads(
        reduce_json(_json.dumps(instance), oracle_len, precision_bits, element_cap, threads)
    )


def oracle(instance, oracle_len=12, precision_bits=128, element_cap=10_000_000, threads=1):
    return _json.loads(
        oracle_json(_json.dumps(instance), oracle_len, precision_bits, element_cap, threads)
    )


def locus(a, a_prime, gamma, oracle_len=12, precision_bits=128, element_cap=10_000_000, threads=1):
    return _json.loads(
        locus_json(
            _json.dumps(a),
            _json.dumps(a_prime),
            _json.dumps(gamma),
            oracle_len,
            precision_bits,
            element_cap,
            threads,
        )
    )


def bound(instance, precision_bits=128):
    return _json.loads(bound_json(_json.dumps(instance), precision_bits))


def enumerate_elements(semigroup, max_len=6, norm_bound="", element_cap=10_000_000):
    return _json.loads(
        enumerate_json(_json.dumps(semigroup), max_len, norm_bound, element_cap)
    )


def dynamics(spec, solve=False, oracle_len=12, precision_bits=128, element_cap=10_000_000, threads=1):
    return _json.loads(
        dynamics_json(_json.dumps(spec), solve, oracle_len, precision_bits, element_cap, threads)
    )


def matrix_demo(n_max=100):
    return _json.loads(matrix_demo_json(n_max))


def hyperplane_test(a, a_prime, f):
    return hyperplane_test_json(_json.dumps(a), _json.dumps(a_prime), _json.dumps(f))
