"""Shared bundle corpora for the discriminant and acceptance tests."""

from itertools import combinations_with_replacement

from chernkit.bundle_calculus import direct_sum, twist_by_line
from chernkit.catalog import line_bundle, projective_space, tangent


def split(X, degrees):
    return direct_sum(*(line_bundle(X, [d]) for d in degrees))


def split_corpus(max_n=4, max_degree=3):
    """(n, degrees, E) for every rank 1..n and degrees in 1..max_degree."""
    out = []
    for n in range(1, max_n + 1):
        X = projective_space(n)
        for e in range(1, n + 1):
            for degrees in combinations_with_replacement(range(1, max_degree + 1), e):
                if e >= 3 and sum(degrees) > 2 * e + 1:
                    continue
                out.append((n, degrees, split(X, degrees)))
    return out


def tangent_twists(max_n=4, max_d=3):
    out = []
    for n in range(1, max_n + 1):
        X = projective_space(n)
        for d in range(max_d + 1):
            out.append((n, d, twist_by_line(tangent(X), d * X.gen("h"))))
    return out


def has_closed_form(n, e):
    return e in (1, n - 1, n)
