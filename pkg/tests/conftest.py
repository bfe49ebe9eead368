"""Shared fixtures: the randomized numerical corpus and the exhaustive
Kunz-point scan, computed once per session (the scan in a process pool).

Independent oracles used by the tests live here too, deliberately built
on different machinery than the library paths they check:

* box_min_repl: boxed product scan with a DP membership table, against
  the frontier-search min_repl;
* enumerate_factorizations_box: raw product enumeration over grading
  bounds, against the pruned factorization search;
* oracle_scan (library, DP lengths) against check_formula (B&B lengths).
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

import pytest

from sgfl.kunz import (
    is_m_atom_point,
    is_reduced_point,
    kunz_point,
    main_verdict,
    numerical_context,
    point_of_semigroup,
    semigroup_of_point,
    sq_leq,
)
from sgfl.minrepl import candidate_sets, min_repl
from sgfl.semigroups import minimal_generating_subset, new_semigroup
from sgfl.verdicts import check_formula

CORPUS_SEED = 20260808
CORPUS_SIZE = 200
KUNZ_MODULI = (2, 3, 4, 5, 6, 7)
KUNZ_COORD_CAP = 8


# -- independent membership + box oracles ----------------------------------

def membership_table(gens, upto):
    """Boolean DP table of N-combinations of gens, computed from scratch."""
    table = [False] * (upto + 1)
    table[0] = True
    for v in range(1, upto + 1):
        table[v] = any(v >= g and table[v - g] for g in gens)
    return table


def minimal_of(vectors):
    ordered = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept = []
    for v in ordered:
        if not any(all(k <= c for k, c in zip(keep, v)) for keep in kept):
            kept.append(v)
    return sorted(kept)


def box_min_repl(S, m):
    """Brute-force minimal replaceable vectors via a boxed product scan.

    Coordinates are bounded by A_i = min{c : c*a_i - m in S} (the axis
    vector A_i*e_i is replaceable, so nothing minimal exceeds it); all
    membership goes through the DP table, everything above the Frobenius
    number being a member.
    """
    gens = S.atoms
    others = [g for g in gens if g != m]
    frob = S.frobenius()
    table = membership_table(gens, max(frob, 0) + 1)

    def member(v):
        return v >= 0 and (v > frob or table[v])

    bounds = []
    for a in others:
        c = 1
        while not member(a * c - m):
            c += 1
        bounds.append(c)
    hits = [
        vec
        for vec in itertools.product(*(range(b + 1) for b in bounds))
        if member(sum(c * a for c, a in zip(vec, others)) - m)
    ]
    return [tuple(v) for v in minimal_of(hits)]


def enumerate_factorizations_box(S, v):
    """Exhaustive factorization enumeration over per-coordinate bounds."""
    vec = S.vector(v)
    wv = S.grading_value(vec)
    gens = S.generators
    bounds = [wv // S.grading_value(g) for g in gens]
    out = []
    for counts in itertools.product(*(range(b + 1) for b in bounds)):
        total = tuple(
            sum(c * g[j] for c, g in zip(counts, gens)) for j in range(S.dim)
        )
        if total == vec:
            out.append(counts)
    return sorted(out)


# -- the randomized numerical corpus ---------------------------------------

def build_corpus(seed=CORPUS_SEED, size=CORPUS_SIZE):
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < size:
        k = rng.randint(2, 5)
        n1 = rng.randint(2, 12)
        rest = rng.sample(range(n1 + 1, 41), k - 1)
        gens = sorted([n1] + rest)
        g = 0
        for n in gens:
            g = gcd(g, n)
        if g != 1:
            continue
        reduced = sorted(
            v[0] for v in minimal_generating_subset([(n,) for n in gens], 1)
        )
        key = tuple(reduced)
        if len(reduced) < 2 or key in seen:
            continue
        seen.add(key)
        out.append(new_semigroup(reduced))
    return out


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def minrepl_box_results(corpus):
    """Frontier-search minimal vectors next to the box oracle, per atom."""
    results = []
    for S in corpus:
        for m in S.atoms:
            results.append(
                (
                    S,
                    m,
                    tuple(min_repl(S, m).minimal_vectors),
                    tuple(box_min_repl(S, m)),
                )
            )
    return results


@pytest.fixture(scope="session")
def corpus_verdict_results(corpus):
    """check_formula vs oracle_scan at the candidate atoms, both formulas."""
    from sgfl.verdicts import oracle_scan

    results = []
    for S in corpus:
        for formula, m in (("longest", S.atoms[0]), ("shortest", S.atoms[-1])):
            results.append(
                (
                    S,
                    formula,
                    m,
                    check_formula(S, m, formula).holds,
                    oracle_scan(S, m, formula).holds,
                )
            )
    return results


# -- the exhaustive Kunz scan -----------------------------------------------

def enumerate_kunz_points(m, cap=KUNZ_COORD_CAP):
    """All integer points with x_0 = 0 and coordinates in [0, cap]."""
    ctx = numerical_context(m)
    d = ctx.d_table
    out = []
    x = [0] * m

    def prefix_ok(j):
        for a in range(j + 1):
            for b in range(a, j + 1):
                s = (a + b) % m
                if max(a, b, s) != j:
                    continue
                if x[a] + x[b] + d[a][b] < x[s]:
                    return False
        return True

    def rec(j):
        if j == m:
            out.append(tuple(x))
            return
        for v in range(cap + 1):
            x[j] = v
            if prefix_ok(j):
                rec(j + 1)
        x[j] = 0

    rec(1)
    return out


@dataclass
class ScanRecord:
    m: int
    coords: tuple
    reduced: bool
    roundtrip: bool
    m_atom: bool
    face_key: tuple
    f_bijection: bool | None = None
    g_bijection: bool | None = None
    sq_matches_divides: bool | None = None
    agree_longest: bool | None = None
    agree_shortest: bool | None = None
    iterated_inequality: bool = True
    d_identity: bool = True


_ctx_cache = {}


def _ctx(m):
    ctx = _ctx_cache.get(m)
    if ctx is None:
        ctx = numerical_context(m)
        _ctx_cache[m] = ctx
    return ctx


def scan_one_point(args):
    m, coords = args
    ctx = _ctx(m)
    point = kunz_point(ctx, coords)
    S = semigroup_of_point(ctx, point)
    record = ScanRecord(
        m=m,
        coords=coords,
        reduced=is_reduced_point(point),
        roundtrip=point_of_semigroup(ctx, S).x == coords,
        m_atom=is_m_atom_point(point),
        face_key=(m, tuple(sorted(point.equality_set))),
    )

    rng = random.Random(repr((m, coords)))
    for _ in range(3):
        c = [rng.randint(0, 3) for _ in range(m)]
        beta = sum(i * ci for i, ci in enumerate(c)) % m
        lhs = ctx.d_of(c, range(m)) + sum(
            ci * xi for ci, xi in zip(c, point.x)
        )
        if lhs < point.x[beta]:
            record.iterated_inequality = False
        c2 = [rng.randint(0, 3) for _ in range(m)]
        beta2 = sum(i * ci for i, ci in enumerate(c2)) % m
        combined = [a + b for a, b in zip(c, c2)]
        if ctx.d_of(c, range(m)) + ctx.d_of(c2, range(m)) + ctx.d(
            beta, beta2
        ) != ctx.d_of(combined, range(m)):
            record.d_identity = False

    if not record.m_atom:
        return record

    report = candidate_sets(S, m, min_repl(S, m))

    semigroup_atoms = set(S.atoms) - {m}
    image = {a: point.x[a] * m + a for a in point.atoms}
    record.f_bijection = (
        len(set(image.values())) == len(image)
        and set(image.values()) == semigroup_atoms
    )

    if record.f_bijection:
        position = {
            atom: i for i, atom in enumerate(report.atom_index)
        }
        reindexed = set()
        for f in point.min_inf:
            vec = [0] * len(report.atom_index)
            for alpha, count in zip(point.atoms, f.c):
                vec[position[image[alpha]]] = count
            reindexed.add(tuple(vec))
        record.g_bijection = reindexed == set(report.minimal_vectors)
    else:  # pragma: no cover - f is a bijection on every scanned point
        record.g_bijection = False

    ok = True
    items = point.min_inf
    for f in items:
        for g in items:
            left = sq_leq(point, f.c, g.c)
            ev_f = sum(ci * image[a] for ci, a in zip(f.c, point.atoms))
            ev_g = sum(ci * image[a] for ci, a in zip(g.c, point.atoms))
            if left != S.divides(ev_f, ev_g):
                ok = False
    record.sq_matches_divides = ok

    record.agree_longest = (
        main_verdict(point, "longest").holds
        == check_formula(S, m, "longest", report=report).holds
    )
    record.agree_shortest = (
        main_verdict(point, "shortest").holds
        == check_formula(S, m, "shortest", report=report).holds
    )
    return record


@pytest.fixture(scope="session")
def kunz_scan():
    """Every valid point for m in 3..7 with coordinates <= 8, fully checked."""
    jobs = []
    for m in KUNZ_MODULI:
        jobs.extend((m, coords) for coords in enumerate_kunz_points(m))
    workers = min(os.cpu_count() or 1, 4)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(scan_one_point, jobs, chunksize=256))
    else:  # pragma: no cover
        records = [scan_one_point(job) for job in jobs]
    return records
