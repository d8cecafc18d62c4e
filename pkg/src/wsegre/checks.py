"""Named verification checks and the suites behind the ``verify`` command.

Each check returns a ``VerificationReport``.  Suites are deterministic:
randomized checks draw from a fixed seed, and checks run in registration
order.  ``fast=True`` shrinks ranges so the whole run stays well under a
minute; the full run widens them.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Sequence

from . import bounds, chow, jets, oracles
from .bounds import GAMMA, PI
from .combinatorics import harmonic, sum_nondecreasing, sum_repeated
from .oracles import VerificationReport

_SEED = 20230704


def _report(name: str, passed: bool, lhs, rhs, detail: str = "") -> VerificationReport:
    return VerificationReport(name, passed, str(lhs), str(rhs), detail)


def _random_class(rng: random.Random, dim: int, unit_constant=False) -> chow.TotalClass:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(dim + 1)]
    if unit_constant:
        coeffs[0] = Fraction(1)
    elif coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return chow.TotalClass(dim, coeffs)


# ---------------------------------------------------------------- identities


def check_ring_axioms(trials: int = 40) -> VerificationReport:
    rng = random.Random(_SEED)
    for _ in range(trials):
        dim = rng.randint(1, 6)
        x = _random_class(rng, dim)
        y = _random_class(rng, dim)
        z = _random_class(rng, dim)
        if x * y != y * x:
            return _report("class ring axioms", False, x * y, y * x, "commutativity")
        if (x * y) * z != x * (y * z):
            return _report("class ring axioms", False, (x * y) * z, x * (y * z), "associativity")
        unit = chow.TotalClass.unit(dim)
        if x.inverse() * x != unit or x * x.inverse() != unit:
            return _report("class ring axioms", False, x * x.inverse(), unit, "two-sided inverse")
    return _report(
        "class ring axioms", True, f"{trials} random triples", "commutative, associative, invertible"
    )


def check_weighted_single_coefficients(trials: int = 40) -> VerificationReport:
    rng = random.Random(_SEED + 1)
    for _ in range(trials):
        dim = rng.randint(1, 5)
        summand = chow.WeightedSummand(
            _random_class(rng, dim, unit_constant=True),
            rank=rng.randint(1, 4),
            weight=rng.randint(1, 5),
        )
        got = chow.segre_of_weighted_summand(summand)
        for j, c in enumerate(summand.segre.coeffs):
            expected = c / Fraction(summand.weight) ** (summand.rank - 1 + j)
            if got.coeffs[j] != expected:
                return _report(
                    "weighted summand coefficients", False, got.coeffs[j], expected,
                    f"degree {j}, weight {summand.weight}, rank {summand.rank}",
                )
    return _report(
        "weighted summand coefficients", True,
        f"{trials} random summands", "coeff j = s_j / a^(rank-1+j)",
    )


def check_whitney_weight_one(trials: int = 30) -> VerificationReport:
    rng = random.Random(_SEED + 2)
    for _ in range(trials):
        dim = rng.randint(1, 5)
        classes = [_random_class(rng, dim, unit_constant=True) for _ in range(rng.randint(1, 4))]
        summands = [chow.WeightedSummand(s, rng.randint(1, 3), 1) for s in classes]
        plain = chow.TotalClass.unit(dim)
        for s in classes:
            plain = plain * s
        if chow.segre_of_weighted_sum(summands) != plain:
            return _report(
                "weight-one Whitney product", False,
                chow.segre_of_weighted_sum(summands), plain, f"dim {dim}",
            )
    return _report(
        "weight-one Whitney product", True,
        f"{trials} random sums", "prefactor 1, plain product",
    )


def check_volume_identity(n_max: int = 5, k_max: int = 6) -> VerificationReport:
    return oracles.cross_check_volume_identity(n_max, k_max)


def check_volume_decomposition(trials: int = 25) -> VerificationReport:
    rng = random.Random(_SEED + 3)
    for _ in range(trials):
        g = bounds.GeometryInput(
            n=rng.randint(2, 5),
            kd_n=Fraction(rng.randint(0, 80), rng.randint(1, 7)),
            neg_dn=Fraction(-rng.randint(0, 30), rng.randint(1, 5)),
            components=rng.randint(1, 3),
        )
        k = rng.randint(1, 6)
        via_parts = bounds.logarithmic_volume(g.n, k, g.kd_n) + g.neg_dn * jets.boundary_coeff(g.n, k)
        if bounds.volume_lower_bound(g, k) != via_parts:
            return _report(
                "volume bound decomposition", False,
                bounds.volume_lower_bound(g, k), via_parts, f"{g}, k={k}",
            )
    return _report(
        "volume bound decomposition", True,
        f"{trials} random geometries", "interior + boundary parts, bit-exact",
    )


def check_harmonic_recurrence(trials: int = 50) -> VerificationReport:
    rng = random.Random(_SEED + 4)
    for _ in range(trials):
        k = rng.randint(2, 400)
        if harmonic(k) - harmonic(k - 1) != Fraction(1, k):
            return _report("harmonic recurrence", False, harmonic(k) - harmonic(k - 1), Fraction(1, k), f"k={k}")
    return _report("harmonic recurrence", True, f"{trials} random k", "H_k - H_(k-1) = 1/k")


def check_boundary_small_cases() -> VerificationReport:
    cases = []
    for n, c, beta in ((2, 1, Fraction(1)), (3, 2, Fraction(7, 3)), (4, 3, Fraction(5))):
        b = jets.BoundaryData(n, beta, c)
        for k in (1, 2, 3):
            cases.append((f"order {k}, degree 0", jets.boundary_jet_sections(k, 0, b), Fraction(0)))
        cases.append(("order 1, degree 1", jets.boundary_jet_sections(1, 1, b), Fraction(c)))
    b2 = jets.BoundaryData(2, Fraction(11, 4), 3)
    cases.append(
        ("order 1, degree 2, n=2", jets.boundary_jet_sections(1, 2, b2), 2 * 3 + Fraction(11, 4))
    )
    for label, got, expected in cases:
        if got != expected:
            return _report("boundary sections, small cases", False, got, expected, label)
    return _report(
        "boundary sections, small cases", True, f"{len(cases)} closed-form cases", "exact match"
    )


# ------------------------------------------------------------------- oracles


def check_sum_oracles(limit: int = 4) -> VerificationReport:
    for n in range(1, limit + 1):
        for k in range(1, limit + 1):
            if sum_repeated(n, k) != oracles.sum_repeated_bruteforce(n, k):
                return _report(
                    "reciprocal sums vs enumeration", False,
                    sum_repeated(n, k), oracles.sum_repeated_bruteforce(n, k),
                    f"repeated alphabet, n={n}, k={k}",
                )
            if sum_nondecreasing(n, k) != oracles.sum_nondecreasing_bruteforce(n, k):
                return _report(
                    "reciprocal sums vs enumeration", False,
                    sum_nondecreasing(n, k), oracles.sum_nondecreasing_bruteforce(n, k),
                    f"non-decreasing tuples, n={n}, k={k}",
                )
    return _report(
        "reciprocal sums vs enumeration", True,
        f"all n, k <= {limit}", "generating functions equal brute force",
    )


def check_jet_rank_partitions(m_max: int = 30, k_max: int = 6) -> VerificationReport:
    for k in range(1, k_max + 1):
        for m in range(m_max + 1):
            if jets.jet_rank(1, k, m) != oracles.count_partitions_max_part(m, k):
                return _report(
                    "curve jet ranks vs partition counts", False,
                    jets.jet_rank(1, k, m), oracles.count_partitions_max_part(m, k),
                    f"k={k}, m={m}",
                )
    return _report(
        "curve jet ranks vs partition counts", True,
        f"m <= {m_max}, k <= {k_max}", "partitions with bounded parts",
    )


def check_rank_telescoping(l_max: int = 20) -> VerificationReport:
    for n in range(2, 9):
        for l in range(l_max + 1):
            lhs = sum(math.comb(j + n - 2, n - 2) for j in range(l + 1))
            if lhs != math.comb(l + n - 1, n - 1):
                return _report(
                    "symmetric power rank telescoping", False,
                    lhs, math.comb(l + n - 1, n - 1), f"n={n}, l={l}",
                )
    return _report(
        "symmetric power rank telescoping", True,
        f"l <= {l_max}, n <= 8", "filtration preserves ranks",
    )


def check_monomial_quasipolynomial() -> VerificationReport:
    for weights in ((1, 2), (2, 2), (1, 2, 3), (2, 4, 6), (3, 5)):
        order = len(weights)
        stride = math.lcm(*weights)
        for m0 in range(2 * stride):
            diff = sum(
                (-1) ** i * math.comb(order, i)
                * oracles.count_weighted_monomials(weights, m0 + (order - i) * stride)
                for i in range(order + 1)
            )
            if diff != 0:
                return _report(
                    "monomial counts are quasi-polynomial", False,
                    diff, 0, f"weights {weights}, offset {m0}",
                )
    return _report(
        "monomial counts are quasi-polynomial", True,
        "5 weight tuples", "lcm-stride finite differences vanish",
    )


def check_orbifold_growth(fast: bool = False) -> VerificationReport:
    steps = 500 if fast else 2000
    for weights in ((1, 1), (1, 2), (1, 2, 3), (2, 4, 6)):
        rep = oracles.check_orbifold_h0(weights, steps * math.lcm(*weights))
        if not rep.passed:
            return rep
    return _report(
        "orbifold monomial growth", True,
        "4 weight tuples", f"ratio within 2% at {steps} lcm-multiples",
    )


def check_partition_power_examples(r_max: int = 40) -> VerificationReport:
    spot = [
        (oracles.partition_power_sum(1, 2, 2), Fraction(3)),
        (oracles.partition_power_sum(2, 1, 6), Fraction(18)),
        (oracles.partition_power_sum(3, 2, 0), Fraction(0)),
    ]
    for got, expected in spot:
        if got != expected:
            return _report("partition power sums", False, got, expected, "spot value")
    for n, k in ((1, 2), (2, 3)):
        prev = oracles.partition_power_sum(n, k, 1)
        for r in range(2, r_max + 1):
            cur = oracles.partition_power_sum(n, k, r)
            if cur < prev:
                return _report(
                    "partition power sums", False, cur, prev, f"not monotone at r={r}"
                )
            prev = cur
    return _report(
        "partition power sums", True, "spot values and monotonicity", f"r <= {r_max}"
    )


def check_boundary_leading_coefficient(m: int = 300) -> VerificationReport:
    b = jets.BoundaryData(2, Fraction(1), 1)
    value = jets.boundary_jet_sections(2, m, b)
    ratio = value / Fraction(m**5, math.factorial(5))
    target = jets.boundary_coeff(2, 2) * b.neg_dn_abs
    rel = abs(float(ratio / target) - 1)
    return _report(
        "boundary sections leading coefficient",
        rel <= 0.10,
        f"normalized ratio {float(ratio):.6f} at m={m}",
        f"{target} = {float(target)}",
        f"relative gap {rel:.2%}",
    )


# -------------------------------------------------------------- inequalities


def check_interior_chain(
    n_max: int = 5, k_dense: int = 100, k_spots: Sequence[int] = ()
) -> VerificationReport:
    ks = list(range(1, k_dense + 1)) + list(k_spots)
    for k in ks:
        h = harmonic(k)
        logterm = math.log(k) + GAMMA
        for n in range(1, n_max + 1):
            lhs = math.factorial(n) * sum_repeated(n, k)
            mid = Fraction((n + 1) ** n) * h**n
            if lhs < mid:
                return _report(
                    "interior sum chain", False, lhs, mid, f"exact step, n={n}, k={k}"
                )
            if float(mid) < (n + 1) ** n * logterm**n * (1 - 1e-12):
                return _report(
                    "interior sum chain", False, float(mid),
                    (n + 1) ** n * logterm**n, f"float step, n={n}, k={k}",
                )
    return _report(
        "interior sum chain", True,
        f"n <= {n_max}, k in 1..{k_dense} plus {list(k_spots)}",
        "n! * sum >= ((n+1) H_k)^n >= ((n+1)(log k + gamma))^n",
    )


def _boundary_rhs(n: int, k: int) -> float:
    j = math.log(k) + GAMMA
    return (j + 0.5) ** n / math.factorial(n) + (PI * PI / 6) * (n - 2) * (j + 1.5) ** (n - 2)


def check_boundary_chain(
    k_dense: int = 100, k_spots: Sequence[int] = (), sweep_to: int = 10**4
) -> VerificationReport:
    for k in list(range(2, k_dense + 1)) + list(k_spots):
        for n in range(3, 9):
            if float(sum_nondecreasing(n, k)) > _boundary_rhs(n, k) * (1 + 1e-12):
                return _report(
                    "boundary sum upper bound", False,
                    float(sum_nondecreasing(n, k)), _boundary_rhs(n, k),
                    f"exact value, n={n}, k={k}",
                )
    # dense float sweep: incremental truncated product, one pass per n
    for n in range(3, 9):
        coeffs = [1.0] + [0.0] * n
        for k in range(1, sweep_to + 1):
            powers = [1.0 / k**i for i in range(n + 1)]
            new = [0.0] * (n + 1)
            for a in range(n + 1):
                ca = coeffs[a]
                if ca == 0.0:
                    continue
                for b in range(n + 1 - a):
                    new[a + b] += ca * powers[b]
            coeffs = new
            if k >= 2 and coeffs[n] > _boundary_rhs(n, k) * (1 + 1e-9):
                return _report(
                    "boundary sum upper bound", False,
                    coeffs[n], _boundary_rhs(n, k), f"float sweep, n={n}, k={k}",
                )
    return _report(
        "boundary sum upper bound", True,
        f"exact on k <= {k_dense} plus {list(k_spots)}; float sweep to k = {sweep_to}",
        "sum <= (j+1/2)^n/n! + (pi^2/6)(n-2)(j+3/2)^(n-2)",
    )


def check_harmonic_bracketing(k_max: int = 10**6) -> VerificationReport:
    total = 0.0
    comp = 0.0
    lo = math.inf
    hi = -math.inf
    for k in range(1, k_max + 1):
        y = 1.0 / k - comp
        t = total + y
        comp = (t - total) - y
        total = t
        gap = total - math.log(k)
        lo = min(lo, gap)
        hi = max(hi, gap)
        if not (GAMMA - 1e-12 < gap <= GAMMA + 0.5 + 1e-12):
            return _report(
                "harmonic bracketing", False, gap, (GAMMA, GAMMA + 0.5), f"k={k}"
            )
    return _report(
        "harmonic bracketing", True,
        f"H_k - log k in [{lo:.12f}, {hi:.12f}] for k <= {k_max}",
        f"(gamma, gamma + 1/2] = ({GAMMA:.12f}, {GAMMA + 0.5:.12f}]",
    )


def check_partition_power_growth(fast: bool = False) -> VerificationReport:
    pairs = ((1, 1), (1, 2), (2, 2)) if fast else ((1, 1), (1, 2), (2, 2), (2, 3))
    r_max = 150 if fast else 500
    for n, k in pairs:
        rep = oracles.check_partition_power_growth(n, k, r_max)
        if not rep.passed:
            return rep
    return _report(
        "partition power growth", True,
        f"pairs {pairs}", f"ratio <= 1 + 10/r on the top decade of r <= {r_max}",
    )


def check_monotone_sums(n_max: int = 4, k_max: int = 25) -> VerificationReport:
    for n in range(1, n_max + 1):
        for k in range(1, k_max):
            if not sum_repeated(n, k + 1) > sum_repeated(n, k):
                return _report("sums increase with k", False, sum_repeated(n, k + 1), sum_repeated(n, k), f"repeated, n={n}, k={k}")
            if not sum_nondecreasing(n, k + 1) > sum_nondecreasing(n, k):
                return _report("sums increase with k", False, sum_nondecreasing(n, k + 1), sum_nondecreasing(n, k), f"non-decreasing, n={n}, k={k}")
    return _report("sums increase with k", True, f"n <= {n_max}, k < {k_max}", "strict growth in k")


def check_boundary_factor_monotone() -> VerificationReport:
    grid = [x / 8 for x in range(4, 200)]
    for n in range(2, 9):
        values = [bounds.boundary_factor(x, n) for x in grid]
        for a, b in zip(values, values[1:]):
            if not b < a:
                return _report(
                    "boundary factor decreasing", False, b, a, f"n={n}"
                )
        if not values[-1] >= 1.0:
            return _report(
                "boundary factor decreasing", False, values[-1], 1.0, f"limit, n={n}"
            )
    return _report(
        "boundary factor decreasing", True, "n in 2..8, log k grid", "strictly decreasing toward 1"
    )


def check_threshold_consistency() -> VerificationReport:
    for n in range(6, 9):
        t = bounds.threshold_logk(n)
        goal = (n + 1) / (2 * PI)
        j = t + GAMMA
        linear = 1 + ((PI * PI / 6) * (n - 2) * math.factorial(n) + 1) / j
        if abs(linear - goal) > 1e-9 * goal:
            return _report(
                "threshold consistency", False, linear, goal, f"root condition, n={n}"
            )
        if not bounds.boundary_factor(t, n) < goal**n * 1.001:
            return _report(
                "threshold consistency", False,
                bounds.boundary_factor(t, n), goal**n, f"factor at threshold, n={n}",
            )
        j_half = t / 2 + GAMMA
        linear_half = 1 + ((PI * PI / 6) * (n - 2) * math.factorial(n) + 1) / j_half
        if not linear_half > goal:
            return _report(
                "threshold consistency", False, linear_half, goal,
                f"condition should fail at half threshold, n={n}",
            )
    return _report(
        "threshold consistency", True, "n in 6..8",
        "threshold is the root of the linearized condition; fails at half",
    )


def check_simple_bound_dominated(n_max: int = 5, k_max: int = 100) -> VerificationReport:
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            simple = bounds.simple_lower_bound(n, k, Fraction(1))
            exact = bounds.logarithmic_volume(n, k, Fraction(1))
            if simple > float(exact) * (1 + 1e-9):
                return _report(
                    "open bound below exact volume", False, simple, float(exact), f"n={n}, k={k}"
                )
    return _report(
        "open bound below exact volume", True,
        f"n <= {n_max}, k <= {k_max}", "float bound <= exact volume",
    )


# -------------------------------------------------------------------- suites


def identity_checks(fast: bool = False) -> list[Callable[[], VerificationReport]]:
    return [
        lambda: check_volume_identity(5, 6),
        lambda: check_ring_axioms(20 if fast else 40),
        lambda: check_weighted_single_coefficients(20 if fast else 40),
        lambda: check_whitney_weight_one(15 if fast else 30),
        lambda: check_volume_decomposition(12 if fast else 25),
        check_harmonic_recurrence,
        check_boundary_small_cases,
    ]


def oracle_checks(fast: bool = False) -> list[Callable[[], VerificationReport]]:
    out = [
        lambda: check_sum_oracles(3 if fast else 4),
        lambda: check_jet_rank_partitions(15 if fast else 30, 6),
        check_rank_telescoping,
        check_monomial_quasipolynomial,
        lambda: check_orbifold_growth(fast),
        check_partition_power_examples,
    ]
    if not fast:
        out.append(check_boundary_leading_coefficient)
    return out


def inequality_checks(fast: bool = False) -> list[Callable[[], VerificationReport]]:
    if fast:
        return [
            lambda: check_interior_chain(5, 40),
            lambda: check_boundary_chain(40, (), 10**3),
            lambda: check_harmonic_bracketing(10**5),
            lambda: check_partition_power_growth(True),
            check_monotone_sums,
            check_boundary_factor_monotone,
            check_threshold_consistency,
            lambda: check_simple_bound_dominated(5, 40),
        ]
    return [
        lambda: check_interior_chain(5, 100, (1000,)),
        lambda: check_boundary_chain(100, (1000,), 10**4),
        lambda: check_harmonic_bracketing(10**6),
        lambda: check_partition_power_growth(False),
        check_monotone_sums,
        check_boundary_factor_monotone,
        check_threshold_consistency,
        lambda: check_simple_bound_dominated(5, 100),
    ]


SUITE_NAMES = ("identities", "oracles", "inequalities")


def run_suite(name: str, fast: bool = False) -> list[VerificationReport]:
    """Run one suite (or ``all``) and return the reports in a fixed order."""
    if name == "all":
        reports = []
        for sub in SUITE_NAMES:
            reports.extend(run_suite(sub, fast))
        return reports
    table = {
        "identities": identity_checks,
        "oracles": oracle_checks,
        "inequalities": inequality_checks,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}")
    return [make() for make in table[name](fast)]
