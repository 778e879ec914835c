"""End-to-end verifiers for the divided-difference integral identity.

The central claim checked here: integrating V(t) * f^(n)(t_1 + ... + t_n)
over the sequential rectangle R(x) gives V(x) times the divided difference
of f at the transformed points y.  Two pipelines verify it, an exact one
(rational points, polynomial f, iterated symbolic integration) and a
floating one (Gauss-Legendre cubature vs. the divided-difference table).
The supporting derivative and vertex-sum identities are certified exactly
by the seeded lemma suite.

Every check returns an IdentityReport.  Suites generate cases in a fixed
order from a seed, so serialized output is reproducible byte for byte.
For multi-sample checks the report's lhs/rhs hold a witness pair: the
first failing sample, or the last sample when all pass.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, Sequence

from .divdiff import divided_difference, divided_difference_side
from .exact import MultiPoly, VarId, var_family
from .funcs import AnalyticFunction, Polynomial
from .points import (
    PointSequence,
    SequentialRectangle,
    monotone_vertices,
    x_from_y,
    y_from_x,
)
from .quad import DEFAULT_BUDGET, integral_side
from .symfun import (
    MixedSum,
    PureSum,
    apply_operator,
    elementary_symmetric,
    enumerate_vertices,
    omega,
    vandermonde_poly,
    vandermonde_product,
)

DEFAULT_ORDER = 20
DEFAULT_TOLERANCE = 1e-9
# chosen so every sequence in the default floating suite keeps the
# reciprocal family's pole (shift 10) outside the coordinate-sum range;
# with the pole inside, the integral side does not even exist
DEFAULT_SEED = 2718
# below this magnitude the reference value counts as zero and the verdict
# falls back to an absolute error test
ZERO_GUARD = 1e-14
ABS_FALLBACK = 1e-12

LEMMA_GROUPS = (
    "esym-derivative",
    "omega-derivative",
    "pure-derivative",
    "pure-vanish",
    "power-sum-vanish",
    "mixed-sum-vanish",
    "newton",
    "chain-rule",
    "vertex-sum",
    "reduced-vertex-sum",
)


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one identity check plus the verdict and context."""

    name: str
    n: int
    lhs: object
    rhs: object
    abs_err: float
    rel_err: float
    passed: bool
    tolerance: float
    seed: int | None = None
    config: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        """JSON-ready dict with a fixed key order; exact values as strings."""
        return {
            "name": self.name,
            "n": self.n,
            "passed": self.passed,
            "lhs": json_value(self.lhs),
            "rhs": json_value(self.rhs),
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tolerance": self.tolerance,
            "seed": self.seed,
            "config": json_value(self.config),
        }


def json_value(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, MultiPoly):
        return v.render()
    if isinstance(v, PointSequence):
        return [json_value(u) for u in v.values]
    if isinstance(v, (list, tuple)):
        return [json_value(u) for u in v]
    if isinstance(v, dict):
        return {k: json_value(u) for k, u in v.items()}
    return v


def _float_verdict(lhs: float, rhs: float, tolerance: float):
    abs_err = abs(lhs - rhs)
    if abs(rhs) < ZERO_GUARD:
        # relative error degenerates near zero; report the absolute error
        # in both fields and test it against the absolute fallback
        return abs_err, abs_err, abs_err <= ABS_FALLBACK
    rel_err = abs_err / abs(rhs)
    return abs_err, rel_err, rel_err <= tolerance


def _poly_magnitude(p: MultiPoly) -> float:
    return float(sum(abs(c) for c in p.terms().values()))


def _exact_report(name, n, lhs, rhs, *, seed=None, config=None) -> IdentityReport:
    """Report for an exact-pipeline comparison; errors are 0 on pass.

    On failure both error fields carry the same magnitude: a coefficient
    1-norm for polynomials, the plain difference for rationals.
    """
    if isinstance(lhs, MultiPoly) and isinstance(rhs, MultiPoly):
        diff = lhs - rhs
        passed = diff.is_zero
        err = 0.0 if passed else _poly_magnitude(diff)
    else:
        passed = lhs == rhs
        err = 0.0 if passed else abs(float(lhs) - float(rhs))
    return IdentityReport(
        name=name,
        n=n,
        lhs=lhs,
        rhs=rhs,
        abs_err=err,
        rel_err=err,
        passed=passed,
        tolerance=0.0,
        seed=seed,
        config=dict(config or {}),
    )


def _sum_poly(variables: Sequence[VarId]) -> MultiPoly:
    total = MultiPoly.zero()
    for v in variables:
        total = total + MultiPoly.variable(v)
    return total


def _compose(f: Polynomial, inner: MultiPoly) -> MultiPoly:
    """Exact composition f(inner) by Horner in the polynomial ring."""
    acc = MultiPoly.zero()
    for c in reversed(f.coeffs):
        acc = acc * inner + Fraction(c)
    return acc


def _require_exact_polynomial(f: AnalyticFunction) -> Polynomial:
    # Polynomial coerces its coefficients to Fraction on construction, so
    # the family check alone guarantees exactness
    if not isinstance(f, Polynomial):
        raise TypeError("the exact pipeline needs a polynomial function")
    return f


# -- main identity ------------------------------------------------------------


def check_identity_numeric(
    x: PointSequence,
    f: AnalyticFunction,
    order: int = DEFAULT_ORDER,
    tolerance: float = DEFAULT_TOLERANCE,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    seed: int | None = None,
) -> IdentityReport:
    """Floating-point check: cubature over R(x) vs. the table route.

    The worker count never appears in the report, so output is identical
    for any parallelism level.
    """
    cubature = integral_side(x, f, order, workers=workers, budget=budget)
    rhs = float(divided_difference_side(x, f))
    abs_err, rel_err, passed = _float_verdict(cubature.value, rhs, tolerance)
    return IdentityReport(
        name="integral-vs-divided-difference",
        n=x.n,
        lhs=cubature.value,
        rhs=rhs,
        abs_err=abs_err,
        rel_err=rel_err,
        passed=passed,
        tolerance=tolerance,
        seed=seed,
        config={
            "pipeline": "floating",
            "order": order,
            "points": list(x.as_floats()),
            "function": f.describe(),
        },
    )


def exact_integral_value(x: PointSequence, f: Polynomial) -> Fraction:
    """Exact iterated integral of V(t) * f^(n)(t_1 + ... + t_n) over R(x).

    Expands V symbolically, composes the n-th derivative of f with the
    coordinate sum, and integrates one coordinate at a time between the
    rational bounds x_i and x_{i+1}.
    """
    if not x.is_exact:
        raise ValueError("the exact pipeline needs rational points")
    f = _require_exact_polynomial(f)
    n = x.n
    tvars = var_family("t", n)
    value = vandermonde_poly(n, "t") * _compose(
        f.derivative(n), _sum_poly(tvars)
    )
    for i, v in enumerate(tvars):
        value = value.integrate(v, x[i], x[i + 1])
    return value.as_constant()


def check_identity_exact(
    x: PointSequence, f: Polynomial, *, seed: int | None = None
) -> IdentityReport:
    """Exact check: iterated symbolic integration vs. the rational table.

    Integrates V(t) * f^(n)(t_1 + ... + t_n) coordinate by coordinate with
    the rational bounds x_i, then compares with V(x) times the divided
    difference at y.  The two sides must agree as exact rationals.
    """
    lhs = exact_integral_value(x, f)
    rhs = vandermonde_product(x.values) * divided_difference(y_from_x(x), f)
    return _exact_report(
        "integral-vs-divided-difference",
        x.n,
        lhs,
        rhs,
        seed=seed,
        config={
            "pipeline": "exact",
            "points": list(x.values),
            "function": f.describe(),
        },
    )


def check_volume_symbolic(n: int) -> IdentityReport:
    """Fully symbolic volume identity in x_1..x_{n+1}.

    Integrates the expanded V(t) over R(x) with polynomial bounds and
    subtracts V(x)/n!; the difference must be the zero polynomial.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    tvars = var_family("t", n)
    xvars = var_family("x", n + 1)
    value = vandermonde_poly(n, "t")
    for i, v in enumerate(tvars):
        value = value.integrate(
            v, MultiPoly.variable(xvars[i]), MultiPoly.variable(xvars[i + 1])
        )
    rhs = vandermonde_poly(n + 1, "x", limit=n + 1) * Fraction(
        1, math.factorial(n)
    )
    return _exact_report(
        "vandermonde-volume",
        n,
        value,
        rhs,
        config={"pipeline": "exact", "variables": [v.name for v in xvars]},
    )


def divided_difference_via_integral(
    y: PointSequence,
    f: AnalyticFunction,
    order: int = DEFAULT_ORDER,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> float:
    """Divided difference at y recovered from the integral route.

    Maps y back to x, integrates V(t) * f^(n) over R(x), divides by V(y).
    """
    x = x_from_y(PointSequence(y.as_floats()))
    cubature = integral_side(x, f, order, workers=workers, budget=budget)
    return cubature.value / vandermonde_product(y.as_floats())


# -- derivative expansion and vertex sums --------------------------------------


def check_chain_rule(
    n: int, psi: MultiPoly, f: Polynomial, *, seed: int | None = None
) -> IdentityReport:
    """Derivative expansion of the product phi = psi * f(t_1 + ... + t_n).

    The full mixed derivative of phi must equal the sum over k of the
    order-k mixed-sum operator applied to psi, times f^(n-k) composed with
    the coordinate sum.  Verified as an exact polynomial identity.
    """
    f = _require_exact_polynomial(f)
    tvars = var_family("t", n)
    s_poly = _sum_poly(tvars)
    phi = psi * _compose(f, s_poly)
    lhs = apply_operator(MixedSum(n), phi, tvars)
    rhs = MultiPoly.zero()
    for k in range(n + 1):
        ek_psi = psi if k == 0 else apply_operator(MixedSum(k), psi, tvars)
        rhs = rhs + ek_psi * _compose(f.derivative(n - k), s_poly)
    return _exact_report(
        "product-chain-rule",
        n,
        lhs,
        rhs,
        seed=seed,
        config={"function": f.describe(), "psi_terms": len(psi.terms())},
    )


@dataclass(frozen=True)
class ZeroPropertyFunction:
    """A polynomial in t_1..t_n that vanishes whenever t_i = t_{i+1}."""

    poly: MultiPoly
    variables: tuple[VarId, ...]

    def holds(self) -> bool:
        """Exact check by substituting each t_{i+1} := t_i."""
        for a, b in zip(self.variables, self.variables[1:]):
            if not self.poly.substitute(b, MultiPoly.variable(a)).is_zero:
                return False
        return True

    def eval(self, point: Sequence) -> Fraction:
        return self.poly.eval(dict(zip(self.variables, point)))


def _alternating_vertex_sum(phi: MultiPoly, tvars, bounds) -> Fraction:
    n = len(bounds)
    total = Fraction(0)
    for selector, vertex in enumerate_vertices(bounds):
        sign = -1 if (n - selector.weight) % 2 else 1
        total += sign * phi.eval(dict(zip(tvars, vertex)))
    return total


def _box_integral_of_mixed_derivative(phi: MultiPoly, tvars, bounds) -> Fraction:
    value = phi
    for v in tvars:
        value = value.diff(v)
    for v, (a, b) in zip(tvars, bounds):
        value = value.integrate(v, a, b)
    return value.as_constant()


def check_vertex_sum(
    bounds: Sequence[tuple], phi: MultiPoly, *, seed: int | None = None
) -> IdentityReport:
    """Box integral of the full mixed derivative vs. the alternating
    sum of phi over all 2^n vertices; exact equality required."""
    n = len(bounds)
    tvars = var_family("t", n)
    lhs = _box_integral_of_mixed_derivative(phi, tvars, bounds)
    rhs = _alternating_vertex_sum(phi, tvars, bounds)
    return _exact_report(
        "mixed-derivative-vertex-sum",
        n,
        lhs,
        rhs,
        seed=seed,
        config={"bounds": [[a, b] for a, b in bounds]},
    )


def check_reduced_vertex_sum(
    x: PointSequence, g: MultiPoly, *, seed: int | None = None
) -> IdentityReport:
    """With phi = V(t) * g, the 2^n alternating vertex sum over R(x)
    collapses to n+1 terms at the monotone vertices.

    Checks three quantities agree exactly: the box integral of the full
    mixed derivative, the reduced n+1 term sum, and the full 2^n sum.
    Also certifies the consecutive-equal zero property of phi.
    """
    if not x.is_exact:
        raise ValueError("the exact pipeline needs rational points")
    n = x.n
    tvars = var_family("t", n)
    phi = vandermonde_poly(n, "t") * g
    zero_property = ZeroPropertyFunction(phi, tuple(tvars)).holds()
    bounds = SequentialRectangle(x).intervals
    lhs = _box_integral_of_mixed_derivative(phi, tvars, bounds)
    full = _alternating_vertex_sum(phi, tvars, bounds)
    reduced = Fraction(0)
    for i, vertex in enumerate(monotone_vertices(x), start=1):
        sign = -1 if (n + 1 - i) % 2 else 1
        reduced += sign * phi.eval(dict(zip(tvars, vertex)))
    passed = zero_property and lhs == reduced == full
    err = 0.0 if passed else abs(float(lhs) - float(reduced))
    return IdentityReport(
        name="reduced-vertex-sum",
        n=n,
        lhs=lhs,
        rhs=reduced,
        abs_err=err,
        rel_err=err,
        passed=passed,
        tolerance=0.0,
        seed=seed,
        config={
            "points": list(x.values),
            "full_sum": full,
            "zero_property": zero_property,
        },
    )


# -- seeded random generators ---------------------------------------------------


def random_fraction(rng: random.Random, max_abs: int = 100) -> Fraction:
    """Random rational with numerator and denominator bounded by max_abs."""
    return Fraction(rng.randint(-max_abs, max_abs), rng.randint(1, max_abs))


def random_increasing_rationals(
    rng: random.Random, count: int, max_abs: int = 100
) -> PointSequence:
    seen = set()
    while len(seen) < count:
        seen.add(random_fraction(rng, max_abs))
    return PointSequence.exact(sorted(seen))


def random_increasing_floats(
    rng: random.Random,
    count: int,
    lo: float = -2.0,
    hi: float = 3.0,
    min_gap: float = 0.2,
) -> PointSequence:
    """Sorted uniform draws, spread so consecutive gaps exceed min_gap.

    Draws land in [lo, hi - (count-1)*min_gap]; shifting the i-th sorted
    value by i*min_gap restores the full range and adds min_gap to every
    gap, so the minimum gap is guaranteed without rejection sampling.
    """
    shrink = min_gap * (count - 1)
    if hi - lo <= shrink:
        raise ValueError("range too narrow for the requested minimum gap")
    raw = sorted(rng.uniform(lo, hi - shrink) for _ in range(count))
    return PointSequence.floating(
        tuple(raw[i] + i * min_gap for i in range(count))
    )


def random_poly(
    rng: random.Random,
    variables: Sequence[VarId],
    max_degree: int = 3,
    terms: int = 5,
    max_abs: int = 10,
) -> MultiPoly:
    """Random sparse polynomial with per-variable degree at most max_degree."""
    out = MultiPoly.zero()
    for _ in range(terms):
        mono = MultiPoly.one()
        for v in variables:
            e = rng.randint(0, max_degree)
            if e:
                mono = mono * MultiPoly.variable(v) ** e
        out = out + random_fraction(rng, max_abs) * mono
    return out


def random_polynomial_function(
    rng: random.Random, degree: int, max_abs: int = 10
) -> Polynomial:
    coeffs = [random_fraction(rng, max_abs) for _ in range(degree + 1)]
    while coeffs[-1] == 0:
        coeffs[-1] = random_fraction(rng, max_abs)
    return Polynomial(tuple(coeffs))


def _random_bounds(rng: random.Random, n: int, max_abs: int = 20):
    out = []
    for _ in range(n):
        a = random_fraction(rng, max_abs)
        b = random_fraction(rng, max_abs)
        while b == a:
            b = random_fraction(rng, max_abs)
        out.append((min(a, b), max(a, b)))
    return tuple(out)


def _group_rng(seed: int, group: str, n: int) -> random.Random:
    # string seeds hash through sha512 inside random.Random, so streams are
    # stable across processes and independent between groups
    return random.Random(f"{seed}:{group}:{n}")


def exact_suite_points(
    n: int, count: int = 20, seed: int = DEFAULT_SEED
) -> list[PointSequence]:
    """The seeded rational sequences (length n+1) of the exact test suite."""
    rng = _group_rng(seed, "exact-suite", n)
    return [random_increasing_rationals(rng, n + 1) for _ in range(count)]


def floating_suite_points(
    n: int, count: int = 20, seed: int = DEFAULT_SEED
) -> list[PointSequence]:
    """The seeded float sequences (length n+1) of the floating test suite.

    Values lie in [-2, 3] with consecutive gaps above 0.2, drawn from a
    per-n stream so the cases for one n never depend on another.
    """
    rng = _group_rng(seed, "floating-suite", n)
    return [random_increasing_floats(rng, n + 1) for _ in range(count)]


# -- lemma suite ----------------------------------------------------------------


def _suite_esym(n_max: int, seed: int, cases: int) -> Iterator[IdentityReport]:
    # d/da e_k(a - t_1, ..., a - t_m) = (m - k + 1) e_{k-1}(same args)
    a = VarId("a", 1)
    for m in range(1, n_max + 1):
        tvars = var_family("t", m)
        args = [MultiPoly.variable(a) - MultiPoly.variable(v) for v in tvars]
        for k in range(1, m + 1):
            lhs = elementary_symmetric(k, args).diff(a)
            rhs = (m - k + 1) * elementary_symmetric(k - 1, args)
            yield _exact_report(
                f"esym-derivative[m={m},k={k}]", m, lhs, rhs, seed=seed
            )


def _suite_omega(n_max: int, seed: int, cases: int) -> Iterator[IdentityReport]:
    # the k-th derivative of the monic root product equals k! e_{m-k}
    a = VarId("a", 1)
    for m in range(0, n_max + 1):
        tvars = var_family("t", m)
        roots = [MultiPoly.variable(v) for v in tvars]
        args = [MultiPoly.variable(a) - r for r in roots]
        w = omega(roots, a)
        for k in range(0, m + 1):
            lhs = w.diff(a, k)
            rhs = math.factorial(k) * elementary_symmetric(m - k, args)
            yield _exact_report(
                f"omega-derivative[m={m},k={k}]", m, lhs, rhs, seed=seed
            )


def _distinct_rationals(rng: random.Random, count: int, max_abs: int = 30):
    seen = set()
    while len(seen) < count:
        seen.add(random_fraction(rng, max_abs))
    return sorted(seen)


def _suite_pure_derivative(
    n_max: int, seed: int, cases: int
) -> Iterator[IdentityReport]:
    # the k-th pure derivative of V in t_i equals k! V e_k of the
    # reciprocals 1/(t_i - t_j), checked at random distinct rational points
    for n in range(2, n_max + 1):
        tvars = var_family("t", n)
        v_poly = vandermonde_poly(n, "t", limit=max(n, 1))
        rng = _group_rng(seed, "pure-derivative", n)
        for k in range(1, n):
            derivs = [v_poly.diff(t, k) for t in tvars]
            passed = True
            witness = (Fraction(0), Fraction(0))
            for _ in range(cases):
                vals = _distinct_rationals(rng, n)
                assignment = dict(zip(tvars, vals))
                v_val = v_poly.eval(assignment)
                for i in range(n):
                    recips = [
                        MultiPoly.const(Fraction(1, 1) / (vals[i] - vals[j]))
                        for j in range(n)
                        if j != i
                    ]
                    lhs = derivs[i].eval(assignment)
                    rhs = (
                        math.factorial(k)
                        * v_val
                        * elementary_symmetric(k, recips).as_constant()
                    )
                    witness = (lhs, rhs)
                    if lhs != rhs:
                        passed = False
                        break
                if not passed:
                    break
            err = 0.0 if passed else abs(float(witness[0]) - float(witness[1]))
            yield IdentityReport(
                name=f"pure-derivative[n={n},k={k}]",
                n=n,
                lhs=witness[0],
                rhs=witness[1],
                abs_err=err,
                rel_err=err,
                passed=passed,
                tolerance=0.0,
                seed=seed,
                config={"samples": cases},
            )


def _suite_pure_vanish(n_max: int, seed: int, cases: int) -> Iterator[IdentityReport]:
    # the n-th pure derivative of V in any single variable is zero
    for n in range(1, n_max + 1):
        tvars = var_family("t", n)
        v_poly = vandermonde_poly(n, "t", limit=max(n, 1))
        worst = MultiPoly.zero()
        for t in tvars:
            out = v_poly.diff(t, n)
            if not out.is_zero:
                worst = out
                break
        yield _exact_report(
            f"pure-vanish[n={n}]", n, worst, MultiPoly.zero(), seed=seed
        )


def _suite_operator_vanish(
    group: str, n_max: int, seed: int
) -> Iterator[IdentityReport]:
    make = PureSum if group == "power-sum-vanish" else MixedSum
    for n in range(1, n_max + 1):
        tvars = var_family("t", n)
        v_poly = vandermonde_poly(n, "t", limit=max(n, 1))
        for k in range(1, n + 1):
            out = apply_operator(make(k), v_poly, tvars)
            yield _exact_report(
                f"{group}[n={n},k={k}]", n, out, MultiPoly.zero(), seed=seed
            )


def _suite_newton(n_max: int, seed: int, cases: int) -> Iterator[IdentityReport]:
    # operator form of Newton's identities:
    # k E_k = sum_i (-1)^(i-1) E_{k-i} P_i + (-1)^(k-1) P_k
    for n in range(1, min(n_max, 4) + 1):
        tvars = var_family("t", n)
        rng = _group_rng(seed, "newton", n)
        for k in range(1, n + 1):
            passed = True
            witness = (MultiPoly.zero(), MultiPoly.zero())
            for _ in range(cases):
                p = random_poly(rng, tvars)
                lhs = k * apply_operator(MixedSum(k), p, tvars)
                rhs = MultiPoly.zero()
                for i in range(1, k):
                    term = apply_operator(PureSum(i), p, tvars)
                    if k - i >= 1:
                        term = apply_operator(MixedSum(k - i), term, tvars)
                    rhs = rhs + (-1) ** (i - 1) * term
                rhs = rhs + (-1) ** (k - 1) * apply_operator(PureSum(k), p, tvars)
                witness = (lhs, rhs)
                if not (lhs - rhs).is_zero:
                    passed = False
                    break
            err = 0.0 if passed else _poly_magnitude(witness[0] - witness[1])
            yield IdentityReport(
                name=f"newton[n={n},k={k}]",
                n=n,
                lhs=witness[0],
                rhs=witness[1],
                abs_err=err,
                rel_err=err,
                passed=passed,
                tolerance=0.0,
                seed=seed,
                config={"samples": cases},
            )


def _suite_chain_rule(n_max: int, seed: int, cases: int) -> Iterator[IdentityReport]:
    for n in range(1, min(n_max, 4) + 1):
        tvars = var_family("t", n)
        rng = _group_rng(seed, "chain-rule", n)
        for j in range(cases):
            psi = random_poly(rng, tvars)
            f = random_polynomial_function(rng, rng.randint(n, n + 2))
            report = check_chain_rule(n, psi, f, seed=seed)
            yield replace(report, name=f"chain-rule[n={n},case={j}]")
        f = random_polynomial_function(rng, n + 1)
        report = check_chain_rule(
            n, vandermonde_poly(n, "t", limit=max(n, 1)), f, seed=seed
        )
        yield replace(report, name=f"chain-rule[n={n},case=vandermonde]")


def _suite_vertex_sum(n_max: int, seed: int, cases: int) -> Iterator[IdentityReport]:
    for n in range(1, min(n_max, 4) + 1):
        tvars = var_family("t", n)
        rng = _group_rng(seed, "vertex-sum", n)
        for j in range(cases):
            bounds = _random_bounds(rng, n)
            phi = random_poly(rng, tvars)
            report = check_vertex_sum(bounds, phi, seed=seed)
            yield replace(report, name=f"vertex-sum[n={n},case={j}]")


def _suite_reduced_vertex_sum(
    n_max: int, seed: int, cases: int
) -> Iterator[IdentityReport]:
    for n in range(1, min(n_max, 4) + 1):
        tvars = var_family("t", n)
        rng = _group_rng(seed, "reduced-vertex-sum", n)
        for j in range(cases):
            x = random_increasing_rationals(rng, n + 1, max_abs=20)
            g = random_poly(rng, tvars)
            report = check_reduced_vertex_sum(x, g, seed=seed)
            yield replace(report, name=f"reduced-vertex-sum[n={n},case={j}]")


def run_lemma_suite(
    n_max: int = 5,
    *,
    groups: Sequence[str] | None = None,
    seed: int = DEFAULT_SEED,
    cases: int = 10,
) -> list[IdentityReport]:
    """Run the exact lemma suite and return reports in a fixed case order.

    Each group draws from its own seeded stream, so restricting to a
    subset of groups reproduces exactly the cases the full run would have
    generated for them.
    """
    chosen = LEMMA_GROUPS if groups is None else tuple(groups)
    unknown = [g for g in chosen if g not in LEMMA_GROUPS]
    if unknown:
        raise ValueError(
            f"unknown lemma group(s) {', '.join(unknown)}; "
            f"expected a subset of {', '.join(LEMMA_GROUPS)}"
        )
    out: list[IdentityReport] = []
    for group in LEMMA_GROUPS:
        if group not in chosen:
            continue
        if group == "esym-derivative":
            out.extend(_suite_esym(n_max, seed, cases))
        elif group == "omega-derivative":
            out.extend(_suite_omega(n_max, seed, cases))
        elif group == "pure-derivative":
            out.extend(_suite_pure_derivative(n_max, seed, cases))
        elif group == "pure-vanish":
            out.extend(_suite_pure_vanish(n_max, seed, cases))
        elif group in ("power-sum-vanish", "mixed-sum-vanish"):
            out.extend(_suite_operator_vanish(group, n_max, seed))
        elif group == "newton":
            out.extend(_suite_newton(n_max, seed, cases))
        elif group == "chain-rule":
            out.extend(_suite_chain_rule(n_max, seed, cases))
        elif group == "vertex-sum":
            out.extend(_suite_vertex_sum(n_max, seed, cases))
        elif group == "reduced-vertex-sum":
            out.extend(_suite_reduced_vertex_sum(n_max, seed, cases))
    return out


def suite_passed(reports: Sequence[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
