"""Weighted Laplacians, response matrices, and stability evidence.

The response matrix is computed by an exact Schur complement over the
rationals. The sweeps (grove identities, Rayleigh differences, proper
position, monotonicity, the lower bound) evaluate grove polynomials at
seeded rational points. Points are cleared to integers first: the grove
polynomials are homogeneous, so scaling by the positive lcm of the
denominators never changes a sign or an identity, and integer arithmetic is
much faster than Fractions. Reported minima are scaled back.
"""

import random
from fractions import Fraction
from math import lcm

from .errors import (
    BadParameter,
    ConsistencyError,
    MissingWeight,
    SingularInterior,
    ZeroRestriction,
)
from .grovepoly import grove_polys
from .network import EH, groves
from .polynomials import IntPoly
from .sturm import DEFAULT_WIDTH, interlace_check


class WeightedLaplacian:
    """Block decomposition of the weighted Laplacian at a conductance point.

    A is boundary x boundary, B is boundary x interior, D is interior x
    interior. Entries are exact rationals.
    """

    __slots__ = ("boundary_order", "interior_order", "A", "B", "D")

    def __init__(self, boundary_order, interior_order, A, B, D):
        self.boundary_order = boundary_order
        self.interior_order = interior_order
        self.A = A
        self.B = B
        self.D = D

    def full_matrix(self):
        rows = []
        for i, _ in enumerate(self.boundary_order):
            rows.append(list(self.A[i]) + list(self.B[i]))
        for i, _ in enumerate(self.interior_order):
            rows.append([self.B[j][i] for j in range(len(self.boundary_order))] + list(self.D[i]))
        return rows


class ResponseMatrix:
    __slots__ = ("boundary_order", "entries", "det_interior")

    def __init__(self, boundary_order, entries, det_interior):
        self.boundary_order = boundary_order
        self.entries = entries
        self.det_interior = det_interior

    def trace(self):
        return sum(self.entries[i][i] for i in range(len(self.boundary_order)))

    def __getitem__(self, pair):
        i = self.boundary_order.index(pair[0])
        j = self.boundary_order.index(pair[1])
        return self.entries[i][j]


def laplacian(net, x):
    """Weighted Laplacian blocks at the conductance point x (label -> value)."""
    for e in net.edge_order:
        if e not in x:
            raise MissingWeight(f"no weight for edge {e!r}")
    bd = sorted(net.boundary)
    interior = sorted(v for v in net.vertices if v not in net.boundary)
    order = bd + interior
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    full = [[Fraction(0)] * n for _ in range(n)]
    for e, (u, v) in net.edges.items():
        w = Fraction(x[e])
        iu, iv = pos[u], pos[v]
        full[iu][iu] += w
        full[iv][iv] += w
        full[iu][iv] -= w
        full[iv][iu] -= w
    m = len(bd)
    A = [row[:m] for row in full[:m]]
    B = [row[m:] for row in full[:m]]
    D = [row[m:] for row in full[m:]]
    return WeightedLaplacian(tuple(bd), tuple(interior), A, B, D)


def _solve_and_det(D, rhs):
    """Solve D X = rhs exactly; returns (det D, X) or (0, None) if singular.

    rhs is a list of rows (k x m); X comes back the same shape.
    """
    k = len(D)
    m = len(rhs[0]) if k else 0
    aug = [[Fraction(D[i][j]) for j in range(k)] + [Fraction(c) for c in rhs[i]] for i in range(k)]
    det = Fraction(1)
    for col in range(k):
        piv = None
        for r in range(col, k):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0), None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det *= aug[col][col]
        inv = 1 / aug[col][col]
        row = aug[col]
        for j in range(col, k + m):
            row[j] *= inv
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                other = aug[r]
                for j in range(col, k + m):
                    other[j] -= f * row[j]
    X = [aug[i][k:] for i in range(k)]
    return det, X


def response(net, x):
    """Response matrix by exact Schur complement; SingularInterior if det D = 0."""
    lap = laplacian(net, x)
    k = len(lap.interior_order)
    m = len(lap.boundary_order)
    bt = [[lap.B[j][i] for j in range(m)] for i in range(k)]
    det, X = _solve_and_det(lap.D, bt) if k else (Fraction(1), [])
    if det == 0:
        raise SingularInterior("interior block is singular at this point")
    entries = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = Fraction(lap.A[i][j])
            for t in range(k):
                acc -= lap.B[i][t] * X[t][j]
            row.append(acc)
        entries.append(row)
    for i in range(m):
        if sum(entries[i]) != 0:
            raise ConsistencyError("response row sum is nonzero")
        for j in range(i):
            if entries[i][j] != entries[j][i]:
                raise ConsistencyError("response matrix is not symmetric")
    return ResponseMatrix(lap.boundary_order, entries, det)


def harmonic_extension(net, x, u):
    """Interior potentials for boundary values u, with the block identity check.

    Returns the interior assignment v solving the interior rows, and verifies
    that the full Laplacian sends (u, v) to (response * u, 0) exactly.
    """
    lap = laplacian(net, x)
    m = len(lap.boundary_order)
    k = len(lap.interior_order)
    uvec = [Fraction(u[b]) for b in lap.boundary_order]
    rhs = [[-sum(lap.B[j][i] * uvec[j] for j in range(m))] for i in range(k)]
    det, X = _solve_and_det(lap.D, rhs) if k else (Fraction(1), [])
    if det == 0:
        raise SingularInterior("interior block is singular at this point")
    vvec = [X[i][0] for i in range(k)]
    lam = response(net, x)
    want = [sum(lam.entries[i][j] * uvec[j] for j in range(m)) for i in range(m)]
    for i in range(m):
        got = sum(lap.A[i][j] * uvec[j] for j in range(m))
        got += sum(lap.B[i][t] * vvec[t] for t in range(k))
        if got != want[i]:
            raise ConsistencyError("boundary row of the harmonic identity failed")
    for i in range(k):
        got = sum(lap.B[j][i] * uvec[j] for j in range(m))
        got += sum(lap.D[i][t] * vvec[t] for t in range(k))
        if got != 0:
            raise ConsistencyError("interior row of the harmonic identity failed")
    return dict(zip(lap.interior_order, vvec))


# -- bulk evaluation of set-family polynomials at integer points ------------


class TermEvaluator:
    """One pass over the terms gives the value and all partials at a point.

    Terms are variable-index tuples with integer coefficients (grove families
    have coefficient 1 throughout). At an integer point, each term
    contributes its product to the value, product-over-the-rest to first
    partials, and so on; zeros are handled by counting zero factors instead
    of multiplying them in.
    """

    __slots__ = ("nvars", "terms", "degree")

    def __init__(self, family, var_order, coeffs=None):
        idx = {v: i for i, v in enumerate(var_order)}
        self.nvars = len(var_order)
        self.terms = []
        deg = 0
        for k, s in enumerate(family):
            c = 1 if coeffs is None else coeffs[k]
            self.terms.append((c, tuple(sorted(idx[v] for v in s))))
            deg = max(deg, len(s))
        self.degree = deg

    def value(self, v):
        total = 0
        for c, term in self.terms:
            p = c
            for i in term:
                p *= v[i]
                if not p:
                    break
            total += p
        return total

    def full(self, v):
        """(value, first partials list, second partials dict keyed (i, j), i < j)."""
        value = 0
        first = [0] * self.nvars
        second = {}
        for c, term in self.terms:
            zs = [i for i in term if not v[i]]
            nz = len(zs)
            if nz == 0:
                p = c
                for i in term:
                    p *= v[i]
                value += p
                for i in term:
                    first[i] += p // v[i]
                for a in range(len(term)):
                    pa = p // v[term[a]]
                    for b in range(a + 1, len(term)):
                        key = (term[a], term[b])
                        second[key] = second.get(key, 0) + pa // v[term[b]]
            elif nz == 1:
                z = zs[0]
                p = c
                for i in term:
                    if i != z:
                        p *= v[i]
                first[z] += p
                for i in term:
                    if i != z:
                        key = (z, i) if z < i else (i, z)
                        second[key] = second.get(key, 0) + p // v[i]
            elif nz == 2:
                p = c
                for i in term:
                    if v[i]:
                        p *= v[i]
                second[(zs[0], zs[1])] = second.get((zs[0], zs[1]), 0) + p
        return value, first, second


def sample_point(rng, labels, zero_rate=Fraction(1, 8), positive=False):
    """A seeded rational point: numerators in [-100, 100], denominators in [1, 20].

    Mixed-sign by default with a deliberate chance of exact zeros per
    coordinate; positive=True draws from [1, 100] with no zeros.
    """
    out = {}
    for lab in sorted(labels):
        if not positive and rng.random() < zero_rate:
            out[lab] = Fraction(0)
        else:
            lo = 1 if positive else -100
            out[lab] = Fraction(rng.randint(lo, 100), rng.randint(1, 20))
    return out


def scale_to_integers(point):
    """(integer point dict, positive multiplier c) with ints = c * point."""
    c = 1
    for val in point.values():
        c = lcm(c, Fraction(val).denominator)
    return {k: int(Fraction(v) * c) for k, v in point.items()}, c


def _cached(net, key, build):
    got = net._cache.get(key)
    if got is None:
        got = build()
        net._cache[key] = got
    return got


def _evaluators(net):
    def build():
        variables = net.edge_order
        ev0 = TermEvaluator(groves(net, "no-crossing"), variables)
        ev1 = TermEvaluator(groves(net, "one-crossing"), variables)
        extended = variables + (EH,)
        fam = list(groves(net, "one-crossing"))
        fam += [fs | {EH} for fs in groves(net, "no-crossing")]
        evb = TermEvaluator(fam, extended)
        return ev0, ev1, evb

    return _cached(net, "term_evaluators", build)


def _pair_evaluators(net):
    def build():
        gp = grove_polys(net)
        out = {}
        for pair, poly in gp["pairs"].items():
            out[pair] = TermEvaluator(sorted(poly.terms), net.edge_order)
        return out

    return _cached(net, "pair_evaluators", build)


def delta_eval(f, g, e1, e2, x):
    """Rayleigh difference, bilinear form, and Wronskian at a point.

    delta = d_e1 f * d_e2 f - f * d_e1 d_e2 f, evaluated at x;
    bilinear = d_e1 f * d_e2 g + d_e2 f * d_e1 g - f * d_e1 d_e2 g - g * d_e1 d_e2 f;
    wronskian = f * d_e1 g - d_e1 f * g (only e1 enters).
    For multiaffine inputs the repeated partial d_e d_e vanishes, so diagonal
    pairs are allowed and give delta = (d_e1 f)^2.
    """
    fe1 = f.partial(e1)
    fe2 = f.partial(e2)
    fe12 = fe1.partial(e2)
    ge1 = g.partial(e1)
    ge2 = g.partial(e2)
    ge12 = ge1.partial(e2)
    fv, gv = f.eval(x), g.eval(x)
    delta = fe1.eval(x) * fe2.eval(x) - fv * fe12.eval(x)
    bilinear = (
        fe1.eval(x) * ge2.eval(x)
        + fe2.eval(x) * ge1.eval(x)
        - fv * ge12.eval(x)
        - gv * fe12.eval(x)
    )
    wronskian = fv * ge1.eval(x) - fe1.eval(x) * gv
    return {"delta": delta, "bilinear": bilinear, "wronskian": wronskian}


def identity_sweep(net, trials=200, seed=0):
    """Exact response-vs-grove identity checks at seeded nonsingular points.

    At each point: det D = P0, response symmetric with zero row sums (checked
    inside response()), -Lambda_ij * P0 = P_ij for every boundary pair, and
    trace(Lambda) * P0 = 2 P1. Singular draws are skipped and resampled.
    """
    rng = random.Random(f"identities:{seed}")
    ev0, ev1, _ = _evaluators(net)
    pair_evs = _pair_evaluators(net)
    bd = tuple(sorted(net.boundary))
    order = {b: i for i, b in enumerate(bd)}
    failures = []
    skipped = 0
    done = 0
    while done < trials:
        pt = sample_point(rng, net.edge_order)
        ints, _ = scale_to_integers(pt)
        vec = [ints[e] for e in net.edge_order]
        p0 = ev0.value(vec)
        if p0 == 0:
            skipped += 1
            continue
        lam = response(net, ints)
        if lam.det_interior != p0:
            failures.append(("detD", dict(ints)))
        p1 = ev1.value(vec)
        if lam.trace() * p0 != 2 * p1:
            failures.append(("trace", dict(ints)))
        seen_pairs = set()
        for pair, ev in pair_evs.items():
            i, j = order[pair[0]], order[pair[1]]
            if -lam.entries[i][j] * p0 != ev.value(vec):
                failures.append(("offdiag", pair, dict(ints)))
            seen_pairs.add((i, j))
        for i in range(len(bd)):
            for j in range(i + 1, len(bd)):
                if (i, j) not in seen_pairs and lam.entries[i][j] != 0:
                    failures.append(("offdiag-zero", (bd[i], bd[j]), dict(ints)))
        done += 1
    return {
        "network": net.name,
        "points": done,
        "skipped_singular": skipped,
        "pairs": len(pair_evs),
        "failures": failures,
        "all_ok": not failures,
    }


def grove_identities(net, x):
    """The identity report at one explicit point (SingularInterior if P0 = 0)."""
    ints, _ = scale_to_integers(x)
    ev0, ev1, _ = _evaluators(net)
    vec = [ints[e] for e in net.edge_order]
    p0 = ev0.value(vec)
    if p0 == 0:
        raise SingularInterior("P0 vanishes at this point")
    lam = response(net, ints)
    bd = tuple(sorted(net.boundary))
    order = {b: i for i, b in enumerate(bd)}
    pair_reports = {}
    ok = lam.det_interior == p0
    for pair, ev in _pair_evaluators(net).items():
        i, j = order[pair[0]], order[pair[1]]
        good = -lam.entries[i][j] * p0 == ev.value(vec)
        pair_reports[pair] = good
        ok = ok and good
    trace_ok = lam.trace() * p0 == 2 * ev1.value(vec)
    return {
        "point": {k: ints[k] for k in sorted(ints)},
        "det_ok": lam.det_interior == p0,
        "trace_ok": trace_ok,
        "pairs": pair_reports,
        "all_ok": ok and trace_ok,
    }


def _hpp_core(evaluator, var_order, trials, seed, salt):
    rng = random.Random(f"{salt}:{seed}")
    deg = evaluator.degree
    rescale = 2 * deg - 2
    min_val = None
    min_at = None
    violations = []
    checks = 0
    for _ in range(trials):
        pt = sample_point(rng, var_order)
        ints, c = scale_to_integers(pt)
        vec = [ints[v] for v in var_order]
        value, first, second = evaluator.full(vec)
        factor = Fraction(1, c**rescale)
        for i in range(len(var_order)):
            for j in range(i + 1, len(var_order)):
                d = first[i] * first[j] - value * second.get((i, j), 0)
                checks += 1
                orig = d * factor
                if min_val is None or orig < min_val:
                    min_val = orig
                    min_at = ((var_order[i], var_order[j]), dict(pt))
                if d < 0:
                    violations.append(((var_order[i], var_order[j]), dict(pt), orig))
    return {
        "trials": trials,
        "checks": checks,
        "min": min_val,
        "min_witness": min_at,
        "violations": violations,
        "all_nonnegative": not violations,
    }


def hpp_sample(net, trials=100, seed=0):
    """Rayleigh differences of the basis polynomial at mixed-sign points.

    Samples seeded rational points over the edges plus the lift element and
    checks delta >= 0 for every unordered variable pair. A negative value is
    reported (with its witness), not raised.
    """
    if trials < 1:
        raise BadParameter("need at least one trial")
    _, _, evb = _evaluators(net)
    var_order = net.edge_order + (EH,)
    report = _hpp_core(evb, var_order, trials, seed, f"hpp:{net.name}")
    report["network"] = net.name
    return report


def hpp_scan_poly(poly, trials=100, seed=0):
    """The same Rayleigh sweep for an arbitrary multiaffine polynomial.

    Used to confirm the scanner can actually catch a failure: a polynomial
    without the property must produce a violation witness.
    """
    if trials < 1:
        raise BadParameter("need at least one trial")
    var_order = tuple(sorted(poly.variables))
    masks = sorted(poly.terms)
    fam = [sorted(m) for m in masks]
    coeffs = [poly.terms[m] for m in masks]
    for c in coeffs:
        if Fraction(c).denominator != 1:
            raise BadParameter("integer coefficients only in the scanner")
    ev = TermEvaluator(fam, var_order, coeffs=[int(c) for c in coeffs])
    if not poly.is_homogeneous():
        raise BadParameter("the scanner assumes a homogeneous polynomial")
    return _hpp_core(ev, var_order, trials, seed, "hpp-poly")


def proper_position_checks(net, trials=100, seed=0):
    """Wronskian sign and Cauchy-Schwarz sweep for the grove pair (P0, P1).

    W_e(P0, P1) = P0 * d_e P1 - d_e P0 * P1 is checked nonnegative for every
    edge (the sign orientation is pinned by the two-edge path network, where
    it comes out as x2^2 and x1^2), and E_ef(P0,P1)^2 <= E_ef(P0,P0) *
    E_ef(P1,P1) for every pair.
    """
    if trials < 1:
        raise BadParameter("need at least one trial")
    ev0, ev1, _ = _evaluators(net)
    var_order = net.edge_order
    rng = random.Random(f"proper:{net.name}:{seed}")
    r = ev1.degree
    w_rescale = 2 * r - 2
    min_w = None
    min_margin = None
    violations = []
    checks = 0
    for _ in range(trials):
        pt = sample_point(rng, var_order)
        ints, c = scale_to_integers(pt)
        vec = [ints[v] for v in var_order]
        v0, f0, s0 = ev0.full(vec)
        v1, f1, s1 = ev1.full(vec)
        wf = Fraction(1, c**w_rescale)
        for i, e in enumerate(var_order):
            w = v0 * f1[i] - f0[i] * v1
            checks += 1
            orig = w * wf
            if min_w is None or orig < min_w:
                min_w = orig
            if w < 0:
                violations.append(("wronskian", e, dict(pt), orig))
        for i in range(len(var_order)):
            for j in range(i + 1, len(var_order)):
                key = (i, j)
                e01 = (
                    f0[i] * f1[j]
                    + f0[j] * f1[i]
                    - v0 * s1.get(key, 0)
                    - v1 * s0.get(key, 0)
                )
                d0 = f0[i] * f0[j] - v0 * s0.get(key, 0)
                d1 = f1[i] * f1[j] - v1 * s1.get(key, 0)
                margin = 4 * d0 * d1 - e01 * e01
                checks += 1
                orig = margin * Fraction(1, c ** (4 * r - 6))
                if min_margin is None or orig < min_margin:
                    min_margin = orig
                if margin < 0:
                    violations.append(
                        ("cauchy-schwarz", (var_order[i], var_order[j]), dict(pt), orig)
                    )
    return {
        "network": net.name,
        "trials": trials,
        "checks": checks,
        "min_wronskian": min_w,
        "min_cs_margin": min_margin,
        "violations": violations,
        "all_ok": not violations,
    }


def line_restriction(net, base, direction):
    """Univariate restrictions of P0 and P1 to a positive-direction line."""
    for e in net.edge_order:
        if e not in base or e not in direction:
            raise BadParameter(f"line misses edge {e!r}")
        if Fraction(direction[e]) <= 0:
            raise BadParameter("direction must be strictly positive")
    gp = grove_polys(net)
    low = IntPoly(gp["P0"].restrict_line(base, direction))
    high = IntPoly(gp["P1"].restrict_line(base, direction))
    if low.is_zero() or high.is_zero():
        raise ZeroRestriction("a grove polynomial restricted to zero")
    return {"base": dict(base), "direction": dict(direction), "P0": low, "P1": high}


def interlacing(net, base, direction, width=DEFAULT_WIDTH):
    """Interlacing report for the grove polynomials along a positive line."""
    line = line_restriction(net, base, direction)
    rep = interlace_check(line["P0"], line["P1"], width)
    rep["network"] = net.name
    rep["P0"] = line["P0"]
    rep["P1"] = line["P1"]
    return rep


def interlacing_sweep(net, lines=20, seed=0, width=DEFAULT_WIDTH):
    """Seeded sweep of positive-direction lines; every one must interlace."""
    rng = random.Random(f"interlace:{net.name}:{seed}")
    failures = []
    for _ in range(lines):
        base = sample_point(rng, net.edge_order)
        direction = sample_point(rng, net.edge_order, positive=True)
        rep = interlacing(net, base, direction, width)
        if not rep["interlaced"]:
            failures.append((base, direction, rep))
    return {
        "network": net.name,
        "lines": lines,
        "failures": failures,
        "all_ok": not failures,
    }


def monotonicity_and_bound(net, trials=100, seed=0):
    """Trace monotonicity identity and the Rayleigh lower bound, sampled.

    Checks three things at seeded points. First, the exact identity behind
    monotonicity: delta_(eh,f)(P_B) computed from the basis polynomial equals
    the Wronskian W_f(P0, P1) computed from the grove pair, and is
    nonnegative; the two sides come from independent evaluators. Second, at
    strictly positive points, a finite increase of one conductance never
    decreases the response trace (both traces via the Schur route). Third,
    the bound chain 4 * delta_ef(P0) * delta_ef(P1) >= E_ef(P0,P1)^2 with
    delta_ef(P1) > 0 wherever delta_ef(P1) != 0; points where it vanishes
    are skipped for the quotient form, counted, and checked for the
    degenerate consequence E_ef(P0,P1) = 0.
    """
    if trials < 1:
        raise BadParameter("need at least one trial")
    ev0, ev1, evb = _evaluators(net)
    edges = net.edge_order
    extended = edges + (EH,)
    rng = random.Random(f"monotone:{net.name}:{seed}")
    eh_idx = len(edges)
    failures = []
    skipped_pairs = 0
    bound_checks = 0
    identity_checks = 0
    for _ in range(trials):
        pt = sample_point(rng, extended)
        ints, _ = scale_to_integers(pt)
        vec = [ints[v] for v in extended]
        evec = vec[:-1]
        vb, fb, sb = evb.full(vec)
        v0, f0, s0 = ev0.full(evec)
        v1, f1, s1 = ev1.full(evec)
        for i, e in enumerate(edges):
            lhs = fb[eh_idx] * fb[i] - vb * sb.get((min(i, eh_idx), max(i, eh_idx)), 0)
            rhs = v0 * f1[i] - f0[i] * v1
            identity_checks += 1
            if lhs != rhs:
                failures.append(("identity", e, dict(pt)))
            if lhs < 0:
                failures.append(("negative", e, dict(pt)))
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                key = (i, j)
                d0 = f0[i] * f0[j] - v0 * s0.get(key, 0)
                d1 = f1[i] * f1[j] - v1 * s1.get(key, 0)
                e01 = (
                    f0[i] * f1[j]
                    + f0[j] * f1[i]
                    - v0 * s1.get(key, 0)
                    - v1 * s0.get(key, 0)
                )
                if d1 == 0:
                    skipped_pairs += 1
                    if e01 != 0:
                        failures.append(("degenerate", (edges[i], edges[j]), dict(pt)))
                    continue
                bound_checks += 1
                if d1 < 0 or 4 * d0 * d1 < e01 * e01 or d0 < 0:
                    failures.append(("bound", (edges[i], edges[j]), dict(pt)))
    ray_checks = 0
    for _ in range(max(1, trials // 4)):
        pt = sample_point(rng, edges, positive=True)
        before = response(net, pt).trace()
        f = rng.choice(edges)
        bumped = dict(pt)
        bumped[f] = bumped[f] + rng.randint(1, 5)
        after = response(net, bumped).trace()
        ray_checks += 1
        if after < before:
            failures.append(("rayleigh", f, dict(pt)))
    return {
        "network": net.name,
        "trials": trials,
        "identity_checks": identity_checks,
        "bound_checks": bound_checks,
        "skipped_degenerate_pairs": skipped_pairs,
        "rayleigh_checks": ray_checks,
        "failures": failures,
        "all_ok": not failures,
    }
