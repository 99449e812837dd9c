"""Structured verification reports for the rank-one case suite.

Each case produces a list of named checks with PASS/FAIL status and a detail
string; the runners are deterministic, and the only randomness (Jacobian
sampling) is seeded and echoed in the report.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction as Q

from . import verify
from .poly import Poly, t_weight
from .rootsys import Weight


def _check(checks, cid, description, ok, detail=""):
    checks.append({"id": cid, "description": description,
                   "status": "PASS" if ok else "FAIL", "detail": str(detail)})
    return ok


def _weights_str(w: Weight) -> str:
    return "(" + ", ".join(str(c) for c in w.coords) + ")"


def run_case_1a2(grid: int = 5) -> dict:
    checks: list[dict] = []
    u, a, b = Poly.var("u"), Poly.var("a"), Poly.var("b")
    all_ok = True
    for np in range(1, grid + 1):
        for nm in range(1, grid + 1):
            r = verify.case_1a2_degeneracy(np, nm)
            power = (-1 * u) ** (np + nm - 1)
            expect_x = (np + nm) * power
            expect_y = (np * a + nm * b) * power
            ok = (r.partial_x == expect_x) and (r.partial_y == expect_y) and r.degenerate
            all_ok &= ok
    _check(checks, "partials-grid",
           "partials at the origin equal (n+ + n-)(-u)^(n+ + n- - 1) and "
           "(n+ a + n- b)(-u)^(n+ + n- - 1) on the full grid, and every "
           "2x2 Jacobian from them is singular", all_ok, "grid 1..%d squared" % grid)
    r11 = verify.case_1a2_degeneracy(1, 1)
    ok11 = (r11.partial_x == -2 * u) and (r11.partial_y == -(a + b) * u)
    _check(checks, "partials-display",
           "at n+ = n- = 1 the partials take the displayed form 2(-u) and (a+b)(-u); "
           "for higher multiplicities the displayed coefficients generalize to "
           "(n+ + n-) and (n+ a + n- b)", ok11)
    return {"case": "1A2", "grid": grid, "checks": checks}


def _expected_derivative_9b(case) -> Poly:
    """u_{alpha1} u_{gamma-alpha1} + ... + u_{gamma-alphan} u_{alphan} + 2 u_gamma."""
    rep = case.rep
    n = case.n
    by_root = {r: u for u, r in zip(rep.u_names, rep.roots)}
    from .reps import b_root
    total = 2 * Poly.var(by_root[case.gamma])
    for j in range(2, n + 1):
        left = b_root(n, "e-e", 1, j)   # alpha_1 + .. + alpha_{j-1}
        right = b_root(n, "e", j)       # alpha_j + .. + alpha_n
        total = total + Poly.var(by_root[left]) * Poly.var(by_root[right])
    return total


def _gamma_entry_function(case) -> Poly:
    """The group-matrix entry carrying the weight of the spherical root.

    For the orthogonal and symplectic cases this is the first-row entry of
    exp in the column of the spherical root; its expansion in exponential
    coordinates starts with x_gamma plus quadratic corrections.
    """
    U = case.rep.exp_symbolic()
    if case.label == "9B":
        return U[0][case.n]
    if case.label == "9C":
        return U[0][2 * case.n - 2]
    raise ValueError(case.label)


def run_case_strict(label: str, n: int | None, grid: int, seed: int, trials: int) -> dict:
    case = verify.build_case(label, n)
    checks: list[dict] = []
    wts = case.weights
    phi1, phi2 = case.phi

    for idx, phi in ((0, phi1), (1, phi2)):
        expect = case.expected_phi_weight(idx)
        got = t_weight(phi, wts)
        _check(checks, "phi%d-weight" % (idx + 1),
               "colour equation %d is T-homogeneous with the longest-element weight"
               % (idx + 1), got == expect, _weights_str(got))

    if label == "9B":
        quad = Poly()
        for k, c in phi1.terms.items():
            if sum(k) == 2:
                quad = quad + Poly(phi1.vars, {k: c})
        expect_quad = Poly.var("x%d" % case.n) ** 2
        for j in range(1, case.n):
            expect_quad = expect_quad + 2 * Poly.var("x%d" % j) * Poly.var("x%d" % (2 * case.n - j))
        _check(checks, "phi1-quadratic-part",
               "degree-two part of the corner equation is 2 x1 x_{2n-1} + ... + x_n^2",
               quad == expect_quad, str(quad))
        d1 = verify.gamma_derivative(case, phi1)
        _check(checks, "gamma-derivative",
               "derivative of the corner equation along the spherical root matches "
               "the displayed quadratic formula", d1 == _expected_derivative_9b(case), str(d1))
    if label == "9C":
        d2 = verify.gamma_derivative(case, phi2)
        rep = case.rep
        by_root = {r: u for u, r in zip(rep.u_names, rep.roots)}
        from .reps import c_root
        expect = (2 * Poly.var(by_root[case.gamma])
                  - Poly.var(by_root[c_root(case.n, "e-e", 1, 2)])
                  * Poly.var(by_root[c_root(case.n, "2e", 2)]))
        _check(checks, "gamma-derivative",
               "derivative of the two-by-two minor along the spherical root equals "
               "2 u_gamma - u_alpha1 u_{gamma-alpha1}", d2 == expect, str(d2))

    a_basis, b_basis = verify.ab_bases(case)
    wa, wb = verify.ansatz_weights(case)
    ok_w = all(t_weight(p, wts) == wa for p in a_basis) and \
        all(t_weight(p, wts) == wb for p in b_basis)
    _check(checks, "ansatz-weights",
           "ansatz elements carry the weight of the linear-in-y coefficients", ok_w)

    if label in ("9B", "9C"):
        w_entry = _gamma_entry_function(case)
        if label == "9B":
            ok = len(a_basis) == 1 and (a_basis[0].monic() - w_entry.monic()).is_zero()
            _check(checks, "a-ansatz",
                   "the a-space is the line through the invariant group-entry function "
                   "of the spherical root (x_gamma plus its quadratic correction)",
                   ok, str(a_basis[0]) if a_basis else "empty")
        else:
            gname = case.gamma_name
            cross = {"x1": 1, "x%d" % (4 * case.n - 4): 1}
            ok_couple = any(p.coefficient({gname: 1}) != 0 for p in b_basis)
            for p in b_basis:
                cg = p.coefficient({gname: 1})
                cc = p.coefficient(cross)
                if cc != -Q(1, 2) * cg:
                    ok_couple = False
            _check(checks, "b-coupling",
                   "on the b-space the coefficient of x_alpha1 x_{gamma-alpha1} is "
                   "minus one half that of x_gamma (the coupled pair), and the "
                   "complement avoids both coordinates",
                   ok_couple,
                   "basis " + "; ".join(str(p) for p in b_basis))

    if label == "15":
        x = {i: Poly.var("x%d" % i) for i in range(1, 7)}
        display = case.shipped["phi2_display"]
        diff = phi2 - display
        expected_diff = -Q(1, 20) * x[3] * x[2] ** 2 * x[6] ** 3
        _check(checks, "phi2-matrix-vs-reference",
               "the minor built from the matrix model matches the reference "
               "polynomial after correcting the x3 x2^2 x6^3 coefficient from "
               "1/10 to 1/20 (the corrected value is forced by the matrix model)",
               diff == expected_diff, str(diff))
        ok_inv1 = verify.is_invariant(case, case.shipped["phi1"], ("x2",))
        disp_bad = not verify.is_invariant(case, case.shipped["phi1_display"], ("x2",))
        U = case.rep.exp_symbolic()
        prop = (case.shipped["phi1"] - Q(-360) * U[1][6]).is_zero()
        _check(checks, "phi1-properties",
               "the shipped first colour equation is invariant under the short-root "
               "translation, equals -360 times the extreme matrix entry, and the "
               "sign of its x5^2 term is forced (the displayed variant with +360 x5^2 "
               "fails invariance)", ok_inv1 and disp_bad and prop)
        b = case.shipped["b"]
        ok_invb = verify.is_invariant(case, b, ("x6",))
        minus_variant = b - 2 * 360 * x[1] * x[4] * x[6] * x[2]
        ok_sign = not verify.is_invariant(case, minus_variant, ("x6",))
        d2 = verify.gamma_derivative(case, phi2)
        ren = dict(zip(case.rep.names, case.rep.u_names))
        ok_prop = (d2 + Q(1, 240) * b.map_vars(ren)).is_zero()
        _check(checks, "b-properties",
               "the shipped thirteen-term b is invariant under the long-root "
               "translation (fixing the + sign on 360 x1 x4 x6 x2), and equals "
               "-240 times the derivative of the minor along the spherical root",
               ok_invb and ok_sign and ok_prop)
        ok_dim = len(a_basis) == 3
        ok_couple = all(
            p.coefficient({"x5": 1, "x6": 1})
            == 3 * p.coefficient({"x4": 1, "x6": 2}) - 6 * p.coefficient({"x2": 1, "x6": 3})
            for p in a_basis
        )
        _check(checks, "a-ansatz",
               "the a-space has dimension three and satisfies the coupling "
               "c(x5 x6) = 3 c(x4 x6^2) - 6 c(x2 x6^3)", ok_dim and ok_couple,
               "dimension %d" % len(a_basis))

    cap = 2 if label == "15" else grid
    all_ok = True
    details = []
    for l in range(1, cap + 1):
        for s in range(1, cap + 1):
            r = verify.check_equation_final(case, l, s, a_basis, b_basis)
            if r.feasible:
                all_ok = False
                details.append("(%d,%d) witness mu=%s" % (l, s, r.witness["mu"]))
            elif r.kernel_dim != r.gauge_dim:
                all_ok = False
    _check(checks, "final-equation",
           "the final identity has no solution with (a, b) off the slice-"
           "reparameterization line, for all bundle coefficients up to %d" % cap,
           all_ok, "; ".join(details) or "kernel equals the gauge line throughout")

    if label in ("9B", "9C"):
        rng = random.Random(seed)
        rep = case.rep
        d = len(rep.names) + 1
        a_poly = a_basis[0] if a_basis else Poly()
        b_poly = b_basis[-1] if b_basis else Poly()
        y = Poly.var("y")
        section = (y ** 2 + a_poly * y + phi1) * (b_poly * y + phi2)
        full = 0
        for _ in range(trials):
            translations = [[Q(rng.randint(-6, 6), rng.randint(1, 3)) for _ in rep.names]
                            for _ in range(d)]
            rank = verify.jacobian_rank(rep, [section] * d, translations)
            if rank == d:
                full += 1
        _check(checks, "jacobian-sampling",
               "translated sections achieve a nondegenerate Jacobian at the origin "
               "for random rational translations", full >= 1,
               "%d/%d trials of full rank %d (seed %d)" % (full, trials, d, seed))

    report = {"case": label, "rank": case.n, "grid": grid, "seed": seed,
              "checks": checks, "notes": list(case.notes)}
    return report


def run_case(label: str, n: int | None = None, grid: int = 3, seed: int = 0,
             trials: int = 20) -> dict:
    """Run one case suite; labels: 1A2, 9B, 9C, 15."""
    t0 = time.time()
    if label == "1A2":
        rep = run_case_1a2(grid if grid else 5)
    elif label in ("9B", "9C", "15"):
        if label == "9B" and n is None:
            n = 2
        if label == "9C" and n is None:
            n = 3
        rep = run_case_strict(label, n, grid, seed, trials)
    else:
        raise KeyError("unknown case label %r" % label)
    rep["elapsed_seconds"] = round(time.time() - t0, 3)
    rep["passed"] = all(c["status"] == "PASS" for c in rep["checks"])
    return rep


def render_report(rep: dict) -> str:
    lines = []
    head = "case %s" % rep["case"]
    if rep.get("rank"):
        head += " (rank %d)" % rep["rank"]
    lines.append(head)
    for c in rep["checks"]:
        lines.append("  [%s] %s: %s" % (c["status"], c["id"], c["description"]))
        if c["detail"]:
            lines.append("         %s" % c["detail"])
    for note in rep.get("notes", ()):
        lines.append("  note: %s" % note)
    lines.append("  result: %s (%.3fs)"
                 % ("PASS" if rep["passed"] else "FAIL", rep["elapsed_seconds"]))
    return "\n".join(lines)
