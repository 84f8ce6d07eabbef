"""Acceptance checks: every oracle-backed identity the package must satisfy.

One test per numbered check; each prints a PASS/FAIL line (visible with
``pytest -s``).  Two checks assert published claims that are mathematically
unattainable and FAIL BY DESIGN, documenting the discrepancy instead of
hiding it:

* ``test_03_gamma_bilinear_correspondence_pattern`` expects 14 of 15 recipe
  cells to match exactly, but exact closure of the fifteen-generator algebra
  (check 2) forces the S2 sign flip, so only 13 cells can match.  The two
  requirements are jointly unsatisfiable; this suite keeps the literal
  14-exact expectation and the regular suite pins the true 13+1+1 pattern.

* ``test_09b_area_product_under_all_fifteen`` expects the product of the two
  marginal phase-space areas to be invariant under every single-generator
  flow.  That holds for the eleven flows that do not correlate the
  oscillators, but the four cross-oscillator squeezes (K3, Q3, G1, G2) grow
  both marginal areas like cosh(2 theta), so the product exceeds pi^2 by
  construction (det M = 1 constrains the full 4-volume, not the product of
  marginals).  The regular suite pins both the eleven-flow invariance and
  the always-true 4-volume invariant.
"""

import time

import numpy as np

from oscsym.algebra import (
    alge11_table,
    anticommutator,
    check_isomorphism,
    o33gen_table,
    table1_correspondence,
    verify_algebra,
)
from oscsym.families import (
    FIFTEEN_LABELS,
    TENFOLD_LABELS,
    build_generator_set,
    gamma_matrices,
)
from oscsym.fock import (
    expansion_coefficient,
    expansion_overlap,
    gauss_hermite,
    moments,
    rho_reduced,
    rho_series,
    series_weights,
    thermal_state,
    verify_fock_commutators,
    wigner_radius,
)
from oscsym.phase_space import (
    areas,
    coupling_transform,
    eta_from_temperature,
    evolve,
    gaussian_entropy,
    gaussian_purity,
    generator_to_transform,
    reduce_oscillator,
    symplectic_deviation,
    temperature_from_eta,
    vacuum_state,
)

EXTENSION_LABELS = ("S1", "S2", "G1", "G2", "G3")
ETA_GRID = (0.25, 0.5, 1.0, 1.5)


def _report(num: str, name: str, ok: bool) -> bool:
    print(f"[acceptance {num}] {name}: {'PASS' if ok else 'FAIL'}")
    return ok


def _closed_entropy(eta: float) -> float:
    c2, s2 = np.cosh(eta) ** 2, np.sinh(eta) ** 2
    return float(c2 * np.log(c2) - s2 * np.log(s2)) if eta else 0.0


def _reduced_block(eta: float) -> np.ndarray:
    state = evolve(vacuum_state(), coupling_transform(eta))
    return reduce_oscillator(state, 1)


def test_01_bracket_table_three_representations():
    """Ten-generator table holds for the 4x4, 5x5 and Fock realizations."""
    start = time.perf_counter()
    reps = [
        verify_algebra(build_generator_set("sp4_4"), alge11_table(), 1e-12),
        verify_algebra(build_generator_set("o32_5"), alge11_table(), 1e-12),
        verify_fock_commutators(8, 1e-12),
    ]
    elapsed = time.perf_counter() - start
    worst = max(r.max_residual for r in reps)
    ok = worst <= 1e-12 and elapsed < 1.0
    _report("01", f"ten-generator table x3 (worst {worst:.2e}, {elapsed:.2f}s)", ok)
    assert all(r.passed for r in reps), [r.summary() for r in reps]
    assert elapsed < 1.0


def test_02_extended_table_and_local_isomorphism():
    """Fifteen-generator table for sl4r_4 and o33_6; tables entrywise equal."""
    start = time.perf_counter()
    sl4r = build_generator_set("sl4r_4")
    o33 = build_generator_set("o33_6")
    rep_a = verify_algebra(sl4r, o33gen_table(), 1e-12)
    rep_b = verify_algebra(o33, o33gen_table(), 1e-12)
    iso = check_isomorphism(sl4r, o33, 1e-12)
    elapsed = time.perf_counter() - start
    ok = rep_a.passed and rep_b.passed and iso.passed and elapsed < 1.0
    _report("02", f"fifteen-generator table + isomorphism "
                  f"(gap {iso.max_deviation:.2e}, {elapsed:.2f}s)", ok)
    assert rep_a.passed, rep_a.summary()
    assert rep_b.passed, rep_b.summary()
    assert iso.passed, iso.summary()
    assert elapsed < 1.0


def test_03_gamma_bilinear_correspondence_pattern():
    """FAILS BY DESIGN: expects 14 EXACT + L1 factor i; the true pattern is
    13 EXACT + S2 SIGN_FLIP + L1 factor i.

    The S2 recipe (i/2) g1 g2 reproduces the printed extension matrix, but
    with that sign [S1, S2] = -i S3 and the fifteen-generator table of
    check 2 cannot close; the shipped family therefore carries the flipped
    S2, and a checker honest about the recipes must report the flip.
    Keeping this test red documents that 14-exact and exact closure are
    jointly unsatisfiable.
    """
    report = table1_correspondence(1e-12)
    n_exact = report.count("EXACT")
    l1 = report.entries["L1"]
    pattern_ok = (
        n_exact == 14
        and report.with_status("FACTOR_MISMATCH") == ["L1"]
        and l1.ratio is not None
        and abs(l1.ratio - 1j) <= 1e-12
    )
    _report("03", f"bilinear recipes: {report.summary()} (expected 14 EXACT)",
            pattern_ok)
    assert pattern_ok, (
        f"expected 14 EXACT with only L1 off by factor i; got {report.summary()} "
        "(S2 is a sign flip forced by closure of the fifteen-generator table; "
        "see this test's docstring)"
    )


def test_04_clifford_relations():
    """{g_mu, g_nu} = 2 diag(+,-,-,-) I and g5 anticommutation at 1e-14."""
    g = gamma_matrices()
    metric = np.diag([1.0, -1.0, -1.0, -1.0])
    order = ("g0", "g1", "g2", "g3")
    worst = 0.0
    for mu, a in enumerate(order):
        for nu, b in enumerate(order):
            r = anticommutator(g[a], g[b]) - 2 * metric[mu, nu] * np.eye(4)
            worst = max(worst, float(np.abs(r).max()))
    g5_worst = max(float(np.abs(anticommutator(g["g5"], g[m])).max())
                   for m in order)
    ok = worst <= 1e-14 and g5_worst <= 1e-14
    _report("04", f"Clifford relations (worst {max(worst, g5_worst):.2e})", ok)
    assert ok


def test_05_purity_identity():
    """Series purity, Gaussian purity and 1/cosh(2 eta) agree pairwise."""
    worst = 0.0
    for eta in ETA_GRID:
        series = moments(eta, 200).purity
        gauss = gaussian_purity(_reduced_block(eta))
        closed = 1.0 / np.cosh(2 * eta)
        worst = max(worst, abs(series - gauss), abs(series - closed),
                    abs(gauss - closed))
    at_one = moments(1.0, 200).purity
    ok = worst <= 1e-9 and abs(at_one - 0.2658022) <= 1e-6
    _report("05", f"purity identity (worst gap {worst:.2e}, "
                  f"purity(1) = {at_one:.7f})", ok)
    assert worst <= 1e-9
    assert abs(at_one - 0.2658022) <= 1e-6


def test_06_entropy_identity():
    """Series, Gaussian, closed-form and thermal entropies agree pairwise."""
    worst = 0.0
    for eta in ETA_GRID:
        series = moments(eta, 200).entropy
        gauss = gaussian_entropy(_reduced_block(eta))
        closed = _closed_entropy(eta)
        thermal = thermal_state(temperature_from_eta(eta)).entropy()
        values = (series, gauss, closed, thermal)
        worst = max(worst, max(values) - min(values))
    ok = worst <= 1e-9
    _report("06", f"entropy identity, four routes (worst gap {worst:.2e})", ok)
    assert ok


def test_07_expansion_identity():
    """Quadrature overlaps equal tanh(eta)^k / cosh(eta) for k <= 8."""
    start = time.perf_counter()
    worst = 0.0
    for eta in (0.3, 0.8, 1.2):
        for k in range(9):
            gap = abs(expansion_overlap(eta, k) - expansion_coefficient(eta, k))
            worst = max(worst, gap)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 10.0
    _report("07", f"expansion overlaps (worst {worst:.2e}, {elapsed:.2f}s)", ok)
    assert worst <= 1e-8
    assert elapsed < 10.0


def test_08_density_matrix_identity():
    """Closed form vs 60-term series on a 21x21 grid; unit trace by quadrature."""
    eta = 0.8
    grid = np.linspace(-3.0, 3.0, 21)
    x, xp = np.meshgrid(grid, grid)
    gap = float(np.abs(rho_series(eta, x, xp, kmax=60)
                       - rho_reduced(eta, x, xp)).max())
    nodes, weights = gauss_hermite(128)
    trace_gap = abs(float(weights @ rho_reduced(eta, nodes, nodes)) - 1.0)
    ok = gap <= 1e-9 and trace_gap <= 1e-9
    _report("08", f"density-matrix identity (grid gap {gap:.2e}, "
                  f"trace gap {trace_gap:.2e})", ok)
    assert gap <= 1e-9
    assert trace_gap <= 1e-9


def test_09a_canonical_split_and_determinants():
    """Sp(4) flows canonical at +-0.7; extension flows break the form; det 1."""
    canonical_worst = 0.0
    for label in TENFOLD_LABELS:
        for theta in (0.7, -0.7):
            canonical_worst = max(
                canonical_worst,
                symplectic_deviation(generator_to_transform(label, theta)))
    extension_min = min(
        symplectic_deviation(generator_to_transform(label, 0.5))
        for label in EXTENSION_LABELS)
    det_worst = 0.0
    for label in FIFTEEN_LABELS:
        theta = 0.5 if label in EXTENSION_LABELS else 0.7
        m = generator_to_transform(label, theta)
        det_worst = max(det_worst, abs(np.linalg.det(m) - 1.0))
    ok = canonical_worst <= 1e-12 and extension_min > 0.1 and det_worst <= 1e-10
    _report("09a", f"canonical split (sp4 worst {canonical_worst:.2e}, "
                   f"extension min {extension_min:.2f}, det gap {det_worst:.2e})",
            ok)
    assert canonical_worst <= 1e-12
    assert extension_min > 0.1
    assert det_worst <= 1e-10


def test_09b_area_product_under_all_fifteen():
    """FAILS BY DESIGN: the marginal-area product is not invariant under the
    four cross-oscillator squeezes.

    For K3, Q3, G1 and G2 the flow applied to the vacuum yields marginal
    blocks (cosh(2 theta)/2) I on both oscillators, so
    A1 A2 = pi^2 cosh^2(2 theta) > pi^2 even though det M = 1: the
    determinant bounds the correlated 4-volume (2 pi)^2 sqrt(det cov), not
    the product of the two marginal determinants.  The eleven flows that
    leave the oscillators uncorrelated do preserve the product (pinned in
    the regular suite, along with the 4-volume invariant for all fifteen).
    """
    offenders = {}
    worst = 0.0
    for label in FIFTEEN_LABELS:
        theta = 0.5 if label in EXTENSION_LABELS else 0.7
        state = evolve(vacuum_state(), generator_to_transform(label, theta))
        a1, a2 = areas(state)
        gap = abs(a1 * a2 - np.pi ** 2)
        worst = max(worst, gap)
        if gap > 1e-10:
            offenders[label] = gap
    ok = worst <= 1e-10
    _report("09b", f"marginal-area product x15 (worst gap {worst:.2e})", ok)
    assert ok, (
        f"A1*A2 deviates from pi^2 for {sorted(offenders)}: the mixing "
        "squeezes correlate the oscillators and grow both marginals like "
        "cosh(2 theta); see this test's docstring"
    )


def test_10_thermal_bridge():
    """eta <-> T round trip, matched weight ladders, matched Wigner radius."""
    worst_rt = max(
        abs(temperature_from_eta(eta_from_temperature(t)) - t)
        for t in (0.5, 1.0, 2.0, 5.0))
    worst_w = 0.0
    worst_r = 0.0
    for t in (0.5, 1.0, 2.0, 5.0):
        eta = eta_from_temperature(t)
        kmax = 800
        diff = np.abs(thermal_state(t, kmax).weights - series_weights(eta, kmax))
        worst_w = max(worst_w, float(diff.max()))
        worst_r = max(worst_r,
                      abs(wigner_radius(t) - np.sqrt(np.cosh(2 * eta))))
    ok = worst_rt <= 1e-12 and worst_w <= 1e-12 and worst_r <= 1e-12
    _report("10", f"thermal bridge (roundtrip {worst_rt:.2e}, "
                  f"weights {worst_w:.2e}, radius {worst_r:.2e})", ok)
    assert worst_rt <= 1e-12
    assert worst_w <= 1e-12
    assert worst_r <= 1e-12
