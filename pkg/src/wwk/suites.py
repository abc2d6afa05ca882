"""Randomized property suites behind ``wwk verify``."""
from dataclasses import dataclass, field

import numpy as np

from wwk import linalg
from wwk.interferometer import overlap, random_pair
from wwk.natural import NaturalBasisParams, ensure_dim3, natural_basis, verify_natural
from wwk.oracle import make_rng, mc_guessing_game, random_basis_search
from wwk.presets import fock_basis, two_qubit
from wwk.readout import (
    ReadoutBasis,
    amplitudes,
    canonical_basis,
    guess_probabilities,
    knowledge,
    outcome_probabilities,
    phase_sweep,
)

DIMS = (3, 9)  # half-open range of random detector dimensions
MAX_FAILURES_KEPT = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    metrics: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def fail(self, msg):
        if len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(msg)
        else:
            self.metrics["suppressed_failures"] = self.metrics.get("suppressed_failures", 0) + 1

    def worst(self, key, value):
        self.metrics[key] = max(self.metrics.get(key, -np.inf), float(value))

    def as_dict(self):
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "metrics": self.metrics,
            "failures": self.failures,
        }


def _random_dim(rng):
    return int(rng.integers(*DIMS))


def duality(seed, trials, tol=1e-9):
    """K_E^2 + V^2 = 1 for the canonical basis, <= 1 for a random basis, K_E(delta) flat."""
    res = SuiteResult("duality")
    rng = make_rng(seed)
    for k in range(trials):
        pair = random_pair(rng, _random_dim(rng))
        E = canonical_basis(pair)
        rep = knowledge(pair, E)
        sat = abs(rep.duality_slack)
        res.worst("max_canonical_slack", sat)
        if sat > tol:
            res.fail(f"trial {k}: canonical K^2+V^2-1 = {-rep.duality_slack:.3e}")
        U = linalg.random_unitaries(rng, 1, pair.dim)[0]
        W = ReadoutBasis(U.T, tuple(str(i) for i in range(pair.dim)))
        rw = knowledge(pair, W)
        res.worst("max_random_excess", -rw.duality_slack)
        if rw.duality_slack < -tol:
            res.fail(f"trial {k}: random basis violates K^2+V^2<=1 by {-rw.duality_slack:.3e}")
        sw = phase_sweep(pair, E, 64)
        flat = float(np.nanmax(np.abs(sw.K - rep.knowledge)))
        res.worst("max_canonical_phase_spread", flat)
        if flat > tol:
            res.fail(f"trial {k}: canonical K(delta) varies by {flat:.3e}")
        res.checked += 1
    return res


def natural(seed, trials, grid=64):
    """Construct and verify natural bases; check the free phases change nothing observable."""
    res = SuiteResult("natural")
    rng = make_rng(seed)
    for k in range(trials):
        pair = random_pair(rng, _random_dim(rng))
        if abs(overlap(pair)) > 1 - 1e-10:
            continue
        pair = ensure_dim3(pair)
        nb = natural_basis(pair)
        chk = verify_natural(pair, nb, grid=grid)
        res.worst("max_gram_error", chk.max_gram_error)
        res.worst("max_profile_error", chk.max_profile_error)
        if not chk.passed:
            res.fail(f"trial {k}: {chk}")

        a, b = amplitudes(pair, nb)
        v_abs = np.sqrt(abs(overlap(pair)))
        blind = max(abs(b[1]), abs(a[2]))
        zero_err = max(abs(abs(a[0]) - v_abs), abs(abs(b[0]) - v_abs))
        res.worst("max_blind_overlap", blind)
        res.worst("max_zero_overlap_error", zero_err)
        if blind > 1e-12 or zero_err > 1e-12:
            res.fail(f"trial {k}: blind {blind:.2e}, |<0|chi>| error {zero_err:.2e}")

        eta, vph = rng.uniform(-np.pi, np.pi, size=2)
        alt = natural_basis(pair, NaturalBasisParams(eta=float(eta), v_phase=float(vph)))
        s1 = phase_sweep(pair, nb, grid)
        s2 = phase_sweep(pair, alt, grid)
        inv = float(np.nanmax(np.abs(s1.K - s2.K)))
        q1, _ = guess_probabilities(pair, nb)
        q2, _ = guess_probabilities(pair, alt)
        p1 = outcome_probabilities(pair, nb)
        p2 = outcome_probabilities(pair, alt)
        inv = max(inv, float(np.max(np.abs(q1[:3] - q2[:3]))), float(np.max(np.abs(p1 - p2))))
        res.worst("max_param_variation", inv)
        if inv > 1e-10:
            res.fail(f"trial {k}: (eta, v_phase) changed observables by {inv:.2e}")
        res.checked += 1
    return res


def optimality(seed, trials, pairs=200, tol=1e-9):
    """No random readout beats the canonical basis; duality holds for the best one found."""
    res = SuiteResult("optimality")
    rng = make_rng(seed)
    for k in range(pairs):
        pair = random_pair(rng, _random_dim(rng))
        sr = random_basis_search(pair, trials, seed + 1 + k)
        V = abs(overlap(pair))
        res.worst("max_excess_over_canonical", -sr.margin)
        if sr.margin < -tol:
            res.fail(f"pair {k}: random basis beats canonical by {-sr.margin:.3e}")
        if sr.best_K**2 + V**2 > 1 + tol:
            res.fail(f"pair {k}: best random K violates duality")
        res.checked += 1
    res.metrics["bases_per_pair"] = trials
    return res


def mc(seed, samples, bins=32, sigmas=5.0):
    """Monte Carlo guessing game vs closed-form phase-resolved knowledge (two qubits, alpha = beta)."""
    res = SuiteResult("mc")
    pair = two_qubit(1 / np.sqrt(2), 1 / np.sqrt(2))
    V = 0.5
    cases = {
        "natural": (fock_basis(pair), lambda d: (1 - V) / (1 + V * np.cos(d))),
        "canonical": (canonical_basis(pair), lambda d: np.full_like(d, np.sqrt(1 - V * V))),
    }
    for name, (basis, ref) in cases.items():
        out = mc_guessing_game(pair, basis, bins, samples, seed)
        z = np.abs(out.K_hat - ref(out.delta_center)) / out.stderr
        res.worst(f"max_z_{name}", float(np.nanmax(z)))
        for b in np.flatnonzero(~(z <= sigmas)):
            res.fail(f"{name} bin {b}: K_hat={out.K_hat[b]:.6f}, z={z[b]:.2f}")
        res.checked += bins
    return res


SUITES = {"duality": duality, "natural": natural, "optimality": optimality, "mc": mc}
