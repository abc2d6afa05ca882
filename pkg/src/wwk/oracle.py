"""Independent numerical checks of the readout formulas.

Nothing here evaluates a closed-form knowledge expression. The Monte Carlo
game plays the guessing experiment event by event, the basis search samples
Haar-random readouts, and the quadrature check integrates the phase-resolved
quantities over the screen.

Randomness: ``numpy.random.Generator(PCG64(seed))``. Work is split into shards
seeded ``seed + shard_index`` so results do not depend on scheduling.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from wwk import linalg
from wwk._backend import kernels
from wwk.readout import (
    PATH_A,
    ReadoutBasis,
    canonical_basis,
    guess_probabilities,
    knowledge,
    outcome_probabilities,
    phase_sweep,
)

MC_GRID = 2**14
MC_SHARD = 2**18


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class MCBins:
    """Per-bin tallies of the guessing game; ``K_hat``/``stderr`` are NaN in empty bins."""

    delta_center: np.ndarray
    n: np.ndarray
    n_correct: np.ndarray
    K_hat: np.ndarray
    stderr: np.ndarray

    @property
    def defined(self):
        return self.n > 0

    def rows(self):
        for k in range(self.n.size):
            yield {
                "delta_center": float(self.delta_center[k]),
                "n": int(self.n[k]),
                "n_correct": int(self.n_correct[k]),
                "K_hat": float(self.K_hat[k]),
                "stderr": float(self.stderr[k]),
            }


def _event_tables(pair, basis, grid):
    # branch amplitudes <W_i|<psi_delta| applied to each path, summed
    w = np.conj(basis.vectors)
    amp_a = w @ pair.chi_a
    amp_b = w @ pair.chi_b
    deltas = 2.0 * np.pi * np.arange(grid) / grid
    amp = 0.5 * (amp_a[:, None] + np.exp(-1j * deltas)[None, :] * amp_b[:, None])
    weight = np.abs(amp) ** 2  # (n, grid)
    cdf = np.cumsum(weight.ravel())
    cdf /= cdf[-1]
    cdf[-1] = 1.0
    wa = np.abs(amp_a) ** 2
    wb = np.abs(amp_b) ** 2
    tot = wa + wb
    post_a = np.where(tot > 0, wa / np.where(tot > 0, tot, 1.0), 0.5)
    return cdf, post_a


def mc_guessing_game(pair, basis, bins, samples, seed, grid=MC_GRID, shard=MC_SHARD, workers=1):
    """Simulate the which-way guessing game and tally success per phase bin.

    Each event draws (outcome i, screen phase delta) jointly from the detection
    law on a ``grid``-point phase lattice, then the true path from its
    posterior given the outcome, and scores the strategy's guess for outcome i.
    Bins are ``[b w, (b+1) w)`` with ``w = 2 pi / bins``.

    Parameters
    ----------
    pair : DetectorPair
    basis : ReadoutBasis
    bins, samples : int
        Both at least 1.
    seed : int
        Shard ``k`` uses ``seed + k``.
    grid : int
        Phase lattice size for inverse-CDF sampling.
    shard : int
        Events per shard.
    workers : int
        Threads used to run shards; does not affect the result.

    Returns
    -------
    MCBins
    """
    if bins < 1 or samples < 1:
        raise ValueError("bins and samples must be >= 1")
    cdf, post_a = _event_tables(pair, basis, grid)
    _, guess = guess_probabilities(pair, basis)
    guess_a = np.array([g == PATH_A for g in guess], dtype=np.uint8)

    sizes = [shard] * (samples // shard)
    if samples % shard:
        sizes.append(samples % shard)

    def run(k):
        rng = make_rng(seed + k)
        u_event = rng.random(sizes[k])
        u_path = rng.random(sizes[k])
        return kernels.mc_tally(cdf, u_event, u_path, grid, post_a, guess_a, bins)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(run, range(len(sizes))))
    else:
        parts = [run(k) for k in range(len(sizes))]
    n = np.sum([p[0] for p in parts], axis=0).astype(np.int64)
    nc = np.sum([p[1] for p in parts], axis=0).astype(np.int64)

    with np.errstate(invalid="ignore", divide="ignore"):
        f = nc / n
        K_hat = np.where(n > 0, 2.0 * f - 1.0, np.nan)
        stderr = np.where(n > 0, 2.0 * np.sqrt(f * (1.0 - f) / n), np.nan)
    centers = (np.arange(bins) + 0.5) * 2.0 * np.pi / bins
    return MCBins(delta_center=centers, n=n, n_correct=nc, K_hat=K_hat, stderr=stderr)


@dataclass(frozen=True)
class SearchResult:
    best_K: float
    best_basis: ReadoutBasis
    K_canonical: float
    margin: float


def random_basis_search(pair, trials, seed, chunk=4096):
    """Best knowledge over ``trials`` Haar-random readout bases vs the canonical basis."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = make_rng(seed)
    d = pair.dim
    best_K = -np.inf
    best = None
    done = 0
    while done < trials:
        c = min(chunk, trials - done)
        u = linalg.random_unitaries(rng, c, d)
        rows = np.ascontiguousarray(np.swapaxes(u, 1, 2))
        ks = kernels.batch_knowledge(pair.chi_a, pair.chi_b, rows)
        j = int(np.argmax(ks))
        if ks[j] > best_K:
            best_K = float(ks[j])
            best = rows[j]
        done += c
    basis = ReadoutBasis(best, tuple(f"R{k}" for k in range(d)))
    K_can = knowledge(pair, canonical_basis(pair)).knowledge
    return SearchResult(best_K=best_K, best_basis=basis, K_canonical=K_can, margin=K_can - best_K)


@dataclass(frozen=True)
class QuadratureResiduals:
    outcome: np.ndarray  # |mean_delta p_i(delta) - p_i / 2| per outcome
    knowledge: float  # |P-weighted mean of K(delta) - K|

    @property
    def max(self):
        return max(float(self.outcome.max(initial=0.0)), self.knowledge)


def quadrature_check(pair, basis, points):
    """Screen-average identities on a uniform periodic grid of ``points`` phases."""
    if points < 16 or points & (points - 1):
        raise ValueError("points must be a power of two >= 16")
    sweep = phase_sweep(pair, basis, points)
    r1 = np.abs(sweep.joint.mean(axis=0) - outcome_probabilities(pair, basis) / 2.0)
    ok = sweep.defined
    r2 = abs(np.sum(sweep.P[ok] * sweep.K[ok]) / np.sum(sweep.P[ok]) - knowledge(pair, basis).knowledge)
    return QuadratureResiduals(outcome=r1, knowledge=r2)
