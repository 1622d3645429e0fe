"""Metropolis simulated annealing for circuit Hamiltonians too large to enumerate.

Each restart draws its own random stream from ``SeedSequence([seed, restart])``
so results are identical whatever the worker count.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numba
import numpy as np
from sklearn.base import BaseEstimator

from .errors import ParameterError, RoleError
from .poly import TIE_TOL, Assignment, SpinPolynomial, evaluate


@dataclass(frozen=True)
class AnnealConfig:
    sweeps: int = 5000
    restarts: int = 20
    t_hi: float | None = None  # None: derived from the Hamiltonian
    t_lo: float = 0.05
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        if self.sweeps < 1 or self.restarts < 1:
            raise ParameterError("sweeps and restarts must be >= 1")
        if not self.t_lo > 0:
            raise ParameterError("t_lo must be > 0")
        if self.t_hi is not None and not self.t_hi > self.t_lo:
            raise ParameterError("t_hi must exceed t_lo")
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterError("seed must fit in 64 bits")

    @classmethod
    def from_dict(cls, d: dict) -> "AnnealConfig":
        return cls(**{k: d[k] for k in ("sweeps", "restarts", "t_hi", "t_lo", "seed", "threads")
                      if k in d})


@dataclass
class SolveResult:
    best: Assignment
    best_energy: float
    restart_energies: list[float]
    expected_ground: float | None = None
    success: bool | None = None
    initial_energies: list[float] = field(default_factory=list)
    traces: list[np.ndarray] = field(default_factory=list, repr=False)


def default_t_hi(h: SpinPolynomial) -> float:
    """Twice the largest coefficient times the most terms touching one spin."""
    per_spin = [0] * h.n_spins
    cmax = 0.0
    for k, c in h.items():
        if not k:
            continue
        cmax = max(cmax, abs(c))
        for i in k:
            per_spin[i] += 1
    return max(2.0 * cmax * max(per_spin, default=1), 1.0)


def _compile_terms(h: SpinPolynomial):
    terms = [(k, c) for k, c in h.items() if k]
    coeffs = np.array([c for _, c in terms], dtype=np.float64)
    tptr = np.zeros(len(terms) + 1, dtype=np.int64)
    flat = []
    touching: list[list[int]] = [[] for _ in range(h.n_spins)]
    for t, (k, _) in enumerate(terms):
        flat.extend(k)
        tptr[t + 1] = len(flat)
        for i in k:
            touching[i].append(t)
    tspins = np.array(flat, dtype=np.int64)
    sptr = np.zeros(h.n_spins + 1, dtype=np.int64)
    sterms = []
    for i, ts in enumerate(touching):
        sterms.extend(ts)
        sptr[i + 1] = len(sterms)
    return coeffs, tptr, tspins, sptr, np.array(sterms, dtype=np.int64)


@numba.njit(cache=True, nogil=True)
def _anneal_kernel(s, coeffs, tptr, tspins, sptr, sterms, sites, uniforms, betas, trace):
    n = s.shape[0]
    energy = 0.0
    for t in range(coeffs.shape[0]):
        prod = coeffs[t]
        for q in range(tptr[t], tptr[t + 1]):
            prod *= s[tspins[q]]
        energy += prod
    best = energy
    best_s = s.copy()
    step = 0
    for sweep in range(betas.shape[0]):
        beta = betas[sweep]
        for _ in range(n):
            k = sites[step]
            u = uniforms[step]
            step += 1
            local = 0.0
            for p in range(sptr[k], sptr[k + 1]):
                t = sterms[p]
                prod = coeffs[t]
                for q in range(tptr[t], tptr[t + 1]):
                    prod *= s[tspins[q]]
                local += prod
            delta = -2.0 * local
            if delta <= 0.0 or u < math.exp(-beta * delta):
                s[k] = -s[k]
                energy += delta
                if energy < best:
                    best = energy
                    best_s[:] = s
        if trace.shape[0] > 0:
            trace[sweep] = energy
    return best_s


def _one_restart(h, arrays, cfg: AnnealConfig, t_hi: float, restart: int, keep_trace: bool):
    rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, restart]))
    n = h.n_spins
    s0 = rng.choice(np.array([-1.0, 1.0]), size=n)
    steps = cfg.sweeps * n
    sites = rng.integers(0, n, size=steps, dtype=np.int64)
    uniforms = rng.random(steps)
    if cfg.sweeps == 1:
        temps = np.array([cfg.t_lo])
    else:
        temps = t_hi * (cfg.t_lo / t_hi) ** (np.arange(cfg.sweeps) / (cfg.sweeps - 1))
    trace = np.empty(cfg.sweeps if keep_trace else 0)
    best_s = _anneal_kernel(s0.copy(), *arrays, sites, uniforms, 1.0 / temps, trace)
    word = sum(1 << i for i in range(n) if best_s[i] < 0)
    a = Assignment(n, word)
    e0 = evaluate(h, Assignment.from_spins(s0.astype(int)))
    return a, evaluate(h, a), e0, trace


def anneal(h: SpinPolynomial, expected_ground: float | None = None,
           cfg: AnnealConfig = AnnealConfig(), keep_trace: bool = False) -> SolveResult:
    """Best state found over ``cfg.restarts`` independent annealing runs.

    Energies in the result are recomputed exactly from the returned states.
    ``success`` compares the best energy with ``expected_ground`` when given.
    """
    if h.n_spins == 0:
        return SolveResult(Assignment(0, 0), h.offset, [h.offset], expected_ground,
                           None if expected_ground is None else h.offset == expected_ground)
    t_hi = cfg.t_hi if cfg.t_hi is not None else max(default_t_hi(h), 2 * cfg.t_lo)
    arrays = _compile_terms(h)
    work = lambda r: _one_restart(h, arrays, cfg, t_hi, r, keep_trace)  # noqa: E731
    if cfg.threads > 1 and cfg.restarts > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            runs = list(pool.map(work, range(cfg.restarts)))
    else:
        runs = [work(r) for r in range(cfg.restarts)]
    energies = [e for _, e, _, _ in runs]
    best_idx = int(np.argmin(energies))
    best_a, best_e = runs[best_idx][0], energies[best_idx]
    success = None
    if expected_ground is not None:
        tol = 0.0 if h.is_integral() and float(expected_ground).is_integer() else TIE_TOL
        success = abs(best_e - expected_ground) <= tol
    return SolveResult(best_a, best_e, energies, expected_ground, success,
                       [e0 for _, _, e0, _ in runs],
                       [t for _, _, _, t in runs] if keep_trace else [])


def read_wires(r: SolveResult, c, wires) -> tuple[int, ...]:
    """Bits of the named wires in the best state."""
    out = []
    for w in wires:
        if w not in c.wire_index:
            raise RoleError(f"unknown wire {w!r}")
        out.append(r.best.bit(c.wire_index[w]))
    return tuple(out)


class SimulatedAnnealer(BaseEstimator):
    """Estimator-style wrapper around :func:`anneal`.

    ``fit`` takes a :class:`SpinPolynomial` or a compiled circuit and stores
    ``best_assignment_``, ``best_energy_``, ``restart_energies_`` and
    ``success_``. Hyperparameters round-trip through ``get_params`` /
    ``set_params`` so the solver can be cloned and grid-searched.
    """

    def __init__(self, sweeps=5000, restarts=20, t_hi=None, t_lo=0.05, seed=0, threads=1):
        self.sweeps = sweeps
        self.restarts = restarts
        self.t_hi = t_hi
        self.t_lo = t_lo
        self.seed = seed
        self.threads = threads

    def _config(self) -> AnnealConfig:
        return AnnealConfig(self.sweeps, self.restarts, self.t_hi, self.t_lo, self.seed,
                            self.threads)

    def fit(self, problem, expected_ground=None):
        circuit = None
        if not isinstance(problem, SpinPolynomial):
            circuit = problem
            if expected_ground is None:
                expected_ground = circuit.ground_energy_expected
            problem = circuit.hamiltonian
        res = anneal(problem, expected_ground, self._config())
        self.result_ = res
        self.circuit_ = circuit
        self.best_assignment_ = res.best
        self.best_energy_ = res.best_energy
        self.restart_energies_ = res.restart_energies
        self.success_ = res.success
        return self

    def predict(self, wires):
        """Read named wires of the fitted circuit."""
        if getattr(self, "circuit_", None) is None:
            raise RoleError("predict needs a circuit passed to fit")
        return read_wires(self.result_, self.circuit_, wires)

    def config(self) -> AnnealConfig:
        return self._config()

    def with_seed(self, seed: int) -> "SimulatedAnnealer":
        return SimulatedAnnealer(**{**self.get_params(), "seed": seed})

