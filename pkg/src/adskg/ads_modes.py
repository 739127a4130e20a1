"""Tube mode space for Klein-Gordon theory on AdS.

Solutions near an equal-radius hypercylinder decompose into frequency and
angular-momentum labelled modes with two radial channels: channel a is
regular at the origin, channel b singular.  The radial profiles are
hypergeometric in sin^2(rho); their conserved relative Wronskian is what
makes the mode-space symplectic structure hypersurface independent.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .harmonics import MultiIndex, multi_indices
from .specfun import PoleError, POLE_TOL, hyp2f1, hyp2f1_dz

__all__ = [
    "AdSParams",
    "delta_for_mass",
    "HypergeoParams",
    "hypergeo_params",
    "radial_eval",
    "radial_eval_deriv",
    "radial_wronskian",
    "ModeVector",
    "mode_vector_from_json",
    "omega_rho",
    "act_time_translation",
    "act_rotation",
    "is_real_solution",
    "random_real_mode_vector",
]

SIN2_MAX = 0.95


@dataclass(frozen=True)
class AdSParams:
    """Spatial dimension d, conformal weight Delta, curvature radius R."""

    d: int
    Delta: float
    R: float = 1.0

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("AdSParams requires d >= 3")
        if self.R <= 0.0:
            raise ValueError("AdSParams requires R > 0")
        if not self.Delta > (self.d - 1) / 2.0:
            # keeps the Gamma arguments of the first candidate solution off
            # poles for small frequencies and angular momenta
            raise ValueError("AdSParams requires Delta > (d - 1) / 2")


def delta_for_mass(m, R, d):
    """Standard weight-mass relation Delta = d/2 + sqrt(d^2/4 + m^2 R^2)."""
    return d / 2.0 + math.sqrt(d * d / 4.0 + m * m * R * R)


@dataclass(frozen=True)
class HypergeoParams:
    """Hypergeometric parameters of the two radial channels."""

    alpha_a: float
    beta_a: float
    alpha_b: float
    beta_b: float
    gamma: float

    @property
    def one_minus_alpha_a(self):
        return 1.0 - self.alpha_a

    @property
    def one_minus_beta_a(self):
        return 1.0 - self.beta_a

    @property
    def one_minus_alpha_b(self):
        return 1.0 - self.alpha_b

    @property
    def one_minus_beta_b(self):
        return 1.0 - self.beta_b


def hypergeo_params(p, omega, l):
    """Channel parameters for frequency omega and angular momentum l.

    alpha_a = (Delta - omega + l)/2, beta_a = (Delta + omega + l)/2,
    alpha_b = (Delta - omega - l - d + 2)/2, beta_b likewise with +omega,
    gamma = l + d/2.
    """
    if l < 0:
        raise ValueError("hypergeo_params requires l >= 0")
    dd = p.Delta
    return HypergeoParams(
        alpha_a=0.5 * (dd - omega + l),
        beta_a=0.5 * (dd + omega + l),
        alpha_b=0.5 * (dd - omega - l - p.d + 2.0),
        beta_b=0.5 * (dd + omega - l - p.d + 2.0),
        gamma=l + p.d / 2.0,
    )


def _check_rho(rho):
    z = math.sin(rho) ** 2
    if rho <= 0.0 or z > SIN2_MAX:
        raise ValueError(f"rho = {rho} outside the radial domain (sin^2 rho <= {SIN2_MAX})")
    return z


def _channel_pieces(p, omega, l, channel):
    hp = hypergeo_params(p, omega, l)
    if channel == "a":
        return l, hp.alpha_a, hp.beta_a, hp.gamma
    if channel == "b":
        c = 2.0 - hp.gamma
        if c <= 0.5 and abs(c - round(c)) <= POLE_TOL and round(c) <= 0:
            raise PoleError(
                f"channel b series parameter 2 - gamma = {c} is a nonpositive integer "
                f"(even d = {p.d})"
            )
        return 2.0 - p.d - l, hp.alpha_b, hp.beta_b, c
    raise ValueError(f"unknown channel {channel!r}")


def radial_eval(p, omega, l, channel, rho):
    """Radial mode profile, unit leading coefficient as rho -> 0.

    channel a: sin^l rho cos^Delta rho F(alpha_a, beta_a; gamma; sin^2 rho);
    channel b: the sin^(2-d-l) companion with the 2-gamma series.
    """
    z = _check_rho(rho)
    exp_sin, aa, bb, cc = _channel_pieces(p, omega, l, channel)
    s, c = math.sin(rho), math.cos(rho)
    return s**exp_sin * c**p.Delta * hyp2f1(aa, bb, cc, z)


def radial_eval_deriv(p, omega, l, channel, rho):
    """d/drho of radial_eval, term-wise analytic differentiation."""
    z = _check_rho(rho)
    exp_sin, aa, bb, cc = _channel_pieces(p, omega, l, channel)
    s, c = math.sin(rho), math.cos(rho)
    f = hyp2f1(aa, bb, cc, z)
    df = hyp2f1_dz(aa, bb, cc, z)
    value = s**exp_sin * c**p.Delta
    return (
        exp_sin * s ** (exp_sin - 1.0) * c ** (p.Delta + 1.0) * f
        - p.Delta * s ** (exp_sin + 1.0) * c ** (p.Delta - 1.0) * f
        + value * df * 2.0 * s * c
    )


def radial_wronskian(p, omega, l, rho):
    """tan^(d-1) rho (S^a dS^b - S^b dS^a): constant in rho.

    With unit leading coefficients its value is -(2l + d - 2).
    """
    sa = radial_eval(p, omega, l, "a", rho)
    sb = radial_eval(p, omega, l, "b", rho)
    dsa = radial_eval_deriv(p, omega, l, "a", rho)
    dsb = radial_eval_deriv(p, omega, l, "b", rho)
    return math.tan(rho) ** (p.d - 1) * (sa * dsb - sb * dsa)


class ModeVector:
    """Finite mode content of a solution in the two-channel expansion.

    entries: {(omega, levels, m): (a, b)} complex channel pairs;
    freq_grid: [(omega, weight)] discretizing the frequency integral.
    Immutable after construction.
    """

    __slots__ = ("_entries", "_grid", "_weights")

    def __init__(self, freq_grid, entries):
        grid = []
        weights = {}
        for omega, w in freq_grid:
            omega, w = float(omega), float(w)
            if w <= 0.0:
                raise ValueError("frequency weights must be positive")
            if omega in weights:
                raise ValueError("duplicate frequency in grid")
            weights[omega] = w
            grid.append(omega)
        store = {}
        for key, (a, b) in entries.items():
            omega, levels, m = key
            omega = float(omega)
            if omega not in weights:
                raise ValueError(f"entry frequency {omega} not on the grid")
            idx = MultiIndex(tuple(levels), int(m))
            store[(omega, idx.levels, idx.m)] = (complex(a), complex(b))
        self._entries = store
        self._grid = tuple(sorted(grid))
        self._weights = weights

    @property
    def freq_grid(self):
        return tuple((omega, self._weights[omega]) for omega in self._grid)

    @property
    def entries(self):
        return dict(self._entries)

    def weight(self, omega):
        return self._weights[float(omega)]

    def get(self, omega, levels, m):
        return self._entries.get((float(omega), tuple(levels), int(m)), (0.0 + 0.0j, 0.0 + 0.0j))

    def grid_is_symmetric(self, tol=0.0):
        for omega in self._grid:
            if -omega not in self._weights:
                return False
            if abs(self._weights[omega] - self._weights[-omega]) > tol:
                return False
        return True

    def same_grid(self, other):
        return self._grid == other._grid and self._weights == other._weights

    def map_entries(self, fn):
        """New ModeVector with (a, b) -> fn(omega, levels, m, a, b)."""
        new = {}
        for (omega, levels, m), (a, b) in self._entries.items():
            new[(omega, levels, m)] = fn(omega, levels, m, a, b)
        return ModeVector(self.freq_grid, new)

    def to_json(self):
        payload = {
            "freq_grid": [{"omega": omega, "weight": w} for omega, w in self.freq_grid],
            "entries": [
                {
                    "omega": omega,
                    "levels": list(levels),
                    "m": m,
                    "a": [a.real, a.imag],
                    "b": [b.real, b.imag],
                }
                for (omega, levels, m), (a, b) in sorted(self._entries.items())
            ],
        }
        return json.dumps(payload, indent=1)

    def __eq__(self, other):
        return (
            isinstance(other, ModeVector)
            and self.freq_grid == other.freq_grid
            and self._entries == other._entries
        )


def mode_vector_from_json(text):
    data = json.loads(text)
    grid = [(row["omega"], row["weight"]) for row in data["freq_grid"]]
    entries = {}
    for row in data["entries"]:
        key = (row["omega"], tuple(row["levels"]), row["m"])
        entries[key] = (complex(*row["a"]), complex(*row["b"]))
    return ModeVector(grid, entries)


def omega_rho(p, eta, zeta):
    """Mode-space symplectic structure on the hypercylinder.

    pi R^(d-1) sum_omega w(omega) sum_L (2l + d - 2)
    [eta^a(omega, L) zeta^b(-omega, -m) - eta^b(omega, L) zeta^a(-omega, -m)].
    """
    if not eta.same_grid(zeta):
        raise ValueError("mode vectors live on different frequency grids")
    total = 0.0 + 0.0j
    for (omega, levels, m), (ea, eb) in eta._entries.items():
        za, zb = zeta.get(-omega, levels, -m)
        weight = eta.weight(omega) * (2.0 * levels[0] + p.d - 2.0)
        total += weight * (ea * zb - eb * za)
    return math.pi * p.R ** (p.d - 1) * total


def act_time_translation(dt, phi):
    """Coefficient action of t -> t + dt: both channels pick e^{i omega dt}."""
    return phi.map_entries(
        lambda omega, levels, m, a, b: (
            a * complex(math.cos(omega * dt), math.sin(omega * dt)),
            b * complex(math.cos(omega * dt), math.sin(omega * dt)),
        )
    )


def act_rotation(blocks, phi):
    """Coefficient action of a rotation given per-l Wigner blocks.

    blocks: {l: matrix over multi_indices(d, l)} for every l present in
    phi; coefficients mix within fixed l and frequency:
    (R phi)^x(omega, L) = sum_L' block[L, L'] phi^x(omega, L').
    """
    d = None
    for (_, levels, _) in phi._entries:
        d = len(levels) + 2
        break
    if d is None:
        return phi
    ls = sorted({levels[0] for (_, levels, _) in phi._entries})
    label_order = {l: {(L.levels, L.m): i for i, L in enumerate(multi_indices(d, l))} for l in ls}
    for l in ls:
        if l not in blocks:
            raise ValueError(f"missing rotation block for l = {l}")
        n = len(label_order[l])
        block = np.asarray(blocks[l])
        if block.shape != (n, n):
            raise ValueError(f"rotation block for l = {l} has wrong shape")
    omegas = sorted({omega for (omega, _, _) in phi._entries})
    new_entries = {}
    for omega in omegas:
        for l in ls:
            order = label_order[l]
            vec_a = np.zeros(len(order), dtype=complex)
            vec_b = np.zeros(len(order), dtype=complex)
            hit = False
            for (levels, m), i in order.items():
                a, b = phi.get(omega, levels, m)
                if a != 0.0 or b != 0.0:
                    hit = True
                vec_a[i] = a
                vec_b[i] = b
            if not hit:
                continue
            block = np.asarray(blocks[l])
            vec_a = block @ vec_a
            vec_b = block @ vec_b
            for (levels, m), i in order.items():
                if vec_a[i] != 0.0 or vec_b[i] != 0.0:
                    new_entries[(omega, levels, m)] = (vec_a[i], vec_b[i])
    return ModeVector(phi.freq_grid, new_entries)


def is_real_solution(phi, tol=1e-12):
    """True when a(-omega, -m) = conj(a(omega, m)) and likewise for b."""
    if not phi.grid_is_symmetric():
        raise ValueError("reality predicate requires a symmetric frequency grid")
    for (omega, levels, m), (a, b) in phi._entries.items():
        a2, b2 = phi.get(-omega, levels, -m)
        if abs(a2 - np.conj(a)) > tol or abs(b2 - np.conj(b)) > tol:
            return False
    return True


def random_real_mode_vector(d, omegas, l_max, rng, amplitude=1.0):
    """Random solution satisfying the reality condition, for audits and tests.

    omegas: positive frequencies; the grid is their symmetric closure
    with unit weights.
    """
    omegas = sorted({abs(float(w)) for w in omegas})
    if any(w == 0.0 for w in omegas):
        raise ValueError("use nonzero frequencies for random real vectors")
    grid = [(w, 1.0) for w in omegas] + [(-w, 1.0) for w in omegas]
    entries = {}
    for w in omegas:
        for l in range(l_max + 1):
            for idx in multi_indices(d, l):
                a = amplitude * (rng.normal() + 1j * rng.normal())
                b = amplitude * (rng.normal() + 1j * rng.normal())
                entries[(w, idx.levels, idx.m)] = (a, b)
    full = dict(entries)
    for (w, levels, m), (a, b) in entries.items():
        full[(-w, levels, -m)] = (np.conj(a), np.conj(b))
    return ModeVector(grid, full)
