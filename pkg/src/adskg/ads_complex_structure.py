"""Complex structures on the AdS tube mode space.

A candidate complex structure acts per (frequency, angular momentum)
through a 2x2 matrix of j-factors on the (a, b) radial channels.  This
module evaluates the full condition system for such an action (square to
minus one, symplectic compatibility, reality, positivity of the induced
real product), the recurrences imposed by commutation with the boost
generators, and the Gamma-function candidate solutions of those
recurrences.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .ads_modes import is_real_solution, omega_rho
from .specfun import PoleError, log_gamma_signed

__all__ = [
    "JFactors",
    "jfactors_from_json",
    "ConditionReport",
    "apply_J",
    "check_conditions",
    "g_rho",
    "boost_recurrence_residual",
    "boost_recurrence_residual_ba",
    "candidate_jab",
    "complete_nondiagonal",
    "diagonal_jfactors",
    "candidate_jfactors",
    "diagonal_boost_mismatch",
]


class JFactors:
    """Per-(omega, l) complex 2x2 action (jaa, jab; jba, jbb) on (a, b)."""

    __slots__ = ("_table",)

    def __init__(self, table):
        store = {}
        for (omega, l), (jaa, jab, jba, jbb) in table.items():
            store[(float(omega), int(l))] = (
                complex(jaa),
                complex(jab),
                complex(jba),
                complex(jbb),
            )
        self._table = store

    @property
    def table(self):
        return dict(self._table)

    def keys(self):
        return sorted(self._table)

    def get(self, omega, l):
        key = (float(omega), int(l))
        if key not in self._table:
            raise KeyError(f"no j-factors at (omega, l) = {key}")
        return self._table[key]

    def has(self, omega, l):
        return (float(omega), int(l)) in self._table

    def to_json(self):
        rows = []
        for (omega, l) in self.keys():
            jaa, jab, jba, jbb = self._table[(omega, l)]
            rows.append(
                {
                    "omega": omega,
                    "l": l,
                    "jaa": [jaa.real, jaa.imag],
                    "jab": [jab.real, jab.imag],
                    "jba": [jba.real, jba.imag],
                    "jbb": [jbb.real, jbb.imag],
                }
            )
        return json.dumps(rows, indent=1)


def jfactors_from_json(text):
    rows = json.loads(text)
    table = {}
    for row in rows:
        table[(row["omega"], row["l"])] = (
            complex(*row["jaa"]),
            complex(*row["jab"]),
            complex(*row["jba"]),
            complex(*row["jbb"]),
        )
    return JFactors(table)


def apply_J(jf, phi):
    """Entrywise action: (J phi)^a = jaa phi^a + jab phi^b, and likewise ^b."""

    def act(omega, levels, m, a, b):
        jaa, jab, jba, jbb = jf.get(omega, levels[0])
        return (jaa * a + jab * b, jba * a + jbb * b)

    return phi.map_entries(act)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the full condition system over a frequency-symmetric grid.

    residuals holds the worst absolute residual per named condition;
    case is "diagonal", "nondiagonal" or "invalid".
    """

    reality_ok: bool
    square_ok: bool
    compat_ok: bool
    offdiag_ok: bool
    real_products_ok: bool
    case: str
    positivity_ok: bool
    residuals: dict

    @property
    def essential_ok(self):
        return self.reality_ok and self.square_ok and self.compat_ok and self.offdiag_ok


def _case_of_entry(jaa, jab, jba, jbb, tol):
    scale = max(1.0, abs(jaa), abs(jab), abs(jba), abs(jbb))
    diag = (
        abs(jab) <= tol * scale
        and abs(jba) <= tol * scale
        and abs(jaa - jbb) <= tol * scale
        and abs(jaa.real) <= tol * scale
        and abs(abs(jaa.imag) - 1.0) <= tol * scale
    )
    nondiag = (
        abs(jab.real) > tol * scale
        and abs(jaa.imag) <= tol * scale
        and abs(jab.imag) <= tol * scale
        and abs(jba.imag) <= tol * scale
        and abs(jbb.imag) <= tol * scale
        and abs(jbb + jaa) <= tol * scale
    )
    if diag:
        return "diagonal"
    if nondiag:
        return "nondiagonal"
    return "invalid"


def check_conditions(jf, grid=None, tol=1e-10):
    """Evaluate every condition of the 2x2 action as residuals.

    grid defaults to all stored (omega, l) keys and must be symmetric in
    omega.  Positivity holds only in the nondiagonal case, through
    Sylvester's criterion on the induced quadratic form: jba > 0 with
    jab < 0 (the determinant is already pinned to one by the square
    condition).
    """
    keys = sorted(grid) if grid is not None else jf.keys()
    names = (
        "square_a",
        "square_b",
        "offdiag_ab",
        "offdiag_ba",
        "compat",
        "real_aa_ba",
        "real_bb_ab",
        "real_ab_ba",
        "reality",
    )
    res = {name: 0.0 for name in names}
    cases = set()
    positivity = True
    for (omega, l) in keys:
        jaa, jab, jba, jbb = jf.get(omega, l)
        scale = max(1.0, abs(jaa) ** 2, abs(jab * jba))
        res["square_a"] = max(res["square_a"], abs(jaa * jaa + jab * jba + 1.0) / scale)
        res["square_b"] = max(res["square_b"], abs(jbb * jbb + jab * jba + 1.0) / scale)
        scale_off = max(1.0, abs(jab), abs(jba)) * max(1.0, abs(jaa + jbb))
        res["offdiag_ab"] = max(res["offdiag_ab"], abs(jab * (jaa + jbb)) / scale_off)
        res["offdiag_ba"] = max(res["offdiag_ba"], abs(jba * (jaa + jbb)) / scale_off)
        res["compat"] = max(
            res["compat"],
            abs(jaa * np.conj(jbb) - jba * np.conj(jab) - 1.0) / scale,
        )
        res["real_aa_ba"] = max(
            res["real_aa_ba"], abs((jaa * np.conj(jba)).imag) / max(1.0, abs(jaa * jba))
        )
        res["real_bb_ab"] = max(
            res["real_bb_ab"], abs((jbb * np.conj(jab)).imag) / max(1.0, abs(jbb * jab))
        )
        res["real_ab_ba"] = max(
            res["real_ab_ba"], abs((jab * np.conj(jba)).imag) / max(1.0, abs(jab * jba))
        )
        if not jf.has(-omega, l):
            raise ValueError("condition grid must be symmetric in omega")
        m_jaa, m_jab, m_jba, m_jbb = jf.get(-omega, l)
        rel = max(
            abs(m_jaa - np.conj(jaa)),
            abs(m_jab - np.conj(jab)),
            abs(m_jba - np.conj(jba)),
            abs(m_jbb - np.conj(jbb)),
        ) / max(1.0, abs(jaa), abs(jab), abs(jba), abs(jbb))
        res["reality"] = max(res["reality"], rel)
        case = _case_of_entry(jaa, jab, jba, jbb, tol)
        cases.add(case)
        if case == "nondiagonal":
            positivity = positivity and (jba.real > 0.0 and jab.real < 0.0)
        else:
            positivity = False
    reality_ok = res["reality"] <= tol
    square_ok = res["square_a"] <= tol and res["square_b"] <= tol
    compat_ok = res["compat"] <= tol
    offdiag_ok = res["offdiag_ab"] <= tol and res["offdiag_ba"] <= tol
    real_products_ok = max(res["real_aa_ba"], res["real_bb_ab"], res["real_ab_ba"]) <= tol
    if cases == {"diagonal"}:
        case = "diagonal"
    elif cases == {"nondiagonal"}:
        case = "nondiagonal"
    else:
        case = "invalid"
    if not (reality_ok and square_ok and compat_ok and offdiag_ok):
        case = "invalid"
    return ConditionReport(
        reality_ok=reality_ok,
        square_ok=square_ok,
        compat_ok=compat_ok,
        offdiag_ok=offdiag_ok,
        real_products_ok=real_products_ok,
        case=case,
        positivity_ok=positivity and case != "invalid",
        residuals=res,
    )


def g_rho(p, jf, phi):
    """Induced real quadratic form g(phi, phi) for a real solution phi.

    pi R^(d-1) sum w(omega) sum_L (2l + d - 2)
    [jba |phi^a|^2 - jab |phi^b|^2 - 2 jaa Re(phi^a conj(phi^b))].
    """
    if not is_real_solution(phi):
        raise ValueError("g_rho requires a real solution")
    total = 0.0 + 0.0j
    for (omega, levels, m), (a, b) in phi.entries.items():
        jaa, jab, jba, _ = jf.get(omega, levels[0])
        weight = phi.weight(omega) * (2.0 * levels[0] + p.d - 2.0)
        total += weight * (
            jba * abs(a) ** 2 - jab * abs(b) ** 2 - 2.0 * jaa * (a * np.conj(b)).real
        )
    value = math.pi * p.R ** (p.d - 1) * total
    return float(value.real) if abs(value.imag) <= 1e-10 * max(1.0, abs(value)) else value


def _boost_factor_minus(p, omega, l):
    dd, d = p.Delta, p.d
    return (dd + omega - l - d) * (dd - omega + l) / ((2.0 * l + d) * (2.0 * l + d - 2.0))


def _boost_factor_plus(p, omega, l):
    dd, d = p.Delta, p.d
    return (dd - omega - l - d) * (dd + omega + l) / ((2.0 * l + d) * (2.0 * l + d - 2.0))


def boost_recurrence_residual(p, jab, omega, l):
    """Residuals of the two independent boost commutation conditions.

    res_minus = |jab(omega-1, l+1) + jab(omega, l) f_minus| and
    res_plus = |jab(omega+1, l+1) + jab(omega, l) f_plus| with the
    rational factors f built from (Delta, omega, l, d).  jab is a callable
    (omega, l) -> complex.
    """
    if l < 0:
        raise ValueError("boost residuals require l >= 0")
    base = jab(omega, l)
    res_minus = abs(jab(omega - 1.0, l + 1) + base * _boost_factor_minus(p, omega, l))
    res_plus = abs(jab(omega + 1.0, l + 1) + base * _boost_factor_plus(p, omega, l))
    return res_minus, res_plus


def boost_recurrence_residual_ba(p, jba, omega, l):
    """Companion residuals for the jba side.

    jba = -1/jab turns the jab recurrences into
    jba(omega-+1, l+1) f = -jba(omega, l); stated here directly so the
    two sides can be audited independently.
    """
    if l < 0:
        raise ValueError("boost residuals require l >= 0")
    base = jba(omega, l)
    res_minus = abs(jba(omega - 1.0, l + 1) * _boost_factor_minus(p, omega, l) + base)
    res_plus = abs(jba(omega + 1.0, l + 1) * _boost_factor_plus(p, omega, l) + base)
    return res_minus, res_plus


def _gamma_product(numerator, denominator):
    """exp(sum log|Gamma| numerator - denominator) with sign tracking."""
    log_total = 0.0
    sign = 1
    for x in numerator:
        g = log_gamma_signed(x)
        if g.is_pole:
            raise PoleError(f"Gamma pole at argument {x}")
        log_total += g.log_abs
        sign *= g.sign
    for x in denominator:
        g = log_gamma_signed(x)
        if g.is_pole:
            raise PoleError(f"Gamma pole at argument {x}")
        log_total -= g.log_abs
        sign *= g.sign
    return sign * math.exp(log_total)


def candidate_jab(which, p, omega, l):
    """The four Gamma-ratio solutions of the boost recurrences.

    1: (-1)^l G(aa) G(ba) / [G(ab) G(bb) G(g) G(g-1)]
    2: (-1)^l G(1-ab) G(1-bb) / [G(1-aa) G(1-ba) G(g) G(g-1)]
    3: 1 / [G(ab) G(bb) G(1-aa) G(1-ba) G(g) G(g-1)]
    4: G(aa) G(ba) G(1-ab) G(1-bb) / [G(g) G(g-1)]
    with aa/ba the channel-a parameter pair, ab/bb the channel-b pair,
    g = l + d/2.  Real for real inputs; poles raise with the argument.
    """
    from .ads_modes import hypergeo_params

    hp = hypergeo_params(p, omega, l)
    g_pair = (hp.gamma, hp.gamma - 1.0)
    if which == 1:
        val = _gamma_product((hp.alpha_a, hp.beta_a), (hp.alpha_b, hp.beta_b) + g_pair)
        return (-1.0) ** l * val
    if which == 2:
        val = _gamma_product(
            (hp.one_minus_alpha_b, hp.one_minus_beta_b),
            (hp.one_minus_alpha_a, hp.one_minus_beta_a) + g_pair,
        )
        return (-1.0) ** l * val
    if which == 3:
        return _gamma_product(
            (),
            (hp.alpha_b, hp.beta_b, hp.one_minus_alpha_a, hp.one_minus_beta_a) + g_pair,
        )
    if which == 4:
        return _gamma_product(
            (hp.alpha_a, hp.beta_a, hp.one_minus_alpha_b, hp.one_minus_beta_b),
            g_pair,
        )
    raise ValueError("candidate index must be 1..4")


def complete_nondiagonal(jab, jaa=0.0):
    """Fill a nondiagonal 2x2 entry from its jab value.

    jba = -(1 + jaa^2)/jab and jbb = -jaa satisfy the square, compat and
    off-diagonal conditions by construction; jab must be real nonzero.
    """
    jab = complex(jab)
    jaa = complex(jaa)
    if jab == 0.0:
        raise ValueError("jab = 0 degenerates to the diagonal case")
    if abs(jab.imag) > 1e-14 * abs(jab) or abs(jaa.imag) > 1e-14 * max(1.0, abs(jaa)):
        raise ValueError("nondiagonal entries must be real")
    jba = -(1.0 + jaa * jaa) / jab
    return (jaa, jab, jba, -jaa)


def diagonal_jfactors(grid):
    """The sign-split diagonal structure: +-i by the sign of omega.

    omega = 0 is excluded; the reality condition forces the sign split
    and makes the choice impossible there.
    """
    table = {}
    for (omega, l) in grid:
        if omega == 0.0:
            raise ValueError("the diagonal case does not work at omega = 0")
        v = 1.0j if omega > 0 else -1.0j
        table[(omega, l)] = (v, 0.0, 0.0, v)
    return JFactors(table)


def candidate_jfactors(which, p, grid, jaa=0.0):
    """JFactors built by completing a candidate jab over a grid."""
    table = {}
    for (omega, l) in grid:
        table[(omega, l)] = complete_nondiagonal(candidate_jab(which, p, omega, l), jaa)
    return JFactors(table)


def diagonal_boost_mismatch(omega):
    """Whether the infinitesimal boost detects the diagonal case's failure.

    The frequency shift omega -> omega - 1 crosses zero exactly for
    0 < omega < 1, flipping the sign-split diagonal factor there.
    """
    if omega <= 0.0:
        raise ValueError("stated for positive frequencies")
    return omega < 1.0
