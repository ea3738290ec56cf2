"""Lemma-level suites over fixed default grids (used by ``selftest`` and the acceptance tests)."""

from __future__ import annotations

from dataclasses import dataclass

from .char_sums import (
    binomial_gauss_check,
    davenport_hasse_check,
    dh_specialization_check,
    gauss_bridge_check,
    gauss_inverse_check,
    jacobi_gauss_check,
    phi_tt1_sum,
    theta_expansion_check,
)
from .characters import additive_sum_check, orthogonality_check
from .identities import field_from_q
from .padic import (
    floor_identity_check,
    gamma_bridge_check,
    gamma_multiplication_check,
    gamma_reflection_check,
    gross_koblitz_check,
)
from .padic.gamma import gamma_direct, gamma_int
from .report import Report, bool_report
from .varieties import g_hypothesis


@dataclass
class SuiteConfig:
    orth_qs: tuple[int, ...] = (7, 9, 25)
    gauss_qs: tuple[int, ...] = (7, 13)
    dh_ds: tuple[int, ...] = (3, 4)
    gamma_ps: tuple[int, ...] = (5, 7, 11)
    gamma_k: int = 3
    mult_ts: tuple[int, ...] = (2, 3, 4)
    floor_pmax: int = 47
    floor_dmax: int = 10
    bridge_ps: tuple[int, ...] = (7, 11)
    bridge_k: int = 4
    gk_ps: tuple[int, ...] = (5, 7)
    gk_prec: int = 20


def character_suite(cfg: SuiteConfig) -> list[Report]:
    out = []
    for q in cfg.orth_qs:
        out.append(orthogonality_check(field_from_q(q)))
    for q in cfg.gauss_qs:
        ctx = field_from_q(q)
        n = q - 1
        out.append(additive_sum_check(ctx))
        out.extend(gauss_inverse_check(ctx, m) for m in range(n))
        out.extend(jacobi_gauss_check(ctx, m, l) for m in range(n) for l in range(n))
        out.extend(binomial_gauss_check(ctx, m, l) for m in range(n) for l in range(n))
        out.extend(theta_expansion_check(ctx, a) for a in ctx.units())
        for m in (m for m in range(1, n + 1) if n % m == 0):
            out.extend(davenport_hasse_check(ctx, m, psi) for psi in range(n))
        for d in cfg.dh_ds:
            if n % d == 0:
                out.extend(dh_specialization_check(ctx, d, l, s) for l in range(n) for s in (1, -1))
        out.extend(gauss_bridge_check(ctx, l) for l in range(n))
        s = phi_tt1_sum(ctx)
        out.append(bool_report("PHI_TT1_SUM", {"p": ctx.p, "q": q}, s == -1, lhs=s, rhs=-1))
    return out


def gamma_suite(cfg: SuiteConfig) -> list[Report]:
    out = []
    for p in cfg.gamma_ps:
        k = cfg.gamma_k
        bad = [n for n in range(1, 3 * p * p) if gamma_int(p, k, n) != gamma_direct(p, k, n)]
        out.append(bool_report("GAMMA_DIRECT", {"p": p, "k": k}, not bad, lhs=f"mismatches={bad[:5]}",
                               rhs="mismatches=[]"))
        out.extend(gamma_reflection_check(p, k, l) for l in range(1, p - 1))
        for t in cfg.mult_ts:
            if t % p:
                out.extend(gamma_multiplication_check(p, k, l, t) for l in range(p - 1))
    for p in (p for p in range(3, cfg.floor_pmax + 1) if all(p % r for r in range(2, p))):
        for d in range(2, cfg.floor_dmax + 1):
            if not g_hypothesis(p, d):
                out.append(floor_identity_check(p, d))
    for p in cfg.bridge_ps:
        out.extend(gamma_bridge_check(p, cfg.bridge_k, l, "minus") for l in range(1, p - 1))
        out.extend(gamma_bridge_check(p, cfg.bridge_k, l, "plus") for l in range(p - 1))
    return out


def gross_koblitz_suite(cfg: SuiteConfig) -> list[Report]:
    return [gross_koblitz_check(p, cfg.gk_prec, a) for p in cfg.gk_ps for a in range(p - 1)]


def selftest(cfg: SuiteConfig | None = None) -> list[Report]:
    cfg = cfg or SuiteConfig()
    return character_suite(cfg) + gamma_suite(cfg) + gross_koblitz_suite(cfg)
