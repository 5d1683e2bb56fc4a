"""Verification suites: each returns a VerificationReport."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict

from . import builders as b
from .invariants import h1_dim, hom_rep
from .liealg import adjoint_rep
from .report import BUDGET, VerificationReport

F = Fraction

H1_EXPECTED = {"p_su12": 0, "r_s": 6, "r_u": 0, "r_gen": 0, "l0": 10, "l1": 4, "l2": 0}
BRACKET_DIMS = {"p": 2, "r": 2, "l0": 24, "l1": 2, "l2": 6}


def cohomology(allow_slow: bool = False, seed: int = 0) -> VerificationReport:
    rep = VerificationReport()
    cases = dict(H1_EXPECTED)
    cases.update({name: 0 for name in b.REDUCTIVE_ISOTROPY})
    for name, expected in cases.items():
        h, m, _ = b.isotropy_setup(name)
        rep.add(f"cohomology/{name}", "dim H^1(h, Hom(m, h)) for the isotropy on C^3",
                expected, h1_dim(h, hom_rep(m, adjoint_rep(h))))
    return rep


def brackets(allow_slow: bool = False, seed: int = 0) -> VerificationReport:
    from .brackets import (
        NONZERO_COHOMOLOGY, SOLVABLE_CASES, bracket_space_dim, certify_degenerate, certify_split,
        witness_degeneracy,
    )
    from .poly import DEFAULT_MAX_PAIRS, DEFAULT_MAX_TERMS

    pairs, terms = (DEFAULT_MAX_PAIRS * 10, DEFAULT_MAX_TERMS * 10) if allow_slow else \
        (DEFAULT_MAX_PAIRS, DEFAULT_MAX_TERMS)
    rep = VerificationReport()
    for case, expected in BRACKET_DIMS.items():
        rep.add(f"brackets/dim/{case}", "dimension of the equivariant bracket space", expected,
                bracket_space_dim(case))
    for case in NONZERO_COHOMOLOGY:
        res = certify_split(case, max_pairs=pairs, max_terms=terms)
        ok = BUDGET if res.forced is None else res.forced
        rep.add(f"brackets/split/{case}", "Jacobi forces the cohomology deformation mu to vanish",
                True, f"{res.forced} ({res.method})", ok=ok)
    for case in SOLVABLE_CASES:
        cert = certify_degenerate(case, max_pairs=pairs, max_terms=terms, seed=seed)
        status = cert.certified
        rep.add(f"brackets/degenerate/{case}",
                "det of the non-degeneracy matrix vanishes on the Jacobi variety for every invariant J",
                True, f"{status} ({', '.join(sorted({c.method for c in cert.checks}))})",
                ok=BUDGET if status is None else status)
        checked, ok = witness_degeneracy(case, seed=seed)
        if checked:
            rep.add(f"brackets/witnesses/{case}",
                    "N_J is degenerate at every catalog witness point, and each point is a Lie algebra",
                    True, f"{ok} at {checked} points", ok=ok)
    return rep


def stabilizers(allow_slow: bool = False, seed: int = 0) -> VerificationReport:
    from .nijenhuis import ndg_normal_form, stabilizer, strong_degeneration

    rep = VerificationReport()
    cases = [
        ("ndg1/exceptional", ndg_normal_form(1, F(1), 0), 4),
        ("ndg2/exceptional/phi0", ndg_normal_form(2, 1, 0), 2),
        ("ndg2/exceptional/phi_pi", ndg_normal_form(2, 1, 12), 2),
        ("ndg3/psi0-phi0", ndg_normal_form(3, 1, 0, 0), 8),
    ]
    for pos, (psi, phi) in enumerate([(3, 0), (2, 4), (2, 8)], start=1):
        cases.append((f"ndg3/generic-exceptional/ker-X{pos}", ndg_normal_form(3, 1, phi, psi), 2))
    for e1 in (1, -1):
        for e2 in (1, -1):
            cases.append((f"ndg3/strong/{e1:+d}{e2:+d}", strong_degeneration(e1, e2), 4))
    for psi, phi in [(4, 0), (2, 6), (-2, 6), (4, 12), (-4, 0), (-2, -6), (2, -6), (-4, 12)]:
        cases.append((f"ndg3/second-kind/psi{psi}-phi{phi}", ndg_normal_form(3, 1, phi, psi), 2))
    for name, N, expected in cases:
        rep.add(f"stabilizers/{name}", "dimension of the stabilizer of N in gl(3,C)", expected,
                len(stabilizer(N)))
    return rep


def first_kind(psi: int, phi: int) -> bool:
    """Angles in units of pi/12."""
    return psi % 12 in (3, 9) or (psi + phi) % 12 == 6 or (phi - psi) % 12 == 6


def second_kind_set():
    base = {(a * 2, c * 6) for a in (1, -1) for c in (1, -1)} | {(a * 4, f) for a in (1, -1) for f in (0, 12)}
    return {(p % 24, f % 24) for p, f in base} | {((p + 12) % 24, (f + 12) % 24) for p, f in base}


def forms(allow_slow: bool = False, seed: int = 0) -> VerificationReport:
    from .nijenhuis import hermitian_form, ndg_normal_form, phi_map, three_form

    rep = VerificationReport()
    for label, N in [("ndg1/lam2-phi_pi2", ndg_normal_form(1, F(2), 6)),
                     ("ndg1/lam3-phi_pi3", ndg_normal_form(1, F(3), 4)),
                     ("ndg4", ndg_normal_form(4))]:
        rep.add(f"forms/signature/{label}", "signature of the Hermitian form h", (4, 2, 0),
                hermitian_form(N).signature)
    rep.add("forms/kernel/ndg1-exceptional", "real dimension of ker h at lambda = 1, phi = 0", 4,
            len(hermitian_form(ndg_normal_form(1, F(1), 0)).kernel))
    zeta_zero, degenerate = set(), set()
    for psi in range(24):
        for phi in range(24):
            N = ndg_normal_form(3, 1, phi, psi)
            hf = hermitian_form(N)
            if hf.kernel:
                degenerate.add((psi, phi))
            if not three_form(N, hf).is_volume:
                zeta_zero.add((psi, phi))
    expected = second_kind_set()
    rep.add("forms/zeta-zero-set", "grid points where the 3-form zeta vanishes are the second-kind set",
            sorted(expected), sorted(zeta_zero))
    first = {(p, f) for p in range(24) for f in range(24) if first_kind(p, f)}
    rep.add("forms/h-degenerate-set", "grid points where h degenerates are the first-kind strata",
            len(first), len(degenerate), ok=first == degenerate)
    for psi, phi in sorted(expected):
        pm = phi_map(ndg_normal_form(3, 1, phi, psi))
        rep.add(f"forms/phi-fixed/psi{psi}-phi{phi}",
                "the induced projective map has exactly the three coordinate lines as fixed points",
                (3, True), (len(pm.fixed_lines) if pm.fixed_lines is not None else None,
                            pm.coordinate_lines_fixed))
    return rep


def models(allow_slow: bool = False, seed: int = 0) -> VerificationReport:
    from .models import verify_model

    rep = VerificationReport()
    for name in b.MODELS:
        rep.extend(verify_model(name))
    return rep


def orbits(allow_slow: bool = False, seed: int = 0) -> VerificationReport:
    from .models import run_orbit_exclusions

    return run_orbit_exclusions()


SUITES: Dict[str, Callable[..., VerificationReport]] = {
    "cohomology": cohomology,
    "brackets": brackets,
    "stabilizers": stabilizers,
    "forms": forms,
    "models": models,
    "orbits": orbits,
}
