import pytest

from ndglie import builders as b
from ndglie import exactlin as el
from ndglie.models import (
    analyse_structure, build_model, enumerate_invariant_acs, run_orbit_exclusions, special_metrics,
    verify_model,
)
from ndglie.nijenhuis import (
    is_nondegenerate, isotropy_invariant_form, nabla_omega_map, nijenhuis_of_model,
)

SIGNATURES = {"so5_u2": (6, 0, 0), "so14_u2": (4, 2, 0), "so23_u11": (4, 2, 0)}


@pytest.mark.parametrize("name", list(b.MODELS))
def test_model_structures(name):
    q = build_model(name)
    assert (q.g.dim, q.h.dim, q.m_dim) == (10, 4, 6)
    structures = enumerate_invariant_acs(q)
    assert len(structures) == 4
    kinds = sorted(analyse_structure(q, J).kind for J in structures)
    assert kinds == ["kahler", "kahler", "strict_nk", "strict_nk"]


@pytest.mark.parametrize("name", list(b.MODELS))
def test_metrics(name):
    q = build_model(name)
    for J in enumerate_invariant_acs(q):
        lines = special_metrics(q, J)
        for g in lines.kahler + lines.nearly_kahler:
            assert isotropy_invariant_form(q, g)
            assert el.signature(g) == SIGNATURES[name]
        N = nijenhuis_of_model(q, J)
        if lines.kahler:
            assert N.is_zero()
        else:
            assert is_nondegenerate(N)
            t = nabla_omega_map(q, J)(lines.nearly_kahler[0])
            n = q.m_dim
            assert any(t[x][y][z] for x in range(n) for y in range(n) for z in range(n))
            assert all(t[x][y][z] == -t[y][x][z] == -t[x][z][y]
                       for x in range(n) for y in range(n) for z in range(n))


@pytest.mark.parametrize("name", list(b.MODELS))
def test_verify_model_report(name):
    rep = verify_model(name)
    assert rep.passed, rep.to_text()


def test_orbit_exclusions():
    rep = run_orbit_exclusions()
    assert rep.passed, "\n".join(f"{e.id}: {e.computed}" for e in rep.failures)
    ids = {e.id for e in rep.entries}
    assert "orbits/intransitive/p_su12/t4" in ids
    assert "orbits/totally-real/p1_sp4r" in ids
