"""Summary table for the solvable isotropy candidates inside su(1,2)."""

from ndglie import builders as b
from ndglie.brackets import (
    NONZERO_COHOMOLOGY, SOLVABLE_CASES, bracket_space_dim, certify_degenerate, certify_split,
)
from ndglie.catalog import witnesses
from ndglie.invariants import commutant, h1_dim, hom_rep, invariant_complex_structures
from ndglie.liealg import adjoint_rep


def main():
    head = f"{'case':<8}{'dim h':>6}{'H1':>4}{'dim B':>6}{'comm':>5}  {'J search':<17}{'mu':<28}{'degenerate':<24}{'witn':>5}"
    print(head)
    print("-" * len(head))
    for case, name in SOLVABLE_CASES.items():
        h, m, _ = b.isotropy_setup(name)
        h1 = h1_dim(h, hom_rep(m, adjoint_rep(h)))
        search = invariant_complex_structures(m)
        mu = certify_split(case).method if case in NONZERO_COHOMOLOGY else "-"
        cert = certify_degenerate(case)
        methods = ",".join(sorted({c.method for c in cert.checks}))
        print(f"{name:<8}{h.dim:>6}{h1:>4}{bracket_space_dim(case):>6}{len(commutant(m)):>5}  "
              f"{search.status:<17}{mu:<28}{str(cert.certified) + ' ' + methods:<24}{len(witnesses(name)):>5}")


if __name__ == "__main__":
    main()
