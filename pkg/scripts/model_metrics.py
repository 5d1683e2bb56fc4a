"""Invariant almost complex structures and special metrics on the three models."""

from ndglie import builders as b
from ndglie import exactlin as el
from ndglie.models import build_model, enumerate_invariant_acs, special_metrics
from ndglie.nijenhuis import is_nondegenerate, nearly_kahler_check, nijenhuis_of_model


def show(m):
    return "[" + "; ".join(" ".join(str(v) for v in row) for row in m) + "]"


def main():
    for name in b.MODELS:
        q = build_model(name)
        print(f"== {name}: dim g {q.g.dim}, dim h {q.h.dim}")
        for k, J in enumerate(enumerate_invariant_acs(q)):
            N = nijenhuis_of_model(q, J)
            lines = special_metrics(q, J)
            g = (lines.kahler or lines.nearly_kahler or [None])[0]
            kind = nearly_kahler_check(q, J, g) if g is not None else "no special metric"
            print(f"  J{k}: N zero {N.is_zero()}, N non-degenerate {is_nondegenerate(N)}, {kind}")
            if g is not None:
                print(f"      g = {show(g)}  signature {el.signature(g)}")


if __name__ == "__main__":
    main()
