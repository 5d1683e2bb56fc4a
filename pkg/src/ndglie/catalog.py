"""Named algebras, embeddings and quotient setups, stored as a text file.

File format, one record per block::

    algebra <name> dim <n>
    labels <l1> ... <ln>
    bracket i j k <scalar>
    embed <sub> into <amb>
    col j <scalar> ... <scalar>
    quotient <name> embed <sub> into <amb>
    complement
    col j <scalar> ...
    witness <case> <index>
    param <name> <scalar>

Loading rebuilds every object and re-checks its invariants instead of
trusting the file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations
from typing import Dict, List, Optional, Tuple, Union

from . import exactlin as el
from .liealg import Embedding, InvariantError, LieAlgebra, QuotientSetup, check_jacobi
from .scalars import format_literal, parse_literal

Entry = Union[LieAlgebra, Embedding, QuotientSetup]


@dataclass
class Catalog:
    algebras: Dict[str, LieAlgebra] = field(default_factory=dict)
    embeddings: Dict[Tuple[str, str], Embedding] = field(default_factory=dict)
    quotients: Dict[str, QuotientSetup] = field(default_factory=dict)
    witnesses: Dict[str, List[Dict[str, Fraction]]] = field(default_factory=dict)

    def add_algebra(self, g: LieAlgebra) -> None:
        old = self.algebras.get(g.name)
        if old is not None and (old.dim, old.brackets) != (g.dim, g.brackets):
            raise InvariantError(f"two different algebras named {g.name!r}")
        self.algebras[g.name] = g

    def add_embedding(self, e: Embedding) -> None:
        self.add_algebra(e.sub)
        self.add_algebra(e.amb)
        key = (e.sub.name, e.amb.name)
        old = self.embeddings.get(key)
        if old is not None and old.inc != e.inc:
            raise InvariantError(f"two different embeddings {key}")
        self.embeddings[key] = e

    def add_quotient(self, name: str, q: QuotientSetup) -> None:
        self.add_embedding(q.emb)
        self.quotients[name] = q

    def names(self) -> List[str]:
        out = [f"algebra {n}" for n in sorted(self.algebras)]
        out += [f"embedding {s} into {a}" for s, a in sorted(self.embeddings)]
        out += [f"quotient {n}" for n in sorted(self.quotients)]
        out += [f"witness {n} ({len(w)})" for n, w in sorted(self.witnesses.items())]
        return out

    def get(self, name: str, kind: Optional[str] = None) -> Entry:
        """Look up by name; algebras first unless ``kind`` says otherwise."""
        if kind in (None, "algebra") and name in self.algebras:
            return self.algebras[name]
        if kind in (None, "quotient") and name in self.quotients:
            return self.quotients[name]
        if kind in (None, "embedding"):
            hits = [e for (s, _), e in self.embeddings.items() if s == name]
            if len(hits) == 1:
                return hits[0]
        raise KeyError(f"unknown catalog entry {name!r}")

    def verify(self) -> None:
        for g in self.algebras.values():
            if not check_jacobi(g):
                raise InvariantError(f"{g.name} fails the Jacobi identity")
        for e in self.embeddings.values():
            e.verify()


# serialization -----------------------------------------------------------------

def _lits(xs) -> str:
    return " ".join(format_literal(x) for x in xs)


def _dump_algebra(g: LieAlgebra) -> List[str]:
    out = [f"algebra {g.name} dim {g.dim}"]
    if g.labels:
        out.append("labels " + " ".join(g.labels))
    for i, j in combinations(range(g.dim), 2):
        for k, v in sorted(g.brackets.get((i, j), {}).items()):
            if v != 0:
                out.append(f"bracket {i} {j} {k} {format_literal(v)}")
    return out


def _dump_cols(m) -> List[str]:
    return [f"col {j} {_lits(c)}" for j, c in enumerate(el.columns(m))]


def dumps(cat: Catalog) -> str:
    lines: List[str] = []
    for name in sorted(cat.algebras):
        lines += _dump_algebra(cat.algebras[name]) + [""]
    for key in sorted(cat.embeddings):
        lines += [f"embed {key[0]} into {key[1]}"] + _dump_cols(cat.embeddings[key].inc) + [""]
    for name in sorted(cat.quotients):
        q = cat.quotients[name]
        lines.append(f"quotient {name} embed {q.emb.sub.name} into {q.emb.amb.name}")
        if q.mu is not None:
            raise ValueError(f"{name}: quotients with mu are not stored")
        lines += ["complement"] + _dump_cols(q.complement) + [""]
    for case in sorted(cat.witnesses):
        for idx, point in enumerate(cat.witnesses[case]):
            lines.append(f"witness {case} {idx}")
            lines += [f"param {k} {format_literal(v)}" for k, v in sorted(point.items()) if v != 0]
            lines.append("")
    return "\n".join(lines)


def _scalars(tokens: List[str]) -> List:
    """Consecutive 8-token scalar literals."""
    if len(tokens) % 8:
        raise ValueError(f"scalar literals need multiples of 8 tokens, got {len(tokens)}")
    return [parse_literal(" ".join(tokens[i:i + 8])) for i in range(0, len(tokens), 8)]


def _cols_to_matrix(cols: Dict[int, List], rows: int) -> List[List]:
    return el.from_columns([cols[j] for j in range(len(cols))]) if cols else el.zeros(rows, 0)


def loads(text: str, verify: bool = True) -> Catalog:
    cat = Catalog()
    blocks: List[List[List[str]]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] in ("algebra", "embed", "quotient", "witness"):
            blocks.append([words])
        elif not blocks:
            raise ValueError(f"record body before any header: {raw!r}")
        else:
            blocks[-1].append(words)
    pending_quotients = []
    for block in blocks:
        head, body = block[0], block[1:]
        if head[0] == "algebra":
            name, dim = head[1], int(head[3])
            labels, brackets = None, {}
            for w in body:
                if w[0] == "labels":
                    labels = w[1:]
                elif w[0] == "bracket":
                    i, j, k = int(w[1]), int(w[2]), int(w[3])
                    brackets.setdefault((i, j), {})[k] = _scalars(w[4:])[0]
                else:
                    raise ValueError(f"unexpected line in algebra {name}: {' '.join(w)}")
            cat.algebras[name] = LieAlgebra(name, dim, brackets, labels)
        elif head[0] == "embed":
            sub, amb = cat.algebras[head[1]], cat.algebras[head[3]]
            cols = {int(w[1]): _scalars(w[2:]) for w in body}
            cat.embeddings[(sub.name, amb.name)] = Embedding(sub, amb, _cols_to_matrix(cols, amb.dim))
        elif head[0] == "quotient":
            pending_quotients.append((head, body))
        else:
            point = {w[1]: Fraction(_scalars(w[2:])[0]) for w in body}
            cat.witnesses.setdefault(head[1], []).append(point)
    for head, body in pending_quotients:
        name, key = head[1], (head[3], head[5])
        emb = cat.embeddings[key]
        cols = {}
        for w in body:
            if w[0] == "complement":
                continue
            if w[0] != "col":
                raise ValueError(f"unexpected line in quotient {name}: {' '.join(w)}")
            cols[int(w[1])] = _scalars(w[2:])
        cat.quotients[name] = QuotientSetup(emb, _cols_to_matrix(cols, emb.amb.dim), name=name)
    if verify:
        cat.verify()
    return cat


# the shipped catalog ---------------------------------------------------------------

_CACHE: Optional[Catalog] = None


def load_default() -> Catalog:
    global _CACHE
    if _CACHE is None:
        text = resources.files("ndglie").joinpath("data/catalog.txt").read_text()
        _CACHE = loads(text)
    return _CACHE


def catalog(name: str, kind: Optional[str] = None) -> Entry:
    return load_default().get(name, kind)


def witnesses(case: str) -> List[Dict[str, Fraction]]:
    return list(load_default().witnesses.get(case, []))


def build_catalog(witness_data: Optional[Dict[str, List[Dict[str, Fraction]]]] = None) -> Catalog:
    """Assemble every named object from the constructors in ``builders``."""
    from . import builders as b

    cat = Catalog()
    for amb in ("su3", "su12"):
        cat.add_algebra(b.ambient_unitary(amb))
    cat.add_algebra(heisenberg3())
    for name in list(b.SOLVABLE_ISOTROPY) + list(b.REDUCTIVE_ISOTROPY):
        _, _, emb = b.isotropy_setup(name)
        cat.add_embedding(emb)
    for name in b.SOLVABLE_ISOTROPY:
        cat.add_quotient(f"{name}_split", b.split_setup(name))
    for name in b.MODELS:
        cat.add_quotient(name, b.model_setup(name))
    for name in b.orbit_subalgebras():
        cat.add_quotient(name, b.orbit_setup(name))
    for name in b.SEMISIMPLE:
        cat.add_quotient(name, b.semisimple_setup(name))
    for case, points in (witness_data or {}).items():
        cat.witnesses[case] = [dict(p) for p in points]
    cat.verify()
    return cat


def heisenberg3() -> LieAlgebra:
    return LieAlgebra("heis3", 3, {(0, 1): {2: Fraction(1)}}, ["x", "y", "z"])
