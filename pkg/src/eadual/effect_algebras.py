"""Finite effect algebras given by explicit tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple, Optional

from .polyhedra import QPolytope, dd_convert, unit_vector, zeros


class MalformedTables(ValueError):
    pass


class AxiomViolation(ValueError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at {witness}")


class Violation(NamedTuple):
    axiom: str
    witness: tuple


@dataclass(frozen=True)
class FiniteEffectAlgebra:
    elements: tuple
    zero: str
    one: str
    orth: Mapping
    sums: Mapping  # (a, b) -> c, only for orthogonal pairs
    name: str = field(default="", compare=False)

    def __hash__(self):
        return hash((self.elements, self.zero, self.one,
                     tuple(sorted(self.orth.items())), tuple(sorted(self.sums.items()))))

    def __len__(self):
        return len(self.elements)

    def index(self, a: str) -> int:
        return self._index[a]

    @property
    def _index(self):
        cached = self.__dict__.get("_idx")
        if cached is None:
            cached = {a: i for i, a in enumerate(self.elements)}
            object.__setattr__(self, "_idx", cached)
        return cached

    def orthogonal(self, a, b) -> bool:
        return (a, b) in self.sums

    def sum(self, a, b):
        """``a ⊻ b``, or ``None`` when the pair is not orthogonal."""
        return self.sums.get((a, b))

    def perp(self, a):
        return self.orth[a]

    def leq(self, a, b) -> bool:
        return any(self.sums.get((a, c)) == b for c in self.elements)

    def defined_sums(self):
        return sorted(self.sums.items(), key=lambda kv: (self.index(kv[0][0]), self.index(kv[0][1])))

    def to_tables(self) -> dict:
        return {
            "elements": list(self.elements),
            "zero": self.zero,
            "one": self.one,
            "orth": {a: self.orth[a] for a in self.elements},
            "sums": [[a, b, c] for (a, b), c in self.defined_sums()],
        }

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FiniteEffectAlgebra{label} with {len(self.elements)} elements>"


def _check_tables(elements, zero, one, orth, sums):
    ids = set(elements)
    if len(ids) != len(elements):
        raise MalformedTables("duplicate element ids")
    for x in (zero, one):
        if x not in ids:
            raise MalformedTables(f"undeclared id {x!r}")
    missing = [a for a in elements if a not in orth]
    if missing:
        raise MalformedTables(f"orth is not total: no value for {missing[0]!r}")
    for a, b in orth.items():
        if a not in ids or b not in ids:
            raise MalformedTables(f"orth refers to undeclared id in {a!r} -> {b!r}")
    if isinstance(sums, Mapping):
        triples = [(a, b, c) for (a, b), c in sums.items()]
    else:
        triples = [tuple(t) for t in sums]
    table = {}
    for t in triples:
        if len(t) != 3:
            raise MalformedTables(f"sum entry {t!r} is not a triple")
        a, b, c = t
        for x in t:
            if x not in ids:
                raise MalformedTables(f"sums refer to undeclared id {x!r}")
        if table.get((a, b), c) != c:
            raise MalformedTables(f"conflicting values for {a!r} + {b!r}")
        table[(a, b)] = c
    return table


def find_violation(A: FiniteEffectAlgebra) -> Optional[Violation]:
    """First failing axiom with a witness, or ``None``."""
    E, z, u, s = A.elements, A.zero, A.one, A.sums
    if z == u:
        return Violation("nontriviality", (z, u))
    for a in E:
        if s.get((z, a)) != a:
            return Violation("identity", (z, a))
    for (a, b), c in s.items():
        if s.get((b, a)) != c:
            return Violation("commutativity", (a, b))
    for (a, b), ab in s.items():
        for c in E:
            abc = s.get((ab, c))
            if abc is None:
                continue
            bc = s.get((b, c))
            if bc is None or s.get((a, bc)) != abc:
                return Violation("associativity", (a, b, c))
    if A.orth.get(z) != u:
        return Violation("unit", (z, u))
    for a in E:
        comps = [b for b in E if s.get((b, a)) == u]
        if comps != [A.orth[a]]:
            return Violation("orthosupplement", (a,) + tuple(comps))
    for a in E:
        if (a, u) in s and a != z:
            return Violation("zero-one", (a, u))
    return None


def validate(elements, zero, one, orth, sums, name: str = "") -> FiniteEffectAlgebra:
    """Build an algebra from raw tables, raising on the first broken axiom.

    ``sums`` is a mapping ``(a, b) -> c`` or an iterable of triples.  Both
    orders of every orthogonal pair must be listed.
    """
    elements = tuple(elements)
    table = _check_tables(elements, zero, one, dict(orth), sums)
    A = FiniteEffectAlgebra(elements, zero, one, dict(orth), table, name)
    v = find_violation(A)
    if v is not None:
        raise AxiomViolation(v.axiom, v.witness)
    return A


# constructions


def _subset_name(mask: int, n: int) -> str:
    return "{" + ",".join(str(i + 1) for i in range(n) if mask >> i & 1) + "}"


def boolean_ea(n: int) -> FiniteEffectAlgebra:
    if n < 1:
        raise ValueError("boolean_ea needs n >= 1")
    full = (1 << n) - 1
    names = [_subset_name(m, n) for m in range(full + 1)]
    sums = {(names[a], names[b]): names[a | b]
            for a in range(full + 1) for b in range(full + 1) if not a & b}
    orth = {names[a]: names[full ^ a] for a in range(full + 1)}
    return validate(names, names[0], names[full], orth, sums, f"boolean_ea({n})")


def chain_ea(n: int) -> FiniteEffectAlgebra:
    if n < 1:
        raise ValueError("chain_ea needs n >= 1")
    names = [str(Fraction(k, n)) for k in range(n + 1)]
    sums = {(names[k], names[m]): names[k + m]
            for k in range(n + 1) for m in range(n + 1 - k)}
    orth = {names[k]: names[n - k] for k in range(n + 1)}
    return validate(names, names[0], names[n], orth, sums, f"chain_ea({n})")


def mo_ea(n: int) -> FiniteEffectAlgebra:
    if n < 1:
        raise ValueError("mo_ea needs n >= 1")
    atoms = [x for i in range(1, n + 1) for x in (f"a{i}", f"a{i}'")]
    names = ["0"] + atoms + ["1"]
    orth = {"0": "1", "1": "0"}
    for i in range(1, n + 1):
        orth[f"a{i}"], orth[f"a{i}'"] = f"a{i}'", f"a{i}"
    sums = {}
    for x in names:
        sums[("0", x)] = sums[(x, "0")] = x
    for x in atoms:
        sums[(x, orth[x])] = "1"
    return validate(names, "0", "1", orth, sums, f"mo_ea({n})")


def product_ea(A: FiniteEffectAlgebra, B: FiniteEffectAlgebra) -> FiniteEffectAlgebra:
    for X in (A, B):
        if find_violation(X) is not None:
            raise ValueError(f"{X!r} is not a valid effect algebra")
    pair = lambda x, y: f"({x},{y})"  # noqa: E731
    names = [pair(x, y) for x in A.elements for y in B.elements]
    orth = {pair(x, y): pair(A.orth[x], B.orth[y]) for x in A.elements for y in B.elements}
    sums = {}
    for (a1, a2), a in A.sums.items():
        for (b1, b2), b in B.sums.items():
            sums[(pair(a1, b1), pair(a2, b2))] = pair(a, b)
    return validate(names, pair(A.zero, B.zero), pair(A.one, B.one), orth, sums,
                    f"{A.name or 'A'} x {B.name or 'B'}")


def find_isomorphism(A: FiniteEffectAlgebra, B: FiniteEffectAlgebra) -> Optional[dict]:
    """Backtracking search for a bijection preserving 0, 1, orth and sums."""
    if len(A) != len(B) or len(A.sums) != len(B.sums):
        return None
    order = [A.zero, A.one] + [a for a in A.elements if a not in (A.zero, A.one)]
    f: dict = {}
    used: set = set()

    def consistent(a):
        fa = f[a]
        if A.orth[a] in f and f[A.orth[a]] != B.orth[fa]:
            return False
        for x in f:
            for p, q in ((a, x), (x, a)):
                c = A.sums.get((p, q))
                d = B.sums.get((f[p], f[q]))
                if (c is None) != (d is None):
                    return False
                if c is not None and c in f and f[c] != d:
                    return False
        for (p, q), c in A.sums.items():
            if c == a and p in f and q in f and B.sums.get((f[p], f[q])) != fa:
                return False
        return True

    def extend(i):
        if i == len(order):
            return True
        a = order[i]
        cands = [B.zero] if a == A.zero else [B.one] if a == A.one else B.elements
        for b in cands:
            if b in used:
                continue
            f[a] = b
            used.add(b)
            if consistent(a) and extend(i + 1):
                return True
            del f[a]
            used.discard(b)
        return False

    return dict(f) if extend(0) else None


class MorphismCheck(NamedTuple):
    ok: bool
    witness: Optional[tuple]
    reason: str


def is_morphism(source: FiniteEffectAlgebra, target: FiniteEffectAlgebra, mapping: Mapping) -> MorphismCheck:
    """Check that ``mapping`` sends 1 to 1 and orthogonal sums to sums."""
    for a in source.elements:
        if a not in mapping:
            raise ValueError(f"map is not total: no image for {a!r}")
        if mapping[a] not in target._index:
            raise ValueError(f"image {mapping[a]!r} of {a!r} is not in the target")
    if mapping[source.one] != target.one:
        return MorphismCheck(False, (source.one,), "unit not preserved")
    for (a, b), c in source.defined_sums():
        fc = target.sum(mapping[a], mapping[b])
        if fc is None:
            return MorphismCheck(False, (a, b), "orthogonality not preserved")
        if fc != mapping[c]:
            return MorphismCheck(False, (a, b), "sum not preserved")
    for a in source.elements:
        # follows from the two laws above
        assert mapping[source.orth[a]] == target.orth[mapping[a]]
    return MorphismCheck(True, None, "")


def is_state(A: FiniteEffectAlgebra, phi) -> MorphismCheck:
    """Morphism check into the rational unit interval for a value vector."""
    val = dict(zip(A.elements, phi))
    if val[A.one] != 1:
        return MorphismCheck(False, (A.one,), "unit not preserved")
    for a in A.elements:
        if not 0 <= val[a] <= 1:
            return MorphismCheck(False, (a,), "value outside [0,1]")
    for (a, b), c in A.defined_sums():
        if val[a] + val[b] > 1:
            return MorphismCheck(False, (a, b), "orthogonality not preserved")
        if val[a] + val[b] != val[c]:
            return MorphismCheck(False, (a, b), "sum not preserved")
    return MorphismCheck(True, None, "")


# states


@dataclass(frozen=True)
class StatePolytope:
    algebra: FiniteEffectAlgebra
    polytope: QPolytope

    @property
    def vertices(self):
        return self.polytope.vertices

    def value(self, phi, a):
        return phi[self.algebra.index(a)]


def state_constraints(A: FiniteEffectAlgebra):
    n = len(A)
    e = lambda a: unit_vector(n, A.index(a))  # noqa: E731
    eqs = [(e(A.one), Fraction(1)), (e(A.zero), Fraction(0))]
    seen = set()
    for (a, b), c in A.defined_sums():
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        row = [Fraction(0)] * n
        row[A.index(a)] += 1
        row[A.index(b)] += 1
        row[A.index(c)] -= 1
        eqs.append((tuple(row), Fraction(0)))
    hs = []
    for a in A.elements:
        hs.append((e(a), Fraction(1)))
        hs.append((tuple(-x for x in e(a)), Fraction(0)))
    return hs, eqs


def state_polytope(A: FiniteEffectAlgebra) -> StatePolytope:
    hs, eqs = state_constraints(A)
    P = dd_convert(QPolytope(len(A), halfspaces=tuple(hs), equalities=tuple(eqs)))
    return StatePolytope(A, P)


def precompose_state(f: Mapping, source: FiniteEffectAlgebra, target: FiniteEffectAlgebra, phi):
    """``Stat(f)``: a state on the target pulled back along ``f``."""
    return tuple(phi[target.index(f[a])] for a in source.elements)


def dirac_states(n: int):
    """Dirac measures on ``boolean_ea(n)`` in element order."""
    full = (1 << n) - 1
    return [tuple(Fraction(m >> i & 1) for m in range(full + 1)) for i in range(n)]


__all__ = [
    "AxiomViolation", "FiniteEffectAlgebra", "MalformedTables", "MorphismCheck",
    "StatePolytope", "Violation", "boolean_ea", "chain_ea", "dirac_states",
    "find_isomorphism", "find_violation", "is_morphism", "is_state", "mo_ea",
    "precompose_state", "product_ea", "state_constraints", "state_polytope", "validate",
]
_ = zeros, itertools
