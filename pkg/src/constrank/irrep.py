"""Irreducible highest-weight modules with exact Chevalley generator matrices.

A module stores one weight per basis vector and, for each simple index i,
sparse operators ``E[i]`` and ``F[i]`` indexed by column:
``E[i][b] = {a: coefficient}`` means e_i v_b = sum_a coefficient * v_a.

``build_irrep`` descends from the highest-weight vector. At a weight gamma the
candidates are f_i v_b for basis vectors v_b at gamma + alpha_i. A vector
below the top of an irreducible module is zero exactly when every e_j kills
it, so candidates are compared through their images under all e_j, which
only involve data from strictly higher weights.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb
from typing import Hashable, Optional, Sequence

from . import cartan
from .cartan import RootSystem, Weight, add, sub
from .linalg import Echelon, add_into, sparse_nullspace

DEFAULT_GUARD = 2000

Operator = dict  # column -> {row: Fraction}


class GuardExceeded(ValueError):
    pass


@dataclass(eq=False)
class WeightModule:
    rs: RootSystem
    weights: list[Weight]
    E: list[Operator]
    F: list[Operator]
    highest_weight: Optional[Weight] = None
    # f-monomial word of each basis vector: (i1, ..., ik) means f_i1 ... f_ik v_top
    words: Optional[list[tuple[int, ...]]] = None
    # (i, p): basis vector b equals f_i applied to basis vector p
    parents: Optional[list[Optional[tuple[int, int]]]] = None
    label: str = ""
    index: dict[Weight, list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        idx: dict[Weight, list[int]] = {}
        for b, w in enumerate(self.weights):
            idx.setdefault(w, []).append(b)
        self.index = idx

    @property
    def dim(self) -> int:
        return len(self.weights)

    def basis_at(self, gamma: Weight) -> list[int]:
        return self.index.get(tuple(gamma), [])

    def weight_of(self, key: int) -> Weight:
        return self.weights[key]

    def raise_(self, i: int, b: int) -> dict[int, Fraction]:
        return self.E[i].get(b, {})

    def lower_(self, i: int, b: int) -> dict[int, Fraction]:
        return self.F[i].get(b, {})

    def apply(self, op: Operator, vec: dict) -> dict:
        out: dict = {}
        for b, c in vec.items():
            add_into(out, op.get(b, {}), c)
        return out

    @cached_property
    def E_rows(self) -> list[dict[int, dict[int, Fraction]]]:
        return [_rows(op) for op in self.E]

    @cached_property
    def F_rows(self) -> list[dict[int, dict[int, Fraction]]]:
        return [_rows(op) for op in self.F]

    def support(self) -> set[Weight]:
        return set(self.index)

    def __repr__(self) -> str:
        return f"WeightModule({self.label or self.highest_weight}, dim={self.dim})"

    def to_document(self) -> dict:
        """Structured, JSON-serialisable description with exact fraction strings."""

        def entries(op):
            return [[r, c, str(v)] for c in sorted(op) for r, v in sorted(op[c].items())]

        return {
            "root_system": str(self.rs),
            "highest_weight": list(self.highest_weight) if self.highest_weight is not None else None,
            "dim": self.dim,
            "weights": [list(w) for w in self.weights],
            "words": [list(w) for w in self.words] if self.words is not None else None,
            "E": [entries(op) for op in self.E],
            "F": [entries(op) for op in self.F],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=1, sort_keys=True)


def _rows(op: Operator) -> dict[int, dict[int, Fraction]]:
    rows: dict[int, dict[int, Fraction]] = {}
    for c, col in op.items():
        for r, v in col.items():
            rows.setdefault(r, {})[c] = v
    return rows


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula: product over positive roots of <lam+rho, b^>/<rho, b^>."""
    if not cartan.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    shifted = add(lam, rs.rho)
    num = Fraction(1)
    for beta in rs.positive_roots_simple:
        num *= rs.coroot_pairing(shifted, beta) / rs.coroot_pairing(rs.rho, beta)
    assert num.denominator == 1
    return int(num)


def build_sl2(n: int) -> WeightModule:
    """V(n) for sl2 in the basis v_{n-2k} = f^k v_n, e v_{n-2k} = k(n-k+1) v_{n-2k+2}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rs = cartan.build_root_system("A1")
    E: Operator = {}
    F: Operator = {}
    for k in range(n + 1):
        if k < n:
            F[k] = {k + 1: Fraction(1)}
        if k > 0:
            E[k] = {k - 1: Fraction(k * (n - k + 1))}
    return WeightModule(
        rs,
        [(n - 2 * k,) for k in range(n + 1)],
        [E],
        [F],
        highest_weight=(n,),
        words=[(0,) * k for k in range(n + 1)],
        parents=[None] + [(0, k - 1) for k in range(1, n + 1)],
        label=f"sl2 V({n})",
    )


_MODULES: dict[tuple, WeightModule] = {}


def built_modules() -> list[WeightModule]:
    """Every irreducible module built (and cached) in this process."""
    return list(_MODULES.values())


def _weight_order(rs: RootSystem, top: Weight):
    def key(g):
        return (rs.height(rs.to_simple_coords(sub(top, g))), tuple(-c for c in g))
    return key


def build_irrep(rs: RootSystem, lam: Weight, guard: int = DEFAULT_GUARD) -> WeightModule:
    lam = tuple(int(c) for c in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong length for {rs}")
    if not cartan.is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    dim = weyl_dim(rs, lam)
    if dim > guard:
        raise GuardExceeded(f"V{lam} of {rs} has dimension {dim} > guard {guard}")
    key = (rs.spec, lam)
    if key in _MODULES:
        return _MODULES[key]
    M = _construct(rs, lam)
    if M.dim != dim:
        raise AssertionError(f"constructed dimension {M.dim} differs from Weyl dimension {dim}")
    _MODULES[key] = M
    return M


def _construct(rs: RootSystem, lam: Weight) -> WeightModule:
    n = rs.rank
    alphas = [rs.simple_root(i) for i in range(n)]
    weights: list[Weight] = [lam]
    words: list[tuple[int, ...]] = [()]
    parents: list[Optional[tuple[int, int]]] = [None]
    E: list[Operator] = [{} for _ in range(n)]
    F: list[Operator] = [{} for _ in range(n)]
    index: dict[Weight, list[int]] = {lam: [0]}
    order = _weight_order(rs, lam)

    level = [lam]
    while level:
        targets = sorted({sub(g, alphas[i]) for g in level for i in range(n)}, key=order)
        next_level = []
        for gamma in targets:
            cands = []
            for i in range(n):
                for b in index.get(add(gamma, alphas[i]), []):
                    cands.append(((i,) + words[b], i, b))
            cands.sort()
            ech = Echelon()
            accepted: list[int] = []
            for word, i, b in cands:
                img: dict[tuple[int, int], Fraction] = {}
                for j in range(n):
                    # e_j f_i v_b = f_i e_j v_b + delta_ij <wt(b), alpha_i^> v_b
                    for c, x in E[j].get(b, {}).items():
                        for r, y in F[i].get(c, {}).items():
                            k = (j, r)
                            v = img.get(k, 0) + x * y
                            if v:
                                img[k] = v
                            else:
                                img.pop(k, None)
                    if i == j and weights[b][i]:
                        k = (j, b)
                        v = img.get(k, 0) + weights[b][i]
                        if v:
                            img[k] = Fraction(v)
                        else:
                            img.pop(k, None)
                new, coords = ech.insert(img)
                if new:
                    idx = len(weights)
                    weights.append(gamma)
                    words.append(word)
                    parents.append((i, b))
                    accepted.append(idx)
                    for (j, r), v in img.items():
                        E[j].setdefault(idx, {})[r] = Fraction(v)
                col = {accepted[p]: Fraction(v) for p, v in coords.items() if v}
                if col:
                    F[i][b] = col
            if accepted:
                index[gamma] = accepted
                next_level.append(gamma)
        level = next_level
    return WeightModule(rs, weights, E, F, highest_weight=lam, words=words, parents=parents,
                        label=f"{rs} V{lam}")


def weight_multiplicity(M: WeightModule, gamma: Weight) -> int:
    return len(M.basis_at(gamma))


def root_string(M: WeightModule, gamma: Weight, alpha: Weight) -> tuple[int, int]:
    """(p, q) for the alpha-string through gamma; checks <gamma, alpha^> = q - p.

    ``alpha`` is a positive root in fundamental-weight coordinates.
    """
    gamma = tuple(gamma)
    if gamma not in M.index:
        raise ValueError(f"{gamma} is not a weight of {M!r}")
    rs = M.rs
    simple = rs.to_simple_coords(alpha)
    if tuple(int(c) for c in simple) not in rs.positive_roots_simple:
        raise ValueError(f"{alpha} is not a positive root of {rs}")
    support = M.index
    p = 0
    while add(gamma, cartan.scale(p + 1, alpha)) in support:
        p += 1
    q = 0
    while sub(gamma, cartan.scale(q + 1, alpha)) in support:
        q += 1
    # the string is unbroken: nothing beyond either end. A weight gamma + m alpha of M
    # has |<gamma, alpha^> + 2m| <= K with K the largest |<w, alpha^>| over the support.
    pairing = rs.coroot_pairing(gamma, simple)
    bounds = M.__dict__.setdefault("_pairing_bounds", {})
    if alpha not in bounds:
        bounds[alpha] = max(abs(rs.coroot_pairing(w, simple)) for w in support)
    reach = int((bounds[alpha] + abs(pairing)) // 2) + 1
    for m in range(p + 1, reach + 1):
        if add(gamma, cartan.scale(m, alpha)) in support:
            raise AssertionError(f"broken {alpha}-string through {gamma}")
    for m in range(q + 1, reach + 1):
        if sub(gamma, cartan.scale(m, alpha)) in support:
            raise AssertionError(f"broken {alpha}-string through {gamma}")
    if pairing != q - p:
        raise AssertionError(f"<{gamma}, {alpha}^> = {pairing} but q - p = {q - p}")
    return p, q


def dual_module(M: WeightModule) -> WeightModule:
    """Contragredient module on the dual basis: x acts by -transpose(x)."""

    def neg_transpose(op: Operator) -> Operator:
        out: Operator = {}
        for c, col in op.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = -v
        return out

    top = None
    if M.highest_weight is not None:
        top = cartan.minus_w0(M.rs, M.highest_weight)
    D = WeightModule(
        M.rs,
        [tuple(-c for c in w) for w in M.weights],
        [neg_transpose(op) for op in M.E],
        [neg_transpose(op) for op in M.F],
        highest_weight=top,
        label=f"dual of {M.label}",
    )
    if top is not None and weight_multiplicity(D, top) != 1:
        raise AssertionError(f"-w0 of {M.highest_weight} is not a simple weight of the dual")
    return D


def symmetric_power_module(M: WeightModule, r: int, guard: int = DEFAULT_GUARD) -> WeightModule:
    """Sym^r(M) on monomials (sorted index tuples); generators act as derivations."""
    if r < 1:
        raise ValueError("r must be positive")
    size = comb(M.dim + r - 1, r)
    if size > guard:
        raise GuardExceeded(f"Sym^{r} of a {M.dim}-dimensional module has dimension {size} > guard {guard}")
    basis = list(combinations_with_replacement(range(M.dim), r))
    pos = {mono: k for k, mono in enumerate(basis)}
    weights = []
    for mono in basis:
        w = (0,) * M.rs.rank
        for a in mono:
            w = add(w, M.weights[a])
        weights.append(w)

    def derive(op: Operator) -> Operator:
        out: Operator = {}
        for k, mono in enumerate(basis):
            col: dict[int, Fraction] = {}
            for slot, a in enumerate(mono):
                if slot and mono[slot - 1] == a:
                    continue
                mult = mono.count(a)
                rest = mono[:slot] + mono[slot + mult:]
                for c, v in op.get(a, {}).items():
                    target = pos[tuple(sorted(rest + (a,) * (mult - 1) + (c,)))]
                    y = col.get(target, 0) + mult * v
                    if y:
                        col[target] = y
                    else:
                        col.pop(target, None)
            if col:
                out[k] = col
        return out

    top = None
    if M.highest_weight is not None:
        top = cartan.scale(r, M.highest_weight)
    S = WeightModule(M.rs, weights, [derive(op) for op in M.E], [derive(op) for op in M.F],
                     highest_weight=top, label=f"Sym^{r} {M.label}")
    S.monomials = basis
    return S


def commutator_defects(M: WeightModule) -> list[tuple[int, int]]:
    """Pairs (i, j) where [E_i, F_j] != delta_ij H_i, H_i reading <weight, alpha_i^>."""
    bad = []
    n = M.rs.rank
    for i in range(n):
        for j in range(n):
            for b in range(M.dim):
                v = {b: Fraction(1)}
                lhs = add_into(M.apply(M.E[i], M.apply(M.F[j], v)), M.apply(M.F[j], M.apply(M.E[i], v)), -1)
                rhs = {b: Fraction(M.weights[b][i])} if i == j and M.weights[b][i] else {}
                if lhs != rhs:
                    bad.append((i, j))
                    break
    return bad


def weight_grading_ok(M: WeightModule) -> bool:
    n = M.rs.rank
    for i in range(n):
        a = M.rs.simple_root(i)
        for b in range(M.dim):
            up = add(M.weights[b], a)
            down = sub(M.weights[b], a)
            if any(M.weights[r] != up for r in M.E[i].get(b, {})):
                return False
            if any(M.weights[r] != down for r in M.F[i].get(b, {})):
                return False
    return True


def is_cyclic(M: WeightModule) -> bool:
    """Every basis vector lies in the span of F-monomials applied to the top vector."""
    top = M.basis_at(M.highest_weight)
    if len(top) != 1:
        return False
    spans: dict[Weight, Echelon] = {}
    vecs: dict[Weight, list[dict]] = {}
    start = {top[0]: Fraction(1)}
    spans[M.highest_weight] = Echelon()
    spans[M.highest_weight].insert(start)
    vecs[M.highest_weight] = [start]
    order = sorted(M.support(), key=_weight_order(M.rs, M.highest_weight))
    for g in order:
        for v in vecs.get(g, []):
            for i in range(M.rs.rank):
                w = M.apply(M.F[i], v)
                if not w:
                    continue
                tgt = sub(g, M.rs.simple_root(i))
                ech = spans.setdefault(tgt, Echelon())
                if ech.insert(w)[0]:
                    vecs.setdefault(tgt, []).append(w)
    return all(spans.get(g, Echelon()).size == len(bs) for g, bs in M.index.items())


def support_law_holds(M: WeightModule) -> bool:
    """support(V(lam)) = Conv(W lam) intersected with lam - N Delta, by box enumeration."""
    rs, lam = M.rs, M.highest_weight
    lowest = cartan.apply_word(rs, cartan.weyl_group_words(rs, cap=10**6)[-1], lam)
    box = rs.to_simple_coords(sub(lam, lowest))
    predicted = set()

    def rec(i, g):
        if i == rs.rank:
            if cartan.in_convex_hull_of_orbit(rs, lam, g):
                predicted.add(g)
            return
        for c in range(int(box[i]) + 1):
            rec(i + 1, sub(g, cartan.scale(c, rs.simple_root(i))))

    rec(0, lam)
    return predicted == M.support()


def shapovalov_rank(rs: RootSystem, lam: Weight, words: Sequence[tuple[int, ...]]) -> int:
    """Rank of the contravariant form on f-monomials applied to the top vector.

    Independent of ``build_irrep``: computed in the Verma module using only
    e_j f_i = f_i e_j + delta_ij h_i and e_j v_top = 0.
    """
    from .linalg import rank_exact

    def wt(word):
        g = lam
        for i in word:
            g = sub(g, rs.simple_root(i))
        return g

    cache: dict = {}

    def apply_e(j, word) -> dict:
        key = (j, word)
        if key in cache:
            return cache[key]
        out: dict = {}
        if word:
            i, rest = word[0], word[1:]
            for w, c in apply_e(j, rest).items():
                add_into(out, {(i,) + w: c})
            if i == j and wt(rest)[j]:
                add_into(out, {rest: 1}, wt(rest)[j])
        cache[key] = out
        return out

    def pair(w1, w2) -> Fraction:
        vec = {w2: Fraction(1)}
        for j in w1:
            nxt: dict = {}
            for w, c in vec.items():
                add_into(nxt, apply_e(j, w), c)
            vec = nxt
        return vec.get((), Fraction(0))

    gram = [[pair(a, b) for b in words] for a in words]
    return rank_exact(gram)


def intertwiners(M: WeightModule, N: WeightModule) -> list[list[list[Fraction]]]:
    """Basis of {T : T E_i = E_i T, T F_i = F_i T} as dim N x dim M matrices.

    Solves the equivariance system directly; Schur's lemma predicts one
    solution up to scale when M and N are isomorphic irreducibles.
    """
    if M.rs.spec != N.rs.spec:
        raise ValueError("modules over different root systems")
    # any solution commutes with H_i = [E_i, F_i], so only weight-preserving entries can be nonzero
    unknowns = [(r, k) for k in range(M.dim) for r in N.basis_at(M.weights[k])]
    cols = []
    for r, k in unknowns:
        col: dict = {}
        for tag, ops_m, ops_n, rows_m in (("E", M.E, N.E, M.E_rows), ("F", M.F, N.F, M.F_rows)):
            for i in range(M.rs.rank):
                # (T X)[r][c] picks X[k][c]; (Y T)[r2][k] picks Y[r2][r]
                for c, v in rows_m[i].get(k, {}).items():
                    add_into(col, {(tag, i, r, c): v})
                for r2, y in ops_n[i].get(r, {}).items():
                    add_into(col, {(tag, i, r2, k): y}, -1)
        cols.append(col)
    out = []
    for vec in sparse_nullspace(cols):
        T = [[Fraction(0)] * M.dim for _ in range(N.dim)]
        for (r, k), x in zip(unknowns, vec):
            T[r][k] = x
        out.append(T)
    return out


def basis_label(M: WeightModule, b: int) -> Hashable:
    return M.words[b] if M.words is not None else b
