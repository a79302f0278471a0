"""Constructors for every named Hopf algebra family in the atlas.

Monomial bases are frozen per family and documented next to each constructor;
serialization and the golden-file tests depend on that order.  Every build()
result is fully re-verified (axioms + metadata claims); an axiom failure is a
constructor bug and raises AtlasConstructionError.

Families and their CLI names:

    kC{n}        group algebra of the cyclic group C_n
    kC{n}dual    its dual (functions on C_n)
    kD{k}dual    functions on the dihedral group of order 2k
    taft{N}      Taft algebra at a primitive N-th root of unity, dim N^2
    h4           the 4-dimensional Taft algebra (Sweedler algebra)
    a2           dim 8, two skew-primitive generators over C_2
    a4p          dim 8, g of order 4, x^2 = 0
    a4pp         dim 8, g of order 4, x^2 = g^2 - 1
    a4ppp+/-     dim 8, g of order 4, gx = (+-i) xg, x^2 = 0
    a22          dim 8, grouplikes C_2 x C_2, one skew generator
    k8           dim 8, matrix-like generators; the only dim-8 Hopf algebra
                 that is neither semisimple nor pointed
    am10:{p}     dim 4p, g of order 2p, x^2 = 0, skew partner g
    am10d:{p}    dim 4p, commutation scalar a primitive p-th root, partner g^p
    am11:{p}     dim 4p, x^2 = g^2 - 1, skew partner g
    h4xc:{p}     dim 4p, x^2 = 0, skew partner g^p (tensor of h4 by kC_p)

Prefix "dual:" (e.g. "dual:taft3") resolves to the dual of a family.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .groups import FiniteGroup, parse_group
from .hopf import FinHopf, LinearMap, hopf_dual, verify_antipode, verify_bialgebra
from .linalg import Subspace, sp_add_into, sp_scale
from .scalars import FieldElem


class AtlasConstructionError(RuntimeError):
    """A constructor produced something that fails verification."""


class UnknownFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    params: tuple = ()

    def __str__(self):
        return family_string(self)


@dataclass
class Presentation:
    """Generator/word data used by the isomorphism machinery.

    grouplike_gens maps generator name to its order; skew_gens maps a
    generator x with Delta(x) = x(x)1 + w(x)x to the word w as {gen: exp}.
    words[i] is the monomial of basis index i as a tuple of (gen, exp).
    relations(images, K) returns the list of violated relation names.
    """

    gen_names: list
    grouplike_gens: dict
    skew_gens: dict
    words: list
    relations: object


PRESENTATIONS: dict[str, Presentation] = {}


# ---------------------------------------------------------------------------
# generic construction machinery
# ---------------------------------------------------------------------------

def _finish(name, order, words, mult, gen_data, metadata):
    """Assemble a FinHopf from a mult table plus generator coalgebra data.

    gen_data: {gen: (delta_pairdict, eps_scalar, s_elem)}; comult, counit and
    antipode extend (anti)multiplicatively along the monomial words.
    """
    dim = len(words)
    one = FieldElem.one(order)
    unit_idx = words.index(())
    unit = {unit_idx: one}
    partial = FinHopf(name, dim, order, mult, unit, {}, {}, LinearMap.identity(order, dim))

    comult, counit, scols = {}, {}, []
    unit_tensor = {(unit_idx, unit_idx): one}
    for i, word in enumerate(words):
        d = dict(unit_tensor)
        e = one
        s = {unit_idx: one}
        for gen, exp in word:
            gd, ge, gs = gen_data[gen]
            for _ in range(exp):
                d = partial.mul2(d, gd)
                e = e * ge
        for gen, exp in reversed(word):
            gd, ge, gs = gen_data[gen]
            for _ in range(exp):
                s = partial.mul(s, gs)
        if d:
            comult[i] = d
        if e:
            counit[i] = e
        scols.append(s)
    # antipode is antimultiplicative: S(w1^a w2^b) = S(w2)^b S(w1)^a
    anti = LinearMap(order, dim, dim, scols)
    return FinHopf(name, dim, order, mult, unit, comult, counit, anti, metadata)


def _gen_vec(words, word, order):
    idx = words.index(word)
    return {idx: FieldElem.one(order)}


def _labels(words):
    out = []
    for w in words:
        out.append("*".join(f"{g}^{e}" if e > 1 else g for g, e in w) or "1")
    return out


# ---------------------------------------------------------------------------
# group algebras and their duals
# ---------------------------------------------------------------------------

def group_algebra(group: FiniteGroup, order=None, family=None) -> FinHopf:
    """kG: basis the group elements in the group's frozen element order."""
    n = group.order
    field_order = order or max(group.exponent, 1)
    one = FieldElem.one(field_order)
    mult = {}
    for i, a in enumerate(group.elements):
        for j, b in enumerate(group.elements):
            mult[(i, j)] = {group.index[group.mult(a, b)]: one}
    e = group.index[group.identity]
    unit = {e: one}
    comult = {i: {(i, i): one} for i in range(n)}
    counit = {i: one for i in range(n)}
    anti = LinearMap(
        field_order, n, n, [{group.index[group.inv(a)]: one} for a in group.elements]
    )
    chars = group.characters(field_order)
    dual_groups = [
        {i: v for i, v in enumerate(vals) if v} for vals in chars
    ]
    dual_blocks = []
    for rep in group.two_dim_irreps(field_order):
        block = [[None, None], [None, None]]
        for u in range(2):
            for v in range(2):
                vec = {}
                for i, g in enumerate(group.elements):
                    c = rep[g][u][v]
                    if c:
                        vec[i] = c
                block[u][v] = vec
        dual_blocks.append(block)
    meta = {
        "family": family or f"k[{group.name}]",
        "basis_labels": list(group.labels),
        "claimed_grouplikes": [{i: one} for i in range(n)],
        "claimed_generators": {},
        "claimed_matrix_bases": [],
        "dual_grouplikes": dual_groups,
        "dual_matrix_bases": dual_blocks,
    }
    return FinHopf(family or f"k[{group.name}]", n, field_order, mult, unit, comult, counit, anti, meta)


# ---------------------------------------------------------------------------
# one grouplike generator g (order M) and one skew generator x, x^2 in k + k*g^2
#
# basis g^a x^e with 0 <= a < M, e in {0, 1}, index e*M + a
# (grouplike part first, then x-degree)
# ---------------------------------------------------------------------------

def _two_gen_family(name, order, M, commute, x_sq, partner_exp, family, extra_meta=None):
    """Relations: g^M = 1, x g = commute * g x, x^2 = x_sq[0] + x_sq[1]*g^2,
    Delta(x) = x(x)1 + g^partner_exp(x)x."""
    words = [(("g", a),) if a else () for a in range(M)]
    words += [(("g", a), ("x", 1)) if a else (("x", 1),) for a in range(M)]
    words = [tuple(p for p in w if p[1]) for w in words]
    one = FieldElem.one(order)
    s0 = FieldElem.from_rational(x_sq[0], order) if not isinstance(x_sq[0], FieldElem) else x_sq[0]
    s2 = FieldElem.from_rational(x_sq[1], order) if not isinstance(x_sq[1], FieldElem) else x_sq[1]

    def idx(a, e):
        return e * M + a

    mult = {}
    for a1 in range(M):
        for e1 in range(2):
            for a2 in range(M):
                for e2 in range(2):
                    coeff = commute.power(e1 * a2) if e1 * a2 else one
                    a = (a1 + a2) % M
                    if e1 + e2 < 2:
                        row = {idx(a, e1 + e2): coeff}
                    else:
                        row = {}
                        if s0:
                            row[idx(a, 0)] = coeff * s0
                        if s2:
                            row[idx((a + 2) % M, 0)] = coeff * s2
                    if row:
                        mult[(idx(a1, e1), idx(a2, e2))] = row
    g_delta = {(idx(1, 0), idx(1, 0)): one}
    x_delta = {(idx(0, 1), idx(0, 0)): one, (idx(partner_exp, 0), idx(0, 1)): one}
    # S(g) = g^{M-1};  S(x) = -g^{-partner} x
    s_g = {idx(M - 1, 0): one}
    s_x = {idx((-partner_exp) % M, 1): -one}
    gen_data = {
        "g": (g_delta, one, s_g),
        "x": (x_delta, FieldElem.zero(order), s_x),
    }
    meta = {
        "family": family,
        "basis_labels": _labels(words),
        "claimed_grouplikes": [{idx(a, 0): one} for a in range(M)],
        "claimed_generators": {"g": {idx(1, 0): one}, "x": {idx(0, 1): one}},
        "claimed_matrix_bases": [],
    }
    meta.update(extra_meta or {})
    h = _finish(name, order, words, mult, gen_data, meta)
    return h, words


def _character_functionals(order, M, allowed, idx):
    """Algebra maps g -> zeta_M^j, x -> 0 as dual-basis vectors."""
    out = []
    for j in allowed:
        vec = {}
        for a in range(M):
            vec[idx(a, 0)] = FieldElem.zeta(order, (a * j * (order // M)) % order)
        out.append(vec)
    return out


def _irrep_functionals(order, M, idx):
    """Coefficient functionals of the 2-dim irreps rho_j(g)=diag(z^j, z^(j+M/2)),
    rho_j(x) = [[0, z^(2j)-1],[1,0]]; one block per eigenvalue pair with
    z^(2j) != 1.  Only used for families with x^2 = g^2 - 1."""
    half = M // 2
    step = order // M
    blocks = []
    for j in range(1, half):
        alpha = FieldElem.zeta(order, j * step)
        beta = alpha * alpha - FieldElem.one(order)
        rho_g = ((alpha, FieldElem.zero(order)), (FieldElem.zero(order), -alpha))
        rho_x = (
            (FieldElem.zero(order), beta),
            (FieldElem.one(order), FieldElem.zero(order)),
        )
        mats = {}
        cur = ((FieldElem.one(order), FieldElem.zero(order)), (FieldElem.zero(order), FieldElem.one(order)))
        for a in range(M):
            mats[(a, 0)] = cur
            mats[(a, 1)] = _mat_mul(cur, rho_x)
            cur = _mat_mul(cur, rho_g)
        block = [[None, None], [None, None]]
        for u in range(2):
            for v in range(2):
                vec = {}
                for (a, e), mat in mats.items():
                    c = mat[u][v]
                    if c:
                        vec[idx(a, e)] = c
                block[u][v] = vec
        blocks.append(block)
    return blocks


def _mat_mul(a, b):
    return tuple(
        tuple(sum((a[u][k] * b[k][v] for k in range(2)), start=a[0][0] * 0) for v in range(2))
        for u in range(2)
    )


def _two_gen_presentation(M, partner_exp, words, relations):
    return Presentation(
        gen_names=["g", "x"],
        grouplike_gens={"g": M},
        skew_gens={"x": {"g": partner_exp}},
        words=list(words),
        relations=relations,
    )


# ---------------------------------------------------------------------------
# Taft algebras: basis g^a x^b, 0 <= a,b < N, index b*N + a
# ---------------------------------------------------------------------------

def _taft(N, family) -> FinHopf:
    order = N if N >= 3 else 2
    q = FieldElem.zeta(order, order // N)
    one = FieldElem.one(order)
    words = []
    for b in range(N):
        for a in range(N):
            w = []
            if a:
                w.append(("g", a))
            if b:
                w.append(("x", b))
            words.append(tuple(w))

    def idx(a, b):
        return b * N + a

    mult = {}
    for a1 in range(N):
        for b1 in range(N):
            for a2 in range(N):
                for b2 in range(N):
                    if b1 + b2 >= N:
                        continue
                    coeff = q.power((-b1 * a2) % N) if b1 * a2 else one
                    mult[(idx(a1, b1), idx(a2, b2))] = {idx((a1 + a2) % N, b1 + b2): coeff}
    g_delta = {(idx(1, 0), idx(1, 0)): one}
    x_delta = {(idx(0, 1), idx(0, 0)): one, (idx(1, 0), idx(0, 1)): one}
    s_g = {idx(N - 1, 0): one}
    s_x = {idx(N - 1, 1): -one}  # S(x) = -g^{-1}x, already in normal form
    gen_data = {"g": (g_delta, one, s_g), "x": (x_delta, FieldElem.zero(order), s_x)}
    meta = {
        "family": family,
        "basis_labels": _labels(words),
        "claimed_grouplikes": [{idx(a, 0): one} for a in range(N)],
        "claimed_generators": {"g": {idx(1, 0): one}, "x": {idx(0, 1): one}},
        "claimed_matrix_bases": [],
        "dual_grouplikes": _character_functionals(order, N, range(N), idx),
        "dual_matrix_bases": [],
    }
    h = _finish(f"T(zeta_{N})" if N > 2 else "H4", order, words, mult, gen_data, meta)

    def relations(images, K):
        G, X = images["g"], images["x"]
        failed = []
        if K.elem_power(G, N) != K.one_elem():
            failed.append(f"g^{N}=1")
        if K.elem_power(X, N) != {}:
            failed.append(f"x^{N}=0")
        qk = q.embed(K.order) if K.order != q.order else q
        if K.mul(G, X) != sp_scale(K.mul(X, G), qk):
            failed.append("gx=q*xg")
        return failed

    PRESENTATIONS[family] = Presentation(
        gen_names=["g", "x"],
        grouplike_gens={"g": N},
        skew_gens={"x": {"g": 1}},
        words=words,
        relations=relations,
    )
    return h


# ---------------------------------------------------------------------------
# dim 8, three generators g, x, y: basis g^a x^b y^c, index a + 2b + 4c
# ---------------------------------------------------------------------------

def _a2(family="a2") -> FinHopf:
    order = 4
    one = FieldElem.one(order)
    words = []
    for c in range(2):
        for b in range(2):
            for a in range(2):
                w = []
                if a:
                    w.append(("g", 1))
                if b:
                    w.append(("x", 1))
                if c:
                    w.append(("y", 1))
                words.append(tuple(w))

    def idx(a, b, c):
        return a + 2 * b + 4 * c

    mult = {}
    for a1 in range(2):
        for b1 in range(2):
            for c1 in range(2):
                for a2 in range(2):
                    for b2 in range(2):
                        for c2 in range(2):
                            if b1 + b2 >= 2 or c1 + c2 >= 2:
                                continue
                            sign = (-1) ** ((b1 + c1) * a2 + c1 * b2)
                            mult[(idx(a1, b1, c1), idx(a2, b2, c2))] = {
                                idx((a1 + a2) % 2, b1 + b2, c1 + c2): one * sign
                            }
    g = {(idx(1, 0, 0), idx(1, 0, 0)): one}
    x = {(idx(0, 1, 0), 0): one, (idx(1, 0, 0), idx(0, 1, 0)): one}
    y = {(idx(0, 0, 1), 0): one, (idx(1, 0, 0), idx(0, 0, 1)): one}
    zero = FieldElem.zero(order)
    gen_data = {
        "g": (g, one, {idx(1, 0, 0): one}),
        "x": (x, zero, {idx(1, 1, 0): -one}),
        "y": (y, zero, {idx(1, 0, 1): -one}),
    }
    meta = {
        "family": family,
        "basis_labels": _labels(words),
        "claimed_grouplikes": [{0: one}, {idx(1, 0, 0): one}],
        "claimed_generators": {
            "g": {idx(1, 0, 0): one},
            "x": {idx(0, 1, 0): one},
            "y": {idx(0, 0, 1): one},
        },
        "claimed_matrix_bases": [],
        "dual_grouplikes": [
            {idx(a, 0, 0): (one if (a * j) % 2 == 0 else -one) for a in range(2)}
            for j in range(2)
        ],
        "dual_matrix_bases": [],
    }
    h = _finish("A2", order, words, mult, gen_data, meta)

    def relations(images, K):
        G, X, Y = images["g"], images["x"], images["y"]
        failed = []
        if K.mul(G, G) != K.one_elem():
            failed.append("g^2=1")
        for nm, Z in (("x", X), ("y", Y)):
            if K.mul(Z, Z) != {}:
                failed.append(f"{nm}^2=0")
            anti = K.mul(G, Z)
            sp_add_into(anti, K.mul(Z, G))
            if anti:
                failed.append(f"g{nm}+{nm}g=0")
        anti = K.mul(X, Y)
        sp_add_into(anti, K.mul(Y, X))
        if anti:
            failed.append("xy+yx=0")
        return failed

    PRESENTATIONS[family] = Presentation(
        gen_names=["g", "x", "y"],
        grouplike_gens={"g": 2},
        skew_gens={"x": {"g": 1}, "y": {"g": 1}},
        words=words,
        relations=relations,
    )
    return h


# ---------------------------------------------------------------------------
# dim 8, grouplikes C2 x C2: basis g^a h^b x^c, index a + 2b + 4c
# ---------------------------------------------------------------------------

def _a22(family="a22") -> FinHopf:
    order = 4
    one = FieldElem.one(order)
    words = []
    for c in range(2):
        for b in range(2):
            for a in range(2):
                w = []
                if a:
                    w.append(("g", 1))
                if b:
                    w.append(("h", 1))
                if c:
                    w.append(("x", 1))
                words.append(tuple(w))

    def idx(a, b, c):
        return a + 2 * b + 4 * c

    mult = {}
    for a1 in range(2):
        for b1 in range(2):
            for c1 in range(2):
                for a2 in range(2):
                    for b2 in range(2):
                        for c2 in range(2):
                            if c1 + c2 >= 2:
                                continue
                            sign = (-1) ** (c1 * (a2 + b2))
                            mult[(idx(a1, b1, c1), idx(a2, b2, c2))] = {
                                idx((a1 + a2) % 2, (b1 + b2) % 2, c1 + c2): one * sign
                            }
    zero = FieldElem.zero(order)
    gen_data = {
        "g": ({(idx(1, 0, 0), idx(1, 0, 0)): one}, one, {idx(1, 0, 0): one}),
        "h": ({(idx(0, 1, 0), idx(0, 1, 0)): one}, one, {idx(0, 1, 0): one}),
        "x": (
            {(idx(0, 0, 1), 0): one, (idx(1, 0, 0), idx(0, 0, 1)): one},
            zero,
            {idx(1, 0, 1): -one},
        ),
    }
    meta = {
        "family": family,
        "basis_labels": _labels(words),
        "claimed_grouplikes": [
            {idx(a, b, 0): one} for b in range(2) for a in range(2)
        ],
        "claimed_generators": {
            "g": {idx(1, 0, 0): one},
            "h": {idx(0, 1, 0): one},
            "x": {idx(0, 0, 1): one},
        },
        "claimed_matrix_bases": [],
        "dual_grouplikes": [
            {
                idx(a, b, 0): (one if (a * j + b * k) % 2 == 0 else -one)
                for b in range(2)
                for a in range(2)
            }
            for j in range(2)
            for k in range(2)
        ],
        "dual_matrix_bases": [],
    }
    h = _finish("A22", order, words, mult, gen_data, meta)

    def relations(images, K):
        G, H_, X = images["g"], images["h"], images["x"]
        failed = []
        if K.mul(G, G) != K.one_elem():
            failed.append("g^2=1")
        if K.mul(H_, H_) != K.one_elem():
            failed.append("h^2=1")
        if K.mul(G, H_) != K.mul(H_, G):
            failed.append("gh=hg")
        if K.mul(X, X) != {}:
            failed.append("x^2=0")
        for nm, Z in (("g", G), ("h", H_)):
            anti = K.mul(Z, X)
            sp_add_into(anti, K.mul(X, Z))
            if anti:
                failed.append(f"{nm}x+x{nm}=0")
        return failed

    PRESENTATIONS[family] = Presentation(
        gen_names=["g", "h", "x"],
        grouplike_gens={"g": 2, "h": 2},
        skew_gens={"x": {"g": 1}},
        words=words,
        relations=relations,
    )
    return h


# ---------------------------------------------------------------------------
# dim 8 matrix-like family: basis a^i c^e, index e*4 + i
# relations a^4 = 1, c^2 = 0, ac = xi ca (xi = zeta_4), and the matrix-like
# generators are e11 = a, e12 = a^2 c, e21 = c, e22 = a^3
# ---------------------------------------------------------------------------

def _k8(family="k8") -> FinHopf:
    order = 4
    xi = FieldElem.zeta(order)
    one = FieldElem.one(order)
    words = []
    for e in range(2):
        for i in range(4):
            w = []
            if i:
                w.append(("a", i))
            if e:
                w.append(("c", 1))
            words.append(tuple(w))

    def idx(i, e):
        return e * 4 + i

    mult = {}
    for i1 in range(4):
        for e1 in range(2):
            for i2 in range(4):
                for e2 in range(2):
                    if e1 + e2 >= 2:
                        continue
                    coeff = xi.power((-e1 * i2) % 4) if e1 * i2 else one
                    mult[(idx(i1, e1), idx(i2, e2))] = {idx((i1 + i2) % 4, e1 + e2): coeff}
    zero = FieldElem.zero(order)
    a_delta = {(idx(1, 0), idx(1, 0)): one, (idx(2, 1), idx(0, 1)): one}
    c_delta = {(idx(0, 1), idx(1, 0)): one, (idx(3, 0), idx(0, 1)): one}
    gen_data = {
        "a": (a_delta, one, {idx(3, 0): one}),
        "c": (c_delta, zero, {idx(0, 1): -xi}),
    }
    e11 = {idx(1, 0): one}
    e12 = {idx(2, 1): one}
    e21 = {idx(0, 1): one}
    e22 = {idx(3, 0): one}
    meta = {
        "family": family,
        "basis_labels": _labels(words),
        "claimed_grouplikes": [{0: one}, {idx(2, 0): one}],
        "claimed_generators": {"a": e11, "b": e12, "c": e21, "d": e22},
        "claimed_matrix_bases": [[[e11, e12], [e21, e22]]],
        "dual_grouplikes": [
            {idx(i, 0): FieldElem.zeta(order, (i * j) % 4) for i in range(4)}
            for j in range(4)
        ],
        "dual_matrix_bases": [],
    }
    h = _finish("K8", order, words, mult, gen_data, meta)

    def relations(images, K):
        A, C = images["a"], images["c"]
        failed = []
        if K.elem_power(A, 4) != K.one_elem():
            failed.append("a^4=1")
        if K.mul(C, C) != {}:
            failed.append("c^2=0")
        xik = xi.embed(K.order) if K.order != 4 else xi
        if K.mul(A, C) != sp_scale(K.mul(C, A), xik):
            failed.append("ac=xi*ca")
        return failed

    PRESENTATIONS[family] = Presentation(
        gen_names=["a", "c"],
        grouplike_gens={},
        skew_gens={},
        words=words,
        relations=relations,
    )
    return h


# ---------------------------------------------------------------------------
# family registry
# ---------------------------------------------------------------------------

def parse_family(s: str) -> FamilySpec:
    s = s.strip()
    if s.startswith("dual:"):
        return FamilySpec("dual", (s[5:],))
    if s == "h4":
        return FamilySpec("h4")
    if s in ("a2", "a4p", "a4pp", "a22", "k8"):
        return FamilySpec(s)
    if s in ("a4ppp+", "a4ppp-"):
        return FamilySpec("a4ppp", (1 if s.endswith("+") else -1,))
    if s.startswith("taft"):
        return FamilySpec("taft", (int(s[4:]),))
    if s.startswith("kC") and s.endswith("dual"):
        return FamilySpec("kCdual", (int(s[2:-4]),))
    if s.startswith("kD") and s.endswith("dual"):
        return FamilySpec("kDdual", (int(s[2:-4]),))
    if s.startswith("kC"):
        return FamilySpec("kC", (int(s[2:]),))
    for pref, fid in (("am10d:", "am10d"), ("am10:", "am10"), ("am11:", "am11"), ("h4xc:", "h4xc")):
        if s.startswith(pref):
            return FamilySpec(fid, (int(s[len(pref):]),))
    raise UnknownFamilyError(f"unknown family {s!r}")


def family_string(spec: FamilySpec) -> str:
    fid, p = spec.family_id, spec.params
    if fid == "dual":
        return f"dual:{p[0]}"
    if fid == "taft":
        return f"taft{p[0]}"
    if fid == "kC":
        return f"kC{p[0]}"
    if fid == "kCdual":
        return f"kC{p[0]}dual"
    if fid == "kDdual":
        return f"kD{p[0]}dual"
    if fid == "a4ppp":
        return "a4ppp+" if p[0] == 1 else "a4ppp-"
    if fid in ("am10", "am10d", "am11", "h4xc"):
        return f"{fid}:{p[0]}"
    return fid


def _check_odd_prime(p):
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p ** 0.5) + 1, 2)):
        raise ValueError(f"parameter must be an odd prime, got {p}")


def _build_unverified(spec: FamilySpec) -> FinHopf:
    fid, params = spec.family_id, spec.params
    fam = family_string(spec)
    if fid == "dual":
        h = build(params[0])
        d = hopf_dual(h)
        d.metadata["family"] = fam
        return d
    if fid == "kC":
        (n,) = params
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        return group_algebra(parse_group(f"C{n}"), family=fam)
    if fid == "kCdual":
        (n,) = params
        d = hopf_dual(group_algebra(parse_group(f"C{n}"), family=f"kC{n}"))
        d.name = fam
        d.metadata["family"] = fam
        return d
    if fid == "kDdual":
        (k,) = params
        d = hopf_dual(group_algebra(parse_group(f"D{k}"), order=k, family=f"kD{k}"))
        d.name = fam
        d.metadata["family"] = fam
        return d
    if fid == "taft":
        (N,) = params
        if N < 2:
            raise ValueError("Taft parameter must be >= 2")
        return _taft(N, fam)
    if fid == "h4":
        h = _taft(2, "h4")
        h.name = "H4"
        return h
    if fid == "a2":
        return _a2()
    if fid == "a22":
        return _a22()
    if fid == "k8":
        return _k8()
    if fid == "a4p":
        order = 4
        h, words = _two_gen_family(
            "A4'", order, 4, -FieldElem.one(order), (0, 0), 1, fam,
            extra_meta={
                "dual_grouplikes": _character_functionals(order, 4, range(4), lambda a, e: e * 4 + a),
                "dual_matrix_bases": [],
            },
        )
        PRESENTATIONS[fam] = _two_gen_presentation(4, 1, words, _anticommute_relations(4, (0, 0)))
        return h
    if fid == "a4pp":
        order = 4
        h, words = _two_gen_family(
            "A4''", order, 4, -FieldElem.one(order), (-1, 1), 1, fam,
            extra_meta={
                "dual_grouplikes": _character_functionals(order, 4, (0, 2), lambda a, e: e * 4 + a),
                "dual_matrix_bases": _irrep_functionals(order, 4, lambda a, e: e * 4 + a),
            },
        )
        PRESENTATIONS[fam] = _two_gen_presentation(4, 1, words, _anticommute_relations(4, (-1, 1)))
        return h
    if fid == "a4ppp":
        (sign,) = params
        order = 4
        xi = FieldElem.zeta(order, 1 if sign == 1 else 3)
        commute = xi.inverse()  # gx = xi xg  =>  xg = xi^{-1} gx
        h, words = _two_gen_family(
            f"A4'''({'+' if sign == 1 else '-'})", order, 4, commute, (0, 0), 2, fam,
            extra_meta={
                "dual_grouplikes": _character_functionals(order, 4, range(4), lambda a, e: e * 4 + a),
                "dual_matrix_bases": [],
            },
        )
        PRESENTATIONS[fam] = _two_gen_presentation(4, 2, words, _scaled_commute_relations(4, xi, (0, 0)))
        return h
    if fid in ("am10", "am11", "h4xc", "am10d"):
        (p,) = params
        _check_odd_prime(p)
        M = 2 * p
        if fid == "am10d":
            order = lcm(4, p)
            xi = FieldElem.zeta(order, order // p)  # primitive p-th root
            commute = (-xi).inverse()  # gx = -xi xg
            h, words = _two_gen_family(
                f"A(-1,0)*[p={p}]", order, M, commute, (0, 0), p, fam,
                extra_meta={
                    "dual_grouplikes": _character_functionals(order, M, range(M), lambda a, e: e * M + a),
                    "dual_matrix_bases": [],
                },
            )
            PRESENTATIONS[fam] = _two_gen_presentation(M, p, words, _scaled_commute_relations(M, -xi, (0, 0)))
            return h
        order = M
        neg = -FieldElem.one(order)
        if fid == "am10":
            x_sq, partner, name = (0, 0), 1, f"A(-1,0)[p={p}]"
            duals = _character_functionals(order, M, range(M), lambda a, e: e * M + a)
            dual_blocks = []
        elif fid == "am11":
            x_sq, partner, name = (-1, 1), 1, f"A(-1,1)[p={p}]"
            duals = _character_functionals(order, M, (0, p), lambda a, e: e * M + a)
            dual_blocks = _irrep_functionals(order, M, lambda a, e: e * M + a)
        else:
            x_sq, partner, name = (0, 0), p, f"H4xC{p}"
            duals = _character_functionals(order, M, range(M), lambda a, e: e * M + a)
            dual_blocks = []
        h, words = _two_gen_family(
            name, order, M, neg, x_sq, partner, fam,
            extra_meta={"dual_grouplikes": duals, "dual_matrix_bases": dual_blocks},
        )
        PRESENTATIONS[fam] = _two_gen_presentation(M, partner, words, _anticommute_relations(M, x_sq))
        return h
    raise UnknownFamilyError(f"unknown family id {fid!r}")


def _anticommute_relations(M, x_sq):
    def relations(images, K):
        G, X = images["g"], images["x"]
        failed = []
        if K.elem_power(G, M) != K.one_elem():
            failed.append(f"g^{M}=1")
        rhs = sp_scale(K.one_elem(), K.scalar(x_sq[0]))
        sp_add_into(rhs, K.mul(G, G), K.scalar(x_sq[1]))
        if K.mul(X, X) != rhs:
            failed.append("x^2")
        anti = K.mul(G, X)
        sp_add_into(anti, K.mul(X, G))
        if anti:
            failed.append("gx+xg=0")
        return failed

    return relations


def _scaled_commute_relations(M, xi, x_sq):
    """gx = xi * xg (for a4ppp with xi = +-zeta_4; for am10d with xi = -zeta_p)."""

    def relations(images, K):
        G, X = images["g"], images["x"]
        failed = []
        if K.elem_power(G, M) != K.one_elem():
            failed.append(f"g^{M}=1")
        rhs = sp_scale(K.one_elem(), K.scalar(x_sq[0]))
        sp_add_into(rhs, K.mul(G, G), K.scalar(x_sq[1]))
        if K.mul(X, X) != rhs:
            failed.append("x^2")
        xik = xi.embed(K.order) if xi.order != K.order else xi
        if K.mul(G, X) != sp_scale(K.mul(X, G), xik):
            failed.append("gx=xi*xg")
        return failed

    return relations


_BUILD_CACHE: dict[str, FinHopf] = {}


def build(spec, verify=True) -> FinHopf:
    """Construct and verify an atlas family; hard error on any failure."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    fam = family_string(spec)
    if fam in _BUILD_CACHE:
        return _BUILD_CACHE[fam]
    h = _build_unverified(spec)
    if verify:
        rep = verify_bialgebra(h)
        if not rep.ok:
            raise AtlasConstructionError(f"{fam}: bialgebra axioms failed: {rep.failures[:3]}")
        rep = verify_antipode(h)
        if not rep.ok:
            raise AtlasConstructionError(f"{fam}: antipode axioms failed: {rep.failures[:3]}")
        _verify_metadata_claims(h, fam)
    _BUILD_CACHE[fam] = h
    return h


def _verify_metadata_claims(h: FinHopf, fam: str):
    one = FieldElem.one(h.order)
    for g in h.metadata.get("claimed_grouplikes", []):
        if h.delta(g) != h.tensor_elem(g, g) or h.eps(g) != 1:
            raise AtlasConstructionError(f"{fam}: claimed grouplike fails Delta/eps")
        if h.mul(h.s(g), g) != h.one_elem() or h.mul(g, h.s(g)) != h.one_elem():
            raise AtlasConstructionError(f"{fam}: claimed grouplike not a unit")
    for block in h.metadata.get("claimed_matrix_bases", []):
        d = len(block)
        for u in range(d):
            for v in range(d):
                expect = {}
                for l in range(d):
                    sp_add_into(expect, h.tensor_elem(block[u][l], block[l][v]))
                if h.delta(block[u][v]) != expect:
                    raise AtlasConstructionError(f"{fam}: matrix-like comult fails at {(u, v)}")
                target = one if u == v else FieldElem.zero(h.order)
                if h.eps(block[u][v]) != target:
                    raise AtlasConstructionError(f"{fam}: matrix-like counit fails at {(u, v)}")
        vecs = [block[u][v] for u in range(d) for v in range(d)]
        if Subspace.from_vectors(h.order, h.dim, vecs).dim != d * d:
            raise AtlasConstructionError(f"{fam}: matrix-like basis not independent")
    for phi in h.metadata.get("dual_grouplikes", []):
        if _functional_on(h, phi, h.one_elem()) != 1:
            raise AtlasConstructionError(f"{fam}: dual grouplike is not unital")
        for i in range(h.dim):
            for j in range(h.dim):
                prod = h.mul(h.basis_elem(i), h.basis_elem(j))
                lhs = _functional_on(h, phi, prod)
                rhs = _functional_on(h, phi, h.basis_elem(i)) * _functional_on(h, phi, h.basis_elem(j))
                if lhs != rhs:
                    raise AtlasConstructionError(f"{fam}: dual grouplike not multiplicative at {(i, j)}")


def _functional_on(h, phi, elem):
    total = FieldElem.zero(h.order)
    for i, c in elem.items():
        v = phi.get(i)
        if v:
            total = total + v * c
    return total


def list_families(max_group=12, primes=(3, 5)):
    """The finite family list exercised by the acceptance suite."""
    fams = [f"kC{n}" for n in range(1, max_group + 1)]
    fams += [f"kC{n}dual" for n in range(1, max_group + 1)]
    fams += [f"kD{k}dual" for k in (3, 4, 5, 6)]
    fams += ["taft2", "taft3", "taft4", "h4"]
    fams += ["a2", "a4p", "a4pp", "a4ppp+", "a4ppp-", "a22", "k8"]
    for p in primes:
        fams += [f"am10:{p}", f"am10d:{p}", f"am11:{p}", f"h4xc:{p}"]
    return fams


# ---------------------------------------------------------------------------
# shipped isomorphism witnesses
#
# Coefficients were produced by the bounded grid search in isowitness and
# frozen here as data; verify via isowitness.verify_iso.  Vectors are given
# as {basis index: power-basis coordinate strings} at the stated field order.
# ---------------------------------------------------------------------------

_WITNESS_DATA = [
    {"source": "taft2", "target": "dual:taft2", "N": 2,
     "images": {"g": {0: ["1"], 1: ["-1"]}, "x": {2: ["1"], 3: ["-1"]}}},
    {"source": "h4", "target": "dual:h4", "N": 2,
     "images": {"g": {0: ["1"], 1: ["-1"]}, "x": {2: ["1"], 3: ["-1"]}}},
    {"source": "taft3", "target": "dual:taft3", "N": 3,
     "images": {"g": {0: ["1", "0"], 1: ["0", "1"], 2: ["-1", "-1"]},
                "x": {3: ["1", "0"], 4: ["0", "1"], 5: ["-1", "-1"]}}},
    {"source": "taft4", "target": "dual:taft4", "N": 4,
     "images": {"g": {0: ["1", "0"], 1: ["0", "1"], 2: ["-1", "0"], 3: ["0", "-1"]},
                "x": {4: ["1", "0"], 5: ["0", "1"], 6: ["-1", "0"], 7: ["0", "-1"]}}},
    {"source": "a2", "target": "dual:a2", "N": 4,
     "images": {"g": {0: ["1", "0"], 1: ["-1", "0"]},
                "x": {4: ["1", "0"], 5: ["-1", "0"]},
                "y": {2: ["1", "0"], 3: ["-1", "0"]}}},
    {"source": "a22", "target": "dual:a22", "N": 4,
     "images": {"g": {0: ["1", "0"], 1: ["-1", "0"], 2: ["-1", "0"], 3: ["1", "0"]},
                "h": {0: ["1", "0"], 1: ["-1", "0"], 2: ["1", "0"], 3: ["-1", "0"]},
                "x": {4: ["1", "0"], 5: ["-1", "0"], 6: ["-1", "0"], 7: ["1", "0"]}}},
    {"source": "a4ppp+", "target": "dual:a4p", "N": 4,
     "images": {"g": {0: ["1", "0"], 1: ["0", "1"], 2: ["-1", "0"], 3: ["0", "-1"]},
                "x": {4: ["1", "0"], 5: ["-1", "0"], 6: ["1", "0"], 7: ["-1", "0"]}}},
    {"source": "a4ppp+", "target": "a4ppp-", "N": 4,
     "images": {"g": {3: ["1", "0"]}, "x": {4: ["1", "0"]}}},
    {"source": "h4xc:3", "target": "dual:h4xc:3", "N": 6,
     "images": {"g": {0: ["1", "0"], 1: ["0", "1"], 2: ["-1", "1"],
                      3: ["-1", "0"], 4: ["0", "-1"], 5: ["1", "-1"]},
                "x": {6: ["1", "0"], 7: ["-1", "0"], 8: ["1", "0"],
                      9: ["-1", "0"], 10: ["1", "0"], 11: ["-1", "0"]}}},
    # change of basis between the presentation-built k8 and the dual of a4pp;
    # the scaling needs sqrt(2) = z8 - z8^3, so this witness lives in Q(zeta_8)
    {"source": "k8", "target": "dual:a4pp", "N": 8,
     "images": {"a": {0: ["1", "0", "0", "0"], 1: ["0", "0", "1", "0"],
                      2: ["-1", "0", "0", "0"], 3: ["0", "0", "-1", "0"]},
                "c": {4: ["0", "1", "0", "-1"], 5: ["0", "-1", "0", "-1"],
                      6: ["0", "-1", "0", "1"], 7: ["0", "1", "0", "1"]}}},
]


def builtin_witnesses():
    """Shipped duality / change-of-basis witnesses, as IsoWitness values."""
    from .isowitness import IsoWitness

    out = []
    for rec in _WITNESS_DATA:
        images = {
            gen: {int(i): FieldElem.from_strings(rec["N"], coords) for i, coords in vec.items()}
            for gen, vec in rec["images"].items()
        }
        out.append(IsoWitness(rec["source"], rec["target"], images))
    return out


# ---------------------------------------------------------------------------
# sub-Hopf-algebra claims: which families contain a copy of h4
# ---------------------------------------------------------------------------

# positive claims: frozen generator words (g-image, x-image) as basis indices
_H4_EMBEDDINGS = {
    "a2": (1, 2),
    "a22": (1, 4),
    "a4ppp+": (2, 4),
    "a4ppp-": (2, 4),
}
_H4_NEGATIVE = ("a4p", "a4pp")


def _h4_embedding_indices(fam):
    if fam in _H4_EMBEDDINGS:
        return _H4_EMBEDDINGS[fam]
    spec = parse_family(fam)
    if spec.family_id in ("am10d", "h4xc"):
        p = spec.params[0]
        return (p, 2 * p)  # g -> g^p, x -> x
    return None


def _h4_is_negative(fam):
    if fam in _H4_NEGATIVE:
        return True
    spec = parse_family(fam)
    return spec.family_id in ("am10", "am11")


@dataclass
class SubHopfClaim:
    family: str
    contains_h4: bool
    embedding: object = None    # LinearMap h4 -> H for positive claims
    certificate: dict = None    # exhaustive negative evidence


def sub_hopf_claims(fam: str) -> SubHopfClaim:
    """Positive claims return a verified embedding of h4; negative claims an
    exhaustive certificate over all certified grouplikes of order 2."""
    from . import invariants as inv
    from .hopf import verify_hopf_morphism

    h = build(fam)
    h4 = build("h4")
    pos = _h4_embedding_indices(fam)
    if pos is not None:
        g_idx, x_idx = pos
        G = h.basis_elem(g_idx)
        X = h.basis_elem(x_idx)
        cols = [h.one_elem(), G, X, h.mul(G, X)]
        f = LinearMap(h.order, 4, h.dim, cols)
        rep = verify_hopf_morphism(f, h4.embed(h.order), h)
        if not rep.ok or f.rank() != 4:
            raise AtlasConstructionError(f"{fam}: shipped h4 embedding fails verification")
        return SubHopfClaim(fam, True, embedding=f)
    if not _h4_is_negative(fam):
        raise UnknownFamilyError(f"no sub-Hopf claim recorded for {fam!r}")
    rep = inv.grouplikes(h)
    if not rep.complete:
        raise AtlasConstructionError(f"{fam}: grouplikes not certified, cannot certify absence")
    evidence = []
    for g, o in zip(rep.verified, rep.orders):
        if o != 2:
            continue
        # any embedding sends the h4 grouplike to an order-2 grouplike c and
        # the skew generator to a nonzero v in P_{1,c} with cv+vc=0, v^2=0
        space = inv.skew_space(h, h.one_elem(), g)
        basis = space.basis_vectors()
        anticomm_cols = []
        for b in basis:
            a = h.mul(g, b)
            sp_add_into(a, h.mul(b, g))
            anticomm_cols.append(a)
        from .linalg import kernel_of_columns

        coeffs = kernel_of_columns(h.order, h.dim, anticomm_cols, len(basis))
        witnesses = []
        for t in coeffs.basis_vectors():
            v = {}
            for bi, c in t.items():
                sp_add_into(v, sp_scale(basis[bi], c))
            witnesses.append(v)
        if len(witnesses) == 0:
            evidence.append({"skew_dim": space.dim, "anticommutant_dim": 0})
        elif len(witnesses) == 1:
            sq = h.mul(witnesses[0], witnesses[0])
            if not sq:
                raise AtlasConstructionError(f"{fam}: unexpected h4 embedding found")
            evidence.append({"skew_dim": space.dim, "anticommutant_dim": 1, "square_nonzero": True})
        else:
            raise AtlasConstructionError(
                f"{fam}: anticommutant dimension {len(witnesses)} needs quadratic solving"
            )
    return SubHopfClaim(
        fam, False,
        certificate={"order2_grouplikes": sum(1 for o in rep.orders if o == 2),
                     "per_grouplike": evidence},
    )


# ---------------------------------------------------------------------------
# shipped surjection examples for the coinvariant laws
# ---------------------------------------------------------------------------

def shipped_surjections():
    """Three verified Hopf algebra surjections used by the coinvariant laws."""
    from .hopf import tensor_hopf

    h4 = build("h4")
    kc3 = build("kC3")
    t = tensor_hopf(h4, kc3)  # index (i,a) -> i*3 + a
    cols_to_h4 = [{i: FieldElem.one(t.order)} for i in range(4) for _ in range(3)]
    pi1 = LinearMap(t.order, 12, 4, cols_to_h4)
    cols_to_kc3 = []
    for i in range(4):
        e = h4.counit.get(i)
        for a in range(3):
            cols_to_kc3.append({a: e.embed(t.order)} if e else {})
    pi2 = LinearMap(t.order, 12, 3, cols_to_kc3)
    ident = LinearMap.identity(h4.order, 4)
    return {
        "h4xc3-to-h4": (t, h4, pi1),
        "h4xc3-to-kc3": (t, kc3, pi2),
        "id-h4": (h4, h4, ident),
    }


def matrix_coalgebra(d: int):
    """The d x d matrix-like coalgebra alone (no algebra structure): returns
    (dim, comult, counit) with basis e_uv at index u*d + v."""
    if d < 1:
        raise ValueError("matrix coalgebra needs d >= 1")
    order = 2
    one = FieldElem.one(order)
    comult = {}
    counit = {}
    for u in range(d):
        for v in range(d):
            i = u * d + v
            comult[i] = {(u * d + l, l * d + v): one for l in range(d)}
            if u == v:
                counit[i] = one
    return d * d, comult, counit
