from math import gcd

import pytest

from hopfatlas import invariants as inv
from hopfatlas.atlas import build, list_families
from hopfatlas.hopf import hopf_dual, tensor_hopf
from hopfatlas.linalg import Subspace
from hopfatlas.scalars import FieldElem


def test_radical_of_dual_dims():
    assert inv.radical_of_dual(build("kC3")).dim == 0
    assert inv.radical_of_dual(build("h4")).dim == 2
    assert inv.radical_of_dual(build("taft3")).dim == 6


def test_coradical_dims():
    assert inv.coradical(build("kC6")).dim == 6
    assert inv.coradical(build("h4")).dim == 2
    assert inv.coradical(build("k8")).dim == 6
    assert inv.coradical(build("dual:am11:3")).dim == 10


def test_taft_filtration_against_degree_oracle():
    # oracle: H_k is spanned by the monomials g^a x^b with b <= k
    t = build("taft3")
    filt = inv.coradical_filtration(t)
    assert filt.layer_dims == [3, 6, 9]
    assert filt.p_dims == [0, 3, 6]
    one = FieldElem.one(t.order)
    for k, layer in enumerate(filt.layers):
        expected = Subspace.from_vectors(
            t.order, 9, [{b * 3 + a: one} for b in range(k + 1) for a in range(3)]
        )
        assert layer == expected


def test_filtration_examples():
    assert inv.coradical_filtration(tensor_hopf(build("h4"), build("kC3"))).layer_dims == [6, 12]
    assert inv.coradical_filtration(build("dual:am11:3")).layer_dims[0] == 10
    assert inv.coradical_filtration(build("kD5dual")).layer_dims == [10]


def _is_mult_filtration(h, layers):
    for m_idx in range(len(layers)):
        for n_idx in range(len(layers)):
            tgt = layers[min(m_idx + n_idx, len(layers) - 1)]
            for u in layers[m_idx].basis_vectors():
                for v in layers[n_idx].basis_vectors():
                    if not tgt.contains(h.mul(u, v)):
                        return False
    return True


def test_filtration_structural_invariants():
    # Delta(H_n) inside sum H_i (x) H_{n-i} and S(H_n) = H_n hold always; the
    # multiplicative rule H_m * H_n inside H_{m+n} holds exactly when the
    # coradical is a subalgebra, which fails for k8 and the nonpointed duals
    for fam in ("h4", "taft3", "a4pp", "k8", "am11:3", "dual:am11:3", "h4xc:3"):
        h = build(fam)
        filt = inv.coradical_filtration(h)
        layers = filt.layers
        for n_idx, layer in enumerate(layers):
            spanning = []
            for i in range(n_idx + 1):
                lo = layers[min(i, len(layers) - 1)]
                hi = layers[min(n_idx - i, len(layers) - 1)]
                for u in lo.basis_vectors():
                    for v in hi.basis_vectors():
                        spanning.append(
                            {a * h.dim + b: c1 * c2 for a, c1 in u.items() for b, c2 in v.items()}
                        )
            target = Subspace.from_vectors(h.order, h.dim * h.dim, spanning)
            for w in layer.basis_vectors():
                assert target.contains(h.flatten_pairs(h.delta(w))), (fam, n_idx)
            for s_img in (h.s(w) for w in layer.basis_vectors()):
                assert layer.contains(s_img), fam
        h0 = layers[0]
        corad_subalgebra = all(
            h0.contains(h.mul(u, v))
            for u in h0.basis_vectors() for v in h0.basis_vectors()
        )
        if corad_subalgebra:
            assert _is_mult_filtration(h, layers), fam
        else:
            assert fam in ("k8", "dual:am11:3"), fam
            assert not _is_mult_filtration(h, layers)


def test_grouplike_counts():
    for n in (2, 3, 6):
        rep = inv.grouplikes(build(f"kC{n}"))
        assert rep.complete and rep.count == n
    rep = inv.grouplikes(build("taft3"))
    assert rep.complete and rep.count == 3 and sorted(rep.orders) == [1, 3, 3]
    rep = inv.grouplikes(build("k8"))
    assert rep.complete and rep.count == 2
    rep = inv.grouplikes(build("kD3dual"))
    assert rep.complete and rep.count == 2


def test_grouplike_incomplete_status():
    # drop a claim: the count bound still sees 2, so certification must fail open
    h4 = build("h4")
    from hopfatlas.hopf import FinHopf

    meta = dict(h4.metadata)
    meta["claimed_grouplikes"] = [h4.one_elem()]
    stripped = FinHopf("h4-stripped", 4, h4.order, h4.mult, h4.unit, h4.comult,
                       h4.counit, h4.antipode, meta)
    rep = inv.grouplikes(stripped)
    assert not rep.complete and rep.count == 1 and rep.count_bound == 2


def test_skew_space_examples():
    h4 = build("h4")
    g = h4.basis_elem(1)
    space = inv.skew_space(h4, h4.one_elem(), g)
    assert space.dim == 2
    one_minus_g = {0: h4.scalar(1), 1: h4.scalar(-1)}
    assert space.contains(one_minus_g) and space.contains(h4.basis_elem(2))
    c6 = build("kC6")
    assert inv.skew_space(c6, c6.one_elem(), c6.one_elem()).dim == 0
    kd3 = build("kD3dual")
    rep = inv.grouplikes(kd3)
    for a in rep.verified:
        for b in rep.verified:
            assert inv.skew_space(kd3, a, b).dim <= 1


def test_skew_space_rejects_non_grouplike():
    h4 = build("h4")
    with pytest.raises(inv.InvariantError):
        inv.skew_space(h4, h4.basis_elem(2), h4.basis_elem(1))


def test_antipode_orders():
    assert inv.antipode_order(build("kC2")) == 1
    assert inv.antipode_order(build("kC6")) == 2
    assert inv.antipode_order(build("taft4")) == 8
    for fam in ("am10:3", "am10d:3", "am11:3", "h4xc:3"):
        assert inv.antipode_order(build(fam)) == 4


def test_summarize_types():
    s = inv.summarize(build("h4"))
    assert s.hopf_type == (2, 2) and s.antipode_order == 4 and s.trace_S2.is_zero()
    assert s.corad_dim == 2
    s = inv.summarize(build("kC6"))
    assert s.hopf_type == (6, 6) and s.is_semisimple and s.trace_S2 == 6
    s = inv.summarize(build("dual:am11:3"))
    assert s.hopf_type == (2, 6)
    s = inv.summarize(build("k8"))
    assert s.hopf_type == (2, 4)


def test_divisibility_invariants():
    # r divides every filtration layer and every certified block total
    for fam in list_families():
        h = build(fam)
        rep = inv.grouplikes(h)
        assert rep.complete
        filt = inv.coradical_filtration(h)
        for d in filt.layer_dims:
            assert d % rep.count == 0, fam
        prof = inv.verify_coalgebra_profile(h)
        assert prof.certified
        for d, m in prof.blocks:
            assert (m * d * d) % rep.count == 0, fam


def test_gcd_gate():
    # gcd(r, dim/r) = 1 forces every skew-primitive space to be trivial
    for fam in list_families():
        h = build(fam)
        rep = inv.grouplikes(h)
        if gcd(rep.count, h.dim // rep.count) != 1:
            continue
        for a in rep.verified:
            for b in rep.verified:
                assert inv.skew_space(h, a, b).dim <= 1, fam


def test_skew_free_lower_bound_branches():
    # the bound applies only to non-cosemisimple algebras with no nontrivial
    # skew-primitives; record which branch each family lands in
    applied, vacuous = [], []
    for fam in list_families():
        h = build(fam)
        s = inv.summarize(h)
        if s.is_semisimple:
            vacuous.append(fam)
            continue
        if any(d > 1 for d in s.skew_table.values()):
            vacuous.append(fam)
            continue
        prof = inv.verify_coalgebra_profile(h)
        d1 = min((d for d, _ in prof.blocks), default=None)
        assert d1 is not None
        assert h.dim >= prof.corad_dim + (2 * d1 + 1) * s.grouplike_count + d1 * d1
        applied.append(fam)
    assert vacuous, "expected at least the semisimple families to be vacuous"


def test_exact_sequence_coradical_identity():
    # for the tensor projection onto kC3: dim (H*)_0 = 3 * dim (h4*)_0
    t = tensor_hopf(build("h4"), build("kC3"))
    lhs = inv.coradical(hopf_dual(t)).dim
    rhs = 3 * inv.coradical(hopf_dual(build("h4"))).dim
    assert lhs == rhs == 6


def test_profile_incomplete_report():
    # remove the matrix-basis claims from k8: profile must be reported incomplete
    k8 = build("k8")
    from hopfatlas.hopf import FinHopf

    meta = dict(k8.metadata)
    meta["claimed_matrix_bases"] = []
    stripped = FinHopf("k8-stripped", 8, k8.order, k8.mult, k8.unit, k8.comult,
                       k8.counit, k8.antipode, meta)
    prof = inv.verify_coalgebra_profile(stripped)
    assert not prof.certified and "incomplete" in prof.message
    assert prof.corad_dim == 6 and prof.certified_dim == 2
