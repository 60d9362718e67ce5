/*
   Copyright 2026 The cm3 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "hilbert.hpp"
#include "ideal.hpp"

namespace cm3 {

// Keep only the Groebner basis elements free of the given variables; the
// result generates I ∩ k[remaining vars] (block elimination order).
template <class K>
Ideal<K> eliminate_keep_ring(const Ideal<K>& I, const std::vector<std::string>& vars) {
    std::vector<int> idx;
    for (const auto& v : vars) {
        int i = I.ring()->index_of(v);
        if (i < 0) throw error("eliminate: variable not in ring: " + v);
        idx.push_back(i);
    }
    const auto& gb = I.groebner(MonomialOrder::elim(idx));
    std::vector<Polynomial<K>> kept;
    for (const auto& g : gb.basis) {
        bool uses = false;
        for (const auto& t : g.terms())
            for (int i : idx)
                if (t.m.exp[(size_t)i]) uses = true;
        if (!uses) kept.push_back(g);
    }
    return Ideal<K>(I.ring(), std::move(kept));
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::string>& vars) {
    Ideal<K> kept = eliminate_keep_ring(I, vars);
    RingPtr<K> r = I.ring();
    for (const auto& v : vars) r = without_var(r, v);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : kept.gens()) gens.push_back(g.in_ring(r));
    return Ideal<K>(r, std::move(gens));
}

// I ∩ J via the auxiliary variable u (weight 0): eliminate u from u·I + (1-u)·J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
    if (!(*I.ring() == *J.ring())) throw ring_mismatch("intersect: different rings");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal<K>(I.ring());
    if (I.is_unit_ideal()) return J;
    if (J.is_unit_ideal()) return I;
    RingPtr<K> big = with_aux_var(I.ring(), "u");
    Polynomial<K> u = Polynomial<K>::variable(big, "u");
    Polynomial<K> one_minus_u = Polynomial<K>::one(big) - u;
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(u * g.in_ring(big));
    for (const auto& g : J.gens()) gens.push_back(one_minus_u * g.in_ring(big));
    Ideal<K> mixed(big, std::move(gens));
    return eliminate(mixed, {"u"});
}

// exact division p / f (throws if f does not divide p)
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& p, const Polynomial<K>& f) {
    if (f.is_zero()) throw error("exact_divide: division by zero");
    Engine<K> eng(p.ring(), MonomialOrder::grevlex());
    std::vector<VecPoly<K>> basis = {eng.from_poly(f)};
    std::vector<Polynomial<K>> quot;
    VecPoly<K> rem = eng.reduce(eng.from_poly(p), basis, &quot);
    if (!rem.is_zero()) throw error("exact_divide: not divisible");
    return quot[0];
}

// ideal quotient (I : f)
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Polynomial<K>& f) {
    if (f.is_zero()) throw error("quotient: f must be nonzero");
    Ideal<K> cap = intersect(I, Ideal<K>(I.ring(), {f}));
    std::vector<Polynomial<K>> gens;
    for (const auto& g : cap.gens()) gens.push_back(exact_divide(g, f));
    return Ideal<K>(I.ring(), std::move(gens));
}

// (I : J) = ∩ over generators of J
template <class K>
Ideal<K> quotient_ideal(const Ideal<K>& I, const Ideal<K>& J) {
    bool first = true;
    Ideal<K> acc;
    for (const auto& f : J.gens()) {
        Ideal<K> q = quotient(I, f);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    if (first) throw error("quotient_ideal: empty divisor ideal");
    return acc;
}

// saturation (I : f^infinity) as the stable value of iterated quotients
template <class K>
Ideal<K> saturate_by_poly(const Ideal<K>& I, const Polynomial<K>& f) {
    if (f.is_zero()) throw error("saturate_by_poly: f must be nonzero");
    Ideal<K> cur = I;
    for (;;) {
        Ideal<K> next = quotient(cur, f);
        if (next == cur) return cur;
        cur = next;
    }
}

// saturation by the irrelevant ideal: ∩ over v in {x,y,z,w} of (I : v^infinity)
template <class K>
Ideal<K> saturate_irrelevant(const Ideal<K>& I) {
    bool first = true;
    Ideal<K> acc;
    for (int i = 0; i < I.ring()->nvars(); ++i) {
        if (I.ring()->weights[(size_t)i] != 1) continue;
        Polynomial<K> v = Polynomial<K>::variable(I.ring(), I.ring()->vars[(size_t)i]);
        Ideal<K> sat = saturate_by_poly(I, v);
        acc = first ? sat : intersect(acc, sat);
        first = false;
    }
    if (first) throw error("saturate_irrelevant: ring has no geometric variables");
    return acc;
}

// Liaison: the residual ((F,G) : I) of I inside the complete intersection
// (F,G).  F and G must lie in I and cut out a curve of degree deg F * deg G.
template <class K>
struct LiaisonResult {
    Ideal<K> residual;
    long ci_degree = 0;
    long residual_degree = 0;
};

template <class K>
LiaisonResult<K> liaison(const Ideal<K>& I, const Polynomial<K>& F, const Polynomial<K>& G) {
    if (!I.contains(F) || !I.contains(G))
        throw invalid_spec("liaison: F and G must lie in the ideal");
    auto hF = F.homogeneity();
    auto hG = G.homogeneity();
    if (!hF.homogeneous || !hG.homogeneous || !hF.degree || !hG.degree)
        throw invalid_spec("liaison: F, G must be homogeneous and nonzero");
    Ideal<K> ci(I.ring(), {F, G});
    auto hp = hilbert_polynomial(ci);  // throws not_a_curve if (F,G) degenerates
    long expected = *hF.degree * *hG.degree;
    if (hp.degree != expected)
        throw invalid_spec("liaison: (F,G) is not a complete intersection of the expected degree");
    Ideal<K> res = quotient_ideal(ci, I);
    if (res.is_unit_ideal())
        throw invalid_spec("liaison: residual is empty (I equals the complete intersection)");
    auto hpr = hilbert_polynomial(res);
    return {res, expected, hpr.degree};
}

}  // namespace cm3
