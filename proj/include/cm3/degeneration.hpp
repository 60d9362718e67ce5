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

#include "curves.hpp"

namespace cm3 {

// Ideal over k[t][x,y,z,w], generators homogeneous in the geometric grading
// (t carries weight 0).
template <class K>
struct FamilyIdeal {
    Ideal<K> ideal;

    explicit FamilyIdeal(Ideal<K> I) : ideal(std::move(I)) {
        if (ideal.ring()->index_of("t") < 0)
            throw invalid_spec("FamilyIdeal: ring has no parameter t");
        if (!ideal.has_homogeneous_generators())
            throw invalid_spec("FamilyIdeal: generators must be homogeneous in x,y,z,w");
    }
};

template <class K>
struct FiberInfo {
    K sample;
    long degree = 0;
    long genus = 0;
    Ideal<K> ideal;  // saturated fiber ideal in the geometric ring
};

template <class K>
struct FlattenReport {
    Ideal<K> input;
    Ideal<K> flat;                       // input : t^infinity
    std::vector<Polynomial<K>> added;    // basis elements of flat not in input
    Ideal<K> limit;                      // saturated t=0 fiber
    long limit_degree = 0, limit_genus = 0;
    std::vector<FiberInfo<K>> fibers;
    bool verdict_flat = false;
    std::vector<std::string> notes;
};

// Flatten over t by saturating with respect to t, then audit: the family must
// be t-torsion-free and all sampled fibers must share the limit's Hilbert
// polynomial.
template <class K>
FlattenReport<K> flatten(const FamilyIdeal<K>& F, const std::vector<K>& samples) {
    if (F.ideal.is_zero_ideal()) throw invalid_spec("flatten: empty family");
    for (const auto& c : samples)
        if (FieldOps<K>::is_zero(c)) throw invalid_spec("flatten: samples must be nonzero");

    FlattenReport<K> rep;
    rep.input = F.ideal;
    Polynomial<K> t = Polynomial<K>::variable(F.ideal.ring(), "t");
    rep.flat = saturate_by_poly(F.ideal, t);
    for (const auto& g : rep.flat.groebner().basis)
        if (!rep.input.contains(g)) rep.added.push_back(g);

    bool torsion_free = quotient(rep.flat, t) == rep.flat;
    if (!torsion_free) rep.notes.push_back("family is not t-torsion-free after saturation");

    auto fiber_at = [&](const K& c) {
        std::vector<Polynomial<K>> gens;
        RingPtr<K> geo;
        for (const auto& g : rep.flat.gens()) {
            Polynomial<K> s = g.substitute("t", c);
            geo = s.ring();
            gens.push_back(s);
        }
        return saturate_irrelevant(Ideal<K>(geo, std::move(gens)));
    };

    rep.limit = fiber_at(FieldOps<K>::zero(F.ideal.ring()->field));
    auto hp0 = hilbert_polynomial(rep.limit);
    rep.limit_degree = hp0.degree;
    rep.limit_genus = hp0.genus;

    bool same_hp = torsion_free;
    for (const auto& c : samples) {
        FiberInfo<K> fi;
        fi.sample = c;
        fi.ideal = fiber_at(c);
        auto hp = hilbert_polynomial(fi.ideal);
        fi.degree = hp.degree;
        fi.genus = hp.genus;
        if (hp.degree != hp0.degree || hp.genus != hp0.genus) {
            same_hp = false;
            rep.notes.push_back("fiber Hilbert polynomial differs at a sample");
        }
        rep.fibers.push_back(std::move(fi));
    }
    rep.verdict_flat = same_hp;
    return rep;
}

template <class K>
std::vector<K> default_samples(typename FieldOps<K>::Ctx field = {}) {
    return {FieldOps<K>::from_long(field, 1), FieldOps<K>::from_long(field, 2),
            FieldOps<K>::from_long(field, -1)};
}

// Prop 3.6 family: seven generators over k[t][x,y,z,w].
template <class K>
FamilyIdeal<K> spec_family(long a, long b, typename FieldOps<K>::Ctx field = {}) {
    if (a < 0 || b < 0) throw invalid_spec("spec_family: a, b must be >= 0");
    RingPtr<K> R = family_ring<K>(field);
    auto x = Polynomial<K>::variable(R, "x");
    auto y = Polynomial<K>::variable(R, "y");
    auto z = Polynomial<K>::variable(R, "z");
    auto w = Polynomial<K>::variable(R, "w");
    auto t = Polynomial<K>::variable(R, "t");
    Polynomial<K> s = x * z.pow((int)a + 1) - t * y * w.pow((int)a + 1);
    Ideal<K> I(R, {x * x * x, x * x * y, x * y * y, y * y * y, x * s, y * s,
                   z.pow((int)b) * t * t * s - x * x * w.pow((int)(a + b))});
    return FamilyIdeal<K>(std::move(I));
}

// the H(4,0) example family
template <class K>
FamilyIdeal<K> h40_family(typename FieldOps<K>::Ctx field = {}) {
    RingPtr<K> R = family_ring<K>(field);
    auto x = Polynomial<K>::variable(R, "x");
    auto y = Polynomial<K>::variable(R, "y");
    auto z = Polynomial<K>::variable(R, "z");
    auto w = Polynomial<K>::variable(R, "w");
    auto t = Polynomial<K>::variable(R, "t");
    Ideal<K> I(R, {x * x, x * y * y, t * y * y * y - x * y * z,
                   x * y * w - t * z * (y * y * t - x * z)});
    return FamilyIdeal<K>(std::move(I));
}

// Verified specialization: the flattened family reaches expected_limit at
// t=0 and a sampled fiber matches the invariants of the expected generic
// construction (degree, genus, Rao profile).
template <class K>
bool verify_specialization(const FamilyIdeal<K>& F, const Ideal<K>& expected_limit,
                           const CurveRecord<K>& expected_generic,
                           std::vector<std::string>* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) why->push_back(msg);
        return false;
    };
    FlattenReport<K> rep = flatten(F, default_samples<K>(F.ideal.ring()->field));
    if (!rep.verdict_flat) return fail("flatten verdict is not flat");
    if (!(rep.limit == expected_limit)) return fail("limit ideal differs from expected");
    const Ideal<K>& fiber = rep.fibers.front().ideal;
    CurveRecord<K> rec = curve_invariants(fiber);
    if (rec.degree != expected_generic.degree || rec.genus != expected_generic.genus)
        return fail("generic fiber degree/genus mismatch");
    if (rec.rao.dims != expected_generic.rao.dims)
        return fail("generic fiber Rao profile mismatch");
    return true;
}

}  // namespace cm3
