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

#include "rao.hpp"

namespace cm3 {

// --- binary forms in k[z,w] --------------------------------------------------

template <class K>
bool poly_in_zw(const Polynomial<K>& p) {
    int zi = p.ring()->index_of("z"), wi = p.ring()->index_of("w");
    for (const auto& t : p.terms())
        for (int i = 0; i < p.ring()->nvars(); ++i)
            if (t.m.exp[(size_t)i] && i != zi && i != wi) return false;
    return true;
}

// coefficients of a binary form by z-exponent (index e: z^e w^(d-e))
template <class K>
std::vector<K> binary_coeffs(const Polynomial<K>& p, long d) {
    std::vector<K> c((size_t)d + 1, FieldOps<K>::zero(p.ring()->field));
    int zi = p.ring()->index_of("z");
    for (const auto& t : p.terms()) c[(size_t)t.m.exp[(size_t)zi]] = t.c;
    return c;
}

// Do two binary forms share a zero on the line Y (over the algebraic
// closure)?  Checked by the w-valuations plus a univariate gcd, which both
// commute with field extension.
template <class K>
bool common_zero_on_line(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.is_zero() && g.is_zero()) return true;
    if (!poly_in_zw(f) || !poly_in_zw(g)) throw invalid_spec("forms must lie in k[z,w]");
    auto univ = [](const Polynomial<K>& p) {
        // p(z, 1) as a coefficient vector by z-exponent
        std::vector<K> c;
        if (p.is_zero()) return c;
        long d = p.degree();
        c = binary_coeffs(p, d);
        while (!c.empty() && FieldOps<K>::is_zero(c.back())) c.pop_back();
        return c;
    };
    auto wdiv = [](const Polynomial<K>& p) {
        // is w a factor (zero at [1:0])?  zero polynomial divides everything
        if (p.is_zero()) return true;
        int wi = p.ring()->index_of("w");
        for (const auto& t : p.terms())
            if (t.m.exp[(size_t)wi] == 0) return false;
        return true;
    };
    if (wdiv(f) && wdiv(g)) return true;
    // univariate Euclid on the w=1 chart
    std::vector<K> a = univ(f), b = univ(g);
    auto deg = [](const std::vector<K>& v) { return (long)v.size() - 1; };
    while (!b.empty()) {
        // a mod b
        std::vector<K> r = a;
        while ((long)r.size() >= (long)b.size() && !r.empty()) {
            K c = r.back() / b.back();
            size_t off = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) r[off + i] = r[off + i] - c * b[i];
            while (!r.empty() && FieldOps<K>::is_zero(r.back())) r.pop_back();
        }
        a = b;
        b = r;
    }
    return deg(a) >= 1;
}

// --- records -----------------------------------------------------------------

template <class K>
struct Provenance {
    std::string tag;
    std::map<std::string, std::string> params;
    std::optional<Polynomial<K>> filtrant_form;  // q (planar base) or p (quasiprimitive)
    std::optional<Ideal<K>> cm_filtrant;         // the double line Z of the filtration
};

struct Certificates {
    bool saturated = false;   // input ideal equalled its saturation
    bool locally_cm = false;  // Ext^3(S/I,S) of finite length
    bool extremal = false;    // all three Prop-1.9 bounds attained (numerical)
};

template <class K>
struct CurveRecord {
    Ideal<K> ideal;  // saturated
    long degree = 0;
    long genus = 0;
    RaoProfile rao;
    Certificates certs;
    Provenance<K> prov;
    std::vector<std::string> notes;
};

template <class K>
bool is_extremal_profile(const RaoProfile& rho, long d, long g) {
    ExtremalBounds b = extremal_bounds(d, g);
    if (b.a < 1) return false;
    if (!rho.ra || !rho.ro) return false;
    if (*rho.ra != 1 - b.a || *rho.ro != b.a + b.l - 1) return false;
    for (long n = 0; n <= b.l; ++n)
        if (rho.value(n) != b.a) return false;
    return true;
}

// Saturate, read off degree and genus, compute the Rao profile and the
// certificates.  Works for any homogeneous ideal whose Hilbert polynomial is
// that of a curve.
template <class K>
CurveRecord<K> curve_invariants(const Ideal<K>& I, Provenance<K> prov = {}) {
    if (!I.has_homogeneous_generators())
        throw invalid_spec("curve_invariants: generators must be homogeneous");
    CurveRecord<K> rec;
    rec.prov = std::move(prov);
    Ideal<K> sat = saturate_irrelevant(I);
    rec.certs.saturated = (sat == I);
    if (!rec.certs.saturated) rec.notes.push_back("input ideal was not saturated");
    rec.ideal = sat;
    auto hp = hilbert_polynomial(sat);
    rec.degree = hp.degree;
    rec.genus = hp.genus;
    auto res = free_resolution(sat);
    auto E = ext3_module(res);
    rec.certs.locally_cm = E.is_finite_length();
    if (rec.certs.locally_cm) {
        rec.rao = rao_profile_from_resolution(res, hp.degree, hp.genus);
        rec.certs.extremal = is_extremal_profile<K>(rec.rao, hp.degree, hp.genus);
    } else {
        // dims on the bounds window only; the module is infinite
        ExtremalBounds b = extremal_bounds(hp.degree, hp.genus);
        rec.rao.window_lo = 1 - b.a - 2;
        rec.rao.window_hi = b.a + b.l - 1 + 2;
        for (long n = rec.rao.window_lo; n <= rec.rao.window_hi; ++n) {
            long long d = E.dim(-n - 4);
            if (d) rec.rao.dims[n] = (long)d;
        }
        rec.notes.push_back("Rao module has infinite length; dims reported on window only");
    }
    return rec;
}

// --- the paper's constructions ----------------------------------------------

template <class K>
struct DoubleLineSpec {
    long a = 0;
    Polynomial<K> f, g;  // degree a+1 in k[z,w], no common zeros along Y
};

template <class K>
CurveRecord<K> double_line(const DoubleLineSpec<K>& spec) {
    const RingPtr<K>& R = spec.f.ring() ? spec.f.ring() : spec.g.ring();
    if (spec.a < -1) throw invalid_spec("double_line: a must be >= -1");
    for (const auto* h : {&spec.f, &spec.g}) {
        if (h->is_zero()) continue;
        auto hom = h->homogeneity();
        if (!poly_in_zw(*h) || !hom.homogeneous || *hom.degree != spec.a + 1)
            throw invalid_spec("double_line: f,g must be homogeneous of degree a+1 in k[z,w]");
    }
    if (common_zero_on_line(spec.f, spec.g))
        throw invalid_spec("double_line: f and g have a common zero along Y");
    auto x = Polynomial<K>::variable(R, "x");
    auto y = Polynomial<K>::variable(R, "y");
    Ideal<K> I(R, {x * x, x * y, y * y, x * spec.g - y * spec.f});
    Provenance<K> prov;
    prov.tag = "double_line";
    prov.params = {{"a", std::to_string(spec.a)},
                   {"f", spec.f.to_string()},
                   {"g", spec.g.to_string()}};
    return curve_invariants(I, std::move(prov));
}

template <class K>
struct TripleLineSpecPlanarBase {
    long b = 0;
    Polynomial<K> p, q;  // degrees b-1, b in k[z,w], no common zeros along Y
};

template <class K>
CurveRecord<K> triple_line_planar_base(const TripleLineSpecPlanarBase<K>& spec) {
    const RingPtr<K>& R = spec.q.ring() ? spec.q.ring() : spec.p.ring();
    if (spec.b < 0) throw invalid_spec("triple_line_planar_base: b must be >= 0");
    auto check = [&](const Polynomial<K>& h, long d, const char* name) {
        if (h.is_zero()) return;
        auto hom = h.homogeneity();
        if (!poly_in_zw(h) || !hom.homogeneous || *hom.degree != d)
            throw invalid_spec(std::string("triple_line_planar_base: ") + name +
                               " has the wrong degree");
    };
    check(spec.p, spec.b - 1, "p");
    check(spec.q, spec.b, "q");
    if (common_zero_on_line(spec.p, spec.q))
        throw invalid_spec("triple_line_planar_base: p and q have a common zero along Y");
    auto x = Polynomial<K>::variable(R, "x");
    auto y = Polynomial<K>::variable(R, "y");
    Ideal<K> I(R, {x * x, x * y, y * y * y, x * spec.q - y * y * spec.p});
    Provenance<K> prov;
    prov.tag = "triple_line_planar_base";
    prov.params = {{"a", "-1"},
                   {"b", std::to_string(spec.b)},
                   {"p", spec.p.to_string()},
                   {"q", spec.q.to_string()}};
    prov.filtrant_form = spec.q;
    prov.cm_filtrant = Ideal<K>(R, {x, y * y});
    return curve_invariants(I, std::move(prov));
}

// alpha, beta, gamma of degree a+b with q = alpha f^2 + beta f g + gamma g^2
// in k[z,w]; solved by linear algebra on coefficient vectors, free unknowns
// pinned to zero under a fixed column order (alpha, beta, gamma; descending
// z-exponent).
template <class K>
std::array<Polynomial<K>, 3> solve_quadratic_combination(const Polynomial<K>& q,
                                                         const Polynomial<K>& f,
                                                         const Polynomial<K>& g) {
    const RingPtr<K>& R = q.ring();
    long degf = f.degree();
    if (degf < 0 || degf != g.degree())
        throw invalid_spec("solve_quadratic_combination: f, g must share a degree");
    long a = degf - 1;
    long dq = q.degree();
    long ab = dq - 2 * degf;  // degree of alpha, beta, gamma
    if (ab < 0) throw invalid_spec("solve_quadratic_combination: deg q too small");
    const K zero = FieldOps<K>::zero(R->field);
    size_t ncols = 3 * (size_t)(ab + 1), nrows = (size_t)dq + 1;
    Matrix<K> A(nrows, ncols, zero);
    std::array<Polynomial<K>, 3> sq = {f * f, f * g, g * g};
    for (int blk = 0; blk < 3; ++blk) {
        auto coeffs = binary_coeffs(sq[(size_t)blk], 2 * degf);
        for (long e = ab; e >= 0; --e) {
            size_t col = (size_t)blk * (size_t)(ab + 1) + (size_t)(ab - e);
            for (size_t i = 0; i < coeffs.size(); ++i) {
                size_t row = i + (size_t)e;  // z-exponent after multiplying by z^e w^(ab-e)
                A.at(row, col) = coeffs[i];
            }
        }
    }
    auto rhs = binary_coeffs(q, dq);
    auto sol = A.solve(rhs, zero);
    if (!sol) throw error("solve_quadratic_combination: no solution (violated precondition)");
    std::array<Polynomial<K>, 3> out = {Polynomial<K>::zero(R), Polynomial<K>::zero(R),
                                        Polynomial<K>::zero(R)};
    auto zvar = Polynomial<K>::variable(R, "z");
    auto wvar = Polynomial<K>::variable(R, "w");
    for (int blk = 0; blk < 3; ++blk)
        for (long e = ab; e >= 0; --e) {
            K c = (*sol)[(size_t)blk * (size_t)(ab + 1) + (size_t)(ab - e)];
            if (FieldOps<K>::is_zero(c)) continue;
            out[(size_t)blk] =
                out[(size_t)blk] +
                (zvar.pow((int)e) * wvar.pow((int)(ab - e))).scaled(c);
        }
    (void)a;
    return out;
}

template <class K>
struct TripleLineSpecQuasiprimitive {
    long a = 0, b = 0;
    Polynomial<K> f, g;  // degree a+1, coprime along Y
    Polynomial<K> p, q;  // degrees b and 3a+b+2, coprime along Y
};

template <class K>
CurveRecord<K> triple_line_quasiprimitive(const TripleLineSpecQuasiprimitive<K>& spec) {
    const RingPtr<K>& R = spec.f.ring();
    if (spec.a < 0 || spec.b < 0)
        throw invalid_spec("triple_line_quasiprimitive: a, b must be >= 0");
    auto check = [&](const Polynomial<K>& h, long d, const char* name) {
        if (h.is_zero() && d < 0) return;
        auto hom = h.homogeneity();
        if (h.is_zero() || !poly_in_zw(h) || !hom.homogeneous || *hom.degree != d)
            throw invalid_spec(std::string("triple_line_quasiprimitive: ") + name +
                               " has the wrong degree");
    };
    check(spec.f, spec.a + 1, "f");
    check(spec.g, spec.a + 1, "g");
    check(spec.p, spec.b, "p");
    check(spec.q, 3 * spec.a + spec.b + 2, "q");
    if (common_zero_on_line(spec.f, spec.g))
        throw invalid_spec("triple_line_quasiprimitive: f and g share a zero along Y");
    if (common_zero_on_line(spec.p, spec.q))
        throw invalid_spec("triple_line_quasiprimitive: p and q share a zero along Y");
    auto abc = solve_quadratic_combination(spec.q, spec.f, spec.g);
    // the congruence holds exactly in k[z,w]
    if (!(abc[0] * spec.f * spec.f + abc[1] * spec.f * spec.g + abc[2] * spec.g * spec.g ==
          spec.q))
        throw error("triple_line_quasiprimitive: quadratic combination failed");
    auto x = Polynomial<K>::variable(R, "x");
    auto y = Polynomial<K>::variable(R, "y");
    Polynomial<K> s = x * spec.g - y * spec.f;
    Ideal<K> I(R, {x * x * x, x * x * y, x * y * y, y * y * y, x * s, y * s,
                   spec.p * s - (abc[0] * x * x + abc[1] * x * y + abc[2] * y * y)});
    Provenance<K> prov;
    prov.tag = "triple_line_quasiprimitive";
    prov.params = {{"a", std::to_string(spec.a)}, {"b", std::to_string(spec.b)},
                   {"f", spec.f.to_string()},    {"g", spec.g.to_string()},
                   {"p", spec.p.to_string()},    {"q", spec.q.to_string()},
                   {"alpha", abc[0].to_string()}, {"beta", abc[1].to_string()},
                   {"gamma", abc[2].to_string()}};
    prov.filtrant_form = spec.p;
    prov.cm_filtrant = Ideal<K>(R, {x * x, x * y, y * y, s});
    return curve_invariants(I, std::move(prov));
}

template <class K>
CurveRecord<K> union_curve(const Ideal<K>& I1, const Ideal<K>& I2) {
    CurveRecord<K> r1 = curve_invariants(I1);
    CurveRecord<K> r2 = curve_invariants(I2);
    Ideal<K> J = intersect(r1.ideal, r2.ideal);
    Provenance<K> prov;
    prov.tag = "union";
    CurveRecord<K> rec = curve_invariants(J, std::move(prov));
    if (rec.degree != r1.degree + r2.degree)
        rec.notes.push_back("union degree " + std::to_string(rec.degree) +
                            " != " + std::to_string(r1.degree) + " + " +
                            std::to_string(r2.degree) + " (components share a part)");
    return rec;
}

// length of the intersection scheme, as the eventually constant Hilbert
// function of S/(I1+I2)
template <class K>
long intersection_length(const Ideal<K>& I1, const Ideal<K>& I2) {
    std::vector<Polynomial<K>> gens = I1.gens();
    for (const auto& g : I2.gens()) gens.push_back(g);
    Ideal<K> sum(I1.ring(), std::move(gens));
    HilbertSeries hs = hilbert_series(sum);
    long long A3 = 0, A2 = 0, A1 = 0, A0 = 0;
    for (size_t js = 0; js < hs.numer.size(); ++js) {
        long long k = hs.numer[js], j = (long long)js;
        A3 += k;
        A2 += k * 3 * (2 - j);
        A1 += k * (3 * j * j - 12 * j + 11);
        A0 += k * (1 - j) * (2 - j) * (3 - j);
    }
    if (A3 || A2 || A1) throw error("intersection_length: intersection is not finite");
    return (long)(A0 / 6);
}

// Second CM filtrant check: saturate I_W + I_Y^2, remove the embedded points
// supported on the zeros of the construction form along Y, compare with Z.
// (The plain irrelevant-ideal saturation cannot remove embedded points at
// honest points of the line; the construction form pins them down.)
template <class K>
bool verify_cm_filtrant(const CurveRecord<K>& W, const Ideal<K>& Z) {
    const RingPtr<K>& R = W.ideal.ring();
    auto x = Polynomial<K>::variable(R, "x");
    auto y = Polynomial<K>::variable(R, "y");
    std::vector<Polynomial<K>> gens = W.ideal.gens();
    gens.push_back(x * x);
    gens.push_back(x * y);
    gens.push_back(y * y);
    Ideal<K> J(R, std::move(gens));
    Ideal<K> T = saturate_irrelevant(J);
    if (W.prov.filtrant_form && !W.prov.filtrant_form->is_zero() &&
        W.prov.filtrant_form->degree() > 0)
        T = saturate_by_poly(T, *W.prov.filtrant_form);
    return T == Z;
}

// the presentation matrix psi for the Rao module of a quasiprimitive triple
// line (Remark 2.5); source twists are derived from the entries
template <class K>
PolyMatrix<K> rao_presentation_psi(const TripleLineSpecQuasiprimitive<K>& spec) {
    const RingPtr<K>& R = spec.f.ring();
    auto abc = solve_quadratic_combination(spec.q, spec.f, spec.g);
    auto x = Polynomial<K>::variable(R, "x");
    auto y = Polynomial<K>::variable(R, "y");
    auto zero = Polynomial<K>::zero(R);
    FreeModule tgt{{-(2 * spec.a + spec.b), -spec.a}};
    std::vector<std::vector<Polynomial<K>>> rows = {
        {x, y, spec.f * spec.p, spec.g * spec.p, -(spec.g * abc[2]),
         -(spec.f * abc[0] + spec.g * abc[1])},
        {zero, zero, x, y, spec.f, spec.g}};
    Engine<K> eng(R, MonomialOrder::grevlex());
    std::vector<VecPoly<K>> cols;
    for (size_t j = 0; j < rows[0].size(); ++j) {
        VecPoly<K> v;
        for (int i = 0; i < 2; ++i)
            for (const auto& t : rows[(size_t)i][j].terms()) v.t.push_back({{i, t.m}, t.c});
        eng.sort_terms(v);
        cols.push_back(std::move(v));
    }
    return matrix_from_columns(eng, tgt, cols);
}

// --- fixed witnesses (Props 3.1-3.5) ----------------------------------------

template <class K>
Polynomial<K> var_power(const RingPtr<K>& R, const char* v, long e) {
    return Polynomial<K>::variable(R, v).pow((int)e);
}

template <class K>
CurveRecord<K> witness(long g, const std::string& family, long ha_index = 0,
                       typename FieldOps<K>::Ctx field = {}) {
    RingPtr<K> R = geometric_ring<K>(field);
    auto line = [&](const char* v1, const char* v2) {
        return Ideal<K>(R, {Polynomial<K>::variable(R, v1), Polynomial<K>::variable(R, v2)});
    };
    auto tag = [&](CurveRecord<K> rec) {
        rec.prov.params["family"] = family;
        rec.prov.params["genus"] = std::to_string(g);
        return rec;
    };
    if (family == "g1-plane-cubic") {
        if (g != 1) throw invalid_spec("witness: g1-plane-cubic needs genus 1");
        Ideal<K> I = Ideal<K>::from_strings(R, {"x", "y^3 + z^3 + w^3"});
        Provenance<K> prov;
        prov.tag = "witness";
        return tag(curve_invariants(I, std::move(prov)));
    }
    if (family == "g0-twisted-cubic") {
        if (g != 0) throw invalid_spec("witness: g0-twisted-cubic needs genus 0");
        Ideal<K> I = Ideal<K>::from_strings(R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
        Provenance<K> prov;
        prov.tag = "witness";
        return tag(curve_invariants(I, std::move(prov)));
    }
    if (family == "g-1-conic-line") {
        if (g != -1) throw invalid_spec("witness: g-1-conic-line needs genus -1");
        Ideal<K> conic = Ideal<K>::from_strings(R, {"w", "x^2 + y^2 - z^2"});
        return tag(union_curve(conic, line("x", "z")));
    }
    if (g > -2) throw invalid_spec("witness: family " + family + " needs genus <= -2");
    if (family == "famI-a") {
        DoubleLineSpec<K> Z{-g, var_power(R, "z", 1 - g), var_power(R, "w", 1 - g)};
        return tag(union_curve(double_line(Z).ideal, line("x", "z")));
    }
    if (family == "famI-b") {
        DoubleLineSpec<K> Z{-g - 1, var_power(R, "z", -g), var_power(R, "w", -g)};
        return tag(union_curve(double_line(Z).ideal, line("y", "z")));
    }
    if (family == "famI-c") {
        TripleLineSpecPlanarBase<K> s{1 - g, var_power(R, "z", -g), var_power(R, "w", 1 - g)};
        return tag(triple_line_planar_base(s));
    }
    if (family == "famII-a") {
        DoubleLineSpec<K> Z{-g - 2, var_power(R, "z", -g - 1), var_power(R, "w", -g - 1)};
        return tag(union_curve(double_line(Z).ideal, line("z", "w")));
    }
    if (family == "famII-b") {
        TripleLineSpecQuasiprimitive<K> s{0,
                                          -2 - g,
                                          Polynomial<K>::variable(R, "z"),
                                          Polynomial<K>::variable(R, "w"),
                                          var_power(R, "z", -2 - g),
                                          var_power(R, "w", -g)};
        return tag(triple_line_quasiprimitive(s));
    }
    if (family == "Ha") {
        long a = ha_index;
        long b = -2 - 3 * a - g;
        if (a <= 0 || b < 0)
            throw invalid_spec("witness: Ha needs 0 < a and b = -2-3a-g >= 0");
        TripleLineSpecQuasiprimitive<K> s{a,
                                          b,
                                          var_power(R, "z", a + 1),
                                          var_power(R, "w", a + 1),
                                          var_power(R, "z", b),
                                          var_power(R, "w", 3 * a + b + 2)};
        return tag(triple_line_quasiprimitive(s));
    }
    throw invalid_spec("witness: unknown family label " + family);
}

}  // namespace cm3
