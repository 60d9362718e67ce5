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

#include "ideal.hpp"

namespace cm3 {

// Small integer polynomial in one variable t, coefficient by degree.
using IntPoly = std::vector<long long>;

inline void ip_add(IntPoly& a, const IntPoly& b, long long scale = 1, int shift = 0) {
    if (a.size() < b.size() + (size_t)shift) a.resize(b.size() + (size_t)shift, 0);
    for (size_t i = 0; i < b.size(); ++i) a[i + (size_t)shift] += scale * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline long long binom(long long n, int k) {
    if (n < 0 || k < 0) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.total < b.total; });
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& g : out)
            if (g.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

// Numerator N(t) with HS(S/I) = N(t)/(1-t)^nvars for a monomial ideal,
// by the standard pivot recursion  N(I) = N(I+(v)) + t * N(I:v).
inline IntPoly hilbert_numerator(std::vector<Monomial> gens, int nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.size() == 1 && gens[0].is_one()) return {};

    // base case: pairwise coprime generators (in particular pure powers)
    bool pairwise_coprime = true;
    for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }
    if (pairwise_coprime) {
        IntPoly n = {1};
        for (const auto& g : gens) {
            IntPoly f((size_t)g.total + 1, 0);
            f[0] = 1;
            f[(size_t)g.total] = -1;
            n = ip_mul(n, f);
        }
        return n;
    }

    // pivot: variable occurring most often among the generators
    int pivot = -1, best = -1;
    for (int v = 0; v < nvars; ++v) {
        int count = 0;
        for (const auto& g : gens)
            if (g.exp[(size_t)v]) ++count;
        if (count >= 2 && count > best) {
            best = count;
            pivot = v;
        }
    }
    if (pivot < 0) throw error("hilbert_numerator: no pivot");  // unreachable

    std::vector<Monomial> plus, colon;
    for (const auto& g : gens) {
        if (g.exp[(size_t)pivot] == 0) plus.push_back(g);
        Monomial q = g;
        if (q.exp[(size_t)pivot]) {
            q.exp[(size_t)pivot]--;
            q.total--;
        }
        colon.push_back(q);
    }
    plus.push_back(Monomial::var(pivot, 1));
    IntPoly n = hilbert_numerator(std::move(plus), nvars);
    ip_add(n, hilbert_numerator(std::move(colon), nvars), 1, 1);
    return n;
}

// Hilbert data of S/I for an ideal in a standard-graded ring (all geometric
// weights 1): exact Hilbert function for every n and the Hilbert polynomial.
struct HilbertSeries {
    IntPoly numer;
    int dim = 4;  // number of variables

    long long value(long n) const {
        if (n < 0) return 0;
        long long s = 0;
        for (size_t j = 0; j < numer.size(); ++j)
            s += numer[j] * binom(n - (long long)j + dim - 1, dim - 1);
        return s;
    }
};

struct CurveHP {
    long degree = 0;
    long genus = 0;
};

template <class K>
HilbertSeries hilbert_series(const Ideal<K>& I) {
    if (!I.ring()->all_weight_one())
        throw error("hilbert_series: ring has weight-0 variables");
    std::vector<Monomial> lts;
    for (const auto& g : I.groebner().basis) lts.push_back(g.terms().front().m);
    return {hilbert_numerator(std::move(lts), I.ring()->nvars()), I.ring()->nvars()};
}

template <class K>
long long hilbert_function(const Ideal<K>& I, long n) {
    return hilbert_series(I).value(n);
}

// HP(n) = d*n + 1 - g extracted exactly from the numerator; throws
// not_a_curve when dim Proj(S/I) != 1.
template <class K>
CurveHP hilbert_polynomial(const Ideal<K>& I) {
    if (I.ring()->nvars() != 4) throw error("hilbert_polynomial: expected 4 variables");
    HilbertSeries hs = hilbert_series(I);
    // 6*HP(n) = A3 n^3 + A2 n^2 + A1 n + A0
    long long A3 = 0, A2 = 0, A1 = 0, A0 = 0;
    for (size_t js = 0; js < hs.numer.size(); ++js) {
        long long k = hs.numer[js];
        long long j = (long long)js;
        A3 += k;
        A2 += k * 3 * (2 - j);
        A1 += k * (3 * j * j - 12 * j + 11);
        A0 += k * (1 - j) * (2 - j) * (3 - j);
    }
    if (A3 != 0 || A2 != 0)
        throw not_a_curve("Hilbert polynomial has degree > 1 (not a curve)");
    if (A1 <= 0) throw not_a_curve("Hilbert polynomial is constant (dimension <= 0)");
    if (A1 % 6 != 0 || A0 % 6 != 0) throw error("hilbert_polynomial: non-integral HP");
    return {(long)(A1 / 6), (long)(1 - A0 / 6)};
}

// degree-n standard monomials of a monomial ideal (complement of lt_gens)
template <class K>
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lt_gens,
                                         const RingPtr<K>& ring, int n) {
    std::vector<Monomial> out;
    for (const auto& m : monomial_basis(ring, n)) {
        bool in = false;
        for (const auto& g : lt_gens)
            if (g.divides(m)) {
                in = true;
                break;
            }
        if (!in) out.push_back(m);
    }
    return out;
}

}  // namespace cm3
