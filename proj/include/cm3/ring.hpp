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

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "field.hpp"

namespace cm3 {

inline constexpr int kMaxVars = 8;

// Exponent vector.  `total` caches the sum of all exponents (each variable
// counting 1), which is what the monomial orders use; the geometric grading
// (t and u carry weight 0) is a property of the ring, not of the order.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};
    std::uint32_t total = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, int e = 1) {
        Monomial m;
        m.exp[(size_t)i] = (std::uint16_t)e;
        m.total = (std::uint32_t)e;
        return m;
    }

    bool is_one() const { return total == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.exp[(size_t)i] = (std::uint16_t)(a.exp[(size_t)i] + b.exp[(size_t)i]);
        r.total = a.total + b.total;
        return r;
    }

    bool divides(const Monomial& b) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (exp[(size_t)i] > b.exp[(size_t)i]) return false;
        return true;
    }

    // b / a, assuming a | b
    friend Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.exp[(size_t)i] = (std::uint16_t)(b.exp[(size_t)i] - a.exp[(size_t)i]);
        r.total = b.total - a.total;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::uint32_t t = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.exp[(size_t)i] = std::max(a.exp[(size_t)i], b.exp[(size_t)i]);
            t += r.exp[(size_t)i];
        }
        r.total = t;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.exp[(size_t)i] && b.exp[(size_t)i]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.total == b.total && a.exp == b.exp;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Total orders on monomials.  All kinds are global orders (1 is smallest),
// so Buchberger terminates on inhomogeneous input as well.
struct MonomialOrder {
    enum class Kind { grevlex, lex, block, weighted };
    Kind kind = Kind::grevlex;
    std::vector<int> front;      // block: variable indices eliminated first
    std::vector<long> weights;   // weighted: primary weight vector

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::lex, {}, {}}; }
    static MonomialOrder elim(std::vector<int> front_vars) {
        return {Kind::block, std::move(front_vars), {}};
    }
    static MonomialOrder weighted(std::vector<long> w) {
        return {Kind::weighted, {}, std::move(w)};
    }

    // -1, 0, +1 for a < b, a == b, a > b
    int cmp(const Monomial& a, const Monomial& b, int nvars) const {
        switch (kind) {
            case Kind::grevlex:
                return grevlex_cmp(a, b, 0, nvars, true);
            case Kind::lex: {
                for (int i = 0; i < nvars; ++i) {
                    if (a.exp[(size_t)i] != b.exp[(size_t)i])
                        return a.exp[(size_t)i] < b.exp[(size_t)i] ? -1 : 1;
                }
                return 0;
            }
            case Kind::block: {
                std::uint32_t da = 0, db = 0;
                for (int v : front) {
                    da += a.exp[(size_t)v];
                    db += b.exp[(size_t)v];
                }
                if (da != db) return da < db ? -1 : 1;
                for (auto it = front.rbegin(); it != front.rend(); ++it) {
                    if (a.exp[(size_t)*it] != b.exp[(size_t)*it])
                        return a.exp[(size_t)*it] > b.exp[(size_t)*it] ? -1 : 1;
                }
                return grevlex_cmp(a, b, 0, nvars, true);
            }
            case Kind::weighted: {
                long wa = 0, wb = 0;
                for (int i = 0; i < nvars; ++i) {
                    wa += weights[(size_t)i] * a.exp[(size_t)i];
                    wb += weights[(size_t)i] * b.exp[(size_t)i];
                }
                if (wa != wb) return wa < wb ? -1 : 1;
                return grevlex_cmp(a, b, 0, nvars, true);
            }
        }
        return 0;
    }

    std::string key() const {
        std::string k;
        switch (kind) {
            case Kind::grevlex: k = "grevlex"; break;
            case Kind::lex: k = "lex"; break;
            case Kind::block:
                k = "block:";
                for (int v : front) k += std::to_string(v) + ",";
                break;
            case Kind::weighted:
                k = "wt:";
                for (long w : weights) k += std::to_string(w) + ",";
                break;
        }
        return k;
    }

  private:
    static int grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi,
                           bool use_total) {
        std::uint32_t da, db;
        if (use_total && lo == 0) {
            da = a.total;
            db = b.total;
        } else {
            da = db = 0;
            for (int i = lo; i < hi; ++i) {
                da += a.exp[(size_t)i];
                db += b.exp[(size_t)i];
            }
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i) {
            if (a.exp[(size_t)i] != b.exp[(size_t)i])
                return a.exp[(size_t)i] > b.exp[(size_t)i] ? -1 : 1;
        }
        return 0;
    }
};

// Polynomial ring context: variable names, geometric weights (x,y,z,w carry
// weight 1; the deformation parameter t and the auxiliary u carry weight 0)
// and the coefficient field.
template <class K>
struct Ring {
    std::vector<std::string> vars;
    std::vector<int> weights;
    typename FieldOps<K>::Ctx field;

    int nvars() const { return (int)vars.size(); }

    int index_of(std::string_view name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[(size_t)i] == name) return i;
        return -1;
    }

    long geom_degree(const Monomial& m) const {
        long d = 0;
        for (int i = 0; i < nvars(); ++i) d += (long)weights[(size_t)i] * m.exp[(size_t)i];
        return d;
    }

    bool all_weight_one() const {
        return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
    }

    bool operator==(const Ring& o) const {
        return vars == o.vars && weights == o.weights && field == o.field;
    }
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(std::vector<std::string> vars, std::vector<int> weights,
                     typename FieldOps<K>::Ctx field = {}) {
    auto r = std::make_shared<Ring<K>>();
    r->vars = std::move(vars);
    r->weights = std::move(weights);
    r->field = field;
    if (r->nvars() > kMaxVars) throw error("too many variables");
    return r;
}

// The homogeneous coordinate ring of P^3.
template <class K>
RingPtr<K> geometric_ring(typename FieldOps<K>::Ctx field = {}) {
    return make_ring<K>({"x", "y", "z", "w"}, {1, 1, 1, 1}, field);
}

// k[t][x,y,z,w]; t carries geometric weight 0.
template <class K>
RingPtr<K> family_ring(typename FieldOps<K>::Ctx field = {}) {
    return make_ring<K>({"x", "y", "z", "w", "t"}, {1, 1, 1, 1, 0}, field);
}

template <class K>
RingPtr<K> with_aux_var(const RingPtr<K>& r, const std::string& name) {
    if (r->index_of(name) >= 0) throw error("auxiliary variable already in ring");
    auto vars = r->vars;
    auto w = r->weights;
    vars.push_back(name);
    w.push_back(0);
    return make_ring<K>(std::move(vars), std::move(w), r->field);
}

template <class K>
RingPtr<K> without_var(const RingPtr<K>& r, const std::string& name) {
    int idx = r->index_of(name);
    if (idx < 0) throw error("variable not in ring: " + name);
    std::vector<std::string> vars;
    std::vector<int> w;
    for (int i = 0; i < r->nvars(); ++i) {
        if (i == idx) continue;
        vars.push_back(r->vars[(size_t)i]);
        w.push_back(r->weights[(size_t)i]);
    }
    return make_ring<K>(std::move(vars), std::move(w), r->field);
}

}  // namespace cm3
