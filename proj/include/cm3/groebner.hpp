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

#include <set>
#include <tuple>

#include "polynomial.hpp"

namespace cm3 {

// Term of a free-module element: basis component + monomial.
struct ModTerm {
    std::int32_t comp = 0;
    Monomial m;
    friend bool operator==(const ModTerm& a, const ModTerm& b) {
        return a.comp == b.comp && a.m == b.m;
    }
};

// Element of S^r, terms sorted descending under the active order.
template <class K>
struct VecPoly {
    std::vector<std::pair<ModTerm, K>> t;
    bool is_zero() const { return t.empty(); }
    const ModTerm& lt() const { return t.front().first; }
    const K& lc() const { return t.front().second; }
};

// Buchberger engine over a fixed ring and monomial order.  Modules use the
// position-over-term order (lower component dominates), which gives the
// elimination property needed for syzygy computations.
template <class K>
class Engine {
  public:
    Engine(RingPtr<K> ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(std::move(ord)) {}

    const RingPtr<K>& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }

    // -1/0/+1 on module terms
    int cmp(const ModTerm& a, const ModTerm& b) const {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return ord_.cmp(a.m, b.m, ring_->nvars());
    }

    VecPoly<K> from_poly(const Polynomial<K>& p, int comp = 0) const {
        VecPoly<K> v;
        for (const auto& t : p.terms()) v.t.push_back({{comp, t.m}, t.c});
        sort_terms(v);
        return v;
    }

    Polynomial<K> to_poly(const VecPoly<K>& v) const {
        std::vector<typename Polynomial<K>::Term> ts;
        for (const auto& [mt, c] : v.t) {
            if (mt.comp != 0) throw error("to_poly: vector has nonzero component");
            ts.push_back({mt.m, c});
        }
        return Polynomial<K>::from_terms(ring_, std::move(ts));
    }

    Polynomial<K> component(const VecPoly<K>& v, int comp) const {
        std::vector<typename Polynomial<K>::Term> ts;
        for (const auto& [mt, c] : v.t)
            if (mt.comp == comp) ts.push_back({mt.m, c});
        return Polynomial<K>::from_terms(ring_, std::move(ts));
    }

    void sort_terms(VecPoly<K>& v) const {
        std::sort(v.t.begin(), v.t.end(), [&](const auto& a, const auto& b) {
            return cmp(a.first, b.first) > 0;
        });
        size_t w = 0;
        for (size_t i = 0; i < v.t.size(); ++i) {
            if (w > 0 && v.t[w - 1].first == v.t[i].first) {
                v.t[w - 1].second += v.t[i].second;
                if (FieldOps<K>::is_zero(v.t[w - 1].second)) --w;
            } else {
                v.t[w++] = v.t[i];
            }
        }
        v.t.resize(w);
    }

    // a -= c * x^m * b   (merge of sorted term lists)
    void sub_scaled(VecPoly<K>& a, const K& c, const Monomial& m, const VecPoly<K>& b) const {
        std::vector<std::pair<ModTerm, K>> out;
        out.reserve(a.t.size() + b.t.size());
        size_t i = 0, j = 0;
        while (i < a.t.size() || j < b.t.size()) {
            ModTerm bt;
            if (j < b.t.size()) bt = {b.t[j].first.comp, b.t[j].first.m * m};
            if (j == b.t.size() || (i < a.t.size() && cmp(a.t[i].first, bt) > 0)) {
                out.push_back(a.t[i++]);
            } else if (i == a.t.size() || cmp(bt, a.t[i].first) > 0) {
                out.push_back({bt, -(c * b.t[j].second)});
                ++j;
            } else {
                K nc = a.t[i].second - c * b.t[j].second;
                if (!FieldOps<K>::is_zero(nc)) out.push_back({a.t[i].first, nc});
                ++i;
                ++j;
            }
        }
        a.t = std::move(out);
    }

    // scale to the canonical representative: integral, content 1, positive
    // leading coefficient over Q; monic over a prime field
    void canonical_scale(VecPoly<K>& v) const {
        if (v.t.empty()) return;
        if constexpr (FieldOps<K>::is_rational) {
            mpz_class den_lcm = 1;
            for (auto& [mt, c] : v.t) {
                mpz_class d = c.get_den();
                den_lcm = den_lcm / gcd(den_lcm, d) * d;
            }
            mpz_class num_gcd = 0;
            for (auto& [mt, c] : v.t) {
                mpz_class n = c.get_num() * (den_lcm / c.get_den());
                num_gcd = gcd(num_gcd, n);
            }
            if (num_gcd == 0) num_gcd = 1;
            Rational f(den_lcm, num_gcd);
            f.canonicalize();
            if (sgn(v.t.front().second) < 0) f = -f;
            for (auto& [mt, c] : v.t) c *= f;
        } else {
            K inv = v.t.front().second.inverse();
            for (auto& [mt, c] : v.t) c = c * inv;
        }
    }

    void make_monic(VecPoly<K>& v) const {
        if (v.t.empty()) return;
        if constexpr (FieldOps<K>::is_rational) {
            Rational inv = 1 / v.t.front().second;
            for (auto& [mt, c] : v.t) c *= inv;
        } else {
            canonical_scale(v);
        }
    }

    // full normal form (leading and lower terms); optionally tracks the
    // cofactors so that input = sum quot[k] * basis[k] + remainder
    VecPoly<K> reduce(const VecPoly<K>& v, const std::vector<VecPoly<K>>& basis,
                      std::vector<Polynomial<K>>* quot = nullptr) const {
        if (quot) quot->assign(basis.size(), Polynomial<K>::zero(ring_));
        VecPoly<K> rem;
        VecPoly<K> work = v;
        while (!work.is_zero()) {
            bool reduced = false;
            for (size_t k = 0; k < basis.size(); ++k) {
                const auto& g = basis[k];
                if (g.is_zero()) continue;
                if (g.lt().comp != work.lt().comp) continue;
                if (!g.lt().m.divides(work.lt().m)) continue;
                Monomial q = quotient(work.lt().m, g.lt().m);
                K c = work.lc() / g.lc();
                sub_scaled(work, c, q, g);
                if (quot) {
                    std::vector<typename Polynomial<K>::Term> one = {{q, c}};
                    (*quot)[k] = (*quot)[k] + Polynomial<K>::from_terms(ring_, std::move(one));
                }
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.t.push_back(work.t.front());
                work.t.erase(work.t.begin());
            }
        }
        return rem;
    }

    // Buchberger with normal (lowest-lcm-first) selection and chain-criterion
    // pair pruning; the coprimality criterion applies only in rank one.
    std::vector<VecPoly<K>> buchberger(std::vector<VecPoly<K>> gens, bool rank_one) const {
        std::vector<VecPoly<K>> basis;
        for (auto& g : gens) {
            sort_terms(g);
            if (g.is_zero()) continue;
            canonical_scale(g);
            basis.push_back(std::move(g));
        }

        struct PairKey {
            std::uint32_t deg;
            Monomial l;
            size_t i, j;
        };
        auto key_less = [&](const PairKey& a, const PairKey& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            int c = ord_.cmp(a.l, b.l, ring_->nvars());
            if (c != 0) return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        };
        std::multiset<PairKey, decltype(key_less)> queue(key_less);
        std::set<std::pair<size_t, size_t>> popped;

        auto push_pair = [&](size_t i, size_t j) {
            if (basis[i].lt().comp != basis[j].lt().comp) return;
            Monomial l = lcm(basis[i].lt().m, basis[j].lt().m);
            queue.insert({l.total, l, i, j});
        };
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

        while (!queue.empty()) {
            PairKey pk = *queue.begin();
            queue.erase(queue.begin());
            size_t i = pk.i, j = pk.j;
            popped.insert({i, j});

            const Monomial& li = basis[i].lt().m;
            const Monomial& lj = basis[j].lt().m;
            if (rank_one && coprime(li, lj)) continue;

            Monomial l = lcm(li, lj);
            bool chained = false;
            for (size_t k = 0; k < basis.size() && !chained; ++k) {
                if (k == i || k == j) continue;
                if (basis[k].lt().comp != basis[i].lt().comp) continue;
                if (!basis[k].lt().m.divides(l)) continue;
                auto mk = [&](size_t a, size_t b) {
                    return std::make_pair(std::min(a, b), std::max(a, b));
                };
                if (popped.count(mk(i, k)) && popped.count(mk(j, k))) chained = true;
            }
            if (chained) continue;

            // S-vector
            VecPoly<K> s = basis[i];
            {
                Monomial qi = quotient(l, li);
                VecPoly<K> tmp;
                tmp.t.reserve(s.t.size());
                for (auto& [mt, c] : s.t) tmp.t.push_back({{mt.comp, mt.m * qi}, c});
                s = std::move(tmp);
                K c = s.t.front().second / basis[j].lc();
                sub_scaled(s, c, quotient(l, lj), basis[j]);
            }
            VecPoly<K> r = reduce(s, basis);
            if (r.is_zero()) continue;
            canonical_scale(r);
            basis.push_back(std::move(r));
            size_t n = basis.size() - 1;
            for (size_t k = 0; k < n; ++k) push_pair(k, n);
        }

        return autoreduce(std::move(basis));
    }

    // inter-reduce to the unique reduced basis: monic leading terms, no
    // leading term divides another, every element fully reduced
    std::vector<VecPoly<K>> autoreduce(std::vector<VecPoly<K>> basis) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < basis.size(); ++i) {
                VecPoly<K> g = std::move(basis[i]);
                basis[i] = VecPoly<K>{};  // exclude from its own reduction
                VecPoly<K> r = reduce(g, basis);
                if (r.is_zero()) {
                    basis.erase(basis.begin() + (std::ptrdiff_t)i);
                    changed = true;
                    --i;
                    continue;
                }
                canonical_scale(r);
                if (!(r.t == g.t)) changed = true;
                basis[i] = std::move(r);
            }
        }
        for (auto& g : basis) make_monic(g);
        std::sort(basis.begin(), basis.end(), [&](const VecPoly<K>& a, const VecPoly<K>& b) {
            return cmp(a.lt(), b.lt()) < 0;
        });
        return basis;
    }

    // Generators of the syzygy module of the given columns (elements of a
    // free module): Groebner basis of the graph module, then the elimination
    // block.  `rank` is the rank of the ambient target module.
    std::vector<VecPoly<K>> syzygies(const std::vector<VecPoly<K>>& columns, int rank) const {
        std::vector<VecPoly<K>> embedded;
        for (size_t j = 0; j < columns.size(); ++j) {
            VecPoly<K> v = columns[j];
            v.t.push_back({{rank + (std::int32_t)j, Monomial::one()},
                           FieldOps<K>::one(ring_->field)});
            sort_terms(v);
            embedded.push_back(std::move(v));
        }
        auto gb = buchberger(std::move(embedded), false);
        std::vector<VecPoly<K>> syz;
        for (const auto& g : gb) {
            if (g.lt().comp < rank) continue;
            VecPoly<K> s;
            for (const auto& [mt, c] : g.t) {
                if (mt.comp < rank) throw error("syzygy: elimination block not clean");
                s.t.push_back({{mt.comp - rank, mt.m}, c});
            }
            syz.push_back(std::move(s));
        }
        return syz;
    }

  private:
    RingPtr<K> ring_;
    MonomialOrder ord_;
};

}  // namespace cm3
