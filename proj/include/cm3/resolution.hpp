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

#include <climits>

#include "ideal_ops.hpp"

namespace cm3 {

// Graded free module ⊕_i S(-twists[i]); basis element e_i sits in degree
// twists[i].
struct FreeModule {
    std::vector<long> twists;
    int rank() const { return (int)twists.size(); }
};

// Homogeneous map between graded free modules; entry (i,j) has degree
// src.twists[j] - tgt.twists[i].
template <class K>
struct PolyMatrix {
    FreeModule tgt, src;
    std::vector<std::vector<Polynomial<K>>> a;  // a[i][j]

    int rows() const { return tgt.rank(); }
    int cols() const { return src.rank(); }

    bool is_zero() const {
        for (const auto& row : a)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }
};

template <class K>
long vecpoly_degree(const Engine<K>& eng, const VecPoly<K>& v, const FreeModule& tgt) {
    if (v.is_zero()) throw error("vecpoly_degree: zero element");
    long d = LONG_MIN;
    for (const auto& [mt, c] : v.t) {
        long e = eng.ring()->geom_degree(mt.m) + tgt.twists[(size_t)mt.comp];
        if (d == LONG_MIN) d = e;
        if (e != d) throw error("vecpoly_degree: element is not homogeneous");
    }
    return d;
}

template <class K>
PolyMatrix<K> matrix_from_columns(const Engine<K>& eng, const FreeModule& tgt,
                                  const std::vector<VecPoly<K>>& cols) {
    PolyMatrix<K> m;
    m.tgt = tgt;
    for (const auto& c : cols) m.src.twists.push_back(vecpoly_degree(eng, c, tgt));
    m.a.assign((size_t)tgt.rank(), std::vector<Polynomial<K>>(
                                       cols.size(), Polynomial<K>::zero(eng.ring())));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < tgt.rank(); ++i) m.a[(size_t)i][j] = eng.component(cols[j], i);
    return m;
}

template <class K>
std::vector<VecPoly<K>> matrix_columns(const Engine<K>& eng, const PolyMatrix<K>& m) {
    std::vector<VecPoly<K>> cols;
    for (int j = 0; j < m.cols(); ++j) {
        VecPoly<K> v;
        for (int i = 0; i < m.rows(); ++i)
            for (const auto& t : m.a[(size_t)i][(size_t)j].terms())
                v.t.push_back({{i, t.m}, t.c});
        eng.sort_terms(v);
        cols.push_back(std::move(v));
    }
    return cols;
}

template <class K>
PolyMatrix<K> transpose(const PolyMatrix<K>& m) {
    PolyMatrix<K> t;
    t.tgt.twists.assign(m.src.twists.begin(), m.src.twists.end());
    t.src.twists.assign(m.tgt.twists.begin(), m.tgt.twists.end());
    for (auto& tw : t.tgt.twists) tw = -tw;
    for (auto& tw : t.src.twists) tw = -tw;
    t.a.assign((size_t)t.rows(), std::vector<Polynomial<K>>());
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) t.a[(size_t)i].push_back(m.a[(size_t)j][(size_t)i]);
    return t;
}

template <class K>
PolyMatrix<K> compose(const PolyMatrix<K>& A, const PolyMatrix<K>& B) {
    if (A.cols() != B.rows()) throw error("compose: shape mismatch");
    PolyMatrix<K> C;
    C.tgt = A.tgt;
    C.src = B.src;
    RingPtr<K> ring;
    for (const auto& row : A.a)
        for (const auto& e : row)
            if (e.ring()) ring = e.ring();
    C.a.assign((size_t)A.rows(),
               std::vector<Polynomial<K>>((size_t)B.cols(), Polynomial<K>::zero(ring)));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            for (int k = 0; k < A.cols(); ++k)
                C.a[(size_t)i][(size_t)j] =
                    C.a[(size_t)i][(size_t)j] +
                    A.a[(size_t)i][(size_t)k] * B.a[(size_t)k][(size_t)j];
    return C;
}

// Drop generators lying in the module generated by the others (graded, so
// only generators of lower or equal degree matter); the survivors are a
// minimal generating set.
template <class K>
std::vector<VecPoly<K>> minimalize_generators(const Engine<K>& eng,
                                              std::vector<VecPoly<K>> gens,
                                              const FreeModule& tgt) {
    std::vector<std::pair<long, size_t>> order;
    for (size_t i = 0; i < gens.size(); ++i)
        order.push_back({vecpoly_degree(eng, gens[i], tgt), i});
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<VecPoly<K>> sorted;
    for (auto& [d, i] : order) sorted.push_back(std::move(gens[i]));

    std::vector<bool> dropped(sorted.size(), false);
    for (size_t i = 0; i < sorted.size(); ++i) {
        std::vector<VecPoly<K>> others;
        for (size_t j = 0; j < sorted.size(); ++j)
            if (j != i && !dropped[j]) others.push_back(sorted[j]);
        auto gb = eng.buchberger(others, false);
        if (eng.reduce(sorted[i], gb).is_zero()) dropped[i] = true;
    }
    std::vector<VecPoly<K>> out;
    for (size_t i = 0; i < sorted.size(); ++i)
        if (!dropped[i]) out.push_back(std::move(sorted[i]));
    return out;
}

// Minimal graded free resolution of S/I, stored as the maps of the ideal
// resolution: maps[0]: F0 -> S covers I, maps[k]: Fk -> F(k-1).
template <class K>
struct FreeResolution {
    RingPtr<K> ring;
    std::vector<PolyMatrix<K>> maps;

    int length() const { return (int)maps.size(); }
    const FreeModule& module(int i) const { return maps[(size_t)i].src; }
};

// Betti table of the ideal resolution: (homological index i, twist j) -> rank.
struct BettiTable {
    std::map<std::pair<int, long>, long> ranks;
    bool operator==(const BettiTable& o) const { return ranks == o.ranks; }
};

template <class K>
BettiTable betti_table(const FreeResolution<K>& res) {
    BettiTable b;
    for (int i = 0; i < res.length(); ++i)
        for (long t : res.module(i).twists) b.ranks[{i, t}]++;
    return b;
}

// Split off invertible constant entries, iterated to fixpoint.  With
// generators minimalized at every syzygy step this is a no-op, but it is kept
// as the formal minimality pass (and safety net).
template <class K>
void minimalize_resolution(FreeResolution<K>& res) {
    auto is_const = [](const Polynomial<K>& p) {
        return p.term_count() == 1 && p.terms().front().m.is_one();
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < res.maps.size() && !changed; ++k) {
            PolyMatrix<K>& M = res.maps[k];
            for (int i0 = 0; i0 < M.rows() && !changed; ++i0) {
                for (int j0 = 0; j0 < M.cols() && !changed; ++j0) {
                    if (!is_const(M.a[(size_t)i0][(size_t)j0])) continue;
                    K c = M.a[(size_t)i0][(size_t)j0].terms().front().c;
                    // clear row i0 across columns; adjust the next map
                    for (int j = 0; j < M.cols(); ++j) {
                        if (j == j0) continue;
                        Polynomial<K> lam = M.a[(size_t)i0][(size_t)j].scaled(
                            FieldOps<K>::one(res.ring->field) / c);
                        if (lam.is_zero()) continue;
                        for (int i = 0; i < M.rows(); ++i)
                            M.a[(size_t)i][(size_t)j] =
                                M.a[(size_t)i][(size_t)j] - lam * M.a[(size_t)i][(size_t)j0];
                        if (k + 1 < res.maps.size()) {
                            PolyMatrix<K>& N = res.maps[k + 1];
                            for (int jj = 0; jj < N.cols(); ++jj)
                                N.a[(size_t)j0][(size_t)jj] =
                                    N.a[(size_t)j0][(size_t)jj] +
                                    lam * N.a[(size_t)j][(size_t)jj];
                        }
                    }
                    // clear column j0 across rows; adjust the previous map
                    for (int i = 0; i < M.rows(); ++i) {
                        if (i == i0) continue;
                        Polynomial<K> mu = M.a[(size_t)i][(size_t)j0].scaled(
                            FieldOps<K>::one(res.ring->field) / c);
                        if (mu.is_zero()) continue;
                        for (int j = 0; j < M.cols(); ++j)
                            M.a[(size_t)i][(size_t)j] =
                                M.a[(size_t)i][(size_t)j] - mu * M.a[(size_t)i0][(size_t)j];
                        if (k > 0) {
                            PolyMatrix<K>& P = res.maps[k - 1];
                            for (int ii = 0; ii < P.rows(); ++ii)
                                P.a[(size_t)ii][(size_t)i0] =
                                    P.a[(size_t)ii][(size_t)i0] +
                                    mu * P.a[(size_t)ii][(size_t)i];
                        }
                    }
                    // delete row i0 and column j0
                    PolyMatrix<K> R;
                    for (int i = 0; i < M.rows(); ++i) {
                        if (i == i0) continue;
                        R.tgt.twists.push_back(M.tgt.twists[(size_t)i]);
                        R.a.push_back({});
                        for (int j = 0; j < M.cols(); ++j) {
                            if (j == j0) continue;
                            R.a.back().push_back(M.a[(size_t)i][(size_t)j]);
                        }
                    }
                    for (int j = 0; j < M.cols(); ++j)
                        if (j != j0) R.src.twists.push_back(M.src.twists[(size_t)j]);
                    if (k + 1 < res.maps.size()) {
                        PolyMatrix<K>& N = res.maps[k + 1];
                        N.tgt = R.src;
                        N.a.erase(N.a.begin() + j0);
                    }
                    if (k > 0) {
                        PolyMatrix<K>& P = res.maps[k - 1];
                        P.src = R.tgt;
                        for (auto& row : P.a) row.erase(row.begin() + i0);
                    }
                    res.maps[k] = std::move(R);
                    changed = true;
                }
            }
        }
        while (!res.maps.empty() && res.maps.back().cols() == 0) res.maps.pop_back();
    }
}

template <class K>
FreeResolution<K> free_resolution(const Ideal<K>& I) {
    if (!I.has_homogeneous_generators())
        throw error("free_resolution: generators must be homogeneous");
    Engine<K> eng(I.ring(), MonomialOrder::grevlex());
    FreeResolution<K> res;
    res.ring = I.ring();

    std::vector<VecPoly<K>> cols;
    for (const auto& g : I.groebner().basis) cols.push_back(eng.from_poly(g));
    FreeModule tgt{{0}};
    cols = minimalize_generators(eng, std::move(cols), tgt);
    if (cols.empty()) return res;  // zero ideal

    const int cap = 6;
    for (int k = 0; k < cap; ++k) {
        res.maps.push_back(matrix_from_columns(eng, tgt, cols));
        auto syz = eng.syzygies(cols, tgt.rank());
        if (syz.empty()) break;
        tgt = res.maps.back().src;
        cols = minimalize_generators(eng, std::move(syz), tgt);
        if (cols.empty()) break;
        if (k + 1 == cap) throw error("free_resolution: length cap exceeded");
    }
    minimalize_resolution(res);
    return res;
}

}  // namespace cm3
