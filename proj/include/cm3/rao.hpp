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

#include "linalg.hpp"
#include "resolution.hpp"

namespace cm3 {

// exact division by (1-t)^k; empty result means "not divisible"
inline std::optional<IntPoly> divide_one_minus_t(IntPoly n, int k) {
    for (int r = 0; r < k; ++r) {
        if (n.empty()) continue;
        IntPoly q(n.size(), 0);
        long long acc = 0;
        for (size_t i = 0; i < n.size(); ++i) {
            acc += n[i];
            q[i] = acc;
        }
        if (q.back() != 0) return std::nullopt;
        q.pop_back();
        while (!q.empty() && q.back() == 0) q.pop_back();
        n = std::move(q);
    }
    return n;
}

// Graded module presented as coker(relations -> ⊕ S(-twists[i])), with a
// cached module Groebner basis of the relation submodule.  Dimensions come
// from standard monomials per component; degreewise maps come from normal
// forms against the basis.
template <class K>
class PresentedModule {
  public:
    PresentedModule(RingPtr<K> ring, FreeModule F, std::vector<VecPoly<K>> relations)
        : ring_(std::move(ring)), F_(std::move(F)), eng_(ring_, MonomialOrder::grevlex()) {
        relgb_ = eng_.buchberger(std::move(relations), F_.rank() <= 1);
        lt_.assign((size_t)F_.rank(), {});
        for (const auto& g : relgb_) lt_[(size_t)g.lt().comp].push_back(g.lt().m);
        for (auto& l : lt_) l = minimalize_monomials(std::move(l));
        for (int i = 0; i < F_.rank(); ++i)
            numer_.push_back(hilbert_numerator(lt_[(size_t)i], ring_->nvars()));
    }

    static PresentedModule from_matrix(const PolyMatrix<K>& m, const RingPtr<K>& ring) {
        Engine<K> eng(ring, MonomialOrder::grevlex());
        return PresentedModule(ring, m.tgt, matrix_columns(eng, m));
    }

    const RingPtr<K>& ring() const { return ring_; }
    const FreeModule& free_module() const { return F_; }

    long long dim(long n) const {
        long long s = 0;
        for (int i = 0; i < F_.rank(); ++i) {
            HilbertSeries hs{numer_[(size_t)i], ring_->nvars()};
            s += hs.value(n - F_.twists[(size_t)i]);
        }
        return s;
    }

    // Hilbert polynomial of the module is identically zero iff the module has
    // finite length; equivalently each component numerator is divisible by
    // (1-t)^nvars.
    bool is_finite_length() const {
        for (const auto& n : numer_)
            if (!divide_one_minus_t(n, ring_->nvars())) return false;
        return true;
    }

    // exact support [lo, hi] of a finite-length module; nullopt if zero
    std::optional<std::pair<long, long>> support() const {
        if (!is_finite_length()) throw error("support: module has infinite length");
        long lo = 0, hi = 0;
        bool any = false;
        for (int i = 0; i < F_.rank(); ++i) {
            auto series = divide_one_minus_t(numer_[(size_t)i], ring_->nvars());
            for (size_t d = 0; d < series->size(); ++d) {
                if ((*series)[d] == 0) continue;
                long n = (long)d + F_.twists[(size_t)i];
                if (!any) {
                    lo = hi = n;
                    any = true;
                } else {
                    lo = std::min(lo, n);
                    hi = std::max(hi, n);
                }
            }
        }
        if (!any) return std::nullopt;
        return std::make_pair(lo, hi);
    }

    std::vector<ModTerm> std_basis(long n) const {
        std::vector<ModTerm> out;
        for (int i = 0; i < F_.rank(); ++i) {
            long d = n - F_.twists[(size_t)i];
            if (d < 0) continue;
            for (const auto& m : standard_monomials(lt_[(size_t)i], ring_, (int)d))
                out.push_back({i, m});
        }
        return out;
    }

    // coordinates of the normal form of v on std_basis(n)
    std::vector<K> coords(const VecPoly<K>& v, long n) const {
        auto basis = std_basis(n);
        VecPoly<K> nf = eng_.reduce(v, relgb_);
        std::vector<K> c(basis.size(), FieldOps<K>::zero(ring_->field));
        for (const auto& [mt, co] : nf.t) {
            bool placed = false;
            for (size_t b = 0; b < basis.size(); ++b)
                if (basis[b] == mt) {
                    c[b] = co;
                    placed = true;
                    break;
                }
            if (!placed) throw error("coords: normal form outside standard basis");
        }
        return c;
    }

    // multiplication by the variable `var`: matrix std_basis(n) -> std_basis(n+1)
    Matrix<K> mult_map(long n, int var) const {
        auto src = std_basis(n);
        auto dst_sz = std_basis(n + 1).size();
        Matrix<K> m(dst_sz, src.size(), FieldOps<K>::zero(ring_->field));
        for (size_t j = 0; j < src.size(); ++j) {
            VecPoly<K> v;
            v.t.push_back({{src[j].comp, src[j].m * Monomial::var(var, 1)},
                           FieldOps<K>::one(ring_->field)});
            auto c = coords(v, n + 1);
            for (size_t i = 0; i < c.size(); ++i) m.at(i, j) = c[i];
        }
        return m;
    }

    // socle = elements killed by every geometric variable; degree -> dim
    std::map<long, long> socle_dims() const {
        auto sup = support();
        std::map<long, long> out;
        if (!sup) return out;
        for (long n = sup->first; n <= sup->second; ++n) {
            size_t dn = std_basis(n).size();
            if (dn == 0) continue;
            size_t dn1 = std_basis(n + 1).size();
            std::vector<int> geom;
            for (int v = 0; v < ring_->nvars(); ++v)
                if (ring_->weights[(size_t)v] == 1) geom.push_back(v);
            Matrix<K> stacked(dn1 * geom.size(), dn, FieldOps<K>::zero(ring_->field));
            for (size_t g = 0; g < geom.size(); ++g) {
                Matrix<K> m = mult_map(n, geom[g]);
                for (size_t i = 0; i < dn1; ++i)
                    for (size_t j = 0; j < dn; ++j)
                        stacked.at(g * dn1 + i, j) = m.at(i, j);
            }
            long soc = (long)dn - (long)stacked.rank();
            if (soc > 0) out[n] = soc;
        }
        return out;
    }

  private:
    RingPtr<K> ring_;
    FreeModule F_;
    Engine<K> eng_;
    std::vector<VecPoly<K>> relgb_;
    std::vector<std::vector<Monomial>> lt_;
    std::vector<IntPoly> numer_;
};

// Ext^3_S(S/I, S) as the cokernel of the dualized last map of the minimal
// resolution.  Needs pd(S/I) <= 3, i.e. I saturated.
template <class K>
PresentedModule<K> ext3_module(const FreeResolution<K>& res) {
    if (res.length() > 3)
        throw error("ext3: resolution longer than 3 (ideal not saturated)");
    if (res.length() <= 2)
        return PresentedModule<K>(res.ring, FreeModule{}, {});
    PolyMatrix<K> dual = transpose(res.maps[2]);
    return PresentedModule<K>::from_matrix(dual, res.ring);
}

// graded dims of Ext^3 on a window
template <class K>
std::map<long, long> ext3_dims(const Ideal<K>& I, long lo, long hi) {
    auto res = free_resolution(I);
    auto E = ext3_module(res);
    std::map<long, long> out;
    for (long n = lo; n <= hi; ++n) {
        long long d = E.dim(n);
        if (d) out[n] = (long)d;
    }
    return out;
}

struct RaoProfile {
    long window_lo = 0, window_hi = 0;
    std::map<long, long> dims;  // nonzero values of n -> h^1(I_C(n))
    std::optional<long> ra, ro;

    long value(long n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    long long total() const {
        long long t = 0;
        for (auto& [n, d] : dims) t += d;
        return t;
    }
};

struct ExtremalBounds {
    long l = 0;  // d - 2
    long a = 0;  // (d-2)(d-3)/2 - g
};

inline ExtremalBounds extremal_bounds(long d, long g) {
    return {d - 2, (d - 2) * (d - 3) / 2 - g};
}

// Rao function via local duality: rho(n) = dim Ext^3(S/I, S)_{-n-4}.
// The window from the Prop-1.9 bounds carries a margin of 2 and is widened
// if the exact support ever exceeds it.
template <class K>
RaoProfile rao_profile_from_resolution(const FreeResolution<K>& res, long d, long g) {
    auto E = ext3_module(res);
    if (!E.is_finite_length())
        throw error("rao_profile: Ext^3 has infinite length (curve not locally CM)");
    ExtremalBounds b = extremal_bounds(d, g);
    RaoProfile rp;
    rp.window_lo = 1 - b.a - 2;
    rp.window_hi = b.a + b.l - 1 + 2;
    auto sup = E.support();
    if (sup) {
        // Ext support [s_lo, s_hi] maps to rho support [-s_hi-4, -s_lo-4]
        long rho_lo = -sup->second - 4, rho_hi = -sup->first - 4;
        rp.window_lo = std::min(rp.window_lo, rho_lo - 2);
        rp.window_hi = std::max(rp.window_hi, rho_hi + 2);
        for (long n = rho_lo; n <= rho_hi; ++n) {
            long long dim = E.dim(-n - 4);
            if (dim) rp.dims[n] = (long)dim;
        }
        if (!rp.dims.empty()) {
            rp.ra = rp.dims.begin()->first;
            rp.ro = rp.dims.rbegin()->first;
        }
    }
    return rp;
}

template <class K>
RaoProfile rao_profile(const Ideal<K>& I) {
    auto hp = hilbert_polynomial(I);
    auto res = free_resolution(I);
    return rao_profile_from_resolution(res, hp.degree, hp.genus);
}

// minimal generator degrees of the Rao module, via the dual socle:
// socle degree s of Ext^3 corresponds to a generator in degree -s-4
template <class K>
std::vector<long> rao_generator_degrees(const FreeResolution<K>& res) {
    auto E = ext3_module(res);
    if (!E.is_finite_length())
        throw error("rao_generator_degrees: Rao module not of finite length");
    std::vector<long> out;
    for (auto& [s, mult] : E.socle_dims())
        for (long i = 0; i < mult; ++i) out.push_back(-s - 4);
    std::sort(out.begin(), out.end());
    return out;
}

template <class K>
std::vector<long> rao_generator_degrees(const Ideal<K>& I) {
    auto res = free_resolution(I);
    return rao_generator_degrees(res);
}

// (h^0, h^1, h^2, h^3) of I_C(n) from the Euler characteristic bookkeeping
struct SheafCohomology {
    long h0 = 0, h1 = 0, h2 = 0, h3 = 0;
};

template <class K>
SheafCohomology sheaf_cohomology(const Ideal<K>& I, const RaoProfile& rho, long d, long g,
                                 long n) {
    SheafCohomology h;
    long long dimSn = binom(n + 3, 3);
    h.h0 = (long)(dimSn - hilbert_function(I, n));
    h.h1 = rho.value(n);
    h.h3 = (long)binom(-n - 1, 3);
    long long chi = (n + 1) * (n + 2) * (n + 3) / 6 - (d * n + 1 - g);
    h.h2 = (long)(chi - h.h0 + h.h1 + h.h3);
    if (h.h2 < 0) throw error("sheaf_cohomology: negative h^2 (inconsistent data)");
    return h;
}

// degreewise cokernel dimensions of an explicit homogeneous matrix
template <class K>
std::map<long, long> graded_coker_dims(const PolyMatrix<K>& m, const RingPtr<K>& ring,
                                       long lo, long hi) {
    // twist bookkeeping must be consistent
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const auto& e = m.a[(size_t)i][(size_t)j];
            if (e.is_zero()) continue;
            auto hom = e.homogeneity();
            if (!hom.homogeneous ||
                *hom.degree != m.src.twists[(size_t)j] - m.tgt.twists[(size_t)i])
                throw invalid_spec("graded_coker_dims: inconsistent twists");
        }
    auto P = PresentedModule<K>::from_matrix(m, ring);
    std::map<long, long> out;
    for (long n = lo; n <= hi; ++n) {
        long long d = P.dim(n);
        if (d) out[n] = (long)d;
    }
    return out;
}

}  // namespace cm3
