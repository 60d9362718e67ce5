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

#include <map>

#include "groebner.hpp"

namespace cm3 {

template <class K>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial<K>> basis;  // reduced; ascending by leading term
};

// Ideal with cached reduced Groebner bases per monomial order.  The cache is
// confined to the value (copied with it), so ideals still behave as pure
// immutable values from the outside.
template <class K>
class Ideal {
  public:
    Ideal() = default;
    explicit Ideal(RingPtr<K> ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (auto& g : gens_)
            if (!(*g.ring() == *ring_)) throw ring_mismatch("generator from another ring");
        std::erase_if(gens_, [](const Polynomial<K>& p) { return p.is_zero(); });
    }

    static Ideal from_strings(const RingPtr<K>& ring, const std::vector<std::string>& ss) {
        std::vector<Polynomial<K>> gens;
        for (const auto& s : ss) gens.push_back(Polynomial<K>::parse(s, ring));
        return Ideal(ring, std::move(gens));
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const GroebnerBasis<K>& groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const {
        auto key = ord.key();
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Engine<K> eng(ring_, ord);
        std::vector<VecPoly<K>> vs;
        for (const auto& g : gens_) vs.push_back(eng.from_poly(g));
        auto gb = eng.buchberger(std::move(vs), true);
        GroebnerBasis<K> out{ord, {}};
        for (auto& v : gb) out.basis.push_back(eng.to_poly(v));
        return cache_.emplace(key, std::move(out)).first->second;
    }

    Polynomial<K> normal_form(const Polynomial<K>& p,
                              const MonomialOrder& ord = MonomialOrder::grevlex()) const {
        const auto& gb = groebner(ord);
        Engine<K> eng(ring_, ord);
        std::vector<VecPoly<K>> basis;
        for (const auto& g : gb.basis) basis.push_back(eng.from_poly(g));
        return eng.to_poly(eng.reduce(eng.from_poly(p), basis));
    }

    bool contains(const Polynomial<K>& p) const { return normal_form(p).is_zero(); }

    bool contains(const Ideal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    // reduced Groebner bases are unique, so this decides ideal equality
    friend bool operator==(const Ideal& a, const Ideal& b) {
        if (!(*a.ring_ == *b.ring_)) return false;
        const auto& ga = a.groebner().basis;
        const auto& gb = b.groebner().basis;
        if (ga.size() != gb.size()) return false;
        for (size_t i = 0; i < ga.size(); ++i)
            if (!(ga[i] == gb[i])) return false;
        return true;
    }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

    bool is_unit_ideal() const {
        const auto& gb = groebner().basis;
        return gb.size() == 1 && gb.front().term_count() == 1 &&
               gb.front().terms().front().m.is_one();
    }

    bool has_homogeneous_generators() const {
        for (const auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    long max_generator_degree() const {
        long d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    // deterministic printing: the reduced Groebner basis, one polynomial per
    // line, ascending by leading term
    std::string to_string() const {
        std::string s;
        for (const auto& g : groebner().basis) {
            s += g.to_string();
            s += "\n";
        }
        return s;
    }

  private:
    RingPtr<K> ring_;
    std::vector<Polynomial<K>> gens_;
    mutable std::map<std::string, GroebnerBasis<K>> cache_;
};

// ideal text format: one polynomial per line, '#' starts a comment
template <class K>
Ideal<K> parse_ideal(std::string_view text, const RingPtr<K>& ring) {
    std::vector<Polynomial<K>> gens;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string_view::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        gens.push_back(Polynomial<K>::parse(line.substr(a, b - a + 1), ring));
    }
    return Ideal<K>(ring, std::move(gens));
}

}  // namespace cm3
