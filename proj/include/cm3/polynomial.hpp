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

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "ring.hpp"

namespace cm3 {

struct parse_error : error {
    parse_error(const std::string& what, size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

// Sparse exact multivariate polynomial.  Terms are kept sorted in descending
// grevlex order with no zero coefficients; values are immutable once built,
// so sharing across tasks needs no coordination.
template <class K>
class Polynomial {
  public:
    struct Term {
        Monomial m;
        K c;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<K> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<K> ring, const K& c) {
        Polynomial p(ring);
        if (!FieldOps<K>::is_zero(c)) p.terms_.push_back({Monomial::one(), c});
        return p;
    }

    static Polynomial one(RingPtr<K> ring) {
        K c = FieldOps<K>::one(ring->field);
        return constant(std::move(ring), c);
    }

    static Polynomial variable(RingPtr<K> ring, std::string_view name, int power = 1) {
        int i = ring->index_of(name);
        if (i < 0) throw error("unknown variable: " + std::string(name));
        Polynomial p(ring);
        if (power == 0) return one(ring);
        p.terms_.push_back({Monomial::var(i, power), FieldOps<K>::one(ring->field)});
        return p;
    }

    static Polynomial from_terms(RingPtr<K> ring, std::vector<Term> ts) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // max geometric degree over terms; -1 for the zero polynomial
    long degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, ring_->geom_degree(t.m));
        return d;
    }

    struct Homogeneity {
        bool homogeneous;
        std::optional<long> degree;  // nullopt for the zero polynomial ("any")
    };

    Homogeneity homogeneity() const {
        if (terms_.empty()) return {true, std::nullopt};
        long d = ring_->geom_degree(terms_.front().m);
        for (const auto& t : terms_)
            if (ring_->geom_degree(t.m) != d) return {false, std::nullopt};
        return {true, d};
    }
    bool is_homogeneous() const { return homogeneity().homogeneous; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        r.terms_ = merge(a.ring_, a.terms_, b.terms_, false);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        r.terms_ = merge(a.ring_, a.terms_, b.terms_, true);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        std::map<Monomial, K, MonoLess> acc{MonoLess{a.ring_->nvars()}};
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.m * tb.m;
                auto [it, fresh] = acc.try_emplace(m, ta.c * tb.c);
                if (!fresh) it->second += ta.c * tb.c;
            }
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!FieldOps<K>::is_zero(it->second)) r.terms_.push_back({it->first, it->second});
        return r;
    }

    Polynomial scaled(const K& c) const {
        Polynomial r(ring_);
        if (FieldOps<K>::is_zero(c)) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c = t.c * c;
        return r;
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.m = t.m * m;
        return r;
    }

    Polynomial pow(int e) const {
        Polynomial r = one(ring_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!(*a.ring_ == *b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c))
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // exact specialization var := value, in the ring without var
    Polynomial substitute(const std::string& var, const K& value) const {
        int idx = ring_->index_of(var);
        if (idx < 0) throw error("substitute: variable not in ring: " + var);
        RingPtr<K> small = without_var(ring_, var);
        Polynomial r(small);
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            K c = t.c;
            for (int e = 0; e < t.m.exp[(size_t)idx]; ++e) c = c * value;
            if (FieldOps<K>::is_zero(c)) continue;
            Monomial m;
            int j = 0;
            for (int i = 0; i < ring_->nvars(); ++i) {
                if (i == idx) continue;
                m.exp[(size_t)j] = t.m.exp[(size_t)i];
                m.total += t.m.exp[(size_t)i];
                ++j;
            }
            ts.push_back({m, c});
        }
        return from_terms(small, std::move(ts));
    }

    // same polynomial in a larger ring (variables matched by name)
    Polynomial in_ring(const RingPtr<K>& target) const {
        if (*target == *ring_) {
            Polynomial r = *this;
            r.ring_ = target;
            return r;
        }
        std::vector<int> map((size_t)ring_->nvars());
        for (int i = 0; i < ring_->nvars(); ++i) {
            int j = target->index_of(ring_->vars[(size_t)i]);
            if (j < 0) {
                // dropping a variable is fine as long as it is unused
                bool used = false;
                for (const auto& t : terms_)
                    if (t.m.exp[(size_t)i]) used = true;
                if (used)
                    throw error("in_ring: variable " + ring_->vars[(size_t)i] +
                                " not present in target ring");
            }
            map[(size_t)i] = j;
        }
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            Monomial m;
            for (int i = 0; i < ring_->nvars(); ++i) {
                if (!t.m.exp[(size_t)i]) continue;
                m.exp[(size_t)map[(size_t)i]] = t.m.exp[(size_t)i];
                m.total += t.m.exp[(size_t)i];
            }
            ts.push_back({m, t.c});
        }
        return from_terms(target, std::move(ts));
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            std::string cs = FieldOps<K>::str(t.c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string ms = monomial_string(t.m);
            if (ms.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << ms;
            } else {
                os << cs << "*" << ms;
            }
        }
        return os.str();
    }

    std::string monomial_string(const Monomial& m) const {
        std::string s;
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = m.exp[(size_t)i];
            if (!e) continue;
            if (!s.empty()) s += "*";
            s += ring_->vars[(size_t)i];
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    static Polynomial parse(std::string_view text, const RingPtr<K>& ring);

    void check_ring(const Polynomial& o) const {
        if (!(*ring_ == *o.ring_)) throw ring_mismatch("polynomials from different rings");
    }

    struct MonoLess {
        int nvars;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return MonomialOrder::grevlex().cmp(a, b, nvars) < 0;
        }
    };

  private:
    void normalize() {
        MonoLess less{ring_->nvars()};
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return less(b.m, a.m); });
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c += t.c;
                if (FieldOps<K>::is_zero(out.back().c)) out.pop_back();
            } else if (!FieldOps<K>::is_zero(t.c)) {
                out.push_back(t);
            }
        }
        terms_ = std::move(out);
    }

    static std::vector<Term> merge(const RingPtr<K>& ring, const std::vector<Term>& a,
                                   const std::vector<Term>& b, bool subtract) {
        MonoLess less{ring->nvars()};
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && less(b[j].m, a[i].m))) {
                out.push_back(a[i++]);
            } else if (i == a.size() || less(a[i].m, b[j].m)) {
                out.push_back(b[j]);
                if (subtract) out.back().c = -out.back().c;
                ++j;
            } else {
                K c = subtract ? K(a[i].c - b[j].c) : K(a[i].c + b[j].c);
                if (!FieldOps<K>::is_zero(c)) out.push_back({a[i].m, c});
                ++i;
                ++j;
            }
        }
        return out;
    }

    RingPtr<K> ring_;
    std::vector<Term> terms_;
};

// --- parser ----------------------------------------------------------------
// Grammar: expr := ['-'] term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := base ('^' uint)?
//          base := rational | variable | '(' expr ')'
// Coefficients are integers or fractions ("3", "-1/2"); whitespace is free.

namespace detail {

template <class K>
class Parser {
  public:
    Parser(std::string_view text, RingPtr<K> ring) : s_(text), ring_(std::move(ring)) {}

    Polynomial<K> run() {
        Polynomial<K> p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

  private:
    Polynomial<K> expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        Polynomial<K> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial<K> t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial<K> term() {
        Polynomial<K> acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial<K> factor() {
        Polynomial<K> b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (pos_ == start) throw parse_error("expected integer exponent", pos_);
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            return b.pow(e);
        }
        return b;
    }

    Polynomial<K> base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<K> p = expr();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            size_t save = pos_;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
                if (pos_ == dstart) throw parse_error("expected denominator", pos_);
                std::string lit = std::string(s_.substr(start, save - start)) + "/" +
                                  std::string(s_.substr(dstart, pos_ - dstart));
                return Polynomial<K>::constant(ring_, FieldOps<K>::parse(ring_->field, lit));
            }
            pos_ = save;
            return Polynomial<K>::constant(
                ring_, FieldOps<K>::parse(ring_->field, s_.substr(start, save - start)));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (ring_->index_of(name) < 0)
                throw parse_error("unknown variable '" + name + "'", start);
            return Polynomial<K>::variable(ring_, name);
        }
        throw parse_error("unexpected character", pos_);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    std::string_view s_;
    RingPtr<K> ring_;
    size_t pos_ = 0;
};

}  // namespace detail

template <class K>
Polynomial<K> Polynomial<K>::parse(std::string_view text, const RingPtr<K>& ring) {
    return detail::Parser<K>(text, ring).run();
}

// All monomials of geometric degree n (weight-1 variables only).
template <class K>
std::vector<Monomial> monomial_basis(const RingPtr<K>& ring, int n) {
    std::vector<int> geom;
    for (int i = 0; i < ring->nvars(); ++i)
        if (ring->weights[(size_t)i] == 1) geom.push_back(i);
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, size_t vi, int rem) -> void {
        if (vi + 1 == geom.size()) {
            Monomial m = cur;
            m.exp[(size_t)geom[vi]] = (std::uint16_t)rem;
            m.total += (std::uint32_t)rem;
            out.push_back(m);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur.exp[(size_t)geom[vi]] = (std::uint16_t)e;
            cur.total += (std::uint32_t)e;
            self(self, vi + 1, rem - e);
            cur.total -= (std::uint32_t)e;
            cur.exp[(size_t)geom[vi]] = 0;
        }
    };
    if (n < 0) return out;
    if (geom.empty()) {
        if (n == 0) out.push_back(Monomial::one());
        return out;
    }
    rec(rec, 0, n);
    // descending grevlex, matching polynomial term order
    typename Polynomial<K>::MonoLess less{ring->nvars()};
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return less(b, a);
    });
    return out;
}

template <class K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr<K>& ring) {
    return Polynomial<K>::parse(text, ring);
}

}  // namespace cm3
