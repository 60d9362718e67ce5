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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cm3 {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ring_mismatch : error {
    using error::error;
};

struct invalid_spec : error {
    using error::error;
};

struct not_a_curve : error {
    using error::error;
};

// Coefficients are exact: arbitrary-precision rationals (GMP) or residues
// modulo a fixed prime.  There is no floating point anywhere in the library.
using Rational = mpq_class;

// Prime-field element.  The modulus travels with the value; a default
// constructed element (p == 0) is a neutral zero that adopts the modulus of
// whatever it is combined with.
class Fp {
  public:
    Fp() = default;
    Fp(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : v), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = merged(a, b);
        if (!p) return Fp();
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = merged(a, b);
        if (!p) return Fp();
        return Fp(a.v_ + p - b.v_ % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = merged(a, b);
        if (!p) return Fp();
        return Fp((a.v_ % p) * (b.v_ % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return p_ ? Fp(p_ - v_, p_) : Fp(); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint64_t p = merged(a, b);
        return p ? (a.v_ % p) == (b.v_ % p) : true;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (!p_ || v_ == 0) throw error("Fp: division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = (std::int64_t)p_, nr = (std::int64_t)v_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw error("Fp: modulus is not prime");
        if (t < 0) t += (std::int64_t)p_;
        return Fp((std::uint64_t)t, p_);
    }

  private:
    static std::uint64_t merged(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw error("Fp: mixed moduli");
        return a.p_ ? a.p_ : b.p_;
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

// Field context: what a ring needs to mint scalars.
struct QCtx {
    bool operator==(const QCtx&) const { return true; }
};
struct FpCtx {
    std::uint64_t p = 32003;
    bool operator==(const FpCtx& o) const { return p == o.p; }
};

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    using Ctx = QCtx;
    static constexpr bool is_rational = true;
    static Rational zero(const Ctx&) { return Rational(0); }
    static Rational one(const Ctx&) { return Rational(1); }
    static Rational from_long(const Ctx&, long v) { return Rational(v); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational parse(const Ctx&, std::string_view s) {
        Rational r(std::string(s), 10);
        r.canonicalize();
        return r;
    }
    static std::string str(const Rational& a) { return a.get_str(); }
};

template <>
struct FieldOps<Fp> {
    using Ctx = FpCtx;
    static constexpr bool is_rational = false;
    static Fp zero(const Ctx& c) { return Fp(0, c.p); }
    static Fp one(const Ctx& c) { return Fp(1, c.p); }
    static Fp from_long(const Ctx& c, long v) {
        long r = v % (long)c.p;
        if (r < 0) r += (long)c.p;
        return Fp((std::uint64_t)r, c.p);
    }
    static bool is_zero(const Fp& a) {
        return a.modulus() ? a.value() % a.modulus() == 0 : a.value() == 0;
    }
    static Fp parse(const Ctx& c, std::string_view s) {
        // integers and fractions reduce into the field
        auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            mpz_class n(std::string(s), 10);
            mpz_class r = n % (long)c.p;
            if (r < 0) r += (long)c.p;
            return Fp(r.get_ui(), c.p);
        }
        Fp num = parse(c, s.substr(0, slash));
        Fp den = parse(c, s.substr(slash + 1));
        return num / den;
    }
    static std::string str(const Fp& a) {
        return std::to_string(a.modulus() ? a.value() % a.modulus() : a.value());
    }
};

// Reduce an exact rational mod p; denominators prime to p only.
inline Fp reduce_mod(const Rational& q, const FpCtx& c) {
    mpz_class num = q.get_num() % (long)c.p;
    if (num < 0) num += (long)c.p;
    mpz_class den = q.get_den() % (long)c.p;
    if (den == 0) throw error("reduce_mod: denominator divisible by p");
    Fp n(num.get_ui(), c.p), d(den.get_ui(), c.p);
    return n / d;
}

}  // namespace cm3
