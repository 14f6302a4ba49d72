/*
 * Copyright 2026 The ivg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef IVG_RATIONAL_HPP
#define IVG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ivg {

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {} // NOLINT: implicit by design of arithmetic
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Parses "n", "-n", "p/q" (q may not be 0). Throws Error(MalformedDocument).
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational pow(unsigned exponent) const;

    /// "n" for integers, otherwise "p/q".
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Converts an integer-valued mpz to int64, throwing Error(TooLarge) on overflow.
std::int64_t to_int64(const mpz_class& z);

/// A rational or one of the two infinities; totally ordered.
class ExtendedRational {
public:
    enum class Kind : std::uint8_t { MinusInf, Finite, PlusInf };

    ExtendedRational() = default;
    ExtendedRational(Rational r) : kind_(Kind::Finite), value_(std::move(r)) {} // NOLINT
    ExtendedRational(std::int64_t n) : kind_(Kind::Finite), value_(n) {}     // NOLINT

    static ExtendedRational plus_inf() { return ExtendedRational(Kind::PlusInf); }
    static ExtendedRational minus_inf() { return ExtendedRational(Kind::MinusInf); }

    /// Accepts Rational::parse syntax plus "inf", "+inf", "-inf".
    static ExtendedRational parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
    bool is_minus_inf() const { return kind_ == Kind::MinusInf; }
    /// Precondition: is_finite().
    const Rational& value() const;

    ExtendedRational negated() const;
    std::string str() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b)
    {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b)
    {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

} // namespace ivg

template <>
struct std::hash<ivg::Rational> {
    std::size_t operator()(const ivg::Rational& r) const noexcept { return r.hash(); }
};

#endif
