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

#include "ivg/rational.hpp"

#include <cctype>
#include <ostream>

#include "ivg/error.hpp"

namespace ivg {

namespace {

bool valid_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

} // namespace

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::DeadEndVertex: return "DeadEndVertex";
    case ErrorKind::UnknownVertexReference: return "UnknownVertexReference";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::EmptyObjective: return "EmptyObjective";
    case ErrorKind::PriorityOutOfRange: return "PriorityOutOfRange";
    case ErrorKind::NonpositiveWidth: return "NonpositiveWidth";
    case ErrorKind::SingletonNotSupported: return "SingletonNotSupported";
    case ErrorKind::NoFiniteEndpoint: return "NoFiniteEndpoint";
    case ErrorKind::IncompatibleReduction: return "IncompatibleReduction";
    case ErrorKind::UnsupportedObjective: return "UnsupportedObjective";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw Error(ErrorKind::MalformedDocument, "zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!valid_integer_literal(num))
        throw Error(ErrorKind::MalformedDocument, "invalid rational '" + std::string(text) + "'");
    mpq_class q;
    if (slash == std::string_view::npos) {
        q = mpq_class(parse_integer(num));
    } else {
        const auto den = text.substr(slash + 1);
        if (!valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
            throw Error(ErrorKind::MalformedDocument, "invalid rational '" + std::string(text) + "'");
        mpz_class d = parse_integer(den);
        if (d == 0) throw Error(ErrorKind::MalformedDocument, "zero denominator in '" + std::string(text) + "'");
        q = mpq_class(parse_integer(num), d);
    }
    return Rational(std::move(q));
}

mpz_class Rational::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

Rational Rational::pow(unsigned exponent) const
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const
{
    const std::size_t h1 = mpz_get_ui(value_.get_num_mpz_t()) ^ (static_cast<std::size_t>(sign()) << 63);
    const std::size_t h2 = mpz_get_ui(value_.get_den_mpz_t());
    return h1 * 0x9E3779B97F4A7C15ull ^ (h2 + 0x7F4A7C159E3779B9ull + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t to_int64(const mpz_class& z)
{
    if (!z.fits_slong_p()) throw Error(ErrorKind::TooLarge, "integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

ExtendedRational ExtendedRational::parse(std::string_view text)
{
    if (text == "inf" || text == "+inf") return plus_inf();
    if (text == "-inf") return minus_inf();
    return ExtendedRational(Rational::parse(text));
}

const Rational& ExtendedRational::value() const
{
    if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite ExtendedRational");
    return value_;
}

ExtendedRational ExtendedRational::negated() const
{
    switch (kind_) {
    case Kind::MinusInf: return plus_inf();
    case Kind::PlusInf: return minus_inf();
    case Kind::Finite: break;
    }
    return ExtendedRational(-value_);
}

std::string ExtendedRational::str() const
{
    switch (kind_) {
    case Kind::MinusInf: return "-inf";
    case Kind::PlusInf: return "inf";
    case Kind::Finite: break;
    }
    return value_.str();
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

} // namespace ivg
