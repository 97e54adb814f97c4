#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * Every coefficient in the library is a Rational. Values are always kept in
 * lowest terms with a positive denominator, so equality is structural.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isoring {

using Integer = mpz_class;

/// Raised when an operation leaves the mathematical domain of its inputs
/// (division by zero, non-unit inversion, non-integral counts, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(Integer(std::to_string(v))) {}
    Rational(unsigned v) : q_(v) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(unsigned long long v) : q_(Integer(std::to_string(v))) {}
    Rational(Integer const& v) : q_(v) {}
    Rational(Integer const& num, Integer const& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Value as a signed 64-bit integer; throws if not integral or out of range.
    std::int64_t to_int64() const {
        if (!is_integer()) throw domain_error("rational " + str() + " is not an integer");
        Integer const& n = q_.get_num();
        if (!n.fits_slong_p()) throw domain_error("integer " + str() + " out of range");
        return n.get_si();
    }

    /// "3", "-1/2". Canonical and parseable by Rational::parse.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    /// Always "num/den", used by the JSON term encoding.
    std::string fraction_str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational inverse() const {
        if (is_zero()) throw domain_error("division by zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }
    Rational& operator+=(Rational const& o) { q_ += o.q_; return *this; }
    Rational& operator-=(Rational const& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(Rational const& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(Rational const& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const& b) { return a /= b; }

    friend bool operator==(Rational const& a, Rational const& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.str(); }

    mpq_class const& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // Accept the typographic minus sign as well as ASCII '-'.
    if (auto pos = s.find("\xE2\x88\x92"); pos != std::string::npos) s.replace(pos, 3, "-");
    auto trim = [](std::string v) {
        auto b = v.find_first_not_of(" \t\r\n");
        auto e = v.find_last_not_of(" \t\r\n");
        return b == std::string::npos ? std::string{} : v.substr(b, e - b + 1);
    };
    s = trim(s);
    if (s.empty()) throw domain_error("empty rational literal");
    auto valid_int = [](std::string const& v) {
        std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string v) {
        if (!v.empty() && v[0] == '+') v.erase(0, 1);
        return Integer(v);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw domain_error("malformed rational '" + s + "'");
        return Rational(to_int(s));
    }
    std::string num = trim(s.substr(0, slash)), den = trim(s.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den)) throw domain_error("malformed rational '" + s + "'");
    return Rational(to_int(num), to_int(den));
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace isoring

