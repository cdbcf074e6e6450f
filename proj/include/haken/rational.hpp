#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace haken {

// Exact rational on int64, always stored in lowest terms with den > 0.
// Angle sums in Andreev's conditions are compared against pi, 2*pi, 3*pi
// exactly, so everything angle-related runs through this type.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("rational division by zero");
        return Rational(num * o.den, den * o.num);
    }
    Rational operator-() const { return Rational(-num, den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Dihedral angle pi * num / den, restricted to the non-obtuse range (0, pi/2].
// A Coxeter label is an integer submultiple of pi, i.e. num == 1.
struct Angle {
    std::int64_t num = 1;
    std::int64_t den = 2;

    Angle() = default;
    Angle(std::int64_t n, std::int64_t d) : num(n), den(d) {
        std::int64_t g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
        if (g > 1) { num /= g; den /= g; }
        if (num < 1 || den < 2 || 2 * num > den)
            throw std::invalid_argument("angle must lie in (0, pi/2]: " + std::to_string(n) + "pi/" + std::to_string(d));
    }

    static Angle right() { return Angle(1, 2); }
    static Angle pi_over(std::int64_t n) { return Angle(1, n); }

    bool is_coxeter() const { return num == 1; }
    std::int64_t order() const { return den; }  // meaningful for Coxeter labels

    Rational as_fraction_of_pi() const { return Rational(num, den); }
    double radians() const;

    bool operator==(const Angle& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool operator<(const Angle& o) const { return as_fraction_of_pi() < o.as_fraction_of_pi(); }

    std::string str() const {
        if (num == 1) return "pi/" + std::to_string(den);
        return std::to_string(num) + "pi/" + std::to_string(den);
    }
};

}  // namespace haken
