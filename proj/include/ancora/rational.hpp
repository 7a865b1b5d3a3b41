#ifndef ANCORA_RATIONAL_HPP
#define ANCORA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ancora {

/// Exact rational scalar. All engine arithmetic is built on this; nothing
/// in the library ever rounds.
using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r)
{
    return r.str();
}

/// Gaussian rational a + b*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }
    /// i^k for any integer k (period 4).
    static GaussianRational i_power(long k)
    {
        long m = ((k % 4) + 4) % 4;
        switch (m) {
            case 0: return {Rational(1), Rational(0)};
            case 1: return {Rational(0), Rational(1)};
            case 2: return {Rational(-1), Rational(0)};
            default: return {Rational(0), Rational(-1)};
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        Rational n = o.norm();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        Rational nre = (re * o.re + im * o.im) / n;
        Rational nim = (im * o.re - re * o.im) / n;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// Canonical rendering: "0", "3/2", "i", "-i", "2i", "1+2i", "1-i", ...
inline std::string to_string(const GaussianRational& g)
{
    if (g.is_zero()) return "0";
    std::string s;
    if (g.re != 0) s += g.re.str();
    if (g.im != 0) {
        if (g.im == 1)
            s += (g.re != 0 ? "+i" : "i");
        else if (g.im == -1)
            s += "-i";
        else {
            if (g.re != 0 && g.im > 0) s += "+";
            s += g.im.str() + "i";
        }
    }
    return s;
}

}  // namespace ancora

#endif
