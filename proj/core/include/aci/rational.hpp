#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace aci {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Gaussian rational a + b*i with exact rational parts. This is the coefficient
/// field for all symbolic work: the Kowalewski and Clebsch balances live in Q(i).
struct GRat {
    Rat re{0};
    Rat im{0};

    GRat() = default;
    GRat(long v) : re(v) {}
    GRat(const Rat& r) : re(r) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GRat i() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat operator-() const { return GRat(-re, -im); }
    GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
    GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }

    friend GRat operator+(GRat a, const GRat& b) { a += b; return a; }
    friend GRat operator-(GRat a, const GRat& b) { a -= b; return a; }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

    GRat conj() const { return GRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    GRat inv() const {
        Rat n = norm2();
        if (n == 0) throw std::domain_error("GRat: division by zero");
        return GRat(re / n, -im / n);
    }
    friend GRat operator/(const GRat& a, const GRat& b) { return a * b.inv(); }
    GRat& operator/=(const GRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
    friend bool operator<(const GRat& a, const GRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    Cplx to_complex() const { return Cplx(to_double(re), to_double(im)); }

    std::string str() const;
};

std::string rat_str(const Rat& r);
std::optional<Rat> parse_rat(const std::string& s);

/// Continued-fraction snap: nearest p/q with q <= max_den, accepted only when
/// |x - p/q| <= tol * max(1,|x|).
std::optional<Rat> rationalize(double x, double tol = 1e-8, long long max_den = 1000000);
std::optional<GRat> rationalize(const Cplx& z, double tol = 1e-8, long long max_den = 1000000);

}  // namespace aci
