#include "aci/multipoly.hpp"

#include <cmath>
#include <sstream>

namespace aci {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::optional<Rat> parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

std::string GRat::str() const {
    if (im == 0) return rat_str(re);
    std::ostringstream os;
    os << "(" << rat_str(re) << (im > 0 ? "+" : "-") << rat_str(abs(im)) << "i)";
    return os.str();
}

std::optional<Rat> rationalize(double x, double tol, long long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    double scale = std::max(1.0, std::abs(x));
    // continued fraction convergents
    double v = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(x - approx) <= tol * scale * 0.01) break;
        double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(x - approx) <= tol * scale) return Rat(BigInt(p1), BigInt(q1));
    return std::nullopt;
}

std::optional<GRat> rationalize(const Cplx& z, double tol, long long max_den) {
    auto re = rationalize(z.real(), tol, max_den);
    auto im = rationalize(z.imag(), tol, max_den);
    if (!re || !im) return std::nullopt;
    return GRat(*re, *im);
}

namespace {
template <class C>
std::string poly_str_impl(const MultiPoly<C>& p, const std::string& (*coeff_fn)(const C&, std::string&)) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.terms) {
        if (!first) os << " + ";
        first = false;
        std::string buf;
        os << coeff_fn(c, buf);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << p.vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}
const std::string& grat_str(const GRat& c, std::string& buf) { buf = c.str(); return buf; }
const std::string& cplx_str(const Cplx& c, std::string& buf) {
    std::ostringstream os;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    buf = os.str();
    return buf;
}
}  // namespace

std::string poly_str(const PolyQ& p) { return poly_str_impl<GRat>(p, grat_str); }
std::string poly_str(const PolyC& p) { return poly_str_impl<Cplx>(p, cplx_str); }

template <> std::string MultiPoly<GRat>::str() const { return poly_str(*this); }
template <> std::string MultiPoly<Cplx>::str() const { return poly_str(*this); }

}  // namespace aci
