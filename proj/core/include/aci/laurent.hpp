#pragma once

#include <limits>
#include <vector>

#include "aci/multipoly.hpp"

namespace aci {

/// Truncated scalar Laurent series in t whose coefficients are polynomials in a
/// parameter ring. coef[k] multiplies t^(lo+k); powers above `hi` are unknown
/// (truncated), powers below `lo` are exactly zero.
template <class C>
struct LaurentSeries {
    std::vector<std::string> vars;          // parameter variables of the coefficients
    int lo = 0;                             // power of the first stored coefficient
    int hi = -1;                            // last power guaranteed correct (inclusive)
    std::vector<MultiPoly<C>> coef;         // size hi-lo+1 once normalized

    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    LaurentSeries() = default;
    LaurentSeries(std::vector<std::string> v, int lo_, int hi_)
        : vars(std::move(v)), lo(lo_), hi(hi_) {
        if (hi >= lo) coef.assign(static_cast<size_t>(hi - lo + 1), MultiPoly<C>(vars));
    }

    static LaurentSeries constant(std::vector<std::string> v, const C& c) {
        LaurentSeries s(std::move(v), 0, kInf);
        s.coef.clear();
        s.lo = 0;
        s.coef.push_back(MultiPoly<C>::constant(s.vars, c));
        return s;
    }
    static LaurentSeries from_poly(const MultiPoly<C>& p, int power) {
        LaurentSeries s(p.vars, power, kInf);
        s.coef.clear();
        s.coef.push_back(p);
        return s;
    }

    bool known(int power) const { return power <= hi; }

    MultiPoly<C> coeff(int power) const {
        if (power > hi) throw std::domain_error("LaurentSeries: coefficient beyond truncation");
        if (power < lo || power > lo + static_cast<int>(coef.size()) - 1)
            return MultiPoly<C>(vars);
        return coef[static_cast<size_t>(power - lo)];
    }

    void set_coeff(int power, const MultiPoly<C>& p) {
        if (power < lo || power > lo + static_cast<int>(coef.size()) - 1)
            throw std::domain_error("LaurentSeries: set_coeff out of range");
        coef[static_cast<size_t>(power - lo)] = p;
    }

    /// First power with a nonzero stored coefficient; lo-1 if identically zero
    /// on the stored window (still bounded below by lo).
    int order() const {
        for (size_t k = 0; k < coef.size(); ++k)
            if (!coef[k].is_zero()) return lo + static_cast<int>(k);
        return hi + 1;
    }

    LaurentSeries operator-() const {
        LaurentSeries r(*this);
        for (auto& p : r.coef) p = -p;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r(a.vars, std::min(a.lo, b.lo), std::min(a.hi, b.hi));
        if (r.hi < r.lo) throw std::domain_error("LaurentSeries: empty window in +");
        for (int p = r.lo; p <= r.hi; ++p) {
            MultiPoly<C> s(a.vars);
            if (p >= a.lo && p <= a.lo + static_cast<int>(a.coef.size()) - 1)
                s += a.coef[static_cast<size_t>(p - a.lo)];
            if (p >= b.lo && p <= b.lo + static_cast<int>(b.coef.size()) - 1)
                s += b.coef[static_cast<size_t>(p - b.lo)];
            r.set_coeff(p, s);
        }
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        // guaranteed window: a covers [a.lo, a.hi], b covers [b.lo, b.hi]; the
        // product coefficient at power p is complete iff p <= min(a.hi+b.ord_lo, b.hi+a.ord_lo)
        // with ord_lo the true lowest order of the other factor; use the stored lo
        // (conservative: stored lo is a lower bound for the true order).
        int lo = a.lo + b.lo;
        long hi_l = std::min<long>(static_cast<long>(a.hi) + b.lo, static_cast<long>(b.hi) + a.lo);
        int hi = hi_l > kInf ? kInf : static_cast<int>(hi_l);
        LaurentSeries r(a.vars, lo, hi);
        if (hi < lo) throw std::domain_error("LaurentSeries: empty window in *");
        for (size_t i = 0; i < a.coef.size(); ++i) {
            if (a.coef[i].is_zero()) continue;
            for (size_t j = 0; j < b.coef.size(); ++j) {
                int p = a.lo + static_cast<int>(i) + b.lo + static_cast<int>(j);
                if (p > hi) break;
                if (b.coef[j].is_zero()) continue;
                r.coef[static_cast<size_t>(p - lo)] += a.coef[i] * b.coef[j];
            }
        }
        return r;
    }

    LaurentSeries pow(int n) const {
        LaurentSeries r = constant(vars, C(1));
        LaurentSeries base = *this;
        if (n == 0) return r;
        r = base;
        for (int k = 1; k < n; ++k) r = r * base;
        return r;
    }

    /// d/dt
    LaurentSeries diff_t() const {
        LaurentSeries r(vars, lo - 1, hi == kInf ? kInf : hi - 1);
        for (size_t k = 0; k < coef.size(); ++k) {
            int p = lo + static_cast<int>(k);
            if (p == 0) continue;
            if (p - 1 > r.hi) break;
            r.set_coeff(p - 1, coef[k].scaled(C(p)));
        }
        return r;
    }

    /// Evaluate at numeric t (float mirror), truncating at the stored window.
    Cplx eval_at(const Cplx& t, const std::vector<Cplx>& param_values) const {
        Cplx acc(0.0, 0.0);
        for (size_t k = 0; k < coef.size(); ++k) {
            if (coef[k].is_zero()) continue;
            Cplx c = coef[k].to_float().eval(param_values);
            acc += c * std::pow(t, lo + static_cast<int>(k));
        }
        return acc;
    }
};

using SeriesQ = LaurentSeries<GRat>;

/// Substitute a vector of Laurent series into a polynomial in the phase
/// variables. Coefficients of the polynomial are constants of the same ring.
template <class C>
LaurentSeries<C> substitute_series(const MultiPoly<C>& p,
                                   const std::vector<LaurentSeries<C>>& series) {
    if (p.vars.size() != series.size())
        throw std::invalid_argument("substitute_series: phase dimension mismatch");
    std::vector<std::string> pvars = series.empty() ? std::vector<std::string>{} : series[0].vars;
    // window bookkeeping happens inside the series ops; start from the constant 0
    LaurentSeries<C> acc = LaurentSeries<C>::constant(pvars, C(0));
    for (auto& [e, c] : p.terms) {
        LaurentSeries<C> term = LaurentSeries<C>::constant(pvars, c);
        for (size_t i = 0; i < series.size(); ++i)
            if (e[i] > 0) term = term * series[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

}  // namespace aci
