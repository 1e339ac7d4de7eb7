#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "aci/rational.hpp"

namespace aci {

using ExpVec = std::vector<int>;

namespace detail {
template <class C> struct CoeffOps;

template <> struct CoeffOps<GRat> {
    static bool is_zero(const GRat& c) { return c.is_zero(); }
    static Cplx to_complex(const GRat& c) { return c.to_complex(); }
};
template <> struct CoeffOps<Cplx> {
    static bool is_zero(const Cplx& c) { return c == Cplx(0.0, 0.0); }
    static Cplx to_complex(const Cplx& c) { return c; }
};
}  // namespace detail

/// Sparse multivariate polynomial over an ordered variable list. Exponent vectors
/// are dense (systems here have at most 8 variables). Two polynomials interoperate
/// only when their variable lists are identical; align_vars() extends them.
template <class C>
class MultiPoly {
  public:
    std::vector<std::string> vars;
    std::map<ExpVec, C> terms;  // no zero coefficients stored

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> v) : vars(std::move(v)) {}

    static MultiPoly constant(std::vector<std::string> v, const C& c) {
        MultiPoly p(std::move(v));
        if (!detail::CoeffOps<C>::is_zero(c)) p.terms[ExpVec(p.vars.size(), 0)] = c;
        return p;
    }
    static MultiPoly variable(std::vector<std::string> v, const std::string& name, const C& c = C(1)) {
        MultiPoly p(std::move(v));
        ExpVec e(p.vars.size(), 0);
        auto it = std::find(p.vars.begin(), p.vars.end(), name);
        if (it == p.vars.end()) throw std::invalid_argument("MultiPoly: unknown variable " + name);
        e[static_cast<size_t>(it - p.vars.begin())] = 1;
        if (!detail::CoeffOps<C>::is_zero(c)) p.terms[e] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == ExpVec(vars.size(), 0));
    }
    C constant_value() const {
        if (terms.empty()) return C(0);
        auto it = terms.find(ExpVec(vars.size(), 0));
        if (it == terms.end() || terms.size() != 1)
            throw std::domain_error("MultiPoly: not a constant");
        return it->second;
    }

    void add_term(const ExpVec& e, const C& c) {
        if (detail::CoeffOps<C>::is_zero(c)) return;
        auto [it, fresh] = terms.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (detail::CoeffOps<C>::is_zero(it->second)) terms.erase(it);
        }
    }

    int degree(size_t var_idx) const {
        int d = 0;
        for (auto& [e, c] : terms) d = std::max(d, e[var_idx]);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r(vars);
        for (auto& [e, c] : terms) r.terms[e] = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.vars);
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                ExpVec e(ea);
                for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly scaled(const C& s) const {
        MultiPoly r(vars);
        if (detail::CoeffOps<C>::is_zero(s)) return r;
        for (auto& [e, c] : terms) r.add_term(e, c * s);
        return r;
    }

    MultiPoly pow(int n) const {
        MultiPoly r = constant(vars, C(1));
        MultiPoly base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    MultiPoly derivative(size_t var_idx) const {
        MultiPoly r(vars);
        for (auto& [e, c] : terms) {
            if (e[var_idx] == 0) continue;
            ExpVec d(e);
            d[var_idx] -= 1;
            r.add_term(d, c * C(e[var_idx]));
        }
        return r;
    }

    /// Horner-style evaluation: recurse on the first variable, grouping terms by
    /// its exponent; exact in GRat mode.
    template <class V>
    V eval(const std::vector<V>& point) const {
        if (point.size() != vars.size())
            throw std::invalid_argument("MultiPoly::eval: dimension mismatch");
        return eval_rec(terms.begin(), terms.end(), 0, point);
    }

    /// Collect the coefficient (a polynomial in the remaining variables) of
    /// var_idx^k. Variable list is preserved.
    MultiPoly coeff_of(size_t var_idx, int k) const {
        MultiPoly r(vars);
        for (auto& [e, c] : terms)
            if (e[var_idx] == k) {
                ExpVec d(e);
                d[var_idx] = 0;
                r.add_term(d, c);
            }
        return r;
    }

    bool depends_on(size_t var_idx) const {
        for (auto& [e, c] : terms)
            if (e[var_idx] != 0) return true;
        return false;
    }

    /// Substitute a polynomial for one variable (same variable list).
    MultiPoly subst(size_t var_idx, const MultiPoly& value) const {
        check_vars(value);
        MultiPoly r(vars);
        int dmax = degree(var_idx);
        std::vector<MultiPoly> powers;
        powers.push_back(constant(vars, C(1)));
        for (int k = 1; k <= dmax; ++k) powers.push_back(powers.back() * value);
        for (auto& [e, c] : terms) {
            ExpVec d(e);
            int k = d[var_idx];
            d[var_idx] = 0;
            MultiPoly t(vars);
            t.add_term(d, c);
            r += t * powers[static_cast<size_t>(k)];
        }
        return r;
    }

    MultiPoly<Cplx> to_float() const {
        MultiPoly<Cplx> r(vars);
        for (auto& [e, c] : terms) r.terms[e] = detail::CoeffOps<C>::to_complex(c);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars == b.vars && a.terms == b.terms;
    }

    std::string str() const;

  private:
    void check_vars(const MultiPoly& o) const {
        if (vars != o.vars) throw std::invalid_argument("MultiPoly: variable lists differ");
    }
    template <class V>
    static V eval_rec(typename std::map<ExpVec, C>::const_iterator lo,
                      typename std::map<ExpVec, C>::const_iterator hi, size_t vi,
                      const std::vector<V>& point) {
        // terms are lex-sorted, so a range with equal exponents in vars[0..vi) is
        // contiguous and splits by the exponent of vars[vi].
        if (lo == hi) return V(0);
        if (vi == point.size()) return V(lo->second);  // all exponents consumed
        // Gather sub-ranges by exponent of vi in decreasing order, then Horner.
        std::vector<std::pair<int, std::pair<decltype(lo), decltype(lo)>>> groups;
        auto it = lo;
        while (it != hi) {
            int e = it->first[vi];
            auto gend = it;
            while (gend != hi && gend->first[vi] == e) ++gend;
            groups.push_back({e, {it, gend}});
            it = gend;
        }
        // map iterates in increasing lex order; exponent of vi increases within the range
        V acc(0);
        int prev_exp = 0;
        for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
            if (g != groups.rbegin())
                for (int k = 0; k < prev_exp - g->first; ++k) acc = acc * point[vi];
            acc = acc + eval_rec(g->second.first, g->second.second, vi + 1, point);
            prev_exp = g->first;
        }
        for (int k = 0; k < prev_exp; ++k) acc = acc * point[vi];
        return acc;
    }
};

using PolyQ = MultiPoly<GRat>;
using PolyC = MultiPoly<Cplx>;

/// Rewrite p over a larger variable list (old variables must appear in new_vars).
template <class C>
MultiPoly<C> align_vars(const MultiPoly<C>& p, const std::vector<std::string>& new_vars) {
    std::vector<size_t> where(p.vars.size());
    for (size_t i = 0; i < p.vars.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), p.vars[i]);
        if (it == new_vars.end())
            throw std::invalid_argument("align_vars: variable " + p.vars[i] + " missing");
        where[i] = static_cast<size_t>(it - new_vars.begin());
    }
    MultiPoly<C> r(new_vars);
    for (auto& [e, c] : p.terms) {
        ExpVec d(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
        r.add_term(d, c);
    }
    return r;
}

std::string poly_str(const PolyQ& p);
std::string poly_str(const PolyC& p);

}  // namespace aci
