#include "aci/linexact.hpp"

#include <stdexcept>

namespace aci {

bool all_constant(const QMat& M) {
    for (auto& row : M)
        for (auto& p : row)
            if (!p.is_constant()) return false;
    return true;
}

QVec mat_vec(const QMat& M, const QVec& v) {
    QVec r;
    r.reserve(M.size());
    for (auto& row : M) {
        PolyQ acc(row.empty() ? std::vector<std::string>{} : row[0].vars);
        for (size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
        r.push_back(acc);
    }
    return r;
}

namespace {

PolyQ det_rows(const QMat& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    // cofactor expansion along the first listed row; sizes here are <= 8
    size_t n = rows.size();
    const auto& vars = M[0][0].vars;
    if (n == 0) return PolyQ::constant(vars, GRat(1));
    if (n == 1) return M[rows[0]][cols[0]];
    PolyQ acc(vars);
    std::vector<int> sub(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < n; ++j) {
        const PolyQ& a = M[rows[0]][cols[j]];
        if (a.is_zero()) continue;
        std::vector<int> rc;
        rc.reserve(n - 1);
        for (size_t k = 0; k < n; ++k)
            if (k != j) rc.push_back(cols[k]);
        PolyQ minor = det_rows(M, sub, rc);
        if (j % 2 == 0) acc += a * minor;
        else acc -= a * minor;
    }
    return acc;
}

}  // namespace

PolyQ poly_det(const QMat& M) {
    std::vector<int> idx(M.size());
    for (size_t i = 0; i < M.size(); ++i) idx[i] = static_cast<int>(i);
    return det_rows(M, idx, idx);
}

QMat poly_adjugate(const QMat& M) {
    size_t n = M.size();
    const auto& vars = M[0][0].vars;
    QMat adj(n, QVec(n, PolyQ(vars)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (size_t k = 0; k < n; ++k) {
                if (k != i) rows.push_back(static_cast<int>(k));
                if (k != j) cols.push_back(static_cast<int>(k));
            }
            PolyQ minor = det_rows(M, rows, cols);
            adj[j][i] = ((i + j) % 2 == 0) ? minor : -minor;  // adj = C^T
        }
    }
    return adj;
}

std::optional<PolyQ> exact_divide(const PolyQ& p, const PolyQ& d) {
    if (d.is_zero()) return std::nullopt;
    if (d.is_constant()) {
        GRat c = d.constant_value();
        return p.scaled(c.inv());
    }
    // lex leading term of d
    const auto& lead = *d.terms.rbegin();
    PolyQ rem = p, quot(p.vars);
    int guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 100000) return std::nullopt;
        const auto& rl = *rem.terms.rbegin();
        ExpVec q(rl.first.size());
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = rl.first[i] - lead.first[i];
            if (q[i] < 0) return std::nullopt;
        }
        GRat cq = rl.second / lead.second;
        PolyQ t(p.vars);
        t.add_term(q, cq);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

GaussResult gauss_constant(const QMat& M) {
    size_t m = M.size(), n = M.empty() ? 0 : M[0].size();
    const auto vars = M.empty() ? std::vector<std::string>{} : M[0][0].vars;
    GaussResult g;
    g.ncols = n;
    g.red.assign(m, std::vector<GRat>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            g.red[i][j] = M[i][j].is_zero() ? GRat(0) : M[i][j].constant_value();
    g.ops.assign(m, std::vector<GRat>(m));
    for (size_t i = 0; i < m; ++i) g.ops[i][i] = GRat(1);
    g.pivot_col.assign(m, -1);

    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && g.red[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(g.red[piv], g.red[row]);
        std::swap(g.ops[piv], g.ops[row]);
        GRat inv = g.red[row][col].inv();
        for (size_t j = 0; j < n; ++j) g.red[row][j] *= inv;
        for (size_t j = 0; j < m; ++j) g.ops[row][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || g.red[i][col].is_zero()) continue;
            GRat f = g.red[i][col];
            for (size_t j = 0; j < n; ++j) g.red[i][j] -= f * g.red[row][j];
            for (size_t j = 0; j < m; ++j) g.ops[i][j] -= f * g.ops[row][j];
        }
        g.pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    g.rank = row;

    // right kernel
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < g.rank; ++i) is_pivot[static_cast<size_t>(g.pivot_col[i])] = true;
    for (size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        QVec v(n, PolyQ(vars));
        v[col] = PolyQ::constant(vars, GRat(1));
        for (size_t i = 0; i < g.rank; ++i)
            v[static_cast<size_t>(g.pivot_col[i])] =
                PolyQ::constant(vars, -g.red[i][col]);
        g.kernel.push_back(std::move(v));
    }
    // left kernel: rows of ops beyond the rank annihilate M
    for (size_t i = g.rank; i < m; ++i) {
        QVec v(m, PolyQ(vars));
        for (size_t j = 0; j < m; ++j) v[j] = PolyQ::constant(vars, g.ops[i][j]);
        g.left_kernel.push_back(std::move(v));
    }
    return g;
}

std::optional<QVec> GaussResult::solve(const QVec& r) const {
    const auto& vars = r.empty() ? std::vector<std::string>{} : r[0].vars;
    size_t m = ops.size();
    // transformed RHS
    std::vector<PolyQ> tr(m, PolyQ(vars));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (!(ops[i][j] == GRat(0))) tr[i] += r[j].scaled(ops[i][j]);
    for (size_t i = rank; i < m; ++i)
        if (!tr[i].is_zero()) return std::nullopt;  // inconsistent
    QVec z(ncols, PolyQ(vars));
    for (size_t i = 0; i < rank; ++i) z[static_cast<size_t>(pivot_col[i])] = tr[i];
    return z;
}

std::optional<QVec> solve_linear_exact(const QMat& M, const QVec& r) {
    PolyQ det = poly_det(M);
    if (det.is_zero()) return std::nullopt;
    QMat adj = poly_adjugate(M);
    QVec num = mat_vec(adj, r);
    QVec z;
    z.reserve(num.size());
    for (auto& p : num) {
        auto q = exact_divide(p, det);
        if (!q) throw std::runtime_error("solve_linear_exact: solution not polynomial");
        z.push_back(*q);
    }
    return z;
}

namespace {

// Univariate content removal: if every entry of v is a polynomial in at most one
// common variable, divide out their monic gcd. Keeps kernel vectors primitive so
// injected parameters stay well-scaled.
struct UniPoly {
    std::vector<GRat> c;  // c[k] * x^k
    int deg() const {
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
            if (!c[static_cast<size_t>(k)].is_zero()) return k;
        return -1;
    }
    void trim() { c.resize(static_cast<size_t>(deg() + 1)); }
};

std::optional<int> common_univar(const QVec& v) {
    int var = -1;
    for (auto& p : v)
        for (auto& [e, c] : p.terms)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) {
                    if (var == -1) var = static_cast<int>(i);
                    else if (var != static_cast<int>(i)) return std::nullopt;
                }
    return var;  // -1 means all constant
}

UniPoly to_uni(const PolyQ& p, int var) {
    UniPoly u;
    for (auto& [e, c] : p.terms) {
        int k = var >= 0 ? e[static_cast<size_t>(var)] : 0;
        if (static_cast<size_t>(k) >= u.c.size()) u.c.resize(static_cast<size_t>(k) + 1);
        u.c[static_cast<size_t>(k)] += c;
    }
    return u;
}

PolyQ from_uni(const UniPoly& u, int var, const std::vector<std::string>& vars) {
    PolyQ p(vars);
    for (size_t k = 0; k < u.c.size(); ++k) {
        if (u.c[k].is_zero()) continue;
        ExpVec e(vars.size(), 0);
        if (var >= 0) e[static_cast<size_t>(var)] = static_cast<int>(k);
        p.add_term(e, u.c[k]);
    }
    return p;
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
    int db = b.deg();
    if (db < 0) throw std::domain_error("uni_mod: zero divisor");
    GRat lead = b.c[static_cast<size_t>(db)];
    while (a.deg() >= db) {
        int da = a.deg();
        GRat f = a.c[static_cast<size_t>(da)] / lead;
        for (int k = 0; k <= db; ++k)
            a.c[static_cast<size_t>(da - db + k)] -= f * b.c[static_cast<size_t>(k)];
        a.trim();
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (b.deg() >= 0) {
        UniPoly r = uni_mod(a, b);
        a = b;
        b = r;
    }
    // monic normalization
    int d = a.deg();
    if (d >= 0) {
        GRat inv = a.c[static_cast<size_t>(d)].inv();
        for (auto& x : a.c) x *= inv;
    }
    a.trim();
    return a;
}

void primitive_univar(QVec& v) {
    auto var = common_univar(v);
    if (!var) return;
    UniPoly g;
    bool started = false;
    for (auto& p : v) {
        if (p.is_zero()) continue;
        UniPoly u = to_uni(p, *var);
        g = started ? uni_gcd(g, u) : u;
        started = true;
        if (g.deg() == 0) break;
    }
    if (!started || g.deg() <= 0) {
        // scale by leading coefficient of the first nonzero entry
        for (auto& p : v)
            if (!p.is_zero()) {
                GRat inv = p.terms.rbegin()->second.inv();
                for (auto& q : v) q = q.scaled(inv);
                return;
            }
        return;
    }
    PolyQ gp = from_uni(g, *var, v[0].vars);
    for (auto& p : v) {
        auto q = exact_divide(p, gp);
        if (!q) return;  // not a true common factor; leave as is
        p = *q;
    }
    primitive_univar(v);  // normalize leading constant
}

}  // namespace

ResonanceSolve solve_resonant_exact(const QMat& M, const QVec& r) {
    const auto& vars = M[0][0].vars;
    size_t m = M.size();
    ResonanceSolve out;

    if (all_constant(M)) {
        GaussResult g = gauss_constant(M);
        if (g.rank == m) throw std::invalid_argument("solve_resonant_exact: matrix nonsingular");
        for (auto& v : g.left_kernel) {
            PolyQ dot(vars);
            for (size_t j = 0; j < m; ++j) dot += r[j].scaled(v[j].is_zero() ? GRat(0) : v[j].constant_value());
            if (!dot.is_zero())
                throw std::runtime_error("resonance compatibility failure (Fredholm condition)");
        }
        auto z = g.solve(r);
        if (!z) throw std::runtime_error("resonance compatibility failure (inconsistent system)");
        out.particular = *z;
        out.kernel = g.kernel;
        return out;
    }

    // Symbolic corank-1 path: kernel and left kernel from the adjugate.
    QMat adj = poly_adjugate(M);
    QVec K(m, PolyQ(vars)), lam(m, PolyQ(vars));
    bool found = false;
    for (size_t j = 0; j < m && !found; ++j) {
        for (size_t i = 0; i < m; ++i)
            if (!adj[i][j].is_zero()) {
                for (size_t k = 0; k < m; ++k) K[k] = adj[k][j];
                found = true;
                break;
            }
    }
    if (!found)
        throw std::runtime_error(
            "solve_resonant_exact: symbolic matrix with corank >= 2; pin the balance "
            "parameters to rational values and re-expand");
    for (size_t i = 0; i < m; ++i) {
        bool nz = false;
        for (size_t j = 0; j < m; ++j) nz = nz || !adj[i][j].is_zero();
        if (nz) {
            for (size_t j = 0; j < m; ++j) lam[j] = adj[i][j];
            break;
        }
    }
    primitive_univar(K);
    primitive_univar(lam);
    {
        PolyQ dot(vars);
        for (size_t j = 0; j < m; ++j) dot += lam[j] * r[j];
        if (!dot.is_zero())
            throw std::runtime_error("resonance compatibility failure (Fredholm condition)");
    }

    // Try a host component whose kernel entry is a nonzero constant: pinning that
    // component keeps the particular solution polynomial.
    int host = -1;
    for (size_t j = 0; j < m; ++j)
        if (!K[j].is_zero() && K[j].is_constant()) { host = static_cast<int>(j); break; }
    if (host < 0)
        for (size_t j = 0; j < m; ++j)
            if (!K[j].is_zero()) { host = static_cast<int>(j); break; }

    // Reduced square system: drop column `host` and one row that keeps the rest
    // nonsingular (the left kernel is one-dimensional, so a row with lam != 0 is
    // dependent on the others).
    int drop_row = -1;
    for (size_t i = 0; i < m; ++i)
        if (!lam[i].is_zero()) { drop_row = static_cast<int>(i); break; }
    QMat red(m - 1, QVec(m - 1, PolyQ(vars)));
    QVec rred(m - 1, PolyQ(vars));
    {
        size_t ri = 0;
        for (size_t i = 0; i < m; ++i) {
            if (static_cast<int>(i) == drop_row) continue;
            size_t cj = 0;
            for (size_t j = 0; j < m; ++j) {
                if (static_cast<int>(j) == host) continue;
                red[ri][cj++] = M[i][j];
            }
            rred[ri++] = r[i];
        }
    }
    PolyQ D = poly_det(red);
    if (D.is_zero())
        throw std::runtime_error("solve_resonant_exact: reduced system singular (corank > 1?)");
    QVec W = mat_vec(poly_adjugate(red), rred);
    // candidate numerator with 0 in the host slot
    QVec Wfull(m, PolyQ(vars));
    {
        size_t cj = 0;
        for (size_t j = 0; j < m; ++j)
            if (static_cast<int>(j) != host) Wfull[j] = W[cj++];
    }

    QVec z(m, PolyQ(vars));
    bool divided = true;
    for (size_t j = 0; j < m; ++j) {
        auto q = exact_divide(Wfull[j], D);
        if (!q) { divided = false; break; }
        z[j] = *q;
    }
    if (!divided) {
        // Clear the denominator by shifting along the kernel: find s with
        // Wfull + s*K == 0 (mod D), s a polynomial of degree < deg(D) in the
        // single balance variable with coefficients in the remaining parameters.
        auto var_of = [&](const QVec& v) { return common_univar(v); };
        auto dvar = var_of(QVec{D});
        auto kvar = var_of(K);
        if (!dvar || !kvar || (*dvar >= 0 && *kvar >= 0 && *dvar != *kvar))
            throw std::runtime_error("solve_resonant_exact: multivariate denominator clearing unsupported");
        int xv = *dvar >= 0 ? *dvar : *kvar;
        if (xv < 0) throw std::runtime_error("solve_resonant_exact: degenerate clearing");
        UniPoly Du = to_uni(D, xv);
        int dd = Du.deg();
        // reduce K entries mod D
        std::vector<UniPoly> Ku(m);
        for (size_t j = 0; j < m; ++j) Ku[j] = uni_mod(to_uni(K[j], xv), Du);
        // unknown s = sum_t s_t x^t, t < dd; match per (component, x-power, monomial in others)
        // Build the constant linear system acting on (s_0..s_{dd-1}) per component/power.
        // A[(j,p)][t] = coeff of x^p in (x^t * Ku[j] mod D)
        std::vector<std::vector<std::vector<GRat>>> A(m);
        for (size_t j = 0; j < m; ++j) {
            A[j].assign(static_cast<size_t>(dd), std::vector<GRat>(static_cast<size_t>(dd)));
            UniPoly cur = Ku[j];
            for (int t = 0; t < dd; ++t) {
                for (int p = 0; p < dd; ++p)
                    A[j][static_cast<size_t>(t)][static_cast<size_t>(p)] =
                        p < static_cast<int>(cur.c.size()) ? cur.c[static_cast<size_t>(p)] : GRat(0);
                // multiply by x and reduce
                cur.c.insert(cur.c.begin(), GRat(0));
                cur = uni_mod(cur, Du);
            }
        }
        // collect Wfull mod D per component as polynomials in x with PolyQ-in-others coeffs
        // monomials in the other variables:
        std::map<ExpVec, std::vector<std::vector<GRat>>> rhs;  // mono -> [component][power]
        for (size_t j = 0; j < m; ++j) {
            for (auto& [e, c] : Wfull[j].terms) {
                ExpVec mono(e);
                int p = mono[static_cast<size_t>(xv)];
                mono[static_cast<size_t>(xv)] = 0;
                auto& slot = rhs[mono];
                if (slot.empty()) slot.assign(m, std::vector<GRat>(static_cast<size_t>(std::max(p + 1, dd))));
                for (auto& comp : slot)
                    if (comp.size() <= static_cast<size_t>(p)) comp.resize(static_cast<size_t>(p) + 1);
                slot[j][static_cast<size_t>(p)] += c;
            }
        }
        QVec s(static_cast<size_t>(dd), PolyQ(vars));
        for (auto& [mono, comp_pows] : rhs) {
            // reduce each component's x-poly mod D, then solve sum_t s_t[mono]*A = -reduced
            // stacked least-squares-free exact solve via Gauss on (m*dd) x dd
            QMat sys(m * static_cast<size_t>(dd), QVec(static_cast<size_t>(dd), PolyQ(vars)));
            QVec rhsv(m * static_cast<size_t>(dd), PolyQ(vars));
            for (size_t j = 0; j < m; ++j) {
                UniPoly wj;
                wj.c = comp_pows[j];
                wj = uni_mod(wj, Du);
                for (int p = 0; p < dd; ++p) {
                    for (int t = 0; t < dd; ++t)
                        sys[j * static_cast<size_t>(dd) + static_cast<size_t>(p)][static_cast<size_t>(t)] =
                            PolyQ::constant(vars, A[j][static_cast<size_t>(t)][static_cast<size_t>(p)]);
                    GRat w = p < static_cast<int>(wj.c.size()) ? wj.c[static_cast<size_t>(p)] : GRat(0);
                    rhsv[j * static_cast<size_t>(dd) + static_cast<size_t>(p)] =
                        PolyQ::constant(vars, -w);
                }
            }
            GaussResult g = gauss_constant(sys);
            auto sol = g.solve(rhsv);
            if (!sol)
                throw std::runtime_error("solve_resonant_exact: denominator clearing failed");
            for (int t = 0; t < dd; ++t) {
                GRat st = (*sol)[static_cast<size_t>(t)].is_zero()
                              ? GRat(0)
                              : (*sol)[static_cast<size_t>(t)].constant_value();
                if (st.is_zero()) continue;
                s[static_cast<size_t>(t)].add_term(mono, st);
            }
        }
        // s[t] holds the coefficient polynomial without the x^t factor
        PolyQ sfix(vars);
        for (int t = 0; t < dd; ++t) {
            ExpVec xe(vars.size(), 0);
            xe[static_cast<size_t>(xv)] = t;
            PolyQ xt(vars);
            xt.add_term(xe, GRat(1));
            sfix += s[static_cast<size_t>(t)] * xt;
        }
        for (size_t j = 0; j < m; ++j) {
            PolyQ num = Wfull[j] + sfix * K[j];
            auto q = exact_divide(num, D);
            if (!q) throw std::runtime_error("solve_resonant_exact: cleared numerator not divisible");
            z[j] = *q;
        }
    }

    // verify
    QVec check = mat_vec(M, z);
    for (size_t j = 0; j < m; ++j)
        if (!(check[j] - r[j]).is_zero())
            throw std::runtime_error("solve_resonant_exact: particular solution verification failed");
    QVec kcheck = mat_vec(M, K);
    for (size_t j = 0; j < m; ++j)
        if (!kcheck[j].is_zero())
            throw std::runtime_error("solve_resonant_exact: kernel verification failed");

    out.particular = z;
    out.kernel.push_back(K);
    return out;
}

}  // namespace aci
