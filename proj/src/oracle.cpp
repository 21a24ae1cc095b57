#include "superinv/oracle.hpp"

#include "superinv/errors.hpp"
#include "superinv/membership.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <utility>

namespace superinv {

namespace {

// A matrix superalgebra inside gl(V), cut out by linear equations on the entries.
// Entry (a, b) is stored at a * D + b and means the coefficient of v_a in X v_b.
struct Realization {
    std::vector<int> vpar;
    std::vector<LinearForm> vwt;  // reduced weights of the basis of V
    std::function<std::vector<QVector>(int parity)> constraints;
};

LinearForm unit_form(std::size_t size, std::size_t i, const Rational& c = 1) {
    LinearForm l(size);
    l[i] = c;
    return l;
}

QVector supercommutator(const QVector& a, int pa, const QVector& b, int pb, std::size_t D) {
    QVector ab(D * D), ba(D * D);
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t k = 0; k < D; ++k) {
            const Rational& x = a[i * D + k];
            const Rational& y = b[i * D + k];
            for (std::size_t j = 0; j < D; ++j) {
                if (sgn(x) != 0) ab[i * D + j] += x * b[k * D + j];
                if (sgn(y) != 0) ba[i * D + j] += y * a[k * D + j];
            }
        }
    const bool minus = !(pa & pb);
    for (std::size_t i = 0; i < D * D; ++i) {
        if (minus) ab[i] -= ba[i];
        else ab[i] += ba[i];
    }
    return ab;
}

std::function<std::vector<QVector>(int)> form_constraints(std::vector<int> vpar, QMatrix B) {
    return [vpar = std::move(vpar), B = std::move(B)](int p) {
        const std::size_t D = vpar.size();
        std::vector<QVector> eqs;
        for (std::size_t u = 0; u < D; ++u)
            for (std::size_t v = 0; v < D; ++v) {
                QVector e(D * D);
                const Rational s = (p & vpar[u]) ? -1 : 1;
                for (std::size_t a = 0; a < D; ++a) {
                    e[a * D + u] += B(a, v);
                    e[a * D + v] += s * B(u, a);
                }
                eqs.push_back(std::move(e));
            }
        return eqs;
    };
}

Realization real_gl(const RootDatum& d, bool traceless) {
    const std::size_t n = static_cast<std::size_t>(d.spec.n), m = static_cast<std::size_t>(d.spec.m);
    Realization r;
    for (std::size_t i = 0; i < n + m; ++i) {
        r.vpar.push_back(i < n ? 0 : 1);
        r.vwt.push_back(d.reduce(unit_form(d.full->size(), i)));
    }
    const std::size_t D = n + m;
    r.constraints = [D, n, traceless](int) {
        std::vector<QVector> eqs;
        if (traceless) {
            QVector e(D * D);
            for (std::size_t a = 0; a < D; ++a) e[a * D + a] = a < n ? 1 : -1;
            eqs.push_back(std::move(e));
        }
        return eqs;
    };
    return r;
}

// Even part: u_i (e_i), u'_i (-e_i) and, for odd orthogonal dimension, u_0.
// Odd part: w_j (d_j), w'_j (-d_j) with a symplectic pairing.
Realization real_osp(const RootDatum& d) {
    const std::size_t m = static_cast<std::size_t>(d.spec.m), n = static_cast<std::size_t>(d.spec.n);
    const bool with_zero = d.spec.family == Family::ospB;
    const std::size_t F = d.full->size();
    Realization r;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (plus, minus) positions
    for (std::size_t i = 0; i < m; ++i) {
        r.vpar.push_back(0);
        r.vwt.push_back(d.reduce(unit_form(F, i)));
        r.vpar.push_back(0);
        r.vwt.push_back(d.reduce(unit_form(F, i, -1)));
        pairs.emplace_back(2 * i, 2 * i + 1);
    }
    std::size_t zero_pos = r.vpar.size();
    if (with_zero) {
        r.vpar.push_back(0);
        r.vwt.push_back(LinearForm(d.dim()));
    }
    const std::size_t odd_start = r.vpar.size();
    for (std::size_t j = 0; j < n; ++j) {
        r.vpar.push_back(1);
        r.vwt.push_back(d.reduce(unit_form(F, m + j)));
        r.vpar.push_back(1);
        r.vwt.push_back(d.reduce(unit_form(F, m + j, -1)));
    }
    const std::size_t D = r.vpar.size();
    QMatrix B(D, D);
    for (auto [a, b] : pairs) B(a, b) = B(b, a) = 1;
    if (with_zero) B(zero_pos, zero_pos) = 1;
    for (std::size_t j = 0; j < n; ++j) {
        B(odd_start + 2 * j, odd_start + 2 * j + 1) = 1;
        B(odd_start + 2 * j + 1, odd_start + 2 * j) = -1;
    }
    r.constraints = form_constraints(r.vpar, B);
    return r;
}

// [[A, B], [C, -A^T]] with B symmetric and C skew.
Realization real_pe(const RootDatum& d) {
    const std::size_t n = static_cast<std::size_t>(d.spec.n);
    Realization r;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        r.vpar.push_back(i < n ? 0 : 1);
        r.vwt.push_back(d.reduce(unit_form(d.full->size(), i % n, i < n ? 1 : -1)));
    }
    const std::size_t D = 2 * n;
    r.constraints = [n, D](int) {
        std::vector<QVector> eqs;
        auto at = [D](std::size_t a, std::size_t b) { return a * D + b; };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QVector e(D * D);
                e[at(n + i, n + j)] += 1;
                e[at(j, i)] += 1;
                eqs.push_back(e);
                QVector b(D * D);
                b[at(i, n + j)] += 1;
                b[at(j, n + i)] -= 1;
                eqs.push_back(b);
                QVector c(D * D);
                c[at(n + i, j)] += 1;
                c[at(n + j, i)] += 1;
                eqs.push_back(c);
            }
        return eqs;
    };
    return r;
}

// Derivations of the Grassmann algebra; basis xi^S indexed by the bitmask S.
Realization real_vect(const RootDatum& d) {
    const int n = d.spec.n;
    const std::size_t D = std::size_t{1} << n;
    Realization r;
    for (std::size_t S = 0; S < D; ++S) {
        r.vpar.push_back(std::popcount(S) % 2);
        LinearForm w(d.full->size());
        for (int a = 0; a < n; ++a)
            if (S >> a & 1) w[static_cast<std::size_t>(a)] = 1;
        r.vwt.push_back(d.reduce(w));
    }
    // xi^S xi^T = sign xi^{S|T}, or zero when they overlap.
    auto product = [](std::size_t S, std::size_t T) -> std::pair<int, std::size_t> {
        if (S & T) return {0, 0};
        int swaps = 0;
        for (std::size_t s = S; s; s &= s - 1) {
            const std::size_t low = s & (~s + 1);
            swaps += std::popcount(T & (low - 1));
        }
        return {swaps % 2 ? -1 : 1, S | T};
    };
    const std::vector<int> vpar = r.vpar;
    r.constraints = [D, vpar, product](int p) {
        std::vector<QVector> eqs;
        auto at = [D](std::size_t a, std::size_t b) { return a * D + b; };
        for (std::size_t a = 0; a < D; ++a)
            for (std::size_t b = 0; b < D; ++b)
                for (std::size_t c = 0; c < D; ++c) {
                    QVector e(D * D);
                    auto [s, ab] = product(a, b);
                    if (s != 0) e[at(c, ab)] += s;
                    for (std::size_t k = 0; k < D; ++k) {
                        auto [s1, kb] = product(k, b);
                        if (s1 != 0 && kb == c) e[at(k, a)] -= s1;
                        auto [s2, ak] = product(a, k);
                        if (s2 != 0 && ak == c) e[at(k, b)] -= ((p & vpar[a]) ? -s2 : s2);
                    }
                    eqs.push_back(std::move(e));
                }
        return eqs;
    };
    return r;
}

Realization realization(const RootDatum& d) {
    switch (d.spec.family) {
        case Family::gl: return real_gl(d, false);
        case Family::sl: return real_gl(d, true);
        case Family::ospB:
        case Family::ospD: return real_osp(d);
        case Family::pe: return real_pe(d);
        case Family::vect: return real_vect(d);
        default: break;
    }
    throw CatalogError(d.spec.name() + " is not in the oracle catalog");
}

std::string entry_label(const QVector& x, std::size_t D, std::size_t index) {
    std::size_t nz = 0, pos = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) {
            ++nz;
            pos = i;
        }
    if (nz == 1 && x[pos] == 1) return "E" + std::to_string(pos / D + 1) + "_" + std::to_string(pos % D + 1);
    return "x" + std::to_string(index);
}

SparseVector bracket(const StructureConstants& sc, const SparseVector& a, const SparseVector& b) {
    SparseVector out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b)
            for (const auto& [k, c] : sc.brackets[i][j]) out[k] += ca * cb * c;
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

SparseVector single(std::size_t i) { return {{i, Rational(1)}}; }

std::string describe(const StructureConstants& sc, std::initializer_list<std::size_t> idx) {
    std::string s;
    for (std::size_t i : idx) s += (s.empty() ? "" : ", ") + sc.labels[i];
    return s;
}

// Sorts a word of coordinate indices; returns 0 when an odd coordinate repeats.
int canonical_sign(const StructureConstants& sc, std::vector<std::size_t>& seq) {
    int sign = 1;
    for (std::size_t j = 1; j < seq.size(); ++j)
        for (std::size_t t = j; t > 0 && seq[t - 1] > seq[t]; --t) {
            if (sc.parity[seq[t - 1]] && sc.parity[seq[t]]) sign = -sign;
            std::swap(seq[t - 1], seq[t]);
        }
    for (std::size_t j = 1; j < seq.size(); ++j)
        if (seq[j] == seq[j - 1] && sc.parity[seq[j]]) return 0;
    return sign;
}

WordVector apply_vector(const StructureConstants& sc, std::size_t i, const WordVector& v) {
    WordVector out;
    for (const auto& [w, c] : v)
        for (const auto& [w2, c2] : coadjoint_apply(sc, i, w)) out[w2] += c * c2;
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

void add_into(WordVector& acc, const WordVector& v, const Rational& c) {
    for (const auto& [w, x] : v) acc[w] += c * x;
    std::erase_if(acc, [](const auto& kv) { return sgn(kv.second) == 0; });
}

}  // namespace

bool in_oracle_catalog(const AlgebraSpec& spec) {
    switch (spec.family) {
        case Family::gl:
            return (spec.n == 1 && spec.m == 1) || (spec.n == 2 && spec.m == 1) || (spec.n == 2 && spec.m == 2);
        case Family::sl: return spec.n == 2 && spec.m == 1;
        case Family::ospB: return spec.m == 0 && spec.n == 1;
        case Family::ospD: return spec.m == 1 && spec.n == 1;
        case Family::pe: return spec.n == 2;
        case Family::vect: return spec.n == 2;
        default: return false;
    }
}

StructureConstants build_sc(const AlgebraSpec& spec) {
    if (!in_oracle_catalog(spec)) throw CatalogError(spec.name() + " is not in the oracle catalog");
    const RootDatum d = build(spec);
    const Realization real = realization(d);
    const std::size_t D = real.vpar.size();
    const std::size_t r = d.dim();

    std::map<std::pair<int, LinearForm>, std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) {
            LinearForm w = real.vwt[a];
            for (std::size_t k = 0; k < r; ++k) w[k] -= real.vwt[b][k];
            classes[{(real.vpar[a] + real.vpar[b]) % 2, w}].push_back(a * D + b);
        }

    struct Element {
        QVector matrix;
        int parity;
        LinearForm weight;
    };
    std::vector<Element> cartan_raw, even, odd;
    for (int p = 0; p < 2; ++p) {
        const std::vector<QVector> eqs = real.constraints(p);
        for (const auto& [key, entries] : classes) {
            if (key.first != p) continue;
            QMatrix sys(0, entries.size());
            for (const auto& e : eqs) {
                QVector row(entries.size());
                bool nonzero = false;
                for (std::size_t c = 0; c < entries.size(); ++c) {
                    row[c] = e[entries[c]];
                    nonzero = nonzero || sgn(row[c]) != 0;
                }
                if (nonzero) sys.append_row(row);
            }
            for (const auto& k : kernel_basis(sys)) {
                QVector x(D * D);
                for (std::size_t c = 0; c < entries.size(); ++c) x[entries[c]] = k[c];
                Element el{std::move(x), p, key.second};
                if (p == 0 && is_zero(key.second)) cartan_raw.push_back(std::move(el));
                else (p == 0 ? even : odd).push_back(std::move(el));
            }
        }
    }
    if (cartan_raw.size() != r) throw Error("realization of " + spec.name() + " has the wrong Cartan rank");

    // Cartan basis dual to the reduced coordinates.
    QMatrix W(D, r);
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t k = 0; k < r; ++k) W(a, k) = real.vwt[a][k];
    QMatrix M(r, r);
    for (std::size_t l = 0; l < r; ++l) {
        QVector diag(D);
        for (std::size_t a = 0; a < D; ++a) {
            diag[a] = cartan_raw[l].matrix[a * D + a];
            for (std::size_t b = 0; b < D; ++b)
                if (a != b && sgn(cartan_raw[l].matrix[a * D + b]) != 0)
                    throw Error("non-diagonal Cartan element in " + spec.name());
        }
        auto x = solve(W, diag);
        if (!x) throw Error("Cartan element of " + spec.name() + " is not a weight operator");
        for (std::size_t k = 0; k < r; ++k) M(k, l) = (*x)[k];
    }
    std::vector<Element> basis;
    for (std::size_t k = 0; k < r; ++k) {
        QVector ek(r);
        ek[k] = 1;
        auto c = solve(M, ek);
        if (!c || rank(M) != r) throw Error("degenerate Cartan in " + spec.name());
        QVector h(D * D);
        for (std::size_t l = 0; l < r; ++l)
            for (std::size_t i = 0; i < D * D; ++i) h[i] += (*c)[l] * cartan_raw[l].matrix[i];
        basis.push_back({std::move(h), 0, LinearForm(r)});
    }
    for (auto& e : even) basis.push_back(std::move(e));
    for (auto& e : odd) basis.push_back(std::move(e));

    StructureConstants sc;
    sc.algebra = spec.name();
    sc.vt = d.vt;
    const std::size_t N = basis.size();
    QMatrix A(D * D, N);
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i = 0; i < D * D; ++i) A(i, j) = basis[j].matrix[i];
        sc.parity.push_back(basis[j].parity);
        sc.weights.push_back(basis[j].weight);
        (basis[j].parity ? sc.dim_odd : sc.dim_even) += 1;
        sc.labels.push_back(j < r ? "h_" + d.vt->name(j) : entry_label(basis[j].matrix, D, j));
    }
    for (std::size_t k = 0; k < r; ++k) {
        sc.cartan.push_back(k);
        sc.weight_map.push_back(unit_form(r, k));
    }
    sc.brackets.assign(N, std::vector<SparseVector>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            QVector br = supercommutator(basis[i].matrix, basis[i].parity, basis[j].matrix, basis[j].parity, D);
            auto c = solve(A, br);
            if (!c) throw Error("realization of " + spec.name() + " is not closed under the bracket");
            for (std::size_t k = 0; k < N; ++k)
                if (sgn((*c)[k]) != 0) sc.brackets[i][j][k] = (*c)[k];
        }
    return sc;
}

SelfCheck check_super_skew(const StructureConstants& sc) {
    for (std::size_t i = 0; i < sc.dim(); ++i)
        for (std::size_t j = 0; j < sc.dim(); ++j) {
            SparseVector neg = sc.brackets[j][i];
            const Rational s = (sc.parity[i] & sc.parity[j]) ? 1 : -1;
            for (auto& [k, c] : neg) c *= s;
            if (neg != sc.brackets[i][j]) return {false, "skew symmetry fails for " + describe(sc, {i, j})};
        }
    return {};
}

SelfCheck check_jacobi(const StructureConstants& sc) {
    const std::size_t N = sc.dim();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k) {
                SparseVector lhs = bracket(sc, single(i), sc.brackets[j][k]);
                SparseVector rhs = bracket(sc, sc.brackets[i][j], single(k));
                const Rational s = (sc.parity[i] & sc.parity[j]) ? -1 : 1;
                for (const auto& [l, c] : bracket(sc, single(j), sc.brackets[i][k])) rhs[l] += s * c;
                std::erase_if(rhs, [](const auto& kv) { return sgn(kv.second) == 0; });
                if (lhs != rhs) return {false, "Jacobi identity fails for " + describe(sc, {i, j, k})};
            }
    return {};
}

SelfCheck check_cartan(const StructureConstants& sc) {
    for (std::size_t c : sc.cartan)
        for (std::size_t k = 0; k < sc.dim(); ++k) {
            SparseVector expect;
            Rational w = sc.weights[k][c];
            if (sgn(w) != 0) expect[k] = w;
            if (sc.brackets[c][k] != expect) return {false, "not a weight vector: " + describe(sc, {c, k})};
        }
    return {};
}

std::vector<Monomial> super_monomials(const StructureConstants& sc, int d) {
    std::vector<Monomial> out;
    const std::size_t N = sc.dim();
    Monomial cur(N, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == N) {
            if (left == 0) out.push_back(cur);
            return;
        }
        const int top = sc.parity[pos] ? std::min(left, 1) : left;
        for (int e = top; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    if (d >= 0) rec(rec, 0, d);
    return out;
}

std::size_t super_dimension(const StructureConstants& sc, int d) {
    if (d < 0) return 0;
    mpz_class total = 0;
    for (int b = 0; b <= d && static_cast<std::size_t>(b) <= sc.dim_odd; ++b) {
        mpz_class ev, od;
        const int a = d - b;
        if (sc.dim_even == 0) ev = a == 0 ? 1 : 0;
        else mpz_bin_uiui(ev.get_mpz_t(), sc.dim_even + static_cast<std::size_t>(a) - 1, static_cast<unsigned long>(a));
        mpz_bin_uiui(od.get_mpz_t(), sc.dim_odd, static_cast<unsigned long>(b));
        total += ev * od;
    }
    if (!total.fits_ulong_p()) return static_cast<std::size_t>(-1);
    return total.get_ui();
}

WordVector coadjoint_apply(const StructureConstants& sc, std::size_t i, const Monomial& word) {
    std::vector<std::size_t> seq;
    for (std::size_t k = 0; k < word.size(); ++k)
        for (int e = 0; e < word[k]; ++e) seq.push_back(k);
    WordVector out;
    int prefix = 0;
    const std::size_t N = sc.dim();
    for (std::size_t t = 0; t < seq.size(); ++t) {
        const std::size_t k = seq[t];
        const int outer = (sc.parity[i] & prefix) ? -1 : 1;
        const int inner = (sc.parity[i] & sc.parity[k]) ? 1 : -1;
        // x_i . X_k = -(-1)^{p_i p_k} sum_l c_{il}^k X_l
        for (std::size_t l = 0; l < N; ++l) {
            auto it = sc.brackets[i][l].find(k);
            if (it == sc.brackets[i][l].end()) continue;
            std::vector<std::size_t> s = seq;
            s[t] = l;
            const int sign = canonical_sign(sc, s);
            if (sign == 0) continue;
            Monomial w(N, 0);
            for (std::size_t x : s) ++w[x];
            out[w] += it->second * (outer * inner * sign);
        }
        prefix ^= sc.parity[k];
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

SelfCheck check_representation(const StructureConstants& sc, int d) {
    const std::vector<Monomial> words = super_monomials(sc, d);
    const std::size_t N = sc.dim();
    for (const auto& w : words) {
        const WordVector base{{w, Rational(1)}};
        std::vector<WordVector> once(N);
        for (std::size_t i = 0; i < N; ++i) once[i] = coadjoint_apply(sc, i, w);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                WordVector lhs;
                for (const auto& [k, c] : sc.brackets[i][j]) add_into(lhs, once[k], c);
                WordVector rhs = apply_vector(sc, i, once[j]);
                add_into(rhs, apply_vector(sc, j, once[i]), (sc.parity[i] & sc.parity[j]) ? 1 : -1);
                if (lhs != rhs) return {false, "representation property fails for " + describe(sc, {i, j})};
            }
    }
    return {};
}

SuperPolySpace coadjoint_invariants(const StructureConstants& sc, int d, std::size_t cap) {
    if (d < 0) throw UsageError("negative degree");
    const std::size_t total = super_dimension(sc, d);
    if (total > cap)
        throw CapExceeded("S^" + std::to_string(d) + " of " + sc.algebra + " has " + std::to_string(total) +
                          " words, cap " + std::to_string(cap));
    SuperPolySpace out;
    out.degree = d;
    const std::size_t r = sc.vt->size();
    for (auto& w : super_monomials(sc, d)) {
        LinearForm wt(r);
        for (std::size_t k = 0; k < w.size(); ++k)
            for (std::size_t j = 0; j < r; ++j) wt[j] += sc.weights[k][j] * w[k];
        if (is_zero(wt)) out.words.push_back(std::move(w));
    }
    const std::size_t V = out.words.size();
    std::vector<QVector> K;
    for (std::size_t c = 0; c < V; ++c) {
        QVector e(V);
        e[c] = 1;
        K.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < sc.dim() && !K.empty(); ++i) {
        if (std::find(sc.cartan.begin(), sc.cartan.end(), i) != sc.cartan.end()) continue;
        std::vector<WordVector> images;
        std::map<Monomial, std::size_t> target;
        for (const auto& w : out.words) {
            images.push_back(coadjoint_apply(sc, i, w));
            for (const auto& [t, c] : images.back()) target.emplace(t, 0);
        }
        std::size_t idx = 0;
        for (auto& [t, pos] : target) pos = idx++;
        QMatrix m(target.size(), K.size());
        for (std::size_t col = 0; col < K.size(); ++col)
            for (std::size_t w = 0; w < V; ++w) {
                if (sgn(K[col][w]) == 0) continue;
                for (const auto& [t, c] : images[w]) m(target[t], col) += K[col][w] * c;
            }
        std::vector<QVector> next;
        for (const auto& y : kernel_basis(m)) {
            QVector v(V);
            for (std::size_t col = 0; col < K.size(); ++col)
                if (sgn(y[col]) != 0)
                    for (std::size_t w = 0; w < V; ++w) v[w] += y[col] * K[col][w];
            next.push_back(std::move(v));
        }
        K = std::move(next);
    }
    out.space = Subspace::span(V, K);
    return out;
}

Restriction restrict_to_cartan(const StructureConstants& sc, const SuperPolySpace& space) {
    std::vector<std::size_t> pos_of(sc.dim(), static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < sc.cartan.size(); ++c) pos_of[sc.cartan[c]] = c;
    std::vector<Poly> polys;
    for (std::size_t row = 0; row < space.space.dim(); ++row) {
        Poly p(sc.vt);
        for (std::size_t w = 0; w < space.words.size(); ++w) {
            const Rational& coef = space.space.basis()(row, w);
            if (sgn(coef) == 0) continue;
            const Monomial& word = space.words[w];
            bool cartan_only = true;
            for (std::size_t k = 0; k < word.size(); ++k)
                if (word[k] && pos_of[k] == static_cast<std::size_t>(-1)) cartan_only = false;
            if (!cartan_only) continue;
            Poly term = Poly::constant(sc.vt, coef);
            for (std::size_t k = 0; k < word.size(); ++k)
                if (word[k]) term = term * pow(Poly::linear(sc.vt, sc.weight_map[pos_of[k]]), word[k]);
            p += term;
        }
        polys.push_back(std::move(p));
    }
    Restriction res{GradedSubspace::span(sc.vt, space.degree, polys), true};
    res.injective = res.image.dim() == space.dim();
    return res;
}

OracleVerdict oracle_check(const AlgebraSpec& spec, int d) {
    const StructureConstants sc = build_sc(spec);
    const SuperPolySpace inv = coadjoint_invariants(sc, d);
    const Restriction res = restrict_to_cartan(sc, inv);
    const GradedSubspace mem = graded_basis(build(spec), d);
    OracleVerdict v;
    v.dim_invariants = inv.dim();
    v.dim_restricted = res.image.dim();
    v.injective = res.injective;
    v.matches_membership = res.injective && res.image == mem;
    return v;
}

}  // namespace superinv
