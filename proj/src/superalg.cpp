#include "superinv/superalg.hpp"

#include "superinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace superinv {

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

int parse_int(const std::string& s, const std::string& whole) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
        throw CatalogError("bad rank in '" + whole + "'");
    if (s.size() > 3) throw CatalogError("rank out of range in '" + whole + "'");
    return std::stoi(s);
}

// "a|b" -> (a, b)
std::pair<int, int> parse_pair(const std::string& s, const std::string& whole) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw CatalogError("expected 'a|b' in '" + whole + "'");
    return {parse_int(s.substr(0, bar), whole), parse_int(s.substr(bar + 1), whole)};
}

long factorial(int k) {
    long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

std::string family_tag(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::sl: return "sl";
        case Family::psl: return "psl";
        case Family::ospB: return "ospB";
        case Family::ospD: return "ospD";
        case Family::osp_alpha: return "osp_alpha";
        case Family::ag2: return "ag2";
        case Family::ab3: return "ab3";
        case Family::pe: return "pe";
        case Family::spe: return "spe";
        case Family::vect: return "vect";
        case Family::svect: return "svect";
        case Family::svect_tilde: return "svect_tilde";
    }
    return "?";
}

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
    const std::string s = strip(text);
    AlgebraSpec spec;
    if (s == "ag2") {
        spec.family = Family::ag2;
        return spec;
    }
    if (s == "ab3") {
        spec.family = Family::ab3;
        return spec;
    }
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') throw CatalogError("unknown algebra '" + s + "'");
    const std::string head = s.substr(0, open);
    const std::string args = s.substr(open + 1, s.size() - open - 2);

    if (head == "gl" || head == "sl" || head == "psl") {
        spec.family = head == "gl" ? Family::gl : head == "sl" ? Family::sl : Family::psl;
        std::tie(spec.n, spec.m) = parse_pair(args, s);
    } else if (head == "osp") {
        auto [big, small] = parse_pair(args, s);
        if (small % 2 != 0) throw CatalogError("osp(M|N) needs even N: '" + s + "'");
        spec.n = small / 2;
        spec.family = big % 2 ? Family::ospB : Family::ospD;
        spec.m = big % 2 ? (big - 1) / 2 : big / 2;
    } else if (head == "osp_alpha") {
        spec.family = Family::osp_alpha;
        auto comma = args.find(',');
        if (comma == std::string::npos || args.substr(0, comma) != "4|2")
            throw CatalogError("expected osp_alpha(4|2,alpha=p/q): '" + s + "'");
        std::string rest = args.substr(comma + 1);
        if (rest.rfind("alpha=", 0) != 0) throw CatalogError("missing alpha in '" + s + "'");
        try {
            spec.alpha = parse_rational(rest.substr(6));
        } catch (const ParseError&) {
            throw CatalogError("bad alpha in '" + s + "'");
        }
        spec.n = 2;
        spec.m = 1;
    } else if (head == "pe" || head == "spe") {
        spec.family = head == "pe" ? Family::pe : Family::spe;
        spec.n = parse_int(args, s);
    } else if (head == "vect" || head == "svect" || head == "svect~" || head == "svect_tilde") {
        spec.family = head == "vect" ? Family::vect : head == "svect" ? Family::svect : Family::svect_tilde;
        auto [zero, k] = parse_pair(args, s);
        if (zero != 0) throw CatalogError("only (0|n) vectorial algebras are supported: '" + s + "'");
        spec.n = k;
    } else {
        throw CatalogError("unknown algebra '" + s + "'");
    }
    spec.validate();
    return spec;
}

void AlgebraSpec::validate() const {
    auto in = [](int x, int lo, int hi) { return x >= lo && x <= hi; };
    bool ok = true;
    switch (family) {
        case Family::gl: ok = in(n, 1, 4) && in(m, 1, 4); break;
        case Family::sl: ok = in(n, 1, 4) && in(m, 1, 4) && !(n == 1 && m == 1); break;
        case Family::psl: ok = n == m && in(n, 2, 4); break;
        case Family::ospB: ok = in(m, 0, 4) && in(n, 1, 4); break;
        case Family::ospD: ok = in(m, 1, 4) && in(n, 1, 4); break;
        case Family::osp_alpha: ok = sgn(alpha) != 0 && alpha != -1; break;
        case Family::ag2:
        case Family::ab3: break;
        case Family::pe: ok = in(n, 2, 4); break;
        case Family::spe: ok = in(n, 3, 4); break;
        case Family::vect: ok = in(n, 2, 4); break;
        case Family::svect: ok = in(n, 3, 4); break;
        case Family::svect_tilde: ok = n == 4; break;
    }
    if (!ok) throw CatalogError("unsupported rank for " + name());
}

std::string AlgebraSpec::name() const {
    auto pair = [](int a, int b) { return "(" + std::to_string(a) + "|" + std::to_string(b) + ")"; };
    switch (family) {
        case Family::gl: return "gl" + pair(n, m);
        case Family::sl: return "sl" + pair(n, m);
        case Family::psl: return "psl" + pair(n, m);
        case Family::ospB: return "osp" + pair(2 * m + 1, 2 * n);
        case Family::ospD: return "osp" + pair(2 * m, 2 * n);
        case Family::osp_alpha: return "osp_alpha(4|2,alpha=" + alpha.get_str() + ")";
        case Family::ag2: return "ag2";
        case Family::ab3: return "ab3";
        case Family::pe: return "pe(" + std::to_string(n) + ")";
        case Family::spe: return "spe(" + std::to_string(n) + ")";
        case Family::vect: return "vect" + pair(0, n);
        case Family::svect: return "svect" + pair(0, n);
        case Family::svect_tilde: return "svect~" + pair(0, n);
    }
    return "?";
}

IntMatrix IntMatrix::identity(std::size_t size) {
    IntMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n != o.n) throw UsageError("matrix size mismatch");
    IntMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

namespace {

struct OddEntry {
    LinearForm w;
    std::vector<QVector> dirs;
};

// Family data over the full coordinates, before relation elimination.
struct Raw {
    std::vector<std::pair<std::string, Block>> coords;
    std::vector<LinearForm> relations;
    std::vector<LinearForm> even;
    std::vector<OddEntry> odd;
    QVector h0;
    std::vector<std::vector<LinearForm>> weyl;
    std::vector<QVector> translations;
    std::size_t order = 1;

    std::size_t size() const { return coords.size(); }
    LinearForm zero() const { return LinearForm(size()); }
    LinearForm unit(std::size_t i, const Rational& c = 1) const {
        LinearForm l = zero();
        l[i] = c;
        return l;
    }
    LinearForm form(std::initializer_list<std::pair<std::size_t, Rational>> parts) const {
        LinearForm l = zero();
        for (const auto& [i, c] : parts) l[i] += c;
        return l;
    }
    std::vector<LinearForm> identity_images() const {
        std::vector<LinearForm> im;
        for (std::size_t i = 0; i < size(); ++i) im.push_back(unit(i));
        return im;
    }
    void add_swap(std::size_t i, std::size_t j) {
        auto im = identity_images();
        std::swap(im[i], im[j]);
        weyl.push_back(std::move(im));
    }
    void add_flip(std::initializer_list<std::size_t> idx) {
        auto im = identity_images();
        for (std::size_t i : idx) im[i] = unit(i, -1);
        weyl.push_back(std::move(im));
    }
    void add_odd_pair(const LinearForm& w, const QVector& dir) {
        LinearForm neg = w;
        for (auto& x : neg) x = -x;
        odd.push_back({w, {dir}});
        odd.push_back({neg, {dir}});
    }
};

LinearForm negate(LinearForm l) {
    for (auto& x : l) x = -x;
    return l;
}

LinearForm add(const LinearForm& a, const LinearForm& b) {
    LinearForm r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

void coords_eps_delta(Raw& r, int ne, int nd, const char* eps = "e") {
    for (int i = 1; i <= ne; ++i) r.coords.emplace_back(eps + std::to_string(i), Block::epsilon);
    for (int j = 1; j <= nd; ++j) r.coords.emplace_back("d" + std::to_string(j), Block::delta);
}

Raw raw_gl(const AlgebraSpec& s) {
    Raw r;
    const int n = s.n, m = s.m;
    coords_eps_delta(r, n, m);
    const auto E = [](int i) { return static_cast<std::size_t>(i); };
    const auto D = [n](int j) { return static_cast<std::size_t>(n + j); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) r.even.push_back(r.form({{E(i), 1}, {E(j), -1}}));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) r.even.push_back(r.form({{D(i), 1}, {D(j), -1}}));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            r.add_odd_pair(r.form({{E(i), 1}, {D(j), -1}}), r.form({{E(i), 1}, {D(j), 1}}));
    for (int i = 0; i + 1 < n; ++i) r.add_swap(E(i), E(i + 1));
    for (int j = 0; j + 1 < m; ++j) r.add_swap(D(j), D(j + 1));
    r.order = static_cast<std::size_t>(factorial(n) * factorial(m));

    r.h0 = r.zero();
    for (int i = 0; i < n; ++i) r.h0[E(i)] = 1000 - 37 * i;
    for (int j = 0; j < m; ++j) r.h0[D(j)] = 100 - 13 * j;
    if (s.family != Family::gl) {
        LinearForm rel = r.zero();
        for (int i = 0; i < n; ++i) rel[E(i)] = 1;
        for (int j = 0; j < m; ++j) rel[D(j)] = -1;
        r.relations.push_back(rel);
        Rational excess = evaluate(rel, r.h0);
        if (n != m) {
            // A common shift keeps every epsilon-delta difference.
            Rational c = -excess / (n - m);
            for (auto& x : r.h0) x += c;
        } else {
            r.h0[D(m - 1)] += excess;
        }
    }
    if (s.family == Family::psl) {
        QVector z(r.size(), Rational(1));
        r.translations.push_back(z);
    }
    return r;
}

Raw raw_osp(const AlgebraSpec& s) {
    Raw r;
    const bool odd_orth = s.family == Family::ospB;
    const int m = s.m, n = s.n;
    coords_eps_delta(r, m, n);
    const auto E = [](int i) { return static_cast<std::size_t>(i); };
    const auto D = [m](int j) { return static_cast<std::size_t>(m + j); };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            for (int a : {1, -1})
                for (int b : {1, -1}) r.even.push_back(r.form({{E(i), a}, {E(j), b}}));
        if (odd_orth) {
            r.even.push_back(r.unit(E(i)));
            r.even.push_back(r.unit(E(i), -1));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            for (int a : {1, -1})
                for (int b : {1, -1}) r.even.push_back(r.form({{D(i), a}, {D(j), b}}));
        r.even.push_back(r.unit(D(i), 2));
        r.even.push_back(r.unit(D(i), -2));
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int sg : {1, -1})
                r.add_odd_pair(r.form({{E(i), 1}, {D(j), sg}}), r.form({{E(i), 1}, {D(j), -sg}}));
    if (odd_orth)
        for (int j = 0; j < n; ++j) {
            r.odd.push_back({r.unit(D(j)), {}});
            r.odd.push_back({r.unit(D(j), -1), {}});
        }

    for (int i = 0; i + 1 < m; ++i) r.add_swap(E(i), E(i + 1));
    if (odd_orth && m >= 1) r.add_flip({E(0)});
    if (!odd_orth && m >= 2) {
        auto im = r.identity_images();
        im[E(0)] = r.unit(E(1), -1);
        im[E(1)] = r.unit(E(0), -1);
        r.weyl.push_back(std::move(im));
    }
    for (int j = 0; j + 1 < n; ++j) r.add_swap(D(j), D(j + 1));
    r.add_flip({D(0)});
    long orth = odd_orth ? (1L << m) * factorial(m) : (m >= 1 ? (1L << (m - 1)) * factorial(m) : 1);
    r.order = static_cast<std::size_t>(orth * (1L << n) * factorial(n));

    r.h0 = r.zero();
    for (int i = 0; i < m; ++i) r.h0[E(i)] = 1000 - 37 * i;
    for (int j = 0; j < n; ++j) r.h0[D(j)] = 100 - 13 * j;
    return r;
}

Raw raw_osp_alpha(const AlgebraSpec& s) {
    Raw r;
    coords_eps_delta(r, 3, 0);
    const Rational lambda[3] = {-(1 + s.alpha), Rational(1), s.alpha};
    for (std::size_t i = 0; i < 3; ++i) {
        r.even.push_back(r.unit(i, 2));
        r.even.push_back(r.unit(i, -2));
    }
    for (int t2 : {1, -1})
        for (int t3 : {1, -1}) {
            const int th[3] = {1, t2, t3};
            LinearForm w = r.zero();
            QVector h = r.zero();
            for (std::size_t i = 0; i < 3; ++i) {
                w[i] = th[i];
                h[i] = th[i] * lambda[i];
            }
            r.add_odd_pair(w, h);
        }
    for (std::size_t i = 0; i < 3; ++i) r.add_flip({i});
    r.order = 8;
    r.h0 = {Rational(100), Rational(10), Rational(1)};
    return r;
}

Raw raw_ag2() {
    Raw r;
    coords_eps_delta(r, 3, 1, "l");
    const std::size_t d = 3;
    r.relations.push_back(r.form({{0, 1}, {1, 1}, {2, 1}}));
    for (std::size_t i = 0; i < 3; ++i) {
        r.even.push_back(r.unit(i));
        r.even.push_back(r.unit(i, -1));
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) r.even.push_back(r.form({{i, 1}, {j, -1}}));
    }
    r.even.push_back(r.unit(d, 2));
    r.even.push_back(r.unit(d, -2));
    for (std::size_t k = 0; k < 3; ++k)
        for (int th : {1, -1}) {
            QVector h = r.zero();
            for (std::size_t j = 0; j < 3; ++j) h[j] = j == k ? -2 * th : th;
            h[d] = 2;
            r.add_odd_pair(r.form({{k, th}, {d, 1}}), h);
        }
    r.odd.push_back({r.unit(d), {}});
    r.odd.push_back({r.unit(d, -1), {}});
    r.add_swap(0, 1);
    r.add_swap(1, 2);
    r.add_flip({0, 1, 2});
    r.add_flip({d});
    r.order = 24;
    r.h0 = {Rational(1), Rational(2), Rational(-3), Rational(100)};
    return r;
}

Raw raw_ab3() {
    Raw r;
    coords_eps_delta(r, 3, 1);
    const std::size_t d = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        r.even.push_back(r.unit(i));
        r.even.push_back(r.unit(i, -1));
        for (std::size_t j = i + 1; j < 3; ++j)
            for (int a : {1, -1})
                for (int b : {1, -1}) r.even.push_back(r.form({{i, a}, {j, b}}));
    }
    r.even.push_back(r.unit(d));
    r.even.push_back(r.unit(d, -1));
    const Rational half(1, 2);
    for (int t1 : {1, -1})
        for (int t2 : {1, -1})
            for (int t3 : {1, -1}) {
                const int th[3] = {t1, t2, t3};
                LinearForm w = r.zero();
                QVector h = r.zero();
                for (std::size_t i = 0; i < 3; ++i) {
                    w[i] = half * th[i];
                    h[i] = th[i];
                }
                w[d] = half;
                h[d] = -3;
                r.add_odd_pair(w, h);
            }
    r.add_swap(0, 1);
    r.add_swap(1, 2);
    r.add_flip({0});
    r.add_flip({d});
    r.order = 96;
    r.h0 = {Rational(1), Rational(3), Rational(9), Rational(100)};
    return r;
}

Raw raw_pe(const AlgebraSpec& s) {
    Raw r;
    const int n = s.n;
    coords_eps_delta(r, n, 0);
    const auto E = [](int i) { return static_cast<std::size_t>(i); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) r.even.push_back(r.form({{E(i), 1}, {E(j), -1}}));
    for (int i = 0; i < n; ++i) {
        r.odd.push_back({r.unit(E(i), 2), {}});
        for (int j = i + 1; j < n; ++j)
            r.add_odd_pair(r.form({{E(i), 1}, {E(j), 1}}), r.form({{E(i), 1}, {E(j), -1}}));
    }
    for (int i = 0; i + 1 < n; ++i) r.add_swap(E(i), E(i + 1));
    r.order = static_cast<std::size_t>(factorial(n));
    if (s.family == Family::pe) {
        r.h0 = r.zero();
        Rational p = 1;
        for (int i = n - 1; i >= 0; --i, p *= 10) r.h0[E(i)] = p;
    } else {
        LinearForm rel(r.size(), Rational(1));
        r.relations.push_back(rel);
        r.h0 = n == 3 ? QVector{Rational(7), Rational(2), Rational(-9)}
                      : QVector{Rational(11), Rational(5), Rational(2), Rational(-18)};
    }
    return r;
}

Raw raw_vect(const AlgebraSpec& s) {
    Raw r;
    const int n = s.n;
    const bool special = s.family != Family::vect;
    coords_eps_delta(r, n, 0);
    std::map<std::pair<LinearForm, int>, int> mult;  // (weight, parity) -> multiplicity
    for (int S = 0; S < (1 << n); ++S)
        for (int j = 0; j < n; ++j) {
            LinearForm w = r.unit(static_cast<std::size_t>(j), -1);
            int size = 0;
            for (int a = 0; a < n; ++a)
                if (S >> a & 1) {
                    w[static_cast<std::size_t>(a)] += 1;
                    ++size;
                }
            mult[{w, (size + 1) % 2}] += 1;
        }
    if (special) {
        // Divergence is onto the forms xi_T with |T| < n; drop one field per such weight.
        for (int T = 0; T < (1 << n) - 1; ++T) {
            LinearForm w = r.zero();
            int size = 0;
            for (int a = 0; a < n; ++a)
                if (T >> a & 1) {
                    w[static_cast<std::size_t>(a)] = 1;
                    ++size;
                }
            mult[{w, size % 2}] -= 1;
        }
    }
    auto kernel_dirs = [&](std::size_t i) {
        std::vector<QVector> dirs;
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            if (j != i) others.push_back(j);
        if (!special) {
            for (std::size_t j : others) dirs.push_back(r.unit(j));
        } else {
            for (std::size_t a = 0; a + 1 < others.size(); ++a)
                dirs.push_back(r.form({{others[a], 1}, {others[a + 1], -1}}));
        }
        return dirs;
    };
    for (const auto& [key, count] : mult) {
        const auto& [w, parity] = key;
        if (is_zero(w) || count <= 0) continue;
        if (parity == 0) {
            r.even.push_back(w);
            continue;
        }
        std::vector<QVector> dirs;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            if (w == r.unit(i) || w == r.unit(i, -1)) dirs = kernel_dirs(i);
        for (int c = 0; c < count; ++c) r.odd.push_back({w, dirs});
    }
    for (int i = 0; i + 1 < n; ++i) r.add_swap(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
    r.order = static_cast<std::size_t>(factorial(n));
    r.h0 = r.zero();
    Rational p = 1;
    for (int i = n - 1; i >= 0; --i, p *= 10) r.h0[static_cast<std::size_t>(i)] = p;
    if (special) {
        r.relations.push_back(LinearForm(r.size(), Rational(1)));
        Rational sum = 0;
        for (int i = 0; i + 1 < n; ++i) sum += r.h0[static_cast<std::size_t>(i)];
        r.h0[static_cast<std::size_t>(n - 1)] = -sum;
    }
    return r;
}

bool contains_form(const std::vector<LinearForm>& v, const LinearForm& l) {
    return std::find(v.begin(), v.end(), l) != v.end();
}

}  // namespace

LinearForm RootDatum::reduce(const LinearForm& l) const {
    if (l.size() != full->size()) throw UsageError("linear form is not over the full coordinates");
    LinearForm cur = l;
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& rel = relations[r];
        const std::size_t p = eliminated[r];
        const Rational c = cur[p];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= c * rel[j] / rel[p];
    }
    LinearForm out;
    for (std::size_t k : kept) out.push_back(cur[k]);
    return out;
}

Poly RootDatum::reduce(const Poly& p) const {
    if (!p.vars() || !(*p.vars() == *full)) throw UsageError("polynomial is not over the full coordinates");
    std::vector<Poly> images;
    for (std::size_t i = 0; i < full->size(); ++i) {
        LinearForm u(full->size());
        u[i] = 1;
        images.push_back(Poly::linear(vt, reduce(u)));
    }
    return substitute(p, images);
}

Poly RootDatum::parse(std::string_view text) const { return reduce(parse_poly(text, full)); }

int RootDatum::tilde_index(const LinearForm& alpha) const {
    for (std::size_t i = 0; i < tilde.size(); ++i)
        if (tilde[i].root == alpha) return static_cast<int>(i);
    return -1;
}

RootDatum build(const AlgebraSpec& spec) {
    spec.validate();
    Raw raw;
    switch (spec.family) {
        case Family::gl:
        case Family::sl:
        case Family::psl: raw = raw_gl(spec); break;
        case Family::ospB:
        case Family::ospD: raw = raw_osp(spec); break;
        case Family::osp_alpha: raw = raw_osp_alpha(spec); break;
        case Family::ag2: raw = raw_ag2(); break;
        case Family::ab3: raw = raw_ab3(); break;
        case Family::pe:
        case Family::spe: raw = raw_pe(spec); break;
        case Family::vect:
        case Family::svect:
        case Family::svect_tilde: raw = raw_vect(spec); break;
    }

    RootDatum d;
    d.spec = spec;
    d.full = make_vartable(raw.coords);
    d.relations = raw.relations;
    for (const auto& rel : raw.relations) {
        std::size_t p = rel.size();
        while (p > 0 && sgn(rel[p - 1]) == 0) --p;
        if (p == 0) throw CatalogError("zero relation");
        d.eliminated.push_back(p - 1);
    }
    std::vector<std::pair<std::string, Block>> kept_coords;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (std::find(d.eliminated.begin(), d.eliminated.end(), i) == d.eliminated.end()) {
            d.kept.push_back(i);
            kept_coords.push_back(raw.coords[i]);
        }
    d.vt = make_vartable(kept_coords);

    auto on_plane = [&](const QVector& h) {
        for (const auto& rel : raw.relations)
            if (sgn(evaluate(rel, h)) != 0) return false;
        return true;
    };
    auto reduce_dir = [&](const QVector& h) {
        if (!on_plane(h)) throw CatalogError("Cartan direction leaves the relation hyperplane");
        QVector out;
        for (std::size_t k : d.kept) out.push_back(h[k]);
        return out;
    };
    if (!on_plane(raw.h0)) throw CatalogError("positivity vector violates a relation");

    auto positive = [&](const LinearForm& w_full) {
        int s = sgn(evaluate(w_full, raw.h0));
        if (s == 0) throw CatalogError("positivity vector is not generic for " + spec.name());
        return s > 0;
    };

    for (const auto& w : raw.even) {
        LinearForm red = d.reduce(w);
        if (is_zero(red)) throw CatalogError("even root vanishes after reduction");
        if (!contains_form(d.even_roots, red)) d.even_roots.push_back(red);
        if (positive(w) && !contains_form(d.even_pos, red)) d.even_pos.push_back(red);
    }
    std::vector<std::vector<QVector>> entry_dirs;
    for (const auto& e : raw.odd) {
        LinearForm red = d.reduce(e.w);
        if (is_zero(red)) throw CatalogError("odd root vanishes after reduction");
        d.odd_roots.push_back(red);
        if (positive(e.w) && !contains_form(d.odd_pos, red)) d.odd_pos.push_back(red);
    }
    auto count = [&](const LinearForm& l) {
        return static_cast<int>(std::count(d.odd_roots.begin(), d.odd_roots.end(), l));
    };
    auto is_root = [&](const LinearForm& l) { return count(l) > 0 || contains_form(d.even_roots, l); };
    for (const auto& a : d.odd_pos) {
        LinearForm neg = negate(a);
        LinearForm twice = add(a, a);
        if (!is_root(neg) || is_root(twice)) continue;
        TildeRoot t;
        t.root = a;
        t.nu = std::min(count(a), count(neg));
        for (std::size_t i = 0; i < raw.odd.size(); ++i) {
            if (d.odd_roots[i] != a) continue;
            for (const auto& h : raw.odd[i].dirs) {
                QVector hr = reduce_dir(h);
                std::vector<QVector> trial = t.dirs;
                trial.push_back(hr);
                if (rank(QMatrix::from_rows(trial, hr.size())) == trial.size()) t.dirs.push_back(hr);
            }
        }
        if (t.dirs.empty()) throw CatalogError("no Cartan direction stored for a reduced root");
        d.tilde.push_back(std::move(t));
    }

    d.weyl_gens_full = raw.weyl;
    for (const auto& images : raw.weyl) {
        IntMatrix m(d.dim());
        for (std::size_t i = 0; i < d.kept.size(); ++i) {
            LinearForm col = d.reduce(images[d.kept[i]]);
            for (std::size_t j = 0; j < col.size(); ++j) {
                if (col[j].get_den() != 1) throw CatalogError("non-integral Weyl generator");
                m(j, i) = col[j].get_num().get_si();
            }
        }
        d.weyl_gens.push_back(std::move(m));
    }
    for (const auto& z : raw.translations) d.translations.push_back(reduce_dir(z));
    d.weyl_order = raw.order;
    return d;
}

RootDatum build(std::string_view text) { return build(AlgebraSpec::parse(text)); }

std::vector<LinearForm> tilde_R_plus(const RootDatum& d) {
    std::vector<LinearForm> out;
    for (const auto& t : d.tilde) out.push_back(t.root);
    return out;
}

int nu(const RootDatum& d, const LinearForm& alpha) {
    int i = d.tilde_index(alpha);
    if (i < 0) throw UsageError("root is not in the reduced positive odd set");
    return d.tilde[static_cast<std::size_t>(i)].nu;
}

}  // namespace superinv
