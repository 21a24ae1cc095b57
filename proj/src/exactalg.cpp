#include "superinv/exactalg.hpp"

#include "superinv/errors.hpp"

#include <cctype>
#include <utility>

namespace superinv {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num)) throw ParseError("bad rational '" + s + "'", 0);
    if (!valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("bad rational '" + s + "'", slash == std::string::npos ? 0 : slash + 1);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw UsageError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVector QMatrix::row(std::size_t i) const {
    return QVector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void QMatrix::append_row(const QVector& r) {
    if (r.size() != cols_) throw UsageError("row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

bool QMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0) return false;
    return true;
}

QMatrix QMatrix::multiply(const QMatrix& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) r(i, j) += x * o(k, j);
        }
    return r;
}

QVector QMatrix::apply(const QVector& v) const {
    if (v.size() != cols_) throw UsageError("vector length mismatch");
    QVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

RrefResult rref(QMatrix m) {
    RrefResult out;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    Rational f;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && sgn(m(p, c)) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = c; j < C; ++j) std::swap(m(p, j), m(r, j));
        if (m(r, c) != 1) {
            Rational inv = 1 / m(r, c);
            for (std::size_t j = c; j < C; ++j)
                if (sgn(m(r, j)) != 0) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            f = m(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        QVector v(C);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw UsageError("right-hand side length mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
    QVector x(a.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.m(i, a.cols());
    return x;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RrefResult rr = rref(QMatrix::from_rows(vectors, ambient));
    s.basis_ = QMatrix(rr.rank(), ambient);
    for (std::size_t i = 0; i < rr.rank(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) s.basis_(i, j) = rr.m(i, j);
    s.pivots_ = rr.pivots;
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = QMatrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

bool Subspace::contains(const QVector& v) const {
    if (v.size() != ambient_) throw UsageError("ambient dimension mismatch");
    // Reduce v against the rref basis; membership iff the residue vanishes.
    QVector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Rational f = r[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(basis_(i, j)) != 0) r[j] -= f * basis_(i, j);
    }
    for (const auto& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

std::vector<QVector> Subspace::annihilator() const {
    if (dim() == 0) {
        std::vector<QVector> rows;
        for (std::size_t i = 0; i < ambient_; ++i) {
            QVector e(ambient_);
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        return rows;
    }
    return kernel_basis(basis_);
}

Subspace subspace_intersection(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw UsageError("intersection of no subspaces");
    const std::size_t n = spaces.front().ambient();
    QMatrix stacked(0, n);
    for (const auto& s : spaces) {
        if (s.ambient() != n) throw UsageError("ambient dimension mismatch");
        for (auto& row : s.annihilator()) stacked.append_row(row);
    }
    return Subspace::span(n, kernel_basis(stacked));
}

}  // namespace superinv
