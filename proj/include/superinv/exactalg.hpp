#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superinv {

// mpq_class keeps numerator/denominator canonical after every operation
// as long as results come from arithmetic; canonicalize() covers raw input.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVector row(std::size_t i) const;
    void append_row(const QVector& r);
    bool row_is_zero(std::size_t i) const;

    QMatrix multiply(const QMatrix& other) const;
    QVector apply(const QVector& v) const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    QMatrix m;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(QMatrix m);

std::size_t rank(const QMatrix& m);

// Basis of {v : m v = 0}; vector i has a 1 in the i-th free column and 0 in the others.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Some solution of a x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Row space inside Q^ambient, stored as nonzero rref rows.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const QVector& v) const;
    bool contains(const Subspace& other) const;

    // Rows spanning the annihilator {w : <w, v> = 0 for v in this}.
    std::vector<QVector> annihilator() const;

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    std::size_t ambient_ = 0;
    QMatrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_intersection(const std::vector<Subspace>& spaces);

}  // namespace superinv
