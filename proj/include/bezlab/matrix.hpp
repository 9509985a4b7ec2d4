#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bezlab/ring_ops.hpp"

namespace bezlab {

// Rectangular matrix with all entries in one ring.
class Matrix {
  public:
    Matrix(RingDescriptor ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          entries_(rows * cols, Element::zero(ring_)) {}

    static Matrix identity(const RingDescriptor& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Element::one(ring);
        return m;
    }

    const RingDescriptor& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Element& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Element& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ &&
               entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (ring_ != o.ring_) fail(errc::ring_mismatch, "matrix product ring mismatch");
        if (cols_ != o.rows_) fail(errc::precondition_violated, "matrix product shape mismatch");
        Matrix out(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Element& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
            }
        return out;
    }

    Matrix transpose() const {
        Matrix out(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix scaled(const Element& s) const {
        Matrix out = *this;
        for (auto& e : out.entries_) e = e * s;
        return out;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    std::vector<Element> diagonal() const {
        std::vector<Element> d;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back(at(i, i));
        return d;
    }

    std::vector<Element> entries() const { return entries_; }

  private:
    RingDescriptor ring_;
    std::size_t rows_, cols_;
    std::vector<Element> entries_;
};

// Determinant by expansion over column subsets; exact in any commutative
// ring and fine at desk scale (n <= 8).
inline Element determinant(const Matrix& m) {
    if (!m.is_square()) fail(errc::precondition_violated, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    const auto& ring = m.ring();
    if (n == 0) return Element::one(ring);
    // minor_of[mask] = det of rows (n - popcount(mask) .. n-1) on columns in mask.
    std::vector<std::optional<Element>> memo(std::size_t(1) << n);
    auto rec = [&](auto&& self, std::size_t mask) -> Element {
        if (memo[mask]) return *memo[mask];
        std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t row = n - k;
        Element acc = Element::zero(ring);
        bool positive = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            const Element& pivot = m.at(row, j);
            if (!pivot.is_zero()) {
                Element sub = self(self, mask & ~(std::size_t(1) << j));
                Element term = pivot * sub;
                acc = positive ? acc + term : acc - term;
            }
            positive = !positive; // parity of the column's index within the mask
        }
        memo[mask] = acc;
        return acc;
    };
    memo[0] = Element::one(ring);
    return rec(rec, (std::size_t(1) << n) - 1);
}

inline bool is_invertible(const Matrix& m) { return is_unit(determinant(m)); }

// 2x2 Toeplitz matrix [[a, b], [c, a]]; determinant a^2 - b*c.
struct ToeplitzMatrix {
    Element a, b, c;

    ToeplitzMatrix(Element a_, Element b_, Element c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        a.require_same_ring(b, "ToeplitzMatrix");
        a.require_same_ring(c, "ToeplitzMatrix");
    }

    static ToeplitzMatrix identity(const RingDescriptor& r) {
        return {Element::one(r), Element::zero(r), Element::zero(r)};
    }

    const RingDescriptor& ring() const { return a.ring(); }

    Element det() const { return a * a - b * c; }

    Matrix to_matrix() const {
        Matrix m(ring(), 2, 2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 0) = c;
        m.at(1, 1) = a;
        return m;
    }
};

inline bool is_toeplitz_shaped(const Matrix& m) {
    return m.rows() == 2 && m.cols() == 2 && m.at(0, 0) == m.at(1, 1);
}

// Transforms applied around an input matrix: with L = left[k-1]*...*left[0]
// and R = right[0]*...*right[m-1] (lists stored innermost first), the replay
// identity is L * input * R = result, exactly.
struct ReductionCertificate {
    Matrix input;
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    Matrix result;
    std::vector<bool> toeplitz_flags; // aligned with left then right
    long thm11_cut = 0;               // leading 1x1 blocks split off before the 2xk tail

    Matrix left_total() const {
        Matrix acc = Matrix::identity(input.ring(), input.rows());
        for (const auto& t : left) acc = t * acc;
        return acc;
    }

    Matrix right_total() const {
        Matrix acc = Matrix::identity(input.ring(), input.cols());
        for (const auto& t : right) acc = acc * t;
        return acc;
    }
};

// Replays a certificate: transform shapes and unit determinants, the exact
// replay identity, recorded Toeplitz flags, and e_i | e_{i+1} along the
// diagonal of a diagonal result.
inline bool verify_reduction_certificate(const ReductionCertificate& cert,
                                         std::string* why = nullptr) {
    auto reject = [&](const char* reason) {
        if (why) *why = reason;
        return false;
    };
    if (cert.toeplitz_flags.size() != cert.left.size() + cert.right.size())
        return reject("flag list does not match transform count");
    std::size_t idx = 0;
    for (const auto* list : {&cert.left, &cert.right}) {
        for (const auto& t : *list) {
            if (!t.is_square()) return reject("non-square transform");
            if (!is_unit(determinant(t))) return reject("transform determinant is not a unit");
            if (cert.toeplitz_flags[idx] && !is_toeplitz_shaped(t))
                return reject("transform flagged Toeplitz is not Toeplitz-shaped");
            ++idx;
        }
    }
    if (cert.left_total() * cert.input * cert.right_total() != cert.result)
        return reject("replay identity fails");
    if (cert.result.is_diagonal()) {
        auto diag = cert.result.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (!exact_divide(diag[i + 1], diag[i]))
                return reject("diagonal divisibility e_i | e_{i+1} fails");
        }
    }
    return true;
}

} // namespace bezlab
