#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace rickart {

// Dense matrix over a single scalar field. Value type: all operations
// return fresh matrices, equality is structural.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, FieldDescriptor field)
        : rows_(rows), cols_(cols), field_(field),
          entries_(rows * cols, Scalar::zero(field)) {}

    static Matrix identity(std::size_t n, const FieldDescriptor& f) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDescriptor& field() const { return field_; }
    bool isSquare() const { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Scalar>& entries() const { return entries_; }

    bool isZero() const {
        for (const auto& e : entries_)
            if (!e.isZero()) return false;
        return true;
    }

    Matrix star() const {
        Matrix r(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conjugate();
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        checkSameShape(o, "+");
        Matrix r(rows_, cols_, field_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        checkSameShape(o, "-");
        Matrix r(rows_, cols_, field_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_, field_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        checkField(o);
        if (cols_ != o.rows_)
            throw ShapeMismatch("cannot multiply " + shapeStr() + " by " + o.shapeStr());
        Matrix r(rows_, o.cols_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& aik = at(i, k);
                if (aik.isZero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        return r;
    }

    Matrix operator*(const Scalar& s) const {
        Matrix r(rows_, cols_, field_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * s;
        return r;
    }

    bool operator==(const Matrix&) const = default;

    // Lexicographic by shape then entries; canonical ordering for
    // enumeration output and deduplication.
    std::strong_ordering order(const Matrix& o) const {
        if (rows_ != o.rows_) return rows_ <=> o.rows_;
        if (cols_ != o.cols_) return cols_ <=> o.cols_;
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            auto c = entries_[k].order(o.entries_[k]);
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

    bool operator<(const Matrix& o) const { return order(o) == std::strong_ordering::less; }

    std::string shapeStr() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    // Compact one-line form, e.g. [[1,0],[1/2,1/2]]
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += at(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

    void checkSameShape(const Matrix& o, const std::string& op) const {
        checkField(o);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeMismatch("shape mismatch in '" + op + "': " + shapeStr() + " vs " + o.shapeStr());
    }

private:
    void checkField(const Matrix& o) const {
        if (field_ != o.field_)
            throw FieldMismatch("matrix fields differ: " + field_.str() + " vs " + o.field_.str());
    }

    std::size_t rows_, cols_;
    FieldDescriptor field_;
    std::vector<Scalar> entries_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

} // namespace rickart
