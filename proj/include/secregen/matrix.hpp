#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "secregen/field.hpp"

namespace secregen {

/// Dense matrix over a finite field, row-major element labels.
/// Zero-row and zero-column shapes are legal (rank 0, empty products).
class FieldMatrix {
public:
    FieldMatrix(FiniteField field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    FieldMatrix(FiniteField field, std::size_t rows, std::size_t cols,
                std::vector<Elem> data);

    static FieldMatrix identity(const FiniteField& f, std::size_t n);

    const FiniteField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Elem>& data() const { return data_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v);

    FieldMatrix mul(const FieldMatrix& o) const;
    FieldMatrix add(const FieldMatrix& o) const;
    FieldMatrix sub(const FieldMatrix& o) const;
    FieldMatrix transpose() const;

    std::vector<Elem> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Elem>& v);

    /// Columns picked by index, in the given order.
    FieldMatrix select_cols(const std::vector<std::size_t>& idx) const;
    /// Rows picked by index, in the given order.
    FieldMatrix select_rows(const std::vector<std::size_t>& idx) const;

    /// This matrix stacked on top of `below`.
    FieldMatrix vstack(const FieldMatrix& below) const;

    /// Matrix-vector product (vector of length cols).
    std::vector<Elem> apply(const std::vector<Elem>& v) const;

    /// Row-echelon rank by Gaussian elimination with first-nonzero pivoting.
    std::size_t rank() const;

    bool is_zero() const;

    bool operator==(const FieldMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

private:
    FiniteField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

/// Some D with D*M == target, or nullopt when target's row space is not
/// contained in M's. Deterministic: the same inputs always give the same D.
std::optional<FieldMatrix> solve_left(const FieldMatrix& m, const FieldMatrix& target);

/// Vandermonde matrix: entry (i,j) = points[j]^(start_power+i),
/// i = 0..rows-1. Points must be distinct labels.
FieldMatrix vandermonde(const FiniteField& f, const std::vector<Elem>& points,
                        std::size_t rows, std::uint64_t start_power = 0);

/// All size-k subsets of {0,..,n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

} // namespace secregen
