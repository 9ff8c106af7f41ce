#include "secregen/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace secregen {

FieldMatrix::FieldMatrix(FiniteField field, std::size_t rows, std::size_t cols,
                         std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw std::invalid_argument("FieldMatrix: data size does not match shape");
    for (Elem v : data_) field_.element(v);
}

FieldMatrix FieldMatrix::identity(const FiniteField& f, std::size_t n) {
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, Elem v) {
    field_.element(v);
    data_[r * cols_ + c] = v;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("FieldMatrix: field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("FieldMatrix: shape mismatch in product");
    FieldMatrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                Elem prod = field_.mul(a, o.at(k, j));
                out.data_[i * o.cols_ + j] = field_.add(out.data_[i * o.cols_ + j], prod);
            }
        }
    return out;
}

FieldMatrix FieldMatrix::add(const FieldMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FieldMatrix: shape mismatch in sum");
    FieldMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
}

FieldMatrix FieldMatrix::sub(const FieldMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FieldMatrix: shape mismatch in difference");
    FieldMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], o.data_[i]);
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.data_[j * rows_ + i] = at(i, j);
    return out;
}

std::vector<Elem> FieldMatrix::row(std::size_t r) const {
    return {data_.begin() + std::ptrdiff_t(r * cols_),
            data_.begin() + std::ptrdiff_t((r + 1) * cols_)};
}

void FieldMatrix::set_row(std::size_t r, const std::vector<Elem>& v) {
    if (v.size() != cols_) throw std::invalid_argument("FieldMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) set(r, j, v[j]);
}

FieldMatrix FieldMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    FieldMatrix out(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw std::out_of_range("FieldMatrix: column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out.data_[i * idx.size() + j] = at(i, idx[j]);
    }
    return out;
}

FieldMatrix FieldMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    FieldMatrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw std::out_of_range("FieldMatrix: row index out of range");
        for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = at(idx[i], j);
    }
    return out;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& below) const {
    if (field_ != below.field_ || cols_ != below.cols_)
        throw std::invalid_argument("FieldMatrix: shape mismatch in vstack");
    FieldMatrix out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              out.data_.begin() + std::ptrdiff_t(data_.size()));
    return out;
}

std::vector<Elem> FieldMatrix::apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("FieldMatrix: vector length mismatch");
    std::vector<Elem> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            Elem a = at(i, j);
            if (a != 0 && v[j] != 0) acc = field_.add(acc, field_.mul(a, v[j]));
        }
        out[i] = acc;
    }
    return out;
}

std::size_t FieldMatrix::rank() const {
    std::vector<Elem> work = data_;
    const FiniteField& f = field_;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && work[sel * cols_ + col] == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(work[sel * cols_ + j], work[pivot_row * cols_ + j]);
        Elem piv_inv = f.inv(work[pivot_row * cols_ + col]);
        for (std::size_t r = pivot_row + 1; r < rows_; ++r) {
            Elem v = work[r * cols_ + col];
            if (v == 0) continue;
            Elem factor = f.mul(v, piv_inv);
            for (std::size_t j = col; j < cols_; ++j) {
                Elem sub = f.mul(factor, work[pivot_row * cols_ + j]);
                work[r * cols_ + j] = f.sub(work[r * cols_ + j], sub);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

bool FieldMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem v) { return v == 0; });
}

std::optional<FieldMatrix> solve_left(const FieldMatrix& m, const FieldMatrix& target) {
    if (m.field() != target.field())
        throw std::invalid_argument("solve_left: field mismatch");
    if (m.cols() != target.cols())
        throw std::invalid_argument("solve_left: column counts must match");
    const FiniteField& f = m.field();
    const std::size_t rm = m.rows(), c = m.cols();

    // reduce A to RREF while tracking E with A = E*M
    FieldMatrix a = m;
    FieldMatrix e = FieldMatrix::identity(f, rm);
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < c && pivot_row < rm; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rm && a.at(sel, col) == 0) ++sel;
        if (sel == rm) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < c; ++j) {
                Elem t = a.at(sel, j); a.set(sel, j, a.at(pivot_row, j)); a.set(pivot_row, j, t);
            }
            for (std::size_t j = 0; j < rm; ++j) {
                Elem t = e.at(sel, j); e.set(sel, j, e.at(pivot_row, j)); e.set(pivot_row, j, t);
            }
        }
        Elem piv_inv = f.inv(a.at(pivot_row, col));
        for (std::size_t j = 0; j < c; ++j) a.set(pivot_row, j, f.mul(a.at(pivot_row, j), piv_inv));
        for (std::size_t j = 0; j < rm; ++j) e.set(pivot_row, j, f.mul(e.at(pivot_row, j), piv_inv));
        for (std::size_t r = 0; r < rm; ++r) {
            if (r == pivot_row) continue;
            Elem v = a.at(r, col);
            if (v == 0) continue;
            for (std::size_t j = 0; j < c; ++j) a.set(r, j, f.sub(a.at(r, j), f.mul(v, a.at(pivot_row, j))));
            for (std::size_t j = 0; j < rm; ++j) e.set(r, j, f.sub(e.at(r, j), f.mul(v, e.at(pivot_row, j))));
        }
        pivots.emplace_back(pivot_row, col);
        ++pivot_row;
    }

    FieldMatrix d(f, target.rows(), rm);
    for (std::size_t tr = 0; tr < target.rows(); ++tr) {
        std::vector<Elem> v = target.row(tr);
        std::vector<Elem> coeff(rm, 0);
        for (auto [pr, pc] : pivots) {
            Elem fct = v[pc]; // pivot entries are normalized to 1
            if (fct == 0) continue;
            coeff[pr] = fct;
            for (std::size_t j = 0; j < c; ++j) v[j] = f.sub(v[j], f.mul(fct, a.at(pr, j)));
        }
        if (std::any_of(v.begin(), v.end(), [](Elem x) { return x != 0; }))
            return std::nullopt;
        for (std::size_t j = 0; j < rm; ++j) {
            Elem acc = 0;
            for (std::size_t r = 0; r < rm; ++r)
                if (coeff[r] != 0) acc = f.add(acc, f.mul(coeff[r], e.at(r, j)));
            d.set(tr, j, acc);
        }
    }
    return d;
}

FieldMatrix vandermonde(const FiniteField& f, const std::vector<Elem>& points,
                        std::size_t rows, std::uint64_t start_power) {
    if (rows < 1) throw std::invalid_argument("vandermonde: rows must be >= 1");
    std::set<Elem> seen(points.begin(), points.end());
    if (seen.size() != points.size())
        throw std::invalid_argument("vandermonde: points must be distinct");
    FieldMatrix out(f, rows, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        Elem v = f.pow(points[j], start_power);
        for (std::size_t i = 0; i < rows; ++i) {
            out.set(i, j, v);
            v = f.mul(v, points[j]);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        std::size_t i = k;
        while (i-- > 0) {
            if (cur[i] != i + n - k) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
    return out;
}

} // namespace secregen
