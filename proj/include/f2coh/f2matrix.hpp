#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace f2coh {

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_(words_for(n), 0) {}
    BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
        std::size_t i = 0;
        for (int b : bits) set(i++, b & 1);
    }

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool operator[](std::size_t i) const { return get(i); }

    BitVector& operator^=(const BitVector& o) {
        if (o.size_ != size_) throw std::invalid_argument("BitVector: size mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
    auto operator<=>(const BitVector& o) const {
        if (size_ != o.size_) return size_ <=> o.size_;
        return words_ <=> o.words_;
    }

    bool is_zero() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool dot(const BitVector& o) const {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    std::span<std::uint64_t> words() { return words_; }
    std::span<const std::uint64_t> words() const { return words_; }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over F2, rows packed into 64-bit words; padding bits stay zero.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}
    F2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        wpr_ = words_for(cols_);
        data_.assign(rows_ * wpr_, 0);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("F2Matrix: ragged initializer");
            std::size_t c = 0;
            for (int b : row) set(r, c++, b & 1);
            ++r;
        }
    }

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }
    static F2Matrix from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
        F2Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const { return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (c & 63);
        auto& w = data_[r * wpr_ + (c >> 6)];
        if (v) w |= m; else w &= ~m;
    }
    void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63); }

    std::uint64_t* row_data(std::size_t r) { return data_.data() + r * wpr_; }
    const std::uint64_t* row_data(std::size_t r) const { return data_.data() + r * wpr_; }

    BitVector row(std::size_t r) const {
        BitVector v(cols_);
        std::copy_n(row_data(r), wpr_, v.words().begin());
        return v;
    }
    void set_row(std::size_t r, const BitVector& v) {
        if (v.size() != cols_) throw std::invalid_argument("F2Matrix::set_row: size mismatch");
        std::copy_n(v.words().begin(), wpr_, row_data(r));
    }
    BitVector column(std::size_t c) const {
        BitVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) if (get(r, c)) v.set(r, true);
        return v;
    }

    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = row_data(dst);
        const std::uint64_t* s = row_data(src);
        for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row_data(a), row_data(a) + wpr_, row_data(b));
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
    }
    bool row_is_zero(std::size_t r) const {
        return std::all_of(row_data(r), row_data(r) + wpr_, [](std::uint64_t w) { return w == 0; });
    }

    F2Matrix operator*(const F2Matrix& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("F2Matrix: dimension mismatch in product");
        F2Matrix c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t* out = c.row_data(i);
            const std::uint64_t* a = row_data(i);
            for (std::size_t w = 0; w < wpr_; ++w) {
                std::uint64_t bits = a[w];
                while (bits) {
                    const std::size_t k = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::uint64_t* src = b.row_data(k);
                    for (std::size_t x = 0; x < c.wpr_; ++x) out[x] ^= src[x];
                }
            }
        }
        return c;
    }
    BitVector operator*(const BitVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("F2Matrix: dimension mismatch in apply");
        BitVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            const std::uint64_t* a = row_data(r);
            for (std::size_t w = 0; w < wpr_; ++w) acc ^= a[w] & v.words()[w];
            if (std::popcount(acc) & 1) out.set(r, true);
        }
        return out;
    }
    F2Matrix& operator+=(const F2Matrix& b) {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("F2Matrix: dimension mismatch in sum");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= b.data_[i];
        return *this;
    }
    friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    F2Matrix transpose() const {
        F2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const std::uint64_t* a = row_data(r);
            for (std::size_t w = 0; w < wpr_; ++w) {
                std::uint64_t bits = a[w];
                while (bits) {
                    t.set(w * 64 + std::countr_zero(bits), r, true);
                    bits &= bits - 1;
                }
            }
        }
        return t;
    }

    std::size_t hash() const {
        std::size_t h = rows_ * 1315423911u + cols_;
        for (auto w : data_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
            s += '\n';
        }
        return s;
    }

    const std::vector<std::uint64_t>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

struct F2MatrixHash {
    std::size_t operator()(const F2Matrix& m) const { return m.hash(); }
};

struct RowEchelon {
    F2Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of row k
};

// Reduced row echelon form: leftmost pivot column first, topmost candidate row wins.
inline RowEchelon rref(F2Matrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

// Forward elimination only; cheaper when just the rank is wanted.
inline std::size_t rank(F2Matrix m) {
    std::size_t r = 0;
    const std::size_t wpr = m.words_per_row();
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t p = r;
        while (p < m.rows() && !(m.row_data(p)[w] & bit)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const std::uint64_t* piv = m.row_data(r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            std::uint64_t* row = m.row_data(i);
            if (row[w] & bit)
                for (std::size_t x = w; x < wpr; ++x) row[x] ^= piv[x];
        }
        ++r;
    }
    return r;
}

// Rows of the result form a basis of {v : A v = 0}, one per free column in increasing order.
inline F2Matrix kernel_basis(const F2Matrix& a) {
    const RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    F2Matrix k(a.cols() - e.rank, a.cols());
    std::size_t row = 0;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        k.set(row, f, true);
        for (std::size_t i = 0; i < e.rank; ++i)
            if (e.reduced.get(i, f)) k.set(row, e.pivots[i], true);
        ++row;
    }
    return k;
}

// Factorises A once so that many right-hand sides can be solved; free variables are set to zero.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const F2Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
        F2Matrix aug(rows_, cols_ + rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) if (a.get(r, c)) aug.set(r, c, true);
            aug.set(r, cols_ + r, true);
        }
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && !aug.get(p, c)) ++p;
            if (p == rows_) continue;
            aug.swap_rows(r, p);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && aug.get(i, c)) aug.xor_row(i, r);
            pivots_.push_back(c);
            ++r;
        }
        rank_ = r;
        transform_ = F2Matrix(rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j)
                if (aug.get(i, cols_ + j)) transform_.set(i, j, true);
    }

    std::size_t rank() const { return rank_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::optional<BitVector> solve(const BitVector& b) const {
        if (b.size() != rows_) throw std::invalid_argument("LinearSolver: right-hand side has wrong size");
        const BitVector y = transform_ * b;
        for (std::size_t k = rank_; k < rows_; ++k)
            if (y.get(k)) return std::nullopt;
        BitVector x(cols_);
        for (std::size_t k = 0; k < rank_; ++k) if (y.get(k)) x.set(pivots_[k], true);
        return x;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, rank_ = 0;
    std::vector<std::size_t> pivots_;
    F2Matrix transform_;
};

// Growing basis of a subspace; each stored row is reduced against the earlier ones.
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<BitVector>& rows() const { return rows_; }

    BitVector reduce(BitVector v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (v.get(pivots_[k])) v ^= rows_[k];
        return v;
    }
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    // Returns true if v enlarged the span.
    bool insert(const BitVector& v) {
        BitVector r = reduce(v);
        if (r.is_zero()) return false;
        std::size_t p = 0;
        while (!r.get(p)) ++p;
        pivots_.push_back(p);
        rows_.push_back(std::move(r));
        return true;
    }

private:
    std::size_t dim_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

inline std::optional<BitVector> solve(const F2Matrix& a, const BitVector& b) { return LinearSolver(a).solve(b); }

}  // namespace f2coh
