#pragma once

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

namespace gcalg {

// Dense square-or-rectangular integer matrix, row-major. All arithmetic is
// exact (int64, no overflow checks: entries here stay tiny).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix zero(std::size_t n) { return IntMatrix(n, n); }
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    bool is_zero() const noexcept;
    std::int64_t trace() const;

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator*(std::int64_t scalar) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    // First (row, col) where the two differ; {rows, cols} if equal.
    std::pair<std::size_t, std::size_t> first_difference(const IntMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

// Sparse square integer matrix as a sorted list of (row, col, value)
// entries with nonzero value.
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        std::int64_t value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t n) : n_(n) {}
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const IntMatrix& m);
    // Duplicate positions are summed; zeros dropped.
    static SparseMatrix from_entries(std::size_t n, std::vector<Entry> entries);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    std::int64_t trace() const;

    void add(std::size_t row, std::size_t col, std::int64_t value);

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& other) const;
    SparseMatrix operator+(const SparseMatrix& other) const;
    SparseMatrix operator-(const SparseMatrix& other) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    void normalize();

    std::size_t n_ = 0;
    std::vector<Entry> entries_;
};

} // namespace gcalg
