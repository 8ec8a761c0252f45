#include "gcalg/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace gcalg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    assert(cols_ == other.rows_);
    IntMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::int64_t a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator*(std::int64_t scalar) const {
    IntMatrix out = *this;
    for (auto& x : out.data_) x *= scalar;
    return out;
}

std::pair<std::size_t, std::size_t> IntMatrix::first_difference(const IntMatrix& other) const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != other(r, c)) return {r, c};
    return {rows_, cols_};
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, 1});
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& dense) {
    assert(dense.rows() == dense.cols());
    SparseMatrix m(dense.rows());
    for (std::size_t r = 0; r < dense.rows(); ++r)
        for (std::size_t c = 0; c < dense.cols(); ++c)
            if (dense(r, c) != 0) m.entries_.push_back({r, c, dense(r, c)});
    return m;
}

SparseMatrix SparseMatrix::from_entries(std::size_t n, std::vector<Entry> entries) {
    SparseMatrix m(n);
    m.entries_ = std::move(entries);
    m.normalize();
    return m;
}

std::int64_t SparseMatrix::trace() const {
    std::int64_t t = 0;
    for (const Entry& e : entries_)
        if (e.row == e.col) t += e.value;
    return t;
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
    entries_.push_back({row, col, value});
    normalize();
}

void SparseMatrix::normalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (const Entry& e : entries_) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
            merged.back().value += e.value;
        else
            merged.push_back(e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Entry& e) { return e.value == 0; }),
                 merged.end());
    entries_ = std::move(merged);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(n_);
    t.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
    t.normalize();
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
    assert(n_ == other.n_);
    SparseMatrix out(n_);
    if (entries_.empty() || other.entries_.empty()) return out;
    // other's entries are sorted by row: index the start of each row.
    std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>> rows;
    for (std::size_t i = 0; i < other.entries_.size();) {
        std::size_t j = i;
        while (j < other.entries_.size() && other.entries_[j].row == other.entries_[i].row) ++j;
        rows.emplace(other.entries_[i].row, std::pair{i, j});
        i = j;
    }
    for (const Entry& a : entries_) {
        auto it = rows.find(a.col);
        if (it == rows.end()) continue;
        for (std::size_t k = it->second.first; k < it->second.second; ++k)
            out.entries_.push_back({a.row, other.entries_[k].col, a.value * other.entries_[k].value});
    }
    out.normalize();
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
    assert(n_ == other.n_);
    SparseMatrix out = *this;
    out.entries_.insert(out.entries_.end(), other.entries_.begin(), other.entries_.end());
    out.normalize();
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
    assert(n_ == other.n_);
    SparseMatrix out = *this;
    for (const Entry& e : other.entries_) out.entries_.push_back({e.row, e.col, -e.value});
    out.normalize();
    return out;
}

} // namespace gcalg
