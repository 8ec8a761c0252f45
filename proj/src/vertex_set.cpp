#include "gcalg/vertex_set.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gcalg {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexIndex> members)
    : VertexSet(universe) {
    for (VertexIndex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<VertexIndex>& members)
    : VertexSet(universe) {
    for (VertexIndex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask: universe exceeds 64");
    VertexSet s(universe);
    if (universe == 0) return s;
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
    return s;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::contains(VertexIndex v) const noexcept {
    if (v >= universe_) return false;
    return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(VertexIndex v) {
    if (v >= universe_) throw std::out_of_range("VertexSet::insert: index outside universe");
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(VertexIndex v) {
    if (v >= universe_) return;
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
    VertexSet r = *this;
    r |= other;
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    VertexSet r = *this;
    r &= other;
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    VertexSet r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~other.words_[w];
    return r;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::vector<VertexIndex> VertexSet::members() const {
    std::vector<VertexIndex> out;
    out.reserve(count());
    for_each([&](VertexIndex v) { out.push_back(v); });
    return out;
}

std::uint64_t VertexSet::mask() const {
    if (universe_ > 64) throw std::invalid_argument("mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    const auto am = a.members();
    const auto bm = b.members();
    if (auto c = std::lexicographical_compare_three_way(am.begin(), am.end(), bm.begin(), bm.end());
        c != 0)
        return c;
    return a.universe_ <=> b.universe_;
}

} // namespace gcalg
