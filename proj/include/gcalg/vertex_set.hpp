#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gcalg {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

// Subset of the vertices {0, ..., universe-1} of one graph. Indices follow
// the graph's canonical (lexicographic) vertex order, so member lists are
// canonical as well.
//
// Sets compare by cardinality first, then lexicographically on the sorted
// member list. This is the order used for every set-valued output.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<VertexIndex> members);
    VertexSet(std::size_t universe, const std::vector<VertexIndex>& members);

    static VertexSet full(std::size_t universe);
    // Bit i of `mask` selects vertex i. Requires universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept;

    bool contains(VertexIndex v) const noexcept;
    void insert(VertexIndex v);
    void erase(VertexIndex v);

    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    VertexSet operator|(const VertexSet& other) const;
    VertexSet operator&(const VertexSet& other) const;
    VertexSet operator-(const VertexSet& other) const;
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet complement() const;

    std::vector<VertexIndex> members() const;
    std::uint64_t mask() const; // universe <= 64

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                f(static_cast<VertexIndex>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gcalg
