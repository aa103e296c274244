#pragma once

// Flat vector pool and a reduction index over it.
//
// The index answers "is there a stored g with g conformally below s on the
// considered coordinates?": for every considered coordinate c, g_c is zero or
// has the sign of s_c with |g_c| <= |s_c|. Each stored vector becomes a path
// of (coordinate, value) edges over its nonzero considered entries, so a
// query only walks edges whose value s can absorb and every leaf it reaches
// is a reducer.

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

namespace oa::detail {

class VecPool {
public:
    explicit VecPool(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::span<const std::int32_t> operator[](std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    std::size_t push(std::span<const std::int32_t> v) {
        data_.insert(data_.end(), v.begin(), v.end());
        return size() - 1;
    }
    void clear() { data_.clear(); }

private:
    std::size_t dim_;
    std::vector<std::int32_t> data_;
};

class ReductionTree {
public:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    ReductionTree(const VecPool& pool, std::vector<std::uint16_t> considered)
        : pool_(pool), considered_(std::move(considered)) {
        nodes_.emplace_back();
    }

    const std::vector<std::uint16_t>& considered() const noexcept { return considered_; }

    void insert(std::uint32_t idx) {
        const auto v = pool_[idx];
        std::uint32_t node = 0;
        for (std::uint16_t c : considered_) {
            const std::int32_t x = v[c];
            if (x == 0) continue;
            std::uint32_t next = kNone;
            for (const Edge& e : nodes_[node].edges)
                if (e.coord == c && e.value == x) {
                    next = e.child;
                    break;
                }
            if (next == kNone) {
                next = static_cast<std::uint32_t>(nodes_.size());
                nodes_[node].edges.push_back(Edge{c, x, next});
                nodes_.emplace_back();
            }
            node = next;
        }
        nodes_[node].leaf.push_back(idx);
    }

    /// Some stored index other than `exclude` that reduces s, or kNone.
    std::uint32_t find(std::span<const std::int32_t> s, std::uint32_t exclude = kNone) const {
        thread_local std::vector<std::uint32_t> stack;
        stack.clear();
        stack.push_back(0);
        while (!stack.empty()) {
            const Node& node = nodes_[stack.back()];
            stack.pop_back();
            for (std::uint32_t idx : node.leaf)
                if (idx != exclude) return idx;
            for (const Edge& e : node.edges) {
                const std::int32_t sv = s[e.coord];
                if (e.value > 0 ? (sv >= e.value) : (sv <= e.value)) stack.push_back(e.child);
            }
        }
        return kNone;
    }

private:
    struct Edge {
        std::uint16_t coord;
        std::int32_t value;
        std::uint32_t child;
    };
    struct Node {
        std::vector<Edge> edges;
        std::vector<std::uint32_t> leaf;
    };

    const VecPool& pool_;
    std::vector<std::uint16_t> considered_;
    std::vector<Node> nodes_;
};

}  // namespace oa::detail
