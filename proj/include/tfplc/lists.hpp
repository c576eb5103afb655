#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "tfplc/error.hpp"
#include "tfplc/plane_graph.hpp"

namespace tfplc {

using Colour = int;

// A colour list: sorted set of at most four colour ids.
class ColourList {
public:
    ColourList() = default;
    ColourList(std::initializer_list<Colour> cs) {
        for (Colour c : cs) insert(c);
    }
    static ColourList single(Colour c) { return ColourList{c}; }

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    Colour operator[](int i) const { return c_[i]; }
    const Colour* begin() const { return c_.data(); }
    const Colour* end() const { return c_.data() + n_; }
    Colour min() const { return c_[0]; }

    bool contains(Colour c) const {
        for (int i = 0; i < n_; ++i)
            if (c_[i] == c) return true;
        return false;
    }
    void insert(Colour c) {
        if (contains(c)) return;
        if (n_ == 4) fail(ErrorCode::ListSizeOutOfRange, "colour list capacity exceeded");
        c_[n_++] = c;
        std::sort(c_.begin(), c_.begin() + n_);
    }
    void remove(Colour c) {
        for (int i = 0; i < n_; ++i) {
            if (c_[i] == c) {
                for (int j = i + 1; j < n_; ++j) c_[j - 1] = c_[j];
                --n_;
                return;
            }
        }
    }
    ColourList minus(const ColourList& o) const {
        ColourList out;
        for (int i = 0; i < n_; ++i)
            if (!o.contains(c_[i])) out.insert(c_[i]);
        return out;
    }
    ColourList minus(Colour c) const {
        ColourList out = *this;
        out.remove(c);
        return out;
    }
    ColourList union_with(const ColourList& o) const {
        ColourList out = *this;
        for (Colour c : o) out.insert(c);
        return out;
    }
    ColourList intersect(const ColourList& o) const {
        ColourList out;
        for (int i = 0; i < n_; ++i)
            if (o.contains(c_[i])) out.insert(c_[i]);
        return out;
    }
    bool subset_of(const ColourList& o) const {
        for (int i = 0; i < n_; ++i)
            if (!o.contains(c_[i])) return false;
        return true;
    }
    bool operator==(const ColourList& o) const {
        if (n_ != o.n_) return false;
        return std::equal(begin(), end(), o.begin());
    }
    bool operator<(const ColourList& o) const {
        return std::lexicographical_compare(begin(), end(), o.begin(), o.end());
    }

private:
    std::array<Colour, 4> c_{};
    std::uint8_t n_ = 0;
};

// Lists for every vertex of a graph.
class ListAssignment {
public:
    ListAssignment() = default;

    const ColourList& at(VertexId v) const {
        auto it = lists_.find(v);
        if (it == lists_.end()) fail(ErrorCode::ListSizeOutOfRange, "vertex has no list");
        return it->second;
    }
    bool has(VertexId v) const { return lists_.count(v) != 0; }
    void set(VertexId v, ColourList l) { lists_[v] = l; }
    void erase(VertexId v) { lists_.erase(v); }
    int size() const { return static_cast<int>(lists_.size()); }
    const std::map<VertexId, ColourList>& map() const { return lists_; }

    ListAssignment restricted_to(const std::vector<VertexId>& vs) const {
        ListAssignment out;
        for (VertexId v : vs) out.set(v, at(v));
        return out;
    }
    int total_size() const {
        int s = 0;
        for (const auto& [v, l] : lists_) s += l.size();
        return s;
    }
    bool operator==(const ListAssignment& o) const { return lists_ == o.lists_; }

private:
    std::map<VertexId, ColourList> lists_;
};

// A (partial or total) colouring.
using Colouring = std::map<VertexId, Colour>;

using EdgeSet = std::set<std::pair<VertexId, VertexId>>;

inline EdgeSet make_edge_set(const std::vector<std::pair<VertexId, VertexId>>& edges) {
    EdgeSet s;
    for (auto [a, b] : edges) s.insert({std::min(a, b), std::max(a, b)});
    return s;
}

inline bool edge_in(const EdgeSet& s, VertexId a, VertexId b) {
    return s.count({std::min(a, b), std::max(a, b)}) != 0;
}

// Independent properness checker: every vertex coloured from its list and no
// conflict on edges outside `excluded`.
bool is_proper_list_colouring(const PlaneGraph& g, const ListAssignment& lists,
                              const EdgeSet& excluded, const Colouring& colouring);

} // namespace tfplc
