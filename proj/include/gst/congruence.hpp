#pragma once

#include "gst/graph.hpp"

#include <cstdint>
#include <vector>

namespace gst {

// Dense ids for all words of length <= L over k letters; id 0 is the empty word.
class WordSpace {
public:
    WordSpace(int k, int L, std::int64_t cap = 8'000'000);
    int k() const { return k_; }
    int max_len() const { return L_; }
    std::int64_t size() const { return offset_[L_ + 1]; }
    std::int64_t count_upto(int len) const { return offset_[len + 1]; }
    std::int64_t id(const Word& w) const;
    Word word(std::int64_t id) const;
    int len(std::int64_t id) const;
    std::int64_t right(std::int64_t id, int a) const;  // -1 if longer than L
    std::int64_t left(std::int64_t id, int a) const;
    std::int64_t concat(std::int64_t x, std::int64_t y) const;  // -1 if too long

private:
    int k_, L_;
    std::vector<std::int64_t> offset_, pow_;
};

// Union-find over a WordSpace closed under letter extensions within the current bound.
// Each class keeps a shortest member; extensions are only propagated from members shorter than the bound.
class BoundedCongruence {
public:
    BoundedCongruence(const WordSpace& ws, bool two_sided, int bound);

    int bound() const { return bound_; }
    void raise_bound(int b);  // re-establishes closure for words that became short
    std::int64_t find(std::int64_t x);
    void unite(std::int64_t a, std::int64_t b);
    void mark_dead(std::int64_t x);
    bool dead(std::int64_t x) { return dead_[find(x)] != 0; }
    std::int64_t shortest(std::int64_t x) { return short_[find(x)]; }
    bool changed() const { return changed_; }
    void reset_changed() { changed_ = false; }
    // every live class of words up to the bound has a member shorter than the bound
    bool closed();
    const WordSpace& space() const { return ws_; }

private:
    void drain();
    void propagate_dead(std::int64_t root);
    bool better(std::int64_t a, std::int64_t b) const;  // a preferred as representative

    const WordSpace& ws_;
    bool two_sided_;
    int bound_;
    std::vector<std::int64_t> parent_, short_;
    std::vector<int> size_;
    std::vector<char> dead_, dead_done_;
    std::vector<std::pair<std::int64_t, std::int64_t>> work_;
    std::vector<std::int64_t> dead_work_;
    bool changed_ = false;
};

}  // namespace gst
