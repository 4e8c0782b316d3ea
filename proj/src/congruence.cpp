#include "gst/congruence.hpp"

#include <algorithm>

namespace gst {

WordSpace::WordSpace(int k, int L, std::int64_t cap) : k_(k), L_(L) {
    if (k < 1 || L < 0) fail("WordSpace: bad parameters");
    offset_.assign(L + 2, 0);
    pow_.assign(L + 1, 1);
    for (int i = 1; i <= L; ++i) {
        pow_[i] = pow_[i - 1] * k;
        if (pow_[i] > cap) throw Error(Error::Precondition, "word space too large; lower the bound");
    }
    for (int i = 0; i <= L; ++i) {
        offset_[i + 1] = offset_[i] + pow_[i];
        if (offset_[i + 1] > cap) throw Error(Error::Precondition, "word space too large; lower the bound");
    }
}

std::int64_t WordSpace::id(const Word& w) const {
    if (static_cast<int>(w.size()) > L_) return -1;
    std::int64_t v = 0;
    for (int a : w) v = v * k_ + a;
    return offset_[w.size()] + v;
}

int WordSpace::len(std::int64_t id) const {
    int l = 0;
    while (offset_[l + 1] <= id) ++l;
    return l;
}

Word WordSpace::word(std::int64_t id) const {
    int l = len(id);
    std::int64_t v = id - offset_[l];
    Word w(l);
    for (int i = l - 1; i >= 0; --i) {
        w[i] = static_cast<int>(v % k_);
        v /= k_;
    }
    return w;
}

std::int64_t WordSpace::right(std::int64_t id, int a) const {
    int l = len(id);
    if (l >= L_) return -1;
    return offset_[l + 1] + (id - offset_[l]) * k_ + a;
}

std::int64_t WordSpace::left(std::int64_t id, int a) const {
    int l = len(id);
    if (l >= L_) return -1;
    return offset_[l + 1] + a * pow_[l] + (id - offset_[l]);
}

std::int64_t WordSpace::concat(std::int64_t x, std::int64_t y) const {
    int lx = len(x), ly = len(y);
    if (lx + ly > L_) return -1;
    return offset_[lx + ly] + (x - offset_[lx]) * pow_[ly] + (y - offset_[ly]);
}

BoundedCongruence::BoundedCongruence(const WordSpace& ws, bool two_sided, int bound)
    : ws_(ws), two_sided_(two_sided), bound_(std::min(bound, ws.max_len())) {
    const auto n = ws.size();
    parent_.resize(n);
    short_.resize(n);
    for (std::int64_t i = 0; i < n; ++i) parent_[i] = short_[i] = i;
    size_.assign(n, 1);
    dead_.assign(n, 0);
    dead_done_.assign(n, 0);
}

std::int64_t BoundedCongruence::find(std::int64_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool BoundedCongruence::better(std::int64_t a, std::int64_t b) const { return a < b; }  // ids are shortlex ordered

void BoundedCongruence::unite(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) return;
    work_.push_back({a, b});
    drain();
}

void BoundedCongruence::mark_dead(std::int64_t x) {
    if (x < 0) return;
    dead_work_.push_back(x);
    drain();
}

void BoundedCongruence::propagate_dead(std::int64_t r) {
    if (dead_done_[r]) return;
    dead_done_[r] = 1;
    std::int64_t s = short_[r];
    if (ws_.len(s) < bound_)
        for (int a = 0; a < ws_.k(); ++a) dead_work_.push_back(ws_.right(s, a));
}

void BoundedCongruence::drain() {
    while (!work_.empty() || !dead_work_.empty()) {
        if (!dead_work_.empty()) {
            std::int64_t x = dead_work_.back();
            dead_work_.pop_back();
            if (x < 0 || ws_.len(x) > bound_) continue;
            std::int64_t r = find(x);
            if (!dead_[r]) {
                dead_[r] = 1;
                changed_ = true;
            }
            propagate_dead(r);
            continue;
        }
        auto [x, y] = work_.back();
        work_.pop_back();
        if (x < 0 || y < 0 || ws_.len(x) > bound_ || ws_.len(y) > bound_) continue;
        std::int64_t rx = find(x), ry = find(y);
        if (rx == ry) continue;
        changed_ = true;
        std::int64_t sx = short_[rx], sy = short_[ry];
        if (ws_.len(sx) < bound_ && ws_.len(sy) < bound_) {
            for (int a = 0; a < ws_.k(); ++a) {
                work_.push_back({ws_.right(sx, a), ws_.right(sy, a)});
                if (two_sided_) work_.push_back({ws_.left(sx, a), ws_.left(sy, a)});
            }
        }
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        short_[rx] = better(sx, sy) ? sx : sy;
        bool d = dead_[rx] || dead_[ry];
        if (d) {
            dead_[rx] = 1;
            dead_done_[rx] = 0;
            propagate_dead(rx);
        }
    }
}

void BoundedCongruence::raise_bound(int b) {
    b = std::min(b, ws_.max_len());
    while (bound_ < b) {
        int l = bound_;
        ++bound_;
        std::int64_t lo = ws_.count_upto(l - 1 < 0 ? 0 : l - 1);
        if (l == 0) lo = 0;
        std::int64_t hi = ws_.count_upto(l);
        for (std::int64_t w = lo; w < hi; ++w) {
            std::int64_t r = find(w);
            if (dead_[r]) {
                for (int a = 0; a < ws_.k(); ++a) dead_work_.push_back(ws_.right(w, a));
            }
            std::int64_t s = short_[r];
            if (s == w) continue;
            for (int a = 0; a < ws_.k(); ++a) {
                work_.push_back({ws_.right(w, a), ws_.right(s, a)});
                if (two_sided_) work_.push_back({ws_.left(w, a), ws_.left(s, a)});
            }
        }
        // classes whose shortest member just became short and are dead
        drain();
        for (std::int64_t w = 0; w < hi; ++w)
            if (find(w) == w && dead_[w]) {
                dead_done_[w] = 0;
                propagate_dead(w);
            }
        drain();
    }
}

bool BoundedCongruence::closed() {
    std::int64_t n = ws_.count_upto(bound_);
    for (std::int64_t w = 0; w < n; ++w)
        if (find(w) == w && !dead_[w] && ws_.len(short_[w]) >= bound_) return false;
    return true;
}

}  // namespace gst
