#include "jsk/multiindex.hpp"

#include <algorithm>
#include <numeric>

#include "jsk/errors.hpp"

namespace jsk {

int MultiIndex::degree() const {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

MultiIndex MultiIndex::plus(int axis, int count) const {
    MultiIndex r = *this;
    r.exp[static_cast<size_t>(axis)] += count;
    return r;
}

MultiIndex MultiIndex::minus(int axis, int count) const {
    MultiIndex r = *this;
    r.exp[static_cast<size_t>(axis)] -= count;
    if (r.exp[static_cast<size_t>(axis)] < 0)
        throw Error("multi-index exponent went negative");
    return r;
}

bool MultiIndex::divides(const MultiIndex& other) const {
    if (exp.size() != other.exp.size()) return false;
    for (size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    MultiIndex r = *this;
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += other.exp[i];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
    MultiIndex r = *this;
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] -= other.exp[i];
    return r;
}

MultiIndex multiindex_lcm(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (size_t i = 0; i < r.exp.size(); ++i)
        r.exp[i] = std::max(r.exp[i], b.exp[i]);
    return r;
}

bool grevlex_less(const MultiIndex& a, const MultiIndex& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = a.size() - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

namespace {

void enumerate(int n, int axis, int remaining, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (axis == n - 1) {
        cur[axis] = remaining;
        out.push_back(cur);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur[axis] = k;
        enumerate(n, axis + 1, remaining - k, cur, out);
    }
    cur[axis] = 0;
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int n, int d) {
    std::vector<MultiIndex> out;
    if (n <= 0 || d < 0) return out;
    MultiIndex cur(n);
    enumerate(n, 0, d, cur, out);
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int d) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= d; ++k) {
        std::vector<MultiIndex> layer = multi_indices_of_degree(n, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace jsk
