#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hgx {

/// A word in the free monoid on the generators of a presentation, stored as
/// generator indices in declaration order.  The empty word is the unit.
using Word = std::vector<int>;

/// Degree-lexicographic order: word length first, then generator precedence
/// (declaration order, earlier generators smaller).  This is both the
/// rewriting termination order and the deterministic term order.
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool deglex_lt(const Word& a, const Word& b) { return DeglexLess{}(a, b); }

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline Word reversed(const Word& a) { return Word(a.rbegin(), a.rend()); }

/// First position at which `pattern` occurs as a contiguous subword, or -1.
inline int find_subword(const Word& w, const Word& pattern, int from = 0) {
    if (pattern.empty() || pattern.size() > w.size()) return -1;
    for (std::size_t p = from; p + pattern.size() <= w.size(); ++p) {
        bool hit = true;
        for (std::size_t k = 0; k < pattern.size(); ++k)
            if (w[p + k] != pattern[k]) {
                hit = false;
                break;
            }
        if (hit) return static_cast<int>(p);
    }
    return -1;
}

} // namespace hgx
