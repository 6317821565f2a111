#pragma once

// Letters of the alphabet [+-n] = {1 < 2 < ... < n < nbar < ... < 1bar}.
// A letter is a nonzero int; the negative value -k encodes the barred
// letter kbar. Comparisons must use the alphabet order, never the raw
// integer order: every unbarred letter precedes every barred letter, and
// among barred letters kbar > jbar exactly when k < j.

#include <cstdlib>
#include <string>
#include <vector>

namespace sptab {

using Letter = int;
using Column = std::vector<Letter>;

inline Letter bar(Letter x) { return -x; }
inline bool is_barred(Letter x) { return x < 0; }

// Rank of x in the alphabet order for bound n: 1..n for unbarred,
// n+1..2n for barred (rank(kbar) = 2n+1-k).
inline int letter_rank(Letter x, int n) { return x > 0 ? x : 2 * n + 1 + x; }

// Order comparison independent of n: unbarred before barred; within each
// class the integer order of the encoding agrees with the alphabet order.
inline bool letter_less(Letter a, Letter b) {
    if ((a < 0) != (b < 0)) return b < 0;
    return a < b;
}
inline bool letter_leq(Letter a, Letter b) { return a == b || letter_less(a, b); }

struct LetterLess {
    bool operator()(Letter a, Letter b) const { return letter_less(a, b); }
};

inline std::string letter_str(Letter x) { return std::to_string(x); }

inline std::string column_str(const Column& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += letter_str(c[i]);
    }
    return s;
}

inline bool column_strictly_increasing(const Column& c) {
    for (size_t i = 1; i < c.size(); ++i)
        if (!letter_less(c[i - 1], c[i])) return false;
    return true;
}

inline bool column_contains(const Column& c, Letter x) {
    for (Letter y : c)
        if (y == x) return true;
    return false;
}

}  // namespace sptab
