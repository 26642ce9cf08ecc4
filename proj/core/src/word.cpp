#include "qbundle/word.hpp"

#include <algorithm>

namespace qbundle {

Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

int find_subword(const Word& w, const Word& pattern) {
    if (pattern.empty())
        return 0;
    if (pattern.size() > w.size())
        return -1;
    auto it = std::search(w.begin(), w.end(), pattern.begin(), pattern.end());
    if (it == w.end())
        return -1;
    return static_cast<int>(it - w.begin());
}

}  // namespace qbundle
