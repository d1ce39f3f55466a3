#include "hecke/partition.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Partition Partition::of(std::initializer_list<int> l) {
    if (l.size() > static_cast<std::size_t>(kMaxVars)) throw Error("partition too long");
    Partition p;
    int i = 0;
    int prev = 1 << 14;
    for (int v : l) {
        if (v < 0 || v > prev) throw Error("partition parts must be non-increasing and >= 0");
        p.parts[static_cast<std::size_t>(i++)] = static_cast<int16_t>(v);
        prev = v;
    }
    return p;
}

Partition Partition::sorted_from(const ExpVec& e, int n) {
    Partition p;
    p.parts = e;
    std::sort(p.parts.begin(), p.parts.begin() + n, std::greater<>());
    return p;
}

bool Partition::is_sorted(int n) const {
    for (int i = 0; i + 1 < n; ++i)
        if (parts[static_cast<std::size_t>(i)] < parts[static_cast<std::size_t>(i + 1)])
            return false;
    return parts[0] < 0 ? false : std::all_of(parts.begin() + n, parts.end(),
                                              [](int16_t v) { return v == 0; });
}

std::string Partition::str(int n) const {
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        if (i) os << ' ';
        os << parts[static_cast<std::size_t>(i)];
    }
    return os.str();
}

std::vector<ExpVec> orbit(const Partition& p, int n) {
    ExpVec v = p.parts;
    std::sort(v.begin(), v.begin() + n);  // ascending start for next_permutation
    std::vector<ExpVec> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.begin() + n));
    return out;
}

long stab_size(const ExpVec& e, int n) {
    ExpVec v = e;
    std::sort(v.begin(), v.begin() + n);
    long total = 1;
    int run = 1;
    for (int i = 1; i < n; ++i) {
        if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i - 1)]) {
            ++run;
            total *= run;
        } else {
            run = 1;
        }
    }
    return total;
}

long orbit_size(const Partition& p, int n) {
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return fact / stab_size(p.parts, n);
}

}  // namespace hecke
