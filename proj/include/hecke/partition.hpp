#ifndef HECKE_PARTITION_HPP
#define HECKE_PARTITION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Exponent vectors and partitions share one fixed-width storage type; the
// ambient variable count n is carried by the owning polynomial.  Slots at and
// beyond n are always zero.
inline constexpr int kMaxVars = 8;
using ExpVec = std::array<int16_t, kMaxVars>;

inline ExpVec exp_zero() { return ExpVec{}; }

inline int exp_degree(const ExpVec& e) {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += e[static_cast<std::size_t>(i)];
    return d;
}

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger first.  This is the canonical term order for
// every serialized polynomial, so map iteration yields canonical output.
struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        const int da = exp_degree(a), db = exp_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Partition of length n: the non-increasing sorted form of an exponent
/// vector.  Used as the index of the monomial-symmetric basis.
struct Partition {
    ExpVec parts{};

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    int16_t operator[](int i) const { return parts[static_cast<std::size_t>(i)]; }
    int degree() const { return exp_degree(parts); }

    static Partition of(std::initializer_list<int> l);
    static Partition sorted_from(const ExpVec& e, int n);
    bool is_sorted(int n) const;

    std::string str(int n) const;  // "2 1 1 0"
};

struct PartitionGrlexDesc {
    bool operator()(const Partition& a, const Partition& b) const {
        return GrlexDesc{}(a.parts, b.parts);
    }
};

// All distinct permutations of the first n entries (the S_n orbit of the
// monomial).  Deterministic order.
std::vector<ExpVec> orbit(const Partition& p, int n);

// Size of the stabilizer of the vector in S_n: the product of factorials of
// the multiplicities of equal entries.
long stab_size(const ExpVec& e, int n);

long orbit_size(const Partition& p, int n);

}  // namespace hecke

#endif
