#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpvol {

// (g, n, multiset d), d sorted descending.
struct TauIndex {
    unsigned g = 0;
    std::vector<unsigned> d;

    TauIndex() = default;
    // Canonicalizes d; throws DomainError if 2g-2+n < 1.
    TauIndex(unsigned g, std::vector<unsigned> d);

    unsigned n() const { return static_cast<unsigned>(d.size()); }
    unsigned weight() const;  // |d|
    // 3g-3+n
    int dimension() const { return 3 * static_cast<int>(g) - 3 + static_cast<int>(n()); }
    // Power m of pi^2 carried by the value; negative means the value vanishes.
    int pi_degree() const { return dimension() - static_cast<int>(weight()); }

    friend bool operator==(const TauIndex&, const TauIndex&) = default;
};

inline bool is_stable(unsigned g, unsigned n) { return 2 * g + n >= 3; }

// Compact byte key: g followed by d. Entries must be < 256.
std::string encode_key(unsigned g, const std::vector<unsigned>& d_sorted);
TauIndex decode_key(const std::string& key);

std::string to_string(const TauIndex& t);

}  // namespace wpvol
