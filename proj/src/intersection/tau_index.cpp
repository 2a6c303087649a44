#include "wpvol/intersection/tau_index.hpp"

#include "wpvol/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wpvol {

TauIndex::TauIndex(unsigned g_, std::vector<unsigned> d_) : g(g_), d(std::move(d_)) {
    if (!is_stable(g, n()))
        throw DomainError("unstable index (g,n) = (" + std::to_string(g) + "," + std::to_string(n()) + ")");
    std::sort(d.begin(), d.end(), std::greater<>());
}

unsigned TauIndex::weight() const { return std::accumulate(d.begin(), d.end(), 0u); }

std::string encode_key(unsigned g, const std::vector<unsigned>& d_sorted) {
    if (g > 255) throw DomainError("genus out of key range");
    std::string k(1 + d_sorted.size(), '\0');
    k[0] = static_cast<char>(g);
    for (std::size_t i = 0; i < d_sorted.size(); ++i) {
        if (d_sorted[i] > 255) throw DomainError("psi exponent out of key range");
        k[i + 1] = static_cast<char>(d_sorted[i]);
    }
    return k;
}

TauIndex decode_key(const std::string& key) {
    if (key.empty()) throw StorageError("empty key");
    TauIndex t;
    t.g = static_cast<unsigned char>(key[0]);
    for (std::size_t i = 1; i < key.size(); ++i) t.d.push_back(static_cast<unsigned char>(key[i]));
    return t;
}

std::string to_string(const TauIndex& t) {
    std::string s = "(" + std::to_string(t.g) + "," + std::to_string(t.n()) + ",[";
    for (std::size_t i = 0; i < t.d.size(); ++i) s += (i ? "," : "") + std::to_string(t.d[i]);
    return s + "])";
}

}  // namespace wpvol
