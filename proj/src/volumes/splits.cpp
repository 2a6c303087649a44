#include "wpvol/volumes/splits.hpp"

#include "wpvol/errors.hpp"
#include "wpvol/intersection/tau_index.hpp"

#include <functional>
#include <map>

namespace wpvol {

namespace {

// Set partitions of {1..n} as restricted growth strings; blocks come out
// ordered by smallest element.
void for_each_partition(unsigned n, const std::function<void(const std::vector<std::vector<unsigned>>&)>& fn) {
    std::vector<unsigned> a(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
        if (i == n) {
            std::vector<std::vector<unsigned>> out(blocks);
            for (unsigned j = 0; j < n; ++j) out[a[j]].push_back(j + 1);
            fn(out);
            return;
        }
        for (unsigned b = 0; b <= blocks && b < n; ++b) {
            a[i] = b;
            rec(i + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    if (n > 0) rec(0, 0);
}

}  // namespace

std::vector<SplitIndex> enumerate_splits(unsigned g, unsigned g0, unsigned n0) {
    const bool cylinder = (g0 == 0 && n0 == 2);
    if (!(2 * g0 + n0 >= 3 || cylinder)) throw DomainError("enumerate_splits needs 2g0+n0 >= 3 or (g0,n0) = (0,2)");
    if (g <= g0) throw DomainError("enumerate_splits needs g > g0");
    const int budget = 2 * static_cast<int>(g) - 2 * static_cast<int>(g0) - static_cast<int>(n0);
    std::vector<SplitIndex> out;
    for_each_partition(n0, [&](const std::vector<std::vector<unsigned>>& blocks) {
        const unsigned q = static_cast<unsigned>(blocks.size());
        // sum 2 g_i = budget + 2q - n0
        const int twice = budget + 2 * static_cast<int>(q) - static_cast<int>(n0);
        if (twice < 0 || twice % 2) return;
        const unsigned total = static_cast<unsigned>(twice / 2);
        std::vector<unsigned> gen(q, 0);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
            if (i == q) {
                if (left == 0) out.push_back({gen, blocks});
                return;
            }
            const unsigned ni = static_cast<unsigned>(blocks[i].size());
            const unsigned lo = ni >= 3 ? 0 : 1;
            for (unsigned gi = lo; gi <= left; ++gi) {
                gen[i] = gi;
                rec(i + 1, left - gi);
            }
        };
        rec(0, total);
    });
    return out;
}

ExactQuotient phi(unsigned g, unsigned g0, unsigned n0, const std::vector<Rational>& x, MemoStore& store) {
    if (x.size() != n0) throw DomainError("phi expects n0 lengths");
    const auto splits = enumerate_splits(g, g0, n0);
    ExactQuotient q;
    q.den = closed_volume(g, store);
    Rational pre = 1;
    for (const auto& xi : x) {
        if (xi < 0) throw DomainError("boundary lengths must be non-negative");
        pre *= xi;
    }
    if (pre == 0) return q;
    PiPoly inner = (g0 == 0 && n0 == 2) ? PiPoly(1) : volume_at(g0, n0, x, store);
    std::map<std::pair<unsigned, unsigned>, VolumePolynomial> cache;
    PiPoly sum;
    for (const auto& s : splits) {
        PiPoly term(1);
        for (unsigned i = 0; i < s.q(); ++i) {
            const unsigned ni = static_cast<unsigned>(s.blocks[i].size());
            auto key = std::make_pair(s.genera[i], ni);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, volume_polynomial(s.genera[i], ni, store)).first;
            std::vector<Rational> xi;
            for (unsigned label : s.blocks[i]) xi.push_back(x[label - 1]);
            term *= it->second.at(xi);
        }
        sum += term;
    }
    q.num = inner * sum * pre;
    return q;
}

}  // namespace wpvol
