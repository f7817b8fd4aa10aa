#include "striple/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <thread>

namespace striple {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Frac {
    u64 num, den; // reduced, num >= den >= 1
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
};

u64 isqrt64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square64(u64 n) {
    u64 r = isqrt64(n);
    return r * r == n;
}

// residue tables: n can only be a square if it is a square residue
// modulo 64, 63, 65 and 11 (filters ~99% of non-squares)
struct RejectTables {
    std::array<bool, 64> m64{};
    std::array<bool, 63> m63{};
    std::array<bool, 65> m65{};
    std::array<bool, 11> m11{};
    RejectTables() {
        for (u64 i = 0; i < 64; ++i) m64[(i * i) % 64] = true;
        for (u64 i = 0; i < 63; ++i) m63[(i * i) % 63] = true;
        for (u64 i = 0; i < 65; ++i) m65[(i * i) % 65] = true;
        for (u64 i = 0; i < 11; ++i) m11[(i * i) % 11] = true;
    }
};
const RejectTables kReject;

bool reject_filter(u128 n) {
    return !kReject.m64[static_cast<u64>(n) & 63] || !kReject.m63[static_cast<u64>(n % 63)] ||
           !kReject.m65[static_cast<u64>(n % 65)] || !kReject.m11[static_cast<u64>(n % 11)];
}

// Is (a.num*b.num - a.den*b.den)/(a.den*b.den) a square? The fraction p/q
// (not necessarily reduced) is a square of a rational iff p*q is a perfect
// integer square; the modular reject runs on p*q, the exact test reduces
// first so the square roots stay within 64 bits.
bool product_minus_one_is_square(const Frac& a, const Frac& b, bool fast_reject) {
    u64 p = a.num * b.num - a.den * b.den; // >= 0: all elements >= 1, pair distinct
    u64 q = a.den * b.den;
    if (p == 0) return true;
    if (fast_reject && reject_filter(static_cast<u128>(p) * q)) return false;
    u64 g = std::gcd(p, q);
    return is_square64(p / g) && is_square64(q / g);
}

u64 to_u64_bound(const Integer& h) {
    if (h < 1) throw std::invalid_argument("search: height bound must be >= 1");
    if (!h.fits_slong_p() || h.get_si() > 0x7fffffffL)
        throw std::invalid_argument(
            "search: the native engine accepts height bounds up to 2^31 - 1");
    return static_cast<u64>(h.get_si());
}

std::vector<Frac> singleton_fracs(u64 bound) {
    std::vector<Frac> out;
    out.push_back({1, 1});
    for (u64 p = 2; p * p + 1 <= 2 * bound; ++p) {
        for (u64 q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            u64 num = p * p + q * q, den = 2 * p * q;
            if ((p & 1) && (q & 1)) { num /= 2; den /= 2; } // both odd: common factor 2
            if (num <= bound) out.push_back({num, den});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational to_rational(const Frac& f) {
    return Rational(Integer(static_cast<unsigned long>(f.num)),
                    Integer(static_cast<unsigned long>(f.den)));
}

// Static chunking over the first pair index keeps results independent of the
// number of worker threads: chunk outputs are concatenated in chunk order.
constexpr size_t kChunk = 64;

std::vector<std::pair<size_t, size_t>> scan_pairs(const std::vector<Frac>& singles,
                                                  const SearchConfig& config) {
    size_t n = singles.size();
    size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<std::vector<std::pair<size_t, size_t>>> per_chunk(chunks);
    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};
    int jobs = std::max(1, config.jobs);
    auto worker = [&] {
        for (;;) {
            size_t c = next.fetch_add(1);
            if (c >= chunks) return;
            auto& out = per_chunk[c];
            size_t lo = c * kChunk, hi = std::min(n, lo + kChunk);
            for (size_t i = lo; i < hi; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (product_minus_one_is_square(singles[i], singles[j], config.fast_reject))
                        out.emplace_back(i, j);
            size_t d = done.fetch_add(1) + 1;
            if (config.progress) config.progress(d, chunks);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<std::pair<size_t, size_t>> edges;
    for (auto& v : per_chunk) edges.insert(edges.end(), v.begin(), v.end());
    return edges;
}

} // namespace

std::vector<Rational> enumerate_singletons(const Integer& height_bound) {
    std::vector<Rational> out;
    for (auto& f : singleton_fracs(to_u64_bound(height_bound))) out.push_back(to_rational(f));
    return out;
}

std::vector<StrongPair> find_pairs(const SearchConfig& config) {
    auto singles = singleton_fracs(to_u64_bound(config.height_bound));
    auto edges = scan_pairs(singles, config);
    std::vector<StrongPair> out;
    for (auto& [i, j] : edges) {
        if (config.require_one && singles[i].num != 1) continue;
        out.emplace_back(to_rational(singles[i]), to_rational(singles[j]),
                         Provenance{"search", {{"H", config.height_bound.get_str()}}});
    }
    return out;
}

std::vector<StrongTriple> find_triples(const SearchConfig& config) {
    auto singles = singleton_fracs(to_u64_bound(config.height_bound));
    auto edges = scan_pairs(singles, config);
    // triangles in the pair graph: adjacency is sorted by construction
    std::vector<std::vector<size_t>> adj(singles.size());
    for (auto& [i, j] : edges) adj[i].push_back(j);
    for (auto& v : adj) std::sort(v.begin(), v.end());
    std::vector<StrongTriple> out;
    for (auto& [i, j] : edges) {
        if (config.require_one && singles[i].num != 1) continue;
        const auto &ai = adj[i], &aj = adj[j];
        std::vector<size_t> common;
        std::set_intersection(ai.begin(), ai.end(), aj.begin(), aj.end(),
                              std::back_inserter(common));
        for (size_t k : common) {
            if (k <= j) continue;
            out.emplace_back(
                std::vector<Rational>{to_rational(singles[i]), to_rational(singles[j]),
                                      to_rational(singles[k])},
                Provenance{"search", {{"H", config.height_bound.get_str()}}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> extend_pair(const StrongPair& pair, const Integer& height_bound,
                                  const SearchConfig& config) {
    const auto& el = pair.elements();
    if (el[0] != Rational(1))
        throw std::invalid_argument("extend_pair: the pair must contain the element 1");
    const Rational& b = el[1];
    if (height(b) > Integer(0x7fffffffL))
        throw std::invalid_argument("extend_pair: the native engine needs height(b) < 2^31");
    Frac bf{static_cast<u64>(b.num().get_ui()), static_cast<u64>(b.den().get_ui())};
    auto singles = singleton_fracs(to_u64_bound(height_bound));
    Frac one{1, 1};
    std::vector<Rational> out;
    for (auto& c : singles) {
        if (c == one || c == bf) continue;
        if (!product_minus_one_is_square(one, c, config.fast_reject)) continue;
        if (!product_minus_one_is_square(bf, c, config.fast_reject)) continue;
        out.push_back(to_rational(c));
    }
    return out;
}

} // namespace striple
