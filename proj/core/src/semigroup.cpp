#include "nsg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "nsg/error.hpp"

namespace nsg {

namespace {

constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

// Shortest representable value in each residue class modulo `modulus`.
std::vector<std::uint64_t> residue_minima(std::span<const std::uint64_t> gens, std::uint64_t modulus) {
    std::vector<std::uint64_t> dist(modulus, kUnreached);
    using Item = std::pair<std::uint64_t, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [value, residue] = queue.top();
        queue.pop();
        if (value != dist[residue]) continue;
        for (std::uint64_t g : gens) {
            const std::uint64_t next = value + g;
            const std::uint64_t r = next % modulus;
            if (next < dist[r]) {
                dist[r] = next;
                queue.emplace(next, r);
            }
        }
    }
    return dist;
}

} // namespace

bool generated_by(std::span<const std::uint64_t> gens, std::uint64_t s) {
    std::vector<char> reach(s + 1, 0);
    reach[0] = 1;
    for (std::uint64_t g : gens) {
        if (g == 0) continue;
        for (std::uint64_t v = g; v <= s; ++v)
            if (reach[v - g]) reach[v] = 1;
    }
    return reach[s] != 0;
}

GeneratorTuple GeneratorTuple::validate(std::span<const std::int64_t> raw) {
    if (raw.empty()) throw Error(ErrorCode::Empty, "no generators given");
    std::vector<std::uint64_t> gens;
    gens.reserve(raw.size());
    for (std::int64_t v : raw) {
        if (v <= 0) throw Error(ErrorCode::NonPositive, "generator " + std::to_string(v) + " is not positive");
        gens.push_back(static_cast<std::uint64_t>(v));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::uint64_t g = 0;
    for (std::uint64_t d : gens) g = std::gcd(g, d);
    if (g != 1) throw Error(ErrorCode::NonCoprime, "gcd of generators is " + std::to_string(g));
    if (gens.size() == 1) throw Error(ErrorCode::TrivialSemigroup, "{1} generates all of N");

    for (std::size_t i = 1; i < gens.size(); ++i) {
        std::vector<std::uint64_t> smaller(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i));
        if (!generated_by(smaller, gens[i])) continue;
        // name a witness
        std::vector<std::uint64_t> uses(gens[i] + 1, 0);
        std::vector<char> reach(gens[i] + 1, 0);
        reach[0] = 1;
        for (std::uint64_t v = 1; v <= gens[i]; ++v)
            for (std::uint64_t s : smaller)
                if (s <= v && reach[v - s]) {
                    reach[v] = 1;
                    uses[v] = s;
                    break;
                }
        std::ostringstream out;
        out << gens[i] << " = ";
        for (std::uint64_t v = gens[i], first = 1; v > 0; v -= uses[v], first = 0) out << (first ? "" : "+") << uses[v];
        throw Error(ErrorCode::NonMinimal, out.str());
    }

    GeneratorTuple t;
    t.gens_ = std::move(gens);
    t.product_ = 1;
    for (std::uint64_t d : t.gens_) t.product_ *= to_big(d);
    t.apery_ = residue_minima(t.gens_, t.gens_.front());
    if (t.gens_.front() < t.gens_.size())
        throw Error(ErrorCode::InternalInconsistency, "multiplicity below embedding dimension");
    return t;
}

BigInt GeneratorTuple::sigma(unsigned k) const {
    BigInt acc = 0;
    for (std::uint64_t d : gens_) acc += power(to_big(d), k);
    return acc;
}

bool GeneratorTuple::contains(std::int64_t s) const {
    if (s < 0) return false;
    const auto v = static_cast<std::uint64_t>(s);
    return v >= apery_[v % gens_.front()];
}

std::string GeneratorTuple::to_string() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < gens_.size(); ++i) out << (i ? "," : "") << gens_[i];
    out << "}";
    return out.str();
}

GeneratorTuple validate_generators(std::span<const std::int64_t> raw) { return GeneratorTuple::validate(raw); }

GeneratorTuple validate_generators(std::initializer_list<std::int64_t> raw) {
    std::vector<std::int64_t> v(raw);
    return GeneratorTuple::validate(v);
}

bool membership(const GeneratorTuple& t, std::int64_t s) { return t.contains(s); }

SemigroupProfile profile(const GeneratorTuple& t) {
    SemigroupProfile p;
    const auto& ap = t.apery_table();
    const std::uint64_t top = *std::max_element(ap.begin(), ap.end());
    p.frobenius = static_cast<std::int64_t>(top) - static_cast<std::int64_t>(t.multiplicity());
    p.conductor = p.frobenius + 1;
    for (std::int64_t s = 1; s <= p.frobenius; ++s)
        if (!t.contains(s)) p.gaps.push_back(static_cast<std::uint64_t>(s));
    p.genus = p.gaps.size();
    return p;
}

std::vector<std::uint64_t> apery_set(const GeneratorTuple& t, std::uint64_t d) {
    const auto& g = t.generators();
    if (std::find(g.begin(), g.end(), d) == g.end())
        throw Error(ErrorCode::NotAGenerator, std::to_string(d) + " is not a generator of " + t.to_string());
    return residue_minima(g, d);
}

bool is_telescopic_ordering(std::span<const std::uint64_t> ordering) {
    if (ordering.size() < 2) return false;
    std::vector<std::uint64_t> g(ordering.size());
    g[0] = ordering[0];
    for (std::size_t k = 1; k < ordering.size(); ++k) g[k] = std::gcd(g[k - 1], ordering[k]);
    if (g.back() != 1) return false;
    for (std::size_t k = 1; k < ordering.size(); ++k) {
        std::vector<std::uint64_t> scaled;
        for (std::size_t i = 0; i < k; ++i) scaled.push_back(ordering[i] / g[k - 1]);
        if (!generated_by(scaled, ordering[k] / g[k])) return false;
    }
    return true;
}

std::optional<std::vector<std::uint64_t>> find_telescopic_ordering(const GeneratorTuple& t) {
    if (t.size() > kMaxTelescopicSearch)
        throw Error(ErrorCode::TooManyGenerators, "telescopic search covers at most " +
                                                      std::to_string(kMaxTelescopicSearch) + " generators");
    std::vector<std::uint64_t> order = t.generators();
    do {
        if (is_telescopic_ordering(order)) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

ClassificationFlags classify(const GeneratorTuple& t, const SemigroupProfile& p, const CompleteIntersectionTest& ci_test) {
    ClassificationFlags f;
    const std::int64_t frob = p.frobenius;

    f.symmetric = true;
    for (std::int64_t s = 0; s <= frob && f.symmetric; ++s)
        if (t.contains(s) == t.contains(frob - s)) f.symmetric = false;

    if (frob > 0 && frob % 2 == 0) {
        // the only gap h with F - h also a gap must be F/2
        bool only_half = true;
        for (std::uint64_t h : p.gaps) {
            const std::int64_t other = frob - static_cast<std::int64_t>(h);
            if (!t.contains(other) && 2 * static_cast<std::int64_t>(h) != frob) {
                only_half = false;
                break;
            }
        }
        f.pseudosymmetric = only_half;
    }

    const std::size_t m = t.size();
    f.med = t.multiplicity() == m;
    if (f.med) {
        const BigInt total = 2 * t.sigma(1);
        bool paired = total % static_cast<unsigned long>(m) == 0;
        for (std::size_t j = 0; paired && j < m; ++j)
            paired = to_big(t[j] + t[m - 1 - j]) * static_cast<unsigned long>(m) == total;
        f.almost_symmetric_med = paired;
        if (paired) f.med_pair_sum = t[0] + t[m - 1];
    }

    if (m <= kMaxTelescopicSearch) {
        f.telescopic_ordering = find_telescopic_ordering(t);
        f.telescopic = f.telescopic_ordering.has_value();
    } else {
        f.telescopic_decided = false;
    }
    f.complete_intersection = ci_test ? ci_test(t) : f.telescopic;
    return f;
}

} // namespace nsg
