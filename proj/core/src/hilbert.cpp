#include "nsg/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "nsg/error.hpp"

namespace nsg {

namespace {

std::uint64_t as_u64(const BigInt& v) {
    if (v < 0 || !v.fits_ulong_p()) throw Error(ErrorCode::InstanceTooLarge, "value exceeds 64 bits: " + v.get_str());
    return v.get_ui();
}

// Coefficients of S(z) * prod(1 - z^d) up to `top`; false on int64 overflow.
bool dense_numerator_fast(const GeneratorTuple& t, std::uint64_t top, std::vector<std::int64_t>& c) {
    c.assign(top + 1, 0);
    for (std::uint64_t s = 0; s <= top; ++s) c[s] = t.contains(static_cast<std::int64_t>(s)) ? 1 : 0;
    for (std::uint64_t d : t.generators())
        for (std::uint64_t k = top; k >= d; --k)
            if (__builtin_sub_overflow(c[k], c[k - d], &c[k])) return false;
    return true;
}

std::vector<BigInt> dense_numerator_big(const GeneratorTuple& t, std::uint64_t top) {
    std::vector<BigInt> c(top + 1);
    for (std::uint64_t s = 0; s <= top; ++s) c[s] = t.contains(static_cast<std::int64_t>(s)) ? 1 : 0;
    for (std::uint64_t d : t.generators())
        for (std::uint64_t k = top; k >= d; --k) c[k] -= c[k - d];
    return c;
}

using Multiset = std::map<std::uint64_t, std::uint64_t>;

Multiset to_multiset(const std::vector<std::uint64_t>& v) {
    Multiset m;
    for (auto x : v) ++m[x];
    return m;
}

std::vector<std::uint64_t> to_vector(const Multiset& m) {
    std::vector<std::uint64_t> v;
    for (const auto& [deg, count] : m) v.insert(v.end(), count, deg);
    return v;
}

Multiset reflect(const Multiset& m, std::uint64_t top) {
    Multiset r;
    for (const auto& [deg, count] : m) {
        if (deg > top) throw Error(ErrorCode::InconsistentBetti, "syzygy degree above deg Q");
        r[top - deg] += count;
    }
    return r;
}

} // namespace

SparseIntPolynomial hilbert_numerator(const GeneratorTuple& t, const SemigroupProfile& p) {
    const std::uint64_t deg = static_cast<std::uint64_t>(p.frobenius) + as_u64(t.sigma(1));
    const std::uint64_t top = deg + t.largest();
    SparseIntPolynomial q;
    std::vector<std::int64_t> fast;
    if (dense_numerator_fast(t, top, fast)) {
        for (std::uint64_t k = 0; k <= top; ++k)
            if (fast[k] != 0) q.add_term(k, BigInt(static_cast<long>(fast[k])));
    } else {
        auto big = dense_numerator_big(t, top);
        for (std::uint64_t k = 0; k <= top; ++k) q.add_term(k, big[k]);
    }
    if (q.degree() != static_cast<std::int64_t>(deg))
        throw Error(ErrorCode::InternalInconsistency,
                    "numerator of " + t.to_string() + " has degree " + std::to_string(q.degree()) +
                        ", expected F + sigma_1 = " + std::to_string(deg));
    return q;
}

SparseIntPolynomial hilbert_numerator(const GeneratorTuple& t) { return hilbert_numerator(t, profile(t)); }

bool duality_check(const SparseIntPolynomial& q, std::size_t m) {
    const SparseIntPolynomial mirrored = q.reflected();
    return (m % 2 == 1) ? mirrored == q : mirrored == -q;
}

SparseIntPolynomial ci_numerator(std::span<const std::uint64_t> degrees) {
    SparseIntPolynomial q = SparseIntPolynomial::constant(1);
    for (std::uint64_t e : degrees) q = q * SparseIntPolynomial::one_minus_power(e);
    return q;
}

// The lowest positive-degree term of prod(1 - z^e) is -k z^emin, so the factors peel off uniquely.
std::optional<std::vector<std::uint64_t>> factor_complete_intersection(const SparseIntPolynomial& q, std::size_t m) {
    std::vector<std::uint64_t> degrees;
    SparseIntPolynomial rest = q;
    const SparseIntPolynomial one = SparseIntPolynomial::constant(1);
    while (rest != one) {
        if (degrees.size() + 1 >= m) return std::nullopt;
        auto it = rest.terms().begin();
        if (it == rest.terms().end() || it->first != 0 || it->second != 1) return std::nullopt;
        ++it;
        if (it == rest.terms().end() || it->second >= 0) return std::nullopt;
        const std::uint64_t e = it->first;
        auto div = poly_exact_divide(rest, SparseIntPolynomial::one_minus_power(e));
        if (!div.remainder.is_zero()) return std::nullopt;
        degrees.push_back(e);
        rest = std::move(div.quotient);
    }
    if (degrees.size() + 1 != m) return std::nullopt;
    return degrees;
}

ClassificationFlags classify_semigroup(const GeneratorTuple& t, const SemigroupProfile& p) {
    return classify(t, p, [&p](const GeneratorTuple& tt) {
        return factor_complete_intersection(hilbert_numerator(tt, p), tt.size()).has_value();
    });
}

std::vector<std::uint64_t> telescopic_degrees(std::span<const std::uint64_t> ordering) {
    if (!is_telescopic_ordering(ordering)) throw Error(ErrorCode::NotTelescopic, "ordering is not telescopic");
    std::vector<std::uint64_t> g(ordering.size());
    g[0] = ordering[0];
    for (std::size_t k = 1; k < ordering.size(); ++k) g[k] = std::gcd(g[k - 1], ordering[k]);
    std::vector<std::uint64_t> e;
    for (std::size_t j = 1; j < ordering.size(); ++j) e.push_back(ordering[j] * (g[j - 1] / g[j]));
    return e;
}

std::int64_t pseudosymmetric_frobenius(const GeneratorTuple& t) {
    if (t.size() != 3) throw Error(ErrorCode::NotPseudosymmetric, "closed form needs three generators");
    const BigInt a = to_big(t[0]), b = to_big(t[1]), c = to_big(t[2]);
    const BigInt s1 = a + b + c;
    const BigInt disc = s1 * s1 - 4 * (a * b + b * c + c * a) + 4 * a * b * c;
    auto root = exact_sqrt(disc);
    if (!root) throw Error(ErrorCode::PerfectSquareViolated, "discriminant " + disc.get_str() + " is not a square");
    const BigInt frob = *root - s1;
    return frob.get_si();
}

SparseIntPolynomial pseudosymmetric_numerator(const GeneratorTuple& t, const SemigroupProfile& p) {
    if (t.size() != 3 || !classify(t, p).pseudosymmetric)
        throw Error(ErrorCode::NotPseudosymmetric, t.to_string() + " is not a pseudosymmetric three-generated semigroup");
    const std::int64_t frob = pseudosymmetric_frobenius(t);
    if (frob != p.frobenius)
        throw Error(ErrorCode::InternalInconsistency, "closed-form Frobenius number " + std::to_string(frob) +
                                                          " differs from " + std::to_string(p.frobenius));
    const std::uint64_t half = static_cast<std::uint64_t>(frob / 2);
    const std::uint64_t s1 = t[0] + t[1] + t[2];
    SparseIntPolynomial q = SparseIntPolynomial::constant(1);
    q.add_term(t[0] + t[1] + half, -1);
    q.add_term(t[1] + t[2] + half, -1);
    q.add_term(t[2] + t[0] + half, -1);
    q.add_term(half + s1, 1);
    q.add_term(static_cast<std::uint64_t>(frob) + s1, 1);
    if (q != hilbert_numerator(t, p))
        throw Error(ErrorCode::InternalInconsistency, "pseudosymmetric closed form disagrees with the numerator");
    return q;
}

std::vector<std::uint64_t> SyzygyTable::betti() const {
    std::vector<std::uint64_t> b;
    for (const auto& k : kinds) b.push_back(k.size());
    return b;
}

SparseIntPolynomial SyzygyTable::reassemble() const {
    SparseIntPolynomial q = SparseIntPolynomial::constant(1);
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        const long sign = (i % 2 == 0) ? -1 : 1; // kind i+1
        for (auto deg : kinds[i]) q.add_term(deg, BigInt(sign));
    }
    return q;
}

SyzygyTable med_syzygy_table(const GeneratorTuple& t) {
    const std::size_t m = t.size();
    if (t.multiplicity() != m) throw Error(ErrorCode::NotMED, t.to_string() + " does not have maximal embedding dimension");
    if (m > 24) throw Error(ErrorCode::InstanceTooLarge, "too many generators for subset enumeration");
    const std::size_t tail = m - 1; // d_2 .. d_m
    SyzygyTable table;
    table.provenance = TableProvenance::Constructed;
    table.kinds.assign(m - 1, {});
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << tail); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::uint64_t sum = 0;
        for (std::size_t j = 0; j < tail; ++j)
            if (mask >> j & 1U) sum += t[j + 1];
        // doubled-generator family: one index counted twice on top of the subset
        for (std::size_t j = 0; j < tail; ++j)
            if (mask >> j & 1U) table.kinds[size - 1].push_back(sum + t[j + 1]);
        // plain subset family with multiplicity size - 1
        if (size >= 2 && size - 1 <= m - 2) table.kinds[size - 2].insert(table.kinds[size - 2].end(), size - 1, sum);
    }
    for (auto& k : table.kinds) std::sort(k.begin(), k.end());
    return table;
}

SparseIntPolynomial med_numerator(const GeneratorTuple& t, const SemigroupProfile& p) {
    SyzygyTable table = med_syzygy_table(t);
    if (p.frobenius != static_cast<std::int64_t>(t.largest()) - static_cast<std::int64_t>(t.size()))
        throw Error(ErrorCode::InternalInconsistency, "Frobenius number of a MED semigroup must be d_m - m");
    SparseIntPolynomial q = table.reassemble();
    if (q != hilbert_numerator(t, p))
        throw Error(ErrorCode::InternalInconsistency, "MED families disagree with the numerator of " + t.to_string());
    return q;
}

std::uint64_t first_syzygy_multiplicity(const GeneratorTuple& t, std::uint64_t s) {
    const auto si = static_cast<std::int64_t>(s);
    if (!t.contains(si)) return 0;
    const std::size_t m = t.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::size_t> vertices;
    for (std::size_t i = 0; i < m; ++i)
        if (t.contains(si - static_cast<std::int64_t>(t[i]))) vertices.push_back(i);
    std::size_t components = vertices.size();
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            const auto i = vertices[a], j = vertices[b];
            if (!t.contains(si - static_cast<std::int64_t>(t[i] + t[j]))) continue;
            const auto ri = find(i), rj = find(j);
            if (ri != rj) {
                parent[ri] = rj;
                --components;
            }
        }
    return components == 0 ? 0 : components - 1;
}

SyzygyExtraction extract_syzygy_table(const SparseIntPolynomial& q, const GeneratorTuple& t,
                                      const ClassificationFlags& flags) {
    const std::size_t m = t.size();
    const auto top = static_cast<std::uint64_t>(q.degree());
    std::vector<std::optional<Multiset>> kinds(m); // index 1..m-1

    auto assign = [&](std::size_t i, Multiset value) {
        if (i < 1 || i >= m) return;
        if (kinds[i] && *kinds[i] != value)
            throw Error(ErrorCode::InconsistentBetti, "kind " + std::to_string(i) + " is overdetermined inconsistently");
        kinds[i] = std::move(value);
    };

    Multiset first;
    for (std::uint64_t s = 1; s <= top; ++s)
        if (auto k = first_syzygy_multiplicity(t, s)) first[s] = k;
    assign(1, first);
    if (flags.symmetric) {
        assign(m - 1, Multiset{{top, 1}});
        for (std::size_t i = 1; i < m; ++i)
            if (kinds[i]) assign(m - 1 - i, reflect(*kinds[i], top));
    }

    SparseIntPolynomial residual = q - SparseIntPolynomial::constant(1);
    std::vector<std::size_t> odd_unknown, even_unknown;
    for (std::size_t i = 1; i < m; ++i) {
        if (!kinds[i]) {
            (i % 2 == 1 ? odd_unknown : even_unknown).push_back(i);
            continue;
        }
        const long sign = (i % 2 == 1) ? -1 : 1;
        for (const auto& [deg, count] : *kinds[i]) residual.add_term(deg, BigInt(-sign * static_cast<long>(count)));
    }

    if (odd_unknown.size() > 1 || even_unknown.size() > 1) {
        SyzygyExtraction out;
        out.ambiguity = "kinds of equal sign cannot be separated from the numerator alone";
        return out;
    }
    Multiset positive, negative;
    for (const auto& [deg, c] : residual.terms()) (c > 0 ? positive : negative)[deg] = as_u64(abs(c));
    auto settle = [&](const std::vector<std::size_t>& unknown, Multiset& part, const char* what) {
        if (unknown.empty()) {
            if (!part.empty())
                throw Error(ErrorCode::InconsistentBetti, std::string("unexplained ") + what + " numerator terms");
            return;
        }
        assign(unknown.front(), part);
    };
    settle(odd_unknown, negative, "negative");
    settle(even_unknown, positive, "positive");

    SyzygyTable table;
    table.provenance = TableProvenance::Extracted;
    for (std::size_t i = 1; i < m; ++i) table.kinds.push_back(to_vector(*kinds[i]));
    validate_syzygy_table(table, q, t, flags.symmetric);
    SyzygyExtraction out;
    out.table = std::move(table);
    return out;
}

void validate_syzygy_table(const SyzygyTable& table, const SparseIntPolynomial& q, const GeneratorTuple& t,
                           bool symmetric) {
    const std::size_t m = t.size();
    if (table.kinds.size() != m - 1)
        throw Error(ErrorCode::InvalidTable, "expected " + std::to_string(m - 1) + " kinds, got " +
                                                 std::to_string(table.kinds.size()));
    for (std::size_t i = 0; i < table.kinds.size(); ++i)
        if (table.kinds[i].empty()) throw Error(ErrorCode::InconsistentBetti, "kind " + std::to_string(i + 1) + " is empty");
    if (table.reassemble() != q) throw Error(ErrorCode::InconsistentBetti, "table does not reassemble to the numerator");

    long alternating = 1;
    for (std::size_t i = 0; i < table.kinds.size(); ++i)
        alternating += ((i % 2 == 0) ? -1 : 1) * static_cast<long>(table.kinds[i].size());
    if (alternating != 0) throw Error(ErrorCode::InconsistentBetti, "alternating Betti sum is not zero");

    for (std::size_t i = 0; i + 1 < table.kinds.size(); ++i) {
        const auto& lo = table.kinds[i];
        const auto& hi = table.kinds[i + 1];
        if (!(*std::min_element(hi.begin(), hi.end()) > *std::min_element(lo.begin(), lo.end())) ||
            !(*std::max_element(hi.begin(), hi.end()) > *std::max_element(lo.begin(), lo.end())))
            throw Error(ErrorCode::InconsistentBetti, "degrees of kind " + std::to_string(i + 2) +
                                                          " do not exceed those of kind " + std::to_string(i + 1));
    }

    if (symmetric) {
        const auto top = static_cast<std::uint64_t>(q.degree());
        for (std::size_t i = 1; i < m; ++i) {
            const std::size_t j = m - 1 - i;
            const Multiset mine = to_multiset(table.kinds[i - 1]);
            const Multiset dual = (j == 0) ? Multiset{{top, 1}} : reflect(to_multiset(table.kinds[j - 1]), top);
            if (j == 0) {
                if (mine != Multiset{{top, 1}})
                    throw Error(ErrorCode::InconsistentBetti, "last kind of a symmetric semigroup must be {deg Q}");
            } else if (mine != dual) {
                throw Error(ErrorCode::InconsistentBetti, "kinds " + std::to_string(i) + " and " + std::to_string(j) +
                                                              " are not dual about deg Q");
            }
        }
    }
}

SyzygyTable parse_syzygy_table(const std::string& json_text, const GeneratorTuple& t) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidTable, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc.contains("kinds"))
        throw Error(ErrorCode::InvalidTable, "table needs \"generators\" and \"kinds\"");
    std::vector<std::uint64_t> gens;
    SyzygyTable table;
    table.provenance = TableProvenance::Supplied;
    try {
        gens = doc.at("generators").get<std::vector<std::uint64_t>>();
        table.kinds = doc.at("kinds").get<std::vector<std::vector<std::uint64_t>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidTable, std::string("table entries must be nonnegative integers: ") + e.what());
    }
    std::sort(gens.begin(), gens.end());
    if (gens != t.generators()) throw Error(ErrorCode::InvalidTable, "table generators differ from " + t.to_string());
    for (auto& k : table.kinds) std::sort(k.begin(), k.end());
    return table;
}

std::string syzygy_table_json(const SyzygyTable& table, const GeneratorTuple& t) {
    nlohmann::json doc;
    doc["generators"] = t.generators();
    doc["kinds"] = table.kinds;
    return doc.dump();
}

} // namespace nsg
