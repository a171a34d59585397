#include "nsg/report.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace nsg {

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::Theorem1, "Theorem1"},
    {Family::Theorem2, "Theorem2"},
    {Family::Corollary1, "Corollary1"},
    {Family::CI, "CI"},
    {Family::Telescopic, "Telescopic"},
    {Family::SymmetricEven, "SymmetricEven"},
    {Family::SymmetricOdd, "SymmetricOdd"},
    {Family::Bresinsky4, "Bresinsky4"},
    {Family::Symmetric5, "Symmetric5"},
    {Family::M3, "M3"},
    {Family::Pseudosymmetric, "Pseudosymmetric"},
    {Family::MED, "MED"},
    {Family::AlmostSymmetricMED, "AlmostSymmetricMED"},
    {Family::Appendix, "Appendix"},
    {Family::WaveSum, "WaveSum"},
    {Family::Lemma1, "Lemma1"},
};

} // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "Unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
    for (const auto& [fam, n] : kFamilyNames) {
        if (n.size() != name.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < n.size() && same; ++i)
            same = std::tolower(static_cast<unsigned char>(n[i])) == std::tolower(static_cast<unsigned char>(name[i]));
        if (same) return fam;
    }
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> v;
        for (const auto& [fam, name] : kFamilyNames) v.push_back(fam);
        return v;
    }();
    return families;
}

std::string to_string(const ExactValue& v) {
    if (const auto* r = std::get_if<BigRational>(&v)) return to_string(*r);
    return std::get<CyclotomicNumber>(v).to_string();
}

bool exact_equal(const ExactValue& a, const ExactValue& b) {
    const auto* ra = std::get_if<BigRational>(&a);
    const auto* rb = std::get_if<BigRational>(&b);
    if (ra && rb) return *ra == *rb;
    if (!ra && !rb) return std::get<CyclotomicNumber>(a) == std::get<CyclotomicNumber>(b);
    const auto& c = ra ? std::get<CyclotomicNumber>(b) : std::get<CyclotomicNumber>(a);
    const auto& r = ra ? *ra : *rb;
    auto value = is_rational(c);
    return value && *value == r;
}

ExactValue exact_difference(const ExactValue& a, const ExactValue& b) {
    const auto* ra = std::get_if<BigRational>(&a);
    const auto* rb = std::get_if<BigRational>(&b);
    if (ra && rb) return BigRational(*ra - *rb);
    if (!ra && !rb) return std::get<CyclotomicNumber>(a) - std::get<CyclotomicNumber>(b);
    if (ra) {
        const auto& cb = std::get<CyclotomicNumber>(b);
        return CyclotomicNumber(cb.order(), *ra) - cb;
    }
    const auto& ca = std::get<CyclotomicNumber>(a);
    return ca - CyclotomicNumber(ca.order(), *rb);
}

Check make_check(Family family, std::string name, CheckParams params, ExactValue expected, ExactValue actual,
                 CheckRole role) {
    Check c;
    c.family = family;
    c.name = std::move(name);
    c.params = params;
    for (ExactValue* v : {&expected, &actual})
        if (auto* r = std::get_if<BigRational>(v)) r->canonicalize();
    c.status = exact_equal(expected, actual) ? CheckStatus::Pass : CheckStatus::Fail;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.role = role;
    return c;
}

Check make_skipped(Family family, std::string name, std::string reason) {
    Check c;
    c.family = family;
    c.name = std::move(name);
    c.status = CheckStatus::Skipped;
    c.note = std::move(reason);
    return c;
}

void sort_report(IdentityReport& report) {
    auto key = [](const Check& c) {
        auto v = [](const std::optional<std::int64_t>& o) { return o.value_or(INT64_MIN); };
        return std::make_tuple(static_cast<int>(c.family), c.name, v(c.params.q), v(c.params.n), v(c.params.k),
                               v(c.params.r), v(c.params.s));
    };
    std::stable_sort(report.begin(), report.end(), [&](const Check& a, const Check& b) { return key(a) < key(b); });
}

} // namespace nsg
