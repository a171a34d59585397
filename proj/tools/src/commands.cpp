#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "emit.hpp"
#include "nsg/error.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/identities.hpp"
#include "nsg/sylvester.hpp"
#include "nsg_cli/cli.hpp"

namespace nsg::cli {

namespace {

using nlohmann::json;
using detail::format_table;

struct Task {
    std::vector<Family> families;
    std::function<IdentityReport()> run;
};

std::string join(const std::vector<std::uint64_t>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json numerator_json(const SparseIntPolynomial& q) {
    json arr = json::array();
    for (const auto& [deg, c] : q.terms()) {
        if (c.fits_slong_p())
            arr.push_back({deg, c.get_si()});
        else
            arr.push_back({deg, c.get_str()});
    }
    return arr;
}

json kinds_json(const SyzygyTable& t) {
    json arr = json::array();
    for (const auto& k : t.kinds) arr.push_back(k);
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs tasks on up to `parallelism` threads; output order is the task order.
std::vector<IdentityReport> run_tasks(const std::vector<Task>& tasks, unsigned parallelism) {
    std::vector<IdentityReport> out(tasks.size());
    auto run_one = [&](std::size_t i) {
        try {
            out[i] = tasks[i].run();
        } catch (const Error& e) {
            Check c = make_check(tasks[i].families.front(), "error", {}, BigRational(0), BigRational(1));
            c.note = e.what();
            out[i] = {c};
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(parallelism, static_cast<unsigned>(tasks.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

struct Analysis {
    GeneratorTuple t;
    SemigroupProfile p;
    ClassificationFlags flags;
    SparseIntPolynomial q;
    std::optional<std::vector<std::uint64_t>> ci_degrees;
};

Analysis analyze_tuple(const std::vector<std::int64_t>& raw) {
    Analysis a{GeneratorTuple::validate(raw), {}, {}, {}, {}};
    a.p = profile(a.t);
    a.q = hilbert_numerator(a.t, a.p);
    a.flags = classify_semigroup(a.t, a.p);
    if (a.flags.complete_intersection) a.ci_degrees = factor_complete_intersection(a.q, a.t.size());
    return a;
}

CommandResult cmd_analyze(const RunConfig& cfg) {
    const Analysis a = analyze_tuple(cfg.generators);
    const auto extraction = extract_syzygy_table(a.q, a.t, a.flags);
    const auto& f = a.flags;

    json cls = {
        {"symmetric", f.symmetric},
        {"pseudosymmetric", f.pseudosymmetric},
        {"complete_intersection", f.complete_intersection},
        {"telescopic", f.telescopic},
        {"telescopic_decided", f.telescopic_decided},
        {"telescopic_ordering", f.telescopic_ordering ? json(*f.telescopic_ordering) : json(nullptr)},
        {"med", f.med},
        {"almost_symmetric_med", f.almost_symmetric_med},
    };
    if (f.almost_symmetric_med) cls["med_pair_sum"] = f.med_pair_sum;
    if (a.ci_degrees) cls["complete_intersection_degrees"] = *a.ci_degrees;

    json syz;
    if (extraction.ambiguous()) {
        syz = {{"status", "ambiguous"}, {"reason", extraction.ambiguity}};
    } else {
        syz = {{"status", "resolved"}, {"kinds", kinds_json(*extraction.table)}, {"betti", extraction.table->betti()}};
    }

    if (cfg.output == OutputFormat::Json) {
        json j = {
            {"command", "analyze"},
            {"generators", a.t.generators()},
            {"embedding_dimension", a.t.size()},
            {"sigma1", a.t.sigma(1).get_str()},
            {"product", a.t.product().get_str()},
            {"gaps", a.p.gaps},
            {"frobenius", a.p.frobenius},
            {"genus", a.p.genus},
            {"conductor", a.p.conductor},
            {"apery", a.t.apery_table()},
            {"classification", cls},
            {"numerator", numerator_json(a.q)},
            {"numerator_degree", a.q.degree()},
            {"syzygy", syz},
        };
        return {kExitPass, j.dump() + "\n"};
    }

    std::vector<std::vector<std::string>> rows = {
        {"generators", a.t.to_string()},
        {"embedding dimension", std::to_string(a.t.size())},
        {"sigma_1", a.t.sigma(1).get_str()},
        {"product", a.t.product().get_str()},
        {"frobenius", std::to_string(a.p.frobenius)},
        {"genus", std::to_string(a.p.genus)},
        {"conductor", std::to_string(a.p.conductor)},
        {"gaps", a.p.gaps.size() <= 40 ? join(a.p.gaps) : join({a.p.gaps.begin(), a.p.gaps.begin() + 40}) + ",..."},
        {"apery set (mod d_1)", join(a.t.apery_table())},
        {"symmetric", yes_no(f.symmetric)},
        {"pseudosymmetric", yes_no(f.pseudosymmetric)},
        {"complete intersection",
         yes_no(f.complete_intersection) + (a.ci_degrees ? " (e = " + join(*a.ci_degrees) + ")" : "")},
        {"telescopic", f.telescopic_decided
                           ? yes_no(f.telescopic) + (f.telescopic_ordering ? " (" + join(*f.telescopic_ordering) + ")" : "")
                           : "undecided"},
        {"maximal embedding dimension", yes_no(f.med)},
        {"almost symmetric MED",
         yes_no(f.almost_symmetric_med) + (f.almost_symmetric_med ? " (pair sum " + std::to_string(f.med_pair_sum) + ")" : "")},
        {"numerator degree", std::to_string(a.q.degree())},
        {"numerator", a.q.to_string()},
    };
    if (extraction.ambiguous()) {
        rows.push_back({"syzygy kinds", "ambiguous: " + extraction.ambiguity});
    } else {
        const auto& kinds = extraction.table->kinds;
        for (std::size_t i = 0; i < kinds.size(); ++i)
            rows.push_back({"kind " + std::to_string(i + 1), join(kinds[i], " ")});
    }
    return {kExitPass, format_table(rows)};
}

CommandResult cmd_verify(const RunConfig& cfg) {
    const Analysis a = analyze_tuple(cfg.generators);
    const GeneratorTuple& t = a.t;
    const std::size_t m = t.size();

    std::optional<SyzygyTable> table;
    bool table_supplied = false;
    if (cfg.syzygy_table_path) {
        table = parse_syzygy_table(read_file(*cfg.syzygy_table_path), t);
        validate_syzygy_table(*table, a.q, t, a.flags.symmetric);
        table_supplied = true;
    }

    auto wanted = [&](Family f) { return !cfg.families || cfg.families->count(f) > 0; };
    std::vector<Task> tasks;
    auto add = [&](std::vector<Family> fams, std::function<IdentityReport()> fn) {
        for (auto f : fams)
            if (wanted(f)) {
                tasks.push_back({std::move(fams), std::move(fn)});
                return;
            }
    };

    add({Family::Theorem1}, [&] { return theorem1_verify(a.q, t); });
    for (std::uint64_t mod : wave_moduli(t))
        add({Family::Theorem2}, [&, mod] { return theorem2_verify(a.q, t, std::vector<std::uint64_t>{mod}); });
    add({Family::Corollary1}, [&] { return corollary1_verify(a.q, t); });

    if (a.ci_degrees) {
        const auto degrees = *a.ci_degrees;
        add({Family::CI}, [&t, degrees] { return ci_identity_suite(degrees, t); });
        for (unsigned k = 1; k <= degrees.size(); ++k) {
            add({Family::Appendix}, [degrees, k] {
                std::uint64_t total = 0;
                for (auto e : degrees) total += e;
                const bool small = power(to_big(total), k) <= to_big(kAppendixEnumerationLimit);
                return appendix_report(degrees, k, small);
            });
        }
    }
    if (a.flags.telescopic && a.flags.telescopic_ordering) {
        const auto ord = *a.flags.telescopic_ordering;
        add({Family::Telescopic}, [&t, ord] { return telescopic_suite(ord, t); });
    } else if (!a.flags.telescopic_decided) {
        add({Family::Telescopic},
            [] { return IdentityReport{make_skipped(Family::Telescopic, "ordering_search", "too many generators to search")}; });
    }
    if (a.flags.symmetric) {
        const Family fam = (m % 2 == 0) ? Family::SymmetricEven : Family::SymmetricOdd;
        std::vector<Family> fams = {fam};
        if (m == 4) fams.push_back(Family::Bresinsky4);
        if (m == 5) fams.push_back(Family::Symmetric5);
        if (!table) table = extract_syzygy_table(a.q, t, a.flags).table;
        if (table) {
            const auto tab = *table;
            add(fams, [&, tab] { return symmetric_identity_suite(a.q, t, a.flags, tab); });
        } else {
            add(fams, [fams] {
                IdentityReport r;
                for (auto f : fams) r.push_back(make_skipped(f, "syzygy_table", "kinds ambiguous and no table supplied"));
                return r;
            });
        }
    }
    if (m == 3) add({Family::M3}, [&] { return m3_suite(t, a.q); });
    if (m == 3 && a.flags.pseudosymmetric) add({Family::Pseudosymmetric}, [&] { return pseudosymmetric_suite(t, a.q); });
    if (a.flags.med) add({Family::MED, Family::AlmostSymmetricMED}, [&] { return med_identity_suite(t, a.q); });

    const std::int64_t sigma1 = t.sigma(1).get_si();
    const SRange range = cfg.s_range.value_or(SRange{-sigma1, sigma1});
    const SylvesterWaves waves(t);
    add({Family::WaveSum}, [&] { return wave_sum_verify(waves, range.lo, range.hi); });
    add({Family::Lemma1}, [&] { return lemma1_report(t); });

    IdentityReport report;
    for (auto& part : run_tasks(tasks, cfg.parallelism))
        for (auto& c : part)
            if (wanted(c.family)) report.push_back(std::move(c));
    sort_report(report);

    std::size_t passed = 0, failed = 0, skipped = 0, identities = 0;
    for (const auto& c : report) {
        if (c.status == CheckStatus::Pass) ++passed;
        if (c.status == CheckStatus::Fail) ++failed;
        if (c.status == CheckStatus::Skipped) ++skipped;
        if ((c.family == Family::Theorem1 || c.family == Family::Theorem2) && c.role == CheckRole::Identity &&
            c.status != CheckStatus::Skipped)
            ++identities;
    }
    const IdentityCount count = identity_count(t);
    const bool count_applies = wanted(Family::Theorem1) && wanted(Family::Theorem2);
    const bool count_ok = !count_applies || to_big(static_cast<std::uint64_t>(identities)) == count.total;
    const int exit_code = (failed == 0 && count_ok) ? kExitPass : kExitViolation;

    if (cfg.output == OutputFormat::Json) {
        if (report.empty()) return {exit_code, emit_report(report, OutputFormat::Json)};
        json j = {
            {"command", "verify"},
            {"generators", t.generators()},
            {"checks", detail::report_array(report)},
            {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
            {"syzygy_table", table_supplied ? "supplied" : (table ? "extracted" : "none")},
        };
        if (count_applies)
            j["identity_count"] = {{"expected", count.total.get_str()}, {"executed", identities}, {"match", count_ok}};
        return {exit_code, j.dump() + "\n"};
    }

    std::string out = "generators " + t.to_string() + "\n";
    out += emit_report(report, OutputFormat::Text);
    if (!report.empty()) {
        out += "passed " + std::to_string(passed) + ", failed " + std::to_string(failed) + ", skipped " +
               std::to_string(skipped) + "\n";
    }
    if (count_applies)
        out += "identity count N = " + count.total.get_str() + ", executed " + std::to_string(identities) +
               (count_ok ? " (match)" : " (MISMATCH)") + "\n";
    return {exit_code, out};
}

CommandResult cmd_partition(const RunConfig& cfg) {
    if (!cfg.s_range) throw Error(ErrorCode::InvalidArgument, "partition needs --s");
    const SRange r = *cfg.s_range;
    if (r.lo > r.hi) throw Error(ErrorCode::InvalidArgument, "empty range");
    if (r.lo < 0 && !cfg.waves_only)
        throw Error(ErrorCode::NegativeArgument, "the denumerant is only defined for s >= 0; use --waves-only");
    const GeneratorTuple t = GeneratorTuple::validate(cfg.generators);
    const SylvesterWaves waves(t);
    std::vector<BigInt> dp;
    if (!cfg.waves_only) dp = denumerant_table(t, static_cast<std::uint64_t>(r.hi));

    bool all_match = true;
    json rows = json::array();
    std::vector<std::vector<std::string>> table;
    {
        std::vector<std::string> head = {"s"};
        if (!cfg.waves_only) head.push_back("W");
        for (auto q : waves.moduli()) head.push_back("W_" + std::to_string(q));
        head.push_back("total");
        if (!cfg.waves_only) head.push_back("match");
        table.push_back(head);
    }
    for (std::int64_t s = r.lo; s <= r.hi; ++s) {
        const auto parts = waves.breakdown(s);
        BigRational total = 0;
        json per = json::array();
        std::vector<std::string> line = {std::to_string(s)};
        if (!cfg.waves_only) line.push_back(dp[static_cast<std::size_t>(s)].get_str());
        for (const auto& [q, v] : parts) {
            total += v;
            per.push_back({q, to_string(v)});
            line.push_back(to_string(v));
        }
        json row = {{"s", s}, {"waves", per}, {"total", to_string(total)}};
        line.push_back(to_string(total));
        if (!cfg.waves_only) {
            const bool match = total == BigRational(dp[static_cast<std::size_t>(s)]);
            all_match = all_match && match;
            row["denumerant"] = dp[static_cast<std::size_t>(s)].get_str();
            row["match"] = match;
            line.push_back(match ? "true" : "false");
        }
        rows.push_back(row);
        table.push_back(line);
    }
    const int code = all_match ? kExitPass : kExitViolation;
    if (cfg.output == OutputFormat::Json) {
        json j = {{"command", "partition"}, {"generators", t.generators()}, {"rows", rows}, {"waves_only", cfg.waves_only}};
        return {code, j.dump() + "\n"};
    }
    return {code, format_table(table)};
}

std::vector<std::string> strings_of(const std::vector<BigRational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::vector<std::string> strings_of(const std::vector<CyclotomicNumber>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(detail::value_string(x));
    return out;
}

std::string case_name(Lemma1Case c) {
    switch (c) {
    case Lemma1Case::Integer: return "integer";
    case Lemma1Case::HalfInteger: return "half_integer";
    case Lemma1Case::Neither: return "neither";
    }
    return "neither";
}

std::string joined(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out;
}

CommandResult cmd_waves(const RunConfig& cfg) {
    const GeneratorTuple t = GeneratorTuple::validate(cfg.generators);
    json list = json::array();
    std::vector<std::vector<std::string>> table = {{"q", "n", "omega", "leading case", "coefficients (highest power first)"}};

    const auto w1 = strings_of(wave1_polynomial(t));
    list.push_back({{"q", 1}, {"omega", t.size()}, {"coefficients", w1}});
    table.push_back({"1", "-", std::to_string(t.size()), "-", joined(w1)});

    for (std::uint64_t q : wave_moduli(t)) {
        if (q == 2) {
            const auto w2 = wave2_polynomial(t);
            const auto L = strings_of(w2.L);
            const auto lem = lemma1_evaluate(t, 2, 1);
            list.push_back({{"q", 2}, {"n", 1}, {"omega", w2.omega}, {"L", L}, {"leading_case", case_name(lem.which)}});
            table.push_back({"2", "1", std::to_string(w2.omega), case_name(lem.which), "L: " + joined(L)});
            continue;
        }
        for (std::uint64_t n = 1; 2 * n < q; ++n) {
            if (std::gcd(n, q) != 1) continue;
            const auto w = waveq_partial(t, q, n);
            const auto lem = lemma1_evaluate(t, q, n);
            const auto L = strings_of(w.L), iM = strings_of(w.iM);
            list.push_back({{"q", q}, {"n", n}, {"omega", w.omega}, {"L", L}, {"iM", iM}, {"leading_case", case_name(lem.which)}});
            table.push_back({std::to_string(q), std::to_string(n), std::to_string(w.omega), case_name(lem.which),
                             "L: " + joined(L) + " | iM: " + joined(iM)});
        }
    }

    json values = json::array();
    std::string values_text;
    if (cfg.s_range) {
        const SylvesterWaves waves(t);
        std::vector<std::vector<std::string>> vt = {{"s"}};
        for (auto q : waves.moduli()) vt[0].push_back("W_" + std::to_string(q));
        vt[0].push_back("total");
        for (std::int64_t s = cfg.s_range->lo; s <= cfg.s_range->hi; ++s) {
            BigRational total = 0;
            json per = json::array();
            std::vector<std::string> line = {std::to_string(s)};
            for (const auto& [q, v] : waves.breakdown(s)) {
                total += v;
                per.push_back({q, to_string(v)});
                line.push_back(to_string(v));
            }
            line.push_back(to_string(total));
            vt.push_back(line);
            values.push_back({{"s", s}, {"waves", per}, {"total", to_string(total)}});
        }
        values_text = "\n" + format_table(vt);
    }

    if (cfg.output == OutputFormat::Json) {
        json j = {{"command", "waves"}, {"generators", t.generators()}, {"moduli", wave_moduli(t)}, {"waves", list}};
        if (cfg.s_range) j["values"] = values;
        return {kExitPass, j.dump() + "\n"};
    }
    return {kExitPass, "generators " + t.to_string() + "\n" + format_table(table) + values_text};
}

CommandResult cmd_count(const RunConfig& cfg) {
    const GeneratorTuple t = GeneratorTuple::validate(cfg.generators);
    const IdentityCount c = identity_count(t);
    if (cfg.output == OutputFormat::Json) {
        json j = {{"command", "count"},
                  {"generators", t.generators()},
                  {"moduli", wave_moduli(t)},
                  {"total", c.total.get_str()},
                  {"from_power_sums", c.from_theorem1},
                  {"from_q2", c.from_q2},
                  {"from_higher", c.from_higher.get_str()}};
        return {kExitPass, j.dump() + "\n"};
    }
    return {kExitPass, format_table({{"generators", t.to_string()},
                                     {"power-sum identities", std::to_string(c.from_theorem1)},
                                     {"q = 2 identities", std::to_string(c.from_q2)},
                                     {"q >= 3 identities", c.from_higher.get_str()},
                                     {"total N", c.total.get_str()}})};
}

} // namespace

CommandResult execute(const RunConfig& cfg) {
    if (cfg.families && cfg.command != Command::Verify)
        throw Error(ErrorCode::InvalidArgument, "--families only applies to verify");
    if (cfg.parallelism == 0) throw Error(ErrorCode::InvalidArgument, "parallelism must be positive");
    switch (cfg.command) {
    case Command::Analyze: return cmd_analyze(cfg);
    case Command::Verify: return cmd_verify(cfg);
    case Command::Partition: return cmd_partition(cfg);
    case Command::Waves: return cmd_waves(cfg);
    case Command::Count: return cmd_count(cfg);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown command");
}

} // namespace nsg::cli
