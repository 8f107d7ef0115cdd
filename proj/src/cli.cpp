#include "verma_ext/cli.hpp"

#include <bit>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "verma_ext/reflection.hpp"
#include "verma_ext/rpoly.hpp"
#include "verma_ext/vtable.hpp"

namespace verma_ext::cli {

namespace {

using Clock = std::chrono::steady_clock;
using Index = WeylGroup::Index;
using ojson = nlohmann::ordered_json;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Session {
    CoxeterSystem sys;
    WeylGroup group;

    explicit Session(const RunConfig& config)
        : sys(build_system(config.type_descriptor, config.budget)), group(sys, config.budget) {
        for (const auto& subset : config.singular_subsets)
            for (int s : subset) sys.check_index(s);
    }
};

std::filesystem::path rpoly_cache_path(const RunConfig& config, const CoxeterSystem& sys) {
    return config.cache_dir / (sys.type().to_string() + ".rpoly.csv");
}

/// Loads the R cache when present; returns whether it was used.
bool load_rpoly_cache(const RunConfig& config, RTable& table) {
    if (config.cache_dir.empty()) return false;
    const auto path = rpoly_cache_path(config, table.group().system());
    if (!std::filesystem::exists(path)) return false;
    try {
        return table.load(path);
    } catch (const Error& e) {
        std::cerr << "warning: ignoring cache: " << e.what() << "\n";
        return false;
    }
}

void store_rpoly_cache(const RunConfig& config, RTable& table, const std::string& timestamp) {
    if (config.cache_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(config.cache_dir, ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create " + config.cache_dir.string() + ": " + ec.message());
    table.save(rpoly_cache_path(config, table.group().system()), timestamp);
}

std::vector<std::vector<int>> default_subsets(int rank) {
    std::vector<std::vector<int>> out;
    if (rank <= 4) {
        for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
            std::vector<int> subset;
            for (int s = 0; s < rank; ++s)
                if ((mask >> s) & 1u) subset.push_back(s);
            out.push_back(std::move(subset));
        }
    } else {
        std::vector<int> all;
        for (int s = 0; s < rank; ++s) all.push_back(s);
        out.push_back({});
        out.push_back(std::move(all));
    }
    return out;
}

ojson pair_witness(const WeylGroup& group, Index x, Index y) {
    return ojson{{"x", group.word_string(x)}, {"y", group.word_string(y)}};
}

std::string rational_row(const RationalVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i != 0) out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

std::string subspace_text(const RationalSubspace& u) {
    std::string out = "dim=" + std::to_string(u.dim()) + " basis=[";
    for (std::size_t r = 0; r < u.dim(); ++r) {
        if (r != 0) out += ", ";
        out += rational_row(u.basis()[r]);
    }
    return out + "]";
}

// Order of a matrix in GL_n(Z), searched up to `cap`.
int matrix_order(const CoxeterSystem& sys, const GroupElement& g, int cap) {
    const GroupElement id = identity(sys);
    GroupElement power = g;
    for (int k = 1; k <= cap; ++k) {
        if (power == id) return k;
        power = multiply(sys, power, g);
    }
    return -1;
}

// --- suites ---------------------------------------------------------------

SuiteResult suite_theorem(VTable& vtable, RTable& rtable) {
    SuiteResult r;
    r.name = "T";
    const auto& group = vtable.group();
    for (std::size_t xi = 0; xi < group.size(); ++xi)
        for (std::size_t yi = 0; yi < group.size(); ++yi) {
            const auto x = static_cast<Index>(xi);
            const auto y = static_cast<Index>(yi);
            if (!group.leq(y, x)) continue;
            const auto& v = vtable.get(x, y);
            std::int64_t gj = -1;
            std::string error;
            try {
                gj = gj_coefficient(rtable, x, y);
            } catch (const Error& e) {
                error = e.what();
            }
            r.check(gj == static_cast<std::int64_t>(v.dim()), [&] {
                ojson w = pair_witness(group, x, y);
                w["expected"] = gj;
                w["got"] = v.dim();
                w["subspace"] = v.to_json();
                w["r_polynomial"] = rtable.get(y, x).to_string();
                if (!error.empty()) w["error"] = error;
                return w;
            });
        }
    return r;
}

SuiteResult suite_geometric(const WeylGroup& group) {
    SuiteResult r;
    r.name = "G";
    const auto& sys = group.system();
    const int n = sys.rank();
    std::mt19937 rng(20240917u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    auto random_vector = [&] {
        RationalVector v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = Rational(num(rng), den(rng));
        return v;
    };
    const GroupElement id = identity(sys);
    for (int s = 0; s < n; ++s) {
        const GroupElement ss = simple_reflection(sys, s);
        const RationalVector vs = basis_vector(sys, s);
        r.check(multiply(sys, ss, ss) == id, [&] { return ojson{{"check", "s^2 = 1"}, {"s", s + 1}}; });
        r.check(coroot_pairing(sys, s, vs) == 2, [&] {
            return ojson{{"check", "alpha_s(v_s) = 2"}, {"s", s + 1}, {"got", to_string(coroot_pairing(sys, s, vs))}};
        });
        r.check(reflect(sys, s, vs) == -vs, [&] { return ojson{{"check", "s(v_s) = -v_s"}, {"s", s + 1}}; });
        for (int trial = 0; trial < 8; ++trial) {
            const RationalVector v = random_vector();
            const RationalVector sv = reflect(sys, s, v);
            r.check(reflect(sys, s, sv) == v && sv == apply(ss, v), [&] {
                return ojson{{"check", "reflect involution / matrix agreement"}, {"s", s + 1}, {"v", rational_row(v)}};
            });
        }
        for (int t = 0; t < n; ++t) {
            if (t == s) continue;
            const int order = matrix_order(sys, multiply(sys, ss, simple_reflection(sys, t)), 12);
            r.check(order == sys.coxeter_m(s, t), [&] {
                return ojson{{"check", "order of st"}, {"s", s + 1}, {"t", t + 1},
                             {"expected", sys.coxeter_m(s, t)}, {"got", order}};
            });
        }
    }
    std::size_t identities = 0;
    for (const auto& g : group.elements()) identities += (g == id) ? 1 : 0;
    r.check(identities == 1, [&] { return ojson{{"check", "faithful"}, {"identity_matrices", identities}}; });
    return r;
}

SuiteResult suite_bruhat(const WeylGroup& group, int max_length) {
    SuiteResult r;
    r.name = "B";
    const auto& sys = group.system();
    for (std::size_t yi = 0; yi < group.size(); ++yi) {
        const auto y = static_cast<Index>(yi);
        if (group.length(y) > max_length) continue;
        std::vector<char> below(group.size(), 0);
        for (const auto& g : subword_products(sys, group.element(y), max_length)) below[group.index_of(g)] = 1;
        for (std::size_t xi = 0; xi < group.size(); ++xi) {
            const auto x = static_cast<Index>(xi);
            const bool lifted = group.leq(x, y);
            r.check(lifted == (below[xi] != 0), [&] {
                ojson w = pair_witness(group, x, y);
                w["lifting"] = lifted;
                w["subword"] = below[xi] != 0;
                return w;
            });
        }
    }
    return r;
}

SuiteResult suite_rpoly(const WeylGroup& group, RTable& rtable, DescentPolicy policy) {
    SuiteResult r;
    r.name = "R";
    for (std::size_t xi = 0; xi < group.size(); ++xi)
        for (std::size_t yi = 0; yi < group.size(); ++yi) {
            const auto x = static_cast<Index>(xi);
            const auto y = static_cast<Index>(yi);
            const IntPolynomial& p = rtable.get(y, x);
            if (!group.leq(y, x)) {
                r.check(p.is_zero(), [&] {
                    ojson w = pair_witness(group, x, y);
                    w["check"] = "R vanishes off the Bruhat order";
                    w["got"] = p.to_string();
                    return w;
                });
                continue;
            }
            const int gap = group.length(x) - group.length(y);
            const bool shape_ok = p.degree() == gap && p.coeff(0) == (gap % 2 == 0 ? 1 : -1) && p.leading() == 1 &&
                                  (x == y || p.eval(1) == 0);
            std::int64_t gj = -1;
            std::int64_t direct = -2;
            try {
                gj = gj_coefficient(rtable, x, y);
                direct = r_coeff_direct(group, x, y, policy);
            } catch (const Error&) {
            }
            r.check(shape_ok && gj == direct, [&] {
                ojson w = pair_witness(group, x, y);
                w["r_polynomial"] = p.to_string();
                w["gj_coefficient"] = gj;
                w["r_coeff_direct"] = direct;
                return w;
            });
        }
    return r;
}

SuiteResult suite_singular(VTable& vtable, const std::vector<std::vector<int>>& subsets) {
    SuiteResult r;
    r.name = "S";
    const auto& group = vtable.group();
    const int n = group.rank();
    for (const auto& subset : subsets) {
        const std::set<int> distinct(subset.begin(), subset.end());
        const auto expected = static_cast<std::size_t>(n) - distinct.size();
        const auto image = singular_v(vtable, SingularSpec{subset}, group.longest(), group.identity());
        r.check(image.dim() == expected, [&] {
            return ojson{{"subset", format_subset(subset)}, {"expected", expected}, {"got", image.dim()},
                         {"subspace", image.to_json()}};
        });
    }
    return r;
}

SuiteResult suite_membership(VTable& vtable) {
    SuiteResult r;
    r.name = "M";
    const auto& group = vtable.group();
    for (const auto& row : membership_report(vtable)) {
        if (!row.rank2) continue;
        r.check(row.member == row.x_geq_ys, [&] {
            ojson w = pair_witness(group, row.x, row.y);
            w["s"] = row.s + 1;
            w["v_s_member"] = row.member;
            w["x_geq_ys"] = row.x_geq_ys;
            w["subspace"] = vtable.get(row.x, row.y).to_json();
            return w;
        });
    }
    return r;
}

template <typename Fn>
SuiteResult timed(Fn&& fn) {
    const auto start = Clock::now();
    SuiteResult r = fn();
    r.elapsed_ms = ms_since(start);
    return r;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::NotComparable:
    case ErrorKind::ParseError: return kExitDomain;
    case ErrorKind::LiftingViolation:
    case ErrorKind::InvariantViolation: return kExitVerifyFailed;
    default: return kExitUsage;
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

} // namespace

// ---------------------------------------------------------------------------

void SuiteResult::check(bool ok, const std::function<nlohmann::ordered_json()>& witness) {
    ++checked;
    if (ok) return;
    if (failed == 0) witnesses.push_back(witness());
    ++failed;
}

bool VerifyReport::passed() const {
    for (const auto& s : suites)
        if (s.failed != 0) return false;
    return true;
}

const SuiteResult* VerifyReport::suite(std::string_view name) const {
    for (const auto& s : suites)
        if (s.name == name) return &s;
    return nullptr;
}

nlohmann::ordered_json VerifyReport::to_json() const {
    ojson suites_json = ojson::array();
    for (const auto& s : suites)
        suites_json.push_back(
            {{"name", s.name}, {"checked", s.checked}, {"failed", s.failed}, {"witnesses", s.witnesses},
             {"elapsed_ms", s.elapsed_ms}});
    return {{"system", system}, {"suites", std::move(suites_json)}, {"elapsed_ms", elapsed_ms}};
}

std::vector<int> parse_subset(std::string_view text) {
    if (text.empty() || text == "none") return {};
    // Generators are validated against the rank once the system is built.
    std::vector<int> out;
    for (int s : parse_word(text, 1 << 20)) out.push_back(s);
    return out;
}

std::string format_subset(const std::vector<int>& subset) {
    return "{" + format_word(subset) + "}";
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

VerifyReport run_verify(const RunConfig& config) {
    const auto start = Clock::now();
    Session session(config);
    const auto& group = session.group;

    VerifyReport report;
    report.system = session.sys.fingerprint();

    RTable rtable(group, config.descent_policy);
    report.cache_loaded = load_rpoly_cache(config, rtable);
    rtable.fill_all(config.parallelism);
    report.rpoly_computed = rtable.computed();
    if (rtable.computed() != 0) store_rpoly_cache(config, rtable, utc_timestamp());

    VTable vtable = compute_all(group, VTableOptions{config.descent_policy, {}}, config.parallelism, config.budget);
    const auto subsets = config.singular_subsets.empty() ? default_subsets(group.rank()) : config.singular_subsets;

    report.suites.push_back(timed([&] { return suite_theorem(vtable, rtable); }));
    report.suites.push_back(timed([&] { return suite_geometric(group); }));
    report.suites.push_back(timed([&] { return suite_bruhat(group, config.oracle_max_length); }));
    report.suites.push_back(timed([&] { return suite_rpoly(group, rtable, config.descent_policy); }));
    report.suites.push_back(timed([&] { return suite_singular(vtable, subsets); }));
    report.suites.push_back(timed([&] { return suite_membership(vtable); }));
    report.elapsed_ms = ms_since(start);
    return report;
}

ReportFiles run_report(const RunConfig& config, const std::string& timestamp) {
    if (config.cache_dir.empty()) throw Error(ErrorKind::IoError, "report needs a cache directory");
    Session session(config);
    const auto& group = session.group;
    std::error_code ec;
    std::filesystem::create_directories(config.cache_dir, ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create " + config.cache_dir.string() + ": " + ec.message());

    RTable rtable(group, config.descent_policy);
    load_rpoly_cache(config, rtable);
    rtable.fill_all(config.parallelism);
    VTable vtable = compute_all(group, VTableOptions{config.descent_policy, {}}, config.parallelism, config.budget);

    const std::string stem = session.sys.type().to_string();
    ReportFiles files;
    files.rpoly_computed = rtable.computed();
    files.rpoly_cache = rpoly_cache_path(config, session.sys);
    files.dimension_csv = config.cache_dir / (stem + ".dims.csv");
    files.summary_json = config.cache_dir / (stem + ".summary.json");
    files.subspaces_json = config.cache_dir / (stem + ".subspaces.json");

    if (rtable.computed() != 0 || !std::filesystem::exists(files.rpoly_cache))
        store_rpoly_cache(config, rtable, timestamp);
    write_file(files.dimension_csv, dimension_csv(vtable, rtable, timestamp));
    write_file(files.subspaces_json, subspace_export(vtable, timestamp).dump(2) + "\n");

    std::map<std::int64_t, std::size_t> histogram;
    std::size_t max_dim = 0;
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    for (std::size_t xi = 0; xi < group.size(); ++xi)
        for (std::size_t yi = 0; yi < group.size(); ++yi) {
            const auto x = static_cast<Index>(xi);
            const auto y = static_cast<Index>(yi);
            if (!group.leq(y, x)) continue;
            const auto d = vtable.get(x, y).dim();
            const auto gj = gj_coefficient(rtable, x, y);
            ++histogram[gj];
            max_dim = std::max(max_dim, d);
            ++pairs;
            if (static_cast<std::int64_t>(d) != gj) ++mismatches;
        }
    ojson hist = ojson::object();
    for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
    const ojson summary = {{"system", session.sys.fingerprint()},
                           {"generated", timestamp},
                           {"group_order", group.size()},
                           {"longest_length", session.sys.longest_length()},
                           {"pairs", pairs},
                           {"max_dim", max_dim},
                           {"mismatches", mismatches},
                           {"gj_histogram", std::move(hist)}};
    write_file(files.summary_json, summary.dump(2) + "\n");
    return files;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
    Session session(config);
    const auto& group = session.group;
    switch (config.output_format) {
    case OutputFormat::json: {
        ojson elements = ojson::array();
        for (std::size_t w = 0; w < group.size(); ++w)
            elements.push_back({{"word", group.word_string(static_cast<Index>(w))},
                                {"length", group.length(static_cast<Index>(w))}});
        out << ojson{{"system", session.sys.fingerprint()},
                     {"order", group.size()},
                     {"longest_length", session.sys.longest_length()},
                     {"elements", std::move(elements)}}
                   .dump(2)
            << "\n";
        break;
    }
    case OutputFormat::csv:
        out << "index;length;word\n";
        for (std::size_t w = 0; w < group.size(); ++w)
            out << w << ';' << group.length(static_cast<Index>(w)) << ';' << group.word_string(static_cast<Index>(w))
                << "\n";
        break;
    case OutputFormat::text:
        out << "system " << session.sys.fingerprint() << "\n";
        out << "|W| = " << group.size() << ", l(w0) = " << session.sys.longest_length() << "\n";
        for (std::size_t w = 0; w < group.size(); ++w) {
            const auto& word = group.word_string(static_cast<Index>(w));
            out << w << "\t" << group.length(static_cast<Index>(w)) << "\t" << (word.empty() ? "e" : word) << "\n";
        }
        break;
    }
    return kExitOk;
}

int cmd_rpoly(const RunConfig& config, std::string_view x_word, std::string_view y_word, std::ostream& out) {
    Session session(config);
    const auto& group = session.group;
    const Index x = group.parse(x_word);
    const Index y = group.parse(y_word);
    if (!group.leq(y, x))
        throw Error(ErrorKind::NotComparable,
                    "y=" + std::string(y_word) + " is not <= x=" + std::string(x_word) + " in Bruhat order");

    RTable rtable(group, config.descent_policy);
    load_rpoly_cache(config, rtable);
    const IntPolynomial p = rtable.get(y, x);
    const std::int64_t gj = gj_coefficient(rtable, x, y);
    if (rtable.computed() != 0 && !config.cache_dir.empty()) {
        rtable.fill_all(config.parallelism);
        store_rpoly_cache(config, rtable, utc_timestamp());
    }

    switch (config.output_format) {
    case OutputFormat::json:
        out << ojson{{"system", session.sys.fingerprint()},
                     {"x", group.word_string(x)},
                     {"y", group.word_string(y)},
                     {"r", p.coeffs()},
                     {"r_string", p.to_string()},
                     {"gj", gj}}
                   .dump(2)
            << "\n";
        break;
    case OutputFormat::csv:
        out << group.word_string(y) << ';' << group.word_string(x) << ';' << p.to_csv() << ';' << gj << "\n";
        break;
    case OutputFormat::text: out << p.to_string() << ", gj=" << gj << "\n"; break;
    }
    return kExitOk;
}

int cmd_vspace(const RunConfig& config, std::string_view x_word, std::string_view y_word, std::ostream& out) {
    Session session(config);
    const auto& group = session.group;
    const Index x = group.parse(x_word);
    const Index y = group.parse(y_word);
    VTable vtable(group, VTableOptions{config.descent_policy, {}});
    const RationalSubspace v = vtable.get(x, y);

    switch (config.output_format) {
    case OutputFormat::json: {
        ojson doc{{"system", session.sys.fingerprint()},
                  {"x", group.word_string(x)},
                  {"y", group.word_string(y)},
                  {"v", v.to_json()}};
        ojson singular = ojson::array();
        for (const auto& subset : config.singular_subsets)
            singular.push_back({{"subset", format_subset(subset)},
                                {"v", singular_v(vtable, SingularSpec{subset}, x, y).to_json()}});
        doc["singular"] = std::move(singular);
        out << doc.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        out << "x_word;y_word;subset;dim\n";
        out << group.word_string(x) << ';' << group.word_string(y) << ";;" << v.dim() << "\n";
        for (const auto& subset : config.singular_subsets)
            out << group.word_string(x) << ';' << group.word_string(y) << ';' << format_word(subset) << ';'
                << singular_v(vtable, SingularSpec{subset}, x, y).dim() << "\n";
        break;
    case OutputFormat::text:
        out << "V(" << x_word << ", " << y_word << "): " << subspace_text(v) << "\n";
        for (const auto& subset : config.singular_subsets)
            out << "V_lambda with S_lambda = " << format_subset(subset) << ": "
                << subspace_text(singular_v(vtable, SingularSpec{subset}, x, y)) << "\n";
        break;
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const VerifyReport report = run_verify(config);
    switch (config.output_format) {
    case OutputFormat::json: out << report.to_json().dump(2) << "\n"; break;
    case OutputFormat::csv:
        out << "suite,checked,failed\n";
        for (const auto& s : report.suites) out << s.name << ',' << s.checked << ',' << s.failed << "\n";
        break;
    case OutputFormat::text:
        out << "system " << report.system << "\n";
        for (const auto& s : report.suites) {
            out << "suite " << s.name << ": checked " << s.checked << ", failed " << s.failed << "\n";
            for (const auto& w : s.witnesses) out << "  witness " << w.dump() << "\n";
        }
        out << (report.passed() ? "PASS" : "FAIL") << "\n";
        break;
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_report(const RunConfig& config, std::ostream& out) {
    const ReportFiles files = run_report(config, utc_timestamp());
    out << "wrote " << files.dimension_csv.string() << "\n";
    out << "wrote " << files.rpoly_cache.string() << "\n";
    out << "wrote " << files.summary_json.string() << "\n";
    out << "wrote " << files.subspaces_json.string() << "\n";
    out << "r-polynomials computed: " << files.rpoly_computed << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extension-space dimensions between Verma modules via Weyl group combinatorics", "verma-ext"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> singular;
    std::string format = "text";
    std::string policy = "smallest";
    std::string cache_dir;
    std::string x_word;
    std::string y_word;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", config.type_descriptor, "Type descriptor, e.g. B3 or A1xA2")->required();
        sub->add_option("--singular", singular, "S_lambda as 1-based generators, e.g. 1,2 (repeatable)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--cache-dir", cache_dir, "Cache directory (default $VERMA_EXT_CACHE or verma-ext-cache)");
        sub->add_option("--budget", config.budget, "Maximum element-pair operations |W|^2")
            ->check(CLI::PositiveNumber);
        sub->add_option("--descent-policy", policy, "Descent tie-break")
            ->check(CLI::IsMember({"smallest", "largest"}));
        sub->add_option("--jobs", config.parallelism, "Worker threads, 0 = auto");
        sub->add_option("--oracle-max-length", config.oracle_max_length, "Cap on l(y) for the subword oracle");
    };
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the elements of W");
    auto* rpoly_cmd = app.add_subcommand("rpoly", "Print R_{y,x} and the q-coefficient");
    auto* vspace_cmd = app.add_subcommand("vspace", "Print V(x,y) and its singular images");
    auto* verify_cmd = app.add_subcommand("verify", "Run every verification suite");
    auto* report_cmd = app.add_subcommand("report", "Write dimension tables and caches");
    for (auto* sub : {enumerate_cmd, rpoly_cmd, vspace_cmd, verify_cmd, report_cmd}) add_common(sub);
    for (auto* sub : {rpoly_cmd, vspace_cmd}) {
        sub->add_option("x", x_word, "Reduced or unreduced word for x (1-based, comma separated, e = identity)")
            ->required();
        sub->add_option("y", y_word, "Word for y")->required();
    }

    std::vector<const char*> args(argv, argv + argc);
    try {
        app.parse(argc, const_cast<char**>(args.data()));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        config.output_format = format == "json" ? OutputFormat::json
                               : format == "csv" ? OutputFormat::csv
                                                 : OutputFormat::text;
        config.descent_policy = policy == "largest" ? DescentPolicy::largest : DescentPolicy::smallest;
        if (!cache_dir.empty()) {
            config.cache_dir = cache_dir;
        } else if (const char* env = std::getenv("VERMA_EXT_CACHE"); env != nullptr && *env != '\0') {
            config.cache_dir = env;
        } else {
            config.cache_dir = "verma-ext-cache";
        }
        for (const auto& s : singular) config.singular_subsets.push_back(parse_subset(s));

        if (*enumerate_cmd) return cmd_enumerate(config, out);
        if (*rpoly_cmd) return cmd_rpoly(config, x_word, y_word, out);
        if (*vspace_cmd) return cmd_vspace(config, x_word, y_word, out);
        if (*verify_cmd) return cmd_verify(config, out);
        if (*report_cmd) return cmd_report(config, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace verma_ext::cli
