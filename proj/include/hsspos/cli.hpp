#ifndef HSSPOS_CLI_HPP
#define HSSPOS_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsspos/barth_lefschetz.hpp"
#include "hsspos/curvature.hpp"
#include "hsspos/error.hpp"
#include "hsspos/exact_linalg.hpp"
#include "hsspos/hss_catalog.hpp"
#include "hsspos/report.hpp"
#include "hsspos/verify.hpp"

namespace hsspos::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct GlobalOptions {
    bool json = false;
    bool quiet = false;
    bool color = false;
    std::uint64_t seed = 42;
    int samples = 500;
};

/// Parses `root=rational` pairs separated by commas.  Commas inside a
/// bracketed coordinate list belong to the root.
inline TangentVector parse_vector(const HermitianSpace& s, std::string_view text) {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    items.push_back(cur);
    TangentVector x = TangentVector::zero(s);
    std::vector<bool> seen(x.coeffs.size(), false);
    for (const auto& item : items) {
        const auto eq = item.rfind('=');
        if (eq == std::string::npos) throw ArgumentError("vector entry '" + item + "' is not of the form root=value");
        const Root r = parse_root(item.substr(0, eq), s.roots().ambient_dim());
        const auto idx = s.require_psi(r, "--vector");
        const auto pos = std::size_t(s.psi_position(idx));
        if (seen[pos]) throw ArgumentError("root " + r.name() + " given twice");
        seen[pos] = true;
        std::string value = item.substr(eq + 1);
        value.erase(std::remove_if(value.begin(), value.end(), [](unsigned char c) { return std::isspace(c); }),
                    value.end());
        x.coeffs[pos] = parse_rational(value);
    }
    return x;
}

namespace detail {

inline std::string paint(const GlobalOptions& g, bool pass) {
    const char* word = pass ? "PASS" : "FAIL";
    if (!g.color) return word;
    return std::string(pass ? "\033[32m" : "\033[31m") + word + "\033[0m";
}

inline std::string root_label(const HermitianSpace& s, RootSystem::Index a) { return s.roots().root(a).name(); }

inline void emit(const GlobalOptions& g, std::ostream& out, const Json& report, const std::string& text) {
    if (g.json) out << serialize(report);
    else if (!g.quiet) out << text;
}

inline int spaces_list(const GlobalOptions& g, std::ostream& out) {
    struct Row {
        const char* grammar;
        const char* bounds;
        const char* ambient;
        const char* v;
    };
    const Row rows[] = {
        {"gr:p,q", "p >= 1, q >= 1", "A_{p+q-1}, node p", "pq"},
        {"quadric:p", "p >= 3 (p = 2 rejected)", "B_{(p+1)/2} (p odd) or D_{(p+2)/2} (p even), node 1", "p"},
        {"lagr:r", "r >= 2", "C_r, node r", "r(r+1)/2"},
        {"spinor:r", "r >= 3", "D_r, node r", "r(r-1)/2"},
        {"e6", "", "E6, node 1", "16"},
        {"e7", "", "E7, node 7", "27"},
    };
    Json results = Json::array();
    std::ostringstream text;
    for (const auto& r : rows) {
        results.push_back(Json{{"id", r.grammar}, {"bounds", r.bounds}, {"ambient", r.ambient}, {"v", r.v}});
        text << std::left << std::setw(11) << r.grammar << std::setw(25) << r.bounds << r.ambient << "  (v = " << r.v
             << ")\n";
    }
    text << "parameters are limited to 24\n";
    emit(g, out, make_report("spaces list", Json::object(), results, {}, g.seed), text.str());
    return kOk;
}

inline int positivity(const GlobalOptions& g, const std::string& id, std::ostream& out) {
    const auto s = resolve(id);
    const auto prof = positivity_profile(s);
    std::vector<Check> checks;
    checks.push_back({"dimension_closed_form", s.dimension() == closed_form_dimension(s.id()),
                      "v = " + std::to_string(s.dimension())});
    checks.push_back({"ell_matches_table", prof.ell == tabulated_positivity(s.id()),
                      "table " + std::to_string(tabulated_positivity(s.id()))});

    Json psi = Json::array();
    for (std::size_t i = 0; i < s.psi().size(); ++i)
        psi.push_back(Json{{"root", root_label(s, s.psi()[i])}, {"psi_prime", prof.sizes[i]}});
    Json results{{"v", prof.v},
                 {"ell", prof.ell},
                 {"space", s.id().str()},
                 {"algebra", s.roots().name()},
                 {"cominuscule_node", s.cominuscule_node()},
                 {"minimizer", root_label(s, prof.minimizer)},
                 {"orbit_values", orbit_json(prof.orbit_values)},
                 {"psi", psi}};

    std::ostringstream text;
    text << "space      " << s.id().str() << "\n"
         << "algebra    " << s.roots().name() << ", cominuscule node " << s.cominuscule_node() << "\n"
         << "v          " << prof.v << "\n"
         << "ell        " << prof.ell << "  (attained at " << root_label(s, prof.minimizer) << ")\n"
         << "|Psi'_a|  ";
    for (const auto& [size, count] : prof.orbit_values) text << " " << size << " (x" << count << ")";
    text << "\nPsi in canonical order:\n";
    for (std::size_t i = 0; i < s.psi().size(); ++i)
        text << "  " << std::setw(3) << i + 1 << "  " << std::left << std::setw(40) << root_label(s, s.psi()[i])
             << std::right << " |Psi'| = " << prof.sizes[i] << "\n";
    emit(g, out, make_report("positivity", Json{{"space", id}}, results, checks, g.seed), text.str());
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    return ok ? kOk : kVerificationFailed;
}

inline int form(const GlobalOptions& g, const std::string& id, const std::string& vec, std::ostream& out) {
    const auto s = resolve(id);
    const auto x = parse_vector(s, vec);
    const auto h = hermitian_form(s, x);
    const auto cert = certify_psd(h.matrix);
    const int null = int(h.matrix.cols() - rank(h.matrix));
    std::vector<Check> checks{{"symmetric", h.matrix.is_symmetric(), ""},
                              {"positive_semidefinite", cert.positive_semidefinite,
                               cert.positive_semidefinite ? "rank " + std::to_string(cert.rank) : cert.failure}};

    Json coeffs = Json::object();
    Json order = Json::array();
    for (std::size_t i = 0; i < s.psi().size(); ++i) {
        order.push_back(root_label(s, s.psi()[i]));
        if (x.coeffs[i] != 0) coeffs[root_label(s, s.psi()[i])] = to_string(x.coeffs[i]);
    }
    Json results{{"space", s.id().str()}, {"vector", coeffs}, {"psi", order}, {"matrix", to_json(h.matrix)},
                 {"nullity", null},       {"ell_line", s.dimension() - null}};
    std::optional<int> grank;
    if (s.id().kind == SpaceKind::Grassmannian) {
        grank = grassmann_rank(s, x);
        results["grassmann_rank"] = *grank;
    }

    std::ostringstream text;
    text << "space      " << s.id().str() << "\nvector    ";
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) text << " " << it.key() << "=" << it->get<std::string>();
    text << "\nrows/cols ";
    for (const auto& name : order) text << " " << name.get<std::string>();
    text << "\nH_X:\n";
    std::size_t width = 1;
    for (std::size_t i = 0; i < h.matrix.rows(); ++i)
        for (std::size_t j = 0; j < h.matrix.cols(); ++j) width = std::max(width, to_string(h.matrix(i, j)).size());
    for (std::size_t i = 0; i < h.matrix.rows(); ++i) {
        text << "  [";
        for (std::size_t j = 0; j < h.matrix.cols(); ++j)
            text << " " << std::setw(int(width)) << to_string(h.matrix(i, j));
        text << " ]\n";
    }
    text << "nullity    " << null << "\nell(line)  " << s.dimension() - null << "\n";
    if (grank) text << "rank(X)    " << *grank << "\n";
    text << "semidefinite " << (cert.positive_semidefinite ? "yes" : "NO: " + cert.failure) << "\n";
    emit(g, out, make_report("form", Json{{"space", id}, {"vector", vec}}, results, checks, g.seed), text.str());
    return cert.positive_semidefinite ? kOk : kVerificationFailed;
}

inline int range(const GlobalOptions& g, const std::string& id, int m, int n, std::optional<int> ell0,
                 std::ostream& out) {
    const auto s = resolve(id);
    const auto r = connectivity(s, m, n, ell0);
    std::vector<Check> checks;
    Json results = to_json(r);
    if (!ell0) {
        const int iso = closed_form_iso_max(s.id(), m, n);
        const int surj = closed_form_surj_at(s.id(), m, n);
        results["closed_form"] = Json{
            {"formula", closed_form_iso_formula(s.id().kind)}, {"iso_max", iso}, {"surj_at", surj}};
        checks.push_back({"closed_form_agrees", iso == r.iso_max && surj == r.surj_at,
                          closed_form_iso_formula(s.id().kind) + " = " + std::to_string(iso)});
    }
    Json inputs{{"space", id}, {"m", m}, {"n", n}};
    inputs["ell0"] = ell0 ? Json(*ell0) : Json(nullptr);

    std::ostringstream text;
    text << "space " << r.space_id << ": v = " << r.v << ", ell = " << r.ell_space;
    if (ell0) text << " (using ell0 = " << r.ell << ")";
    text << "\nm = " << m << ", n = " << n << "\n"
         << "lambda0 = n+m-v-(v-ell) = " << r.lambda0 << (r.vacuous ? "  (vacuous: lambda0 < 0)" : "") << "\n"
         << "pi_j(N, N cap M) -> pi_j(V, M): isomorphism for j <= " << r.iso_max << ", onto for j = " << r.surj_at
         << "\n"
         << "pi_j(V, M) = 0 for j <= " << r.pi_vanish_max << "\n"
         << "pi_j(N, N cap M) = 0 for j <= " << r.pair_vanish_max << "\n";
    for (const auto& c : checks) text << paint(g, c.pass) << "  " << c.name << ": " << c.detail << "\n";
    emit(g, out, make_report("range", inputs, results, checks, g.seed), text.str());
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    return ok ? kOk : kVerificationFailed;
}

inline int table(const GlobalOptions& g, std::ostream& out) {
    struct Row {
        const char* family;
        const char* v;
        const char* ell;
        const char* sample;
    };
    const Row rows[] = {
        {"gr:p,q", "pq", "p+q-1", "gr:2,3"},          {"quadric:p", "p", "p-1", "quadric:5"},
        {"lagr:r", "r(r+1)/2", "r", "lagr:4"},        {"spinor:r", "r(r-1)/2", "2r-3", "spinor:6"},
        {"e6", "16", "11", "e6"},                     {"e7", "27", "17", "e7"},
    };
    Json results = Json::array();
    std::vector<Check> checks;
    std::ostringstream text;
    text << std::left << std::setw(11) << "space" << std::setw(10) << "v" << std::setw(7) << "ell"
         << std::setw(22) << "iso for j <=" << std::setw(22) << "onto at j =" << "computed\n";
    for (const auto& r : rows) {
        const auto id = SpaceId::parse(r.sample);
        const auto s = resolve(id);
        const int ell = complex_positivity(s);
        const std::string iso = closed_form_iso_formula(id.kind);
        const std::string surj = closed_form_surj_formula(id.kind);
        const bool ok = ell == tabulated_positivity(id) && s.dimension() == closed_form_dimension(id);
        checks.push_back({id.str() + "/ell", ok, "v = " + std::to_string(s.dimension()) + ", ell = " + std::to_string(ell)});
        results.push_back(Json{{"family", r.family},
                               {"v", r.v},
                               {"ell", r.ell},
                               {"iso_range", "j <= " + iso},
                               {"surjective_at", "j = " + surj},
                               {"sample", id.str()},
                               {"sample_v", s.dimension()},
                               {"sample_ell", ell}});
        text << std::setw(11) << r.family << std::setw(10) << r.v << std::setw(7) << r.ell << std::setw(22) << iso
             << std::setw(22) << surj << id.str() << ": v = " << s.dimension() << ", ell = " << ell << " "
             << paint(g, ok) << "\n";
    }
    emit(g, out, make_report("table", Json::object(), results, checks, g.seed), text.str());
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    return ok ? kOk : kVerificationFailed;
}

inline int verify(const GlobalOptions& g, const std::vector<std::string>& spaces, bool corrupt, std::ostream& out,
                  std::ostream& err) {
    VerifyOptions opt;
    opt.seed = g.seed;
    opt.samples = g.samples;
    opt.corrupt_table = corrupt;
    for (const auto& id : spaces) opt.spaces.push_back(SpaceId::parse(id));
    const auto rep = run_verification(opt);

    Json inputs{{"spaces", spaces}, {"samples", g.samples}};
    Json per_space = Json::array();
    for (const auto& s : rep.spaces) per_space.push_back(to_json(s));
    const auto failures = rep.failures();
    Json results{{"checks_run", rep.checks.size()},
                 {"checks_failed", failures.size()},
                 {"all_passed", failures.empty()},
                 {"spaces", per_space}};

    std::ostringstream text;
    for (const auto& c : rep.checks)
        if (!g.quiet || !c.pass) text << paint(g, c.pass) << "  " << c.name << "  " << c.detail << "\n";
    if (!g.quiet) {
        text << "oracle ratios:";
        for (const auto& s : rep.spaces)
            if (s.oracle_ratio) text << " " << s.id << "=" << to_string(*s.oracle_ratio);
        text << "\n";
    }
    text << rep.checks.size() << " checks, " << rep.checks.size() - failures.size() << " passed, " << failures.size()
         << " failed (seed " << g.seed << ", " << g.samples << " samples per space)\n";
    if (g.json) out << serialize(make_report("verify", inputs, results, rep.checks, g.seed));
    else out << text.str();
    if (!failures.empty()) {
        err << "verification failed:";
        for (const auto& f : failures) err << " " << f;
        err << "\n";
        return kVerificationFailed;
    }
    return kOk;
}

} // namespace detail

/// Entry point.  `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false) {
    CLI::App app{"Complex positivity and Barth-Lefschetz ranges of compact hermitian symmetric spaces", "hsspos"};
    app.fallthrough();
    app.require_subcommand(1);
    GlobalOptions g;
    g.color = color;
    app.add_flag("--json", g.json, "Emit a JSON report");
    app.add_flag("--quiet", g.quiet, "Print only failures and summaries");
    app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--samples", g.samples, "Random vectors per space")->check(CLI::Range(1, 1000000))->capture_default_str();

    auto* spaces = app.add_subcommand("spaces", "Catalog of supported spaces");
    spaces->require_subcommand(1);
    auto* spaces_list = spaces->add_subcommand("list", "List families and parameter bounds");

    std::string space_id;
    auto* pos = app.add_subcommand("positivity", "v, ell and |Psi'_a| for every a in Psi");
    pos->add_option("space", space_id, "Space id, e.g. gr:2,3")->required();

    std::string vec;
    auto* frm = app.add_subcommand("form", "Hermitian form H_X of a tangent vector");
    frm->add_option("space", space_id, "Space id")->required();
    frm->add_option("--vector", vec, "Coefficients, e.g. \"e1-e3=1,e2-e4=1/2\"")->required();

    int m = 0, n = 0;
    std::optional<int> ell0;
    auto* rng = app.add_subcommand("range", "Barth-Lefschetz connectivity ranges");
    rng->add_option("space", space_id, "Space id")->required();
    rng->add_option("-m", m, "Complex dimension of M")->required();
    rng->add_option("-n", n, "Complex dimension of N")->required();
    rng->add_option("--ell0", ell0, "Improved positivity bound to use instead of ell");

    auto* tbl = app.add_subcommand("table", "Positivity table and closed-form ranges");

    std::vector<std::string> verify_spaces;
    bool corrupt = false;
    auto* ver = app.add_subcommand("verify", "Run the invariant suite; exit 0 iff all checks pass");
    ver->add_option("--space", verify_spaces, "Restrict to these spaces (repeatable)");
    ver->add_flag("--corrupt-table", corrupt)->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (spaces_list->parsed()) return detail::spaces_list(g, out);
        if (pos->parsed()) return detail::positivity(g, space_id, out);
        if (frm->parsed()) return detail::form(g, space_id, vec, out);
        if (rng->parsed()) return detail::range(g, space_id, m, n, ell0, out);
        if (tbl->parsed()) return detail::table(g, out);
        if (ver->parsed()) return detail::verify(g, verify_spaces, corrupt, out, err);
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

} // namespace hsspos::cli

#endif
