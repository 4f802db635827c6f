// Command line front end: prints graded characters, triangular
// decomposition data, and composition multiplicities for modules over
// ADE quantum loop algebras.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qchar/cartan.hpp"
#include "qchar/errors.hpp"
#include "qchar/fm_engine.hpp"
#include "qchar/kl.hpp"
#include "qchar/standard.hpp"
#include "qchar/store.hpp"
#include "qchar/tpoly.hpp"
#include "qchar/yring.hpp"

namespace {

using namespace qchar;

struct Options {
    std::string type;
    int node = 0;
    int shift = 0;
    std::string weights;
    int epsilon_order = 0;
    std::string format = "text";
    std::string cache_dir;
    int cap = 0;
    bool at_t_one = false;
};

std::string power(const char* name, int node, int shift, int exp) {
    std::string s = std::string(name) + "[" + std::to_string(node) + "," +
                    std::to_string(shift) + "]";
    if (exp != 1) s += "^" + std::to_string(exp);
    return s;
}

std::string monomial_str(const VWMonomial& m) {
    if (m.is_identity()) return "1";
    std::string s;
    for (const auto& e : m.entries()) {
        if (e.w != 0) s += (s.empty() ? "" : " ") + power("W", e.node, e.shift, e.w);
        if (e.v != 0) s += (s.empty() ? "" : " ") + power("V", e.node, e.shift, e.v);
    }
    return s;
}

std::string monomial_str(const YMonomial& m) {
    if (m.is_identity()) return "1";
    std::string s;
    for (const auto& e : m.entries())
        s += (s.empty() ? "" : " ") + power("Y", e.node, e.shift, e.u);
    return s;
}

/// [[exp, coeff]...] with the coefficient collapsed to its value at
/// t = 1 when requested.
TPoly maybe_collapse(const TPoly& p, bool at_t_one) {
    if (!at_t_one) return p;
    return TPoly(p.eval_at_one());
}

Character collapse(const Character& x, bool at_t_one) {
    if (!at_t_one) return x;
    Character out;
    for (const auto& [m, p] : x) {
        TPoly v = maybe_collapse(p, true);
        if (!v.is_zero()) out.emplace(m, std::move(v));
    }
    return out;
}

YCharacter collapse(const YCharacter& x, bool at_t_one) {
    if (!at_t_one) return x;
    YCharacter out;
    for (const auto& [m, p] : x) {
        TPoly v = maybe_collapse(p, true);
        if (!v.is_zero()) out.emplace(m, std::move(v));
    }
    return out;
}

/// Multiplicities and dimensions are exact integers; keep them as JSON
/// numbers when they fit and fall back to decimal strings.
Json int_json(const BigInt& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(n));
    return Json(n.str());
}

void print_character(const Character& x) {
    std::vector<std::pair<const VWMonomial*, const TPoly*>> rows;
    rows.reserve(x.size());
    for (const auto& [m, p] : x) rows.emplace_back(&m, &p);
    std::stable_sort(rows.begin(), rows.end(), [](auto a, auto b) {
        return std::pair(a.first->v_degree(), *a.first) <
               std::pair(b.first->v_degree(), *b.first);
    });
    for (const auto& [m, p] : rows)
        std::cout << monomial_str(*m) << " : " << p->str() << "\n";
}

void print_character(const YCharacter& x) {
    for (const auto& [m, p] : x)
        std::cout << monomial_str(m) << " : " << p.str() << "\n";
}

int run_fundamental(const Options& o) {
    auto c = make_cartan(o.type);
    EngineOptions opts;
    opts.v_degree_cap = o.cap;
    SpectralSpec spec{o.epsilon_order};
    Character x = collapse(
        fundamental_character(c, o.node, o.shift, spec, opts), o.at_t_one);
    if (o.format == "json") {
        DrinfeldPoly P{spec};
        P.add_root(o.node, o.shift, 1);
        std::cout << character_payload(c.label, o.epsilon_order, "fundamental",
                                       drinfeld_to_json(P), x)
                         .dump(1)
                  << "\n";
    } else {
        print_character(x);
    }
    return 0;
}

int run_standard(const Options& o) {
    auto c = make_cartan(o.type);
    EngineOptions opts;
    opts.v_degree_cap = o.cap;
    SpectralSpec spec{o.epsilon_order};
    auto P = DrinfeldPoly::parse(o.weights, spec);
    Character x = spec.generic() ? standard_character(c, P, opts)
                                 : standard_character_at_root(c, P, opts);
    x = collapse(x, o.at_t_one);
    if (o.format == "json") {
        std::cout << character_payload(c.label, o.epsilon_order, "standard",
                                       drinfeld_to_json(P), x)
                         .dump(1)
                  << "\n";
    } else {
        print_character(x);
    }
    return 0;
}

int run_simple(const Options& o) {
    auto c = make_cartan(o.type);
    EngineOptions opts;
    opts.v_degree_cap = o.cap;
    SpectralSpec spec{o.epsilon_order};
    auto P = DrinfeldPoly::parse(o.weights, spec);
    YCharacter x = collapse(simple_character(c, P, opts), o.at_t_one);
    if (o.format == "json") {
        std::cout << y_character_payload(c.label, o.epsilon_order, "simple",
                                         drinfeld_to_json(P), x)
                         .dump(1)
                  << "\n";
    } else {
        print_character(x);
    }
    return 0;
}

int run_kl(const Options& o) {
    auto c = make_cartan(o.type);
    EngineOptions opts;
    opts.v_degree_cap = o.cap;
    SpectralSpec spec{o.epsilon_order};
    auto P = DrinfeldPoly::parse(o.weights, spec);
    KLTable table = kl_table(c, P, opts);
    if (o.format == "json") {
        Json j = Json::object();
        j["format_version"] = 1;
        j["cartan"] = c.label;
        j["epsilon_order"] = o.epsilon_order;
        j["kind"] = "kl";
        j["drinfeld"] = drinfeld_to_json(P);
        Json index = Json::array();
        for (const auto& m : table.index) index.push_back(monomial_to_json(m));
        j["index"] = std::move(index);
        auto matrix = [](const std::map<std::pair<int, int>, TPoly>& mat) {
            Json rows = Json::array();
            for (const auto& [rc, p] : mat)
                rows.push_back(Json::array(
                    {rc.first, rc.second, tpoly_to_json(p)}));
            return rows;
        };
        j["c"] = matrix(table.c);
        j["u"] = matrix(table.u);
        j["z"] = matrix(table.z);
        std::cout << j.dump(1) << "\n";
    } else {
        for (std::size_t i = 0; i < table.index.size(); ++i)
            std::cout << "index[" << i
                      << "] = " << monomial_str(table.index[i]) << "\n";
        auto print = [](const char* name,
                        const std::map<std::pair<int, int>, TPoly>& mat) {
            for (const auto& [rc, p] : mat)
                std::cout << name << "[" << rc.first << "," << rc.second
                          << "] = " << p.str() << "\n";
        };
        print("c", table.c);
        print("u", table.u);
        print("z", table.z);
    }
    return 0;
}

int run_mult(const Options& o) {
    auto c = make_cartan(o.type);
    EngineOptions opts;
    opts.v_degree_cap = o.cap;
    SpectralSpec spec{o.epsilon_order};
    auto P = DrinfeldPoly::parse(o.weights, spec);
    auto counts = multiplicities(c, P, opts);
    if (o.format == "json") {
        Json j = Json::object();
        j["format_version"] = 1;
        j["cartan"] = c.label;
        j["epsilon_order"] = o.epsilon_order;
        j["kind"] = "mult";
        j["drinfeld"] = drinfeld_to_json(P);
        Json entries = Json::array();
        for (const auto& [y, n] : counts) {
            Json e = Json::object();
            e["y"] = y_monomial_to_json(y);
            e["mult"] = int_json(n);
            entries.push_back(std::move(e));
        }
        j["entries"] = std::move(entries);
        std::cout << j.dump(1) << "\n";
    } else {
        for (const auto& [y, n] : counts)
            std::cout << monomial_str(y) << " : " << n.str() << "\n";
    }
    return 0;
}

int run_check(const Options& o) {
    auto c = make_cartan(o.type);
    EngineOptions opts;
    opts.v_degree_cap = o.cap;
    SpectralSpec spec{o.epsilon_order};
    auto P = DrinfeldPoly::parse(o.weights, spec);
    Character x = spec.generic() ? standard_character(c, P, opts)
                                 : standard_character_at_root(c, P, opts);
    MembershipReport report = membership_check(c, x);
    bool small = is_small(c, P, opts);
    bool semismall = is_semismall(c, P, opts);
    // The "special" predicate needs the simple character, which is only
    // defined at generic spectral parameter.
    std::optional<bool> special;
    if (spec.generic()) special = is_special(c, P, opts);
    if (o.format == "json") {
        Json j = Json::object();
        j["format_version"] = 1;
        j["cartan"] = c.label;
        j["epsilon_order"] = o.epsilon_order;
        j["kind"] = "check";
        j["drinfeld"] = drinfeld_to_json(P);
        j["member"] = report.member;
        if (!report.member) j["detail"] = report.detail;
        if (special) j["special"] = *special;
        j["small"] = small;
        j["semismall"] = semismall;
        std::cout << j.dump(1) << "\n";
    } else {
        auto yesno = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "member: " << yesno(report.member) << "\n";
        if (!report.member) std::cout << "detail: " << report.detail << "\n";
        if (special) std::cout << "special: " << yesno(*special) << "\n";
        std::cout << "small: " << yesno(small) << "\n";
        std::cout << "semismall: " << yesno(semismall) << "\n";
    }
    return report.member ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact graded characters of finite dimensional modules over ADE "
        "quantum loop algebras"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&o](CLI::App* cmd, bool with_at_t_one) {
        cmd->add_option("--type", o.type, "Cartan type label, e.g. A2 or D4")
            ->required();
        cmd->add_option("--epsilon-order", o.epsilon_order,
                        "Multiplicative order of the spectral parameter; 0 "
                        "means generic")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cache-dir", o.cache_dir,
                        "Directory for the on-disk character cache");
        cmd->add_option("--cap", o.cap,
                        "Abort once the expansion exceeds this V-degree; 0 "
                        "picks the default")
            ->check(CLI::NonNegativeNumber);
        if (with_at_t_one)
            cmd->add_flag("--at-t-one", o.at_t_one,
                          "Collapse coefficients to their value at t = 1");
    };
    auto add_weights = [&o](CLI::App* cmd) {
        cmd->add_option("--weights", o.weights,
                        "Drinfeld roots as node:shift[:mult], comma separated")
            ->required();
    };

    auto* fund = app.add_subcommand(
        "fundamental", "Graded character generated by a single W variable");
    add_common(fund, true);
    fund->add_option("--node", o.node, "Dynkin node, 1-based")->required();
    fund->add_option("--shift", o.shift, "Spectral shift");

    auto* standard = app.add_subcommand(
        "standard", "Graded character of a product of fundamentals");
    add_common(standard, true);
    add_weights(standard);

    auto* simple = app.add_subcommand(
        "simple", "Graded character of the simple quotient, in Y variables");
    add_common(simple, true);
    add_weights(simple);

    auto* kl = app.add_subcommand(
        "kl", "Triangular decomposition data c, u, z for a standard module");
    add_common(kl, false);
    add_weights(kl);

    auto* mult = app.add_subcommand(
        "mult", "Composition multiplicities of a standard module");
    add_common(mult, false);
    add_weights(mult);

    auto* check = app.add_subcommand(
        "check", "Consistency predicates for a standard module");
    add_common(check, false);
    add_weights(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!o.cache_dir.empty()) qchar::set_cache_directory(o.cache_dir);
        if (fund->parsed()) return run_fundamental(o);
        if (standard->parsed()) return run_standard(o);
        if (simple->parsed()) return run_simple(o);
        if (kl->parsed()) return run_kl(o);
        if (mult->parsed()) return run_mult(o);
        if (check->parsed()) return run_check(o);
        return 1;
    } catch (const qchar::NotSpecial& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 2;
    } catch (const qchar::CapExceeded& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 3;
    } catch (const qchar::RootOfUnityUnsupported& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 4;
    } catch (const qchar::UnknownType& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 1;
    } catch (const qchar::RankOutOfRange& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 1;
    } catch (const qchar::ArgumentOutOfRange& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 1;
    } catch (const qchar::SpecMismatch& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "qchar: " << e.what() << "\n";
        return 5;
    }
}
