#include "nanoword/error.hpp"
#include "nanoword/jones.hpp"
#include "nanoword/moves.hpp"
#include "nanoword/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace nanoword;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Phrase load_phrase(const std::string& path) { return parse_phrase_document(read_file(path)); }

void write_report(const std::string& path, const json& report) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write report: " + path);
    out << report.dump(2) << '\n';
}

std::string plural(int n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::set<Symbol> parse_symbol_set(const Alphabet& a, const std::string& csv) {
    std::set<Symbol> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        auto s = a.find(token);
        if (!s && token.size() > 1 && token[0] == '+') s = a.find(token.substr(1));
        if (!s) throw DomainError("unknown symbol '" + token + "'");
        out.insert(*s);
    }
    return out;
}

MoveKind move_kind_from_string(const std::string& name) {
    static const std::pair<const char*, MoveKind> table[] = {
        {"H1", MoveKind::H1},          {"H1inv", MoveKind::H1Inv},
        {"H2", MoveKind::H2},          {"H2inv", MoveKind::H2Inv},
        {"H3", MoveKind::H3},          {"H3inv", MoveKind::H3Inv},
        {"L1i", MoveKind::Lemma1i},    {"L1ii", MoveKind::Lemma1ii},
        {"L1iii", MoveKind::Lemma1iii},{"abab", MoveKind::Abab},
        {"shift", MoveKind::Shift},    {"shift-inv", MoveKind::ShiftInv},
        {"permute", MoveKind::Permute},{"invert", MoveKind::Invert},
    };
    for (const auto& [n, k] : table)
        if (name == n) return k;
    throw UsageError("unknown move kind '" + name + "'");
}

std::set<MoveKind> parse_move_set(const std::string& csv) {
    std::set<MoveKind> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) out.insert(move_kind_from_string(token));
    return out;
}

const std::set<MoveKind> kHomotopyMoves = {MoveKind::H1, MoveKind::H1Inv, MoveKind::H2,
                                           MoveKind::H2Inv, MoveKind::H3, MoveKind::H3Inv};

std::set<MoveKind> with_structural(std::set<MoveKind> base) {
    base.insert(MoveKind::Shift);
    base.insert(MoveKind::ShiftInv);
    base.insert(MoveKind::Permute);
    return base;
}

std::string symbols_text(const Alphabet& a, const std::vector<Symbol>& list) {
    std::string out;
    for (Symbol s : list) {
        if (!out.empty()) out += ' ';
        out += a.name(s);
    }
    return out;
}

std::string symbols_text(const Alphabet& a, const std::set<Symbol>& list) {
    return symbols_text(a, std::vector<Symbol>(list.begin(), list.end()));
}

struct RouteSpec {
    JonesRoute route;
    std::string text;
};

RouteSpec parse_route(const Alphabet& a, const std::string& text) {
    RouteSpec out;
    out.text = text;
    if (text == "direct") {
        out.route.kind = JonesRoute::Kind::Direct;
    } else if (text == "F1") {
        out.route.kind = JonesRoute::Kind::F1;
    } else if (text == "Fstar") {
        out.route.kind = JonesRoute::Kind::Fstar;
    } else if (text.rfind("UL=", 0) == 0) {
        out.route.kind = JonesRoute::Kind::UL;
        out.route.L = parse_symbol_set(a, text.substr(3));
    } else if (text == "UL") {
        out.route.kind = JonesRoute::Kind::UL;  // L stays empty
    } else {
        throw UsageError("unknown route '" + text + "' (direct | UL=<syms> | F1 | Fstar)");
    }
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& file, const std::string& report_path) {
    json report{{"command", "validate"}, {"file", file}};
    try {
        const Phrase p = load_phrase(file);
        std::cout << "OK: " << plural(p.letter_count(), "letter") << ", "
                  << plural(p.component_count(), "component") << '\n';
        if (p.component_count() == 0)
            std::cout << "note: empty phrase of length 0\n";
        report["ok"] = true;
        report["letters"] = p.letter_count();
        report["components"] = p.component_count();
        write_report(report_path, report);
        return kExitOk;
    } catch (const GaussParseError& e) {
        std::cout << "Gauss violation:\n";
        json counts = json::array();
        for (const auto& v : e.violations) {
            std::cout << "  " << v.letter << " occurs " << plural(v.count, "time") << '\n';
            counts.push_back({{"letter", v.letter}, {"count", v.count}});
        }
        report["ok"] = false;
        report["violations"] = counts;
        write_report(report_path, report);
        return kExitDomain;
    }
}

int cmd_jones(const std::string& file, const std::string& route_text,
              const std::string& report_path) {
    const Phrase p = load_phrase(file);
    const RouteSpec spec = parse_route(p.alphabet(), route_text);
    const LaurentPoly value = jones_general(p, spec.route);

    json report{{"command", "jones"}, {"file", file}, {"route", spec.text}};
    std::cout << value.render() << '\n';
    std::cout << "route: " << spec.text << '\n';
    std::cout << "letters: " << p.letter_count() << '\n';
    report["polynomial"] = value.render();
    report["letters"] = p.letter_count();

    if (p.component_count() == 0)
        std::cout << "warning: empty phrase of length 0; J = 1 by convention\n";
    switch (spec.route.kind) {
        case JonesRoute::Kind::Direct: {
            const Phrase q = over_alpha1(p) ? p : relabel_alpha0_to_alpha1(p);
            if (q.component_count() > 0) {
                std::cout << "w: " << writhe(q) << '\n';
                report["w"] = writhe(q);
            }
            break;
        }
        case JonesRoute::Kind::UL: {
            const auto crs = tau_representatives(p.alphabet());
            std::cout << "L: " << symbols_text(p.alphabet(), spec.route.L) << '\n';
            std::cout << "crs: " << symbols_text(p.alphabet(), crs) << '\n';
            const Phrase q = u_l_project(p, spec.route.L);
            if (q.component_count() > 0) {
                std::cout << "w: " << writhe(q) << '\n';
                report["w"] = writhe(q);
            }
            report["L"] = symbols_text(p.alphabet(), spec.route.L);
            break;
        }
        case JonesRoute::Kind::F1:
        case JonesRoute::Kind::Fstar: {
            const auto dec = decompose_orbits(p.alphabet());
            std::cout << "representatives: " << symbols_text(p.alphabet(), dec.representatives)
                      << '\n';
            report["representatives"] = symbols_text(p.alphabet(), dec.representatives);
            const Phrase image = spec.route.kind == JonesRoute::Kind::F1
                                     ? functor_apply(p, OrbitClass::One, dec)
                                     : project_fact_p(functor_apply(p, OrbitClass::Star, dec));
            if (image.component_count() > 0) {
                std::cout << "w: " << writhe(image) << '\n';
                report["w"] = writhe(image);
            }
            break;
        }
    }
    write_report(report_path, report);
    return kExitOk;
}

int cmd_bracket(const std::string& file, bool generic, const std::string& report_path) {
    const Phrase p = load_phrase(file);
    if (!over_alpha1(p)) throw DomainError("bracket requires a phrase over alpha1");
    const LaurentPoly value = generic ? bracket_generic(p) : specialized_bracket(p);
    std::cout << value.render() << '\n';
    std::cout << "form: " << (generic ? "generic (t, u, d)" : "specialized (t)") << '\n';
    json report{{"command", "bracket"},
                {"file", file},
                {"generic", generic},
                {"polynomial", value.render()}};
    write_report(report_path, report);
    return kExitOk;
}

int cmd_oracle_check(const std::string& file, int lifts, std::uint64_t seed,
                     const std::string& report_path) {
    const Phrase p = load_phrase(file);
    if (!over_alpha1(p)) throw DomainError("oracle-check requires a phrase over alpha1");
    const LaurentPoly state_sum = specialized_bracket(p);
    const LaurentPoly oracle = turaev_bracket(lift_to_star(p));
    bool match = state_sum == oracle;
    int agreeing = 0;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < lifts; ++i)
        if (turaev_bracket(lift_to_star(p, rng())) == oracle) ++agreeing;
    std::cout << "state-sum: " << state_sum.render() << '\n';
    std::cout << "recursive: " << oracle.render() << '\n';
    std::cout << "random lifts agreeing: " << agreeing << "/" << lifts << '\n';
    match = match && agreeing == lifts;
    std::cout << "result: " << (match ? "MATCH" : "MISMATCH") << '\n';
    json report{{"command", "oracle-check"},
                {"file", file},
                {"state_sum", state_sum.render()},
                {"recursive", oracle.render()},
                {"lifts", lifts},
                {"agreeing", agreeing},
                {"match", match}};
    write_report(report_path, report);
    return match ? kExitOk : kExitDomain;
}

int cmd_functor(const std::string& file, const std::string& target_text,
                const std::string& reps_csv, const std::string& report_path) {
    const Phrase p = load_phrase(file);
    const OrbitClass target = orbit_class_from_string(target_text);
    if (auto witness = p.alphabet().commuting_witness())
        throw DomainError("tau and nu do not commute at symbol " +
                          p.alphabet().name(*witness));
    OrbitDecomposition dec;
    if (reps_csv.empty()) {
        dec = decompose_orbits(p.alphabet());
    } else {
        const auto set = parse_symbol_set(p.alphabet(), reps_csv);
        dec = decompose_orbits(p.alphabet(),
                               std::vector<Symbol>(set.begin(), set.end()));
    }
    const Phrase image = functor_apply(p, target, dec);
    const std::string doc = render_phrase_document(image);
    std::cout << doc;
    std::cout << "# representatives: " << symbols_text(p.alphabet(), dec.representatives)
              << '\n';
    json report{{"command", "functor"},
                {"file", file},
                {"target", target_text},
                {"document", doc},
                {"representatives", symbols_text(p.alphabet(), dec.representatives)}};
    write_report(report_path, report);
    return kExitOk;
}

int cmd_project(const std::string& file, const std::string& l_csv,
                const std::string& report_path) {
    const Phrase p = load_phrase(file);
    const auto L = parse_symbol_set(p.alphabet(), l_csv);
    const Phrase image = u_l_project(p, L);
    const std::string doc = render_phrase_document(image);
    std::cout << doc;
    std::cout << "# L: " << symbols_text(p.alphabet(), L) << '\n';
    std::cout << "# crs: " << symbols_text(p.alphabet(), tau_representatives(p.alphabet()))
              << '\n';
    json report{{"command", "project"},
                {"file", file},
                {"L", symbols_text(p.alphabet(), L)},
                {"document", doc}};
    write_report(report_path, report);
    return kExitOk;
}

int cmd_equiv(const std::string& file1, const std::string& file2, int max_letters,
              int max_depth, const std::string& moves_csv, const std::string& report_path) {
    const Phrase p1 = load_phrase(file1);
    const Phrase p2 = load_phrase(file2);
    if (!(p1.alphabet() == p2.alphabet()))
        throw UsageError("the two documents declare different alphabets");
    EquivOptions opt;
    opt.max_letters = max_letters > 0 ? max_letters
                                      : std::max(p1.letter_count(), p2.letter_count()) + 2;
    opt.max_depth = max_depth;
    if (!moves_csv.empty()) opt.allowed = parse_move_set(moves_csv);
    const EquivResult res = equiv_search(p1, p2, opt);
    json report{{"command", "equiv"},
                {"files", {file1, file2}},
                {"max_letters", opt.max_letters},
                {"max_depth", opt.max_depth},
                {"expanded", res.stats.expanded}};
    if (res.verdict == EquivResult::Verdict::Equivalent) {
        std::cout << "Equivalent\n";
        json cert = json::array();
        for (const auto& m : res.certificate) {
            const std::string line = to_string(m, p1.alphabet());
            std::cout << line << '\n';
            cert.push_back(line);
        }
        report["verdict"] = "Equivalent";
        report["certificate"] = cert;
        write_report(report_path, report);
        return kExitOk;
    }
    std::cout << "Unknown\n";
    std::cout << "nodes expanded: " << res.stats.expanded << '\n';
    std::cout << "depth bound hit: " << (res.stats.depth_bound_hit ? "yes" : "no") << '\n';
    report["verdict"] = "Unknown";
    write_report(report_path, report);
    return kExitDomain;
}

int cmd_fuzz(const std::string& file, int steps, std::uint64_t seed,
             const std::string& check_text, const std::string& moves_csv, int growth_budget,
             const std::string& report_path) {
    const Phrase p = load_phrase(file);
    if (p.component_count() == 0)
        throw DomainError("fuzz requires a phrase with at least one component");

    RouteSpec check;
    std::set<MoveKind> allowed;
    if (check_text == "jones") {
        check.route.kind = JonesRoute::Kind::Direct;
        check.text = "jones";
        allowed = with_structural(kHomotopyMoves);
    } else if (check_text == "f1") {
        check.route.kind = JonesRoute::Kind::F1;
        check.text = "f1";
        allowed = with_structural(kHomotopyMoves);
    } else if (check_text.rfind("ul=", 0) == 0) {
        check.route.kind = JonesRoute::Kind::UL;
        check.route.L = parse_symbol_set(p.alphabet(), check_text.substr(3));
        check.text = check_text;
        allowed = kHomotopyMoves;  // the U_L theorem speaks about Delta moves
    } else {
        throw UsageError("unknown check '" + check_text + "' (jones | ul=<syms> | f1)");
    }
    if (!moves_csv.empty()) allowed = parse_move_set(moves_csv);

    const LaurentPoly before = jones_general(p, check.route);
    const WalkResult walk = random_walk(p, steps, seed, allowed, growth_budget);
    const LaurentPoly after = jones_general(walk.phrase, check.route);
    const bool unchanged = before == after;

    std::cout << "walk: " << walk.certificate.size() << " move(s), seed " << seed << '\n';
    json cert = json::array();
    for (const auto& m : walk.certificate) {
        const std::string line = to_string(m, p.alphabet());
        std::cout << line << '\n';
        cert.push_back(line);
    }
    std::cout << "check: " << check.text << '\n';
    std::cout << "before: " << before.render() << '\n';
    std::cout << "after:  " << after.render() << '\n';
    std::cout << "result: " << (unchanged ? "UNCHANGED" : "CHANGED") << '\n';
    json report{{"command", "fuzz"},        {"file", file},
                {"seed", seed},             {"check", check.text},
                {"certificate", cert},      {"before", before.render()},
                {"after", after.render()},  {"unchanged", unchanged}};
    write_report(report_path, report);
    return unchanged ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nanoword: homotopy calculus and Jones polynomials of Gauss phrases"};
    app.require_subcommand(1);

    std::string file, file2, report_path;
    std::string route = "direct";
    std::string target, reps, l_csv, moves_csv;
    std::string check = "jones";
    bool generic = false;
    int max_letters = 0;
    int max_depth = 10;
    int steps = 10;
    int lifts = 16;
    int growth_budget = 2;
    std::uint64_t seed = 1;

    auto add_report = [&report_path](CLI::App* cmd) {
        cmd->add_option("--report", report_path, "write a JSON report to this path");
    };

    auto* validate = app.add_subcommand("validate", "parse and check the Gauss condition");
    validate->add_option("file", file)->required();
    add_report(validate);

    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a phrase");
    jones_cmd->add_option("file", file)->required();
    jones_cmd->add_option("--route", route, "direct | UL=<syms> | F1 | Fstar");
    add_report(jones_cmd);

    auto* bracket = app.add_subcommand("bracket", "Kauffman-style bracket of a pseudolink");
    bracket->add_option("file", file)->required();
    bracket->add_flag("--generic", generic, "print the Z[t,u,d] state sum");
    add_report(bracket);

    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare the state sum with the recursive bracket");
    oracle->add_option("file", file)->required();
    oracle->add_option("--lifts", lifts, "number of random lifts to try");
    oracle->add_option("--seed", seed, "lift seed");
    add_report(oracle);

    auto* functor = app.add_subcommand("functor", "apply a category functor");
    functor->add_option("file", file)->required();
    functor->add_option("--target", target, "star | 0 | 1 | 2 | G")->required();
    functor->add_option("--representatives", reps, "comma-separated representative system");
    add_report(functor);

    auto* project = app.add_subcommand("project", "sign projection onto pseudolinks");
    project->add_option("file", file)->required();
    project->add_option("--L", l_csv, "comma-separated subset of crs(alpha/tau)");
    add_report(project);

    auto* equiv = app.add_subcommand("equiv", "bounded homotopy equivalence search");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();
    equiv->add_option("--max-letters", max_letters, "letter bound (default: max+2)");
    equiv->add_option("--max-depth", max_depth, "total search depth");
    equiv->add_option("--moves", moves_csv, "comma-separated move kinds");
    add_report(equiv);

    auto* fuzz = app.add_subcommand("fuzz", "random walk plus invariant recheck");
    fuzz->add_option("file", file)->required();
    fuzz->add_option("--moves", steps, "walk length");
    fuzz->add_option("--seed", seed, "walk seed");
    fuzz->add_option("--check", check, "jones | ul=<syms> | f1");
    fuzz->add_option("--move-kinds", moves_csv, "override the allowed move kinds");
    fuzz->add_option("--growth-budget", growth_budget, "net fresh-letter budget");
    add_report(fuzz);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, report_path);
        if (jones_cmd->parsed()) return cmd_jones(file, route, report_path);
        if (bracket->parsed()) return cmd_bracket(file, generic, report_path);
        if (oracle->parsed()) return cmd_oracle_check(file, lifts, seed, report_path);
        if (functor->parsed()) return cmd_functor(file, target, reps, report_path);
        if (project->parsed()) return cmd_project(file, l_csv, report_path);
        if (equiv->parsed())
            return cmd_equiv(file, file2, max_letters, max_depth, moves_csv, report_path);
        if (fuzz->parsed())
            return cmd_fuzz(file, steps, seed, check, moves_csv, growth_budget, report_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
