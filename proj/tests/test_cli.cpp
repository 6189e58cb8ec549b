#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nanoword/parser.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() /
                 ("nanoword_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path write_doc(const std::string& name, const std::string& text) {
    const fs::path p = work_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
}

RunResult run(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd = std::string(NANOWORD_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

const std::string kAbab = "alphabet alpha1\nphrase A:+1 B:+1 A B\n";
const std::string kEmptyWord = "alphabet alpha1\nphrase\n";

}  // namespace

TEST_CASE("validate reports letters and components") {
    const auto doc = write_doc("abab.nw", kAbab);
    const auto r = run("validate " + doc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "OK: 2 letters, 1 component\n");
}

TEST_CASE("validate reports Gauss violations with counts") {
    const auto doc = write_doc("gauss.nw", "alphabet alpha1\nphrase A:+1 B:+1 A\n");
    const auto r = run("validate " + doc.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("B occurs 1 time") != std::string::npos);
}

TEST_CASE("unreadable files exit with usage code") {
    const auto r = run("validate " + (work_dir() / "missing.nw").string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("jones prints the polynomial first") {
    const auto doc = write_doc("abab.nw", kAbab);
    const auto r = run("jones " + doc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("-t^-10 + t^-6 + t^-4\n", 0) == 0);
    CHECK(r.out.find("w: 2") != std::string::npos);

    const auto e = run("jones " + write_doc("empty.nw", kEmptyWord).string());
    CHECK(e.exit_code == 0);
    CHECK(e.out.rfind("1\n", 0) == 0);
}

TEST_CASE("jones UL route on a quasilink collapses to 1") {
    const auto doc = write_doc("a2.nw", "alphabet alpha2\nphrase A:c B:d A B\n");
    const auto r = run("jones " + doc.string() + " --route UL=c");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("1\n", 0) == 0);
}

TEST_CASE("route and alphabet mismatches are domain errors") {
    const auto doc = write_doc("a2.nw", "alphabet alpha2\nphrase A:c B:d A B\n");
    const auto r = run("jones " + doc.string() + " --route direct");
    CHECK(r.exit_code == 1);
}

TEST_CASE("functor output re-parses to the image phrase") {
    const auto doc = write_doc(
        "mixed.nw", "alphabet 1 -1 g\ntau 1:-1\nS knotlike\nphrase A:1 G:g A G\n");
    const auto r = run("functor " + doc.string() + " --target G");
    CHECK(r.exit_code == 0);
    const auto parsed = nanoword::parse_phrase_document(r.out);
    CHECK(parsed.alphabet() == *nanoword::Alphabet::alphaG());
    CHECK(parsed.letter_count() == 1);
    CHECK(r.out.find("# representatives: 1 g") != std::string::npos);

    const auto r1 = run("functor " + doc.string() + " --target 1");
    const auto parsed1 = nanoword::parse_phrase_document(r1.out);
    CHECK(nanoword::canonicalize(parsed1) ==
          nanoword::canonicalize(nanoword::parse_phrase_document(
              "alphabet alpha1\nphrase A:1 A\n")));
}

TEST_CASE("functor rejects non-commuting involutions naming a witness") {
    const auto doc = write_doc("noncomm.nw",
                               "alphabet x y z\ntau x:y\nnu y:z\nphrase A:x A\n");
    const auto r = run("functor " + doc.string() + " --target 1");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("do not commute") != std::string::npos);
    CHECK(r.err.find("x") != std::string::npos);
}

TEST_CASE("equiv: certificate, unknown, and alphabet mismatch") {
    const auto aa = write_doc("aa.nw", "alphabet alpha1\nphrase A:1 A\n");
    const auto empty = write_doc("empty.nw", kEmptyWord);
    const auto r = run("equiv " + aa.string() + " " + empty.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Equivalent\nH1 @ 0\n");

    const auto abab = write_doc("abab.nw", kAbab);
    const auto u = run("equiv " + abab.string() + " " + empty.string());
    CHECK(u.exit_code == 1);
    CHECK(u.out.rfind("Unknown\n", 0) == 0);

    const auto a0 = write_doc("a0.nw", "alphabet alpha0\nphrase A:a A\n");
    const auto m = run("equiv " + aa.string() + " " + a0.string());
    CHECK(m.exit_code == 2);
}

TEST_CASE("fuzz is deterministic for a fixed seed") {
    const auto doc = write_doc("abab.nw", kAbab);
    const auto a = run("fuzz " + doc.string() + " --moves 8 --seed 12345");
    const auto b = run("fuzz " + doc.string() + " --moves 8 --seed 12345");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("result: UNCHANGED") != std::string::npos);
}

TEST_CASE("fuzz ul-check over a quasilink with diagonal moves") {
    const auto doc = write_doc("a2d.nw",
                               "alphabet c d\nnu c:d\nS diagonal\nphrase A:c B:d A B\n");
    const auto r = run("fuzz " + doc.string() + " --moves 6 --seed 7 --check ul=c");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: UNCHANGED") != std::string::npos);
}

TEST_CASE("stdout is byte-identical across runs") {
    const auto doc = write_doc("abab.nw", kAbab);
    for (const std::string& cmd :
         {std::string("jones "), std::string("bracket --generic "),
          std::string("oracle-check ")}) {
        const auto a = run(cmd + doc.string());
        const auto b = run(cmd + doc.string());
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("reports mirror stdout fields") {
    const auto doc = write_doc("abab.nw", kAbab);
    const auto report = work_dir() / "report.json";
    const auto r = run("jones " + doc.string() + " --report " + report.string());
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(slurp(report));
    CHECK(parsed["command"] == "jones");
    CHECK(parsed["polynomial"] == "-t^-10 + t^-6 + t^-4");
    CHECK(parsed["w"] == 2);
}
