#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "epspectra/field.hpp"
#include "epspectra/field_io.hpp"
#include "epspectra/initial_data.hpp"
#include "epspectra/littlewood_paley.hpp"
#include "epspectra/reporting.hpp"

using namespace epspectra;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("epspectra-cli-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

// run the installed binary, return its exit code, capture stdout
int run_cli(const std::string& args, const std::string& stdout_file = "/dev/null") {
    const std::string cmd = std::string(EPSPECTRA_CLI_PATH) + " " + args + " > " +
                            stdout_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("atomic_write_file creates directories and replaces content") {
    TempDir tmp;
    const auto path = tmp.file("a/b/out.txt");
    atomic_write_file(path, "first");
    CHECK(slurp(path) == "first");
    atomic_write_file(path, "second");
    CHECK(slurp(path) == "second");
    // no temp droppings left behind
    int entries = 0;
    for (const auto& e : fs::directory_iterator(fs::path(path).parent_path())) {
        (void)e;
        ++entries;
    }
    CHECK(entries == 1);
}

TEST_CASE("manifest serializes config and stays a rerunnable key=value file") {
    RunManifest m;
    m.command = "simulate";
    m.config = {{"d", "1"}, {"nx", "64"}, {"seed", "7"}};
    m.wall_seconds = 1.5;
    const auto js = m.json();
    CHECK(js.find("\"simulate\"") != std::string::npos);
    CHECK(js.find("\"nx\"") != std::string::npos);
    CHECK(js.find("\"64\"") != std::string::npos);
    CHECK(js.find("note") == std::string::npos);  // empty note is omitted
    m.note = "tripped";
    CHECK(m.json().find("tripped") != std::string::npos);

    CHECK(m.config_text() == "d=1\nnx=64\nseed=7\n");

    TempDir tmp;
    write_manifest(tmp.file("run"), m);
    CHECK(fs::exists(tmp.file("run/manifest.json")));
    CHECK(slurp(tmp.file("run/resolved.cfg")) == m.config_text());
}

TEST_CASE("simulate runs clean on zero data and writes its outputs") {
    TempDir tmp;
    const auto dir = tmp.file("zero");
    const int code = run_cli("simulate --d 1 --nx 64 --init zero --tfinal 0.25 "
                             "--dt 0.0625 --out " + dir);
    CHECK(code == 0);
    CHECK(fs::exists(dir + "/trajectory.csv"));
    CHECK(fs::exists(dir + "/state.epsf"));
    CHECK(fs::exists(dir + "/manifest.json"));
    CHECK(fs::exists(dir + "/resolved.cfg"));
    const auto traj = slurp(dir + "/trajectory.csv");
    CHECK(traj.substr(0, 2) == "t,");
    // zero data stays zero
    const auto file = read_field(dir + "/state.epsf");
    for (const auto& comp : file.components)
        for (double v : comp.samples()) CHECK(v == 0.0);
}

TEST_CASE("norms agrees with an in-process evaluation of the same file") {
    TempDir tmp;
    const PeriodicGrid g(1, 256);
    const auto f = random_bandlimited_scalar(g, 60, 0.8, 1.5, 99);
    const auto field_path = tmp.file("f.epsf");
    write_field(field_path, f);

    const auto out_txt = tmp.file("norms.txt");
    const int code = run_cli("norms --in " + field_path + " --s 1.5 --p 2 --index 2 "
                             "--kind besov", out_txt);
    CHECK(code == 0);
    std::istringstream out(slurp(out_txt));
    std::string label;
    double value = 0.0;
    out >> label >> value;
    CHECK(label == "besov");

    const auto part = DyadicPartition::build(g);
    const double want = besov_norm(f, SpaceParams::besov(1.5, 2.0, 2.0), part);
    CHECK(value == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("bad invocations exit with the configuration code") {
    CHECK(run_cli("simulate --no-such-flag") == 2);
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("norms") == 2);                        // missing required --in
    CHECK(run_cli("norms --in /does/not/exist.epsf") == 2);
    CHECK(run_cli("--help") == 0);
}

TEST_CASE("a resolved config reruns to byte-identical results") {
    TempDir tmp;
    const auto dir1 = tmp.file("one");
    const auto dir2 = tmp.file("two");
    const std::string base = "simulate --d 1 --nx 64 --init random --kmax 12 "
                             "--amplitude 0.3 --seed 21 --tfinal 0.25 --dt 0.03125";
    REQUIRE(run_cli(base + " --out " + dir1) == 0);
    REQUIRE(run_cli("simulate --config " + dir1 + "/resolved.cfg --out " + dir2) == 0);
    const auto a = slurp(dir1 + "/trajectory.csv");
    const auto b = slurp(dir2 + "/trajectory.csv");
    REQUIRE(!a.empty());
    CHECK(a == b);
    CHECK(slurp(dir1 + "/state.epsf") == slurp(dir2 + "/state.epsf"));
}

TEST_CASE("runaway gradients surface as the blow-up exit code") {
    TempDir tmp;
    const auto dir = tmp.file("steep");
    // smooth low-mode data: small initial slope, steepens past ten times it
    const int code = run_cli("simulate --d 1 --nx 256 --init random --kmax 2 "
                             "--amplitude 3.0 --decay 2.0 --seed 3 "
                             "--tfinal 10 --dt 0.002 --out " + dir);
    CHECK(code == 3);
    // the manifest still lands, carrying the guard note
    const auto manifest = slurp(dir + "/manifest.json");
    CHECK(manifest.find("guard") != std::string::npos);
}
