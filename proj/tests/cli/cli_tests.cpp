// End-to-end checks of the command line tool: happy paths plus the
// category-coded exit statuses.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "porter/io.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "[PASS]" : "[FAIL]", what.c_str());
    if (!ok) ++failures;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(PORTER_CLI_PATH) + " " + args +
                            " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    const fs::path tmp = fs::temp_directory_path() /
                         ("porter-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(tmp);

    const std::string inst = (tmp / "inst.json").string();
    const std::string sol = (tmp / "sol.json").string();
    const std::string svg = (tmp / "tour.svg").string();

    check(run_cli("gen --n 6 --seed 3 --out " + inst) == 0, "gen exits 0");
    check(fs::exists(inst), "gen writes the instance file");

    check(run_cli("solve " + inst + " --seed 1 --out " + sol) == 0, "solve exits 0");
    check(run_cli("verify " + inst + " " + sol) == 0, "verify accepts the solution");
    check(run_cli("oracle " + inst) == 0, "oracle exits 0 at n=6");
    check(run_cli("plot " + inst + " " + sol + " --out " + svg) == 0, "plot exits 0");
    check(slurp(svg).rfind("<svg", 0) == 0, "plot writes an svg document");

    // Tampered solution: sequence no longer starts at the depot.
    {
        porter::Solution s = porter::read_solution(sol);
        std::swap(s.sequence.order[0], s.sequence.order[1]);
        porter::write_solution(s, tmp / "bad.json", "tampered");
    }
    check(run_cli("verify " + inst + " " + (tmp / "bad.json").string()) == 3,
          "verify exits 3 on an infeasible solution");

    {
        std::ofstream out(tmp / "garbage.json");
        out << "not json";
    }
    check(run_cli("solve " + (tmp / "garbage.json").string()) == 2,
          "solve exits 2 on a malformed file");

    const std::string big = (tmp / "big.json").string();
    check(run_cli("gen --n 8 --seed 1 --out " + big) == 0, "gen handles n=8");
    check(run_cli("oracle " + big) == 4, "oracle exits 4 beyond the guard");

    const std::string csv_a = (tmp / "bench-a.csv").string();
    const std::string csv_b = (tmp / "bench-b.csv").string();
    const std::string bench_args = "bench --n 4,6 --count 1 --repeats 2 --seed 5";
    check(run_cli(bench_args + " --out " + csv_a) == 0, "bench exits 0");
    check(run_cli(bench_args + " --threads 1 --out " + csv_b) == 0,
          "bench exits 0 single-threaded");
    check(!slurp(csv_a).empty() && slurp(csv_a) == slurp(csv_b),
          "bench CSV bytes are schedule-independent");

    check(run_cli("bench --repeats 2") == 1, "bench without inputs exits 1");

    std::error_code ec;
    fs::remove_all(tmp, ec);

    if (failures == 0) {
        std::printf("all cli checks passed\n");
        return 0;
    }
    std::printf("%d cli check(s) failed\n", failures);
    return 1;
}
