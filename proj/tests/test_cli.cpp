// End-to-end checks of the command-line front end. argv[1] is the path to
// the binary under test; everything runs through /bin/sh in a scratch
// directory so the exit codes and file outputs can be inspected.
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define CHECK(cond)                                                            \
    do {                                                                       \
        if (!(cond)) {                                                         \
            ++g_failures;                                                      \
            std::cerr << "FAILED at line " << __LINE__ << ": " #cond "\n";     \
        }                                                                      \
    } while (0)

int run(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    if (rc == -1)
        return -1;
    if (WIFEXITED(rc))
        return WEXITSTATUS(rc);
    return -2;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli-binary>\n";
        return 1;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    fs::path scratch = fs::temp_directory_path() /
                       ("riccati_cli_" + std::to_string(::getpid()));
    fs::create_directories(scratch);
    auto at = [&](const char* name) { return (scratch / name).string(); };

    // bounded simulation: clean exit, well-formed CSV, correct midpoint
    {
        std::string csv = at("bounded.csv");
        int rc = run(cli + " simulate --system cubic --E -1 --t-end 10" +
                     " --samples 101 --out " + csv + " > " + at("so.txt"));
        CHECK(rc == 0);
        auto rows = lines_of(slurp(csv));
        CHECK(rows.size() == 102);
        CHECK(!rows.empty() && rows[0] == "t,x,v");
        double best_dt = 1e30, x_at_1 = 1e30;
        for (size_t i = 1; i < rows.size(); ++i) {
            double t, x, v;
            if (std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &t, &x, &v) == 3 &&
                std::abs(t - 1.0) < best_dt) {
                best_dt = std::abs(t - 1.0);
                x_at_1 = x;
            }
        }
        CHECK(best_dt <= 1e-9);
        CHECK(std::abs(x_at_1 - 1.0) <= 1e-6);
        CHECK(slurp(at("so.txt")).find("status: Completed") != std::string::npos);
    }

    // singular orbit: exit code 2 and an event-time report
    {
        int rc = run(cli + " simulate --system cubic --E 1 --t-end 2 > " +
                     at("sing.csv") + " 2> " + at("sing.err"));
        CHECK(rc == 2);
        std::string err = slurp(at("sing.err"));
        CHECK(err.find("status: Singular") != std::string::npos);
        CHECK(err.find("event_time:") != std::string::npos);
    }

    // verification: green suite exits 0 and prints the JSON report
    {
        int rc = run(cli + " verify --suite energy > " + at("energy.json"));
        CHECK(rc == 0);
        std::string json = slurp(at("energy.json"));
        CHECK(json.find("\"suite\"") != std::string::npos);
        CHECK(json.find("\"energy\"") != std::string::npos);
        CHECK(json.find("\"all_pass\":true") != std::string::npos);
    }

    // unknown suite and unknown system are usage errors
    CHECK(run(cli + " verify --suite nope > /dev/null 2>&1") == 1);
    CHECK(run(cli + " simulate --system bogus --E -1 > /dev/null 2>&1") == 1);

    // a fixed seed in the environment makes verification reproducible
    {
        std::string seeded = "RICCATI_DYN_SEED=777 " + cli +
                             " verify --suite superint-oscillator --out ";
        CHECK(run(seeded + at("seed_a.json") + " > /dev/null") == 0);
        CHECK(run(seeded + at("seed_b.json") + " > /dev/null") == 0);
        std::string a = slurp(at("seed_a.json"));
        CHECK(!a.empty());
        CHECK(a == slurp(at("seed_b.json")));
    }

    // portrait with an empty grid still writes a well-formed index
    {
        std::string dir = at("portrait");
        int rc = run(cli + " portrait --system cubic --density 0 --out " + dir +
                     " > /dev/null");
        CHECK(rc == 0);
        auto rows = lines_of(slurp(fs::path(dir) / "index.csv"));
        CHECK(rows.size() == 1);
        CHECK(!rows.empty() && rows[0] == "file,x0,v0,status,event_time");
    }

    // a populated portrait indexes one trajectory per grid cell
    {
        std::string dir = at("portrait3");
        int rc = run(cli + " portrait --system cubic --density 3 --t-end 1" +
                     " --out " + dir + " > /dev/null");
        CHECK(rc == 0);
        auto rows = lines_of(slurp(fs::path(dir) / "index.csv"));
        CHECK(rows.size() == 10); // header + 3 x 3 seeds
    }

    // the oscillator-pair closed curve returns to its start after a period
    {
        std::string csv = at("liss.csv");
        int rc = run(cli + " lissajous --system 2d-oscillator --out " + csv +
                     " > /dev/null");
        CHECK(rc == 0);
        auto rows = lines_of(slurp(csv));
        CHECK(rows.size() >= 3);
        CHECK(!rows.empty() && rows[0] == "t,x,v,y,vy");
        double a[5] = {0, 0, 0, 0, 0}, b[5] = {0, 0, 0, 0, 0};
        CHECK(std::sscanf(rows[1].c_str(), "%lf,%lf,%lf,%lf,%lf", &a[0], &a[1],
                          &a[2], &a[3], &a[4]) == 5);
        CHECK(std::sscanf(rows.back().c_str(), "%lf,%lf,%lf,%lf,%lf", &b[0],
                          &b[1], &b[2], &b[3], &b[4]) == 5);
        for (int i = 1; i < 5; ++i)
            CHECK(std::abs(a[i] - b[i]) <= 1e-4);
    }

    // lissajous rejects one-degree systems
    CHECK(run(cli + " lissajous --system cubic > /dev/null 2>&1") == 1);

    std::error_code ec;
    fs::remove_all(scratch, ec);

    if (g_failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cerr << "cli: " << g_failures << " checks failed\n";
    return 1;
}
