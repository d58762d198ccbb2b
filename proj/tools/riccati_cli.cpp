/// Command-line front end for the Riccati dynamics library.
///
/// Subcommands:
///   simulate   -- integrate one system and emit a trajectory CSV
///   verify     -- run a named verification suite, print a JSON report
///   portrait   -- sweep a grid of phase-plane seeds, one CSV per seed
///   lissajous  -- planar (x, y) curves for the two-degree systems
#include "riccati/riccati.h"

#include "CLI11.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

using SystemPtr = std::unique_ptr<rcc_system, decltype(&rcc_system_free)>;
using TrajPtr = std::unique_ptr<rcc_trajectory, decltype(&rcc_trajectory_free)>;

[[noreturn]] void fail_usage(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    std::exit(1);
}

void check_ok(rcc_status status) {
    if (status != RCC_OK)
        fail_usage(std::string(rcc_last_error()) + " [" +
                   rcc_status_name(status) + "]");
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

FILE* open_out(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        fail_usage("cannot open output file: " + path);
    return f;
}

struct RunOpts {
    std::string system = "cubic";
    double k = 1.0, k1 = 1.0, k2 = 1.0;
    double w = 1.0, w0 = 1.0;
    int n1 = 1, n2 = 1;
    double c0 = 0.0, c1 = 0.0, c2 = 1.0;
    double dc0 = 0.0, dc1 = 0.0, dc2 = 0.0;
    double E = 0.0, E1 = 0.0, E2 = 0.0;
    double phi = 0.0, phi1 = 0.0, phi2 = 0.0;
    double x0 = 0.0, v0 = 0.0, y0 = 0.0, vy0 = 0.0;
    std::string branch = "minus";
    double t_end = 10.0;
    double T = 50.0;
    double rtol = 0.0, atol = 0.0;
    int samples = 0;
    std::string out, svg;
    double xmin = -1.0, xmax = 1.0, vmin = -1.0, vmax = 1.0;
    int density = 5;
};

struct VerifyOpts {
    std::string suite;
    int n1 = 1, n2 = 1;
    std::string out;
};

void add_system_flags(CLI::App* cmd, RunOpts& o) {
    cmd->add_option("--system", o.system,
                    "cubic|oscillator|general-u|2d-cubic|2d-oscillator")
        ->check(CLI::IsMember(
            {"cubic", "oscillator", "general-u", "2d-cubic", "2d-oscillator"}));
    cmd->add_option("--k", o.k, "nonlinearity constant (one-degree systems)");
    cmd->add_option("--k1", o.k1, "x-axis nonlinearity constant");
    cmd->add_option("--k2", o.k2, "y-axis nonlinearity constant");
    cmd->add_option("--w", o.w, "oscillator frequency");
    cmd->add_option("--w0", o.w0, "base frequency; axis j runs at nj*w0");
    cmd->add_option("--n1", o.n1, "x-axis frequency multiple");
    cmd->add_option("--n2", o.n2, "y-axis frequency multiple");
    cmd->add_option("--c0", o.c0, "U coefficient: constant term");
    cmd->add_option("--c1", o.c1, "U coefficient: linear term");
    cmd->add_option("--c2", o.c2, "U coefficient: quadratic term");
    cmd->add_option("--dc0", o.dc0, "time drift of c0");
    cmd->add_option("--dc1", o.dc1, "time drift of c1");
    cmd->add_option("--dc2", o.dc2, "time drift of c2");
}

void add_state_flags(CLI::App* cmd, RunOpts& o) {
    cmd->add_option("--E", o.E, "energy parametrization of the start state");
    cmd->add_option("--E1", o.E1, "x-axis energy");
    cmd->add_option("--E2", o.E2, "y-axis energy");
    cmd->add_option("--phi", o.phi, "oscillator phase");
    cmd->add_option("--phi1", o.phi1, "x-axis oscillator phase");
    cmd->add_option("--phi2", o.phi2, "y-axis oscillator phase");
    cmd->add_option("--x0", o.x0, "initial position");
    cmd->add_option("--v0", o.v0, "initial velocity (with --x0 bypasses --E)");
    cmd->add_option("--y0", o.y0, "initial y position");
    cmd->add_option("--vy0", o.vy0, "initial y velocity");
    cmd->add_option("--branch", o.branch,
                    "velocity branch for --E with general-u")
        ->check(CLI::IsMember({"plus", "minus"}));
}

void add_tol_flags(CLI::App* cmd, RunOpts& o) {
    cmd->add_option("--rtol", o.rtol, "relative tolerance (0 = default)");
    cmd->add_option("--atol", o.atol, "absolute tolerance (0 = default)");
}

bool is_two_dof(const std::string& system) {
    return system == "2d-cubic" || system == "2d-oscillator";
}

SystemPtr make_system(const RunOpts& o) {
    rcc_system* raw = nullptr;
    if (o.system == "cubic") {
        check_ok(rcc_system_cubic(o.k, &raw));
    } else if (o.system == "oscillator") {
        check_ok(rcc_system_oscillator(o.k, o.w, &raw));
    } else if (o.system == "general-u") {
        const double c[3] = {o.c0, o.c1, o.c2};
        const double dc[3] = {o.dc0, o.dc1, o.dc2};
        check_ok(rcc_system_general_u(o.k, c, dc, &raw));
    } else if (o.system == "2d-cubic") {
        rcc_system *ax = nullptr, *ay = nullptr;
        check_ok(rcc_system_cubic(o.k1, &ax));
        check_ok(rcc_system_cubic(o.k2, &ay));
        rcc_status st = rcc_system_product(ax, ay, &raw);
        rcc_system_free(ax);
        rcc_system_free(ay);
        check_ok(st);
    } else if (o.system == "2d-oscillator") {
        rcc_system *ax = nullptr, *ay = nullptr;
        check_ok(rcc_system_oscillator(o.k1, o.n1 * o.w0, &ax));
        check_ok(rcc_system_oscillator(o.k2, o.n2 * o.w0, &ay));
        rcc_status st = rcc_system_product(ax, ay, &raw);
        rcc_system_free(ax);
        rcc_system_free(ay);
        check_ok(st);
    } else {
        fail_usage("unknown system: " + o.system);
    }
    return SystemPtr(raw, &rcc_system_free);
}

void resolve_initial_1d(const CLI::App* cmd, const RunOpts& o, rcc_system* sys,
                        double q[2], double v[2]) {
    if (cmd->count("--v0")) {
        q[0] = o.x0;
        v[0] = o.v0;
        return;
    }
    if (!cmd->count("--E"))
        fail_usage("provide --E (optionally --phi/--x0/--branch) or an "
                   "explicit --x0 --v0 state");
    if (o.system == "cubic") {
        check_ok(rcc_cubic_solution(o.k, o.E, 0.0, &q[0], &v[0]));
    } else if (o.system == "oscillator") {
        check_ok(rcc_oscillator_solution(o.k, o.w, o.E, o.phi, 0.0, &q[0], &v[0]));
    } else {
        // general-u: pick the velocity branch through x0 at the given energy
        double vp = 0.0, vm = 0.0;
        check_ok(rcc_velocity_branches(sys, o.x0, o.E, &vp, &vm));
        q[0] = o.x0;
        v[0] = (o.branch == "plus") ? vp : vm;
    }
}

void resolve_initial_2d(const CLI::App* cmd, const RunOpts& o, double q[2],
                        double v[2]) {
    if (cmd->count("--v0") && cmd->count("--vy0")) {
        q[0] = o.x0;
        v[0] = o.v0;
        q[1] = o.y0;
        v[1] = o.vy0;
        return;
    }
    const bool cubic2 = o.system == "2d-cubic";
    const double e1 = cmd->count("--E1") ? o.E1 : (cubic2 ? -1.0 : 0.2);
    const double e2 = cmd->count("--E2") ? o.E2 : (cubic2 ? -5.0 : 0.2);
    if (cubic2) {
        check_ok(rcc_cubic_solution(o.k1, e1, 0.0, &q[0], &v[0]));
        check_ok(rcc_cubic_solution(o.k2, e2, 0.0, &q[1], &v[1]));
    } else {
        check_ok(rcc_oscillator_solution(o.k1, o.n1 * o.w0, e1, o.phi1, 0.0,
                                         &q[0], &v[0]));
        check_ok(rcc_oscillator_solution(o.k2, o.n2 * o.w0, e2, o.phi2, 0.0,
                                         &q[1], &v[1]));
    }
}

rcc_integrator_config make_config(const RunOpts& o) {
    rcc_integrator_config cfg;
    rcc_integrator_config_init(&cfg);
    if (o.rtol > 0.0)
        cfg.rtol = o.rtol;
    if (o.atol > 0.0)
        cfg.atol = o.atol;
    return cfg;
}

struct Row {
    double t = 0.0;
    double q[2] = {0.0, 0.0};
    double v[2] = {0.0, 0.0};
};

std::vector<Row> collect_nodes(rcc_trajectory* traj) {
    size_t n = 0;
    check_ok(rcc_trajectory_size(traj, &n));
    std::vector<Row> rows(n);
    for (size_t i = 0; i < n; ++i)
        check_ok(rcc_trajectory_node(traj, i, &rows[i].t, rows[i].q, rows[i].v));
    return rows;
}

std::vector<Row> sample_uniform(rcc_trajectory* traj, int samples) {
    size_t n = 0;
    check_ok(rcc_trajectory_size(traj, &n));
    if (n < 2 || samples < 2)
        return collect_nodes(traj);
    double t0 = 0.0, t1 = 0.0;
    check_ok(rcc_trajectory_node(traj, 0, &t0, nullptr, nullptr));
    check_ok(rcc_trajectory_node(traj, n - 1, &t1, nullptr, nullptr));
    std::vector<Row> rows(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        Row& r = rows[static_cast<size_t>(i)];
        r.t = t0 + (t1 - t0) * static_cast<double>(i) / (samples - 1);
        check_ok(rcc_trajectory_eval(traj, r.t, r.q, r.v));
    }
    return rows;
}

void write_csv(FILE* f, const std::vector<Row>& rows, int dim) {
    std::fputs(dim == 1 ? "t,x,v\n" : "t,x,v,y,vy\n", f);
    for (const Row& r : rows) {
        if (dim == 1)
            std::fprintf(f, "%s,%s,%s\n", g17(r.t).c_str(), g17(r.q[0]).c_str(),
                         g17(r.v[0]).c_str());
        else
            std::fprintf(f, "%s,%s,%s,%s,%s\n", g17(r.t).c_str(),
                         g17(r.q[0]).c_str(), g17(r.v[0]).c_str(),
                         g17(r.q[1]).c_str(), g17(r.v[1]).c_str());
    }
}

/// Minimal static polyline with an autoscaled data window; convenience output,
/// never a test surface.
void write_svg(const std::string& path,
               const std::vector<std::array<double, 2>>& pts) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!pts.empty()) {
        xmin = xmax = pts[0][0];
        ymin = ymax = pts[0][1];
        for (const auto& p : pts) {
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    }
    if (xmax - xmin <= 0.0) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (ymax - ymin <= 0.0) {
        ymin -= 1.0;
        ymax += 1.0;
    }
    FILE* f = open_out(path);
    std::fprintf(f, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
                    "height=\"480\" viewBox=\"0 0 640 480\">\n");
    std::fprintf(f, "  <rect width=\"640\" height=\"480\" fill=\"white\"/>\n");
    std::fprintf(f, "  <polyline fill=\"none\" stroke=\"black\" "
                    "stroke-width=\"1\" points=\"");
    for (const auto& p : pts) {
        double px = 20.0 + 600.0 * (p[0] - xmin) / (xmax - xmin);
        double py = 460.0 - 440.0 * (p[1] - ymin) / (ymax - ymin);
        std::fprintf(f, "%.6g,%.6g ", px, py);
    }
    std::fprintf(f, "\"/>\n</svg>\n");
    std::fclose(f);
}

const char* status_name(rcc_trajectory* traj) {
    rcc_traj_status s = RCC_TRAJ_COMPLETED;
    check_ok(rcc_trajectory_status(traj, &s));
    return rcc_traj_status_name(s);
}

bool completed(rcc_trajectory* traj) {
    rcc_traj_status s = RCC_TRAJ_COMPLETED;
    check_ok(rcc_trajectory_status(traj, &s));
    return s == RCC_TRAJ_COMPLETED;
}

void print_status(FILE* dst, rcc_trajectory* traj) {
    std::fprintf(dst, "status: %s\n", status_name(traj));
    if (!completed(traj)) {
        double et = 0.0;
        check_ok(rcc_trajectory_event_time(traj, &et));
        std::fprintf(dst, "event_time: %s\n", g17(et).c_str());
    }
}

int run_simulate(const CLI::App* cmd, const RunOpts& o) {
    SystemPtr sys = make_system(o);
    int dim = 0;
    check_ok(rcc_system_dim(sys.get(), &dim));
    double q[2] = {0.0, 0.0}, v[2] = {0.0, 0.0};
    if (dim == 1)
        resolve_initial_1d(cmd, o, sys.get(), q, v);
    else
        resolve_initial_2d(cmd, o, q, v);

    rcc_integrator_config cfg = make_config(o);
    rcc_trajectory* raw = nullptr;
    check_ok(rcc_integrate(sys.get(), 0.0, q, v, o.t_end, &cfg, &raw));
    TrajPtr traj(raw, &rcc_trajectory_free);

    auto rows = o.samples > 0 ? sample_uniform(raw, o.samples)
                              : collect_nodes(raw);
    if (o.out.empty()) {
        write_csv(stdout, rows, dim);
        print_status(stderr, raw);
    } else {
        FILE* f = open_out(o.out);
        write_csv(f, rows, dim);
        std::fclose(f);
        print_status(stdout, raw);
    }
    if (!o.svg.empty()) {
        std::vector<std::array<double, 2>> pts;
        pts.reserve(rows.size());
        for (const Row& r : rows)
            pts.push_back({r.t, r.q[0]});
        write_svg(o.svg, pts);
    }
    return completed(raw) ? 0 : 2;
}

int run_verify(const VerifyOpts& o) {
    rcc_verify_options opts;
    rcc_verify_options_init(&opts);
    if (const char* seed = std::getenv("RICCATI_DYN_SEED"))
        opts.seed = std::strtoull(seed, nullptr, 10);
    opts.n1 = o.n1;
    opts.n2 = o.n2;

    char* json = nullptr;
    int all_pass = 0;
    rcc_status st = rcc_verify_run(o.suite.c_str(), &opts, &json, &all_pass);
    if (st != RCC_OK) {
        std::fprintf(stderr, "error: %s [%s]\n", rcc_last_error(),
                     rcc_status_name(st));
        return 1;
    }
    std::puts(json);
    if (!o.out.empty()) {
        FILE* f = open_out(o.out);
        std::fputs(json, f);
        std::fputc('\n', f);
        std::fclose(f);
    }
    rcc_string_free(json);
    return all_pass ? 0 : 1;
}

int run_portrait(const RunOpts& o) {
    if (is_two_dof(o.system))
        fail_usage("portrait sweeps the (x, v) plane of a one-degree system");
    if (o.density < 0)
        fail_usage("--density must be nonnegative");
    SystemPtr sys = make_system(o);

    fs::path dir = o.out.empty() ? "portrait" : o.out;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        fail_usage("cannot create output directory: " + dir.string());

    FILE* index = open_out((dir / "index.csv").string());
    std::fputs("file,x0,v0,status,event_time\n", index);

    rcc_integrator_config cfg = make_config(o);
    int written = 0;
    for (int i = 0; i < o.density; ++i) {
        for (int j = 0; j < o.density; ++j) {
            // cell centers: no seed sits exactly on a grid boundary
            double x0 = o.xmin + (o.xmax - o.xmin) * (i + 0.5) / o.density;
            double v0 = o.vmin + (o.vmax - o.vmin) * (j + 0.5) / o.density;
            double q[2] = {x0, 0.0}, v[2] = {v0, 0.0};
            rcc_trajectory* raw = nullptr;
            check_ok(rcc_integrate(sys.get(), 0.0, q, v, o.t_end, &cfg, &raw));
            TrajPtr traj(raw, &rcc_trajectory_free);

            char name[32];
            std::snprintf(name, sizeof name, "traj_%04d.csv", written);
            FILE* f = open_out((dir / name).string());
            write_csv(f, collect_nodes(raw), 1);
            std::fclose(f);

            double et = 0.0;
            check_ok(rcc_trajectory_event_time(raw, &et));
            std::fprintf(index, "%s,%s,%s,%s,%s\n", name, g17(x0).c_str(),
                         g17(v0).c_str(), status_name(raw), g17(et).c_str());
            ++written;
        }
    }
    std::fclose(index);
    std::printf("portrait: %d trajectories in %s\n", written,
                dir.string().c_str());
    return 0;
}

int run_lissajous(const CLI::App* cmd, const RunOpts& o) {
    if (!is_two_dof(o.system))
        fail_usage("lissajous needs --system 2d-cubic or 2d-oscillator");
    SystemPtr sys = make_system(o);
    double q[2] = {0.0, 0.0}, v[2] = {0.0, 0.0};
    resolve_initial_2d(cmd, o, q, v);

    rcc_integrator_config cfg = make_config(o);
    std::vector<Row> rows;
    bool ok = true;
    if (o.system == "2d-cubic") {
        // symmetric window [-T, T] assembled from two runs that share t = 0
        rcc_trajectory* braw = nullptr;
        check_ok(rcc_integrate(sys.get(), 0.0, q, v, -o.T, &cfg, &braw));
        TrajPtr back(braw, &rcc_trajectory_free);
        rcc_trajectory* fraw = nullptr;
        check_ok(rcc_integrate(sys.get(), 0.0, q, v, o.T, &cfg, &fraw));
        TrajPtr fwd(fraw, &rcc_trajectory_free);

        auto brows = collect_nodes(braw);
        auto frows = collect_nodes(fraw);
        rows.assign(brows.rbegin(), brows.rend());
        rows.insert(rows.end(), frows.begin() + 1, frows.end());
        ok = completed(braw) && completed(fraw);
        print_status(o.out.empty() ? stderr : stdout, fraw);
    } else {
        rcc_trajectory* raw = nullptr;
        check_ok(rcc_integrate(sys.get(), 0.0, q, v, kTau / o.w0, &cfg, &raw));
        TrajPtr traj(raw, &rcc_trajectory_free);
        rows = collect_nodes(raw);
        ok = completed(raw);
        print_status(o.out.empty() ? stderr : stdout, raw);
    }

    if (o.out.empty()) {
        write_csv(stdout, rows, 2);
    } else {
        FILE* f = open_out(o.out);
        write_csv(f, rows, 2);
        std::fclose(f);
    }
    if (!o.svg.empty()) {
        std::vector<std::array<double, 2>> pts;
        pts.reserve(rows.size());
        for (const Row& r : rows)
            pts.push_back({r.q[0], r.q[1]});
        write_svg(o.svg, pts);
    }
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"second-order Riccati dynamics: simulation and verification"};
    app.require_subcommand(1);

    RunOpts so, po, lo;
    VerifyOpts vo;

    auto* sim = app.add_subcommand(
        "simulate", "integrate one system and write a trajectory CSV");
    add_system_flags(sim, so);
    add_state_flags(sim, so);
    add_tol_flags(sim, so);
    sim->add_option("--t-end", so.t_end, "integration end time");
    sim->add_option("--samples", so.samples,
                    "uniform sample count (0 = accepted steps)");
    sim->add_option("--out", so.out, "CSV path (default: standard output)");
    sim->add_option("--svg", so.svg, "also write an x-vs-t SVG polyline");

    auto* ver = app.add_subcommand(
        "verify", "run a verification suite and print a JSON report");
    ver->add_option("--suite", vo.suite,
                    "energy|generators|superint-dissipative|superint-oscillator"
                    "|hamiltonian|linearization|alt-lagrangian")
        ->required();
    ver->add_option("--n1", vo.n1, "x-axis frequency multiple");
    ver->add_option("--n2", vo.n2, "y-axis frequency multiple");
    ver->add_option("--out", vo.out, "also write the JSON report to this path");

    po.t_end = kTau;
    auto* por = app.add_subcommand(
        "portrait", "grid of phase-plane trajectories plus an index file");
    add_system_flags(por, po);
    add_tol_flags(por, po);
    por->add_option("--t-end", po.t_end, "integration end time per seed");
    por->add_option("--xmin", po.xmin, "grid lower x bound");
    por->add_option("--xmax", po.xmax, "grid upper x bound");
    por->add_option("--vmin", po.vmin, "grid lower v bound");
    por->add_option("--vmax", po.vmax, "grid upper v bound");
    por->add_option("--density", po.density, "seeds per axis (0 = empty grid)");
    por->add_option("--out", po.out, "output directory (default: portrait)");

    auto* lis = app.add_subcommand(
        "lissajous", "planar (x, y) curve of a two-degree system");
    add_system_flags(lis, lo);
    add_state_flags(lis, lo);
    add_tol_flags(lis, lo);
    lis->add_option("--T", lo.T, "half-width of the 2d-cubic time window");
    lis->add_option("--out", lo.out, "CSV path (default: standard output)");
    lis->add_option("--svg", lo.svg, "also write a y-vs-x SVG polyline");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (app.got_subcommand(sim))
        return run_simulate(sim, so);
    if (app.got_subcommand(ver))
        return run_verify(vo);
    if (app.got_subcommand(por))
        return run_portrait(po);
    if (app.got_subcommand(lis))
        return run_lissajous(lis, lo);
    return 1;
}
