#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <hforge/degree.hpp>
#include <hforge/exotic.hpp>
#include <hforge/master.hpp>
#include <hforge/rng.hpp>

#include "report.hpp"
#include "suites.hpp"

using namespace hforge;
using namespace hforge::cli;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HOMOTOPY_FORGE_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 42;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "RNG seed (env HOMOTOPY_FORGE_SEED)");
    cmd->add_option("--samples", cfg.samples, "override per-check sample counts");
    cmd->add_option("--tol", cfg.tol_override, "override per-check tolerances");
    cmd->add_option("--step", cfg.step, "integrator step size");
    cmd->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    cmd->add_option("--out", cfg.out_path, "write the JSON report here");
}

int write_frames(const HomotopyHandle& h, const Vec& input, int s_steps,
                 const std::string& out) {
    std::ofstream f(out.empty() ? "frames.csv" : out);
    f << "s";
    for (int i = 0; i < input.size(); ++i) f << ",in" << i;
    const Vec first = h.eval(input, h.s0);
    for (int i = 0; i < first.size(); ++i) f << ",out" << i;
    f << ",norm_residual,seam\n";
    char buf[64];
    for (int k = 0; k < s_steps; ++k) {
        const double s = h.s0 + (h.s1 - h.s0) * k / double(s_steps - 1);
        const Vec val = h.eval(input, s);
        double norm_res = std::abs(val.norm() - 1.0);
        if (val.size() == 14) {  // frame output: two stacked columns
            norm_res = std::max(std::abs(val.head(7).norm() - 1.0),
                                std::abs(val.tail(7).norm() - 1.0));
        }
        bool seam = false;
        for (const Stage& st : h.stages)
            if (st.s0 > h.s0 && std::abs(s - st.s0) <=
                                    0.5 * (h.s1 - h.s0) / double(s_steps - 1))
                seam = true;
        std::snprintf(buf, sizeof buf, "%.17g", s);
        f << buf;
        for (int i = 0; i < input.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", input(i));
            f << "," << buf;
        }
        for (int i = 0; i < val.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", val(i));
            f << "," << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g", norm_res);
        f << "," << buf << "," << (seam ? 1 : 0) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homotopy-forge: octonion algebra, horizontal lifts, and the "
                 "explicit null homotopy of the 12th commutator power"};
    app.require_subcommand(1);

    // ------------------------------------------------------------- verify
    RunConfig vcfg;
    vcfg.seed = default_seed();
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "algebra | lifts | characteristic | pipeline | exotic | all")
        ->required();
    add_common(verify, vcfg);

    // ----------------------------------------------------------- homotopy
    RunConfig hcfg;
    hcfg.seed = default_seed();
    std::string hname = "comm12";
    std::vector<double> hinput;
    int s_steps = 101;
    auto* homotopy = app.add_subcommand("homotopy", "export homotopy frames as CSV");
    homotopy->add_option("name", hname, "comm12 | power12 | d12 | kappa | Hj")
        ->required();
    homotopy->add_option("--input", hinput,
                         "flat input coordinates (defaults: a=i, b=j or seeded point)");
    homotopy->add_option("--s-steps", s_steps, "number of parameter samples");
    homotopy->add_option("--out", hcfg.out_path, "output CSV path");
    homotopy->add_option("--seed", hcfg.seed, "seed for default inputs");

    // ------------------------------------------------------------- degree
    RunConfig dcfg;
    dcfg.seed = default_seed();
    std::string dmap = "power";
    int ddim = 7, dk = 2;
    auto* deg = app.add_subcommand("degree", "signed-preimage degree of a sphere map");
    deg->add_option("map", dmap, "power")->required();
    deg->add_option("--dim", ddim, "sphere dimension n (<= 7)")->required();
    deg->add_option("--k", dk, "power exponent (|k| <= 24)")->required();
    deg->add_option("--seed", dcfg.seed, "RNG seed");
    deg->add_option("--out", dcfg.out_path, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        Report rep = run_suite(suite, vcfg);
        print_report(rep);
        if (!vcfg.out_path.empty()) write_report(rep, vcfg.out_path);
        return rep.all_pass() ? 0 : 1;
    }

    if (homotopy->parsed()) {
        Rng r = Rng::stream(hcfg.seed, 0);
        HomotopyHandle h;
        Vec input;
        if (hname == "comm12" || hname == "power12") {
            Quaternion a = Quaternion::i(), b = Quaternion::j();
            if (hinput.size() >= 8) {
                a = {hinput[0], hinput[1], hinput[2], hinput[3]};
                b = {hinput[4], hinput[5], hinput[6], hinput[7]};
                a = a.normalized();
                b = b.normalized();
            }
            h = (hname == "comm12") ? handle_comm12(a, b) : handle_power12(a, b);
            input = Vec(8);
            input << a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z;
        } else if (hname == "d12") {
            Vec v = r.unit_vec(7);
            if (hinput.size() >= 7) {
                v = Vec(7);
                for (int i = 0; i < 7; ++i) v(i) = hinput[i];
                v.normalize();
            }
            VecPU pu;
            pu = v;
            h = handle_d12(pu);
            input = v;
        } else if (hname == "kappa") {
            Vec x = r.unit_vec(8);
            if (hinput.size() >= 8) {
                x = Vec(8);
                for (int i = 0; i < 8; ++i) x(i) = hinput[i];
                x.normalize();
            }
            Vec8 x8;
            x8 = x;
            h = handle_kappa(x8);
            input = x;
        } else if (hname == "Hj") {
            Vec x = r.unit_vec(8);
            if (hinput.size() >= 8) {
                x = Vec(8);
                for (int i = 0; i < 8; ++i) x(i) = hinput[i];
                x.normalize();
            }
            h.domain_dim = 7;
            h.target = "S^7";
            h.s0 = 0.0;
            h.s1 = 1.5707963267948966;
            h.stages = {{"column rotation", 0.0, 1.5707963267948966}};
            h.endpoint_s0 = "twelfth power map";
            h.endpoint_s1 = "second column of chi_1";
            h.eval = [](const Vec& in, double t) {
                const Quaternion x1{in(0), in(1), in(2), in(3)};
                const Quaternion x2{in(4), in(5), in(6), in(7)};
                auto [a, b] = suspension_homotopy_Hj(1, x1, x2, t);
                Vec out(8);
                out << a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z;
                return out;
            };
            input = x;
        } else {
            std::fprintf(stderr, "unknown homotopy name: %s\n", hname.c_str());
            return 2;
        }
        return write_frames(h, input, s_steps, hcfg.out_path);
    }

    if (deg->parsed()) {
        if (dmap != "power") {
            std::fprintf(stderr, "unknown map: %s\n", dmap.c_str());
            return 2;
        }
        if (ddim > 7 || ddim < 1 || std::abs(dk) > 24) {
            std::fprintf(stderr, "degree: need dim <= 7 and |k| <= 24\n");
            return 2;
        }
        DegreeConfig dc;
        dc.seed = dcfg.seed;
        auto map = [&](const Vec& x) { return power_map(x, dk); };
        const DegreeReport dr = degree(map, ddim, dc);
        if (!dr.conclusive) {
            std::printf("degree: inconclusive after %d retries (report, not a guess)\n",
                        dr.retries_used);
            return 1;
        }
        std::printf("degree(power^%d, S^%d) = %d  (%d preimages, max residual %.2e)\n",
                    dk, ddim, dr.degree, dr.preimages, dr.max_residual);
        if (!dcfg.out_path.empty()) {
            Report rep;
            rep.suite = "degree";
            rep.config = dcfg;
            CheckResult c;
            c.id = "degree-p" + std::to_string(dk) + "-s" + std::to_string(ddim);
            c.ref = "signed preimage count";
            c.samples = dr.preimages;
            c.max_residual = dr.max_residual;
            c.tol = 1e-6;
            c.pass = true;
            rep.checks.push_back(c);
            write_report(rep, dcfg.out_path);
        }
        return 0;
    }
    return 0;
}
