#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smps/basis_change.hpp"
#include "smps/ci.hpp"
#include "smps/entanglement.hpp"
#include "smps/json_io.hpp"
#include "smps/mpo.hpp"
#include "smps/mps.hpp"
#include "smps/orbitals.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace smps;

// Exit codes: 0 success, 1 verification failure, 2 usage/input error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct StatOpts {
    std::string kind = "fermion";
    double phase = 0.0;

    Statistics make() const {
        if (kind == "fermion") return Statistics::fermion();
        if (kind == "boson") return Statistics::boson();
        return Statistics::anyon(phase);
    }
};

void add_stat_options(CLI::App* sub, StatOpts& opts) {
    sub->add_option("--stat", opts.kind, "Particle statistics")
        ->check(CLI::IsMember({"fermion", "boson", "anyon"}))
        ->capture_default_str();
    sub->add_option("--exchange-phase", opts.phase,
                    "Anyonic exchange phase in radians (with --stat anyon)")
        ->capture_default_str();
}

// Runs `fn(stream)` against the chosen output file, or stdout for "-"/empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file " + path);
    fn(out);
}

std::vector<int> parse_range(const std::string& text, const char* who) {
    std::vector<int> parts;
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ':')) parts.push_back(std::stoi(piece));
    int lo = 0;
    int hi = 0;
    int step = 1;
    if (parts.size() == 1) {
        lo = hi = parts[0];
    } else if (parts.size() == 2 || parts.size() == 3) {
        lo = parts[0];
        hi = parts[1];
        if (parts.size() == 3) step = parts[2];
    } else {
        throw std::invalid_argument(std::string(who) + ": expected MIN[:MAX[:STEP]]");
    }
    if (lo < 1 || hi < lo || step < 1)
        throw std::invalid_argument(std::string(who) + ": malformed range " + text);
    std::vector<int> values;
    for (int v = lo; v <= hi; v += step) values.push_back(v);
    return values;
}

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

// ---------------------------------------------------------------------------

struct GenOpts {
    std::string kind;
    int num_sites = 0;
    int num_orbitals = 0;
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen_orbitals(const GenOpts& opts) {
    OrbitalSet set;
    if (opts.kind == "random")
        set = random_orthonormal(opts.num_sites, opts.num_orbitals, opts.seed);
    else if (opts.kind == "plane-wave")
        set = plane_wave_set(opts.num_sites, opts.num_orbitals);
    else
        set = localized_set(opts.num_sites, opts.num_orbitals);
    with_output(opts.output, [&](std::ostream& out) { write_orbitals_json(out, set); });
    return kExitOk;
}

struct BuildOpts {
    std::string orbitals;
    StatOpts stat;
};

int run_build(const BuildOpts& opts) {
    const OrbitalSet set = read_orbitals_file(opts.orbitals);
    const Mps mps = build_slater_mps(set, opts.stat.make());
    const double norm = mps_norm(mps);
    json report = {{"L", set.num_sites},
                   {"N", set.num_orbitals},
                   {"stat", opts.stat.make().name()},
                   {"bond_dim", static_cast<std::int64_t>(mps.bond_dim_at(set.num_sites / 2))},
                   {"norm", norm},
                   {"norm_residual", std::abs(norm - 1.0)}};
    std::cout << report.dump() << "\n";
    return kExitOk;
}

struct AmplitudeOpts {
    std::string orbitals;
    std::string occ;
    StatOpts stat;
};

int run_amplitude(const AmplitudeOpts& opts) {
    const OrbitalSet set = read_orbitals_file(opts.orbitals);
    const Mps mps = build_slater_mps(set, opts.stat.make());
    const Occupation occ = Occupation::from_string(opts.occ);
    const Complex value = amplitude(mps, occ);
    write_amplitude_line(std::cout, occ, value);
    return kExitOk;
}

struct StatevectorOpts {
    std::string orbitals;
    StatOpts stat;
    std::string output;
};

int run_statevector(const StatevectorOpts& opts) {
    const OrbitalSet set = read_orbitals_file(opts.orbitals);
    const int L = set.num_sites;
    if (L > max_dense_sites())
        throw size_cap_error("statevector: L = " + std::to_string(L) +
                             " exceeds the dense cap of " + std::to_string(max_dense_sites()));
    const Mps mps = build_slater_mps(set, opts.stat.make());
    with_output(opts.output, [&](std::ostream& out) {
        for (std::size_t idx = 0; idx < (std::size_t{1} << L); ++idx) {
            const Occupation occ = Occupation::from_index(idx, L);
            if (occ.particle_count() != set.num_orbitals) continue;
            write_amplitude_line(out, occ, amplitude(mps, occ));
        }
    });
    return kExitOk;
}

struct EntropyOpts {
    std::string orbitals;
    StatOpts stat;
};

int run_entropy(const EntropyOpts& opts) {
    const OrbitalSet set = read_orbitals_file(opts.orbitals);
    const Mps mps = build_slater_mps(set, opts.stat.make());
    const EntropyReport report = halfcut_entropy(mps);
    json doc = {{"cut", report.cut_position},
                {"entropy_nats", report.entropy_nats},
                {"entropy_log2", report.entropy_log2()},
                {"bond_dim", static_cast<std::int64_t>(report.bond_dimension_at_cut)}};
    std::cout << doc.dump() << "\n";
    return kExitOk;
}

struct VerifyOpts {
    std::string orbitals;
    StatOpts stat;
    int extra_seeds = 0;
    double tol = 1e-11;
};

int run_verify(const VerifyOpts& opts) {
    const OrbitalSet loaded = read_orbitals_file(opts.orbitals);
    if (loaded.num_sites > 8)
        throw size_cap_error("verify: dense checks are capped at L = 8");
    const auto report = validate(loaded);
    if (!report.ok)
        throw validation_error("verify: orbital file is not orthonormal (deviation " +
                               std::to_string(report.max_deviation) + ")");
    const Statistics stat = opts.stat.make();

    double amplitude_residual = 0.0;
    double norm_residual = 0.0;
    double anticommutator_residual = 0.0;

    const auto check_set = [&](const OrbitalSet& set) {
        const int L = set.num_sites;
        const Mps mps = build_slater_mps(set, stat);

        if (stat.kind == StatKind::Fermion) {
            // Determinant states are normalized; hard-core boson/anyon states
            // are not, so those compare against the oracle norm below.
            norm_residual = std::max(norm_residual, std::abs(mps_norm(mps) - 1.0));
            for (std::size_t idx = 0; idx < (std::size_t{1} << L); ++idx) {
                const Occupation occ = Occupation::from_index(idx, L);
                amplitude_residual = std::max(
                    amplitude_residual, std::abs(amplitude(mps, occ) - determinant_oracle(set, occ)));
            }
            // Canonical anticommutators of the MPO-built operators.
            std::vector<DenseOperator> create;
            std::vector<DenseOperator> destroy;
            for (int a = 0; a < set.num_orbitals; ++a) {
                const Mpo mpo = build_creation_mpo(set.phi.row(a), L, stat);
                create.push_back(mpo_to_dense(mpo));
                destroy.push_back(mpo_to_dense(adjoint_mpo(mpo)));
            }
            const DenseOperator id = DenseOperator::Identity(Eigen::Index{1} << L,
                                                             Eigen::Index{1} << L);
            for (int a = 0; a < set.num_orbitals; ++a)
                for (int b = 0; b < set.num_orbitals; ++b) {
                    const DenseOperator mixed =
                        destroy[a] * create[b] + create[b] * destroy[a] -
                        (a == b ? id : DenseOperator::Zero(id.rows(), id.cols()));
                    const DenseOperator doubled = create[a] * create[b] + create[b] * create[a];
                    anticommutator_residual = std::max(
                        {anticommutator_residual, mixed.cwiseAbs().maxCoeff(),
                         doubled.cwiseAbs().maxCoeff()});
                }
        } else {
            const DenseState expected = anyonic_oracle(set, stat);
            const DenseState actual = mps_to_dense(mps);
            amplitude_residual =
                std::max(amplitude_residual, (actual - expected).cwiseAbs().maxCoeff());
            norm_residual = std::max(norm_residual, std::abs(mps_norm(mps) - expected.norm()));
        }
    };

    check_set(loaded);
    for (int seed = 0; seed < opts.extra_seeds; ++seed)
        check_set(random_orthonormal(loaded.num_sites, loaded.num_orbitals,
                                     static_cast<std::uint64_t>(seed)));

    const bool pass = amplitude_residual <= opts.tol && norm_residual <= opts.tol &&
                      anticommutator_residual <= opts.tol;
    json doc = {{"stat", stat.name()},
                {"max_amplitude_residual", amplitude_residual},
                {"norm_residual", norm_residual},
                {"anticommutator_residual", anticommutator_residual},
                {"pass", pass}};
    std::cout << doc.dump() << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

struct CiOpts {
    std::string orbitals;
    std::vector<double> alpha{1.0 / std::numbers::sqrt2, 0.0};
    std::vector<double> beta{1.0 / std::numbers::sqrt2, 0.0};
    double tol = 1e-12;
};

int run_ci_check(const CiOpts& opts) {
    const OrbitalSet set = read_orbitals_file(opts.orbitals);
    const int L = set.num_sites;
    const CiCoefficients c{Complex(opts.alpha[0], opts.alpha[1]),
                           Complex(opts.beta[0], opts.beta[1]), set};
    const DenseOperator block = mpo_to_dense(build_ci_block_mpo(c, L));
    const DenseOperator compact = mpo_to_dense(build_ci_compact_mpo(c, L));
    const DenseOperator oracle = ci_dense_oracle(c, L);
    const double block_vs_oracle = (block - oracle).cwiseAbs().maxCoeff();
    const double compact_vs_oracle = (compact - oracle).cwiseAbs().maxCoeff();
    const double block_vs_compact = (block - compact).cwiseAbs().maxCoeff();
    const CiEntropyReport entropy = ci_entropy_bound_check(c, L);

    const bool pass = block_vs_oracle <= opts.tol && compact_vs_oracle <= opts.tol &&
                      block_vs_compact <= opts.tol && entropy.within_bound;
    json doc = {{"residual_block_oracle", block_vs_oracle},
                {"residual_compact_oracle", compact_vs_oracle},
                {"residual_block_compact", block_vs_compact},
                {"entropy_nats", entropy.entropy.entropy_nats},
                {"entropy_log2", entropy.entropy.entropy_log2()},
                {"entropy_bound_nats", entropy.bound_nats},
                {"pass", pass}};
    std::cout << doc.dump() << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

struct BasisChangeOpts {
    std::string basis;
    std::string input;
    std::string output;
    bool inverse = false;
};

int run_basis_change(const BasisChangeOpts& opts) {
    const OrbitalSet basis = read_orbitals_file(opts.basis);
    const BasisChangeGrid grid = build_grid(basis);
    const int L = grid.num_sites();

    std::ifstream in(opts.input);
    if (!in) throw validation_error("basis-change: cannot open " + opts.input);
    const auto entries = read_amplitudes_jsonl(in, L);
    DenseState t_in = DenseState::Zero(Eigen::Index{1} << L);
    for (const auto& entry : entries) t_in(entry.occ.to_index()) += entry.value;

    const DenseState t_out =
        opts.inverse ? inverse_transform_tensor(grid, t_in) : transform_tensor(grid, t_in);

    // Particle number is conserved, so emit the populated sectors in full.
    std::vector<double> sector_weight(L + 1, 0.0);
    for (Eigen::Index idx = 0; idx < t_out.size(); ++idx)
        sector_weight[Occupation::from_index(idx, L).particle_count()] += std::norm(t_out(idx));
    with_output(opts.output, [&](std::ostream& out) {
        for (std::size_t idx = 0; idx < (std::size_t{1} << L); ++idx) {
            const Occupation occ = Occupation::from_index(idx, L);
            if (sector_weight[occ.particle_count()] <= 0.0) continue;
            write_amplitude_line(out, occ, t_out(static_cast<Eigen::Index>(idx)));
        }
    });
    return kExitOk;
}

struct BenchOpts {
    std::string sites_range;
    std::string orbitals_range;
    int repeats = 1;
    std::uint64_t seed = 0;
    std::string output;
};

int run_bench(const BenchOpts& opts) {
    using clock = std::chrono::steady_clock;
    const auto sites = parse_range(opts.sites_range, "bench -L");
    const auto orbitals = parse_range(opts.orbitals_range, "bench -N");

    with_output(opts.output, [&](std::ostream& out) {
        out << "L,N,build_ms,amplitude_us_mean,dense_ms\n";
        for (int L : sites) {
            for (int N : orbitals) {
                if (N > L) continue;
                std::vector<double> build_ms;
                std::vector<double> amp_us;
                std::vector<double> dense_ms;
                for (int rep = 0; rep < opts.repeats; ++rep) {
                    const auto t0 = clock::now();
                    const OrbitalSet set = random_orthonormal(L, N, opts.seed);
                    const Mps mps = build_slater_mps(set, Statistics::fermion());
                    const auto t1 = clock::now();
                    build_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());

                    std::vector<Occupation> sample;
                    for (std::size_t idx = 0; idx < (std::size_t{1} << L) && sample.size() < 256;
                         ++idx) {
                        Occupation occ = Occupation::from_index(idx, L);
                        if (occ.particle_count() == N) sample.push_back(std::move(occ));
                    }
                    constexpr int kInnerLoops = 50;
                    Complex sink = 0.0;
                    const auto t2 = clock::now();
                    for (int loop = 0; loop < kInnerLoops; ++loop)
                        for (const auto& occ : sample) sink += amplitude(mps, occ);
                    const auto t3 = clock::now();
                    (void)sink;
                    amp_us.push_back(std::chrono::duration<double, std::micro>(t3 - t2).count() /
                                     (kInnerLoops * static_cast<double>(sample.size())));

                    if (L <= max_dense_sites()) {
                        const auto t4 = clock::now();
                        const DenseState dense = mps_to_dense(mps);
                        const auto t5 = clock::now();
                        (void)dense;
                        dense_ms.push_back(
                            std::chrono::duration<double, std::milli>(t5 - t4).count());
                    }
                }
                out << L << "," << N << "," << median(build_ms) << "," << median(amp_us) << ",";
                if (!dense_ms.empty()) out << median(dense_ms);
                out << "\n";
            }
        }
    });
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact MPS/MPO constructions for Slater determinants and CI states"};
    app.require_subcommand(1);

    GenOpts gen;
    auto* gen_cmd = app.add_subcommand("gen-orbitals", "Generate an orbital JSON file");
    gen_cmd->add_option("--kind", gen.kind, "Orbital family")
        ->required()
        ->check(CLI::IsMember({"random", "plane-wave", "localized"}));
    gen_cmd->add_option("-L,--sites", gen.num_sites, "Number of sites")->required();
    gen_cmd->add_option("-N,--orbitals", gen.num_orbitals, "Number of orbitals")->required();
    gen_cmd->add_option("--seed", gen.seed, "RNG seed (random kind)")->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    BuildOpts build;
    auto* build_cmd = app.add_subcommand("build", "Build the Slater MPS and print a summary");
    build_cmd->add_option("--orbitals", build.orbitals, "Orbital JSON file")->required();
    add_stat_options(build_cmd, build.stat);

    AmplitudeOpts amp;
    auto* amp_cmd = app.add_subcommand("amplitude", "Evaluate one configuration amplitude");
    amp_cmd->add_option("--orbitals", amp.orbitals, "Orbital JSON file")->required();
    amp_cmd->add_option("--occ", amp.occ, "Occupation string, site 1 first")->required();
    add_stat_options(amp_cmd, amp.stat);

    StatevectorOpts sv;
    auto* sv_cmd = app.add_subcommand("statevector", "Dump the nonzero-sector amplitudes");
    sv_cmd->add_option("--orbitals", sv.orbitals, "Orbital JSON file")->required();
    sv_cmd->add_option("-o,--output", sv.output, "Output file (default stdout)");
    add_stat_options(sv_cmd, sv.stat);

    EntropyOpts ent;
    auto* ent_cmd = app.add_subcommand("entropy", "Half-cut entanglement entropy report");
    ent_cmd->add_option("--orbitals", ent.orbitals, "Orbital JSON file")->required();
    add_stat_options(ent_cmd, ent.stat);

    VerifyOpts verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "Check the MPS construction against the dense oracles");
    verify_cmd->add_option("--orbitals", verify.orbitals, "Orbital JSON file")->required();
    verify_cmd->add_option("--seeds", verify.extra_seeds, "Extra random orbital sets to check")
        ->capture_default_str();
    verify_cmd->add_option("--tol", verify.tol, "Residual tolerance")->capture_default_str();
    add_stat_options(verify_cmd, verify.stat);

    CiOpts ci;
    auto* ci_cmd =
        app.add_subcommand("ci-check", "Check the D=8 and D=6 CI operator representations");
    ci_cmd->add_option("--orbitals", ci.orbitals, "Orbital JSON file with N = 4")->required();
    ci_cmd->add_option("--alpha", ci.alpha, "alpha as RE IM")->expected(2);
    ci_cmd->add_option("--beta", ci.beta, "beta as RE IM")->expected(2);
    ci_cmd->add_option("--tol", ci.tol, "Residual tolerance")->capture_default_str();

    BasisChangeOpts bc;
    auto* bc_cmd = app.add_subcommand(
        "basis-change", "Map amplitudes through the one-body basis-change grid");
    bc_cmd->add_option("--basis", bc.basis, "Full-basis orbital JSON file (N = L)")->required();
    bc_cmd->add_option("--input", bc.input, "Amplitude JSON-lines file")->required();
    bc_cmd->add_option("-o,--output", bc.output, "Output file (default stdout)");
    bc_cmd->add_flag("--inverse", bc.inverse, "Apply the adjoint (old-to-new) map");

    BenchOpts bench;
    auto* bench_cmd = app.add_subcommand("bench", "Timing table in CSV");
    bench_cmd->add_option("-L,--sites", bench.sites_range, "Site range MIN[:MAX[:STEP]]")
        ->required();
    bench_cmd->add_option("-N,--orbitals", bench.orbitals_range, "Orbital range MIN[:MAX[:STEP]]")
        ->required();
    bench_cmd->add_option("--repeats", bench.repeats, "Samples per row")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "RNG seed")->capture_default_str();
    bench_cmd->add_option("-o,--output", bench.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen_orbitals(gen);
        if (build_cmd->parsed()) return run_build(build);
        if (amp_cmd->parsed()) return run_amplitude(amp);
        if (sv_cmd->parsed()) return run_statevector(sv);
        if (ent_cmd->parsed()) return run_entropy(ent);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (ci_cmd->parsed()) return run_ci_check(ci);
        if (bc_cmd->parsed()) return run_basis_change(bc);
        if (bench_cmd->parsed()) return run_bench(bench);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
