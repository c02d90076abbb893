// Copyright 2026 The nmrqpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: eig, ipea, asp, noise-sweep, spectra.
//
// Every command computes all of its outputs in memory before touching the
// output directory, so a failing run leaves no partial files behind.
// Exit status: 0 success, 1 computation failure, 2 invalid input.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "nmrqpe.hpp"

using namespace nmrqpe;

namespace {

struct CommonOptions {
    std::string hamiltonian = "h2";
    std::string tau = "auto";
    int bits = 3;
    int iterations = 6;
    std::string errbd = "5deg";
    std::uint64_t seed = 0;
    std::string out = ".";
};

struct NoiseOptions {
    std::string jitter = "0";
    std::string law = "uniform";
    double epsilon = 0.0;
};

struct OutputFile {
    std::string name;
    std::string content;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fixed(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

double parse_number(const std::string &text, const std::string &flag) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
        throw ValidationError(flag + ": expected a number, got '" + text + "'");
    }
    return v;
}

/// Bare numbers are turns; an "Ndeg" suffix converts degrees to turns.
double parse_turns(const std::string &text, const std::string &flag) {
    const std::string suffix = "deg";
    if (text.size() > suffix.size() && text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return degrees_to_turns(parse_number(text.substr(0, text.size() - suffix.size()), flag));
    }
    return parse_number(text, flag);
}

std::vector<double> parse_list(const std::string &text, const std::string &flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(parse_number(item, flag));
    }
    if (values.empty()) {
        throw ValidationError(flag + ": empty list");
    }
    return values;
}

/// "start:stop:step", inclusive of stop up to rounding.
std::vector<double> parse_grid(const std::string &text, const std::string &flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    if (parts.size() != 3) {
        throw ValidationError(flag + ": expected start:stop:step, got '" + text + "'");
    }
    const double start = parse_number(parts[0], flag);
    const double stop = parse_number(parts[1], flag);
    const double step = parse_number(parts[2], flag);
    if (!(step > 0.0) || stop < start) {
        throw ValidationError(flag + ": need step > 0 and stop >= start");
    }
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) {
        throw ValidationError(flag + ": grid has more than 100000 points");
    }
    std::vector<double> grid;
    for (long i = 0; i < count; ++i) {
        grid.push_back(start + static_cast<double>(i) * step);
    }
    return grid;
}

MolecularHamiltonian load_source(const std::string &source) {
    if (source == "h2") {
        return build_h2();
    }
    std::ifstream in(source);
    if (!in) {
        throw ValidationError("--hamiltonian: cannot read '" + source + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return load_hamiltonian(ss.str());
    } catch (const ValidationError &e) {
        throw ValidationError(source + ": " + e.what());
    }
}

double resolve_tau(const std::string &text, const MolecularHamiltonian &h) {
    if (text == "auto") {
        return choose_tau(h);
    }
    const double tau = parse_number(text, "--tau");
    if (!(tau > 0.0)) {
        throw ValidationError("--tau must be positive");
    }
    return tau;
}

IterationConfig make_config(const CommonOptions &opt, const MolecularHamiltonian &h) {
    IterationConfig cfg;
    cfg.bits_per_iteration = opt.bits;
    cfg.iterations = opt.iterations;
    cfg.phase_error_bound = parse_turns(opt.errbd, "--errbd");
    cfg.tau = resolve_tau(opt.tau, h);
    cfg.validate();
    return cfg;
}

NoiseModel make_noise(const NoiseOptions &opt, std::uint64_t seed) {
    NoiseModel noise;
    noise.phase_jitter_bound = parse_turns(opt.jitter, "--jitter");
    noise.coherent_epsilon = opt.epsilon;
    noise.rng_seed = seed;
    noise.law = opt.law == "extreme" ? JitterLaw::extreme : JitterLaw::uniform;
    noise.validate();
    return noise;
}

void write_outputs(const std::string &dir, const std::vector<OutputFile> &files) {
    std::filesystem::create_directories(dir);
    for (const OutputFile &f : files) {
        const std::filesystem::path path = std::filesystem::path(dir) / f.name;
        std::ofstream out(path, std::ios::binary);
        out << f.content;
        if (!out) {
            throw Error("cannot write " + path.string());
        }
    }
}

void add_common(CLI::App *cmd, CommonOptions &opt) {
    cmd->add_option("--hamiltonian", opt.hamiltonian, "built-in 'h2' or a Hamiltonian JSON document")
        ->capture_default_str();
    cmd->add_option("--tau", opt.tau, "evolution time in a.u., or 'auto'")->capture_default_str();
    cmd->add_option("--bits", opt.bits, "bits per iteration n")->capture_default_str();
    cmd->add_option("--iterations", opt.iterations, "iteration count k_max")->capture_default_str();
    cmd->add_option("--errbd", opt.errbd, "phase error bound in turns, or 'Ndeg'")->capture_default_str();
    cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    cmd->add_option("--out", opt.out, "output directory")->capture_default_str();
}

void add_noise(CLI::App *cmd, NoiseOptions &opt) {
    cmd->add_option("--jitter", opt.jitter, "readout jitter bound in turns, or 'Ndeg'")->capture_default_str();
    cmd->add_option("--law", opt.law, "jitter law")
        ->check(CLI::IsMember({"uniform", "extreme"}))
        ->capture_default_str();
    cmd->add_option("--epsilon", opt.epsilon, "coherent error strength on H (hartree)")->capture_default_str();
}

// ---------------------------------------------------------------- eig

std::vector<OutputFile> cmd_eig(const CommonOptions &opt) {
    const MolecularHamiltonian h = load_source(opt.hamiltonian);
    std::optional<double> tau;
    if (opt.tau != "auto") {
        tau = resolve_tau(opt.tau, h);
    } else if (h.dim() == 2) {
        try {
            tau = choose_tau(h);
        } catch (const RangeError &) {
        }
    }
    const EigenDecomposition eig = hermitian_eig(h.matrix);
    const PureState ground = eig.eigenvector(0);
    const double gap = h.dim() > 1 ? eig.eigenvalues[1] - eig.eigenvalues[0] : 0.0;
    const bool degenerate = h.dim() > 1 && gap < kMinGap;

    std::printf("hamiltonian: %s (dim %zu)\n", h.label.c_str(), h.dim());
    std::printf("energies:");
    for (double e : eig.eigenvalues) {
        std::printf(" %s", num(e).c_str());
    }
    std::printf("\nground energy: %.4f hartree\n", eig.eigenvalues[0]);
    std::printf("ground state:");
    for (std::size_t i = 0; i < ground.dim(); ++i) {
        std::printf(" (%s, %s)", num(ground[i].real()).c_str(), num(ground[i].imag()).c_str());
    }
    std::printf("\n");
    if (degenerate) {
        std::printf("ground level is degenerate (gap %s)\n", num(gap).c_str());
    }

    nlohmann::ordered_json report;
    report["label"] = h.label;
    report["dimension"] = h.dim();
    report["energies"] = eig.eigenvalues;
    report["ground_energy"] = eig.eigenvalues[0];
    report["gap"] = gap;
    report["degenerate"] = degenerate;
    nlohmann::ordered_json state = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ground.dim(); ++i) {
        state.push_back({ground[i].real(), ground[i].imag()});
    }
    report["ground_state"] = state;
    if (tau && !degenerate) {
        const double phase = wrap_turns(-eig.eigenvalues[0] * *tau / kTwoPi);
        report["tau"] = *tau;
        report["ground_phase"] = phase;
        std::printf("tau: %s, ground phase: %s\n", num(*tau).c_str(), num(phase).c_str());
    } else {
        report["tau"] = nullptr;
        report["ground_phase"] = nullptr;
    }
    report["metadata"] = h.metadata;
    return {{"eig.json", report.dump(2) + "\n"}};
}

// ---------------------------------------------------------------- ipea

struct IpeaOptions {
    NoiseOptions noise;
    std::string backend = "ideal";
    std::string prep = "exact";
    int asp_steps = 6;
    double asp_total_time = 9.5;
    double over_rotation = 0.0;
    double pps_epsilon = 1.0;
    std::string realization = "repeated";
};

PureState prepare(const MolecularHamiltonian &h, const IpeaOptions &opt) {
    if (opt.prep == "asp") {
        return run_asp({opt.asp_steps, opt.asp_total_time, h}).final_state;
    }
    return spectrum(h).ground_state;
}

IpeaRun execute_ipea(const MolecularHamiltonian &h, const IterationConfig &cfg, const NoiseModel &noise,
                     const PureState &prep, const IpeaOptions &opt) {
    if (opt.backend == "ideal") {
        if (noise.is_ideal()) {
            return run_ipea(h, cfg, prep);
        }
        return run_ipea(h, cfg, prep, NoisyReadout{noise});
    }
    if (h.dim() != 2) {
        throw ValidationError("--backend pulse needs a 2x2 Hamiltonian");
    }
    PulseBackendOptions pulse;
    pulse.errors.over_rotation = opt.over_rotation;
    pulse.pps_polarization = opt.pps_epsilon;
    pulse.realization =
        opt.realization == "recompile" ? PulseRealization::recompile_each : PulseRealization::repeated_block;
    const std::optional<std::string> warning = check_preparation(h, prep);
    PulseBackend backend(perturbed_u(h, cfg.tau, noise), prep, pulse);
    IpeaRun run;
    if (noise.phase_jitter_bound > 0.0) {
        JitteredBackend<PulseBackend> jittered(std::move(backend), noise);
        run = run_with_backend(h, cfg, jittered);
    } else {
        run = run_with_backend(h, cfg, backend);
    }
    if (warning) {
        run.warnings.push_back(*warning);
    }
    return run;
}

std::vector<OutputFile> cmd_ipea(const CommonOptions &common, const IpeaOptions &opt) {
    const MolecularHamiltonian h = load_source(common.hamiltonian);
    const IterationConfig cfg = make_config(common, h);
    const NoiseModel noise = make_noise(opt.noise, common.seed);
    if (!(opt.pps_epsilon > 0.0 && opt.pps_epsilon <= 1.0)) {
        throw ValidationError("--pps-epsilon must lie in (0, 1]");
    }
    if (opt.backend == "ideal" && (opt.over_rotation != 0.0 || opt.pps_epsilon != 1.0)) {
        throw ValidationError("--over-rotation and --pps-epsilon need --backend pulse");
    }
    const PureState prep = prepare(h, opt);
    const IpeaRun run = execute_ipea(h, cfg, noise, prep, opt);
    const double oracle_phase = ground_phase(h, cfg.tau);
    const std::optional<double> oracle_energy = run.energy.oracle_energy;
    const int n = cfg.bits_per_iteration;

    std::vector<PhaseEstimate> prefixes;
    for (std::size_t k = 0; k < run.records.size(); ++k) {
        const std::vector<IterationRecord> head(run.records.begin(), run.records.begin() + static_cast<long>(k) + 1);
        prefixes.push_back(reconstruct(head, n, cfg.phase_error_bound));
    }

    std::string csv =
        "k,measured_phase,clipped_phase,operator_power,phi_c,cumulative_bits,energy_estimate,abs_error_vs_oracle\n";
    for (std::size_t k = 0; k < run.records.size(); ++k) {
        const IterationRecord &rec = run.records[k];
        const double energy = -kTwoPi * prefixes[k].value / cfg.tau;
        csv += std::to_string(rec.k) + "," + num(rec.measured_phase) + "," + num(rec.clipped_phase) + "," +
               std::to_string(rec.operator_power) + "," + num(prefixes[k].value) + "," +
               std::to_string(prefixes[k].guaranteed_bits) + "," + num(energy) + "," +
               (oracle_energy ? num(std::abs(energy - *oracle_energy)) : "") + "\n";
    }
    const int correct_bits = precision_report(run.estimate, oracle_phase);
    csv += "summary,,,," + num(run.estimate.value) + "," + std::to_string(correct_bits) + "," +
           num(run.energy.energy) + "," + (run.energy.abs_error ? num(*run.energy.abs_error) : "") + "\n";

    // Table of binary expansions; the bits fixed by each iteration are bracketed.
    const int digits = std::max(n * cfg.iterations, run.estimate.guaranteed_bits);
    std::string table = "k  measured_phase        phi_c                 binary\n";
    int fixed_before = 0;
    for (std::size_t k = 0; k < prefixes.size(); ++k) {
        const std::string bits = bits_to_string(to_binary(prefixes[k].value, digits));
        const int fixed_now = std::min(prefixes[k].guaranteed_bits, digits);
        const auto a = static_cast<std::size_t>(std::min(fixed_before, fixed_now));
        const auto b = static_cast<std::size_t>(fixed_now);
        char head[96];
        std::snprintf(head, sizeof head, "%-2zu %-21s %-21s ", k, num(run.records[k].measured_phase).c_str(),
                      num(prefixes[k].value).c_str());
        table += head + bits.substr(0, a) + "[" + bits.substr(a, b - a) + "]" + bits.substr(b) + "\n";
        fixed_before = fixed_now;
    }
    table += "oracle                                         " + bits_to_string(to_binary(oracle_phase, digits)) + "\n";

    for (const std::string &w : run.warnings) {
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    }
    std::printf("phase: %s\n", num(run.estimate.value).c_str());
    std::printf("energy: %s hartree\n", num(run.energy.energy).c_str());
    if (oracle_energy) {
        std::printf("oracle energy: %s hartree, abs error %s\n", num(*oracle_energy).c_str(),
                    num(*run.energy.abs_error).c_str());
    }
    std::printf("correct bits vs oracle: %d (guaranteed %d)\n", correct_bits, run.estimate.guaranteed_bits);
    return {{"ipea_trace.csv", csv}, {"ipea_bits.txt", table}};
}

// ---------------------------------------------------------------- asp

struct AspOptions {
    int steps = 6;
    std::string scan;
    std::optional<double> total_time;
};

std::vector<OutputFile> cmd_asp(const CommonOptions &common, const AspOptions &opt) {
    const MolecularHamiltonian h = load_source(common.hamiltonian);
    if (!opt.scan.empty() && opt.total_time) {
        throw ValidationError("give either --scan or --total-time, not both");
    }
    std::vector<double> grid = opt.scan.empty() ? std::vector<double>{opt.total_time.value_or(9.5)}
                                                : parse_grid(opt.scan, "--scan");
    AdiabaticSchedule{opt.steps, grid.front(), h}.validate();
    const std::vector<ScanPoint> points = scan_total_time(h, opt.steps, grid);
    std::string csv = "total_time,fidelity\n";
    const ScanPoint *best = &points.front();
    for (const ScanPoint &p : points) {
        csv += num(p.total_time) + "," + num(p.fidelity) + "\n";
        if (p.fidelity > best->fidelity) {
            best = &p;
        }
    }
    std::vector<OutputFile> files{{"asp_scan.csv", csv}};
    if (points.size() == 1) {
        const ASPResult r = run_asp({opt.steps, grid.front(), h});
        std::string steps = "m,s,fidelity\n";
        for (std::size_t m = 0; m < r.per_step_fidelities.size(); ++m) {
            steps += std::to_string(m) + "," + num(r.schedule.parameter(static_cast<int>(m))) + "," +
                     num(r.per_step_fidelities[m]) + "\n";
        }
        files.push_back({"asp_steps.csv", steps});
    }
    std::printf("best fidelity %s at T = %s (%d steps)\n", num(best->fidelity).c_str(), num(best->total_time).c_str(),
                opt.steps);
    return files;
}

// ---------------------------------------------------------------- noise-sweep

struct SweepOptions {
    NoiseOptions noise;
    std::string epsilons = "0,1e-6,1e-5,1e-4,1e-3";
};

std::vector<OutputFile> cmd_noise_sweep(const CommonOptions &common, const SweepOptions &opt) {
    const MolecularHamiltonian h = load_source(common.hamiltonian);
    const IterationConfig cfg = make_config(common, h);
    const std::vector<double> epsilons = parse_list(opt.epsilons, "--epsilons");
    std::vector<NoiseModel> models;
    for (double eps : epsilons) {
        NoiseOptions o = opt.noise;
        o.epsilon = eps;
        models.push_back(make_noise(o, common.seed));
    }
    const PureState prep = spectrum(h).ground_state;
    const double oracle = ground_phase(h, cfg.tau);

    std::string csv = "epsilon,growth_ratio,attainable_bits";
    for (int k = 0; k < cfg.iterations; ++k) {
        csv += ",error_k" + std::to_string(k);
    }
    csv += "\n";
    for (const NoiseModel &noise : models) {
        const IpeaRun run = run_ipea(h, cfg, prep, NoisyReadout{noise});
        const std::vector<double> errors = phase_error_profile(h, cfg, prep, run.records);
        const std::optional<double> ratio = fit_growth_ratio(errors, cfg.phase_error_bound);
        const int bits = precision_report(run.estimate, oracle);
        csv += num(noise.coherent_epsilon) + "," + (ratio ? num(*ratio) : "") + "," + std::to_string(bits);
        for (double e : errors) {
            csv += "," + num(e);
        }
        csv += "\n";
        std::printf("epsilon %g: growth ratio %s, attainable bits %d\n", noise.coherent_epsilon,
                    ratio ? fixed("%.4f", *ratio).c_str() : "n/a", bits);
    }
    return {{"noise_sweep.csv", csv}};
}

// ---------------------------------------------------------------- spectra

struct SpectraOptions {
    NoiseOptions noise;
    SpectrumParams params;
};

std::string spectrum_csv(const SpectrumTrace &trace) {
    std::ostringstream out;
    write_spectrum_csv(out, trace);
    return out.str();
}

std::vector<OutputFile> cmd_spectra(const CommonOptions &common, const SpectraOptions &opt) {
    const MolecularHamiltonian h = load_source(common.hamiltonian);
    const IterationConfig cfg = make_config(common, h);
    const NoiseModel noise = make_noise(opt.noise, common.seed);
    const SpectrumTrace reference = synthesize_spectrum(0.0, opt.params);
    const IpeaRun run = noise.is_ideal() ? run_ipea(h, cfg, spectrum(h).ground_state)
                                         : run_ipea(h, cfg, spectrum(h).ground_state, NoisyReadout{noise});

    std::vector<OutputFile> files{{"spectrum_k-1.csv", spectrum_csv(reference)}};
    std::string manifest = "k,file,input_phase,extracted_phase\n";
    manifest += "-1,spectrum_k-1.csv,0," + num(extract_phase_from_spectrum(reference, reference)) + "\n";
    for (const IterationRecord &rec : run.records) {
        const double phase = wrap_turns(rec.measured_phase);
        const SpectrumTrace trace = synthesize_spectrum(phase, opt.params);
        const double extracted = extract_phase_from_spectrum(trace, reference);
        const std::string name = "spectrum_k" + std::to_string(rec.k) + ".csv";
        files.push_back({name, spectrum_csv(trace)});
        manifest += std::to_string(rec.k) + "," + name + "," + num(phase) + "," + num(extracted) + "\n";
        std::printf("k = %d: input phase %s, extracted %s\n", rec.k, num(phase).c_str(), num(extracted).c_str());
    }
    files.push_back({"spectra_manifest.csv", manifest});
    return files;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Iterative phase estimation of molecular energies on a simulated two-spin NMR processor"};
    app.require_subcommand(1);

    CommonOptions common;

    CLI::App *eig = app.add_subcommand("eig", "exact spectrum of a Hamiltonian");
    add_common(eig, common);

    IpeaOptions ipea_opt;
    CLI::App *ipea = app.add_subcommand("ipea", "run iterative phase estimation");
    add_common(ipea, common);
    add_noise(ipea, ipea_opt.noise);
    ipea->add_option("--backend", ipea_opt.backend, "measurement backend")
        ->check(CLI::IsMember({"ideal", "pulse"}))
        ->capture_default_str();
    ipea->add_option("--prep", ipea_opt.prep, "system register preparation")
        ->check(CLI::IsMember({"exact", "asp"}))
        ->capture_default_str();
    ipea->add_option("--steps", ipea_opt.asp_steps, "adiabatic steps for --prep asp")->capture_default_str();
    ipea->add_option("--total-time", ipea_opt.asp_total_time, "adiabatic total time for --prep asp")
        ->capture_default_str();
    ipea->add_option("--over-rotation", ipea_opt.over_rotation, "fractional pulse over-rotation (pulse backend)")
        ->capture_default_str();
    ipea->add_option("--pps-epsilon", ipea_opt.pps_epsilon, "pseudo-pure-state polarization (pulse backend)")
        ->capture_default_str();
    ipea->add_option("--realization", ipea_opt.realization, "how the pulse backend builds U_k")
        ->check(CLI::IsMember({"repeated", "recompile"}))
        ->capture_default_str();

    AspOptions asp_opt;
    CLI::App *asp = app.add_subcommand("asp", "adiabatic state preparation");
    add_common(asp, common);
    asp->add_option("--steps", asp_opt.steps, "number of Trotter steps M+1")->capture_default_str();
    asp->add_option("--scan", asp_opt.scan, "total-time grid start:stop:step");
    asp->add_option("--total-time", asp_opt.total_time, "single total time (default 9.5)");

    SweepOptions sweep_opt;
    CLI::App *sweep = app.add_subcommand("noise-sweep", "phase-error growth under coherent error in H");
    add_common(sweep, common);
    add_noise(sweep, sweep_opt.noise);
    sweep->add_option("--epsilons", sweep_opt.epsilons, "comma-separated coherent error strengths")
        ->capture_default_str();

    SpectraOptions spectra_opt;
    CLI::App *spectra = app.add_subcommand("spectra", "simulated probe spectra for every iteration");
    add_common(spectra, common);
    add_noise(spectra, spectra_opt.noise);
    spectra->add_option("--line-width", spectra_opt.params.line_width_hz, "line width (Hz)")->capture_default_str();
    spectra->add_option("--j-coupling", spectra_opt.params.j_coupling_hz, "J coupling (Hz)")->capture_default_str();
    spectra->add_option("--points", spectra_opt.params.points, "FID points (power of two)")->capture_default_str();
    spectra->add_option("--spectral-width", spectra_opt.params.spectral_width_hz, "spectral width (Hz)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<OutputFile> files;
        if (*eig) {
            files = cmd_eig(common);
        } else if (*ipea) {
            files = cmd_ipea(common, ipea_opt);
        } else if (*asp) {
            files = cmd_asp(common, asp_opt);
        } else if (*sweep) {
            files = cmd_noise_sweep(common, sweep_opt);
        } else {
            files = cmd_spectra(common, spectra_opt);
        }
        write_outputs(common.out, files);
    } catch (const ValidationError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
