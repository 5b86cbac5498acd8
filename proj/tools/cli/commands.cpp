// Copyright 2026 The paulimeas Authors
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

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "artifacts.hpp"
#include "bench.hpp"
#include "cli.hpp"
#include "paulimeas/gf2.hpp"
#include "paulimeas/metrics.hpp"
#include "paulimeas/operator_io.hpp"
#include "paulimeas/parallel.hpp"
#include "paulimeas/synthesis.hpp"
#include "report.hpp"

namespace paulimeas::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Unreadable, malformed or mutually inconsistent input files.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string &path) {
    try {
        return read_text_file(path);
    } catch (const std::runtime_error &e) {
        throw InputError(e.what());
    }
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw InputError("cannot write '" + path.string() + "'");
    }
}

struct LoadedOperator {
    WeightedPauliSum op;
    std::string digest;
};

LoadedOperator load_operator(const std::string &path) {
    std::string text = read_file(path);
    LoadedOperator out;
    out.digest = fnv1a_digest(text);
    try {
        out.op = parse_operator(text);
    } catch (const ParseError &e) {
        throw ParseError(0, path + ": " + e.what());
    }
    if (out.op.size() == 0) {
        throw InputError(path + ": operator has no non-identity terms");
    }
    return out;
}

ArrangementFile load_arrangement(const std::string &path, const LoadedOperator &lo, std::vector<std::string> &warnings) {
    ArrangementFile f = arrangement_from_json(read_file(path));
    try {
        validate_arrangement(lo.op, f.arrangement);
    } catch (const std::invalid_argument &e) {
        throw InputError("invalid arrangement '" + path + "': " + e.what());
    }
    if (!f.input_digest.empty() && f.input_digest != lo.digest) {
        warnings.push_back("arrangement was produced from a different input file (digest " + f.input_digest + ")");
    }
    return f;
}

std::vector<Pauli> collection_paulis(const WeightedPauliSum &op, const std::vector<std::size_t> &col) {
    std::vector<Pauli> out;
    out.reserve(col.size());
    for (std::size_t i : col) {
        out.push_back(op[i].pauli);
    }
    return out;
}

void fill_grouping(RunReport &r, const LoadedOperator &lo, const Arrangement &arr) {
    r.input_digest = lo.digest;
    r.num_qubits = lo.op.num_qubits();
    r.num_terms = lo.op.size();
    MetricReport m = metric_report(lo.op, arr);
    r.n_collections = m.n_collections;
    r.mean_collection_size = m.mean_collection_size;
    r.r_hat = m.r_hat;
    double k = 0;
    for (const auto &c : arr.collections) {
        k += static_cast<double>(rank(to_symplectic(collection_paulis(lo.op, c))));
    }
    r.mean_independent = arr.collections.empty() ? 0.0 : k / static_cast<double>(arr.collections.size());
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

void finish_timing(RunReport &r, Clock::time_point start, bool timing) {
    if (timing) {
        r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    }
}

StateVector state_for(std::uint64_t seed, std::size_t index, std::size_t n) {
    return random_state(n, derive_seed(seed, index));
}

// ---- group ---------------------------------------------------------------------------------

struct GroupArgs {
    std::string input, output, report, strategy = "sorted-insertion";
    bool no_timing = false;
};

int cmd_group(const GroupArgs &a, std::ostream &out) {
    auto start = Clock::now();
    bool sorted = a.strategy == "sorted-insertion" || a.strategy == "sorted_insertion";
    ColouringStrategy cs{};
    if (!sorted) {
        try {
            cs = parse_colouring_strategy(a.strategy);
        } catch (const std::invalid_argument &) {
            throw UsageError("unknown strategy '" + a.strategy + "'");
        }
    }
    LoadedOperator lo = load_operator(a.input);
    ArrangementFile f;
    f.arrangement = sorted ? sorted_insertion(lo.op) : greedy_colour(lo.op, cs);
    f.strategy = sorted ? "sorted-insertion" : a.strategy;
    f.num_qubits = lo.op.num_qubits();
    f.num_terms = lo.op.size();
    f.input_digest = lo.digest;
    validate_arrangement(lo.op, f.arrangement);
    write_file(a.output, arrangement_to_json(f));

    RunReport r;
    r.command = "group";
    r.strategy = f.strategy;
    fill_grouping(r, lo, f.arrangement);
    finish_timing(r, start, !a.no_timing);
    emit(report_to_json(r), a.report, out);
    return kExitOk;
}

// ---- synth ---------------------------------------------------------------------------------

struct SynthArgs {
    std::string input, arrangement, out_dir, report, construction = "best";
    bool no_timing = false;
};

int cmd_synth(const SynthArgs &a, std::ostream &out) {
    auto start = Clock::now();
    ConstructionChoice choice;
    try {
        choice = parse_construction_choice(a.construction);
    } catch (const std::invalid_argument &) {
        throw UsageError("unknown construction '" + a.construction + "'");
    }
    LoadedOperator lo = load_operator(a.input);
    RunReport r;
    r.command = "synth";
    ArrangementFile f = load_arrangement(a.arrangement, lo, r.warnings);
    r.strategy = f.strategy;
    fill_grouping(r, lo, f.arrangement);

    const auto &cols = f.arrangement.collections;
    std::vector<SynthesisResult> results(cols.size());
    parallel_for(cols.size(), [&](std::size_t i) {
        results[i] = synthesize(collection_paulis(lo.op, cols[i]), choice);
    });

    std::filesystem::path dir(a.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw InputError("cannot create '" + a.out_dir + "': " + ec.message());
    }
    const std::size_t n = lo.op.num_qubits();
    for (std::size_t i = 0; i < cols.size(); i++) {
        const SynthesisResult &res = results[i];
        std::string terms = "terms";
        for (std::size_t t : cols[i]) {
            terms += " " + std::to_string(t);
        }
        write_file(dir / circuit_file_name(i),
                   to_qasm(res.circuit, {"paulimeas collection " + std::to_string(i),
                                         "construction " + construction_name(res.construction), terms}));
        write_file(dir / map_file_name(i), map_to_json(res.map));
        r.gates.push_back({cols[i].size(), res.k, cz_count_bound(res.k, n), res.two_qubit_count,
                           construction_name(res.construction)});
    }
    finish_timing(r, start, !a.no_timing);
    emit(report_to_json(r), a.report, out);
    return kExitOk;
}

// ---- verify --------------------------------------------------------------------------------

struct VerifyArgs {
    std::string input, arrangement, artifacts, report, mode = "exact";
    std::size_t states = 50, shots = 100000;
    std::uint64_t seed = 1;
    bool no_timing = false;
};

struct Artifact {
    CliffordCircuit circuit;
    MeasurementMap map;
};

Artifact load_artifact(const std::filesystem::path &dir, std::size_t i, std::size_t n, std::size_t size) {
    Artifact art;
    auto qasm_path = dir / circuit_file_name(i);
    auto map_path = dir / map_file_name(i);
    try {
        art.circuit = parse_qasm(read_file(qasm_path.string()));
    } catch (const ParseError &e) {
        throw ParseError(0, qasm_path.string() + ": " + e.what());
    }
    try {
        art.map = map_from_json(read_file(map_path.string()));
        art.map.validate();
    } catch (const ParseError &e) {
        throw ParseError(0, map_path.string() + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, map_path.string() + ": " + e.what());
    }
    if (art.circuit.num_qubits() != n || art.map.num_qubits() != n || art.map.size() != size) {
        throw InputError("collection " + std::to_string(i) + ": circuit or map does not match the operator (" +
                         std::to_string(n) + " qubits, " + std::to_string(size) + " terms)");
    }
    return art;
}

std::string describe(const WeightedPauliSum &op, std::size_t collection, std::size_t term) {
    std::ostringstream s;
    s << "collection " << collection << ", term " << term << " (" << op[term].pauli.sparse_str() << ")";
    return s.str();
}

struct StateOutcome {
    std::size_t checks = 0;
    double worst = 0.0;
    std::string failure;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    if (a.mode != "exact" && a.mode != "shots") {
        throw UsageError("unknown mode '" + a.mode + "' (expected exact or shots)");
    }
    if (a.mode == "shots" && a.shots == 0) {
        throw UsageError("--shots must be positive");
    }
    LoadedOperator lo = load_operator(a.input);
    const WeightedPauliSum &op = lo.op;
    const std::size_t n = op.num_qubits();
    RunReport r;
    r.command = "verify";
    ArrangementFile f = load_arrangement(a.arrangement, lo, r.warnings);
    r.strategy = f.strategy;
    fill_grouping(r, lo, f.arrangement);
    const auto &cols = f.arrangement.collections;

    std::vector<Artifact> arts;
    for (std::size_t i = 0; i < cols.size(); i++) {
        arts.push_back(load_artifact(a.artifacts, i, n, cols[i].size()));
        r.gates.push_back({cols[i].size(), rank(to_symplectic(collection_paulis(op, cols[i]))), 0,
                           arts.back().circuit.two_qubit_count(), "file"});
        r.gates.back().theory_max = cz_count_bound(r.gates.back().k, n);
    }

    Verification v;
    v.mode = a.mode;
    v.seed = a.seed;
    v.shots = a.mode == "shots" ? a.shots : 0;

    // Symbolic conjugation first: it works at any size and names the broken term directly.
    for (std::size_t i = 0; i < cols.size() && v.passed; i++) {
        for (std::size_t j = 0; j < cols[i].size(); j++) {
            PhasedPauli img = conjugate(arts[i].circuit, PhasedPauli{op[cols[i][j]].pauli, 0});
            int sign = img.phase == 0 ? 1 : img.phase == 2 ? -1 : 0;
            v.checks++;
            if (!img.pauli.is_z_string() || sign != arts[i].map.signs[j] ||
                img.pauli.z() != arts[i].map.physical_mask(j)) {
                v.passed = false;
                v.counterexample = describe(op, i, cols[i][j]) + ": circuit maps it to " +
                                   std::string(sign < 0 ? "-" : "+") + img.pauli.sparse_str() +
                                   " but the map expects " + (arts[i].map.signs[j] < 0 ? "-" : "+") + "Z on " +
                                   arts[i].map.physical_mask(j).str();
                break;
            }
        }
    }

    if (v.passed && n > kMaxSimQubits) {
        r.warnings.push_back("statevector checks skipped: " + std::to_string(n) + " qubits exceeds the cap of " +
                             std::to_string(kMaxSimQubits));
    } else if (v.passed) {
        v.states = a.states;
        std::vector<StateOutcome> outcomes(a.states);
        const bool exact = a.mode == "exact";
        parallel_for(a.states, [&](std::size_t s) {
            StateOutcome &o = outcomes[s];
            StateVector psi = state_for(a.seed, s, n);
            for (std::size_t i = 0; i < cols.size() && o.failure.empty(); i++) {
                std::vector<double> est;
                if (exact) {
                    est = reconstruct_exact(probabilities(apply_circuit(arts[i].circuit, psi)), arts[i].map);
                } else {
                    est = reconstruct(sample(arts[i].circuit, psi, a.shots, derive_seed(derive_seed(a.seed, s), i)),
                                      arts[i].map);
                }
                for (std::size_t j = 0; j < cols[i].size(); j++) {
                    double direct = expectation(op[cols[i][j]].pauli, psi);
                    double diff = std::abs(est[j] - direct);
                    double score;
                    bool bad;
                    if (exact) {
                        score = diff;
                        bad = diff > 1e-9;
                    } else {
                        double sigma = std::sqrt(std::max(0.0, 1.0 - direct * direct) / static_cast<double>(a.shots));
                        score = sigma > 0 ? diff / sigma : (diff > 1e-9 ? std::numeric_limits<double>::infinity() : 0);
                        bad = score > 5.0;
                    }
                    o.checks++;
                    o.worst = std::max(o.worst, score);
                    if (bad && o.failure.empty()) {
                        std::ostringstream msg;
                        msg.precision(12);
                        msg << describe(op, i, cols[i][j]) << ", state " << s << ": reconstructed " << est[j]
                            << ", direct " << direct;
                        o.failure = msg.str();
                    }
                }
            }
        });
        for (const StateOutcome &o : outcomes) {
            v.checks += o.checks;
            v.worst = std::max(v.worst, o.worst);
            if (!o.failure.empty() && v.passed) {
                v.passed = false;
                v.counterexample = o.failure;
            }
        }
    }
    r.verification = v;
    finish_timing(r, start, !a.no_timing);
    emit(report_to_json(r), a.report, out);
    if (!v.passed) {
        err << "verification failed: " << v.counterexample << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// ---- metrics -------------------------------------------------------------------------------

struct MetricsArgs {
    std::string input, arrangement, report, state_file;
    std::size_t states = 100;
    std::uint64_t seed = 1;
    double epsilon = 0.01;
    bool no_timing = false;
};

int cmd_metrics(const MetricsArgs &a, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    if (!(a.epsilon > 0)) {
        throw UsageError("--epsilon must be positive");
    }
    LoadedOperator lo = load_operator(a.input);
    const WeightedPauliSum &op = lo.op;
    const std::size_t n = op.num_qubits();
    RunReport r;
    r.command = "metrics";
    ArrangementFile f = load_arrangement(a.arrangement, lo, r.warnings);
    r.strategy = f.strategy;
    fill_grouping(r, lo, f.arrangement);

    if (n > kMaxSimQubits) {
        std::string w = "r_exact omitted: " + std::to_string(n) + " qubits exceeds the cap of " +
                        std::to_string(kMaxSimQubits);
        r.warnings.push_back(w);
        err << "warning: " << w << "\n";
    } else if (a.states > 0) {
        std::vector<RValue> vals(a.states);
        parallel_for(a.states, [&](std::size_t s) {
            vals[s] = r_exact(op, f.arrangement, state_for(a.seed, s, n));
        });
        RExactStats st;
        st.states = a.states;
        st.seed = a.seed;
        st.min = std::numeric_limits<double>::infinity();
        st.max = -st.min;
        double sum = 0;
        std::size_t finite = 0;
        for (const RValue &v : vals) {
            if (v.infinite) {
                st.infinite++;
                continue;
            }
            finite++;
            sum += v.value;
            st.min = std::min(st.min, v.value);
            st.max = std::max(st.max, v.value);
        }
        if (finite == 0) {
            st.min = st.max = st.mean = 0.0;
        } else {
            st.mean = sum / static_cast<double>(finite);
        }
        r.r_exact = st;
    }

    if (!a.state_file.empty()) {
        StateVector psi = parse_state(read_file(a.state_file));
        if (psi.num_qubits() != n) {
            throw InputError("state file has " + std::to_string(psi.num_qubits()) + " qubits, operator has " +
                             std::to_string(n));
        }
        std::vector<double> vars = collection_variances(op, f.arrangement, psi);
        StateMetrics sm;
        sm.mg_eps2 = mg_eps2(vars);
        sm.mu_eps2 = mu_eps2(op, psi);
        RValue rv = r_exact(op, f.arrangement, psi);
        sm.r = rv.value;
        sm.r_infinite = rv.infinite;
        ShotPlan plan = shot_plan(vars, a.epsilon);
        sm.epsilon = a.epsilon;
        sm.total_shots = plan.total_shots;
        sm.per_collection_shots = plan.per_collection_shots;
        r.state = sm;
    }
    finish_timing(r, start, !a.no_timing);
    emit(report_to_json(r), a.report, out);
    return kExitOk;
}

// ---- bench ---------------------------------------------------------------------------------

int cmd_bench(const BenchOptions &o, const std::string &report, std::ostream &out) {
    if (o.max_terms == 0 || o.qubits == 0) {
        throw UsageError("--terms and --qubits must be positive");
    }
    std::vector<BenchPoint> pts;
    try {
        pts = run_bench(o);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    emit(bench_to_json(o, pts), report, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pauli grouping, measurement metrics and diagonalizing circuit synthesis", "paulimeas"};
    app.require_subcommand(1);

    GroupArgs g;
    auto *group = app.add_subcommand("group", "Partition an operator into commuting collections");
    group->add_option("input", g.input, "Operator file")->required();
    group->add_option("-s,--strategy", g.strategy,
                      "sorted-insertion, largest-first, dsatur, connected-sequential or independent-set")
        ->capture_default_str();
    group->add_option("-o,--output", g.output, "Arrangement file to write")->required();
    group->add_option("--report", g.report, "Write the report here instead of stdout");
    group->add_flag("--no-timing", g.no_timing, "Leave wall time out of the report");

    SynthArgs sy;
    auto *synth = app.add_subcommand("synth", "Synthesize a rotation circuit and map per collection");
    synth->add_option("input", sy.input, "Operator file")->required();
    synth->add_option("arrangement", sy.arrangement, "Arrangement file")->required();
    synth->add_option("-c,--construction", sy.construction, "cz, cnot or best")->capture_default_str();
    synth->add_option("-d,--out-dir", sy.out_dir, "Directory for circuits and maps")->required();
    synth->add_option("--report", sy.report, "Write the report here instead of stdout");
    synth->add_flag("--no-timing", sy.no_timing, "Leave wall time out of the report");

    VerifyArgs ve;
    auto *verify = app.add_subcommand("verify", "Check circuits and maps against direct expectations");
    verify->add_option("input", ve.input, "Operator file")->required();
    verify->add_option("arrangement", ve.arrangement, "Arrangement file")->required();
    verify->add_option("-d,--artifacts", ve.artifacts, "Directory written by synth")->required();
    verify->add_option("--mode", ve.mode, "exact or shots")->capture_default_str();
    verify->add_option("--shots", ve.shots, "Shots per collection and state in shots mode")->capture_default_str();
    verify->add_option("--states", ve.states, "Number of random states")->capture_default_str();
    verify->add_option("--seed", ve.seed, "Random seed")->capture_default_str();
    verify->add_option("--report", ve.report, "Write the report here instead of stdout");
    verify->add_flag("--no-timing", ve.no_timing, "Leave wall time out of the report");

    MetricsArgs me;
    auto *metrics = app.add_subcommand("metrics", "Report R estimates and shot requirements");
    metrics->add_option("input", me.input, "Operator file")->required();
    metrics->add_option("arrangement", me.arrangement, "Arrangement file")->required();
    metrics->add_option("--states", me.states, "Random states for exact R")->capture_default_str();
    metrics->add_option("--seed", me.seed, "Random seed")->capture_default_str();
    metrics->add_option("--state-file", me.state_file, "Evaluate variances and a shot plan on this state");
    metrics->add_option("--epsilon", me.epsilon, "Target standard error for the shot plan")->capture_default_str();
    metrics->add_option("--report", me.report, "Write the report here instead of stdout");
    metrics->add_flag("--no-timing", me.no_timing, "Leave wall time out of the report");

    BenchOptions bo;
    std::string bench_report;
    auto *bench = app.add_subcommand("bench", "Time grouping on synthetic operators of growing size");
    bench->add_option("--terms", bo.max_terms, "Largest term count in the sweep")->capture_default_str();
    bench->add_option("--qubits", bo.qubits, "Qubits per synthetic term")->capture_default_str();
    bench->add_option("--seed", bo.seed, "Random seed")->capture_default_str();
    bench->add_option("--graph-max-terms", bo.graph_max_terms, "Largest t for graph timing")->capture_default_str();
    bench->add_option("--min-time", bo.min_seconds, "Minimum seconds accumulated per point")->capture_default_str();
    bench->add_option("--batches", bo.batches, "Timing batches per point; the best is reported")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--variant-terms", bo.variant_terms, "Terms budget for independent operators per point")->capture_default_str();
    bench->add_option("--report", bench_report, "Write the series here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (group->parsed()) {
            return cmd_group(g, out);
        }
        if (synth->parsed()) {
            return cmd_synth(sy, out);
        }
        if (verify->parsed()) {
            return cmd_verify(ve, out, err);
        }
        if (metrics->parsed()) {
            return cmd_metrics(me, out, err);
        }
        return cmd_bench(bo, bench_report, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace paulimeas::cli
