// Command-line front end: synthesis, label tracking, verification, rebasing
// and resource reporting.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "paritylane/lhz.hpp"
#include "paritylane/qaoa.hpp"
#include "paritylane/qasm.hpp"
#include "paritylane/qft.hpp"
#include "paritylane/rebase.hpp"
#include "paritylane/resources.hpp"
#include "paritylane/sim.hpp"
#include "paritylane/tracker.hpp"

using json = nlohmann::json;
using namespace paritylane;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError("cannot open output file " + path);
    out << text;
}

IsingProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open problem file " + path);
    json j = json::parse(in);
    IsingProblem p = IsingProblem::make(j.at("n").get<unsigned>());
    if (j.contains("h")) {
        auto h = j.at("h").get<std::vector<double>>();
        if (h.size() != p.n) throw CLI::ValidationError("h size mismatch");
        p.field = h;
    }
    if (j.contains("J")) {
        for (const auto& row : j.at("J")) {
            p.set_coupling(row.at(0).get<unsigned>(), row.at(1).get<unsigned>(),
                           row.at(2).get<double>());
        }
    }
    p.validate();
    return p;
}

QaoaParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open params file " + path);
    json j = json::parse(in);
    QaoaParams q{j.at("betas").get<std::vector<double>>(),
                 j.at("gammas").get<std::vector<double>>()};
    q.validate();
    return q;
}

json labels_json(const std::vector<LabelSet>& labels) {
    json out = json::array();
    for (const auto& l : labels) {
        json row = json::array();
        for (unsigned m : l.members()) row.push_back(m);
        out.push_back(row);
    }
    return out;
}

json trace_json(unsigned n_logical, const std::vector<TrackSnapshot>& history) {
    json steps = json::array();
    for (const auto& snap : history) {
        steps.push_back({{"lambda", snap.lambda}, {"labels", labels_json(snap.labels)}});
    }
    return {{"n_logical", n_logical}, {"steps", steps}};
}

json cnot_list_json(const ProgressionSchedule& sched) {
    json rounds = json::array();
    for (const auto& r : sched.rounds) {
        json cl = json::array();
        for (auto [c, t] : r.all()) cl.push_back({c, t});
        rounds.push_back(cl);
    }
    return rounds;
}

Circuit apply_rebase_flag(Circuit c, const std::string& flag) {
    if (flag.empty()) return c;
    if (flag == "cz") return rebase(c, GateSetTarget::CZ_H);
    if (flag == "cp") return rebase(c, GateSetTarget::CP_Y);
    if (flag == "iswap") return rebase(c, GateSetTarget::ISWAP_PAIRING);
    throw CLI::ValidationError("--rebase must be cz, cp or iswap");
}

void print_report(const std::string& name, const Circuit& c, const std::string& format) {
    auto r = resource_report(c);
    if (format == "csv") {
        std::cout << report_csv_header() << "\n" << report_csv_row(name, r) << "\n";
    } else {
        std::cout << name << "\n" << report_table(r);
    }
}

int verify_qft(unsigned n, double tol) {
    Circuit synth = synth_qft(n);
    Circuit ref = reference_qft(n);
    double max_dev = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        StateVector a = run_pure(synth, StateVector::basis(static_cast<int>(n), b));
        StateVector r0 = run_pure(ref, StateVector::basis(static_cast<int>(n), b));
        StateVector r(static_cast<int>(n));
        for (std::size_t i = 0; i < r0.dim(); ++i) {
            std::size_t ri = 0;
            for (unsigned q = 0; q < n; ++q)
                if (i >> q & 1) ri |= std::size_t{1} << (n - 1 - q);
            r[ri] = r0[i];
        }
        auto eq = equiv_global_phase(a, r, tol);
        max_dev = std::max(max_dev, eq.max_dev);
        if (!eq.equal) {
            std::cout << "FAIL qft n=" << n << " max deviation " << eq.max_dev << "\n";
            return 1;
        }
    }
    std::cout << "PASS qft n=" << n << " max deviation " << max_dev << "\n";
    return 0;
}

int verify_qaoa(unsigned n, unsigned p, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d(0.0, 1.0);
    IsingProblem prob = IsingProblem::make(n);
    for (unsigned i = 0; i < n; ++i) {
        prob.field[i] = d(rng);
        for (unsigned j = i + 1; j < n; ++j) prob.set_coupling(i, j, d(rng));
    }
    QaoaParams params;
    for (unsigned i = 0; i < p; ++i) {
        params.betas.push_back(d(rng));
        params.gammas.push_back(d(rng));
    }
    QaoaCircuit qc = synth_qaoa(prob, params, QaoaTopology::Linear);
    StateVector out = run_pure(qc.circuit, StateVector(static_cast<int>(n)));
    StateVector dec = frame_decode(out, qc.final_labels);
    StateVector ref = reference_state(prob, params);
    auto eq = equiv_global_phase(dec, ref, tol);
    std::cout << (eq.equal ? "PASS" : "FAIL") << " qaoa linear n=" << n << " p=" << p
              << " max deviation " << eq.max_dev << "\n";
    std::cout << "energy " << energy(prob, dec) << "\n";
    return eq.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"paritylane: SWAP-less synthesis of QFT/QAOA circuits on chains and ladders"};
    app.require_subcommand(1);

    // qft
    auto* qft = app.add_subcommand("qft", "synthesize the QFT on a linear chain");
    unsigned qft_n = 4;
    std::string qft_out, qft_rebase, qft_trace, qft_format = "table";
    bool qft_report = false;
    qft->add_option("--n", qft_n, "logical qubit count")->required()->check(CLI::Range(2u, 64u));
    qft->add_option("--out", qft_out, "QASM output file");
    qft->add_flag("--report", qft_report, "print the resource report");
    qft->add_option("--format", qft_format, "report format: table|csv");
    qft->add_option("--rebase", qft_rebase, "rebase target: cz|cp|iswap");
    qft->add_option("--trace", qft_trace, "label-trace JSON output file");

    // qaoa
    auto* qaoa = app.add_subcommand("qaoa", "synthesize a QAOA circuit");
    std::string qa_problem, qa_params, qa_topology = "linear", qa_out, qa_rebase, qa_trace,
                qa_format = "table";
    bool qa_report = false, qa_verify = false;
    std::uint64_t qa_seed = 1;
    qaoa->add_option("--problem", qa_problem, "problem JSON")->required();
    qaoa->add_option("--params", qa_params, "params JSON")->required();
    qaoa->add_option("--topology", qa_topology, "linear|ladder");
    qaoa->add_option("--out", qa_out, "QASM output file");
    qaoa->add_flag("--report", qa_report, "print the resource report");
    qaoa->add_flag("--verify", qa_verify, "re-simulate against the dense reference");
    qaoa->add_option("--format", qa_format, "report format: table|csv");
    qaoa->add_option("--rebase", qa_rebase, "rebase target: cz|cp|iswap");
    qaoa->add_option("--trace", qa_trace, "label-trace JSON output file");
    qaoa->add_option("--seed", qa_seed, "seed for verification sampling");

    // track
    auto* track = app.add_subcommand("track", "track parity labels through a CNOT circuit");
    std::string tr_in, tr_out;
    bool tr_per_gate = false;
    track->add_option("--qasm", tr_in, "input QASM (CNOTs only)")->required();
    track->add_option("--out", tr_out, "label-trace JSON output (default stdout)");
    track->add_flag("--per-gate", tr_per_gate, "snapshot after every gate");

    // verify
    auto* verify = app.add_subcommand("verify", "check synthesized circuits against oracles");
    std::string v_alg = "qft";
    unsigned v_n = 3, v_p = 1;
    std::uint64_t v_seed = 1;
    double v_tol = 1e-9;
    verify->add_option("--alg", v_alg, "qft|qaoa")->required();
    verify->add_option("--n", v_n, "size")->check(CLI::Range(2u, 10u));
    verify->add_option("--p", v_p, "QAOA rounds");
    verify->add_option("--seed", v_seed, "random problem seed");
    verify->add_option("--tol", v_tol, "tolerance");

    // report
    auto* report = app.add_subcommand("report", "formula vs measured resource tables");
    unsigned rp_from = 2, rp_to = 16;
    bool rp_check = false;
    std::string rp_format = "table";
    report->add_option("--from", rp_from, "first n");
    report->add_option("--to", rp_to, "last n");
    report->add_flag("--check", rp_check, "exit nonzero on any formula mismatch");
    report->add_option("--format", rp_format, "table|csv");

    // rebase
    auto* reb = app.add_subcommand("rebase", "rewrite CNOTs into another gate set");
    std::string rb_in, rb_out, rb_target = "cz";
    reb->add_option("--qasm", rb_in, "input QASM")->required();
    reb->add_option("--target", rb_target, "cz|cp|iswap")->required();
    reb->add_option("--out", rb_out, "output QASM (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (qft->parsed()) {
            QftPlan plan = synth_qft_plan(qft_n);
            Circuit out = apply_rebase_flag(plan.circuit, qft_rebase);
            if (!qft_out.empty()) write_file(qft_out, to_qasm(out));
            else if (!qft_report) std::cout << to_qasm(out);
            if (qft_report) print_report("qft_n" + std::to_string(qft_n), out, qft_format);
            if (!qft_trace.empty()) {
                Circuit cnots(static_cast<int>(qft_n));
                for (const auto& g : plan.circuit.gates())
                    if (g.kind == GateKind::CNOT) cnots.append(g);
                auto res = track_circuit(cnots, TrackerState::identity(qft_n));
                write_file(qft_trace, trace_json(qft_n, res.history).dump(2) + "\n");
            }
            return 0;
        }
        if (qaoa->parsed()) {
            IsingProblem prob = load_problem(qa_problem);
            QaoaParams params = load_params(qa_params);
            QaoaTopology topo;
            if (qa_topology == "linear") topo = QaoaTopology::Linear;
            else if (qa_topology == "ladder") topo = QaoaTopology::Ladder;
            else throw CLI::ValidationError("--topology must be linear or ladder");
            QaoaCircuit qc = synth_qaoa(prob, params, topo);
            Circuit out = qa_rebase.empty() ? qc.circuit : [&] {
                if (qc.circuit.has_measurement())
                    throw CLI::ValidationError("rebase of measured ladder circuits unsupported");
                return apply_rebase_flag(qc.circuit, qa_rebase);
            }();
            if (!qa_out.empty()) write_file(qa_out, to_qasm(out));
            else if (!qa_report && !qa_verify) std::cout << to_qasm(out);
            if (qa_report)
                print_report("qaoa_" + qa_topology + "_n" + std::to_string(prob.n), out,
                             qa_format);
            if (!qa_trace.empty()) {
                json j = {{"n_logical", prob.n},
                          {"final_labels", labels_json(qc.final_labels)}};
                write_file(qa_trace, j.dump(2) + "\n");
            }
            if (qa_verify) {
                if (prob.n > 6 || (topo == QaoaTopology::Ladder && prob.n > 6))
                    throw CLI::ValidationError("--verify supports n <= 6");
                StateVector ref = reference_state(prob, params);
                if (topo == QaoaTopology::Linear) {
                    StateVector out_s =
                        run_pure(qc.circuit, StateVector(static_cast<int>(prob.n)));
                    StateVector dec = frame_decode(out_s, qc.final_labels);
                    auto eq = equiv_global_phase(dec, ref, 1e-9);
                    std::cout << (eq.equal ? "PASS" : "FAIL") << " max deviation "
                              << eq.max_dev << "\n";
                    std::cout << "energy " << energy(prob, dec) << "\n";
                    if (!eq.equal) return 1;
                } else {
                    RunOptions opts;
                    opts.policy = OutcomePolicy::Random;
                    opts.seed = qa_seed;
                    auto branches =
                        run(qc.circuit, StateVector(static_cast<int>(2 * prob.n)), opts);
                    // rail-2 qubits are measured out; compare rail 1
                    StateVector h = branches[0].state;
                    for (unsigned k = 0; k < prob.n; ++k)
                        h.apply_h(static_cast<int>(prob.n + k));
                    const std::size_t dim1 = std::size_t{1} << prob.n;
                    std::size_t best = 0;
                    double bw = -1;
                    for (std::size_t hi = 0; hi < dim1; ++hi) {
                        double w = 0;
                        for (std::size_t lo = 0; lo < dim1; ++lo)
                            w += std::norm(h[(hi << prob.n) | lo]);
                        if (w > bw) { bw = w; best = hi; }
                    }
                    StateVector rail1(static_cast<int>(prob.n));
                    for (std::size_t lo = 0; lo < dim1; ++lo)
                        rail1[lo] = h[(best << prob.n) | lo];
                    rail1.normalize();
                    StateVector dec = frame_decode(rail1, qc.final_labels);
                    auto eq = equiv_global_phase(dec, ref, 1e-9);
                    std::cout << (eq.equal ? "PASS" : "FAIL") << " max deviation "
                              << eq.max_dev << "\n";
                    if (!eq.equal) return 1;
                }
            }
            return 0;
        }
        if (track->parsed()) {
            std::ifstream in(tr_in);
            if (!in) throw CLI::ValidationError("cannot open " + tr_in);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            Circuit c = from_qasm(text);
            auto res = track_circuit(c, TrackerState::identity(static_cast<unsigned>(c.n_qubits())),
                                     tr_per_gate ? TrackGranularity::PerGate
                                                 : TrackGranularity::CommutingRound);
            std::string out = trace_json(static_cast<unsigned>(c.n_qubits()), res.history).dump(2) + "\n";
            if (tr_out.empty()) std::cout << out;
            else write_file(tr_out, out);
            return 0;
        }
        if (verify->parsed()) {
            if (v_alg == "qft") return verify_qft(v_n, v_tol);
            if (v_alg == "qaoa") return verify_qaoa(v_n, v_p, v_seed, v_tol);
            throw CLI::ValidationError("--alg must be qft or qaoa");
        }
        if (report->parsed()) {
            int bad = 0;
            std::mt19937_64 rng(11);
            std::normal_distribution<double> d(0.0, 1.0);
            if (rp_format == "csv") std::cout << report_csv_header() << "\n";
            for (unsigned n = rp_from; n <= rp_to; ++n) {
                long ni = n;
                auto rq = resource_report(synth_qft(n));
                bool okq = rq.cnot_count == ni * ni - 1 &&
                           rq.sq_count == (ni * ni + 5 * ni - 4) / 2 &&
                           rq.cnot_depth == 4 * ni - 4 && rq.sq_depth == ni + 1 &&
                           rq.total_depth_parallel_conv == 5 * ni - 3 &&
                           rq.total_depth_serial_conv == 6 * ni - 5;
                IsingProblem p = IsingProblem::make(n);
                for (unsigned i = 0; i < n; ++i) {
                    p.field[i] = d(rng);
                    for (unsigned j = i + 1; j < n; ++j) p.set_coupling(i, j, d(rng));
                }
                QaoaParams params{{0.3}, {0.7}};
                auto rl = resource_report(synth_qaoa(p, params, QaoaTopology::Linear).circuit);
                bool okl = rl.cnot_count == ni * ni - 1 && rl.cnot_depth == 2 * ni + 2;
                bool okd = true;
                std::string ladder_cell = "-";
                if (n <= 32) {
                    auto rd =
                        resource_report(synth_qaoa(p, params, QaoaTopology::Ladder).circuit);
                    okd = rd.cnot_count == ni * ni + ni - 1 && rd.measurement_count == ni &&
                          rd.cnot_depth == 2 * ((ni + 1) / 2) + 4;
                    ladder_cell = std::to_string(rd.cnot_count) + "/" +
                                  std::to_string(rd.cnot_depth);
                    if (rd.cnot_depth_measured > rd.cnot_depth) okd = false;
                }
                if (rp_format == "csv") {
                    std::cout << report_csv_row("qft_n" + std::to_string(n), rq) << "\n";
                    std::cout << report_csv_row("qaoa_linear_n" + std::to_string(n), rl) << "\n";
                } else {
                    std::cout << "n=" << n << "  qft " << rq.cnot_count << " cnots/"
                              << rq.total_depth_parallel_conv << " depth (formula "
                              << ni * ni - 1 << "/" << 5 * ni - 3 << ") "
                              << (okq ? "ok" : "MISMATCH") << "; qaoa-linear "
                              << rl.cnot_count << "/" << rl.cnot_depth << " (" << ni * ni - 1
                              << "/" << 2 * ni + 2 << ") " << (okl ? "ok" : "MISMATCH")
                              << "; ladder " << ladder_cell << " ("
                              << ni * ni + ni - 1 << "/" << 2 * ((ni + 1) / 2) + 4 << ") "
                              << (okd ? "ok" : "MISMATCH") << "\n";
                }
                if (!(okq && okl && okd)) ++bad;
            }
            if (rp_check && bad) {
                std::cout << bad << " size(s) deviate from the formulas\n";
                return 1;
            }
            return 0;
        }
        if (reb->parsed()) {
            std::ifstream in(rb_in);
            if (!in) throw CLI::ValidationError("cannot open " + rb_in);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            Circuit c = from_qasm(text);
            Circuit out = apply_rebase_flag(c, rb_target);
            if (rb_out.empty()) std::cout << to_qasm(out);
            else write_file(rb_out, to_qasm(out));
            auto s = entangling_savings(c);
            std::cerr << "pairs matched: " << s.pairable << ", entangling "
                      << s.entangling_cz_h << " -> " << s.entangling_iswap
                      << " under iswap pairing\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
