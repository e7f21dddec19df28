// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "realqm/cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "realqm/dynamics.hpp"
#include "realqm/entanglement.hpp"
#include "realqm/error.hpp"
#include "realqm/indefinite_metric.hpp"
#include "realqm/interferometer.hpp"
#include "realqm/linalg.hpp"
#include "realqm/matrix_io.hpp"
#include "realqm/random.hpp"
#include "realqm/realmap.hpp"
#include "realqm/superselection.hpp"

namespace realqm::cli {

using nlohmann::json;

namespace {

/// Input files that cannot be opened or written; maps to kExitIo.
class IoFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_name(Format f) {
    switch (f) {
    case Format::Csv:
        return "csv";
    case Format::Json:
        return "json";
    case Format::Text:
        return "text";
    }
    return "csv";
}

void require_format(const ExperimentConfig &cfg, std::initializer_list<Format> allowed,
                    const char *subcommand) {
    for (Format f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw ValidationError(std::string(subcommand) + ": format '" + format_name(cfg.format) +
                          "' is not supported");
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
    }
    return out;
}

// larmor

void run_larmor(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err) {
    require_format(cfg, {Format::Csv, Format::Json}, "larmor");
    std::vector<double> times(static_cast<std::size_t>(cfg.steps) + 1);
    for (int k = 0; k <= cfg.steps; ++k) {
        times[static_cast<std::size_t>(k)] = cfg.tmax * k / cfg.steps;
    }
    const auto records = larmor_experiment(cfg.omega, times);

    const std::array<std::string, 2> notes = {
        "generator realify(-i H / hbar): a_i(t) = -sin(Omega t)/sqrt2, b_i(t) = +sin(Omega t)/sqrt2",
        "opposite convention a(t) ~ e^{+i Omega t} swaps the signs of a_i and b_i"};
    for (const auto &n : notes) {
        err << "note: " << n << "\n";
    }

    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (const auto &r : records) {
            rows.push_back({{"t", r.t},
                            {"a_r", r.state[0]},
                            {"a_i", r.state[1]},
                            {"b_r", r.state[2]},
                            {"b_i", r.state[3]},
                            {"p0", r.p[0]},
                            {"p1", r.p[1]}});
        }
        out << json{{"subcommand", "larmor"},
                    {"omega", cfg.omega},
                    {"notes", notes},
                    {"records", std::move(rows)}}
                   .dump(2)
            << "\n";
        return;
    }
    out << "t,a_r,a_i,b_r,b_i,p0,p1\n";
    for (const auto &r : records) {
        out << num(r.t) << ',' << num(r.state[0]) << ',' << num(r.state[1]) << ','
            << num(r.state[2]) << ',' << num(r.state[3]) << ',' << num(r.p[0]) << ','
            << num(r.p[1]) << "\n";
    }
}

// mzi

json composite_report() {
    const auto describe = [](const std::optional<Complex> &c) {
        return c ? format_identity_multiple(*c) : std::string("not a multiple of I");
    };
    const ComplexMatrix nc = mach_zehnder_complex();
    const RealOperator nr = mach_zehnder_real();
    const ComplexMatrix uc = mach_zehnder_unnormalized_complex();
    const RealOperator ur = mach_zehnder_unnormalized_real();
    return json{
        {"normalized",
         {{"complex", describe(identity_multiple(nc))},
          {"real", describe(identity_multiple(nr))},
          {"complex_deviation_from_minus_identity",
           distance(nc, Complex(-1.0) * ComplexMatrix::identity(2))},
          {"real_deviation_from_minus_identity", distance(nr, -1.0 * RealOperator::identity(4))}}},
        {"unnormalized",
         {{"complex", describe(identity_multiple(uc))}, {"real", describe(identity_multiple(ur))}}},
        {"beamsplitter_squared_minus_mirror",
         distance(beamsplitter().complex_form * beamsplitter().complex_form, mirror().complex_form)}};
}

void run_mzi(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err) {
    require_format(cfg, {Format::Csv, Format::Json}, "mzi");
    const std::vector<double> phases = cfg.grid ? phase_grid(*cfg.grid) : std::vector{cfg.phase};
    const auto records = mzi_sweep(phases);
    const json composite = composite_report();

    double gap = 0.0;
    for (const auto &r : records) {
        gap = std::max({gap, std::abs(r.real_path.p0 - r.complex_path.p0),
                        std::abs(r.real_path.p1 - r.complex_path.p1)});
    }

    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (const auto &r : records) {
            rows.push_back({{"phi", r.phi},
                            {"p0", r.real_path.p0},
                            {"p1", r.real_path.p1},
                            {"p0_complex", r.complex_path.p0},
                            {"p1_complex", r.complex_path.p1}});
        }
        out << json{{"subcommand", "mzi"},
                    {"composite", composite},
                    {"max_representation_gap", gap},
                    {"records", std::move(rows)}}
                   .dump(2)
            << "\n";
        return;
    }
    err << "note: normalized composite = " << composite["normalized"]["real"].get<std::string>()
        << ", unnormalized composite = " << composite["unnormalized"]["real"].get<std::string>()
        << "\n";
    out << "phi,p0,p1\n";
    for (const auto &r : records) {
        out << num(r.phi) << ',' << num(r.real_path.p0) << ',' << num(r.real_path.p1) << "\n";
    }
}

// entropy-scan

void run_entropy_scan(const ExperimentConfig &cfg, std::ostream &out) {
    require_format(cfg, {Format::Csv, Format::Json}, "entropy-scan");
    const auto alphas = linspace(0.0, 2.0 * std::numbers::pi, cfg.alpha_steps);
    const auto betas = linspace(0.0, 0.5 * std::numbers::pi, cfg.beta_steps);
    const auto records = entropy_scan(alphas, betas);

    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (const auto &r : records) {
            rows.push_back({{"alpha", r.alpha},
                            {"beta", r.beta},
                            {"det_rho1", r.det_rho1},
                            {"entropy_nats", r.entropy_nats},
                            {"entropy_bits", r.entropy_nats / std::numbers::ln2},
                            {"class", std::string(to_string(r.cls))}});
        }
        out << json{{"subcommand", "entropy-scan"}, {"records", std::move(rows)}}.dump(2) << "\n";
        return;
    }
    out << "alpha,beta,det_rho1,entropy_nats,class\n";
    for (const auto &r : records) {
        out << num(r.alpha) << ',' << num(r.beta) << ',' << num(r.det_rho1) << ','
            << num(r.entropy_nats) << ',' << to_string(r.cls) << "\n";
    }
}

// audit

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoFailure("cannot read " + path.string());
    }
    return buf.str();
}

RealOperator load_operator(const std::filesystem::path &path) {
    io::AnyMatrix m = io::parse_matrix(read_file(path));
    if (const auto *c = std::get_if<ComplexMatrix>(&m)) {
        return realify_op(*c);
    }
    auto &r = std::get<Eigen::MatrixXd>(m);
    if (r.rows() % 2 != 0) {
        throw io::ParseError("real operator must have even dimension", "$");
    }
    return RealOperator(std::move(r));
}

json audit_json(const AuditReport &rep) {
    json j{{"verdict", std::string(to_string(rep.verdict))},
           {"linear_residual", rep.linear_residual},
           {"antilinear_residual", rep.antilinear_residual},
           {"commutator_norm", rep.commutator_norm},
           {"threshold", rep.threshold}};
    if (rep.complex_form) {
        j["complex_form"] = io::to_json(*rep.complex_form);
    }
    return j;
}

void run_audit_file(const ExperimentConfig &cfg, std::ostream &out) {
    const RealOperator op = load_operator(*cfg.matrix);
    const AuditReport rep = audit(op);
    if (cfg.format == Format::Json) {
        json j = audit_json(rep);
        j["subcommand"] = "audit";
        j["source"] = cfg.matrix->filename().string();
        j["dim2"] = op.dim2();
        out << j.dump(2) << "\n";
        return;
    }
    out << "source,dim2,verdict,linear_residual,antilinear_residual,commutator_norm\n";
    out << cfg.matrix->filename().string() << ',' << op.dim2() << ',' << to_string(rep.verdict)
        << ',' << num(rep.linear_residual) << ',' << num(rep.antilinear_residual) << ','
        << num(rep.commutator_norm) << "\n";
}

void run_audit_battery(const ExperimentConfig &cfg, std::ostream &out) {
    static constexpr std::array<std::pair<const char *, Verdict>, 3> kKinds = {{
        {"unitary", Verdict::Physical},
        {"antiunitary", Verdict::AntiLinear},
        {"generic", Verdict::Extended},
    }};
    random::Rng rng(cfg.seed);
    std::vector<RealOperator> ops;
    ops.reserve(static_cast<std::size_t>(cfg.trials));
    for (int k = 0; k < cfg.trials; ++k) {
        const Index n = 1 + (k / 3) % 4;
        switch (k % 3) {
        case 0:
            ops.push_back(realify_op(random::unitary(n, rng)));
            break;
        case 1:
            ops.push_back(realify_op(random::unitary(n, rng)) * conjugation_operator(n));
            break;
        default:
            ops.emplace_back(random::real_matrix(2 * n, rng));
            break;
        }
    }
    const auto reports = audit_all(ops);

    int matched = 0;
    json rows = json::array();
    std::ostringstream csv;
    csv << "trial,kind,dim2,verdict,expected,linear_residual,antilinear_residual,commutator_norm\n";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto &[kind, expected] = kKinds[k % 3];
        const auto &rep = reports[k];
        matched += rep.verdict == expected ? 1 : 0;
        csv << k << ',' << kind << ',' << ops[k].dim2() << ',' << to_string(rep.verdict) << ','
            << to_string(expected) << ',' << num(rep.linear_residual) << ','
            << num(rep.antilinear_residual) << ',' << num(rep.commutator_norm) << "\n";
        rows.push_back({{"trial", k},
                        {"kind", kind},
                        {"dim2", ops[k].dim2()},
                        {"verdict", std::string(to_string(rep.verdict))},
                        {"expected", std::string(to_string(expected))},
                        {"linear_residual", rep.linear_residual},
                        {"antilinear_residual", rep.antilinear_residual},
                        {"commutator_norm", rep.commutator_norm}});
    }
    if (cfg.format == Format::Json) {
        out << json{{"subcommand", "audit"},
                    {"seed", cfg.seed},
                    {"trials", cfg.trials},
                    {"matched", matched},
                    {"all_expected", matched == cfg.trials},
                    {"records", std::move(rows)}}
                   .dump(2)
            << "\n";
        return;
    }
    out << csv.str();
}

// ghosts

std::vector<std::pair<std::string, json>> ghost_table(const ExperimentConfig &cfg) {
    const FockToy toy = build_fock_toy(cfg.cutoff);
    const Eigen::MatrixXd p = toy.guarded_projector();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(toy.dim(), toy.dim());
    const auto comm = [](const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
        return Eigen::MatrixXd(a * b - b * a);
    };
    const IndefiniteSpace &space = toy.space();
    const Eigen::VectorXd vac = toy.vacuum();
    const Eigen::VectorXd one0 = toy.basis_state(0, 1);
    const Eigen::VectorXd two0 = toy.basis_state(0, 2);
    const Eigen::VectorXd pair = ghost_pair(toy);
    const Eigen::VectorXd once = ghost_emit(toy, vac, cfg.lambda);
    const Eigen::VectorXd twice = ghost_emit(toy, once, cfg.lambda);
    const PairPhysicalSubspace sub = pair_physical_subspace();

    json eig = json::array();
    for (Index k = 0; k < sub.restricted_metric_eigenvalues.size(); ++k) {
        eig.push_back(sub.restricted_metric_eigenvalues(k));
    }
    return {
        {"cutoff", cfg.cutoff},
        {"lambda", cfg.lambda},
        {"vacuum_eta_norm", eta_inner(vac, vac, space)},
        {"scalar_n1_eta_norm", eta_inner(one0, one0, space)},
        {"scalar_n2_eta_norm", eta_inner(two0, two0, space)},
        {"scalar_commutator_plus_identity",
         linalg::operator_norm(p * (comm(toy.a0(), toy.a0_dag()) + id) * p)},
        {"longitudinal_commutator_minus_identity",
         linalg::operator_norm(p * (comm(toy.a3(), toy.a3_dag()) - id) * p)},
        {"constraint_emission_commutator", linalg::operator_norm(p * comm(toy.constraint(), toy.emission()) * p)},
        {"ghost_pair_eta_norm", eta_inner(pair, pair, space)},
        {"constraint_residual_single_emission", gb_constraint_residual(toy, once)},
        {"constraint_residual_double_emission", (toy.constraint() * twice).norm()},
        {"overlap_deviation_single", overlap_invariance_check(toy, vac, vac, cfg.lambda, 1)},
        {"overlap_deviation_double", overlap_invariance_check(toy, vac, vac, cfg.lambda, 2)},
        {"emitted_eta_norm", eta_inner(once, once, space)},
        {"pair_kernel_dim", sub.dim()},
        {"pair_restricted_metric_eigenvalues", std::move(eig)},
    };
}

std::string json_scalar_text(const json &v) {
    if (v.is_number_float()) {
        return num(v.get<double>());
    }
    if (v.is_array()) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) {
            s += (k ? " " : "") + json_scalar_text(v[k]);
        }
        return s;
    }
    return v.dump();
}

void run_ghosts(const ExperimentConfig &cfg, std::ostream &out) {
    const auto table = ghost_table(cfg);
    if (cfg.format == Format::Json) {
        json j{{"subcommand", "ghosts"}};
        for (const auto &[key, value] : table) {
            j[key] = value;
        }
        out << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == Format::Csv) {
        out << "quantity,value\n";
        for (const auto &[key, value] : table) {
            out << key << ',' << json_scalar_text(value) << "\n";
        }
        return;
    }
    std::size_t width = 0;
    for (const auto &row : table) {
        width = std::max(width, row.first.size());
    }
    for (const auto &[key, value] : table) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << key
            << json_scalar_text(value) << "\n";
    }
}

// local-phase-demo

void run_local_phase_demo(const ExperimentConfig &cfg, std::ostream &out) {
    require_format(cfg, {Format::Csv, Format::Json}, "local-phase-demo");
    random::Rng rng(cfg.seed);
    const ComplexVector psi = random::state(2, rng);
    const ComplexVector phi = random::state(2, rng);
    const Complex i(0.0, 1.0);

    struct Variant {
        const char *name;
        ComplexVector left;
        ComplexVector right;
    };
    const std::array<Variant, 4> variants = {{
        {"psi*phi", psi, phi},
        {"(i psi)*phi", psi.scaled(i), phi},
        {"psi*(i phi)", psi, phi.scaled(i)},
        {"(i psi)*(i phi)", psi.scaled(i), phi.scaled(i)},
    }};

    json rows = json::array();
    std::ostringstream csv;
    csv << "left,right,local_distance,global_distance\n";
    for (std::size_t a = 0; a < variants.size(); ++a) {
        for (std::size_t b = a + 1; b < variants.size(); ++b) {
            const double local = distance(encode_local(variants[a].left, variants[a].right),
                                          encode_local(variants[b].left, variants[b].right));
            const double global =
                distance(realify_state(kron(variants[a].left, variants[a].right)),
                         realify_state(kron(variants[b].left, variants[b].right)));
            csv << variants[a].name << ',' << variants[b].name << ',' << num(local) << ','
                << num(global) << "\n";
            rows.push_back({{"left", variants[a].name},
                            {"right", variants[b].name},
                            {"local_distance", local},
                            {"global_distance", global}});
        }
    }
    if (cfg.format == Format::Json) {
        out << json{{"subcommand", "local-phase-demo"},
                    {"seed", cfg.seed},
                    {"psi", io::to_json(realify_state(psi))},
                    {"phi", io::to_json(realify_state(phi))},
                    {"records", std::move(rows)}}
                   .dump(2)
            << "\n";
        return;
    }
    out << csv.str();
}

// fixtures

void run_fixtures(const ExperimentConfig &cfg, std::ostream &out) {
    for (const auto &name : emit_matrix_fixtures(cfg.dir)) {
        out << name << "\n";
    }
}

void dispatch(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err) {
    switch (cfg.subcommand) {
    case Subcommand::Larmor:
        run_larmor(cfg, out, err);
        return;
    case Subcommand::Mzi:
        run_mzi(cfg, out, err);
        return;
    case Subcommand::EntropyScan:
        run_entropy_scan(cfg, out);
        return;
    case Subcommand::Audit:
        require_format(cfg, {Format::Csv, Format::Json}, "audit");
        if (cfg.matrix) {
            run_audit_file(cfg, out);
        } else {
            run_audit_battery(cfg, out);
        }
        return;
    case Subcommand::Ghosts:
        run_ghosts(cfg, out);
        return;
    case Subcommand::LocalPhaseDemo:
        run_local_phase_demo(cfg, out);
        return;
    case Subcommand::Fixtures:
        run_fixtures(cfg, out);
        return;
    }
}

} // namespace

std::vector<std::string> emit_matrix_fixtures(const std::filesystem::path &dir) {
    const auto basis = commutant_basis();
    const std::vector<std::pair<std::string, json>> fixtures = {
        {"j2.json", io::to_json(j_operator(2))},
        {"generator_h0.json", io::to_json(real_generator(pauli::identity()))},
        {"generator_h1.json", io::to_json(real_generator(pauli::x()))},
        {"generator_h2.json", io::to_json(real_generator(pauli::y()))},
        {"generator_h3.json", io::to_json(real_generator(pauli::z()))},
        {"mzi_beamsplitter.json", io::to_json(beamsplitter().real_form)},
        {"mzi_beamsplitter_unnormalized.json", io::to_json(beamsplitter_unnormalized().real_form)},
        {"mzi_mirror.json", io::to_json(mirror().real_form)},
        {"mzi_mirror_complex.json", io::to_json(mirror().complex_form)},
        {"universal_not.json", io::to_json(universal_not())},
        {"commutant_i.json", io::to_json(basis[0])},
        {"commutant_ix.json", io::to_json(basis[1])},
        {"commutant_iy.json", io::to_json(basis[2])},
        {"commutant_iz.json", io::to_json(basis[3])},
    };
    std::filesystem::create_directories(dir);
    std::vector<std::string> names;
    for (const auto &[name, doc] : fixtures) {
        std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw IoFailure("cannot write " + (dir / name).string());
        }
        f << io::dump(doc);
        if (!f) {
            throw IoFailure("cannot write " + (dir / name).string());
        }
        names.push_back(name);
    }
    return names;
}

int run(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    try {
        if (config.output) {
            std::ostringstream buf;
            dispatch(config, buf, err);
            std::ofstream f(*config.output, std::ios::binary | std::ios::trunc);
            if (!f || !(f << buf.str())) {
                err << "error: cannot write " << config.output->string() << "\n";
                return kExitIo;
            }
        } else {
            dispatch(config, out, err);
        }
        return kExitOk;
    } catch (const IoFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const io::ParseError &e) {
        err << "error: malformed matrix file: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    ExperimentConfig cfg;
    CLI::App app{"Real-number quantum mechanics experiments", "realqm"};
    app.require_subcommand(1);

    std::string format;
    std::string output;
    const std::map<std::string, Format> formats = {
        {"csv", Format::Csv}, {"json", Format::Json}, {"text", Format::Text}};
    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format: csv, json or text (ghosts only)")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("-o,--output", output, "Write records to this file instead of stdout");
    };

    auto *larmor = app.add_subcommand("larmor", "Larmor precession trajectory (CSV t,a_r,a_i,b_r,b_i,p0,p1)");
    larmor->add_option("--omega", cfg.omega, "Precession frequency Omega")->check(CLI::PositiveNumber);
    larmor->add_option("--tmax", cfg.tmax, "Final time")->check(CLI::NonNegativeNumber);
    larmor->add_option("--steps", cfg.steps, "Number of time intervals")->check(CLI::PositiveNumber);

    auto *mzi = app.add_subcommand("mzi", "Mach-Zehnder interferometer (CSV phi,p0,p1)");
    mzi->add_option("--phase", cfg.phase, "Phase shift in radians");
    mzi->add_option("--grid", cfg.grid, "Sweep this many phases over [0, 2pi]")->check(CLI::Range(2, 1 << 20));

    auto *scan = app.add_subcommand("entropy-scan", "Entanglement of the two-qubit encoding over a state family");
    scan->add_option("--alpha-steps", cfg.alpha_steps, "Grid points in alpha over [0, 2pi]")->check(CLI::Range(2, 1 << 16));
    scan->add_option("--beta-steps", cfg.beta_steps, "Grid points in beta over [0, pi/2]")->check(CLI::Range(2, 1 << 16));

    auto *aud = app.add_subcommand("audit", "Superselection audit of a matrix file or a random battery");
    aud->add_option("--matrix", cfg.matrix, "Matrix JSON file (complex or real format)");
    aud->add_option("--seed", cfg.seed, "Seed for the random battery");
    aud->add_option("--trials", cfg.trials, "Trials in the random battery")->check(CLI::PositiveNumber);

    auto *ghosts = app.add_subcommand("ghosts", "Indefinite-metric ghost suite");
    ghosts->add_option("--cutoff", cfg.cutoff, "Fock cutoff per mode")->check(CLI::Range(4, 64));
    ghosts->add_option("--lambda", cfg.lambda, "Ghost emission strength");

    auto *demo = app.add_subcommand("local-phase-demo", "Local vs global encoding of a phase on two qubits");
    demo->add_option("--seed", cfg.seed, "Seed for the random states");

    auto *fixtures = app.add_subcommand("fixtures", "Write canonical matrix fixtures");
    fixtures->add_option("--dir", cfg.dir, "Output directory")->required();

    const std::vector<std::pair<CLI::App *, Subcommand>> subs = {
        {larmor, Subcommand::Larmor},       {mzi, Subcommand::Mzi},
        {scan, Subcommand::EntropyScan},    {aud, Subcommand::Audit},
        {ghosts, Subcommand::Ghosts},       {demo, Subcommand::LocalPhaseDemo},
        {fixtures, Subcommand::Fixtures}};
    for (const auto &sub : subs) {
        add_common(sub.first);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitValidation;
    }

    for (const auto &[sub, kind] : subs) {
        if (sub->parsed()) {
            cfg.subcommand = kind;
            if (format.empty()) {
                format = kind == Subcommand::Ghosts ? "text" : "csv";
            }
        }
    }
    cfg.format = formats.at(format);
    if (!output.empty()) {
        cfg.output = output;
    }
    return run(cfg, out, err);
}

} // namespace realqm::cli
