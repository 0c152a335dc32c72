#include "quatunit/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using quatunit::Json;

struct CommonOpts {
    std::string input;
    std::string output;
    quatunit::RunConfig cfg;
    bool quiet = false;
};

int env_threads() {
    const char* v = std::getenv("QUATUNIT_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n >= 1 ? n : 1;
}

void attach_common(CLI::App* cmd, CommonOpts& o, bool needs_input) {
    if (needs_input)
        cmd->add_option("--input", o.input, "input JSON file")->required();
    cmd->add_option("--oracle-len", o.cfg.oracle_len, "word-length window for enumeration")
        ->check(CLI::Range(0, 1 << 20));
    cmd->add_option("--precision-bits", o.cfg.precision_bits, "working interval precision");
    cmd->add_option("--element-cap", o.cfg.element_cap, "maximum enumerated elements");
    cmd->add_option("--threads", o.cfg.threads, "worker threads (env QUATUNIT_THREADS)");
    cmd->add_option("--output", o.output, "write the report to a file");
    cmd->add_flag("--quiet", o.quiet, "suppress stdout report");
}

void emit(const CommonOpts& o, const Json& report) {
    std::string text = report.dump(2);
    text += '\n';
    if (!o.output.empty()) {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) quatunit::fail(quatunit::ErrorKind::InvalidInput,
                                 "cannot open output file: " + o.output);
        out << text;
    }
    if (o.quiet) return;
    if (o.output.empty()) std::cout << text;
}

Json report_head(const char* command, const CommonOpts& o) {
    Json report = Json::object();
    report["command"] = command;
    report["config"] = quatunit::run_config_to_json(o.cfg);
    return report;
}

int run_solve(const CommonOpts& o, const char* name, bool reduction_only) {
    auto inst = quatunit::instance_from_json(quatunit::load_json_file(o.input));
    auto sols = reduction_only ? quatunit::solve_reduction(inst, o.cfg)
                               : quatunit::solve_main(inst, o.cfg);
    Json report = report_head(name, o);
    report["instance"] = quatunit::instance_to_json(inst);
    report["result"] = quatunit::solution_set_to_json(sols, inst);
    emit(o, report);
    return 0;
}

int run_oracle(const CommonOpts& o) {
    auto inst = quatunit::instance_from_json(quatunit::load_json_file(o.input));
    auto sols = quatunit::brute_force_oracle(inst, o.cfg);
    Json report = report_head("oracle", o);
    report["instance"] = quatunit::instance_to_json(inst);
    report["result"] = quatunit::solution_set_to_json(sols, inst);
    emit(o, report);
    return 0;
}

int run_locus(const CommonOpts& o) {
    Json in = quatunit::load_json_file(o.input);
    quatunit::Quaternion a, a_prime;
    quatunit::SemigroupSpec gamma;
    if (in.contains("gamma")) {
        a = quatunit::quaternion_from_json(in.at("a"));
        a_prime = quatunit::quaternion_from_json(in.at("a_prime"));
        gamma = quatunit::semigroup_from_json(in.at("gamma"));
    } else {
        auto inst = quatunit::instance_from_json(in);
        a = inst.a;
        a_prime = inst.a_prime;
        gamma = inst.gamma1;
    }
    auto res = quatunit::solve_locus(a, a_prime, gamma, o.cfg);
    Json report = report_head("locus", o);
    report["a"] = quatunit::quaternion_to_json(a);
    report["a_prime"] = quatunit::quaternion_to_json(a_prime);
    report["gamma"] = quatunit::semigroup_to_json(gamma);
    report["result"] = quatunit::locus_result_to_json(res, gamma);
    emit(o, report);
    return 0;
}

int run_bound(const CommonOpts& o) {
    auto inst = quatunit::instance_from_json(quatunit::load_json_file(o.input));
    auto rb = quatunit::reduction_bound(inst, o.cfg.precision_bits);
    Json report = report_head("bound", o);
    report["instance"] = quatunit::instance_to_json(inst);
    report["reduction"] = quatunit::reduction_bound_to_json(rb);
    auto v = quatunit::validate(inst.gamma1);
    if (v.commutative) {
        auto lb = quatunit::locus_bound(inst.a, inst.a_prime, inst.gamma1, o.cfg.precision_bits);
        report["locus"] = quatunit::locus_bound_to_json(lb);
    }
    emit(o, report);
    return 0;
}

int run_enumerate(const CommonOpts& o, int max_len, const std::string& norm_bound) {
    Json in = quatunit::load_json_file(o.input);
    quatunit::SemigroupSpec spec = in.contains("semigroup")
                                       ? quatunit::semigroup_from_json(in.at("semigroup"))
                                       : quatunit::semigroup_from_json(in);
    std::vector<quatunit::EnumeratedElement> elems;
    quatunit::EnumStats stats;
    Json report = report_head("enumerate", o);
    report["semigroup"] = quatunit::semigroup_to_json(spec);
    if (!norm_bound.empty()) {
        quatunit::Rat bound = quatunit::rat_from_string(norm_bound);
        elems = quatunit::enumerate_norm_bounded(spec, quatunit::AlgebraicReal(bound),
                                                 o.cfg.element_cap, &stats);
        report["norm_bound"] = quatunit::rat_to_string(bound);
    } else {
        elems = quatunit::enumerate_length_bounded(spec, max_len, o.cfg.element_cap, &stats);
        report["max_len"] = max_len;
    }
    Json arr = Json::array();
    for (const auto& e : elems) {
        Json entry = Json::object();
        entry["value"] = quatunit::quaternion_to_json(e.value);
        entry["norm"] = quatunit::algebraic_to_json(e.norm);
        Json ws = Json::array();
        for (const auto& w : e.witnesses) ws.push_back(quatunit::word_to_json(w, spec));
        entry["witnesses"] = std::move(ws);
        arr.push_back(std::move(entry));
    }
    report["count"] = elems.size();
    report["explored"] = stats.explored;
    report["elements"] = std::move(arr);
    emit(o, report);
    return 0;
}

int run_dynamics(const CommonOpts& o, bool solve_after) {
    auto endo = quatunit::endo_from_json(quatunit::load_json_file(o.input));
    auto red = quatunit::dynamics_to_unit_equation(endo);
    Json report = report_head("dynamics", o);
    report["reduction"] = quatunit::dynamics_reduction_to_json(red, endo);
    if (solve_after && red.instance) {
        auto sols = quatunit::solve_main(*red.instance, o.cfg);
        report["result"] = quatunit::solution_set_to_json(sols, *red.instance);
    }
    emit(o, report);
    return 0;
}

int run_matrix_demo(const CommonOpts& o, long n_max) {
    auto pairs = quatunit::matrix_counterexample(n_max);
    Json report = report_head("matrix-demo", o);
    report["result"] = quatunit::matrix_demo_to_json(pairs);
    emit(o, report);
    bool all = true;
    for (const auto& mp : pairs) all = all && mp.verified;
    if (!all) quatunit::fail(quatunit::ErrorKind::Internal, "matrix family verification failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified solver for quaternionic semigroup unit equations"};
    app.require_subcommand(1);

    CommonOpts solve_o, reduce_o, locus_o, oracle_o, enum_o, bound_o, dyn_o, mat_o;
    solve_o.cfg.threads = env_threads();
    reduce_o.cfg.threads = env_threads();
    locus_o.cfg.threads = env_threads();
    oracle_o.cfg.threads = env_threads();
    enum_o.cfg.threads = env_threads();
    bound_o.cfg.threads = env_threads();
    dyn_o.cfg.threads = env_threads();
    mat_o.cfg.threads = env_threads();

    auto* solve = app.add_subcommand("solve", "reduction and locus branches with certificates");
    attach_common(solve, solve_o, true);

    auto* reduce = app.add_subcommand("reduce", "reduction branch only");
    attach_common(reduce, reduce_o, true);

    auto* locus = app.add_subcommand("locus", "hyperplane branch only");
    attach_common(locus, locus_o, true);

    auto* oracle = app.add_subcommand("oracle", "brute-force double enumeration");
    attach_common(oracle, oracle_o, true);

    auto* enumerate = app.add_subcommand("enumerate", "list semigroup elements");
    attach_common(enumerate, enum_o, true);
    int max_len = 6;
    std::string norm_bound;
    enumerate->add_option("--max-len", max_len, "word-length bound");
    enumerate->add_option("--norm-bound", norm_bound, "norm bound as a rational p/q");

    auto* bound = app.add_subcommand("bound", "certified caps without enumeration");
    attach_common(bound, bound_o, true);

    auto* dynamics = app.add_subcommand("dynamics", "orbit coincidence to unit equation");
    attach_common(dynamics, dyn_o, true);
    bool solve_after = false;
    dynamics->add_flag("--solve", solve_after, "solve the produced instance");

    auto* matrix = app.add_subcommand("matrix-demo", "unbounded matrix solution family");
    attach_common(matrix, mat_o, false);
    long n_max = 100;
    matrix->add_option("--n-max", n_max, "largest parameter n")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_o, "solve", false);
        if (reduce->parsed()) return run_solve(reduce_o, "reduce", true);
        if (locus->parsed()) return run_locus(locus_o);
        if (oracle->parsed()) return run_oracle(oracle_o);
        if (enumerate->parsed()) return run_enumerate(enum_o, max_len, norm_bound);
        if (bound->parsed()) return run_bound(bound_o);
        if (dynamics->parsed()) return run_dynamics(dyn_o, solve_after);
        if (matrix->parsed()) return run_matrix_demo(mat_o, n_max);
    } catch (const quatunit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return quatunit::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
