#include "quatunit/json_io.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;

namespace {

using quatunit::Json;

Json parse(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        quatunit::fail(quatunit::ErrorKind::InvalidInput,
                       std::string(what) + " is not valid JSON: " + e.what());
    }
}

quatunit::RunConfig make_config(int oracle_len, unsigned precision_bits,
                                unsigned long element_cap, int threads) {
    quatunit::RunConfig cfg;
    cfg.oracle_len = oracle_len;
    cfg.precision_bits = precision_bits;
    cfg.element_cap = element_cap;
    cfg.threads = threads;
    return cfg;
}

std::string solve_json(const std::string& instance, int oracle_len, unsigned precision_bits,
                       unsigned long element_cap, int threads) {
    auto inst = quatunit::instance_from_json(parse(instance, "instance"));
    auto sols = quatunit::solve_main(inst, make_config(oracle_len, precision_bits,
                                                       element_cap, threads));
    return quatunit::solution_set_to_json(sols, inst).dump();
}

std::string reduce_json(const std::string& instance, int oracle_len, unsigned precision_bits,
                        unsigned long element_cap, int threads) {
    auto inst = quatunit::instance_from_json(parse(instance, "instance"));
    auto sols = quatunit::solve_reduction(inst, make_config(oracle_len, precision_bits,
                                                            element_cap, threads));
    return quatunit::solution_set_to_json(sols, inst).dump();
}

std::string oracle_json(const std::string& instance, int oracle_len, unsigned precision_bits,
                        unsigned long element_cap, int threads) {
    auto inst = quatunit::instance_from_json(parse(instance, "instance"));
    auto sols = quatunit::brute_force_oracle(inst, make_config(oracle_len, precision_bits,
                                                               element_cap, threads));
    return quatunit::solution_set_to_json(sols, inst).dump();
}

std::string locus_json(const std::string& a, const std::string& a_prime,
                       const std::string& gamma, int oracle_len, unsigned precision_bits,
                       unsigned long element_cap, int threads) {
    auto qa = quatunit::quaternion_from_json(parse(a, "a"));
    auto qap = quatunit::quaternion_from_json(parse(a_prime, "a_prime"));
    auto spec = quatunit::semigroup_from_json(parse(gamma, "gamma"));
    auto res = quatunit::solve_locus(qa, qap, spec, make_config(oracle_len, precision_bits,
                                                                element_cap, threads));
    return quatunit::locus_result_to_json(res, spec).dump();
}

std::string bound_json(const std::string& instance, unsigned precision_bits) {
    auto inst = quatunit::instance_from_json(parse(instance, "instance"));
    Json out = Json::object();
    out["reduction"] = quatunit::reduction_bound_to_json(
        quatunit::reduction_bound(inst, precision_bits));
    if (quatunit::validate(inst.gamma1).commutative)
        out["locus"] = quatunit::locus_bound_to_json(
            quatunit::locus_bound(inst.a, inst.a_prime, inst.gamma1, precision_bits));
    return out.dump();
}

std::string enumerate_json(const std::string& semigroup, int max_len,
                           const std::string& norm_bound, unsigned long element_cap) {
    auto spec = quatunit::semigroup_from_json(parse(semigroup, "semigroup"));
    std::vector<quatunit::EnumeratedElement> elems;
    if (!norm_bound.empty()) {
        elems = quatunit::enumerate_norm_bounded(
            spec, quatunit::AlgebraicReal(quatunit::rat_from_string(norm_bound)), element_cap);
    } else {
        elems = quatunit::enumerate_length_bounded(spec, max_len, element_cap);
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
    return arr.dump();
}

std::string dynamics_json(const std::string& input, bool solve_after, int oracle_len,
                          unsigned precision_bits, unsigned long element_cap, int threads) {
    auto endo = quatunit::endo_from_json(parse(input, "dynamics input"));
    auto red = quatunit::dynamics_to_unit_equation(endo);
    Json out = Json::object();
    out["reduction"] = quatunit::dynamics_reduction_to_json(red, endo);
    if (solve_after && red.instance) {
        auto sols = quatunit::solve_main(*red.instance,
                                         make_config(oracle_len, precision_bits,
                                                     element_cap, threads));
        out["result"] = quatunit::solution_set_to_json(sols, *red.instance);
    }
    return out.dump();
}

std::string matrix_demo_json(long n_max) {
    return quatunit::matrix_demo_to_json(quatunit::matrix_counterexample(n_max)).dump();
}

bool hyperplane_test_json(const std::string& a, const std::string& a_prime,
                          const std::string& f) {
    return quatunit::hyperplane_test(quatunit::quaternion_from_json(parse(a, "a")),
                                     quatunit::quaternion_from_json(parse(a_prime, "a_prime")),
                                     quatunit::quaternion_from_json(parse(f, "f")));
}

} // namespace

PYBIND11_MODULE(_quatunit, m) {
    m.doc() = "certified solver for quaternionic semigroup unit equations";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const quatunit::Error& e) {
            switch (e.kind()) {
                case quatunit::ErrorKind::ResourceLimit:
                case quatunit::ErrorKind::PrecisionFailure:
                    PyErr_SetString(PyExc_RuntimeError, e.what());
                    break;
                default:
                    PyErr_SetString(PyExc_ValueError, e.what());
            }
        }
    });

    m.def("solve_json", &solve_json, py::arg("instance"), py::arg("oracle_len") = 12,
          py::arg("precision_bits") = 128, py::arg("element_cap") = 10000000UL,
          py::arg("threads") = 1);
    m.def("reduce_json", &reduce_json, py::arg("instance"), py::arg("oracle_len") = 12,
          py::arg("precision_bits") = 128, py::arg("element_cap") = 10000000UL,
          py::arg("threads") = 1);
    m.def("oracle_json", &oracle_json, py::arg("instance"), py::arg("oracle_len") = 12,
          py::arg("precision_bits") = 128, py::arg("element_cap") = 10000000UL,
          py::arg("threads") = 1);
    m.def("locus_json", &locus_json, py::arg("a"), py::arg("a_prime"), py::arg("gamma"),
          py::arg("oracle_len") = 12, py::arg("precision_bits") = 128,
          py::arg("element_cap") = 10000000UL, py::arg("threads") = 1);
    m.def("bound_json", &bound_json, py::arg("instance"), py::arg("precision_bits") = 128);
    m.def("enumerate_json", &enumerate_json, py::arg("semigroup"), py::arg("max_len") = 6,
          py::arg("norm_bound") = std::string(), py::arg("element_cap") = 10000000UL);
    m.def("dynamics_json", &dynamics_json, py::arg("input"), py::arg("solve") = false,
          py::arg("oracle_len") = 12, py::arg("precision_bits") = 128,
          py::arg("element_cap") = 10000000UL, py::arg("threads") = 1);
    m.def("matrix_demo_json", &matrix_demo_json, py::arg("n_max") = 100);
    m.def("hyperplane_test_json", &hyperplane_test_json, py::arg("a"), py::arg("a_prime"),
          py::arg("f"));
}
