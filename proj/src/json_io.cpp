#include "quatunit/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace quatunit {

namespace {

std::string int_to_string(const Int& v) { return v.get_str(); }

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidInput, "malformed integer: " + s);
    }
}

Rat rat_from_json_string(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) fail(ErrorKind::InvalidInput, std::string(what) + " must be a string");
    return rat_from_string(j.get<std::string>());
}

// Scientific rendering of a huge positive integer, e.g. "1.234e+120".
std::string int_to_scientific(const Int& v) {
    std::string digits = v.get_str();
    std::string head = digits.substr(0, 1);
    std::string tail = digits.substr(1, std::min<std::size_t>(3, digits.size() - 1));
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    std::string out = head;
    if (!tail.empty()) out += "." + tail;
    out += "e+" + std::to_string(digits.size() - 1);
    return out;
}

std::string label_of(const SemigroupSpec& spec, int idx) {
    std::size_t i = static_cast<std::size_t>(idx);
    if (i < spec.labels.size()) return spec.labels[i];
    return "g" + std::to_string(idx + 1);
}

Json interval_to_json(const RInterval& iv) {
    return Json::array({rat_to_string(iv.lo), rat_to_string(iv.hi)});
}

} // namespace

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) { return rat_from_json_string(j, "rational"); }

Json algebraic_to_json(const AlgebraicReal& x) {
    if (x.is_rational()) return rat_to_string(x.rational_value());
    Json out = Json::object();
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < x.minpoly().c.size(); ++i)
        coeffs.push_back(int_to_string(x.minpoly().c[i]));
    out["minpoly"] = std::move(coeffs);
    RInterval iv = x.interval();
    out["interval"] = interval_to_json(iv);
    return out;
}

AlgebraicReal algebraic_from_json(const Json& j) {
    if (j.is_string()) return AlgebraicReal(rat_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return AlgebraicReal(static_cast<long>(j.get<long long>()));
    if (!j.is_object() || !j.contains("minpoly") || !j.contains("interval"))
        fail(ErrorKind::InvalidInput, "algebraic number needs minpoly and interval");
    const Json& mp = j["minpoly"];
    if (!mp.is_array() || mp.size() < 2)
        fail(ErrorKind::InvalidInput, "minpoly must list at least two coefficients");
    std::vector<Int> coeffs;
    for (const auto& c : mp) {
        if (!c.is_string()) fail(ErrorKind::InvalidInput, "minpoly coefficients must be strings");
        coeffs.push_back(int_from_string(c.get<std::string>()));
    }
    const Json& iv = j["interval"];
    if (!iv.is_array() || iv.size() != 2)
        fail(ErrorKind::InvalidInput, "interval must be a [lo, hi] pair");
    Rat lo = rat_from_json_string(iv[0], "interval endpoint");
    Rat hi = rat_from_json_string(iv[1], "interval endpoint");
    return AlgebraicReal::from_minpoly(IntPoly(std::move(coeffs)), lo, hi);
}

Json quaternion_to_json(const Quaternion& q) {
    return Json::array({algebraic_to_json(q.a), algebraic_to_json(q.b),
                        algebraic_to_json(q.c), algebraic_to_json(q.d)});
}

Quaternion quaternion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        fail(ErrorKind::InvalidInput, "quaternion must be a 4-element array");
    return Quaternion(algebraic_from_json(j[0]), algebraic_from_json(j[1]),
                      algebraic_from_json(j[2]), algebraic_from_json(j[3]));
}

Json semigroup_to_json(const SemigroupSpec& s) {
    Json out = Json::object();
    Json gens = Json::array();
    for (const auto& g : s.generators) gens.push_back(quaternion_to_json(g));
    out["generators"] = std::move(gens);
    Json labels = Json::array();
    for (std::size_t i = 0; i < s.generators.size(); ++i)
        labels.push_back(label_of(s, static_cast<int>(i)));
    out["labels"] = std::move(labels);
    return out;
}

SemigroupSpec semigroup_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators"))
        fail(ErrorKind::InvalidInput, "semigroup needs a generators array");
    SemigroupSpec out;
    for (const auto& g : j["generators"]) out.generators.push_back(quaternion_from_json(g));
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) fail(ErrorKind::InvalidInput, "labels must be strings");
            out.labels.push_back(l.get<std::string>());
        }
    }
    return out;
}

Json instance_to_json(const UnitEquationInstance& inst) {
    Json out = Json::object();
    out["a"] = quaternion_to_json(inst.a);
    out["a_prime"] = quaternion_to_json(inst.a_prime);
    out["b"] = quaternion_to_json(inst.b);
    out["b_prime"] = quaternion_to_json(inst.b_prime);
    out["gamma1"] = semigroup_to_json(inst.gamma1);
    out["gamma2"] = semigroup_to_json(inst.gamma2);
    return out;
}

UnitEquationInstance instance_from_json(const Json& j) {
    for (const char* key : {"a", "a_prime", "b", "b_prime", "gamma1", "gamma2"})
        if (!j.contains(key))
            fail(ErrorKind::InvalidInput, std::string("instance is missing field ") + key);
    UnitEquationInstance out;
    out.a = quaternion_from_json(j["a"]);
    out.a_prime = quaternion_from_json(j["a_prime"]);
    out.b = quaternion_from_json(j["b"]);
    out.b_prime = quaternion_from_json(j["b_prime"]);
    out.gamma1 = semigroup_from_json(j["gamma1"]);
    out.gamma2 = semigroup_from_json(j["gamma2"]);
    return out;
}

Json baker_to_json(const BakerCertificate& cert) {
    Json out = Json::object();
    out["k"] = cert.k.to_string();
    out["C"] = rat_to_string(cert.C);
    out["r"] = cert.r;
    out["d"] = cert.degree;
    return out;
}

BakerCertificate baker_from_json(const Json& j) {
    for (const char* key : {"k", "C", "r", "d"})
        if (!j.contains(key))
            fail(ErrorKind::InvalidInput, std::string("certificate is missing field ") + key);
    BakerCertificate out;
    if (!j["k"].is_string()) fail(ErrorKind::InvalidInput, "certificate k must be a string");
    out.k = ScaledRat::parse(j["k"].get<std::string>());
    out.C = rat_from_json_string(j["C"], "certificate C");
    out.r = j["r"].get<unsigned long>();
    out.degree = j["d"].get<unsigned long>();
    return out;
}

Json cap_to_json(const CapValue& cap) {
    Json out = Json::object();
    if (cap.overflow) {
        out["status"] = "OVERFLOW";
        out["approx"] = int_to_scientific(cap.value);
    } else {
        out["status"] = "FINITE";
        out["value"] = int_to_string(cap.value);
    }
    return out;
}

Json word_to_json(const Word& w, const SemigroupSpec& spec) {
    Json out = Json::array();
    for (int idx : w.indices) out.push_back(label_of(spec, idx));
    return out;
}

Json run_config_to_json(const RunConfig& cfg) {
    // Thread count is deliberately absent: reports must not depend on it.
    Json out = Json::object();
    out["oracle_len"] = cfg.oracle_len;
    out["precision_bits"] = cfg.precision_bits;
    out["element_cap"] = cfg.element_cap;
    return out;
}

Json reduction_bound_to_json(const ReductionBound& rb) {
    Json out = Json::object();
    out["h_cap"] = cap_to_json(rb.h_cap);
    out["baker"] = baker_to_json(rb.baker);
    Json cmp = Json::object();
    cmp["C1"] = rat_to_string(rb.comparability.C1);
    cmp["C2"] = rat_to_string(rb.comparability.C2);
    cmp["C2_prime"] = rat_to_string(rb.comparability.C2_prime);
    out["comparability"] = std::move(cmp);
    out["c_term_dropped"] = rb.c_term_dropped;
    out["c_log"] = interval_to_json(rb.c_log);
    out["small_threshold"] = int_to_string(rb.small_threshold);
    out["h_small"] = int_to_string(rb.h_small);
    out["h_baker"] = int_to_string(rb.h_baker);
    return out;
}

Json locus_bound_to_json(const LocusBound& lb) {
    Json out = Json::object();
    out["n_cap"] = cap_to_json(lb.n_cap);
    out["via_baker"] = lb.via_baker;
    out["empty_constraint"] = lb.empty_constraint;
    if (lb.baker) out["baker"] = baker_to_json(*lb.baker);
    out["c_prime"] = rat_to_string(lb.c_prime);
    out["big_m"] = interval_to_json(lb.big_m);
    return out;
}

std::string completeness_to_string(Completeness c) {
    return c == Completeness::OracleCompleteBelowCap ? "ORACLE_COMPLETE_BELOW_CAP"
                                                     : "ORACLE_WINDOW_ONLY";
}

Json solution_set_to_json(const SolutionSet& sols, const UnitEquationInstance& inst) {
    Json out = Json::object();
    out["status"] = completeness_to_string(sols.status);
    out["oracle_window"] = sols.certificate.oracle_window;
    Json arr = Json::array();
    for (const auto& sp : sols.solutions) {
        Json e = Json::object();
        e["f_word"] = word_to_json(sp.f_word, inst.gamma1);
        e["g_word"] = word_to_json(sp.g_word, inst.gamma2);
        e["f"] = quaternion_to_json(sp.f_value);
        e["g"] = quaternion_to_json(sp.g_value);
        arr.push_back(std::move(e));
    }
    out["solutions"] = std::move(arr);
    Json cert = Json::object();
    if (sols.certificate.reduction)
        cert["reduction"] = reduction_bound_to_json(*sols.certificate.reduction);
    if (sols.certificate.locus) cert["locus"] = locus_bound_to_json(*sols.certificate.locus);
    out["certificate"] = std::move(cert);
    return out;
}

Json locus_result_to_json(const LocusResult& res, const SemigroupSpec& spec) {
    Json out = Json::object();
    out["status"] = completeness_to_string(res.status);
    out["oracle_window"] = res.oracle_window;
    Json arr = Json::array();
    for (const auto& ls : res.on_locus) {
        Json e = Json::object();
        e["f_word"] = word_to_json(ls.f_word, spec);
        e["f"] = quaternion_to_json(ls.f_value);
        arr.push_back(std::move(e));
    }
    out["on_locus"] = std::move(arr);
    out["bound"] = locus_bound_to_json(res.bound);
    return out;
}

Json matrix_demo_to_json(const std::vector<MatrixPair>& pairs) {
    Json out = Json::object();
    out["n_max"] = pairs.empty() ? 0 : pairs.back().n;
    bool all = true;
    Json arr = Json::array();
    for (const auto& mp : pairs) {
        all = all && mp.verified;
        Json e = Json::object();
        e["n"] = mp.n;
        e["f"] = Json::array({Json::array({rat_to_string(mp.f.m00), rat_to_string(mp.f.m01)}),
                              Json::array({rat_to_string(mp.f.m10), rat_to_string(mp.f.m11)})});
        e["g"] = Json::array({Json::array({rat_to_string(mp.g.m00), rat_to_string(mp.g.m01)}),
                              Json::array({rat_to_string(mp.g.m10), rat_to_string(mp.g.m11)})});
        e["verified"] = mp.verified;
        arr.push_back(std::move(e));
    }
    out["all_verified"] = all;
    out["entries"] = std::move(arr);
    return out;
}

EndoInstance endo_from_json(const Json& j) {
    for (const char* key : {"discriminant", "f", "h"})
        if (!j.contains(key))
            fail(ErrorKind::InvalidInput, std::string("dynamics input is missing field ") + key);
    auto elem = [](const Json& e, const char* what) {
        if (!e.is_array() || e.size() != 2)
            fail(ErrorKind::InvalidInput, std::string(what) + " must be an [x, y] pair");
        if (!e[0].is_string() || !e[1].is_string())
            fail(ErrorKind::InvalidInput, std::string(what) + " components must be strings");
        return QuadElem{int_from_string(e[0].get<std::string>()),
                        int_from_string(e[1].get<std::string>())};
    };
    EndoInstance out{QuadOrder(int_from_string([&] {
                         const Json& d = j["discriminant"];
                         if (!d.is_string())
                             fail(ErrorKind::InvalidInput, "discriminant must be a string");
                         return d.get<std::string>();
                     }())),
                     elem(j["f"], "f"), elem(j["h"], "h")};
    out.m0 = j.value("m0", 1UL);
    out.n0 = j.value("n0", 1UL);
    return out;
}

Json dynamics_reduction_to_json(const DynamicsReduction& red, const EndoInstance& inst) {
    Json out = Json::object();
    EndoData data = endo_data(inst);
    out["u"] = Json::array({int_to_string(data.u.x), int_to_string(data.u.y)});
    out["d"] = int_to_string(data.d);
    out["common_iterate"] = red.common_iterate;
    if (red.instance) out["instance"] = instance_to_json(*red.instance);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return j;
}

} // namespace quatunit
