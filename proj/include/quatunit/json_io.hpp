#pragma once

#include "quatunit/dynamics.hpp"

#include <json.hpp>

namespace quatunit {

// Ordered keys + exact decimal/rational strings keep reports byte-stable.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

// Rationals serialize as plain strings; other algebraics carry their
// minimal polynomial and an isolating interval.
Json algebraic_to_json(const AlgebraicReal& x);
AlgebraicReal algebraic_from_json(const Json& j);

Json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);

Json semigroup_to_json(const SemigroupSpec& s);
SemigroupSpec semigroup_from_json(const Json& j);

Json instance_to_json(const UnitEquationInstance& inst);
UnitEquationInstance instance_from_json(const Json& j);

// Constants only (k, C, r, d); generator data is not round-tripped.
Json baker_to_json(const BakerCertificate& cert);
BakerCertificate baker_from_json(const Json& j);

Json cap_to_json(const CapValue& cap);
Json word_to_json(const Word& w, const SemigroupSpec& spec);

Json run_config_to_json(const RunConfig& cfg);
Json reduction_bound_to_json(const ReductionBound& rb);
Json locus_bound_to_json(const LocusBound& lb);
std::string completeness_to_string(Completeness c);

Json solution_set_to_json(const SolutionSet& sols, const UnitEquationInstance& inst);
Json locus_result_to_json(const LocusResult& res, const SemigroupSpec& spec);
Json matrix_demo_to_json(const std::vector<MatrixPair>& pairs);

EndoInstance endo_from_json(const Json& j);
Json dynamics_reduction_to_json(const DynamicsReduction& red, const EndoInstance& inst);

Json load_json_file(const std::string& path);

} // namespace quatunit
