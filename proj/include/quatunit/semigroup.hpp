#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quatunit/quaternion.hpp"

namespace quatunit {

// Finitely generated multiplicative semigroup of quaternions. Every
// generator must be nonzero with reduced norm strictly above one, so word
// norms grow multiplicatively and norm-bounded enumeration terminates.
struct SemigroupSpec {
    std::vector<Quaternion> generators;
    std::vector<std::string> labels; // same length; defaults g1, g2, ...
};

// Word in the generators: nonempty sequence of zero-based indices; the
// semigroup carries no identity so the empty word is excluded.
struct Word {
    std::vector<int> indices;

    bool operator==(const Word& o) const { return indices == o.indices; }
};

// Shorter first, then lexicographic on indices.
int word_compare(const Word& a, const Word& b);

struct ValidationResult {
    bool commutative;
};

// Throws ZeroGenerator / NormNotAboveOne naming the offending generator.
ValidationResult validate(const SemigroupSpec& spec);

struct EnumeratedElement {
    Quaternion value;
    AlgebraicReal norm;
    std::vector<Word> witnesses; // canonical order, capped
};

constexpr std::size_t kWitnessCap = 16;

struct EnumStats {
    unsigned long explored = 0; // words/exponent vectors visited
};

// All distinct element values with norm <= norm_bound, in canonical order:
// ascending norm, ties by coordinate tuple, witnesses shortest-first.
// Throws ResourceLimit when more than element_cap values arise.
std::vector<EnumeratedElement> enumerate_norm_bounded(const SemigroupSpec& spec,
                                                      const AlgebraicReal& norm_bound,
                                                      unsigned long element_cap,
                                                      EnumStats* stats = nullptr);

// All distinct element values realizable by words of length <= max_len.
std::vector<EnumeratedElement> enumerate_length_bounded(const SemigroupSpec& spec,
                                                        int max_len,
                                                        unsigned long element_cap,
                                                        EnumStats* stats = nullptr);

// Membership: a witness word for q if q lies in the semigroup, else nullopt.
// Decidable because only norms <= norm(q) can contribute.
std::optional<Word> membership(const SemigroupSpec& spec, const Quaternion& q,
                               unsigned long element_cap);

// Half-logs of the generator norms: x_i = (1/2) ln N(g_i), all positive.
std::vector<RInterval> log_norm_data(const SemigroupSpec& spec, unsigned bits);

Quaternion eval_word(const SemigroupSpec& spec, const Word& w);

} // namespace quatunit
