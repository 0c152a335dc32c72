#include "quatunit/semigroup.hpp"

#include <algorithm>
#include <deque>

#include "quatunit/transcendental.hpp"

namespace quatunit {

int word_compare(const Word& a, const Word& b) {
    if (a.indices.size() != b.indices.size()) {
        return a.indices.size() < b.indices.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < a.indices.size(); ++i) {
        if (a.indices[i] != b.indices[i]) return a.indices[i] < b.indices[i] ? -1 : 1;
    }
    return 0;
}

namespace {

std::string generator_name(const SemigroupSpec& spec, std::size_t i) {
    std::string label = i < spec.labels.size() ? spec.labels[i] : "g" + std::to_string(i + 1);
    return "generator " + std::to_string(i + 1) + " (" + label + ")";
}

struct QuatLess {
    bool operator()(const Quaternion& a, const Quaternion& b) const {
        return q_compare(a, b) < 0;
    }
};

struct Accum {
    AlgebraicReal norm;
    std::vector<Word> witnesses;
};

using ElementMap = std::map<Quaternion, Accum, QuatLess>;

void add_witness(std::vector<Word>& ws, const Word& w) {
    auto pos = std::lower_bound(ws.begin(), ws.end(), w, [](const Word& x, const Word& y) {
        return word_compare(x, y) < 0;
    });
    if (pos != ws.end() && *pos == w) return;
    if (ws.size() >= kWitnessCap) {
        if (pos == ws.end()) return;
        ws.insert(pos, w);
        ws.pop_back();
        return;
    }
    ws.insert(pos, w);
}

void record(ElementMap& map, const Quaternion& value, const AlgebraicReal& norm,
            const Word& w, unsigned long element_cap) {
    auto it = map.find(value);
    if (it == map.end()) {
        if (map.size() >= element_cap) {
            fail(ErrorKind::ResourceLimit, "element cap exceeded during enumeration");
        }
        it = map.emplace(value, Accum{norm, {}}).first;
    }
    add_witness(it->second.witnesses, w);
}

std::vector<EnumeratedElement> finalize(ElementMap& map) {
    std::vector<EnumeratedElement> out;
    out.reserve(map.size());
    for (auto& kv : map) {
        out.push_back(EnumeratedElement{kv.first, kv.second.norm, std::move(kv.second.witnesses)});
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedElement& a, const EnumeratedElement& b) {
        int c = AlgebraicReal::compare(a.norm, b.norm);
        if (c != 0) return c < 0;
        return q_compare(a.value, b.value) < 0;
    });
    return out;
}

Word word_from_exponents(const std::vector<int>& exps) {
    Word w;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        for (int r = 0; r < exps[i]; ++r) w.indices.push_back(static_cast<int>(i));
    }
    return w;
}

// DFS over exponent vectors for commutative semigroups; `accept` receives the
// accumulated value and norm for each nonzero vector within the bounds.
struct CommutativeEnum {
    const SemigroupSpec& spec;
    std::vector<AlgebraicReal> gen_norms;
    // Either a norm bound or a length bound is active.
    const AlgebraicReal* norm_bound = nullptr;
    int max_len = -1;
    ElementMap* map = nullptr;
    unsigned long element_cap = 0;
    EnumStats* stats = nullptr;
    std::vector<int> exps;

    void run() {
        exps.assign(spec.generators.size(), 0);
        descend(0, Quaternion::one(), AlgebraicReal(1L), 0);
    }

    void descend(std::size_t idx, Quaternion value, AlgebraicReal norm, int total) {
        if (idx == spec.generators.size()) {
            if (total == 0) return;
            if (stats) stats->explored += 1;
            record(*map, value, norm, word_from_exponents(exps), element_cap);
            return;
        }
        // exponent 0
        exps[idx] = 0;
        descend(idx + 1, value, norm, total);
        // positive exponents while within bounds
        int e = 0;
        while (true) {
            ++e;
            if (max_len >= 0 && total + e > max_len) break;
            value = q_mul(value, spec.generators[idx]);
            norm = norm * gen_norms[idx];
            if (norm_bound && AlgebraicReal::compare(norm, *norm_bound) > 0) break;
            exps[idx] = e;
            descend(idx + 1, value, norm, total + e);
        }
        exps[idx] = 0;
    }
};

struct BfsItem {
    Quaternion value;
    AlgebraicReal norm;
    Word word;
};

} // namespace

ValidationResult validate(const SemigroupSpec& spec) {
    if (spec.generators.empty()) {
        fail(ErrorKind::InvalidInput, "semigroup needs at least one generator");
    }
    if (!spec.labels.empty() && spec.labels.size() != spec.generators.size()) {
        fail(ErrorKind::InvalidInput, "label count does not match generator count");
    }
    AlgebraicReal one(1L);
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (spec.generators[i].is_zero()) {
            fail(ErrorKind::ZeroGenerator, generator_name(spec, i) + " is zero");
        }
        if (AlgebraicReal::compare(q_norm(spec.generators[i]), one) <= 0) {
            fail(ErrorKind::NormNotAboveOne,
                 generator_name(spec, i) + " has reduced norm not above one");
        }
    }
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.generators.size(); ++j) {
            if (q_equal(spec.generators[i], spec.generators[j])) {
                fail(ErrorKind::InvalidInput,
                     generator_name(spec, j) + " duplicates " + generator_name(spec, i));
            }
        }
    }
    bool commutative = true;
    for (std::size_t i = 0; i < spec.generators.size() && commutative; ++i) {
        for (std::size_t j = i + 1; j < spec.generators.size(); ++j) {
            if (!q_commute(spec.generators[i], spec.generators[j])) {
                commutative = false;
                break;
            }
        }
    }
    return ValidationResult{commutative};
}

std::vector<EnumeratedElement> enumerate_norm_bounded(const SemigroupSpec& spec,
                                                      const AlgebraicReal& norm_bound,
                                                      unsigned long element_cap,
                                                      EnumStats* stats) {
    ValidationResult v = validate(spec);
    ElementMap map;
    if (v.commutative) {
        CommutativeEnum en{spec, {}, &norm_bound, -1, &map, element_cap, stats, {}};
        for (const Quaternion& g : spec.generators) en.gen_norms.push_back(q_norm(g));
        en.run();
        return finalize(map);
    }
    std::deque<BfsItem> queue;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        AlgebraicReal n = q_norm(spec.generators[i]);
        if (AlgebraicReal::compare(n, norm_bound) > 0) continue;
        Word w{{static_cast<int>(i)}};
        if (stats) stats->explored += 1;
        record(map, spec.generators[i], n, w, element_cap);
        queue.push_back(BfsItem{spec.generators[i], n, w});
    }
    while (!queue.empty()) {
        BfsItem item = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < spec.generators.size(); ++i) {
            AlgebraicReal n = item.norm * q_norm(spec.generators[i]);
            if (AlgebraicReal::compare(n, norm_bound) > 0) continue;
            Quaternion val = q_mul(item.value, spec.generators[i]);
            Word w = item.word;
            w.indices.push_back(static_cast<int>(i));
            if (stats) stats->explored += 1;
            record(map, val, n, w, element_cap);
            queue.push_back(BfsItem{std::move(val), std::move(n), std::move(w)});
        }
    }
    return finalize(map);
}

std::vector<EnumeratedElement> enumerate_length_bounded(const SemigroupSpec& spec,
                                                        int max_len,
                                                        unsigned long element_cap,
                                                        EnumStats* stats) {
    ValidationResult v = validate(spec);
    ElementMap map;
    if (max_len <= 0) return {};
    if (v.commutative) {
        CommutativeEnum en{spec, {}, nullptr, max_len, &map, element_cap, stats, {}};
        for (const Quaternion& g : spec.generators) en.gen_norms.push_back(q_norm(g));
        en.run();
        return finalize(map);
    }
    std::deque<BfsItem> queue;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        AlgebraicReal n = q_norm(spec.generators[i]);
        Word w{{static_cast<int>(i)}};
        if (stats) stats->explored += 1;
        record(map, spec.generators[i], n, w, element_cap);
        queue.push_back(BfsItem{spec.generators[i], n, w});
    }
    while (!queue.empty()) {
        BfsItem item = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(item.word.indices.size()) >= max_len) continue;
        for (std::size_t i = 0; i < spec.generators.size(); ++i) {
            AlgebraicReal n = item.norm * q_norm(spec.generators[i]);
            Quaternion val = q_mul(item.value, spec.generators[i]);
            Word w = item.word;
            w.indices.push_back(static_cast<int>(i));
            if (stats) stats->explored += 1;
            record(map, val, n, w, element_cap);
            queue.push_back(BfsItem{std::move(val), std::move(n), std::move(w)});
        }
    }
    return finalize(map);
}

std::optional<Word> membership(const SemigroupSpec& spec, const Quaternion& q,
                               unsigned long element_cap) {
    validate(spec);
    AlgebraicReal n = q_norm(q);
    if (AlgebraicReal::compare(n, AlgebraicReal(1L)) <= 0) return std::nullopt;
    std::vector<EnumeratedElement> elems = enumerate_norm_bounded(spec, n, element_cap);
    for (const EnumeratedElement& e : elems) {
        if (q_equal(e.value, q)) return e.witnesses.at(0);
    }
    return std::nullopt;
}

std::vector<RInterval> log_norm_data(const SemigroupSpec& spec, unsigned bits) {
    validate(spec);
    std::vector<RInterval> out;
    for (const Quaternion& g : spec.generators) {
        AlgebraicReal n = q_norm(g);
        unsigned b = bits;
        for (;;) {
            RInterval ln = log_interval(n, b + 1);
            RInterval half = iv_scale(ln, make_rat(Int(1), Int(2)));
            if (half.lo > 0) {
                out.push_back(half);
                break;
            }
            // Norm exceeds one exactly, so the log is positive; escalate
            // until the enclosure shows it.
            if (b >= (1u << 15)) fail(ErrorKind::ResourceLimit, "log_norm_data precision cap");
            b *= 2;
        }
    }
    return out;
}

Quaternion eval_word(const SemigroupSpec& spec, const Word& w) {
    if (w.indices.empty()) fail(ErrorKind::InvalidInput, "empty word");
    Quaternion acc = Quaternion::one();
    for (int idx : w.indices) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= spec.generators.size()) {
            fail(ErrorKind::InvalidInput, "word index out of range");
        }
        acc = q_mul(acc, spec.generators[static_cast<std::size_t>(idx)]);
    }
    return acc;
}

} // namespace quatunit
