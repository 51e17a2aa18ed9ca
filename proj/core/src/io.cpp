// Copyright 2026 The qcsym Authors
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

#include "qcsym/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qcsym {

Field field_from_q(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2");
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    unsigned r = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
    if (q > Field::kMaxSize) throw std::invalid_argument("field order " + std::to_string(q) + " is too large");
    return r == 1 ? Field::prime(static_cast<std::uint32_t>(p)) : Field::extension(static_cast<std::uint32_t>(p), r);
}

std::uint64_t field_q(const Field& f) { return f.size(); }

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

Poly poly_from_json(const Json& j, const Field& f) {
    if (j.is_string()) return Poly::parse(f, j.get<std::string>());
    if (j.is_array()) {
        std::vector<Elem> c;
        for (const auto& v : j) {
            const auto x = v.get<std::int64_t>();
            if (x < 0 || static_cast<std::uint64_t>(x) >= f.size())
                throw std::invalid_argument("polynomial coefficient out of range");
            c.push_back(static_cast<Elem>(x));
        }
        return Poly(f, std::move(c));
    }
    if (j.is_number_integer()) return Poly::parse(f, std::to_string(j.get<std::int64_t>()));
    throw std::invalid_argument("polynomial must be a string or a coefficient array");
}

Json poly_json(const Poly& p) { return p.to_string(); }

std::vector<Elem> elems(std::span<const Elem> v) { return {v.begin(), v.end()}; }

}  // namespace

OneGenQc CodeDescription::onegen() const {
    if (generators.size() != 1) throw std::invalid_argument("code description is not a one-generator code");
    if (onegen_factors)
        return OneGenQc::from_factors(n, onegen_factors->g1, onegen_factors->r1, onegen_factors->g2, onegen_factors->r2);
    return OneGenQc(RingElem(n, generators[0].first), RingElem(n, generators[0].second));
}

TwoGenQc CodeDescription::twogen() const {
    if (generators.size() != 2) throw std::invalid_argument("code description is not a two-generator code");
    if (twogen_factors) return TwoGenQc::from_factors(n, twogen_factors->g, twogen_factors->t);
    return TwoGenQc(RingElem(n, generators[0].first), RingElem(n, generators[0].second),
                    RingElem(n, generators[1].first), RingElem(n, generators[1].second));
}

Matrix CodeDescription::generator_matrix() const {
    return is_two_generator() ? twogen().generator_matrix() : onegen().generator_matrix();
}

CodeDescription code_from_json(const Json& j) {
    CodeDescription c;
    c.field = field_from_q(require(j, "q").get<std::uint64_t>());
    c.n = require(j, "n").get<std::size_t>();
    if (c.n < 2) throw std::invalid_argument("n must be at least 2");
    const Field& f = c.field;
    if (j.contains("factored") && !j.at("factored").is_null()) {
        const Json& fj = j.at("factored");
        if (fj.contains("g") || fj.contains("t")) {
            TwoGenFactors tf{{Poly(f), Poly(f), Poly(f), Poly(f)}, {Poly(f), Poly(f), Poly(f), Poly(f)}};
            const Json& g = require(fj, "g");
            const Json& t = require(fj, "t");
            if (!g.is_array() || !t.is_array() || g.size() != 4 || t.size() != 4)
                throw std::invalid_argument("two-generator factored form needs four g and four t");
            for (std::size_t i = 0; i < 4; ++i) {
                tf.g[i] = poly_from_json(g[i], f);
                tf.t[i] = poly_from_json(t[i], f);
            }
            c.twogen_factors = tf;
        } else {
            OneGenFactors of{poly_from_json(require(fj, "g1"), f), poly_from_json(require(fj, "r1"), f), Poly(f),
                             poly_from_json(require(fj, "g2"), f), poly_from_json(require(fj, "r2"), f), Poly(f)};
            c.onegen_factors = of;
        }
    }
    if (j.contains("generators")) {
        for (const auto& g : j.at("generators"))
            c.generators.emplace_back(poly_from_json(require(g, "a"), f), poly_from_json(require(g, "b"), f));
    }
    if (c.generators.empty()) {
        if (c.onegen_factors) {
            c.generators.emplace_back(c.onegen_factors->r1 * c.onegen_factors->g1, c.onegen_factors->r2 * c.onegen_factors->g2);
        } else if (c.twogen_factors) {
            const auto& g = c.twogen_factors->g;
            const auto& t = c.twogen_factors->t;
            c.generators.emplace_back(t[0] * g[0], t[1] * g[1]);
            c.generators.emplace_back(t[2] * g[2], t[3] * g[3]);
        }
    }
    if (c.generators.empty() || c.generators.size() > 2) throw std::invalid_argument("code needs one or two generators");
    if (c.onegen_factors && c.generators.size() != 1) throw std::invalid_argument("one-generator factors on a two-generator code");
    if (c.twogen_factors && c.generators.size() != 2) throw std::invalid_argument("two-generator factors on a one-generator code");
    // Reject inconsistent factored data early; the constructors check g_i | x^n-1.
    if (c.onegen_factors) {
        const OneGenQc q = c.onegen();
        if (!(q.a() == RingElem(c.n, c.generators[0].first)) || !(q.b() == RingElem(c.n, c.generators[0].second)))
            throw std::invalid_argument("generators do not match the factored form");
        c.onegen_factors = q.factors();
    }
    if (c.twogen_factors) {
        const TwoGenQc q = c.twogen();
        if (!(q.a1() == RingElem(c.n, c.generators[0].first)) || !(q.b1() == RingElem(c.n, c.generators[0].second)) ||
            !(q.a2() == RingElem(c.n, c.generators[1].first)) || !(q.b2() == RingElem(c.n, c.generators[1].second)))
            throw std::invalid_argument("generators do not match the factored form");
    }
    return c;
}

Json to_json(const CodeDescription& c) {
    Json j;
    j["q"] = c.field.size();
    j["n"] = c.n;
    j["generators"] = Json::array();
    for (const auto& [a, b] : c.generators) {
        const RingElem ra(c.n, a), rb(c.n, b);
        j["generators"].push_back({{"a", poly_json(ra.poly())}, {"b", poly_json(rb.poly())}});
    }
    if (c.onegen_factors) {
        const auto& f = *c.onegen_factors;
        j["factored"] = {{"g1", poly_json(f.g1)}, {"r1", poly_json(f.r1)}, {"g2", poly_json(f.g2)}, {"r2", poly_json(f.r2)}};
    } else if (c.twogen_factors) {
        Json g = Json::array(), t = Json::array();
        for (int i = 0; i < 4; ++i) {
            g.push_back(poly_json(c.twogen_factors->g[i]));
            t.push_back(poly_json(c.twogen_factors->t[i]));
        }
        j["factored"] = {{"g", g}, {"t", t}};
    }
    return j;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(elems(m.row(r)));
    return {{"q", m.field().size()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
    const Field f = field_from_q(require(j, "q").get<std::uint64_t>());
    const auto rows = require(j, "rows").get<std::size_t>();
    const auto cols = require(j, "cols").get<std::size_t>();
    const Json& e = require(j, "entries");
    if (!e.is_array() || e.size() != rows) throw std::invalid_argument("matrix entries do not match the row count");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!e[r].is_array() || e[r].size() != cols) throw std::invalid_argument("matrix row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = e[r][c].get<std::int64_t>();
            if (v < 0 || static_cast<std::uint64_t>(v) >= f.size()) throw std::invalid_argument("matrix entry out of range");
            m.set(r, c, static_cast<Elem>(v));
        }
    }
    return m;
}

Json to_json(const ParityBlocks& h) {
    return {{"p1", poly_json(h.p1.poly())}, {"q1", poly_json(h.q1.poly())},
            {"p2", poly_json(h.p2.poly())}, {"q2", poly_json(h.q2.poly())}};
}

ParityBlocks parity_blocks_from_json(const Json& j, std::size_t n, const Field& f) {
    return ParityBlocks{RingElem(n, poly_from_json(require(j, "p1"), f)), RingElem(n, poly_from_json(require(j, "q1"), f)),
                        RingElem(n, poly_from_json(require(j, "p2"), f)), RingElem(n, poly_from_json(require(j, "q2"), f))};
}

Json to_json(const SympVector& v) { return {{"x", v.x}, {"y", v.y}}; }

Json to_json(const WeightReport& r) {
    Json j;
    j["minimum"] = r.minimum ? Json(*r.minimum) : Json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["method"] = to_string(r.method);
    j["exhaustive"] = r.exhaustive;
    j["excluded_subcode_applied"] = r.excluded_subcode_applied;
    j["lower_bound"] = r.lower_bound;
    return j;
}

WeightReport weight_report_from_json(const Json& j, const Field& f) {
    WeightReport r;
    if (!require(j, "minimum").is_null()) r.minimum = j.at("minimum").get<std::size_t>();
    if (j.contains("witness") && !j.at("witness").is_null()) {
        const Json& w = j.at("witness");
        r.witness = SympVector(f, require(w, "x").get<std::vector<Elem>>(), require(w, "y").get<std::vector<Elem>>());
    }
    const auto method = require(j, "method").get<std::string>();
    if (method == "message-enum") r.method = WeightMethod::kMessageEnum;
    else if (method == "low-weight-enum") r.method = WeightMethod::kLowWeightEnum;
    else if (method == "random-probe") r.method = WeightMethod::kRandomProbe;
    else throw std::invalid_argument("unknown weight method \"" + method + "\"");
    r.exhaustive = require(j, "exhaustive").get<bool>();
    r.excluded_subcode_applied = require(j, "excluded_subcode_applied").get<bool>();
    if (j.contains("lower_bound")) r.lower_bound = j.at("lower_bound").get<std::size_t>();
    return r;
}

Json to_json(const QuantumParams& p, const Json& generators) {
    Json j;
    j["q"] = p.q;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d;
    j["direction"] = to_string(p.direction);
    j["exhaustive"] = p.exhaustive;
    if (!p.exhaustive) j["distance_lower_bound"] = p.distance_lower_bound;
    j["excluded_subcode_applied"] = p.excluded_subcode_applied;
    j["lengthened"] = p.lengthened;
    Json prov;
    prov["classical"] = {p.classical_length, p.classical_dim,
                         p.classical_distance ? Json(*p.classical_distance) : Json(nullptr)};
    prov["generators"] = generators;
    j["provenance"] = prov;
    return j;
}

QuantumParams quantum_params_from_json(const Json& j) {
    QuantumParams p;
    p.q = require(j, "q").get<std::uint32_t>();
    p.n = require(j, "n").get<std::size_t>();
    p.k = require(j, "k").get<std::size_t>();
    p.d = require(j, "d").get<std::size_t>();
    const auto dir = require(j, "direction").get<std::string>();
    if (dir == "self-orthogonal") p.direction = Direction::kSelfOrthogonal;
    else if (dir == "dual-containing") p.direction = Direction::kDualContaining;
    else throw std::invalid_argument("unknown direction \"" + dir + "\"");
    p.exhaustive = require(j, "exhaustive").get<bool>();
    p.distance_lower_bound = j.value("distance_lower_bound", p.exhaustive ? p.d : std::size_t{0});
    p.excluded_subcode_applied = j.value("excluded_subcode_applied", true);
    p.lengthened = j.value("lengthened", false);
    if (j.contains("provenance")) {
        const Json& c = j.at("provenance").at("classical");
        p.classical_length = c.at(0).get<std::size_t>();
        p.classical_dim = c.at(1).get<std::size_t>();
        if (!c.at(2).is_null()) p.classical_distance = c.at(2).get<std::size_t>();
    }
    return p;
}

Json to_json(const SearchConfig& c) {
    Json j;
    j["q"] = c.field.size();
    j["n"] = c.n;
    switch (c.g_selector.kind) {
        case GSelector::Kind::kExplicit:
            j["g"] = c.g_selector.g ? poly_json(*c.g_selector.g) : Json(nullptr);
            break;
        case GSelector::Kind::kAllDivisors:
            j["g"] = "all";
            break;
        case GSelector::Kind::kDegree:
            j["g"] = {{"degree", c.g_selector.degree}};
            break;
    }
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["target_k"] = c.target_k ? Json(*c.target_k) : Json(nullptr);
    j["distance_floor"] = c.distance_floor;
    j["probe_samples"] = c.probe_samples;
    j["message_budget"] = c.distance.engine.message_budget;
    j["low_enum_budget"] = c.distance.low_enum_budget;
    j["dual_probe_samples"] = c.distance.probe.samples;
    j["hamming_budget"] = c.hamming_budget;
    Json inj = Json::array();
    for (const auto& t : c.injected) inj.push_back({{"g", poly_json(t.g)}, {"r1", poly_json(t.r1)}, {"r2", poly_json(t.r2)}});
    j["injected"] = inj;
    return j;
}

SearchConfig search_config_from_json(const Json& j) {
    SearchConfig c;
    c.field = field_from_q(require(j, "q").get<std::uint64_t>());
    c.n = require(j, "n").get<std::size_t>();
    if (j.contains("g") && !j.at("g").is_null()) {
        const Json& g = j.at("g");
        if (g.is_string() && g.get<std::string>() == "all") {
            c.g_selector.kind = GSelector::Kind::kAllDivisors;
        } else if (g.is_object()) {
            c.g_selector.kind = GSelector::Kind::kDegree;
            c.g_selector.degree = require(g, "degree").get<std::size_t>();
        } else {
            c.g_selector.kind = GSelector::Kind::kExplicit;
            c.g_selector.g = poly_from_json(g, c.field);
        }
    } else {
        c.g_selector.kind = GSelector::Kind::kExplicit;
        c.g_selector.g = Poly::constant(c.field, 1);
    }
    c.trials = j.value("trials", std::uint64_t{0});
    c.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("target_k") && !j.at("target_k").is_null()) c.target_k = j.at("target_k").get<std::size_t>();
    c.distance_floor = j.value("distance_floor", std::size_t{0});
    c.probe_samples = j.value("probe_samples", c.probe_samples);
    c.distance.engine.message_budget = j.value("message_budget", c.distance.engine.message_budget);
    c.distance.low_enum_budget = j.value("low_enum_budget", c.distance.low_enum_budget);
    c.distance.probe.samples = j.value("dual_probe_samples", c.distance.probe.samples);
    c.hamming_budget = j.value("hamming_budget", c.hamming_budget);
    c.threads = j.value("threads", 1u);
    if (j.contains("injected")) {
        for (const auto& t : j.at("injected"))
            c.injected.push_back({poly_from_json(require(t, "g"), c.field), poly_from_json(require(t, "r1"), c.field),
                                  poly_from_json(require(t, "r2"), c.field)});
    }
    return c;
}

Json to_json(const SearchHit& h, std::size_t n) {
    Json gens = {{"g", poly_json(h.g)}, {"r1", poly_json(h.r1)}, {"r2", poly_json(h.r2)},
                 {"a", poly_json(RingElem(n, h.r1 * h.g).poly())}, {"b", poly_json(RingElem(n, h.r2 * h.g).poly())}};
    Json j;
    j["trial_index"] = h.trial_index;
    j["injected"] = h.injected;
    j["quantum"] = to_json(h.params, gens);
    return j;
}

std::string search_record_jsonl(const SearchRecord& r) {
    std::ostringstream out;
    for (const auto& h : r.hits) out << to_json(h, r.config.n).dump() << '\n';
    Json s;
    s["config"] = to_json(r.config);
    s["trials"] = r.stats.trials;
    s["self_orthogonal"] = r.stats.self_orthogonal;
    s["dimension_ok"] = r.stats.dimension_ok;
    s["probe_ok"] = r.stats.probe_ok;
    s["hits"] = r.stats.hits;
    Json best = nullptr;
    for (const auto& h : r.hits) {
        if (!h.params.exhaustive) continue;
        if (best.is_null() || h.params.d > best["d"].get<std::size_t>())
            best = {{"n", h.params.n}, {"k", h.params.k}, {"d", h.params.d}, {"trial_index", h.trial_index}};
    }
    s["best"] = best;
    out << Json{{"summary", s}}.dump() << '\n';
    return out.str();
}

Json to_json(const SearchTimings& t) {
    return {{"self_orthogonality_s", t.self_orthogonality_s}, {"dimension_s", t.dimension_s}, {"probe_s", t.probe_s},
            {"exact_s", t.exact_s}, {"total_s", t.total_s}};
}

Json to_json(const Factor& f) { return {{"factor", poly_json(f.poly)}, {"multiplicity", f.multiplicity}}; }

}  // namespace qcsym
