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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "qcsym/io.hpp"
#include "qcsym/parallel.hpp"
#include "qcsym/qc_code.hpp"
#include "qcsym/qecc.hpp"
#include "qcsym/search.hpp"
#include "qcsym/symplectic.hpp"
#include "qcsym/weight.hpp"

namespace qcsym::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand that takes a code.
struct CodeFlags {
    std::string file;
    std::optional<std::uint64_t> q;
    std::optional<std::size_t> n;
    std::optional<std::string> a, b, a2, b2;
    std::optional<std::string> g1, r1, g2, r2;
};

struct Common {
    bool json = false;
    unsigned threads = 0;
};

struct EngineFlags {
    std::uint64_t message_budget = EngineOptions{}.message_budget;
    std::uint64_t low_enum_budget = DistanceOptions{}.low_enum_budget;
    std::uint64_t probe_samples = ProbeOptions{}.samples;
    std::uint64_t hamming_budget = 1'000'000'000ULL;
};

void add_code_flags(CLI::App* app, CodeFlags& f) {
    app->add_option("--file,-f", f.file, "Code description JSON file");
    app->add_option("--q", f.q, "Field order (prime power)");
    app->add_option("--n", f.n, "Block length n");
    app->add_option("--a", f.a, "a(x), or a1(x) for two generators");
    app->add_option("--b", f.b, "b(x), or b1(x) for two generators");
    app->add_option("--a2", f.a2, "a2(x) of the second generator");
    app->add_option("--b2", f.b2, "b2(x) of the second generator");
    app->add_option("--g1", f.g1, "Factored form: g1(x)");
    app->add_option("--r1", f.r1, "Factored form: r1(x)");
    app->add_option("--g2", f.g2, "Factored form: g2(x)");
    app->add_option("--r2", f.r2, "Factored form: r2(x)");
}

void add_common(CLI::App* app, Common& c) {
    app->add_flag("--json", c.json, "Machine-readable JSON output");
    app->add_option("--threads", c.threads, "Worker threads (default: QCSYM_THREADS or all cores)");
}

void add_engine_flags(CLI::App* app, EngineFlags& e) {
    app->add_option("--message-budget", e.message_budget, "Largest q^dim for message enumeration");
    app->add_option("--low-budget", e.low_enum_budget, "Leaf budget for low-weight enumeration");
    app->add_option("--probe-samples", e.probe_samples, "Random codewords sampled before low-weight enumeration");
    app->add_option("--hamming-budget", e.hamming_budget, "Largest q^k for the exact Hamming distance");
}

unsigned thread_count(const Common& c) { return c.threads > 0 ? c.threads : default_thread_count(); }

DistanceOptions distance_options(const EngineFlags& e, unsigned threads) {
    DistanceOptions d;
    d.engine.message_budget = e.message_budget;
    d.engine.threads = threads;
    d.low_enum_budget = e.low_enum_budget;
    d.probe.samples = e.probe_samples;
    return d;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// The file provides defaults; inline flags override it with a warning.
CodeDescription load_code(const CodeFlags& f, std::ostream& err) {
    Json j = Json::object();
    const bool have_file = !f.file.empty();
    if (have_file) j = read_json_file(f.file);
    auto override_key = [&](const char* key, const Json& value, const char* flag) {
        if (have_file && j.contains(key)) err << "warning: " << flag << " overrides \"" << key << "\" from " << f.file << "\n";
        j[key] = value;
    };
    if (f.q) override_key("q", *f.q, "--q");
    if (f.n) override_key("n", *f.n, "--n");

    const bool inline_gens = f.a || f.b || f.a2 || f.b2;
    const bool inline_factors = f.g1 || f.r1 || f.g2 || f.r2;
    if (inline_gens) {
        if (!f.a || !f.b) throw UsageError("--a and --b must be given together");
        if (static_cast<bool>(f.a2) != static_cast<bool>(f.b2)) throw UsageError("--a2 and --b2 must be given together");
        if (have_file && j.contains("generators")) err << "warning: inline generators override those in " << f.file << "\n";
        if (j.contains("factored")) {
            err << "warning: dropping the factored form from " << f.file << "\n";
            j.erase("factored");
        }
        Json gens = Json::array({{{"a", *f.a}, {"b", *f.b}}});
        if (f.a2) gens.push_back({{"a", *f.a2}, {"b", *f.b2}});
        j["generators"] = gens;
    }
    if (inline_factors) {
        if (!f.g1 || !f.r1 || !f.g2 || !f.r2) throw UsageError("--g1, --r1, --g2 and --r2 must be given together");
        if (have_file && j.contains("factored")) err << "warning: inline factored form overrides " << f.file << "\n";
        j["factored"] = {{"g1", *f.g1}, {"r1", *f.r1}, {"g2", *f.g2}, {"r2", *f.r2}};
        if (!inline_gens) j.erase("generators");
    }
    if (!j.contains("q") || !j.contains("n")) throw UsageError("a code needs --q and --n (or a --file)");
    if (!j.contains("generators") && !j.contains("factored")) throw UsageError("a code needs generators (--a/--b) or a factored form");
    return code_from_json(j);
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

void print_code_header(const CodeDescription& c, std::ostream& out) {
    out << (c.is_two_generator() ? "two-generator" : "one-generator") << " QC code over " << c.field.name()
        << ", n = " << c.n << "\n";
    if (c.is_two_generator()) {
        const TwoGenQc q = c.twogen();
        out << "  a1(x) = " << q.a1().poly().to_string() << "\n  b1(x) = " << q.b1().poly().to_string() << "\n";
        out << "  a2(x) = " << q.a2().poly().to_string() << "\n  b2(x) = " << q.b2().poly().to_string() << "\n";
    } else {
        const OneGenQc q = c.onegen();
        out << "  a(x) = " << q.a().poly().to_string() << "\n  b(x) = " << q.b().poly().to_string() << "\n";
    }
}

// ---------------------------------------------------------------- factor

int cmd_factor(std::uint64_t q, std::size_t n, const Common& c, std::ostream& out) {
    const Field f = field_from_q(q);
    if (n < 1) throw UsageError("n must be positive");
    const auto factors = factor_xn_minus_1(n, f);
    if (c.json) {
        Json j = {{"q", q}, {"n", n}, {"factors", Json::array()}, {"text", factors_to_string(factors)}};
        for (const auto& fa : factors) j["factors"].push_back(to_json(fa));
        out << j.dump() << "\n";
    } else {
        out << "x^" << n << "-1 = " << factors_to_string(factors) << "\n";
    }
    return kOk;
}

int cmd_divisors(std::uint64_t q, std::size_t n, std::optional<std::size_t> degree, const Common& c, std::ostream& out) {
    const Field f = field_from_q(q);
    if (n < 1) throw UsageError("n must be positive");
    auto divs = enumerate_divisors(n, f);
    if (degree) std::erase_if(divs, [&](const Poly& p) { return p.degree_or_zero() != *degree; });
    if (c.json) {
        Json arr = Json::array();
        for (const auto& d : divs) arr.push_back(d.to_string());
        out << Json{{"q", q}, {"n", n}, {"count", divs.size()}, {"divisors", arr}}.dump() << "\n";
    } else {
        out << divs.size() << " monic divisors of x^" << n << "-1\n";
        for (const auto& d : divs) out << "  " << d.to_string() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- verify-so

int cmd_verify_so(const CodeDescription& code, const Common& c, std::ostream& out) {
    const Matrix g = code.generator_matrix();
    const bool ground = is_symplectic_self_orthogonal(g);
    const std::size_t dim = rank(g);
    Json j = {{"q", code.field.size()}, {"n", code.n}, {"dim", dim}, {"g_omega_gt_zero", ground}};
    bool matrix_ok = false, poly_ok = false;
    if (code.is_two_generator()) {
        const TwoGenQc q = code.twogen();
        auto mat = [](const RingElem& x, const RingElem& y, const RingElem& u, const RingElem& v) {
            return circulant(x) * circulant(y).transpose() == circulant(u) * circulant(v).transpose();
        };
        auto poly = [](const RingElem& x, const RingElem& y) { return (x * y.transpose() - y * x.transpose()).is_zero(); };
        auto poly2 = [](const RingElem& a1, const RingElem& b2, const RingElem& b1, const RingElem& a2) {
            return (a1 * b2.transpose() - b1 * a2.transpose()).is_zero();
        };
        const bool m[3] = {mat(q.a1(), q.b1(), q.b1(), q.a1()), mat(q.a2(), q.b2(), q.b2(), q.a2()),
                           mat(q.a1(), q.b2(), q.b1(), q.a2())};
        const bool p[3] = {poly(q.a1(), q.b1()), poly(q.a2(), q.b2()), poly2(q.a1(), q.b2(), q.b1(), q.a2())};
        matrix_ok = twogen_selforth_matrix(q);
        poly_ok = twogen_selforth_poly(q);
        j["matrix_conditions"] = {m[0], m[1], m[2]};
        j["poly_conditions"] = {p[0], p[1], p[2]};
        if (!c.json) {
            print_code_header(code, out);
            const char* mnames[3] = {"A1 B1^t = B1 A1^t", "A2 B2^t = B2 A2^t", "A1 B2^t = B1 A2^t"};
            const char* pnames[3] = {"a1 b1' - b1 a1' = 0", "a2 b2' - b2 a2' = 0", "a1 b2' - b1 a2' = 0"};
            for (int i = 0; i < 3; ++i) out << "matrix  " << mnames[i] << ": " << yes_no(m[i]) << "\n";
            for (int i = 0; i < 3; ++i) out << "poly    " << pnames[i] << " mod x^n-1: " << yes_no(p[i]) << "\n";
        }
    } else {
        const OneGenQc q = code.onegen();
        matrix_ok = onegen_selforth_matrix(q);
        poly_ok = onegen_selforth_poly(q);
        j["transpose_a"] = q.a().transpose().poly().to_string();
        j["transpose_b"] = q.b().transpose().poly().to_string();
        if (!c.json) {
            print_code_header(code, out);
            out << "  a'(x) = " << j["transpose_a"].get<std::string>() << "\n  b'(x) = " << j["transpose_b"].get<std::string>()
                << "\n";
            out << "matrix  AB^t = BA^t: " << yes_no(matrix_ok) << "\n";
            out << "poly    a b' - b a' = 0 mod x^n-1: " << yes_no(poly_ok) << "\n";
        }
    }
    const bool agree = matrix_ok == poly_ok && poly_ok == ground;
    j["matrix_criterion"] = matrix_ok;
    j["poly_criterion"] = poly_ok;
    j["self_orthogonal"] = ground;
    j["criteria_agree"] = agree;
    if (c.json) {
        out << j.dump() << "\n";
    } else {
        out << "G Omega G^t = 0: " << yes_no(ground) << "\n";
        out << "dim: " << dim << "\n";
        out << (ground ? "self-orthogonal" : "not self-orthogonal") << "\n";
        if (!agree) out << "error: criteria disagree\n";
    }
    if (!agree) return kInternal;
    return ground ? kOk : kFalse;
}

// ---------------------------------------------------------------- verify-dc

struct BlockFlags {
    std::optional<std::string> p1, q1, p2, q2;
    std::string file;
};

int cmd_verify_dc(const CodeDescription& code, const BlockFlags& bf, const CodeFlags& cf, const Common& c,
                  std::ostream& out, std::ostream& err) {
    const Matrix g = code.generator_matrix();
    const bool direct = is_symplectic_dual_containing(g);
    Json j = {{"q", code.field.size()}, {"n", code.n}, {"dim", rank(g)}, {"direct_containment", direct}};
    bool agree = true;
    if (!c.json) print_code_header(code, out);
    if (code.is_two_generator()) {
        const TwoGenQc q = code.twogen();
        std::optional<ParityBlocks> blocks;
        std::string source = "computed";
        Json bj = Json::object();
        if (!bf.file.empty()) bj = read_json_file(bf.file);
        else if (!cf.file.empty()) {
            const Json fj = read_json_file(cf.file);
            if (fj.contains("parity")) bj = fj.at("parity");
        }
        auto set = [&](const char* key, const std::optional<std::string>& v) {
            if (!v) return;
            if (bj.contains(key)) err << "warning: --" << key << " overrides the file value\n";
            bj[key] = *v;
        };
        set("p1", bf.p1);
        set("q1", bf.q1);
        set("p2", bf.p2);
        set("q2", bf.q2);
        if (!bj.empty()) {
            blocks = parity_blocks_from_json(bj, code.n, code.field);
            source = "supplied";
        } else {
            blocks = dual_parity_blocks(q);
        }
        const ParityReport rep = parity_blocks_check(q, *blocks);
        j["parity"] = to_json(*blocks);
        j["parity_source"] = source;
        j["block_equations"] = {rep.equations[0], rep.equations[1], rep.equations[2], rep.equations[3]};
        j["g_omega_ht_zero"] = rep.g_omega_h_zero;
        j["rank_g"] = rep.rank_g;
        j["rank_h"] = rep.rank_h;
        j["generates_dual"] = rep.generates_dual();
        if (rep.all_equations() != rep.g_omega_h_zero) agree = false;
        if (!c.json) {
            out << "parity blocks (" << source << "):\n";
            out << "  p1(x) = " << blocks->p1.poly().to_string() << "\n  q1(x) = " << blocks->q1.poly().to_string() << "\n";
            out << "  p2(x) = " << blocks->p2.poly().to_string() << "\n  q2(x) = " << blocks->q2.poly().to_string() << "\n";
            const char* names[4] = {"A1 Q1^t = B1 P1^t", "A1 Q2^t = B1 P2^t", "A2 Q1^t = B2 P1^t", "A2 Q2^t = B2 P2^t"};
            for (int i = 0; i < 4; ++i) out << names[i] << ": " << yes_no(rep.equations[i]) << "\n";
            out << "G Omega H^t = 0: " << yes_no(rep.g_omega_h_zero) << "\n";
            out << "rank(G) + rank(H) = " << rep.rank_g << " + " << rep.rank_h << " = " << rep.rank_g + rep.rank_h
                << " (2n = " << 2 * code.n << ")\n";
        }
        if (rep.generates_dual()) {
            const bool m = twogen_dualcontaining_matrix(q, *blocks);
            const bool p = twogen_dualcontaining_poly(q, *blocks);
            j["matrix_criterion"] = m;
            j["poly_criterion"] = p;
            if (m != p || p != direct) agree = false;
            if (!c.json) {
                out << "matrix  P_i Q_j^t = Q_i P_j^t: " << yes_no(m) << "\n";
                out << "poly    p_i q_j' - q_i p_j' = 0 mod x^n-1: " << yes_no(p) << "\n";
            }
        } else {
            j["matrix_criterion"] = nullptr;
            j["poly_criterion"] = nullptr;
            if (!c.json) out << "H does not generate the symplectic dual; block criteria not applicable\n";
            if (source == "computed") agree = false;
        }
    } else {
        const OneGenQc q = code.onegen();
        j["gcd_degree"] = code.n - onegen_dim_gcd(q);
        if (!c.json) out << "one-generator code: only the direct containment check applies\n";
    }
    j["dual_containing"] = direct;
    j["criteria_agree"] = agree;
    if (c.json) {
        out << j.dump() << "\n";
    } else {
        out << "C^perp_s in C (direct): " << yes_no(direct) << "\n";
        out << (direct ? "dual-containing" : "not dual-containing") << "\n";
        if (!agree) out << "error: criteria disagree\n";
    }
    if (!agree) return kInternal;
    return direct ? kOk : kFalse;
}

// ---------------------------------------------------------------- dim

int cmd_dim(const CodeDescription& code, const Common& c, std::ostream& out) {
    Json j = {{"q", code.field.size()}, {"n", code.n}};
    const std::size_t r = rank(code.generator_matrix());
    j["rank"] = r;
    bool agree = true;
    if (code.is_two_generator()) {
        const TwoGenDim d = twogen_dim(code.twogen());
        j["rank_g1"] = d.rank_g1;
        j["rank_g2"] = d.rank_g2;
        j["intersection"] = d.intersection;
        j["dim"] = d.dim;
        agree = d.dim == r;
        if (!c.json) {
            print_code_header(code, out);
            out << "rank(G1) = " << d.rank_g1 << ", rank(G2) = " << d.rank_g2 << ", dim(G1 cap G2) = " << d.intersection << "\n";
            out << "dim = " << d.dim << "\n";
        }
    } else {
        const OneGenQc q = code.onegen();
        const std::size_t dg = onegen_dim_gcd(q);
        const Poly h = parity_check_polynomial(q);
        j["dim_gcd"] = dg;
        j["dim"] = dg;
        j["parity_check_polynomial"] = h.to_string();
        agree = dg == r;
        if (!c.json) {
            print_code_header(code, out);
            out << "n - deg gcd(a, b, x^n-1) = " << dg << "\n";
            out << "parity-check polynomial h(x) = " << h.to_string() << "\n";
        }
        if (q.factors()) {
            const DimFromH dh = onegen_dim_h(q);
            j["dim_h"] = dh.applicable ? Json(dh.lcm_degree) : Json("inapplicable");
            j["lcm_h_degree"] = dh.lcm_degree;
            j["dim_h_diagnostic"] = dh.diagnostic();
            if (dh.applicable && dh.lcm_degree != r) agree = false;
            if (!c.json) {
                out << "  h1(x) = " << q.factors()->h1.to_string() << "\n  h2(x) = " << q.factors()->h2.to_string() << "\n";
                out << "deg lcm(h1, h2): " << (dh.applicable ? std::to_string(dh.lcm_degree) : "inapplicable") << " ("
                    << dh.diagnostic() << ")\n";
            }
        }
        if (!c.json) out << "dim = " << dg << "\n";
    }
    j["consistent"] = agree;
    if (c.json) out << j.dump() << "\n";
    else out << "rank(G) = " << r << "\n";
    return agree ? kOk : kInternal;
}

// ---------------------------------------------------------------- dual

int cmd_dual(const CodeDescription& code, const Common& c, std::ostream& out) {
    const Matrix g = code.generator_matrix();
    const Matrix d = symplectic_dual(g);
    Json j = {{"q", code.field.size()}, {"n", code.n}, {"dim", rank(g)}, {"dual_dim", d.rows()}, {"dual", to_json(d)}};
    std::optional<ParityBlocks> blocks;
    if (code.is_two_generator()) {
        blocks = dual_parity_blocks(code.twogen());
        j["parity"] = to_json(*blocks);
    }
    if (c.json) {
        out << j.dump() << "\n";
        return kOk;
    }
    print_code_header(code, out);
    out << "dim C = " << rank(g) << ", dim C^perp_s = " << d.rows() << "\n";
    if (blocks) {
        out << "C^perp_s as a two-generator code:\n";
        out << "  (p1, q1) = (" << blocks->p1.poly().to_string() << ", " << blocks->q1.poly().to_string() << ")\n";
        out << "  (p2, q2) = (" << blocks->p2.poly().to_string() << ", " << blocks->q2.poly().to_string() << ")\n";
    }
    out << "basis of C^perp_s:\n";
    for (std::size_t r = 0; r < d.rows(); ++r) {
        out << "  ";
        for (std::size_t col = 0; col < d.cols(); ++col) out << (col == code.n ? " | " : col ? " " : "") << d.at(r, col);
        out << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- weight

int cmd_weight(const CodeDescription& code, const std::string& set, const std::string& engine, std::size_t cap,
               const EngineFlags& ef, const Common& c, std::ostream& out) {
    const Matrix g = row_basis(code.generator_matrix());
    const Matrix d = symplectic_dual(g);
    const unsigned threads = thread_count(c);
    // (code to search, its parity checks, subcode to exclude)
    Matrix words = d, checks = apply_omega(g);
    std::optional<Matrix> exclude;
    if (set == "dual-minus-code") {
        exclude = g;
    } else if (set == "code-minus-dual") {
        words = g;
        checks = nullspace(g);
        exclude = d;
    } else if (set == "dual") {
    } else if (set == "code") {
        words = g;
        checks = nullspace(g);
    } else {
        throw UsageError("--set must be dual-minus-code, code-minus-dual, dual or code");
    }
    DistanceOptions opts = distance_options(ef, threads);
    WeightReport r;
    if (engine == "auto") {
        r = min_symp_weight(words, exclude, opts);
    } else if (engine == "message") {
        r = min_symp_weight_message_enum(words, exclude, opts.engine);
    } else if (engine == "low") {
        r = min_symp_weight_low_enum(checks, cap == 0 ? code.n : cap, exclude, opts.engine);
    } else {
        throw UsageError("--engine must be auto, message or low");
    }
    if (c.json) {
        out << to_json(r).dump() << "\n";
        return kOk;
    }
    out << "set: " << set << " (dim " << rank(words) << ")\n";
    out << "method: " << to_string(r.method) << (r.exhaustive ? ", exhaustive" : ", not exhaustive") << "\n";
    if (r.minimum) {
        out << "minimum symplectic weight: " << *r.minimum << "\n";
        if (!r.exhaustive) out << "proven lower bound: " << r.lower_bound << "\n";
    } else {
        out << "no qualifying word of weight <= " << r.lower_bound - 1 << "\n";
    }
    out << "excluded subcode applied: " << yes_no(r.excluded_subcode_applied) << "\n";
    if (r.witness) {
        out << "witness x: ";
        for (auto v : r.witness->x) out << v;
        out << "\nwitness y: ";
        for (auto v : r.witness->y) out << v;
        out << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- qecc

void print_params(const QuantumParams& p, std::ostream& out) {
    out << p.to_string() << " (" << to_string(p.direction) << ")\n";
    out << "classical code: [" << p.classical_length << ", " << p.classical_dim << ", "
        << (p.classical_distance ? std::to_string(*p.classical_distance) : "?") << "]\n";
    if (!p.exhaustive) out << "distance not exhaustive: proven d >= " << p.distance_lower_bound << "\n";
    if (!p.excluded_subcode_applied) out << "k = 0: distance taken over all nonzero words of the dual\n";
    if (p.lengthened) out << "obtained by lengthening\n";
}

int cmd_qecc(const CodeDescription& code, const std::string& direction, bool lengthen_flag, const EngineFlags& ef,
             const Common& c, std::ostream& out) {
    QeccOptions opts;
    opts.distance = distance_options(ef, thread_count(c));
    opts.hamming_budget = ef.hamming_budget;
    const Matrix g = code.generator_matrix();
    std::string dir = direction;
    if (dir == "auto") {
        if (is_symplectic_self_orthogonal(g)) dir = "so";
        else if (is_symplectic_dual_containing(g)) dir = "dc";
        else throw VerificationError("C in C^perp_s or C^perp_s in C", "code is neither symplectic self-orthogonal nor dual-containing");
    }
    QuantumParams p;
    if (dir == "so") {
        p = code.is_two_generator() ? qecc_from_selforth(code.twogen(), opts) : qecc_from_selforth(code.onegen(), opts);
    } else if (dir == "dc") {
        p = code.is_two_generator() ? qecc_from_dualcontaining(code.twogen(), opts)
                                    : qecc_from_dualcontaining(code.onegen(), opts);
    } else {
        throw UsageError("--direction must be auto, so or dc");
    }
    if (lengthen_flag && p.k == 0) throw VerificationError("k > 0", "lengthening requires k > 0");
    const Json gens = to_json(code);
    if (c.json) {
        Json j = to_json(p, gens);
        if (lengthen_flag) j = Json{{"code", j}, {"lengthened", to_json(lengthen(p), gens)}};
        out << j.dump() << "\n";
    } else {
        print_params(p, out);
        if (lengthen_flag) {
            out << "lengthened: ";
            print_params(lengthen(p), out);
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- search

struct SearchFlags {
    std::string config;
    std::optional<std::uint64_t> q;
    std::optional<std::size_t> n;
    std::optional<std::string> g;
    std::optional<std::uint64_t> trials, seed;
    std::optional<std::size_t> target_k, floor;
    std::vector<std::string> inject;
    std::string out_file;
};

int cmd_search(const SearchFlags& sf, const EngineFlags& ef, bool engine_set, const Common& c, std::ostream& out,
               std::ostream& err) {
    Json j = Json::object();
    const bool have_file = !sf.config.empty();
    if (have_file) j = read_json_file(sf.config);
    auto set = [&](const char* key, const Json& v) {
        if (have_file && j.contains(key)) err << "warning: --" << key << " overrides the config file\n";
        j[key] = v;
    };
    if (sf.q) set("q", *sf.q);
    if (sf.n) set("n", *sf.n);
    if (sf.g) {
        const std::string& g = *sf.g;
        if (g.rfind("degree:", 0) == 0) set("g", Json{{"degree", std::stoul(g.substr(7))}});
        else set("g", g);
    }
    if (sf.trials) set("trials", *sf.trials);
    if (sf.seed) set("seed", *sf.seed);
    if (sf.target_k) set("target_k", *sf.target_k);
    if (sf.floor) set("distance_floor", *sf.floor);
    if (engine_set) {
        set("message_budget", ef.message_budget);
        set("low_enum_budget", ef.low_enum_budget);
        set("dual_probe_samples", ef.probe_samples);
        set("hamming_budget", ef.hamming_budget);
    }
    if (!sf.inject.empty()) {
        Json inj = j.value("injected", Json::array());
        for (const auto& s : sf.inject) {
            std::vector<std::string> parts;
            std::stringstream ss(s);
            std::string part;
            while (std::getline(ss, part, ';')) parts.push_back(part);
            if (parts.size() != 3) throw UsageError("--inject takes \"g;r1;r2\"");
            inj.push_back({{"g", parts[0]}, {"r1", parts[1]}, {"r2", parts[2]}});
        }
        j["injected"] = inj;
    }
    if (!j.contains("q") || !j.contains("n")) throw UsageError("search needs --q and --n (or --config)");
    SearchConfig cfg = search_config_from_json(j);
    cfg.threads = thread_count(c);
    const SearchRecord rec = run_search(cfg);
    bool all_verified = true;
    for (const auto& h : rec.hits) all_verified = all_verified && reverify_hit(h, cfg);
    const std::string lines = search_record_jsonl(rec);
    if (!sf.out_file.empty()) {
        std::ofstream f(sf.out_file);
        if (!f) throw UsageError("cannot write " + sf.out_file);
        f << lines;
    }
    if (c.json) {
        out << lines;
    } else {
        out << "trials: " << rec.stats.trials << ", self-orthogonal: " << rec.stats.self_orthogonal
            << ", dimension ok: " << rec.stats.dimension_ok << ", probe ok: " << rec.stats.probe_ok
            << ", hits: " << rec.stats.hits << "\n";
        for (const auto& h : rec.hits) {
            out << "trial " << h.trial_index << (h.injected ? " (injected)" : "") << ": " << h.params.to_string()
                << (h.params.exhaustive ? "" : " (d not exhaustive)") << "\n";
            out << "  g(x)  = " << h.g.to_string() << "\n  r1(x) = " << h.r1.to_string() << "\n  r2(x) = " << h.r2.to_string()
                << "\n";
        }
        out << "time: " << rec.timings.total_s << " s\n";
    }
    if (!all_verified) {
        err << "error: a search hit failed independent re-verification\n";
        return kInternal;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qcsym: symplectic self-orthogonal and dual-containing quasi-cyclic codes"};
    app.name(args.empty() ? "qcsym" : args[0]);
    app.require_subcommand(1);

    std::function<int()> action;
    Common common;
    CodeFlags code_flags;
    EngineFlags engine_flags;

    std::uint64_t fq = 0;
    std::size_t fn = 0;
    std::optional<std::size_t> degree;
    auto* factor = app.add_subcommand("factor", "Factor x^n-1 over F_q");
    factor->add_option("--q", fq, "Field order")->required();
    factor->add_option("--n", fn, "n")->required();
    add_common(factor, common);
    factor->callback([&] { action = [&] { return cmd_factor(fq, fn, common, out); }; });

    auto* divisors = app.add_subcommand("divisors", "List the monic divisors of x^n-1");
    divisors->add_option("--q", fq, "Field order")->required();
    divisors->add_option("--n", fn, "n")->required();
    divisors->add_option("--degree", degree, "Only divisors of this degree");
    add_common(divisors, common);
    divisors->callback([&] { action = [&] { return cmd_divisors(fq, fn, degree, common, out); }; });

    auto* vso = app.add_subcommand("verify-so", "Check symplectic self-orthogonality (matrix, polynomial, G Omega G^t)");
    add_code_flags(vso, code_flags);
    add_common(vso, common);
    vso->callback([&] { action = [&] { return cmd_verify_so(load_code(code_flags, err), common, out); }; });

    BlockFlags block_flags;
    auto* vdc = app.add_subcommand("verify-dc", "Check symplectic dual-containment");
    add_code_flags(vdc, code_flags);
    add_common(vdc, common);
    vdc->add_option("--p1", block_flags.p1, "Parity block p1(x)");
    vdc->add_option("--q1", block_flags.q1, "Parity block q1(x)");
    vdc->add_option("--p2", block_flags.p2, "Parity block p2(x)");
    vdc->add_option("--q2", block_flags.q2, "Parity block q2(x)");
    vdc->add_option("--parity", block_flags.file, "JSON file with {p1, q1, p2, q2}");
    vdc->callback([&] {
        action = [&] { return cmd_verify_dc(load_code(code_flags, err), block_flags, code_flags, common, out, err); };
    });

    auto* dim = app.add_subcommand("dim", "Dimension by rank and by the gcd / lcm formulas");
    add_code_flags(dim, code_flags);
    add_common(dim, common);
    dim->callback([&] { action = [&] { return cmd_dim(load_code(code_flags, err), common, out); }; });

    auto* dual = app.add_subcommand("dual", "Basis of the symplectic dual");
    add_code_flags(dual, code_flags);
    add_common(dual, common);
    dual->callback([&] { action = [&] { return cmd_dual(load_code(code_flags, err), common, out); }; });

    std::string set = "dual-minus-code", engine = "auto";
    std::size_t cap = 0;
    auto* weight = app.add_subcommand("weight", "Minimum symplectic weight");
    add_code_flags(weight, code_flags);
    add_common(weight, common);
    add_engine_flags(weight, engine_flags);
    weight->add_option("--set", set, "dual-minus-code (default), code-minus-dual, dual or code");
    weight->add_option("--engine", engine, "auto (default), message or low");
    weight->add_option("--cap", cap, "Weight cap for --engine low (default n)");
    weight->callback([&] {
        action = [&] { return cmd_weight(load_code(code_flags, err), set, engine, cap, engine_flags, common, out); };
    });

    std::string direction = "auto";
    bool lengthen_flag = false;
    auto* qecc = app.add_subcommand("qecc", "Quantum code parameters [[n, k, d]]_q");
    add_code_flags(qecc, code_flags);
    add_common(qecc, common);
    add_engine_flags(qecc, engine_flags);
    qecc->add_option("--direction", direction, "auto (default), so or dc");
    qecc->add_flag("--lengthen", lengthen_flag, "Also report the lengthened code [[n+1, k, d]]");
    qecc->callback([&] {
        action = [&] { return cmd_qecc(load_code(code_flags, err), direction, lengthen_flag, engine_flags, common, out); };
    });

    SearchFlags sf;
    auto* search = app.add_subcommand("search", "Random search for self-orthogonal codes (r1 g, r2 g)");
    add_common(search, common);
    add_engine_flags(search, engine_flags);
    search->add_option("--config", sf.config, "Search config JSON file");
    search->add_option("--q", sf.q, "Field order");
    search->add_option("--n", sf.n, "n");
    search->add_option("--g", sf.g, "g(x), \"all\", or \"degree:t\"");
    search->add_option("--trials", sf.trials, "Random trials");
    search->add_option("--seed", sf.seed, "RNG seed");
    search->add_option("--target-k", sf.target_k, "Keep only quantum k = target");
    search->add_option("--floor", sf.floor, "Discard codes with d <= floor");
    search->add_option("--inject", sf.inject, "Known-answer trial \"g;r1;r2\" (repeatable)");
    search->add_option("--out", sf.out_file, "Also write the JSON-lines record to this file");
    search->callback([&] {
        const bool engine_set = search->count("--message-budget") + search->count("--low-budget") +
                                    search->count("--probe-samples") + search->count("--hamming-budget") >
                                0;
        action = [&, engine_set] { return cmd_search(sf, engine_flags, engine_set, common, out, err); };
    });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (!action) return kUsage;
    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << " [failed: " << e.criterion() << "]\n";
        return kFalse;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace qcsym::cli
