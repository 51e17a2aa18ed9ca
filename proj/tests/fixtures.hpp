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

#ifndef QCSYM_TESTS_FIXTURES_HPP
#define QCSYM_TESTS_FIXTURES_HPP

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "qcsym/io.hpp"
#include "qcsym/qc_code.hpp"
#include "qcsym/search.hpp"

namespace fixtures {

using qcsym::Elem;
using qcsym::Field;
using qcsym::Matrix;
using qcsym::OneGenQc;
using qcsym::Poly;
using qcsym::RingElem;
using qcsym::TwoGenQc;

inline std::string data_path(const std::string& name) { return std::string(QCSYM_TEST_DATA_DIR) + "/" + name + ".json"; }

inline qcsym::Json load_json(const std::string& name) {
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing test data " + name);
    return qcsym::Json::parse(in);
}

inline qcsym::CodeDescription load_code(const std::string& name) { return qcsym::code_from_json(load_json(name)); }

inline qcsym::RingElem random_ring(std::size_t n, const qcsym::Field& f, std::mt19937_64& rng) {
    std::vector<qcsym::Elem> c(n);
    for (auto& v : c) v = static_cast<qcsym::Elem>(rng() % f.size());
    return qcsym::RingElem(n, f, c);
}

/// Random t with t = t̄, so that a (a t) is always self-orthogonal.
inline qcsym::RingElem random_symmetric(std::size_t n, const qcsym::Field& f, std::mt19937_64& rng) {
    const qcsym::RingElem r = random_ring(n, f, rng);
    return r + r.transpose();
}

inline oracle::Mat to_mat(const Matrix& m) {
    oracle::Mat out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
    return out;
}

// Half the draws are forced self-orthogonal via b = a t with t symmetric.
inline OneGenQc random_onegen(std::size_t n, const Field& f, std::mt19937_64& rng) {
    const RingElem a = random_ring(n, f, rng);
    if (rng() % 2) return OneGenQc(a, a * random_symmetric(n, f, rng));
    return OneGenQc(a, random_ring(n, f, rng));
}

inline TwoGenQc random_twogen(std::size_t n, const Field& f, std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0:
            return TwoGenQc(random_ring(n, f, rng), random_ring(n, f, rng), random_ring(n, f, rng),
                            random_ring(n, f, rng));
        case 1: {
            // Both generators are multiples of one self-orthogonal pair.
            const RingElem a = random_ring(n, f, rng), t = random_symmetric(n, f, rng);
            const RingElem s1 = random_ring(n, f, rng), s2 = random_ring(n, f, rng);
            return TwoGenQc(a * s1, a * t * s1, a * s2, a * t * s2);
        }
        default: {
            // Each generator self-orthogonal on its own; the cross condition usually fails.
            const RingElem a1 = random_ring(n, f, rng), a2 = random_ring(n, f, rng);
            const RingElem t = random_symmetric(n, f, rng);
            return TwoGenQc(a1, a1 * t, a2, a2 * (rng() % 2 ? t : random_symmetric(n, f, rng)));
        }
    }
}

// A mix of shapes: plain random matrices, one-generator QC codes, and codes
// built from a random divisor so that self-orthogonal cases show up.
inline Matrix random_code(const Field& f, std::size_t n, std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0: {
            Matrix m(f, 1 + rng() % (2 * n - 1), 2 * n);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < 2 * n; ++c) m.set(r, c, static_cast<Elem>(rng() % f.size()));
            return m;
        }
        case 1:
            return OneGenQc(random_ring(n, f, rng), random_ring(n, f, rng)).generator_matrix();
        default: {
            const auto divs = qcsym::enumerate_divisors(n, f);
            const Poly& g = divs[rng() % divs.size()];
            const RingElem gr(n, g);
            return OneGenQc(random_ring(n, f, rng) * gr, random_ring(n, f, rng) * gr).generator_matrix();
        }
    }
}

}  // namespace fixtures

#endif  // QCSYM_TESTS_FIXTURES_HPP
