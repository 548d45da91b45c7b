#pragma once

// Shared generators for the property tests.

#include <random>

#include "gcode/algebra.hpp"
#include "gcode/error.hpp"
#include "gcode/random.hpp"

namespace testing {

using namespace gcode;

inline Vec random_vec(std::mt19937_64& rng, const Field& f, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = static_cast<Elem>(rng() % f.q());
    return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t rows,
                            std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Elem>(rng() % f->q());
    }
    return m;
}

inline AlgebraElement random_element(std::mt19937_64& rng, const AlgebraPtr& alg) {
    return {alg, random_vec(rng, alg->f(), alg->dim())};
}

template <class F>
ErrorKind error_kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a gcode::Error");
    return ErrorKind::IoError;
}

}  // namespace testing
