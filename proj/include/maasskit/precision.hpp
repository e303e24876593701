#pragma once

#include <cstddef>

#include "maasskit/errors.hpp"

namespace maasskit {

// Tolerance/effort knobs shared by the quadrature- and series-based routines.
struct Precision {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::size_t max_terms = 4096;
    std::size_t quad_levels = 12;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ParameterError("rel_tol must lie in (0,1)");
        if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw ParameterError("abs_tol must lie in (0,1)");
        if (max_terms < 16) throw ParameterError("max_terms must be at least 16");
        if (quad_levels < 1) throw ParameterError("quad_levels must be positive");
    }
};

inline Precision default_precision() { return Precision{}; }

// Looser default for identities that route through numerical quadrature.
inline Precision quadrature_precision() {
    Precision p;
    p.rel_tol = 1e-8;
    return p;
}

}  // namespace maasskit
