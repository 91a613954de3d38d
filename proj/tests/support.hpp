#pragma once

#include "brane/brane_ops.hpp"
#include "brane/model_file.hpp"

#include <random>

namespace brane::testing {

inline ModelPtr model(const std::string& text) { return parse_model(text).model(); }
inline ModelPtr s3() { return model("model S3\ngen x 3\n"); }
inline ModelPtr s4() { return model("model S4\ngen x 4\ngen y 7\nd y = x^2\n"); }
inline ModelPtr s3xs3() { return model("model S3xS3\ngen a 3\ngen b 3\n"); }
inline ModelPtr s5() { return model("model S5\ngen x 5\n"); }
inline ModelPtr s6() { return model("model S6\ngen x 6\ngen y 11\nd y = x^2\n"); }

inline Element expr(const AlgPtr& alg, const std::string& text) { return parse_element(alg, text); }

// Random element of degree n with small integer coefficients.
inline Element random_element(const AlgPtr& alg, int n, std::mt19937& rng) {
    Element e = alg->zero();
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& m : alg->basis(n)) e.add_term(m, coef(rng));
    return e;
}

}  // namespace brane::testing
