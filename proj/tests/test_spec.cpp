#include <chrono>

#include "doctest.h"
#include "support.hpp"

using namespace gcross;
using namespace testsupport;

TEST_CASE("every bundled category validates") {
    for (const auto& name : bundled_specs()) {
        CAPTURE(name);
        Spec S = spec(name);
        Report r = validate_spec(S);
        INFO(r.to_text());
        CHECK(r.ok());
        CHECK(r.max_residual() < 1e-9);
    }
}

TEST_CASE("validation is repeatable") {
    Spec S = spec("ising_z2crossed");
    CHECK(validate_spec(S).to_text() == validate_spec(S).to_text());
}

TEST_CASE("perturbing any single Ising F-symbol breaks the pentagon") {
    const Spec base = spec("ising_trivialG");
    double weakest = INFINITY;
    int perturbed = 0;
    for (const auto& [key, blk] : base.F)
        for (long i = 0; i < blk.M.rows(); ++i)
            for (long j = 0; j < blk.M.cols(); ++j) {
                Spec S = base;
                S.F.at(key).M(i, j) += 1e-3;
                S.finalize_blocks();
                const Check* c = validate_spec(S).find("pentagon");
                REQUIRE(c != nullptr);
                weakest = std::min(weakest, c->residual);
                ++perturbed;
            }
    CAPTURE(perturbed);
    CHECK(perturbed > 0);
    CHECK(weakest >= 1e-4);
}

TEST_CASE("global dimension is the sum of squared quantum dimensions") {
    for (const auto& name : bundled_specs()) {
        Spec S = spec(name);
        double d2 = 0.0;
        for (const auto& l : S.labels) d2 += l.qdim * l.qdim;
        CHECK(S.global_dim() == doctest::Approx(d2).epsilon(1e-12));
    }
    CHECK(spec("ising_trivialG").global_dim() == doctest::Approx(4.0));
    CHECK(spec("vec_z4").global_dim() == doctest::Approx(4.0));
}

TEST_CASE("malformed data is rejected") {
    CHECK_THROWS_AS(parse_spec("{\"group\": 3}"), SpecError);
    CHECK_THROWS(parse_spec("not json"));
}
