#include "doctest.h"

#include "diskgeo/verify.hpp"

using namespace diskgeo;

TEST_CASE("verify group plumbing") {
    CHECK(verify::group_names().size() == 6);
    CHECK_THROWS_AS(verify::run_group("bogus", 1, 100), UnknownSuite);

    // Small smoke runs; the acceptance binary runs the full sample counts.
    for (const char* group : {"identities", "polygon"}) {
        const auto results = verify::run_group(group, verify::kDefaultSeed, 500);
        CHECK(!results.empty());
        for (const auto& r : results) {
            CHECK(r.cases > 0);
            CHECK(r.seed == verify::kDefaultSeed);
            CHECK(r.pass());
        }
    }
}
