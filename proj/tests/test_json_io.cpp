#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "faces/json_io.hpp"
#include "faces/verify.hpp"
#include "worked_examples.hpp"
#include "support.hpp"

using namespace faces;
using namespace faces::testing;

TEST(Json, Polynomial) {
    const auto p = P("v^-1+2+3v^4");
    const auto j = to_json(p);
    EXPECT_EQ(j.dump(), R"({"terms":[[-1,1],[0,2],[4,3]]})");
    EXPECT_EQ(poly_from_json(j), p);
    EXPECT_THROW(poly_from_json(json::parse("[1,2]")), DomainError);
}

TEST(Json, FockVector) {
    const auto ch = example_charge();
    const auto x = parse_fock(kG2, ch);
    const auto j = to_json(x);
    EXPECT_EQ(j[0]["mp"].dump(), "[[1],[1],[1],[],[]]");
    EXPECT_EQ(fock_from_json(json::parse(j.dump()), ch), x);
}

TEST(Json, CrystalRoundTrip) {
    const auto g = face(FaceSpec(two_corner_weight(4, 3, 2), 1, 2), true);
    const auto j = to_json(g);
    EXPECT_EQ(j["vertices"].size(), 27u);
    const auto back = crystal_from_json(json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(to_dot(back), to_dot(g));
}

TEST(Json, CrystalRejectsTamperedDefect) {
    auto j = to_json(face(FaceSpec(two_corner_weight(4, 1, 1), 1, 2)));
    j["vertices"][1]["defect"] = 7;
    EXPECT_THROW(crystal_from_json(j), IntegrityError);
}

TEST(Json, Classification) {
    const auto cls = classify_face_mps(FaceParams(two_corner_weight(4, 2, 3), 2, 3));
    const auto j = to_json(cls[1]);
    EXPECT_EQ(j["w"], 1);
    EXPECT_EQ(j["u"], 1);
    EXPECT_EQ(j["path"], "2^1 1^2 2^2");
    EXPECT_EQ(j["mu"].dump(), "[[2],[1],[1],[1],[]]");
}

TEST(Json, CacheRoundTrip) {
    const auto ch = example_charge();
    const auto dir = std::filesystem::temp_directory_path() / "faces-cache-test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / cache_file_name(ch)).string();
    {
        CanonicalBasis cb(ch);
        cb.element(mp(kG3Leader, ch));
        save_cache(cb, path);
    }
    CanonicalBasis fresh(ch);
    EXPECT_GE(load_cache(fresh, path), 2u);
    EXPECT_EQ(fresh.memo().at(mp(kG3Leader, ch)).vector, parse_fock(kG3, ch));
    CanonicalBasis other(two_corner_weight(4, 1, 1).multicharge());
    EXPECT_THROW(load_cache(other, path), IntegrityError);
    EXPECT_EQ(load_cache(fresh, (dir / "missing.json").string()), 0u);
    std::filesystem::remove_all(dir);
}
