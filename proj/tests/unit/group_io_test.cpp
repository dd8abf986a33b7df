#include <gtest/gtest.h>

#include <random>

#include "cosetchar/corpus.hpp"
#include "cosetchar/errors.hpp"
#include "cosetchar/group_io.hpp"
#include "oracles.hpp"

namespace cosetchar {
namespace {

using testing::data_path;

TEST(GroupFile, FrobeniusFixture) {
  const auto any = parse_group_file(data_path("f5.grp"));
  const auto& spec = std::get<GroupSpec>(any);
  EXPECT_EQ(spec.degree, 5u);
  EXPECT_EQ(spec.generators.size(), 2u);
  EXPECT_EQ(spec.normal_generators.size(), 1u);
  EXPECT_EQ(spec.label, "F5");
  EXPECT_EQ(build_problem(spec).group->order(), 20u);
}

TEST(GroupFile, MatrixFixture) {
  const auto any = parse_group_file(data_path("gl2_f3.grp"));
  const auto& spec = std::get<MatrixGroupSpec>(any);
  EXPECT_EQ(spec.prime, 3u);
  EXPECT_EQ(spec.generators.size(), 3u);
  const auto p = build_problem(to_permutation_spec(any));
  EXPECT_EQ(p.group->order(), 48u);
  EXPECT_EQ(p.normal.order(), 24u);
}

TEST(GroupFile, JsonMatchesText) {
  EXPECT_EQ(parse_group_file(data_path("f5.json")), parse_group_file(data_path("f5.grp")));
  EXPECT_EQ(parse_group_file(data_path("gl2_f3.json")), parse_group_file(data_path("gl2_f3.grp")));
}

TEST(GroupFile, FormatRoundTripIsIdempotent) {
  for (const char* f : {"f5.grp", "f5.json", "gl2_f3.grp", "q8_center.grp", "s3_a3.grp"}) {
    const auto spec = parse_group_file(data_path(f));
    const std::string once = format_group_spec(spec);
    EXPECT_EQ(parse_group_text(once), spec) << f;
    EXPECT_EQ(format_group_spec(parse_group_text(once)), once) << f;
  }
}

TEST(GroupFile, EmptyGeneratorListIsTrivialGroup) {
  const auto spec = std::get<GroupSpec>(parse_group_text("degree 3\n"));
  EXPECT_TRUE(spec.generators.empty());
  EXPECT_EQ(build_problem(spec).group->order(), 1u);
}

TEST(GroupFile, CycleAndImageNotationAgree) {
  const auto a = std::get<GroupSpec>(parse_group_text("degree 5\ngen (0 1 2)(3 4)\n"));
  const auto b = std::get<GroupSpec>(parse_group_text("degree 5\ngen 1 2 0 4 3\n"));
  EXPECT_EQ(a.generators, b.generators);
}

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_group_text(text);
    FAIL() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(GroupFile, Diagnostics) {
  expect_parse_error("degree 4\ngen 0 1 2\n", "line 2");
  expect_parse_error("degree 3\ngen 0 0 1\n", "line 2");
  expect_parse_error("degree 3\nfoo 1\n", "unknown keyword");
  expect_parse_error("gen 0 1\n", "missing 'degree'");
  expect_parse_error("degree 2\nprime 3\n", "both");
  expect_parse_error("prime 4\n", "not prime");
  expect_parse_error("prime 3\ngen 1 2 2 1\n", "singular");
  expect_parse_error("prime 3\ngen 1 2 1\n", "4 matrix entries");
  expect_parse_error("degree x\n", "integer");
  expect_parse_error("degree 3\ngen (0 5)\n", "out of range");
  expect_parse_error("{\"degree\": 3, \"generators\": [[0, 1]]}", "wrong length");
  expect_parse_error("{\"degree\": 3,", "JSON");
  EXPECT_THROW(parse_group_file(data_path("does_not_exist.grp")), ParseError);
}

TEST(GroupFile, NormalGeneratorOutsideGroup) {
  const auto spec = std::get<GroupSpec>(parse_group_text("degree 4\ngen (0 1 2 3)\nnormal (0 1)\n"));
  EXPECT_THROW(build_problem(spec), HypothesisError);
}

TEST(MatrixAction, Examples) {
  const auto id = matrix_permutation({1, 0, 0, 1}, 3);
  EXPECT_EQ(id, Permutation::identity(8));
  const auto inv = matrix_permutation({1, 0, 0, 2}, 3);
  EXPECT_FALSE(inv.is_identity());
  EXPECT_TRUE((inv * inv).is_identity());
  // (x, y) -> (x, -y): (0,1) has index 0 and maps to (0,2), index 1.
  EXPECT_EQ(inv(0), 1u);
  const auto p = build_problem(matrix_to_permutation(corpus::gl2_sl2(3)));
  EXPECT_EQ(p.group->order(), 48u);
}

TEST(MatrixAction, IsHomomorphism) {
  std::mt19937 rng(17);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto sp = static_cast<std::int64_t>(p);
    auto random_invertible = [&] {
      for (;;) {
        Matrix2 m{static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p),
                  static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p)};
        if (((m[0] * m[3] - m[1] * m[2]) % sp + sp) % sp != 0) return m;
      }
    };
    for (int t = 0; t < 30; ++t) {
      const auto a = random_invertible(), b = random_invertible();
      const Matrix2 ab{(a[0] * b[0] + a[1] * b[2]) % sp, (a[0] * b[1] + a[1] * b[3]) % sp,
                       (a[2] * b[0] + a[3] * b[2]) % sp, (a[2] * b[1] + a[3] * b[3]) % sp};
      EXPECT_EQ(matrix_permutation(ab, p), matrix_permutation(a, p) * matrix_permutation(b, p));
    }
  }
}

TEST(ThetaFile, Forms) {
  const auto m = parse_theta_file(data_path("f5_theta.txt"));
  EXPECT_EQ(m.kind, ThetaSpec::Kind::kMultiplicities);
  EXPECT_EQ(m.multiplicities, (std::vector<std::int64_t>{0, 0, 1, 0, 1}));
  const auto v = parse_theta_text("values 5, 1, z4 - z4^3, 0, -1/2\n");
  EXPECT_EQ(v.kind, ThetaSpec::Kind::kValues);
  ASSERT_EQ(v.values.size(), 5u);
  EXPECT_EQ(v.values[2], root_of_unity(4, 1) * Cyclotomic(2L));
  EXPECT_EQ(v.values[4], Cyclotomic(ratio(-1, 2)));
  const auto j = parse_theta_text(R"({"multiplicities": [1, 2]})");
  EXPECT_EQ(j.multiplicities, (std::vector<std::int64_t>{1, 2}));
  const auto jv = parse_theta_text(R"({"values": ["3", "z3 + z3^2"]})");
  EXPECT_EQ(jv.values[1], Cyclotomic(-1L));
  EXPECT_THROW(parse_theta_text("multiplicities 1 x\n"), ParseError);
  EXPECT_THROW(parse_theta_text("values 1, z\n"), ParseError);
  EXPECT_THROW(parse_theta_text("nothing\n"), ParseError);
}

}  // namespace
}  // namespace cosetchar
