#include <gtest/gtest.h>

#include "flagcodes/cdc.hpp"
#include "flagcodes/errors.hpp"
#include "test_support.hpp"

namespace flagcodes {
namespace {

using namespace testing;

ConstantDimensionCode lines_f2_3() {
  return ConstantDimensionCode({span_units(3, {1}), span_units(3, {2}),
                                Subspace::from_rows(f2(), 3, {vec(3, {1, 2})})});
}

ConstantDimensionCode planes_f2_4() {
  return ConstantDimensionCode({span_units(4, {1, 2}), span_units(4, {3, 4})});
}

TEST(Cdc, Construction) {
  const ConstantDimensionCode c({span_units(3, {1}), span_units(3, {1}), span_units(3, {2})});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_EQ(c.find(span_units(3, {2})), std::optional<std::size_t>(1));
  EXPECT_FALSE(c.find(span_units(3, {3})));
  EXPECT_THROW(ConstantDimensionCode({}), Error);
  try {
    ConstantDimensionCode({span_units(3, {1}), span_units(3, {1, 2})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Cdc, MinDistance) {
  EXPECT_EQ(cdc_min_distance(ConstantDimensionCode({span_units(4, {1, 2})})), 0u);
  EXPECT_EQ(cdc_min_distance(lines_f2_3()), 2u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(cdc_min_distance(projected_code(noncoherent_example(), i)), 2u);
  }
}

TEST(Cdc, MaxDistanceBound) {
  EXPECT_EQ(max_distance_bound(2, 5), 4u);
  EXPECT_EQ(max_distance_bound(3, 5), 4u);
  EXPECT_EQ(max_distance_bound(1, 3), 2u);
  EXPECT_THROW(max_distance_bound(0, 3), Error);
  EXPECT_THROW(max_distance_bound(3, 3), Error);
}

TEST(Cdc, EquidistantProfile) {
  const auto first = equidistant_profile(projected_code(projected_equidistant_example(), 0));
  EXPECT_TRUE(first.is_equidistant);
  EXPECT_EQ(first.c, std::optional<std::size_t>(0));

  const auto level1 = equidistant_profile(projected_code(equidistant_example(), 0));
  EXPECT_FALSE(level1.is_equidistant);
  ASSERT_TRUE(level1.min_pair && level1.off_pair);
  EXPECT_EQ(level1.min_pair->distance, 2u);
  EXPECT_EQ(level1.off_pair->distance, 4u);
  EXPECT_FALSE(level1.c);

  const auto single = equidistant_profile(ConstantDimensionCode({span_units(4, {1, 2})}));
  EXPECT_TRUE(single.is_equidistant);
  EXPECT_EQ(single.c, std::optional<std::size_t>(2));
  EXPECT_EQ(single.min_distance, 0u);
}

TEST(Cdc, SunflowerCenter) {
  const ConstantDimensionCode lines({span_units(4, {1, 2}), span_units(4, {1, 3}), span_units(4, {1, 4})});
  EXPECT_EQ(sunflower_center(lines), span_units(4, {1}));
  const ConstantDimensionCode planes({span_units(4, {1, 2, 3}), span_units(4, {1, 2, 4})});
  EXPECT_EQ(sunflower_center(planes), span_units(4, {1, 2}));
  EXPECT_EQ(sunflower_center(lines_f2_3()), Subspace::zero(f2(), 3));
  EXPECT_EQ(sunflower_center(ConstantDimensionCode({span_units(3, {2})})), span_units(3, {2}));
  // ⟨u1,u2⟩∩⟨u1,u3⟩ = ⟨u1⟩ but ⟨u1,u2⟩∩⟨u3,u4⟩ = 0
  EXPECT_FALSE(sunflower_center(ConstantDimensionCode(
      {span_units(4, {1, 2}), span_units(4, {1, 3}), span_units(4, {3, 4})})));
}

TEST(Cdc, ContainmentDecode) {
  const auto code = planes_f2_4();
  const auto hit = containment_decode(code, span_units(4, {2}));
  EXPECT_EQ(hit.status, ContainmentStatus::Unique);
  EXPECT_EQ(hit.index, std::optional<std::size_t>(0));
  const auto zero = containment_decode(code, Subspace::zero(f2(), 4));
  EXPECT_EQ(zero.status, ContainmentStatus::Ambiguous);
  EXPECT_EQ(zero.matches, 2u);
  EXPECT_FALSE(zero.index);
  const auto miss = containment_decode(code, Subspace::from_rows(f2(), 4, {vec(4, {1, 3})}));
  EXPECT_EQ(miss.status, ContainmentStatus::NotFound);
  EXPECT_THROW(containment_decode(code, span_units(3, {1})), Error);
}

// Properties ---------------------------------------------------------------

ConstantDimensionCode random_cdc(const FieldPtr& f, std::size_t n, std::size_t k, std::size_t size,
                                 Rng& rng) {
  std::vector<Subspace> words;
  while (words.size() < size) {
    Subspace s = random_subspace(f, n, k, rng);
    if (s.dim() == k) words.push_back(std::move(s));
  }
  return ConstantDimensionCode(std::move(words));
}

TEST(CdcProperty, StructureInvariants) {
  Rng rng(21);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 4);
    const std::size_t k = 1 + uniform_below(rng, n - 1);
    const auto code = random_cdc(f2(), n, k, 1 + uniform_below(rng, 4), rng);
    const std::size_t d = cdc_min_distance(code);
    EXPECT_EQ(d % 2, 0u);
    EXPECT_LE(d, max_distance_bound(k, n));

    const auto profile = equidistant_profile(code);
    if (const auto center = sunflower_center(code)) {
      EXPECT_TRUE(profile.is_equidistant);
      EXPECT_EQ(profile.c, std::optional<std::size_t>(center->dim()));
    }
    if (profile.is_equidistant && code.size() >= 2) {
      ASSERT_TRUE(profile.c);
      const std::size_t c = *profile.c;
      EXPECT_GE(c + n, std::max(n, 2 * k));  // c >= max{0, 2k-n}
      EXPECT_LE(c, k);
      EXPECT_EQ(d, 2 * (k - c));
    }
    if (d > 0) {
      for (std::size_t i = 0; i < code.size(); ++i) {
        const auto r = containment_decode(code, code[i]);
        EXPECT_EQ(r.status, ContainmentStatus::Unique);
        EXPECT_EQ(r.index, std::optional<std::size_t>(i));
      }
    }
  }
}

TEST(CdcProperty, ContainmentMatchesEnumeration) {
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const auto code = random_cdc(f2(), 4, 2, 1 + uniform_below(rng, 4), rng);
    const Subspace x = random_subspace(f2(), 4, uniform_below(rng, 3), rng);
    const VectorSet xs = vectors_of(x);
    std::size_t matches = 0;
    for (const auto& w : code.words()) {
      const VectorSet ws = vectors_of(w);
      if (std::includes(ws.begin(), ws.end(), xs.begin(), xs.end())) ++matches;
    }
    const auto r = containment_decode(code, x);
    EXPECT_EQ(r.matches, matches);
    EXPECT_EQ(r.status, matches == 0   ? ContainmentStatus::NotFound
                        : matches == 1 ? ContainmentStatus::Unique
                                       : ContainmentStatus::Ambiguous);
  }
}

}  // namespace
}  // namespace flagcodes
