#include <doctest.h>

#include <random>

#include "rbg/catalog.hpp"
#include "rbg/kernels.hpp"
#include "rbg/rota_baxter.hpp"

using namespace rbg;
namespace k = rbg::kernels;

namespace {

struct IsaGuard {
  ~IsaGuard() { k::force_isa(std::nullopt); }
};

Table random_table(std::mt19937& rng, int n) {
  std::uniform_int_distribution<Elem> d(0, n - 1);
  Table t(static_cast<std::size_t>(n) * n);
  for (auto& v : t) v = d(rng);
  return t;
}

// a group table with one entry perturbed
Table damaged(const FiniteGroup& g, std::mt19937& rng) {
  Table t = g.table();
  std::uniform_int_distribution<std::size_t> at(0, t.size() - 1);
  std::uniform_int_distribution<Elem> v(0, g.order() - 1);
  t[at(rng)] = v(rng);
  return t;
}

}  // namespace

TEST_CASE("dispatch reports a usable isa") {
  IsaGuard guard;
  k::force_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  k::force_isa(k::Isa::avx2);
  CHECK(k::active_isa() == (k::avx2_available() ? k::Isa::avx2 : k::Isa::scalar));
}

#ifdef RBG_HAVE_AVX2_KERNELS
TEST_CASE("scalar and avx2 scans agree") {
  if (!k::avx2_available()) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  std::mt19937 rng(12345);
  const std::vector<FiniteGroup> groups{make_group("Z5"), make_group("S3"), make_group("D4"),
                                        make_group("Q8"), make_group("Z2xS3"), make_group("S4"),
                                        make_group("Z13")};
  for (const auto& g : groups) {
    const int n = g.order();
    CAPTURE(n);
    CHECK(k::scalar::first_assoc_violation(g.table().data(), n) ==
          k::avx2::first_assoc_violation(g.table().data(), n));
    for (int trial = 0; trial < 40; ++trial) {
      const Table t = trial % 2 ? random_table(rng, n) : damaged(g, rng);
      CHECK(k::scalar::first_assoc_violation(t.data(), n) ==
            k::avx2::first_assoc_violation(t.data(), n));

      const Table r = random_table(rng, n);
      const Elem* rr = r.data();  // first row used as a map
      CHECK(k::scalar::first_rb_violation(g.table().data(), g.inverses().data(), rr, n) ==
            k::avx2::first_rb_violation(g.table().data(), g.inverses().data(), rr, n));
      CHECK(k::scalar::first_hom_violation(g.table().data(), n, g.table().data(), n, rr) ==
            k::avx2::first_hom_violation(g.table().data(), n, g.table().data(), n, rr));

      const Table circ = trial % 3 ? random_table(rng, n) : g.table();
      CHECK(k::scalar::first_brace_violation(g.table().data(), g.inverses().data(), circ.data(), n) ==
            k::avx2::first_brace_violation(g.table().data(), g.inverses().data(), circ.data(), n));
    }
  }
  // genuine operators pass on both paths
  for (const char* name : {"S3", "D4", "Q8"}) {
    for (const auto& op : enumerate_rb_operators(make_group(name))) {
      const auto& g = op.group;
      CHECK_FALSE(k::avx2::first_rb_violation(g.table().data(), g.inverses().data(),
                                              op.images.data(), g.order()));
    }
  }
}
#endif

TEST_CASE("scans find the first violation in lexicographic order") {
  const FiniteGroup s3 = make_group("S3");
  // R = id is not RB on S3; locate the first failing pair by hand
  Table r = identity_table(6);
  std::optional<k::Pair> expect;
  for (Elem x = 0; x < 6 && !expect; ++x) {
    for (Elem y = 0; y < 6 && !expect; ++y) {
      const Elem lhs = s3.mul(r[x], r[y]);
      const Elem rhs = r[s3.mul(s3.mul(s3.mul(x, r[x]), y), s3.inv(r[x]))];
      if (lhs != rhs) expect = k::Pair{x, y};
    }
  }
  REQUIRE(expect);
  CHECK(k::first_rb_violation(s3.table().data(), s3.inverses().data(), r.data(), 6) == expect);
}
