#include <catch_amalgamated.hpp>

#include <random>
#include <type_traits>

#include "susyindex/catalog.hpp"
#include "susyindex/index_engine.hpp"

using namespace susyindex;

namespace {

DescriptorFile get(const std::string& name) {
  auto f = find_builtin(name);
  REQUIRE(f.has_value());
  return *f;
}

long long value(const IndexReport& r) {
  REQUIRE(r.value.is_integer());
  return static_cast<long long>(r.integer_value);
}

}  // namespace

TEST_CASE("catalog values") {
  CHECK(value(signature_index(get("CP2").manifold)) == 1);
  CHECK(value(signature_index(get("K3").manifold)) == -16);
  CHECK(value(signature_index(get("CP1xCP1").manifold)) == 0);
  CHECK(value(dolbeault_index(get("K3").manifold)) == 2);
  CHECK(value(spin_index(get("K3").manifold)) == 2);
  CHECK(value(de_rham_euler(get("K3").manifold)) == 24);
  for (const char* n : {"CP1", "CP2", "CP3"}) CHECK(value(dolbeault_index(get(n).manifold)) == 1);
  CHECK(value(de_rham_euler(get("CP3").manifold)) == 4);
  CHECK(value(de_rham_euler(get("S2").manifold)) == 2);
  CHECK(value(de_rham_euler(get("S4").manifold)) == 2);
  CHECK(value(signature_index(get("S4").manifold)) == 0);
  for (const char* n : {"T2", "T4"}) {
    const auto m = get(n).manifold;
    CHECK(value(dolbeault_index(m)) == 0);
    CHECK(value(de_rham_euler(m)) == 0);
    CHECK(value(signature_index(m)) == 0);
  }
}

TEST_CASE("Riemann-Roch on projective spaces") {
  for (long long k = -6; k <= 6; ++k) {
    CAPTURE(k);
    const std::string name = "O(" + std::to_string(k) + ")";
    const auto cp1 = get("CP1"), cp2 = get("CP2"), cp3 = get("CP3");
    CHECK(value(dolbeault_index(cp1.manifold, resolve_bundle(cp1, name))) == k + 1);
    CHECK(value(dolbeault_index(cp2.manifold, resolve_bundle(cp2, name))) == (k + 1) * (k + 2) / 2);
    CHECK(value(dolbeault_index(cp3.manifold, resolve_bundle(cp3, name))) == (k + 1) * (k + 2) * (k + 3) / 6);
    CHECK(value(spin_index(cp1.manifold, resolve_bundle(cp1, name))) == k);
  }
}

TEST_CASE("signature vanishes in real dimension 2 mod 4") {
  for (const auto& f : builtin_catalog())
    if (f.manifold.real_dim % 4 == 2) CHECK(signature_index(f.manifold).value.is_zero());
}

TEST_CASE("signature is multiplicative on CP2 x CP2") {
  const auto cp2 = get("CP2").manifold, prod = get("CP2xCP2").manifold;
  CHECK(value(signature_index(prod)) == value(signature_index(cp2)) * value(signature_index(cp2)));
  CHECK(value(de_rham_euler(prod)) == 9);
  CHECK(value(dolbeault_index(prod)) == 1);
}

TEST_CASE("twisting by a trivial bundle multiplies by its rank") {
  for (const char* n : {"CP1", "CP2", "CP3", "K3", "CP1xCP1"}) {
    const auto m = get(n).manifold;
    for (unsigned r : {1U, 2U, 5U}) {
      const auto v = BundleDescriptor::trivial(m.basis, r);
      CHECK(dolbeault_index(m, v).value == Rational(r) * dolbeault_index(m).value);
    }
  }
  const auto k3 = get("K3").manifold;
  CHECK(spin_index(k3, BundleDescriptor::trivial(k3.basis, 3)).value == Rational(6));
}

TEST_CASE("non-spin CP2 has a fractional A-hat genus") {
  const auto cp2 = get("CP2").manifold;
  try {
    spin_index(cp2);
    FAIL("expected IntegralityError");
  } catch (const IntegralityError& e) {
    CHECK(std::string(e.what()).find("-1/8") != std::string::npos);
  }
}

TEST_CASE("complex-only complexes reject real manifolds") {
  CHECK_THROWS_AS(dolbeault_index(get("S2").manifold), Unsupported);
  CHECK_THROWS_AS(hirzebruch_consistency(get("S4").manifold), Unsupported);
  CHECK_THROWS_AS(hirzebruch_consistency(get("CP1").manifold), Unsupported);
}

TEST_CASE("evaluate is linear and needs every top monomial") {
  const auto m = get("CP1xCP1").manifold;
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-20, 20), e(0, 2);
  auto random_poly = [&] {
    GradedPolynomial p(m.basis);
    for (int t = 0; t < 6; ++t) p.add_term({static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng))}, Rational(c(rng), 7));
    return p;
  };
  for (int i = 0; i < 30; ++i) {
    const auto p = random_poly(), q = random_poly();
    const Rational s(c(rng), 3);
    CHECK(evaluate(p + q * s, m) == evaluate(p, m) + s * evaluate(q, m));
  }

  auto broken = m;
  REQUIRE(broken.evaluation.erase(std::vector<unsigned>{2, 0}) == 1);
  try {
    evaluate(GradedPolynomial::generator(m.basis, "a") * GradedPolynomial::generator(m.basis, "b") +
                 GradedPolynomial::generator(m.basis, "a").pow(2),
             broken);
    FAIL("expected DescriptorError");
  } catch (const DescriptorError& err) {
    CHECK(err.field == "evaluation");
    CHECK(std::string(err.what()).find("a^2") != std::string::npos);
  }
}

TEST_CASE("two routes to the signature agree") {
  for (const char* n : {"CP2", "K3", "CP1xCP1", "T4", "CP2xCP2"}) {
    const auto r = hirzebruch_consistency(get(n).manifold);
    CHECK(r.consistent);
    CHECK(r.via_pontryagin == r.via_chern_roots);
  }
}

TEST_CASE("chern to pontryagin on descriptors") {
  const auto cp2 = get("CP2").manifold;
  const auto p = pontryagin_classes(cp2);
  REQUIRE(p.size() == 1);
  CHECK(p[0].str() == "3·h^2");
}

// Index operations have no temperature argument.
static_assert(std::is_invocable_v<decltype(&signature_index), const ManifoldDescriptor&>);
static_assert(!std::is_invocable_v<decltype(&signature_index), const ManifoldDescriptor&, double>);
static_assert(!std::is_invocable_v<decltype(&de_rham_euler), const ManifoldDescriptor&, double>);
