#include "riflab/registry.hpp"

#include <cmath>
#include <limits>

namespace riflab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<RegistryEntry> build() {
  const double s2 = std::sqrt(2.0);
  std::vector<RegistryEntry> r;

  {
    RegistryEntry e{"favorite", "p = 2 - z1 - z2, singular at (1,1)", BiPoly(Grid{{2, -1}, {-1, 0}}), {1, 1}, {}};
    e.expected.K1 = ExpectedValue{2.0, 0.05, "slice zero z1 = zeta / (2 zeta - 1) has 1 - |z1| ~ delta^2 / 2"};
    e.expected.K2 = ExpectedValue{2.0, 0.05, "symmetric in z1, z2"};
    e.expected.hp_threshold = ExpectedValue{1.5, 1e-9, "1 + 1/K with K = 2"};
    e.expected.dirichlet_cutoff =
        ExpectedValue{0.75, 1e-9, "coefficient asymptotics: a_kl decays so that sum (k l)^alpha |a_kl|^2 < inf iff alpha < 3/4"};
    e.expected.agler = AglerVectors{{BiPoly(Grid{{s2, -s2}})}, {BiPoly(Grid{{s2}, {-s2}})}};
    e.expected.agler_note = "derived by expanding |p|^2 - |ptilde|^2 by hand";
    e.expected.pick = RationalFn{BiPoly(Grid{{0.0, 0.5}, {0.5, 0.0}}), BiPoly::constant(1.0)};
    e.expected.pick_note = "closed form (w1 + w2)/2 under alpha~ o phi o beta";
    r.push_back(std::move(e));
  }
  {
    RegistryEntry e{"amy", "p = 4 - 3 z2 + z2^2 - z1 - z1 z2, contact order 4",
                    BiPoly(Grid{{4, -3, 1}, {-1, -1, 0}}), {1, 2}, {}};
    e.expected.K1 = ExpectedValue{4.0, 0.05, "published contact order of this example"};
    e.expected.K2 = ExpectedValue{4.0, 0.05, "published contact order of this example"};
    e.expected.hp_threshold = ExpectedValue{1.25, 1e-9, "1 + 1/K with K = 4"};
    e.expected.dirichlet_cutoff = ExpectedValue{0.625, 1e-9, "min_i (1 + 1/K_i) / 2"};
    r.push_back(std::move(e));
  }
  {
    RegistryEntry e{"psi", "p = 2 - z1 z2 - z1^2 z2, singular at (1,1)", BiPoly(Grid{{2, 0}, {0, -1}, {0, -1}}),
                    {2, 1}, {}};
    e.expected.K1 = ExpectedValue{2.0, 0.05, "published: both contact orders equal 2"};
    e.expected.K2 = ExpectedValue{2.0, 0.05, "published: both contact orders equal 2"};
    e.expected.hp_threshold = ExpectedValue{1.5, 1e-9, "1 + 1/K with K = 2"};
    e.expected.dirichlet_cutoff = ExpectedValue{0.75, 1e-9, "min_i (1 + 1/K_i) / 2"};
    e.expected.inverse_dirichlet_cutoff = ExpectedValue{-0.25, 1e-9, "published: 1/p in D_alpha iff alpha < -1/4"};
    e.expected.agler = AglerVectors{{BiPoly(Grid{{s2, 0}, {0, -s2}}), BiPoly(Grid{{1}, {-1}})},
                                    {BiPoly(Grid{{0}, {1}, {-1}})}};
    e.expected.agler_note = "published vectors E1 = (sqrt2 (1 - z1 z2), 1 - z1), F2 = z1 (1 - z1)";
    e.expected.pick = RationalFn{BiPoly(Grid{{-1, 0}, {0, 3}, {2, 0}}), BiPoly(Grid{{0, 1}, {1, 0}})};
    e.expected.pick_note = "published Pick function (2 w1^2 + 3 w1 w2 - 1)/(w1 + w2)";
    r.push_back(std::move(e));
  }
  {
    RegistryEntry e{"continuous", "p = 3 - z1 - z2, no zeros on the closed bidisk", BiPoly(Grid{{3, -1}, {-1, 0}}),
                    {1, 1}, {}};
    e.expected.K1 = ExpectedValue{0.0, 0.0, "no boundary singularities"};
    e.expected.K2 = ExpectedValue{0.0, 0.0, "no boundary singularities"};
    e.expected.hp_threshold = ExpectedValue{kInf, 0.0, "smooth on the closed bidisk"};
    e.expected.dirichlet_cutoff = ExpectedValue{kInf, 0.0, "smooth on the closed bidisk"};
    r.push_back(std::move(e));
  }
  {
    RegistryEntry e{"monomial", "phi = z1 z2, p = 1 at declared bidegree (1,1)", BiPoly::constant(1.0), {1, 1}, {}};
    e.expected.K1 = ExpectedValue{0.0, 0.0, "no boundary singularities"};
    e.expected.K2 = ExpectedValue{0.0, 0.0, "no boundary singularities"};
    e.expected.hp_threshold = ExpectedValue{kInf, 0.0, "polynomial"};
    e.expected.dirichlet_cutoff = ExpectedValue{kInf, 0.0, "polynomial"};
    // |1|^2 - |z1 z2|^2 = (1 - |z1|^2) + |z1|^2 (1 - |z2|^2)
    e.expected.agler = AglerVectors{{BiPoly::constant(1.0)}, {BiPoly::monomial(1, 0)}};
    e.expected.agler_note = "direct expansion of 1 - |z1 z2|^2";
    r.push_back(std::move(e));
  }
  return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> r = build();
  return r;
}

const RegistryEntry& registry_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw Error(ErrorCode::invalid_argument, "unknown example '" + name + "'");
}

}  // namespace riflab
