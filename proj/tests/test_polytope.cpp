#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "nsbox/analysis.hpp"
#include "nsbox/box_behavior.hpp"
#include "nsbox/polytope.hpp"
#include "nsbox/rng.hpp"

using nsbox::BehaviorClass;
using nsbox::BoxBehavior;
using nsbox::ClassificationResult;
using nsbox::DeterministicBehavior;
using nsbox::LocalStrategy;

namespace {

// Independent CHSH oracle: all 8 sign patterns straight off the table.
std::array<double, 8> chsh_oracle(const BoxBehavior& b) {
  std::array<double, 8> values{};
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      for (int gamma = 0; gamma < 2; ++gamma) {
        double k = 0;
        for (int a = 0; a < 2; ++a) {
          for (int bb = 0; bb < 2; ++bb) {
            const int parity = (a & bb) ^ (alpha & a) ^ (beta & bb) ^ gamma;
            const double sign = parity ? -1.0 : 1.0;
            k += sign * b.correlator(a, bb);
          }
        }
        values[static_cast<std::size_t>(alpha * 4 + beta * 2 + gamma)] = k;
      }
    }
  }
  return values;
}

bool table_seen(const std::vector<BoxBehavior>& seen, const BoxBehavior& b) {
  return std::any_of(seen.begin(), seen.end(),
                     [&](const BoxBehavior& x) { return nsbox::tables_close(x, b, 1e-12); });
}

}  // namespace

TEST_CASE("deterministic enumeration counts: 256 total, 16 no-signaling, 240 signaling") {
  const std::vector<DeterministicBehavior> all = nsbox::enumerate_deterministic();
  REQUIRE(all.size() == 256);
  std::size_t no_signaling = 0, with_factors = 0;
  for (const DeterministicBehavior& d : all) {
    if (d.no_signaling) ++no_signaling;
    if (d.factors.has_value()) ++with_factors;
    // factoring and no-signaling coincide for deterministic tables
    CHECK(d.no_signaling == d.factors.has_value());
    if (d.factors.has_value()) {
      CHECK(nsbox::tables_close(d.factors->behavior(), d.behavior, 0.0));
    }
  }
  CHECK(no_signaling == 16);
  CHECK(with_factors == 16);
  CHECK(all.size() - no_signaling == 240);
}

TEST_CASE("the eight extremal boxes are distinct, no-signaling, and maximal") {
  const std::vector<BoxBehavior> variants = nsbox::pr_box_variants();
  REQUIRE(variants.size() == 8);
  std::vector<BoxBehavior> seen;
  for (const BoxBehavior& v : variants) {
    CHECK(v.is_no_signaling());
    CHECK_FALSE(table_seen(seen, v));
    seen.push_back(v);
    const ClassificationResult c = nsbox::classify(v);
    CHECK(c.box_class == BehaviorClass::superquantum);
    CHECK(c.max_abs_chsh == doctest::Approx(4.0).epsilon(1e-12));
  }
  CHECK(nsbox::tables_close(nsbox::extremal_box(0, 0, 0), BoxBehavior::pr_box(), 0.0));
}

TEST_CASE("the no-signaling polytope has 24 distinct vertices: 16 local then 8 extremal") {
  const std::vector<BoxBehavior> vertices = nsbox::no_signaling_polytope_vertices();
  REQUIRE(vertices.size() == 24);
  std::vector<BoxBehavior> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    CHECK(vertices[i].is_no_signaling());
    CHECK_FALSE(table_seen(seen, vertices[i]));
    seen.push_back(vertices[i]);
    const ClassificationResult c = nsbox::classify(vertices[i]);
    if (i < 16) {
      CHECK(c.box_class == BehaviorClass::classical);
    } else {
      CHECK(c.box_class == BehaviorClass::superquantum);
    }
  }
}

TEST_CASE("relabeling the perfect box sweeps out exactly the eight extremal tables") {
  const std::vector<BoxBehavior> variants = nsbox::pr_box_variants();
  std::vector<BoxBehavior> orbit;
  for (int flip_a = 0; flip_a < 2; ++flip_a)
    for (int flip_b = 0; flip_b < 2; ++flip_b)
      for (int ax = 0; ax < 4; ++ax)
        for (int bx = 0; bx < 4; ++bx) {
          const BoxBehavior image = nsbox::relabel(
              BoxBehavior::pr_box(), flip_a != 0, flip_b != 0,
              {ax & 1, (ax >> 1) & 1}, {bx & 1, (bx >> 1) & 1});
          if (!table_seen(orbit, image)) orbit.push_back(image);
        }
  REQUIRE(orbit.size() == 8);
  for (const BoxBehavior& image : orbit) CHECK(table_seen(variants, image));
}

TEST_CASE("classification thresholds") {
  const ClassificationResult pr = nsbox::classify(BoxBehavior::pr_box());
  CHECK(pr.no_signaling);
  CHECK(pr.box_class == BehaviorClass::superquantum);
  CHECK(pr.chsh_values[0] == doctest::Approx(4.0));
  CHECK(pr.max_abs_chsh == doctest::Approx(4.0));

  const ClassificationResult quantum =
      nsbox::classify(BoxBehavior::isotropic(nsbox::kTsirelsonCorrelation));
  CHECK(quantum.box_class == BehaviorClass::within_tsirelson);
  CHECK(quantum.max_abs_chsh == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));

  const ClassificationResult weak = nsbox::classify(BoxBehavior::isotropic(0.4));
  CHECK(weak.box_class == BehaviorClass::classical);

  // strictly between the classical and quantum boundaries
  const ClassificationResult mid = nsbox::classify(BoxBehavior::isotropic(0.6));
  CHECK(mid.box_class == BehaviorClass::within_tsirelson);

  // signaling example: Alice's output copies Bob's input
  BoxBehavior::Table t{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      t[nsbox::input_pair_index(a, b)][nsbox::output_pair_index(b, 0)] = 1.0;
  const ClassificationResult leak = nsbox::classify(BoxBehavior::from_table(t));
  CHECK_FALSE(leak.no_signaling);
  CHECK(leak.box_class == BehaviorClass::signaling);
}

TEST_CASE("classify agrees with the direct oracle on deterministic products") {
  LocalStrategy zeros{{0, 0}, {0, 0}};
  const BoxBehavior table = zeros.behavior();
  const ClassificationResult c = nsbox::classify(table);
  const std::array<double, 8> oracle = chsh_oracle(table);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(c.chsh_values[i] == doctest::Approx(oracle[i]).epsilon(1e-12));
  CHECK(c.box_class == BehaviorClass::classical);
  CHECK(c.max_abs_chsh == doctest::Approx(2.0));
}

TEST_CASE("random mixtures of local vertices stay classical") {
  const std::vector<BoxBehavior> vertices = nsbox::no_signaling_polytope_vertices();
  nsbox::CounterRng rng(0xC1A5);
  for (int trial = 0; trial < 1000; ++trial) {
    double weights[16];
    double total = 0;
    for (double& w : weights) {
      w = rng.next_unit();
      total += w;
    }
    BoxBehavior::Table mix{};
    for (int v = 0; v < 16; ++v) {
      const double share = weights[v] / total;
      for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) mix[row][col] += share * vertices[v].table()[row][col];
    }
    const ClassificationResult c = nsbox::classify(BoxBehavior::from_table(mix, 1e-9));
    REQUIRE(c.no_signaling);
    REQUIRE(c.box_class == BehaviorClass::classical);
  }
}

TEST_CASE("mixing the perfect box with noise lands exactly on the correlated family") {
  for (double e : {0.3, 0.70710678118654752440, 0.9}) {
    const BoxBehavior pr = BoxBehavior::pr_box();
    const BoxBehavior noise = BoxBehavior::uniform_noise();
    BoxBehavior::Table mix{};
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col)
        mix[row][col] = e * pr.table()[row][col] + (1 - e) * noise.table()[row][col];
    CHECK(nsbox::tables_close(BoxBehavior::from_table(mix), BoxBehavior::isotropic(e), 1e-12));
  }
}

TEST_CASE("classification is invariant under relabeling") {
  const std::vector<BoxBehavior> subjects{
      BoxBehavior::pr_box(), BoxBehavior::isotropic(0.5),
      BoxBehavior::isotropic(nsbox::kTsirelsonCorrelation),
      LocalStrategy{{0, 1}, {1, 0}}.behavior()};
  for (const BoxBehavior& subject : subjects) {
    const ClassificationResult base = nsbox::classify(subject);
    for (int flip_a = 0; flip_a < 2; ++flip_a)
      for (int flip_b = 0; flip_b < 2; ++flip_b)
        for (int ax = 0; ax < 4; ++ax)
          for (int bx = 0; bx < 4; ++bx) {
            const BoxBehavior image = nsbox::relabel(
                subject, flip_a != 0, flip_b != 0, {ax & 1, (ax >> 1) & 1},
                {bx & 1, (bx >> 1) & 1});
            const ClassificationResult c = nsbox::classify(image);
            REQUIRE(c.box_class == base.box_class);
            REQUIRE(c.max_abs_chsh == doctest::Approx(base.max_abs_chsh).epsilon(1e-9));
          }
  }
}

TEST_CASE("classical simulation optimum is exactly three quarters") {
  const nsbox::SimulationOptimum opt = nsbox::classical_simulation_optimum();
  CHECK(opt.optimum == 0.75);
  REQUIRE_FALSE(opt.achievers.empty());
  CHECK(opt.achievers.size() == 8);
  bool has_all_zeros = false;
  for (const LocalStrategy& s : opt.achievers) {
    CHECK(s.simulation_success() == 0.75);
    if (s.alice == std::array<int, 2>{0, 0} && s.bob == std::array<int, 2>{0, 0})
      has_all_zeros = true;
  }
  CHECK(has_all_zeros);

  // the identity strategy wins only on the (0,0) input
  CHECK(LocalStrategy{{0, 1}, {0, 1}}.simulation_success() == 0.25);
}
