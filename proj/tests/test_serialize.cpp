#include "doctest.h"
#include "offdiag/random.hpp"
#include "offdiag/serialize.hpp"

using namespace offdiag;
using nlohmann::json;

TEST_CASE("matrix json schema and round trip") {
  Rng rng(193);
  const Matrix m = random_gaussian_matrix(3, rng);
  const json j = matrix_to_json(m);
  CHECK(j["dim"] == 3);
  CHECK(j["re"].size() == 3);
  CHECK(j["im"][2].size() == 3);
  CHECK(max_abs(matrix_from_json(j) - m) == 0.0);
}

TEST_CASE("density json round trip revalidates") {
  Rng rng(197);
  const DensityOperator rho = random_density(4, rng);
  const json j = density_to_json(rho);
  const DensityOperator back = density_from_json(j);
  CHECK(max_abs(back.matrix() - rho.matrix()) == 0.0);
  CHECK(back.rank() == rho.rank());

  json bad = j;
  bad["re"][0][0] = 5.0;  // breaks the unit trace
  CHECK_THROWS_AS(density_from_json(bad), TraceNotOne);
}

TEST_CASE("matrix json rejects malformed payloads") {
  CHECK_THROWS_AS(matrix_from_json(json::array()), ConfigInvalid);
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 2}, {"re", json::array()}}),
                  ConfigInvalid);
  json ragged{{"dim", 2},
              {"re", json::array({json::array({1.0, 0.0}), json::array({1.0})})},
              {"im", json::array({json::array({0.0, 0.0}),
                                  json::array({0.0, 0.0})})}};
  CHECK_THROWS_AS(matrix_from_json(ragged), ConfigInvalid);
}

TEST_CASE("phase json carries status and nullable argument") {
  const PhaseResult determinate = phi(Complex(0.0, -2.0));
  const json dj = phase_to_json(determinate);
  CHECK(dj["status"] == "determinate");
  CHECK(dj["re"] == 0.0);
  CHECK(dj["im"] == -2.0);
  CHECK(dj["abs"] == 2.0);
  CHECK(dj["arg"].get<double>() == doctest::Approx(-1.5707963267948966));

  const PhaseResult indeterminate = phi(Complex(1e-12, 0.0), 1e-9);
  const json ij = phase_to_json(indeterminate);
  CHECK(ij["status"] == "indeterminate");
  CHECK(ij["arg"].is_null());
}
