#include "doctest.h"

#include "oracle/brute_force.hpp"

#include <map>

TEST_CASE("property: every case system matches its brute-force sweep") {
  for (const auto& name : oracle::system_names()) {
    CAPTURE(name);
    const auto expected = oracle::brute_force(name);
    const auto actual = oracle::solver_tuples(name);
    CHECK_FALSE(expected.empty());
    CHECK(expected == actual);
  }
}

TEST_CASE("brute-force sweeps recover the known solution counts") {
  const std::map<std::string, size_t> counts{{"E1C1", 5}, {"E1C2", 2}, {"E1D1", 7}, {"E1D2", 2}, {"E1D3", 1},
                                             {"E1E2", 1}, {"E1E34", 2}, {"E1E5", 1}, {"E1E1", 6}, {"CCC", 2}};
  for (const auto& [name, count] : counts) {
    CAPTURE(name);
    CHECK(oracle::brute_force(name).size() == count);
  }
}

TEST_CASE("a C2 bundle with an index-two target has no solution") {
  for (const auto& t : oracle::brute_force("E1C2")) CHECK(t[0] != 2);
}
