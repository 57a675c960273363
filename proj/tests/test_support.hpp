#pragma once

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "paralg/catalog.hpp"
#include "paralg/sparse.hpp"

namespace paralg::testing {

inline SparseOperator random_sparse(Index dim, Degree degree, std::mt19937& rng,
                                    double density = 0.15, int word_len = 1) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::vector<Triplet> triplets;
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      if (unit(rng) < density) triplets.push_back({r, c, {amp(rng), amp(rng)}});
    }
  }
  return SparseOperator::from_triplets(dim, degree, word_len, std::move(triplets));
}

inline Degree random_degree(std::mt19937& rng) {
  return all_degrees()[rng() % 4];
}

inline Scalar random_gaussian_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-5, 5);
  std::uniform_int_distribution<long long> den(1, 4);
  return Scalar::gaussian(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

inline SU11ExtensionParams random_su11_params(std::mt19937& rng) {
  return {random_gaussian_rational(rng), random_gaussian_rational(rng),
          random_gaussian_rational(rng)};
}

// Runs a command line, returning (exit code, combined stdout+stderr).
inline std::pair<int, std::string> run_command(const std::string& cmd) {
  std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string output;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

inline std::string paralg_binary() {
  const char* env = std::getenv("PARALG_BIN");
  return env ? env : "";
}

}  // namespace paralg::testing
