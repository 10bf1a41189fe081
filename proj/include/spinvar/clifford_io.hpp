#pragma once

// JSON serialization of the clifford types: matrices and spinors are
// row-major arrays with a "prime" field for Z/p entries; rationals are
// strings and the "prime" field is absent.  Spinor coordinates are listed
// in lexicographic order on sorted subsets, empty set first.

#include <json.hpp>

#include "spinvar/clifford.hpp"

namespace spinvar::clifford {

inline nlohmann::json to_json(const PrimeField& k, const IsotropicSubspace<PrimeField>& w) {
  nlohmann::json data = nlohmann::json::array();
  for (const auto& row : w.basis)
    for (const auto& x : row) data.push_back(x);
  return {{"rows", 5}, {"cols", 10}, {"data", data}, {"prime", k.modulus()}};
}

inline nlohmann::json to_json(const RationalField&, const IsotropicSubspace<RationalField>& w) {
  nlohmann::json data = nlohmann::json::array();
  for (const auto& row : w.basis)
    for (const auto& x : row) data.push_back(x.get_str());
  return {{"rows", 5}, {"cols", 10}, {"data", data}};
}

inline nlohmann::json to_json(const PrimeField& k, const SpinorVector<PrimeField>& s) {
  nlohmann::json coords = nlohmann::json::array();
  for (unsigned m : subset_lex_order()) coords.push_back(s.coords[m]);
  return {{"coords", coords},
          {"parity", s.parity == Parity::even ? "even" : "odd"},
          {"prime", k.modulus()}};
}

inline nlohmann::json to_json(const RationalField&, const SpinorVector<RationalField>& s) {
  nlohmann::json coords = nlohmann::json::array();
  for (unsigned m : subset_lex_order()) coords.push_back(s.coords[m].get_str());
  return {{"coords", coords},
          {"parity", s.parity == Parity::even ? "even" : "odd"}};
}

inline IsotropicSubspace<PrimeField> subspace_from_json(const PrimeField& k,
                                                        const nlohmann::json& j) {
  IsotropicSubspace<PrimeField> w{Mat<PrimeField>(5, Vec<PrimeField>(10, k.zero()))};
  if (j.contains("prime") && j.at("prime").get<std::uint64_t>() != k.modulus())
    throw std::invalid_argument("prime mismatch");
  const auto& data = j.at("data");
  if (data.size() != 50) throw std::invalid_argument("expected 50 entries");
  for (size_t i = 0; i < 5; ++i)
    for (size_t c = 0; c < 10; ++c)
      w.basis[i][c] = k.from_int(data.at(10 * i + c).get<std::int64_t>());
  return w;
}

inline SpinorVector<PrimeField> spinor_from_json(const PrimeField& k,
                                                 const nlohmann::json& j) {
  SpinorVector<PrimeField> s = zero_spinor(k, j.at("parity") == "odd"
                                                  ? Parity::odd
                                                  : Parity::even);
  const auto& coords = j.at("coords");
  if (coords.size() != 32) throw std::invalid_argument("expected 32 coordinates");
  const auto& order = subset_lex_order();
  for (size_t i = 0; i < 32; ++i)
    s.coords[order[i]] = k.from_int(coords.at(i).get<std::int64_t>());
  return s;
}

}  // namespace spinvar::clifford
