#pragma once

// JSON forms of the library's values. Rationals and integers travel as
// canonical decimal strings ("-1/6", "7") so exactness survives; integer
// inputs may also be given as JSON numbers.

#include "fano/ak.hpp"
#include "fano/arith.hpp"
#include "fano/bundles.hpp"
#include "fano/chow.hpp"
#include "fano/ktheory.hpp"
#include "fano/lattice.hpp"
#include "fano/registry.hpp"
#include "fano/sod.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fano::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const Integer& a) { return to_string(a); }

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ValidationError("expected an integer (number or decimal string), got " + j.dump());
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("expected a rational string \"num/den\", got " + j.dump());
}

inline Json to_json(const FanoDescriptor& f) {
  const auto desc = describe(f);
  Json j;
  j["index"] = f.index();
  j["degree"] = f.degree();
  if (f.genus()) j["genus"] = *f.genus();
  j["description"] = desc.text;
  return j;
}

inline FanoDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("index") || !j.contains("degree"))
    throw ValidationError("descriptor needs {index, degree}");
  return validate(j.at("index").get<int>(), j.at("degree").get<int>());
}

inline Json to_json(const CycleClass& a) {
  Json j;
  j["x"] = to_json(a.x());
  j["y"] = to_json(a.y());
  j["z"] = to_json(a.z());
  j["w"] = to_json(a.w());
  j["parent"] = {{"index", a.parent().index()}, {"degree", a.parent().degree()}};
  return j;
}

inline CycleClass cycle_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("cycle class must be an object");
  return CycleClass(descriptor_from_json(j.at("parent")), rational_from_json(j.at("x")), rational_from_json(j.at("y")),
                    rational_from_json(j.at("z")), rational_from_json(j.at("w")));
}

/// The Chern character plus, when the class is a lattice member, its
/// structure-sheaf coordinates under "lattice".
inline Json to_json(const KClass& k) {
  Json j = to_json(k.ch());
  if (auto ints = lattice_coordinates(k.ch()).integers()) {
    Json coords = Json::array();
    for (const auto& c : *ints) coords.push_back(to_json(c));
    j["lattice"] = coords;
  }
  return j;
}

inline KClass kclass_from_json(const Json& j) { return KClass(cycle_from_json(j)); }

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (const auto& v : m.row(i)) r.push_back(to_json(v));
    rows.push_back(r);
  }
  return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  std::size_t cols = 0;
  for (const auto& r : j) {
    if (!r.is_array()) throw ValidationError("matrix row must be an array");
    std::vector<Integer> row;
    for (const auto& v : r) row.push_back(integer_from_json(v));
    if (rows.empty()) cols = row.size();
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

inline Json to_json(const BilinearLattice& g) {
  Json j;
  j["rank"] = g.rank();
  j["gram"] = to_json(g.gram());
  return j;
}

inline BilinearLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) throw ValidationError("lattice needs {rank, gram}");
  BilinearLattice g(matrix_from_json(j.at("gram")));
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != g.rank())
    throw ValidationError("rank does not match the Gram matrix size");
  return g;
}

inline Json to_json(const PairingData& d) {
  Json j;
  j["n"] = d.n;
  j["ranks"] = d.ranks;
  Json p = Json::object();
  for (std::size_t i = 0; i < d.pairings.size(); ++i) p[std::to_string(i)] = to_json(d.pairings[i]);
  j["pairings"] = p;
  return j;
}

inline PairingData pairing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("ranks") || !j.contains("pairings"))
    throw MalformedPairingData("pairing data needs {n, ranks, pairings}");
  PairingData d;
  d.n = j.at("n").get<int>();
  d.ranks = j.at("ranks").get<std::vector<int>>();
  if (d.n < 1) throw MalformedPairingData("dimension n must be >= 1");
  const Json& p = j.at("pairings");
  if (!p.is_object()) throw MalformedPairingData("pairings must be an object keyed by p");
  for (int i = 0; i <= d.n; ++i) {
    const std::string key = std::to_string(i);
    if (!p.contains(key)) throw MalformedPairingData("missing pairing for p = " + key);
    const Json& m = p.at(key);
    // an m_p x 0 matrix has no rows to carry its shape
    if (m.is_array() && m.empty() && static_cast<std::size_t>(i) < d.ranks.size())
      d.pairings.emplace_back(static_cast<std::size_t>(d.ranks[i]), 0);
    else
      d.pairings.push_back(matrix_from_json(m));
  }
  validate_pairing_data(d);
  return d;
}

inline Json to_json(const AkVerdict& v) {
  Json j;
  j["verdict"] = v.verdict;
  j["reason"] = v.reason;
  if (v.failing_p) j["failing_p"] = *v.failing_p;
  return j;
}

inline Json to_json(const ExceptionalSequenceReport& r) {
  Json j;
  j["classes"] = Json::array();
  for (const auto& c : r.classes) j["classes"].push_back(to_json(c));
  j["self_chis"] = Json::array();
  for (const auto& c : r.self_chis) j["self_chis"].push_back(to_json(c));
  j["offending_pairs"] = Json::array();
  for (const auto& o : r.offending_pairs) j["offending_pairs"].push_back({o.l, o.k, to_json(o.value)});
  j["numerically_exceptional"] = r.numerically_exceptional();
  return j;
}

inline Json to_json(const ComplementResult& c) {
  Json j;
  j["generators"] = Json::array();
  for (const auto& g : c.generators) j["generators"].push_back(to_json(g));
  j["rank"] = c.basis.size();
  j["coordinates"] = to_json(c.coordinates);
  j["basis"] = Json::array();
  for (const auto& b : c.basis) j["basis"].push_back(to_json(b));
  j["gram"] = to_json(c.gram.matrix);
  return j;
}

inline Json to_json(const ComplementIsometryReport& r) {
  Json j;
  j["d"] = r.d;
  j["g"] = r.g;
  j["gramA"] = to_json(r.gram_a);
  j["gramB"] = to_json(r.gram_b);
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  j["basisA"] = Json::array();
  for (const auto& b : r.generators_a) j["basisA"].push_back(to_json(b));
  j["basisB"] = Json::array();
  for (const auto& b : r.generators_b) j["basisB"].push_back(to_json(b));
  j["hnfBasisA"] = to_json(r.complement_a.coordinates);
  j["hnfBasisB"] = to_json(r.complement_b.coordinates);
  j["witnessProduct"] = to_json(r.witness_product);
  j["passed"] = r.passed();
  return j;
}

inline Json to_json(const RankTwoBundle& b) {
  Json j;
  j["parent"] = {{"index", b.parent.index()}, {"degree", b.parent.degree()}};
  j["c1"] = to_json(b.c1);
  j["c2"] = to_json(b.c2);
  j["c3"] = to_json(b.c3);
  return j;
}

inline Json to_json(const Index1Numerology& n) {
  Json j;
  j["inputs"] = {{"side", "index1"}, {"d", n.d}, {"t", n.t}};
  j["bundle"] = to_json(n.bundle);
  j["dual"] = to_json(n.dual_bundle);
  j["chi"] = to_json(n.chi);
  j["degree_computed"] = to_json(n.degree);
  j["degree_paper"] = to_json(n.closed_form_degree);
  j["discrepancy"] = n.discrepancy;
  return j;
}

inline Json to_json(const Index2Numerology& n) {
  Json j;
  j["inputs"] = {{"side", "index2"}, {"d", n.d}, {"k", n.k}};
  j["bundle"] = to_json(n.bundle);
  j["twisted_dual"] = to_json(n.twisted_dual);
  j["chi"] = to_json(n.chi);
  j["degree_computed"] = to_json(n.degree);
  // the closed form 4d - 4k agrees with the computed Chern classes
  j["degree_paper"] = to_json(Integer(4 * n.d - 4 * n.k));
  j["discrepancy"] = n.degree != 4 * n.d - 4 * n.k;
  return j;
}

inline Json to_json(const CoincidenceReport& r) {
  Json j;
  j["inputs"] = {{"d", r.d}, {"k", r.k}, {"t", r.t}};
  j["dim_index1"] = to_json(r.dim_index1);
  j["dim_index2"] = to_json(r.dim_index2);
  j["degree_index1_computed"] = to_json(r.degree_index1);
  j["degree_index1_closed_form"] = to_json(r.degree_index1_closed_form);
  j["degree_index2"] = to_json(r.degree_index2);
  j["dimensions_coincide"] = r.dimensions_coincide;
  j["degrees_coincide"] = r.degrees_coincide;
  j["closed_form_degrees_coincide"] = r.closed_form_degrees_coincide;
  j["condition_holds"] = r.condition_holds;
  return j;
}

}  // namespace fano::io
