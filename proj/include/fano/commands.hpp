#pragma once

// The CLI's subcommands as pure functions returning a JSON payload and a
// rendered text table. Exit codes: 0 success, 1 usage or validation error,
// 2 a mathematical check failed.

#include "fano/ak.hpp"
#include "fano/bundles.hpp"
#include "fano/json_io.hpp"
#include "fano/ktheory.hpp"
#include "fano/lattice.hpp"
#include "fano/registry.hpp"
#include "fano/sod.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace fano::cli {

using io::Json;

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kCheckFailed = 2 };

struct CommandResult {
  int exit_code = kSuccess;
  Json payload;
  std::string rendered;
};

namespace detail {

inline CommandResult usage_error(const std::string& message) {
  return {kUsageError, Json{{"error", message}}, "error: " + message + "\n"};
}

/// Runs a command body, mapping input problems to exit code 1.
template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return std::forward<Body>(body)();
  } catch (const ValidationError& e) {
    return usage_error(e.what());
  } catch (const ParentMismatch& e) {
    return usage_error(e.what());
  } catch (const nlohmann::json::exception& e) {
    return usage_error(std::string("malformed JSON input: ") + e.what());
  }
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace detail

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
}

inline CommandResult cmd_classify(std::optional<int> index = std::nullopt) {
  return detail::guarded([&] {
    if (index && (*index < 1 || *index > 4))
      throw ValidationError("index must lie in [1, 4], got " + std::to_string(*index));
    CommandResult r;
    r.payload = Json::array();
    std::ostringstream out;
    out << detail::pad("name", 6) << detail::pad("index", 7) << detail::pad("degree", 8) << detail::pad("genus", 7)
        << "description\n";
    for (const auto& f : all_descriptors()) {
      if (index && f.index() != *index) continue;
      r.payload.push_back(io::to_json(f));
      out << detail::pad(f.name(), 6) << detail::pad(std::to_string(f.index()), 7)
          << detail::pad(std::to_string(f.degree()), 8)
          << detail::pad(f.genus() ? std::to_string(*f.genus()) : "-", 7) << describe(f).text << "\n";
    }
    r.rendered = out.str();
    return r;
  });
}

inline CommandResult cmd_k0(int index, int degree) {
  return detail::guarded([&] {
    const FanoDescriptor f = validate(index, degree);
    const auto basis = k0_basis_from_cycles(f);
    const EulerGram gram = euler_gram(basis);
    const Integer det = determinant(gram.matrix);
    const auto coeffs = chi0_coefficients(f);

    CommandResult r;
    r.payload["descriptor"] = io::to_json(f);
    r.payload["todd"] = io::to_json(todd(f));
    r.payload["chi0_coefficients"] = Json::array();
    for (const auto& c : coeffs) r.payload["chi0_coefficients"].push_back(io::to_json(c));
    r.payload["basis"] = Json::array();
    for (int p = 0; p < 4; ++p) {
      Json b = io::to_json(basis[p]);
      b["sheaf"] = cycle_name(static_cast<Cycle>(p));
      r.payload["basis"].push_back(b);
    }
    r.payload["euler_gram"] = io::to_json(gram.matrix);
    r.payload["gram_determinant"] = io::to_json(det);
    const bool unimodular = det == 1 || det == -1;
    r.payload["unimodular"] = unimodular;
    r.exit_code = unimodular ? kSuccess : kCheckFailed;

    std::ostringstream out;
    out << f.name() << ": " << describe(f).text << "\n";
    for (int p = 0; p < 4; ++p)
      out << "  ch(" << cycle_name(static_cast<Cycle>(p)) << ") = " << basis[p].ch() << "\n";
    out << "  td = " << todd(f) << "\n";
    out << "  chi0(x + yH + zL + wP) = " << to_string(coeffs[0]) << "x + (" << to_string(coeffs[1]) << ")y + ("
        << to_string(coeffs[2]) << ")z + " << to_string(coeffs[3]) << "w\n";
    out << "  Euler Gram on [O_X, O_H, O_L, O_P]:\n";
    for (std::size_t i = 0; i < 4; ++i) {
      out << "   ";
      for (const auto& v : gram.matrix.row(i)) out << " " << detail::pad(v.str(), 4);
      out << "\n";
    }
    out << "  det = " << det << (unimodular ? " (unimodular)" : " (NOT unimodular)") << "\n";
    r.rendered = out.str();
    return r;
  });
}

inline CommandResult cmd_verify_rr(std::optional<int> d, bool all, int bound = kDefaultIsometryBound) {
  return detail::guarded([&] {
    if (all == d.has_value()) throw ValidationError("give exactly one of a degree d in [1, 5] or --all");
    std::vector<int> ds;
    if (all)
      ds = {1, 2, 3, 4, 5};
    else
      ds = {*d};
    CommandResult r;
    std::ostringstream out;
    Json reports = Json::array();
    bool ok = true;
    for (int dd : ds) {
      const auto rep = verify_complement_isometry(dd, bound);
      reports.push_back(io::to_json(rep));
      ok = ok && rep.passed();
      out << detail::pass_fail(rep.passed()) << " d=" << dd << " g=" << rep.g << " witness "
          << complement_isometry_witness() << " gramA " << rep.gram_a << " gramB " << rep.gram_b << " ("
          << rep.witnesses.size() << " isometries with entries in [-" << bound << ", " << bound << "])\n";
    }
    r.payload = all ? reports : reports.front();
    r.exit_code = ok ? kSuccess : kCheckFailed;
    r.rendered = out.str();
    return r;
  });
}

inline CommandResult cmd_sod(int index, int degree) {
  return detail::guarded([&] {
    const FanoDescriptor f = validate(index, degree);
    const auto collection = standard_collection(f);
    const auto report = check_exceptional(collection);
    const auto complement = right_orthogonal(collection);
    const bool rank_ok = complement.basis.size() == 4 - collection.size();

    CommandResult r;
    r.payload["descriptor"] = io::to_json(f);
    r.payload["collection"] = io::to_json(report);
    r.payload["complement"] = io::to_json(complement);
    r.exit_code = report.numerically_exceptional() && rank_ok ? kSuccess : kCheckFailed;

    std::ostringstream out;
    out << f.name() << ": collection of " << collection.size() << " classes is "
        << (report.numerically_exceptional() ? "numerically exceptional" : "NOT numerically exceptional") << "\n";
    for (const auto& c : collection) out << "  " << c.ch() << "\n";
    out << "right orthogonal: rank " << complement.basis.size() << "\n";
    for (const auto& b : complement.basis) out << "  " << b.ch() << "\n";
    out << "Gram " << complement.gram.matrix << "\n";
    r.rendered = out.str();
    return r;
  });
}

inline CommandResult cmd_bundle(const std::string& side, int d, int k_or_t) {
  return detail::guarded([&] {
    CommandResult r;
    std::ostringstream out;
    if (side == "index1") {
      const auto n = numerology_index1(d, k_or_t);
      r.payload = io::to_json(n);
      out << "X_" << 4 * d + 2 << ", F with c1 = -H, c2 = " << n.bundle.c2 << "L: chi(F^*) = " << n.chi
          << ", degree = " << n.degree << " (closed form 2d-2+2t = " << n.closed_form_degree << ")"
          << (n.discrepancy ? " DISCREPANCY" : "") << "\n";
    } else if (side == "index2") {
      const auto n = numerology_index2(d, k_or_t);
      r.payload = io::to_json(n);
      out << "Y_" << d << ", instanton of charge " << k_or_t << ": chi(E^*(1)) = " << n.chi
          << ", degree = " << n.degree << "\n";
    } else {
      throw ValidationError("side must be index1 or index2, got '" + side + "'");
    }
    r.rendered = out.str();
    return r;
  });
}

inline CommandResult cmd_coincidence(int d, int k, int t) {
  return detail::guarded([&] {
    const auto rep = coincidence_check(d, k, t);
    CommandResult r;
    r.payload = io::to_json(rep);
    std::ostringstream out;
    out << "d=" << d << " k=" << k << " t=" << t << "\n"
        << "  dimensions " << rep.dim_index1 << " / " << rep.dim_index2
        << (rep.dimensions_coincide ? "  coincide" : "  differ") << "\n"
        << "  degrees    " << rep.degree_index1 << " / " << rep.degree_index2
        << (rep.degrees_coincide ? "  coincide" : "  differ") << "\n"
        << "  closed-form index-1 degree " << rep.degree_index1_closed_form
        << (rep.closed_form_degrees_coincide ? "  coincides" : "  differs") << "\n"
        << "  d + 1 = 2k - t: " << (rep.condition_holds ? "holds" : "fails") << "\n";
    r.rendered = out.str();
    return r;
  });
}

inline CommandResult cmd_isometry(const Json& g1_json, const Json& g2_json, int bound = kDefaultIsometryBound) {
  return detail::guarded([&] {
    const BilinearLattice g1 = io::lattice_from_json(g1_json);
    const BilinearLattice g2 = io::lattice_from_json(g2_json);
    const auto found = find_isometries(g1, g2, bound);
    CommandResult r;
    r.payload["bound"] = bound;
    r.payload["g1"] = io::to_json(g1);
    r.payload["g2"] = io::to_json(g2);
    r.payload["count"] = found.size();
    r.payload["witnesses"] = Json::array();
    std::ostringstream out;
    out << found.size() << " isometries A with A^T g2 A = g1, entries in [-" << bound << ", " << bound << "]\n";
    for (const auto& a : found) {
      r.payload["witnesses"].push_back(io::to_json(a));
      out << "  " << a << "\n";
    }
    r.rendered = out.str();
    return r;
  });
}

inline CommandResult cmd_ak(const Json& input) {
  return detail::guarded([&] {
    const PairingData data = io::pairing_from_json(input);
    const AkVerdict v = ak_compatible(data);
    CommandResult r;
    r.payload = io::to_json(v);
    r.rendered = std::string(v.verdict ? "AK-compatible" : "not shown AK-compatible") + ": " + v.reason + "\n";
    return r;
  });
}

}  // namespace fano::cli
