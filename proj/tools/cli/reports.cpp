#include "reports.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace heunlie::reports {

Json surd(const Surd& s) { return Json{{"exact", s.str()}, {"approx", number(s.to_complex())}}; }

Json params(const HeunParams& p) {
  return Json{{"a", exact(p.a())},         {"q", exact(p.q())},         {"alpha", exact(p.alpha())},
              {"beta", exact(p.beta())},   {"gamma", exact(p.gamma())}, {"delta", exact(p.delta())},
              {"epsilon", exact(p.epsilon())}};
}

Json discrepancies(const DiscrepancyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(
        Json{{"name", e.name}, {"paper", exact(e.paper)}, {"oracle", exact(e.oracle)}, {"residual", exact(e.residual)}});
  }
  return entries;
}

Json spectrum(const Spectrum& s) {
  Json out{{"triangular", s.triangular}, {"exact", s.exact}};
  if (s.exact) {
    Json ev = Json::array();
    for (const auto& v : s.exact_values) ev.push_back(exact(v));
    out["exact_values"] = ev;
  }
  Json vals = Json::array();
  for (const auto& v : s.values) vals.push_back(number(v));
  out["values"] = vals;
  out["max_residual"] = s.max_residual;
  return out;
}

Json matrix(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(exact(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json theorem1_golden_table() {
  struct Draw {
    CRat j;
    HeunParams p;
  };
  auto q = [](long n, long d) { return CRat::fraction(n, d); };
  // alpha + beta + 1 = gamma + delta + epsilon in every draw
  const std::vector<Draw> draws = {
      {CRat(0), HeunParams(CRat(2), CRat(0), CRat(1), CRat(1), CRat(1), CRat(1), CRat(1))},
      {q(1, 2), HeunParams(CRat(3), q(1, 3), q(1, 2), q(-3, 2), CRat(2), q(-1, 2), q(-3, 2))},
      {CRat(1), HeunParams(q(-1, 2), CRat(5), q(-1, 2), CRat(-2), CRat(3), q(1, 3), q(-29, 6))},
      {q(3, 2), HeunParams(CRat(4), CRat(-1), CRat(2), q(1, 4), q(5, 4), CRat(1), CRat(1))},
      {CRat(2), HeunParams(CRat(Rational(0), Rational(1)), q(7, 2), CRat(1), CRat(3), CRat(2), CRat(2), CRat(1))},
      {CRat(-1), HeunParams(q(2, 3), CRat(0), CRat(-1), CRat(2), q(1, 2), q(1, 2), CRat(1))},
  };
  Json table = Json::array();
  for (const auto& d : draws) {
    const Spin spin = Spin::from_value(d.j);
    table.push_back(Json{{"j", exact(d.j)},
                         {"params", params(d.p)},
                         {"convention", DiscrepancyReport{}.convention},
                         {"theorem1", discrepancies(verify_theorem1(spin, d.p))},
                         {"expanded_form", discrepancies(expanded_form_discrepancies(d.p))},
                         {"exponents", discrepancies(exponent_discrepancies(d.p))}});
  }
  return table;
}

namespace {

void flatten(const Json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
    return;
  }
  if (node.is_array()) {
    const bool scalar_pair = node.size() == 2 && node[0].is_number() && node[1].is_number();
    if (!scalar_pair && !node.empty()) {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
      return;
    }
  }
  out.emplace_back(path, node.is_string() ? node.get<std::string>() : node.dump());
}

}  // namespace

std::string to_text(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

}  // namespace heunlie::reports
