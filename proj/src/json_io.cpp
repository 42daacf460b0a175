#include "diagcat/json_io.hpp"

#include <limits>

namespace diagcat {

Json exact(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Json exact(const Rational& q) {
  if (q.get_den() == 1) return exact(Integer(q.get_num()));
  return to_string(q);
}

Json to_json(const Partition& p) { return Json(p); }

Json to_json(const StandardTableau& t) { return {{"rows", t.rows}, {"maj", t.maj()}}; }

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(exact(c));
  return out;
}

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    Json parts = Json::array();
    for (const auto& p : key) parts.push_back(to_json(p));
    terms.push_back({{"alphabets", f.alphabets()}, {"partitions", parts}, {"coeff", to_string(c)}});
  }
  return terms;
}

Json to_json(const BrauerDiagram& d) {
  Json pairs = Json::array();
  for (auto [a, b] : d.pairs()) pairs.push_back({a, b});
  return {{"r", d.r}, {"s", d.s}, {"pairs", pairs}};
}

Json to_json(const PartitionDiagram& d) { return {{"r", d.r}, {"s", d.s}, {"blocks", d.blocks()}}; }

Json to_json(const DirectedDiagram& d) {
  Json pairs = Json::array();
  for (auto [a, b] : d.ordered_pairs()) pairs.push_back({a, b});
  return {{"r", d.r}, {"s", d.s}, {"arrows", pairs}};
}

Json to_json(const ExactMatrix& m) {
  if (m.rows() * m.cols() > 4096) throw ResourceError("matrix too large to export");
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CheckResult& c) {
  return {{"check", c.check}, {"params", c.params}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}};
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r) out.push_back(to_json(c));
  return out;
}

Json to_json(const CSPInstance& inst, const CSPVerdict& v) {
  Json params = {{"r", inst.params.r}, {"n", inst.params.n}, {"k", inst.params.k}};
  Json out = {{"family", inst.family}, {"params", params}};
  if (inst.asserted) {
    out["set_size"] = inst.set_size;
    out["fix_counts"] = inst.orbits.fix_counts;
  } else {
    out["set_size"] = nullptr;
    out["fix_counts"] = nullptr;
  }
  out["polynomial"] = to_json(inst.polynomial);
  out["reduced_polynomial"] = to_json(v.reduced);
  out["chi"] = inst.asserted ? to_json(v.chi) : Json(nullptr);
  out["pass"] = inst.asserted ? Json(v.pass) : Json(nullptr);
  if (!inst.asserted) out["note"] = "no permutation set is claimed for this variant";
  if (v.witness) out["witness"] = *v.witness;
  return out;
}

}  // namespace diagcat
