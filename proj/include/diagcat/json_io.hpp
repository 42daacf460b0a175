#pragma once

#include <json.hpp>

#include "diagcat/csp.hpp"
#include "diagcat/diagalg.hpp"
#include "diagcat/matrix.hpp"
#include "diagcat/qpoly.hpp"
#include "diagcat/report.hpp"
#include "diagcat/symfunc.hpp"

namespace diagcat {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers; everything else is an exact "num/den" string.
Json exact(const Rational& q);
Json exact(const Integer& z);

Json to_json(const Partition& p);
Json to_json(const QPoly& p);
Json to_json(const StandardTableau& t);
Json to_json(const SymFunc& f);
Json to_json(const BrauerDiagram& d);
Json to_json(const PartitionDiagram& d);
Json to_json(const DirectedDiagram& d);
Json to_json(const ExactMatrix& m);
Json to_json(const CheckResult& c);
Json to_json(const Report& r);
Json to_json(const CSPInstance& inst, const CSPVerdict& verdict);

template <class D>
Json to_json(const DiagElement<D>& a) {
  Json terms = Json::array();
  for (const auto& [d, c] : a.terms()) terms.push_back({{"diagram", to_json(d)}, {"coeff", to_string(c)}});
  return {{"kind", kind_name(D{})}, {"r", a.r()}, {"s", a.s()}, {"delta", to_string(a.delta())}, {"terms", terms}};
}

}  // namespace diagcat
