#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "ahpthermo/ahpthermo.hpp"

namespace py = pybind11;
using namespace ahpthermo;

namespace {

using Rows = std::vector<std::vector<double>>;

Matrix to_matrix(const Rows& rows) { return Matrix::from_rows(rows); }
ReturnSeries to_returns(const Rows& rows) { return ReturnSeries(to_matrix(rows)); }
CostMatrix to_costs(const Rows& rows) { return CostMatrix(to_matrix(rows)); }
JudgmentMatrix to_judgments(const Rows& rows) { return JudgmentMatrix(to_matrix(rows)); }

PureStrategy to_strategy(const std::vector<std::size_t>& choices, std::size_t n) {
  return PureStrategy(choices, n);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Judgment-matrix thermodynamics (C++ core). Indices are 0-based.";

  static py::exception<EnumerationCapExceeded> cap_error(m, "EnumerationCapExceeded",
                                                         PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const EnumerationCapExceeded& e) {
      cap_error(e.what());
    }
  });

  // market
  m.def("commission_from_bid_ask", &commission_from_bid_ask, py::arg("bid"), py::arg("ask"));
  m.def(
      "decompose",
      [](const Rows& u) {
        const auto d = decompose(to_judgments(u));
        return py::dict(py::arg("skew") = d.skew.to_rows(),
                        py::arg("commission") = d.commission.to_rows());
      },
      py::arg("judgments"));
  m.def(
      "cost_matrix",
      [](const Rows& u) { return cost_matrix(decompose(to_judgments(u))).costs().to_rows(); },
      py::arg("judgments"), "Conversion costs derived from a judgment matrix.");
  m.def(
      "transitivity_deviation",
      [](const Rows& u, std::size_t nu, std::size_t rho, std::size_t mu) {
        return transitivity_deviation(to_judgments(u), nu, rho, mu);
      },
      py::arg("judgments"), py::arg("nu"), py::arg("rho"), py::arg("mu"));
  m.def(
      "log_returns",
      [](const Rows& q) { return log_returns(QuotationHistory(to_matrix(q))).values().to_rows(); },
      py::arg("quotations"));
  m.def(
      "value_basket",
      [](const Rows& u, std::vector<double> p, std::size_t nu) {
        return value_basket(to_judgments(u), Basket{std::move(p)}, nu);
      },
      py::arg("judgments"), py::arg("basket"), py::arg("nu"));
  m.def(
      "priority_vector", [](const Rows& u) { return priority_vector(to_judgments(u)); },
      py::arg("judgments"));

  // strategies
  m.def(
      "iverson",
      [](const std::vector<std::size_t>& s, std::size_t n) {
        return iverson(to_strategy(s, n), n).bits().to_rows();
      },
      py::arg("strategy"), py::arg("n"));
  m.def(
      "spins",
      [](const std::vector<std::size_t>& s, std::size_t n) {
        return spins(iverson(to_strategy(s, n), n)).values().to_rows();
      },
      py::arg("strategy"), py::arg("n"));
  m.def(
      "profit",
      [](const std::vector<std::size_t>& s, const Rows& h, const Rows& c) {
        return profit(to_strategy(s, c.size()), to_returns(h), to_costs(c));
      },
      py::arg("strategy"), py::arg("returns"), py::arg("costs"));
  m.def(
      "spin_profit",
      [](const std::vector<std::size_t>& s, const Rows& h, const Rows& c) {
        return spin_profit(to_strategy(s, c.size()), to_returns(h), to_costs(c));
      },
      py::arg("strategy"), py::arg("returns"), py::arg("costs"));

  // ensemble
  py::class_<EnsembleObservables>(m, "EnsembleObservables")
      .def_readonly("beta", &EnsembleObservables::beta)
      .def_readonly("log_z", &EnsembleObservables::log_z)
      .def_readonly("expected_profit", &EnsembleObservables::expected_profit)
      .def_readonly("variance", &EnsembleObservables::variance)
      .def_readonly("entropy", &EnsembleObservables::entropy)
      .def_property_readonly("temperature",
                             [](const EnsembleObservables& o) {
                               return o.temperature ? *o.temperature
                                                    : std::numeric_limits<double>::infinity();
                             })
      .def_property_readonly("identity_residual", &EnsembleObservables::identity_residual)
      .def("__repr__", [](const EnsembleObservables& o) {
        return "<EnsembleObservables beta=" + std::to_string(o.beta) +
               " log_z=" + std::to_string(o.log_z) + ">";
      });

  m.def(
      "transfer_matrix",
      [](std::size_t t, double beta, const Rows& h, const Rows& c) {
        const auto tm = transfer_matrix(t, beta, to_returns(h), to_costs(c));
        Rows out(tm.scaled.rows(), std::vector<double>(tm.scaled.cols()));
        for (std::size_t i = 0; i < out.size(); ++i)
          for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = tm.entry(i, j);
        return out;
      },
      py::arg("t"), py::arg("beta"), py::arg("returns"), py::arg("costs"));
  m.def(
      "partition_function",
      [](double beta, const Rows& h, const Rows& c) {
        return partition_function(beta, to_returns(h), to_costs(c));
      },
      py::arg("beta"), py::arg("returns"), py::arg("costs"), "Returns ln Z.");
  m.def(
      "brute_force_partition",
      [](double beta, const Rows& h, const Rows& c, std::uint64_t cap, unsigned workers) {
        return brute_force_partition(beta, to_returns(h), to_costs(c), {cap, workers});
      },
      py::arg("beta"), py::arg("returns"), py::arg("costs"),
      py::arg("cap") = BruteForceOptions{}.cap, py::arg("workers") = 1u);
  m.def(
      "gibbs_weight",
      [](const std::vector<std::size_t>& s, double beta, const Rows& h, const Rows& c) {
        return gibbs_weight(to_strategy(s, c.size()), beta, to_returns(h), to_costs(c));
      },
      py::arg("strategy"), py::arg("beta"), py::arg("returns"), py::arg("costs"));
  m.def(
      "observables",
      [](double beta, const Rows& h, const Rows& c) {
        return observables(beta, to_returns(h), to_costs(c));
      },
      py::arg("beta"), py::arg("returns"), py::arg("costs"));
  m.def(
      "temperature_scan",
      [](const std::vector<double>& betas, const Rows& h, const Rows& c) {
        return temperature_scan(betas, to_returns(h), to_costs(c));
      },
      py::arg("betas"), py::arg("returns"), py::arg("costs"));

  // tropical
  m.def(
      "tropical_product",
      [](const Rows& a, const Rows& b) {
        return tropical_product(TropicalMatrix(to_matrix(a)), TropicalMatrix(to_matrix(b)))
            .entries()
            .to_rows();
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "max_profit",
      [](const Rows& h, const Rows& c) { return max_profit(to_returns(h), to_costs(c)); },
      py::arg("returns"), py::arg("costs"));
  m.def(
      "clairvoyant",
      [](const Rows& h, const Rows& c) {
        const auto r = clairvoyant(to_returns(h), to_costs(c));
        return py::make_tuple(r.max_profit, r.strategy.choices());
      },
      py::arg("returns"), py::arg("costs"), "Returns (max_profit, strategy).");

  // information
  m.def(
      "strategy_fisher",
      [](const std::vector<std::size_t>& s, std::size_t n) {
        const auto r = strategy_fisher(to_strategy(s, n), n);
        return py::make_tuple(r.per_criterion, r.total);
      },
      py::arg("strategy"), py::arg("n"), "Returns (per_criterion, total).");
  m.def(
      "discrete_fisher",
      [](const std::vector<double>& p, double dx) {
        const auto v = discrete_fisher(p, dx);
        return std::holds_alternative<double>(v) ? std::get<double>(v)
                                                 : std::numeric_limits<double>::infinity();
      },
      py::arg("p"), py::arg("dx") = 1.0, "Returns math.inf when the information diverges.");
  m.def(
      "shannon_entropy",
      [](const std::vector<double>& p, double dx) { return shannon_entropy(p, dx); },
      py::arg("p"), py::arg("dx") = 1.0);
  m.def(
      "cost_of_information",
      [](const std::vector<std::size_t>& s, std::size_t n, double flat_cost) {
        return cost_of_information(strategy_fisher(to_strategy(s, n), n), flat_cost);
      },
      py::arg("strategy"), py::arg("n"), py::arg("flat_cost"));
}
