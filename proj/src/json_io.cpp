#include "superbrauer/json_io.hpp"

#include <stdexcept>

namespace superbrauer {

using nlohmann::json;

json diagram_to_json(const BrauerDiagram& diagram) {
  json arcs = json::array();
  for (const auto& arc : diagram.arcs())
    arcs.push_back({arc.first + 1, arc.second + 1});
  return json{{"p", diagram.p()}, {"q", diagram.q()}, {"arcs", arcs}};
}

BrauerDiagram diagram_from_json(const json& j) {
  if (!j.contains("p") || !j.contains("q") || !j.contains("arcs"))
    throw std::invalid_argument("diagram JSON needs p, q and arcs");
  std::vector<BrauerDiagram::Arc> arcs;
  for (const auto& pair : j.at("arcs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("arc must be a pair of points");
    std::uint32_t a = pair[0].get<std::uint32_t>();
    std::uint32_t b = pair[1].get<std::uint32_t>();
    if (a == 0 || b == 0) throw std::invalid_argument("points are 1-based");
    arcs.emplace_back(a - 1, b - 1);
  }
  return BrauerDiagram(j.at("p").get<std::size_t>(),
                       j.at("q").get<std::size_t>(), std::move(arcs));
}

json hom_to_json(const HomElement& x) {
  json terms = json::array();
  for (const auto& [diagram, coeff] : x.terms()) {
    json arcs = json::array();
    for (const auto& arc : diagram.arcs())
      arcs.push_back({arc.first + 1, arc.second + 1});
    terms.push_back({{"arcs", arcs}, {"coeff", to_string(coeff)}});
  }
  return json{
      {"p", x.p()}, {"q", x.q()}, {"delta", x.delta()}, {"terms", terms}};
}

HomElement hom_from_json(const json& j, long long fallback_delta) {
  if (j.contains("arcs") && !j.contains("terms")) {
    BrauerDiagram diagram = diagram_from_json(j);
    long long delta = j.value("delta", fallback_delta);
    return HomElement::of(diagram, delta);
  }
  if (!j.contains("p") || !j.contains("q") || !j.contains("terms"))
    throw std::invalid_argument("hom JSON needs p, q and terms");
  const std::size_t p = j.at("p").get<std::size_t>();
  const std::size_t q = j.at("q").get<std::size_t>();
  HomElement x(p, q, j.value("delta", fallback_delta));
  for (const auto& term : j.at("terms")) {
    json d{{"p", p}, {"q", q}, {"arcs", term.at("arcs")}};
    x.add_term(diagram_from_json(d),
               rational_from_string(term.at("coeff").get<std::string>()));
  }
  return x;
}

json permutation_to_json(const Permutation& p) {
  json images = json::array();
  for (std::uint32_t v : p.images()) images.push_back(v + 1);
  return images;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation JSON is an array");
  std::vector<std::uint32_t> images;
  for (const auto& v : j) {
    std::uint32_t image = v.get<std::uint32_t>();
    if (image == 0) throw std::invalid_argument("images are 1-based");
    images.push_back(image - 1);
  }
  return Permutation::from_images(std::move(images));
}

json matrix_to_json(const SparseMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (const auto& [col, value] : m.row(i).terms())
      entries.push_back({i, col, to_string(value)});
  return json{{"rows", m.n_rows()}, {"cols", m.n_cols()}, {"entries", entries}};
}

SparseMatrix matrix_from_json(const json& j) {
  SparseMatrix m(j.at("rows").get<std::size_t>(),
                 j.at("cols").get<std::size_t>());
  for (const auto& entry : j.at("entries")) {
    m.add(entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
          rational_from_string(entry[2].get<std::string>()));
  }
  return m;
}

json operator_to_json(const SuperSpace& space, std::size_t r,
                      const SparseMatrix& matrix) {
  return json{{"m", space.m()},
              {"n", space.has_form() ? space.n() : space.odd_dim()},
              {"r", r},
              {"order", "row-major"},
              {"matrix", matrix_to_json(matrix)}};
}

json kernel_result_to_json(const KernelResult& result, bool include_basis) {
  json j{{"params",
          {{"m", result.m}, {"n", result.n}, {"d", result.degree}}},
         {"ambient_dim", result.ambient_dim},
         {"kernel_dim", result.kernel_dim}};
  if (include_basis) {
    json basis = json::array();
    for (const auto& v : result.basis) {
      json coords = json::array();
      for (const auto& value : v.to_dense(result.ambient_dim))
        coords.push_back(to_string(value));
      basis.push_back(coords);
    }
    json diagrams = json::array();
    for (const auto& diagram :
         enumerate_diagrams(result.coord_p, result.coord_q))
      diagrams.push_back(diagram_to_json(diagram).at("arcs"));
    j["diagram_order"] = diagrams;
    j["basis"] = basis;
  }
  return j;
}

json report_to_json(const VerificationReport& report) {
  json params = json::object(), dims = json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  for (const auto& [key, value] : report.dims) dims[key] = value;
  json j{{"claim", report.claim},
         {"params", params},
         {"status", to_string(report.status)},
         {"dims", dims},
         {"elapsed_ms", report.elapsed_ms}};
  if (!report.witness.empty()) j["witness"] = report.witness;
  return j;
}

json experiment_to_json(const MinKernelExperiment& experiment) {
  json dims = json::object();
  for (const auto& [d, dim] : experiment.kernel_dims)
    dims[std::to_string(d)] = dim;
  json j{{"claim", "experiment-min-kernel"},
         {"params", {{"m", experiment.m}, {"n", experiment.n}}},
         {"kernel_dims", dims},
         {"elapsed_ms", experiment.elapsed_ms}};
  if (experiment.first_nonzero_d >= 0)
    j["first_nonzero_d"] = experiment.first_nonzero_d;
  else
    j["first_nonzero_d"] = nullptr;
  if (experiment.budget_stopped_at > 0)
    j["budget_stopped_at_d"] = experiment.budget_stopped_at;
  return j;
}

}  // namespace superbrauer
