#include "qsd/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qsd {

using nlohmann::json;

Eigen::Index ScenarioConfig::system_dim() const {
  const Eigen::Index total = hamiltonian_matrix.rows();
  const auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(total))));
  if (n * n != total)
    throw ValidationError("scenario: total dimension is not a perfect square "
                          "(system and ancilla must have equal dimension)");
  return n;
}

DensityMatrix ScenarioConfig::system_density() const {
  return density_from_coherence({system_dim(), rho_s});
}

DensityMatrix ScenarioConfig::ancilla_density() const {
  return density_from_coherence({system_dim(), ancilla});
}

std::vector<Observable> ScenarioConfig::components() const {
  if (system_dim() == 2)
    return qubit_observable_rows({observable_s(), observable_a()});
  return ndim_probability_components(observable_s(), observable_a());
}

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& context) {
  if (!j.is_object())
    throw ParseError("scenario: " + context + " must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.contains(item.key()))
      throw ParseError("scenario: unknown field '" + item.key() + "' in " + context);
}

double get_number(const json& j, const std::string& key, const std::string& context) {
  if (!j.contains(key))
    throw ParseError("scenario: missing field '" + key + "' in " + context);
  if (!j[key].is_number())
    throw ParseError("scenario: field '" + key + "' in " + context + " must be a number");
  return j[key].get<double>();
}

RealVector get_vector(const json& j, const std::string& key) {
  if (!j.contains(key))
    throw ParseError("scenario: missing field '" + key + "'");
  if (!j[key].is_array())
    throw ParseError("scenario: field '" + key + "' must be an array of numbers");
  const auto values = j[key].get<std::vector<double>>();
  return Eigen::Map<const RealVector>(values.data(),
                                      static_cast<Eigen::Index>(values.size()));
}

ComplexMatrix parse_matrix_object(const json& j, const std::string& context) {
  check_keys(j, {"dim", "entries_re", "entries_im"}, context);
  const auto dim = static_cast<Eigen::Index>(get_number(j, "dim", context));
  const auto re = j["entries_re"].get<std::vector<double>>();
  const auto im = j["entries_im"].get<std::vector<double>>();
  if (dim < 1 || static_cast<Eigen::Index>(re.size()) != dim * dim ||
      static_cast<Eigen::Index>(im.size()) != dim * dim)
    throw ParseError("scenario: " + context + " entry arrays must have dim^2 elements");
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k)
      m(i, k) = Complex(re[i * dim + k], im[i * dim + k]);
  return m;
}

ComplexMatrix parse_observable(const json& j, const std::string& context) {
  if (j.is_array()) {
    const auto coeffs = j.get<std::vector<double>>();
    if (coeffs.size() != 4)
      throw ParseError("scenario: " + context +
                       " coefficient form needs exactly 4 numbers [O0, O1, O2, O3]");
    return Observable::from_pauli_coefficients(
               Eigen::Vector4d(coeffs[0], coeffs[1], coeffs[2], coeffs[3]))
        .matrix();
  }
  return parse_matrix_object(j, context);
}

}  // namespace

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("scenario: cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("scenario: " + path.string() + ": " + e.what());
  }
  check_keys(j, {"hamiltonian", "rhoS", "ancilla", "observables", "tgrid", "seed",
                 "tolerances"},
             "scenario");

  ScenarioConfig cfg;

  if (!j.contains("hamiltonian"))
    throw ParseError("scenario: missing field 'hamiltonian'");
  const json& jh = j["hamiltonian"];
  check_keys(jh, {"type", "phi", "cos2phi", "path"}, "hamiltonian");
  if (!jh.contains("type") || !jh["type"].is_string())
    throw ParseError("scenario: hamiltonian needs a string field 'type'");
  cfg.hamiltonian_kind = jh["type"].get<std::string>();
  if (cfg.hamiltonian_kind == "builtin_4210") {
    cfg.hamiltonian_matrix = hamiltonian_spectrum_4210().matrix();
    cfg.hamiltonian_desc = "builtin_4210";
  } else if (cfg.hamiltonian_kind == "builtin_interaction") {
    double phi = interaction_phi_default();
    if (jh.contains("cos2phi"))
      phi = 0.5 * std::acos(get_number(jh, "cos2phi", "hamiltonian"));
    else if (jh.contains("phi"))
      phi = get_number(jh, "phi", "hamiltonian");
    cfg.hamiltonian_matrix = hamiltonian_interaction(phi).matrix();
    std::ostringstream desc;
    desc << "builtin_interaction(phi=" << phi << ")";
    cfg.hamiltonian_desc = desc.str();
  } else if (cfg.hamiltonian_kind == "file") {
    if (!jh.contains("path") || !jh["path"].is_string())
      throw ParseError("scenario: hamiltonian of type 'file' needs a 'path'");
    std::filesystem::path hpath = jh["path"].get<std::string>();
    if (hpath.is_relative()) hpath = path.parent_path() / hpath;
    cfg.hamiltonian_matrix = load_hamiltonian(hpath).matrix();
    cfg.hamiltonian_desc = "file(" + hpath.string() + ")";
  } else {
    throw ParseError("scenario: unknown hamiltonian type '" + cfg.hamiltonian_kind + "'");
  }

  cfg.rho_s = get_vector(j, "rhoS");
  cfg.ancilla = get_vector(j, "ancilla");

  if (!j.contains("observables"))
    throw ParseError("scenario: missing field 'observables'");
  check_keys(j["observables"], {"oS", "oA"}, "observables");
  if (!j["observables"].contains("oS") || !j["observables"].contains("oA"))
    throw ParseError("scenario: observables needs both 'oS' and 'oA'");
  cfg.o_s_matrix = parse_observable(j["observables"]["oS"], "oS");
  cfg.o_a_matrix = parse_observable(j["observables"]["oA"], "oA");

  if (!j.contains("tgrid"))
    throw ParseError("scenario: missing field 'tgrid'");
  const json& jt = j["tgrid"];
  check_keys(jt, {"t_min", "t_max", "steps"}, "tgrid");
  cfg.tgrid.t_min = get_number(jt, "t_min", "tgrid");
  cfg.tgrid.t_max = get_number(jt, "t_max", "tgrid");
  cfg.tgrid.steps = static_cast<int>(get_number(jt, "steps", "tgrid"));

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw ParseError("scenario: seed must be a nonnegative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }

  if (j.contains("tolerances")) {
    const json& jo = j["tolerances"];
    check_keys(jo, {"zero_prefilter", "zero_accept", "zero_refine", "fd_step"},
               "tolerances");
    const auto apply = [&](const char* key, double& slot) {
      if (!jo.contains(key)) return;
      slot = get_number(jo, key, "tolerances");
      std::ostringstream line;
      line << key << "=" << slot;
      cfg.tolerance_overrides.push_back(line.str());
    };
    apply("zero_prefilter", cfg.tolerances.zero_prefilter);
    apply("zero_accept", cfg.tolerances.zero_accept);
    apply("zero_refine", cfg.tolerances.zero_refine);
    apply("fd_step", cfg.tolerances.fd_step);
  }

  // cross-field validation
  if (cfg.tgrid.steps < 2 || !(cfg.tgrid.t_min < cfg.tgrid.t_max))
    throw ValidationError("scenario: tgrid needs steps >= 2 and t_min < t_max");
  const Eigen::Index n = cfg.system_dim();
  if (cfg.ancilla.size() == 3 && n != 2)
    throw ValidationError("scenario: 3-component ancilla requires a two-qubit scenario");
  if (cfg.rho_s.size() != n * n - 1)
    throw ValidationError("scenario: rhoS must have N^2 - 1 components");
  if (cfg.ancilla.size() != n * n - 1)
    throw ValidationError("scenario: ancilla must have N^2 - 1 components");
  if (cfg.o_s_matrix.rows() != n || cfg.o_a_matrix.rows() != n)
    throw ValidationError("scenario: observables must act on the N-dimensional factor");
  (void)cfg.system_density();   // throws if unphysical
  (void)cfg.ancilla_density();
  (void)cfg.observable_s();
  (void)cfg.observable_a();
  (void)cfg.hamiltonian();
  return cfg;
}

ScenarioConfig figure_scenario(double lambda_z) {
  ScenarioConfig cfg;
  cfg.hamiltonian_kind = "builtin_interaction";
  cfg.hamiltonian_matrix = hamiltonian_interaction(interaction_phi_default()).matrix();
  cfg.hamiltonian_desc = "builtin_interaction(cos2phi=1/sqrt(3))";
  cfg.rho_s = (RealVector(3) << 0, 0, 1).finished();
  cfg.ancilla = (RealVector(3) << 0, 0, lambda_z).finished();
  cfg.o_s_matrix =
      Observable::from_pauli_coefficients(Eigen::Vector4d(0, 1, 1, 1)).matrix();
  cfg.o_a_matrix =
      Observable::from_pauli_coefficients(Eigen::Vector4d(0, 1, 0.5, 0)).matrix();
  cfg.tgrid = {0.0, 20.0, 2001};
  return cfg;
}

}  // namespace qsd
