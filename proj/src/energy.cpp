#include "klima/energy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace klima {

namespace {

struct ParamSpec {
  const char* name;
  const char* unit;
  double scale;  // file value * scale = SI value
  double EnergyParams::*real = nullptr;
  int EnergyParams::*integer = nullptr;
};

const ParamSpec kParamSpecs[] = {
    {"V_DD", "V", 1.0, &EnergyParams::v_dd},
    {"t_clk", "ns", 1e-9, &EnergyParams::t_clk},
    {"V_read", "V", 1.0, &EnergyParams::v_read},
    {"R_LRS", "Ohm", 1.0, &EnergyParams::r_lrs},
    {"I_leak", "nA", 1e-9, &EnergyParams::i_leak},
    {"I_TIA_bias", "uA", 1e-6, &EnergyParams::i_tia_bias},
    {"C_inv", "fF", 1e-15, &EnergyParams::c_inv},
    {"C_w", "fF/um", 1e-9, &EnergyParams::c_w},
    {"C_G", "fF", 1e-15, &EnergyParams::c_g},
    {"W_cell", "nm", 1e-9, &EnergyParams::w_cell},
    {"E_XOR", "fJ", 1e-15, &EnergyParams::e_xor},
    {"P_leak_XOR", "nW", 1e-9, &EnergyParams::p_leak_xor},
    {"E_REG", "fJ", 1e-15, &EnergyParams::e_reg},
    {"P_leak_REG", "nW", 1e-9, &EnergyParams::p_leak_reg},
    {"E_comp", "fJ", 1e-15, &EnergyParams::e_comp},
    {"E_CLK", "fJ", 1e-15, &EnergyParams::e_clk},
    {"E_PNRG", "fJ", 1e-15, &EnergyParams::e_pnrg},
    {"E_VCDL", "fJ", 1e-15, &EnergyParams::e_vcdl},
    {"E_WTA_logic", "fJ", 1e-15, &EnergyParams::e_wta_logic},
    {"E_GPRNG_LUT", "fJ", 1e-15, &EnergyParams::e_gprng_lut},
    {"E_GPRNG_comp", "fJ", 1e-15, &EnergyParams::e_gprng_comp},
    {"n_bDAC", "bits", 1.0, nullptr, &EnergyParams::n_bdac},
    {"V_EO", "V", 1.0, &EnergyParams::v_eo},
    {"R_DAC", "Ohm", 1.0, &EnergyParams::r_dac},
    {"cycles_per_iteration", "cycles", 1.0, nullptr, &EnergyParams::cycles_per_iteration},
    {"rows_per_PNRG", "rows", 1.0, nullptr, &EnergyParams::rows_per_pnrg},
    {"GPRNG_PNRG_draws", "words", 1.0, nullptr, &EnergyParams::gprng_pnrg_draws},
};

double per_iteration(std::uint64_t count, std::uint64_t iterations, double fallback) {
  return iterations ? static_cast<double>(count) / static_cast<double>(iterations) : fallback;
}

}  // namespace

void EnergyParams::validate() const {
  for (const auto& spec : kParamSpecs) {
    const double v = spec.real ? this->*spec.real : static_cast<double>(this->*spec.integer);
    const bool ok = spec.real == &EnergyParams::v_eo ? v >= 0.0 : v > 0.0;
    if (!ok || !std::isfinite(v))
      throw std::invalid_argument(std::string("energy parameter ") + spec.name + " out of range");
  }
  if (v_eo >= v_read) throw std::invalid_argument("energy parameter V_EO must be below V_read");
}

EnergyParams parse_energy_params(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("energy parameters are not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("parameter file must hold a JSON object");
  EnergyParams p;
  for (const auto& [key, entry] : doc.items()) {
    const ParamSpec* spec = nullptr;
    for (const auto& s : kParamSpecs)
      if (key == s.name) spec = &s;
    if (!spec) throw std::invalid_argument("unknown energy parameter '" + key + "'");
    if (!entry.is_object() || !entry.contains("value") || !entry.contains("unit"))
      throw std::invalid_argument("parameter '" + key + "' needs {\"value\", \"unit\"}");
    const auto unit = entry.at("unit").get<std::string>();
    if (unit != spec->unit)
      throw std::invalid_argument("parameter '" + key + "' must be given in " + spec->unit +
                                  ", got " + unit);
    const double value = entry.at("value").get<double>();
    if (spec->real)
      p.*spec->real = value * spec->scale;
    else
      p.*spec->integer = static_cast<int>(std::llround(value));
  }
  p.validate();
  return p;
}

EnergyParams load_energy_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open parameter file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_energy_params(text.str());
  } catch (const std::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::string energy_params_to_json(const EnergyParams& p) {
  nlohmann::ordered_json doc;
  for (const auto& spec : kParamSpecs) {
    const double v = spec.real ? (p.*spec.real) / spec.scale : static_cast<double>(p.*spec.integer);
    doc[spec.name] = {{"value", v}, {"unit", spec.unit}};
  }
  return doc.dump(2);
}

ActivityStats& ActivityStats::operator+=(const ActivityStats& o) {
  iterations += o.iterations;
  ml_conducting += o.ml_conducting;
  ml_cells += o.ml_cells;
  bl_conducting += o.bl_conducting;
  bl_cells += o.bl_cells;
  comparator_fires += o.comparator_fires;
  wta_selections += o.wta_selections;
  noise_samples += o.noise_samples;
  register_writes += o.register_writes;
  return *this;
}

double row_capacitance(int n_cols, const EnergyParams& p) {
  if (n_cols < 1) throw std::invalid_argument("row_capacitance: need at least one column");
  return 2.0 * n_cols * (p.w_cell * p.c_w + p.c_g);
}

double switching_capacitance(double c_row, const EnergyParams& p) {
  return c_row + 2.0 * std::sqrt(c_row * p.c_inv) + 2.0 * p.c_inv;
}

double row_drive_power(double c_row, const EnergyParams& p) {
  return p.v_dd * p.i_leak * (1.0 + std::sqrt(c_row / p.c_inv));
}

double tia_power(const EnergyParams& p) { return p.v_dd * p.i_tia_bias; }

double column_power(double alpha, const EnergyParams& p) {
  return alpha * p.v_dd * p.v_read / p.r_lrs;
}

double crossbar_energy(ArrayGeometry g, double alpha, const EnergyParams& p) {
  if (g.rows < 1) throw std::invalid_argument("crossbar_energy: need at least one row");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("crossbar_energy: activity must lie in [0, 1]");
  const double c_row = row_capacitance(g.cols, p);
  const double p_row = row_drive_power(c_row, p);
  const double window = p.cycles_per_iteration * p.t_clk;
  return alpha * switching_capacitance(c_row, p) * p.v_dd * p.v_dd +
         window * (g.cols * (p_row + tia_power(p)) + g.rows * p_row);
}

double dac_current(const EnergyParams& p) {
  return (p.v_read - p.v_eo) / p.r_dac * (1.0 - std::ldexp(1.0, -p.n_bdac));
}

double dac_energy(const EnergyParams& p) { return dac_current(p) * p.v_dd * p.t_clk; }

double uniform_noise_energy(int n_rows, const EnergyParams& p) {
  if (n_rows < 1) throw std::invalid_argument("uniform_noise_energy: need at least one row");
  const double generators = std::round(static_cast<double>(n_rows) / p.rows_per_pnrg);
  return generators * p.e_pnrg + n_rows * dac_energy(p);
}

double gaussian_noise_energy(int n_rows, const EnergyParams& p) {
  if (n_rows < 1) throw std::invalid_argument("gaussian_noise_energy: need at least one row");
  const double generators = std::round(static_cast<double>(n_rows) / p.rows_per_pnrg);
  return n_rows * (p.e_gprng_lut + p.e_gprng_comp) + generators * p.e_pnrg * p.gprng_pnrg_draws +
         n_rows * dac_energy(p);
}

double wta_energy(int n_bls, const EnergyParams& p) {
  if (n_bls < 1) throw std::invalid_argument("wta_energy: need at least one bit line");
  return n_bls * (p.e_vcdl + p.e_wta_logic);
}

double latency_per_iteration(const EnergyParams& p) { return p.cycles_per_iteration * p.t_clk; }

EnergyBreakdown iteration_energy(const DatapathProfile& profile, int num_clauses, int num_vars,
                                 const ActivityStats& activity, const EnergyParams& p) {
  if (num_clauses < 1 || num_vars < 1)
    throw std::invalid_argument("iteration_energy: empty problem dimensions");
  EnergyBreakdown b;
  const ArrayGeometry tcam = tcam_geometry(num_clauses, num_vars);
  ArrayGeometry dpe = dpe_geometry(num_clauses, num_vars);
  if (!profile.break_pass) dpe.cols = num_vars;  // only the make half is sensed

  b.crossbar_tcam = crossbar_energy(tcam, activity.alpha_ml(), p);
  b.crossbar_dpe = crossbar_energy(dpe, activity.alpha_bl(), p);

  const double comparators = per_iteration(activity.comparator_fires, activity.iterations,
                                           double(num_clauses) * profile.comparators_per_ml);
  b.comparators = comparators * p.e_comp;

  switch (profile.noise) {
    case NoiseDistribution::None: break;
    case NoiseDistribution::Uniform: b.noise = uniform_noise_energy(dpe.rows, p); break;
    case NoiseDistribution::Normal: b.noise = gaussian_noise_energy(dpe.rows, p); break;
  }

  b.wta = wta_energy(num_vars, p);
  b.xor_reg = num_vars * (p.e_xor + p.e_reg);
  b.clock = (num_vars + comparators) * p.e_clk;
  b.leakage = num_vars * (p.p_leak_xor + p.p_leak_reg) * latency_per_iteration(p);
  b.total = b.component_sum();
  b.energy_per_cycle = b.total;
  return b;
}

std::string breakdown_to_json(const EnergyBreakdown& b, int indent) {
  nlohmann::ordered_json doc = {
      {"crossbar_tcam", b.crossbar_tcam}, {"crossbar_dpe", b.crossbar_dpe},
      {"comparators", b.comparators},     {"noise", b.noise},
      {"wta", b.wta},                     {"xor_reg", b.xor_reg},
      {"clock", b.clock},                 {"leakage", b.leakage},
      {"total", b.total},                 {"energy_per_cycle", b.energy_per_cycle},
  };
  return doc.dump(indent);
}

}  // namespace klima
