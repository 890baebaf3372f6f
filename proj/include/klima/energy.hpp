#ifndef KLIMA_ENERGY_HPP
#define KLIMA_ENERGY_HPP

#include <cstdint>
#include <filesystem>
#include <string>

namespace klima {

enum class NoiseDistribution { None, Uniform, Normal };

/// Circuit constants, stored in SI units. Defaults are the 28 nm design
/// point; the last group sets how the published block equations compose.
struct EnergyParams {
  double v_dd = 0.9;            // V
  double t_clk = 2e-9;          // s
  double v_read = 0.3;          // V
  double r_lrs = 500e3;         // Ohm
  double i_leak = 2.07e-9;      // A
  double i_tia_bias = 2e-6;     // A
  double c_inv = 0.35e-15;      // F
  double c_w = 0.22e-15 / 1e-6; // F/m
  double c_g = 0.3e-15;         // F
  double w_cell = 405e-9;       // m
  double e_xor = 1.84e-15;      // J
  double p_leak_xor = 7.2e-9;   // W
  double e_reg = 7.16e-15;      // J
  double p_leak_reg = 41e-9;    // W
  double e_comp = 5.5e-15;      // J
  double e_clk = 1.85e-15;      // J
  double e_pnrg = 365e-15;      // J
  double e_vcdl = 7.9e-15;      // J
  double e_wta_logic = 3.4e-15; // J
  double e_gprng_lut = 11.12e-15;
  double e_gprng_comp = 28e-15;
  int n_bdac = 4;
  double v_eo = 0.0;            // V
  double r_dac = 1e6;           // Ohm

  int cycles_per_iteration = 3;
  /// DACs served by one 64-bit PNRG.
  int rows_per_pnrg = 64;
  /// PNRG words per GPRNG sample group (table index and threshold).
  int gprng_pnrg_draws = 2;

  /// Throws std::invalid_argument when a constant is out of range.
  void validate() const;
};

/// Parameter file: a JSON object keyed by the symbol names (V_DD, t_clk,
/// R_LRS, E_GPRNG_LUT, ...), each entry {"value": x, "unit": "<unit>"} in the
/// units of the parameter table (ns, fF, fF/um, nm, fJ, nW, nA, uA, Ohm).
/// Missing keys keep their defaults; unknown keys or units are errors.
EnergyParams load_energy_params(const std::filesystem::path& path);
EnergyParams parse_energy_params(const std::string& json_text);
std::string energy_params_to_json(const EnergyParams& params);

struct ArrayGeometry {
  int rows = 0;
  int cols = 0;
};

/// TCAM: one row per clause, one 2T2R cell (two columns) per variable.
inline ArrayGeometry tcam_geometry(int num_clauses, int num_vars) {
  return {num_clauses, 2 * num_vars};
}
/// Gradient DPE: one row per clause, polarity-separated column pair per
/// variable.
inline ArrayGeometry dpe_geometry(int num_clauses, int num_vars) {
  return {num_clauses, 2 * num_vars};
}

/// Line activity and event counts gathered during search. All fields are
/// integer tallies so merging is exact and order-independent.
struct ActivityStats {
  std::uint64_t iterations = 0;
  std::uint64_t ml_conducting = 0;  // Σ δ_i per iteration
  std::uint64_t ml_cells = 0;       // Σ clause length per iteration
  std::uint64_t bl_conducting = 0;  // member cells on driven DPE rows
  std::uint64_t bl_cells = 0;       // member cells per DPE pass
  std::uint64_t comparator_fires = 0;
  std::uint64_t wta_selections = 0;
  std::uint64_t noise_samples = 0;
  std::uint64_t register_writes = 0;

  double alpha_ml() const { return ml_cells ? double(ml_conducting) / double(ml_cells) : 0.0; }
  double alpha_bl() const { return bl_cells ? double(bl_conducting) / double(bl_cells) : 0.0; }

  ActivityStats& operator+=(const ActivityStats& o);
  friend bool operator==(const ActivityStats&, const ActivityStats&) = default;
};

/// Which peripheral blocks a heuristic exercises.
struct DatapathProfile {
  bool break_pass = true;
  int comparators_per_ml = 2;
  NoiseDistribution noise = NoiseDistribution::None;
};

/// Per-iteration energy by block, in joules.
struct EnergyBreakdown {
  double crossbar_tcam = 0;
  double crossbar_dpe = 0;
  double comparators = 0;
  double noise = 0;
  double wta = 0;
  double xor_reg = 0;
  double clock = 0;
  double leakage = 0;
  double total = 0;
  /// One iteration is one KLIMA cycle, so this equals `total`.
  double energy_per_cycle = 0;

  double component_sum() const {
    return crossbar_tcam + crossbar_dpe + comparators + noise + wta + xor_reg + clock + leakage;
  }
};

// Crossbar sub-terms.
double row_capacitance(int n_cols, const EnergyParams& p);
double switching_capacitance(double c_row, const EnergyParams& p);
double row_drive_power(double c_row, const EnergyParams& p);
double tia_power(const EnergyParams& p);
double column_power(double alpha, const EnergyParams& p);

/// α·C_row^SW·V_DD² + n_cycles·t_clk·(N_cols·(P_row + P_TIA) + N_rows·P_row).
/// The switching term is charged once per array access.
double crossbar_energy(ArrayGeometry geometry, double alpha, const EnergyParams& p);

double dac_current(const EnergyParams& p);
double dac_energy(const EnergyParams& p);
double uniform_noise_energy(int n_rows, const EnergyParams& p);
double gaussian_noise_energy(int n_rows, const EnergyParams& p);
double wta_energy(int n_bls, const EnergyParams& p);
double latency_per_iteration(const EnergyParams& p);

/// Per-iteration breakdown for a C x V problem. Noise DACs sit on the DPE
/// rows; the WTA, XOR and state registers are one per variable.
EnergyBreakdown iteration_energy(const DatapathProfile& profile, int num_clauses, int num_vars,
                                 const ActivityStats& activity, const EnergyParams& p);

std::string breakdown_to_json(const EnergyBreakdown& b, int indent = -1);

}  // namespace klima

#endif  // KLIMA_ENERGY_HPP
