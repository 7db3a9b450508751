#include "hgrav/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "hgrav/constants.hpp"
#include "hgrav/error.hpp"
#include "hgrav/galilean.hpp"
#include "hgrav/ionization.hpp"
#include "hgrav/mass_model.hpp"
#include "hgrav/oracle/manifold.hpp"
#include "hgrav/oracle/radial.hpp"
#include "hgrav/oracle/stabilization.hpp"
#include "hgrav/parabolic.hpp"
#include "hgrav/report.hpp"
#include "hgrav/separation.hpp"

namespace hgrav::cli {

namespace {

using report::Table;
using report::Value;
using json = nlohmann::json;

// Flat JSON object -> CLI11 config items. Keys are long option names without
// the leading dashes; arrays feed multi-value options.
class JsonConfig : public CLI::Config {
public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    json j = json::object();
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string& name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& results = opt->results();
        j[name] = results.size() == 1 ? json(results.front()) : json(results);
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    return j.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      j = json::parse(input);
    } catch (const json::exception& e) {
      throw CLI::ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConfigError("config: top level must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const auto& element : value) item.inputs.push_back(scalar_text(key, element));
      } else {
        item.inputs.push_back(scalar_text(key, value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

private:
  static std::string scalar_text(const std::string& key, const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number()) return value.dump();
    throw CLI::ConfigError("config: unsupported value for '" + key + "'");
  }
};

struct Options {
  // masses
  double m_e_ratio = 1.0;
  double m_p_ratio = 1.0;
  double mbar_e_ratio = 1.0;
  double mbar_p_ratio = 1.0;
  std::optional<double> m_e_kg, m_p_kg, mbar_e_kg, mbar_p_kg;
  std::optional<double> script_m_ratio;
  bool equivalence = false;
  // field
  double g = 9.80665;
  std::vector<double> axis{0.0, 0.0, 1.0};
  // command parameters
  int n = 2;
  bool levels = false;
  int n_max = 5;
  int l = 0;
  double force = 1e-3;
  std::vector<double> boxes{100.0, 125.0, 150.0, 175.0, 200.0};
  double window_lo = 0.4;
  double window_hi = 0.6;
  double spacing = 0.02;
  double accel = 1.0;
  double duration = 1.0;
  std::size_t steps = 4096;
  std::size_t points = 2048;
  double half_width = 40.0;
  // output
  std::string format = "csv";
  std::string output;
};

MassModel build_model(const Options& o, const PhysicalConstants& k) {
  MassModel model = MassModel::from_ratios(k, o.m_e_ratio, o.m_p_ratio, o.mbar_e_ratio,
                                           o.mbar_p_ratio);
  if (o.m_e_kg) model.m_e = *o.m_e_kg;
  if (o.m_p_kg) model.m_p = *o.m_p_kg;
  if (o.equivalence) {
    model.mbar_e = model.m_e;
    model.mbar_p = model.m_p;
  } else if (o.script_m_ratio) {
    const double total = model.m_e + model.m_p;
    model.mbar_p = model.m_p;
    model.mbar_e = model.m_e - *o.script_m_ratio * k.m_e_ref * total / model.m_p;
  } else {
    if (o.mbar_e_kg) model.mbar_e = *o.mbar_e_kg;
    if (o.mbar_p_kg) model.mbar_p = *o.mbar_p_kg;
  }
  model.validate();
  return model;
}

FieldSpec build_field(const Options& o) {
  if (!std::isfinite(o.g) || o.g < 0.0) throw InvalidArgument("--g must be finite and >= 0");
  const Vec3 axis{o.axis.at(0), o.axis.at(1), o.axis.at(2)};
  const double length = norm(axis);
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidArgument("--axis must be a non-zero finite vector");
  }
  FieldSpec field{o.g, {axis[0] / length, axis[1] / length, axis[2] / length}};
  field.validate();
  return field;
}

Value optional_value(const std::optional<double>& v) {
  return v ? Value(*v) : Value(std::monostate{});
}

Table constants_table(const PhysicalConstants& k) {
  Table t{{"name", "value", "unit"}, {}};
  t.add_row({"hbar", k.hbar, "J s"});
  t.add_row({"c", k.c, "m/s"});
  t.add_row({"alpha", k.alpha, "1"});
  t.add_row({"e", k.e_charge, "C"});
  t.add_row({"eps0", k.eps0, "F/m"});
  t.add_row({"m_e", k.m_e_ref, "kg"});
  t.add_row({"m_p", k.m_p_ref, "kg"});
  t.add_row({"alpha_mismatch", k.alpha_mismatch(), "1"});
  return t;
}

Table separate_table(const MassModel& model, const FieldSpec& field) {
  const SeparatedHamiltonian h = separate_gravitational(model, field);
  Table t{{"cm_kinetic_mass_kg", "cm_coupling_N", "internal_kinetic_mass_kg",
           "internal_coupling_N", "coulomb_present", "axis_x", "axis_y", "axis_z",
           "separability_residual"},
          {}};
  t.add_row({h.cm_kinetic_mass, h.cm_coupling, h.internal_kinetic_mass, h.internal_coupling,
             h.coulomb_present, h.axis[0], h.axis[1], h.axis[2],
             verify_separability(model, field)});
  return t;
}

Table spectrum_table(const Options& o, const MassModel& model, const PhysicalConstants& k) {
  if (o.n_max < 1 || o.l < 0 || o.l >= o.n_max) {
    throw InvalidArgument("spectrum: need --n-max >= 1 and 0 <= --l < --n-max");
  }
  const int count = o.n_max - o.l;
  if (count > oracle::kMaxRadialCount) {
    throw InvalidArgument("spectrum: at most " + std::to_string(oracle::kMaxRadialCount) +
                          " levels per run");
  }
  const CompositeMasses masses = derive_composites(model);
  const AtomicUnitScale scale = atomic_scale(k, masses.reduced);
  const auto pairs = oracle::radial_eigensolve(oracle::default_radial_grid(o.l, count), o.l, count);
  Table t{{"n", "l", "bohr_hartree", "oracle_hartree", "oracle_error_estimate", "relative_error",
           "bohr_J", "oracle_J"},
          {}};
  for (const auto& p : pairs) {
    const int n = p.state.n;
    const double bohr = -0.5 / (static_cast<double>(n) * n);
    t.add_row({std::int64_t{n}, std::int64_t{o.l}, bohr, p.energy, p.error_estimate,
               std::abs(p.energy - bohr) / std::abs(bohr), unperturbed_energy(n, masses, k),
               scale.energy_to_si(p.energy)});
  }
  return t;
}

Table levels_table(const Options& o, const MassModel& model, const FieldSpec& field,
                   const PhysicalConstants& k) {
  const auto levels = level_table(o.n, derive_composites(model), field, k);
  Table t{{"n", "n1", "n2", "m", "k", "E0_J", "shift_J", "E_J"}, {}};
  for (const auto& lv : levels) {
    const auto& s = lv.state;
    t.add_row({std::int64_t{s.n}, std::int64_t{s.n1}, std::int64_t{s.n2}, std::int64_t{s.m},
               std::int64_t{s.k()}, lv.E0, lv.shift, lv.energy()});
  }
  return t;
}

Table split_table(const Options& o, const MassModel& model, const FieldSpec& field,
                  const PhysicalConstants& k) {
  if (o.levels) return levels_table(o, model, field, k);
  const CompositeMasses masses = derive_composites(model);
  const SplittingTable table = splitting_table(o.n, masses, field, k);

  std::vector<Sublevel> by_shift = table.sublevels;
  std::stable_sort(by_shift.begin(), by_shift.end(),
                   [](const Sublevel& a, const Sublevel& b) { return a.shift < b.shift; });
  std::vector<oracle::ShiftGroup> groups;
  if (o.n <= oracle::kMaxManifold) groups = oracle::degenerate_pt(o.n, masses, field, k);
  const bool paired = groups.size() == by_shift.size();

  Table t{{"n", "k", "multiplicity", "shift_J", "energy_J", "spacing_J", "oracle_shift_J",
           "oracle_multiplicity", "relative_difference"},
          {}};
  for (const Sublevel& s : table.sublevels) {
    Value oracle_shift, oracle_mult, rel;
    if (paired) {
      const auto pos = static_cast<std::size_t>(
          std::find_if(by_shift.begin(), by_shift.end(),
                       [&](const Sublevel& x) { return x.k == s.k; }) -
          by_shift.begin());
      const auto& g = groups[pos];
      oracle_shift = g.shift;
      oracle_mult = std::int64_t{g.multiplicity};
      rel = s.shift == 0.0 ? std::abs(g.shift) : std::abs(g.shift - s.shift) / std::abs(s.shift);
    }
    t.add_row({std::int64_t{table.n}, std::int64_t{s.k}, std::int64_t{s.multiplicity}, s.shift,
               s.energy, table.spacing, oracle_shift, oracle_mult, rel});
  }
  return t;
}

Table lifetime_table(const MassModel& model, const FieldSpec& field, const PhysicalConstants& k) {
  // Key names are part of the output format.
  Table t{{"stable", "M_script_kg", "g", "internal_force_N", "F_atomic", "exponent_eq7",
           "log10_tau_eq7_s", "tau_eq7_s", "wkb_exponent", "log10_tau_wkb_s", "ratio",
           "ratio_in_window"},
          {}};
  const double script_m = derive_composites(model).asymmetry;
  const auto result = compare_lifetimes(model, field, k);
  if (std::holds_alternative<StableAtom>(result)) {
    t.add_row({true, script_m, field.magnitude, 0.0, {}, {}, {}, {}, {}, {}, {}, {}});
    return t;
  }
  const auto& r = std::get<ResonanceEstimate>(result);
  t.add_row({false, script_m, field.magnitude, r.internal_force, r.force_atomic,
             r.closed_form.exponent, r.closed_form.log10_tau_s, optional_value(r.closed_form.tau_s),
             r.wkb.barrier.exponent, r.log10_tau_wkb_s, r.exponent_ratio, r.ratio_in_window});
  return t;
}

Table stability_table(const Options& o) {
  const auto points = oracle::stabilization_scan(o.boxes, o.force, {o.window_lo, o.window_hi},
                                                 {.spacing = o.spacing});
  Table t{{"box_size", "level_spacing", "spacing_times_box", "nearest_level", "levels_in_window"},
          {}};
  for (const auto& p : points) {
    t.add_row({p.box_size, p.level_spacing, p.level_spacing * p.box_size, p.nearest_level,
               std::int64_t{p.levels_in_window}});
  }
  return t;
}

Table frame_check_table(const Options& o) {
  FrameCheckConfig config;
  config.grid = {-o.half_width, o.half_width, o.points};
  config.acceleration = o.accel;
  config.duration = o.duration;
  config.steps = o.steps;
  const FrameCheckReport r = frame_check(config);
  Table t{{"fidelity", "max_pointwise_error", "grid", "x_min", "x_max", "steps"}, {}};
  t.add_row({r.fidelity, r.max_pointwise_error, static_cast<std::int64_t>(r.grid.points),
             r.grid.x_min, r.grid.x_max, static_cast<std::int64_t>(r.steps)});
  return t;
}

Table frame_diff_table(const MassModel& model, const FieldSpec& field) {
  const FrameDiscrepancy d = frame_discrepancy(model, field.magnitude);
  Table t{{"magnitude", "cm_mass_ratio", "ratio_defined", "internal_coupling_difference_N"}, {}};
  t.add_row({field.magnitude, optional_value(d.cm_mass_ratio), d.cm_mass_ratio.has_value(),
             d.internal_coupling_difference});
  return t;
}

void add_options(CLI::App& app, Options& o) {
  auto* eq = app.add_flag("--equivalence", o.equivalence,
                          "gravitational masses equal to the inertial ones");
  auto* sm = app.add_option("--script-m-ratio", o.script_m_ratio,
                            "asymmetry mass in units of the electron mass (sets mbar_p = m_p)");
  auto* mer = app.add_option("--mbar-e-ratio", o.mbar_e_ratio, "mbar_e / m_e(CODATA)");
  auto* mpr = app.add_option("--mbar-p-ratio", o.mbar_p_ratio, "mbar_p / m_p(CODATA)");
  auto* mek = app.add_option("--mbar-e", o.mbar_e_kg, "mbar_e in kg");
  auto* mpk = app.add_option("--mbar-p", o.mbar_p_kg, "mbar_p in kg");
  app.add_option("--m-e-ratio", o.m_e_ratio, "m_e / m_e(CODATA)");
  app.add_option("--m-p-ratio", o.m_p_ratio, "m_p / m_p(CODATA)");
  app.add_option("--m-e", o.m_e_kg, "m_e in kg");
  app.add_option("--m-p", o.m_p_kg, "m_p in kg");
  for (CLI::Option* grav : {mer, mpr, mek, mpk}) {
    eq->excludes(grav);
    sm->excludes(grav);
  }
  eq->excludes(sm);
  mer->excludes(mek);
  mpr->excludes(mpk);

  app.add_option("--g", o.g, "field magnitude in m/s^2 (frame-diff: acceleration magnitude)");
  app.add_option("--axis", o.axis, "field axis")->expected(3);

  app.add_option("--n", o.n, "principal quantum number (split)")->check(CLI::Range(1, kMaxPrincipal));
  app.add_flag("--levels", o.levels, "split: list every parabolic state instead of sublevels");
  app.add_option("--n-max", o.n_max, "spectrum: highest principal quantum number");
  app.add_option("--l", o.l, "spectrum: angular momentum");
  app.add_option("--force", o.force, "stability: field in atomic units");
  app.add_option("--boxes", o.boxes, "stability: box sizes in Bohr");
  app.add_option("--window-lo", o.window_lo, "stability: energy window lower edge (Hartree)");
  app.add_option("--window-hi", o.window_hi, "stability: energy window upper edge (Hartree)");
  app.add_option("--spacing", o.spacing, "stability: grid spacing (Bohr)");
  app.add_option("--accel", o.accel, "frame-check: dimensionless acceleration");
  app.add_option("--duration", o.duration, "frame-check: propagation time");
  app.add_option("--steps", o.steps, "frame-check: time steps");
  app.add_option("--points", o.points, "frame-check: grid points");
  app.add_option("--half-width", o.half_width, "frame-check: grid half width");

  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", o.output, "output file (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hydrogen atom with separate inertial and gravitational masses", "hgrav"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with option values; flags override it");
  app.fallthrough();
  app.require_subcommand(1, 1);

  Options o;
  add_options(app, o);
  auto* constants_cmd = app.add_subcommand("constants", "physical constants in use");
  auto* separate_cmd = app.add_subcommand("separate", "centre-of-mass and internal couplings");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Bohr levels against the radial oracle");
  auto* split_cmd = app.add_subcommand("split", "sublevel table, analytic and oracle");
  auto* lifetime_cmd = app.add_subcommand("lifetime", "closed-form and WKB lifetimes");
  auto* stability_cmd = app.add_subcommand("stability", "stabilization scan of the field-on model");
  auto* frame_check_cmd = app.add_subcommand("frame-check", "Galilean exactness check");
  auto* frame_diff_cmd = app.add_subcommand("frame-diff", "gravitational vs accelerated frame");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  try {
    const PhysicalConstants k = codata_defaults();
    const MassModel model = build_model(o, k);
    const FieldSpec field = build_field(o);
    const report::Format format = o.format == "json" ? report::Format::json : report::Format::csv;

    Table table;
    if (constants_cmd->parsed()) table = constants_table(k);
    else if (separate_cmd->parsed()) table = separate_table(model, field);
    else if (spectrum_cmd->parsed()) table = spectrum_table(o, model, k);
    else if (split_cmd->parsed()) table = split_table(o, model, field, k);
    else if (lifetime_cmd->parsed()) table = lifetime_table(model, field, k);
    else if (stability_cmd->parsed()) table = stability_table(o);
    else if (frame_check_cmd->parsed()) table = frame_check_table(o);
    else if (frame_diff_cmd->parsed()) table = frame_diff_table(model, field);

    std::ostringstream buffer;
    report::emit_table(table, format, buffer);
    if (o.output.empty()) {
      out << buffer.str();
      out.flush();
      if (!out) throw ResourceError("cannot write to standard output");
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file " << o.output << "\n";
        return kExitConfig;
      }
      file << buffer.str();
      file.close();
      if (!file) throw ResourceError("cannot write " + o.output);
    }
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace hgrav::cli
