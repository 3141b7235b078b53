#include "sally/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sally/family.hpp"
#include "sally/parser.hpp"

namespace sally {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

struct CommonOpts {
  std::string ring_path;
  std::string ideal_name = "I";
  std::string reduction_name = "Q";
  int n_max = 8;
  std::string format = "json";
  std::string field_desc;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool needs_ring) {
  if (needs_ring) {
    cmd->add_option("--ring", opts.ring_path, "path to a ring document")->required();
    cmd->add_option("--ideal", opts.ideal_name, "ideal name in the document");
    cmd->add_option("--reduction", opts.reduction_name, "reduction ideal name");
  }
  cmd->add_option("--n-max", opts.n_max, "table depth / search cap");
  cmd->add_option("--format", opts.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--field", opts.field_desc, "coefficient field: rational or prime:<p>");
}

CompiledRing load_ring(const CommonOpts& opts) {
  std::ifstream in(opts.ring_path);
  if (!in) throw InputError("cannot open ring document '" + opts.ring_path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  RingDocument doc = parse_ring_document(buffer.str());
  std::optional<Field> field;
  if (!opts.field_desc.empty()) field = Field::parse(opts.field_desc);
  return compile_ring_document(doc, field);
}

const IdealHandle& named_ideal(const CompiledRing& ring, const std::string& name) {
  auto it = ring.ideals.find(name);
  if (it == ring.ideals.end()) throw InputError("no ideal named '" + name + "' in the document");
  return it->second;
}

void render_table(const json& j, std::ostream& out, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << prefix << key << ":\n";
      render_table(value, out, prefix + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << prefix << key << ":\n";
      for (const auto& item : value) {
        bool first = true;
        for (const auto& [k, v] : item.items()) {
          out << (first ? prefix + "  - " : prefix + "    ") << k << ": " << v.dump() << "\n";
          first = false;
        }
      }
    } else {
      out << prefix << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const json& j, const CommonOpts& opts, std::ostream& out) {
  if (opts.format == "table") {
    render_table(j, out, "");
  } else {
    out << j.dump(2) << "\n";
  }
}

json classification_json(const ClassificationReport& rep) {
  json c;
  c["dim"] = rep.dim;
  c["colength"] = rep.colength;
  c["e"] = rep.e;
  c["numerator"] = rep.numerator;
  c["sigma"] = rep.sigma;
  c["c"] = rep.c;
  c["northcott_gap"] = rep.northcott_gap;
  c["ev_gap"] = rep.ev_gap;
  c["flags"] = {{"q_cap_i2_eq_qi", rep.q_cap_i2_eq_qi},
                {"i2_eq_qi", rep.i2_eq_qi},
                {"i3_eq_qi2", rep.i3_eq_qi2},
                {"i4_eq_qi3", rep.i4_eq_qi3}};
  c["reduction_number"] = rep.reduction_number;
  c["branch"] = rep.branch;
  c["subcase"] = rep.subcase;
  c["predicted_e"] = rep.predicted_e;
  c["predicted_numerator"] = rep.predicted_numerator;
  c["match"] = rep.match;
  c["postulation"] = rep.postulation;
  c["assumed"] = rep.assumed;
  if (rep.rr_condition_checked) {
    c["rr_square_gap"] = rep.rr_square_gap;
    c["rr_filtration_stable"] = rep.rr_filtration_stable;
    c["rr_checked_up_to"] = rep.rr_checked_up_to;
  }
  return c;
}

json sally_json(const SallyTable& table) {
  json s;
  s["S"] = table.s_lengths;
  s["L"] = table.l_lengths;
  s["C"] = table.c_lengths;
  s["c"] = table.c;
  s["sigma"] = table.sigma;
  s["flags"] = {{"q_cap_i2_eq_qi", table.q_cap_i2_eq_qi},
                {"i2_eq_qi", table.i2_eq_qi},
                {"i3_eq_qi2", table.i3_eq_qi2},
                {"i4_eq_qi3", table.i4_eq_qi3}};
  s["reduction_number"] = table.reduction_number;
  return s;
}

json base_report(const CommonOpts& opts, const CompiledRing& ring) {
  json j;
  j["ring"] = opts.ring_path;
  j["ideal"] = opts.ideal_name;
  j["warnings"] = ring.warnings;
  return j;
}

int run_parsed(const std::string& command, const CommonOpts& opts, int power, int family_m,
               int family_d, int family_c, bool check_rr, std::ostream& out) {
  if (command == "family-emit") {
    FamilySpec spec{family_m, family_d, family_c};
    out << emit_ring_document(build_family(spec));
    return kOk;
  }

  if (command == "verify") {
    FamilySpec spec{family_m, family_d, family_c};
    Field field = opts.field_desc.empty() ? Field::rationals() : Field::parse(opts.field_desc);
    FamilyVerification v = verify_family(spec, field, opts.n_max);
    json j;
    j["family"] = {{"m", spec.m}, {"d", spec.d}, {"c", spec.effective_c()}};
    json checks = json::array();
    for (const auto& check : v.checks) {
      checks.push_back({{"name", check.name},
                        {"expected", check.expected},
                        {"computed", check.computed},
                        {"pass", check.pass}});
    }
    j["checks"] = checks;
    j["overall"] = v.all_passed ? "pass" : "fail";
    j["warnings"] = v.warnings;
    emit(j, opts, out);
    return v.all_passed ? kOk : kMismatch;
  }

  CompiledRing ring = load_ring(opts);
  json j = base_report(opts, ring);
  const IdealHandle& ideal = named_ideal(ring, opts.ideal_name);

  if (command == "length") {
    LengthValue l = artinian_length(ideal_power(ideal, power + 1));
    j["values"] = {l.value};
    j["certified_up_to"] = l.truncation_level;
  } else if (command == "coeffs") {
    const int dim = krull_dimension(ring.ring);
    PowerCache powers(ideal);
    auto lengths = hilbert_samuel_values(powers, opts.n_max);
    std::vector<long long> values;
    for (const auto& l : lengths) values.push_back(l.value);
    CoefficientFit fit = hilbert_coefficients(values, dim);
    j["values"] = values;
    j["coefficients"] = fit.e;
    j["classification"] = {{"postulation", fit.postulation}, {"dim", dim}};
    j["certified_up_to"] = opts.n_max;
  } else if (command == "series") {
    const int dim = krull_dimension(ring.ring);
    PowerCache powers(ideal);
    auto numerator = hilbert_series_numerator(powers, dim);
    j["numerator"] = numerator;
    j["coefficients"] = coefficients_from_numerator(numerator, dim);
    j["certified_up_to"] = opts.n_max;
  } else if (command == "sally-report") {
    const IdealHandle& reduction = named_ideal(ring, opts.reduction_name);
    SallyTable table = sally_table(ideal, reduction, opts.n_max);
    j["sally"] = sally_json(table);
    j["certified_up_to"] = opts.n_max;
  } else if (command == "rr") {
    IdealHandle closure = ratliff_rush(ideal, opts.n_max);
    std::vector<std::string> gens;
    for (const auto& g : closure.generators()) {
      gens.push_back(to_integer_string(g, ring.ring->variables()));
    }
    j["rr"] = {{"generators", gens}, {"gap", quotient_length(closure, ideal).value}};
    j["certified_up_to"] = opts.n_max;
  } else if (command == "depth-probe") {
    const IdealHandle& reduction = named_ideal(ring, opts.reduction_name);
    DepthProbe probe = depth_probe(ideal, reduction, opts.n_max);
    j["depth"] = {{"positive_depth", probe.positive_depth},
                  {"rr_gap_at", probe.rr_gap_at},
                  {"vv_depth_lower_bound", probe.vv_depth_lower_bound},
                  {"certified_up_to", probe.certified_up_to}};
    j["certified_up_to"] = probe.certified_up_to;
  } else if (command == "classify") {
    const IdealHandle& reduction = named_ideal(ring, opts.reduction_name);
    ClassificationReport rep = classify(ideal, reduction, opts.n_max, check_rr);
    j["classification"] = classification_json(rep);
    j["coefficients"] = rep.e;
    j["numerator"] = rep.numerator;
    j["certified_up_to"] = opts.n_max;
    auto warnings = j["warnings"].get<std::vector<std::string>>();
    for (const auto& w : rep.warnings) warnings.push_back(w);
    j["warnings"] = warnings;
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  emit(j, opts, out);
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Samuel functions, Sally-module invariants, and Ratliff-Rush closures "
               "for m-primary ideals over presented local rings"};
  app.require_subcommand(1);

  CommonOpts opts;
  int power = 0;
  int family_m = 0, family_d = 1, family_c = 0;
  bool check_rr = false;

  CLI::App* length = app.add_subcommand("length", "colength along the Hilbert-Samuel table");
  add_common_flags(length, opts, true);
  length->add_option("--power", power,
                     "Hilbert-Samuel index n: reports the length of A/I^(n+1) (default 0)");

  for (const char* name : {"coeffs", "series", "sally-report", "rr", "depth-probe", "classify"}) {
    CLI::App* cmd = app.add_subcommand(name, "");
    add_common_flags(cmd, opts, true);
    if (std::string(name) == "classify") {
      cmd->add_flag("--check-rr-filtration", check_rr,
                    "bounded check of the Ratliff-Rush filtration condition");
    }
  }

  for (const char* name : {"verify", "family-emit"}) {
    CLI::App* cmd = app.add_subcommand(name, "");
    cmd->add_option("--m", family_m, "number of x variables")->required();
    cmd->add_option("--d", family_d, "dimension")->required();
    cmd->add_option("--c", family_c, "invariant c (default: c = d)");
    add_common_flags(cmd, opts, false);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    return run_parsed(command, opts, power, family_m, family_d, family_c, check_rr, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const StabilizationError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace sally
