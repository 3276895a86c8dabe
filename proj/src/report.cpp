#include "addlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace addlab {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonWriter::comma() {
  if (need_comma_) out_ += ',';
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += '{';
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& k) {
  if (!k.empty()) key(k);
  comma();
  out_ += '[';
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  comma();
  out_ += '"';
  out_ += json_escape(k);
  out_ += "\":";
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  comma();
  out_ += format_double(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  comma();
  out_ += std::to_string(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(int v) { return value((long long)v); }

JsonWriter& JsonWriter::value(unsigned long long v) {
  comma();
  out_ += std::to_string(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  comma();
  out_ += '"';
  out_ += json_escape(v);
  out_ += '"';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::null_value() {
  comma();
  out_ += "null";
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::raw(const std::string& json) {
  comma();
  out_ += json;
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, double v) { return key(k), value(v); }
JsonWriter& JsonWriter::field(const std::string& k, long long v) { return key(k), value(v); }
JsonWriter& JsonWriter::field(const std::string& k, int v) { return key(k), value(v); }
JsonWriter& JsonWriter::field(const std::string& k, unsigned long long v) {
  return key(k), value(v);
}
JsonWriter& JsonWriter::field(const std::string& k, bool v) { return key(k), value(v); }
JsonWriter& JsonWriter::field(const std::string& k, const std::string& v) {
  return key(k), value(v);
}
JsonWriter& JsonWriter::field(const std::string& k, const char* v) {
  return key(k), value(std::string(v));
}
JsonWriter& JsonWriter::null_field(const std::string& k) { return key(k), null_value(); }

namespace {

bool family_uses_n(Family f) {
  return f == Family::AntisymmetricSubspace || f == Family::BellExtension;
}

void write_spec(JsonWriter& w, const ConstructionSpec& spec) {
  w.begin_object();
  w.field("family", family_name(spec.family));
  w.field("d", spec.d);
  if (family_uses_n(spec.family))
    w.field("n", spec.n);
  else
    w.null_field("n");
  if (spec.lambdas) {
    w.begin_array("lambdas");
    for (const Complex& z : *spec.lambdas) {
      w.begin_array();
      w.value(z.real());
      w.value(z.imag());
      w.end_array();
    }
    w.end_array();
  } else {
    w.null_field("lambdas");
  }
  w.end_object();
}

void write_oracle_config(JsonWriter& w, const OracleConfig& cfg) {
  w.key("config").begin_object();
  w.field("restarts", cfg.restarts);
  w.field("maxIterations", cfg.max_iterations);
  w.field("tolerance", cfg.tolerance);
  w.field("seed", (unsigned long long)cfg.seed);
  w.end_object();
}

void write_oracle_estimate(JsonWriter& w, const OracleEstimate& est, const OracleConfig& cfg,
                           const std::string& target) {
  w.begin_object();
  if (!target.empty()) w.field("target", target);
  w.field("value", est.value);
  w.field("boundDirection", bound_side_name(est.side));
  w.key("bestWitness").begin_object();
  w.begin_array("dims");
  for (int d : est.best_witness.dims) w.value(d);
  w.end_array();
  w.begin_array("coefficients");
  for (const Complex& z : est.best_witness.coeffs) {
    w.begin_array();
    w.value(z.real());
    w.value(z.imag());
    w.end_array();
  }
  w.end_array();
  w.end_object();
  w.field("restartsConverged", est.restarts_converged);
  w.field("iterationsUsed", est.iterations_used);
  w.field("restartSpread", est.restart_spread);
  write_oracle_config(w, cfg);
  w.end_object();
}

void write_bound_report(JsonWriter& w, const BoundReport& rep) {
  w.begin_object();
  w.field("C", rep.C);
  w.field("c", rep.c);
  w.field("breaks", rep.breaks);
  w.field("margin", rep.margin);
  if (rep.m_assumed) w.field("mAssumed", *rep.m_assumed);
  w.end_object();
}

}  // namespace

std::string construction_spec_json(const ConstructionSpec& spec) {
  JsonWriter w;
  write_spec(w, spec);
  return w.str();
}

std::string oracle_estimate_json(const OracleEstimate& est, const OracleConfig& cfg,
                                 const std::string& target) {
  JsonWriter w;
  write_oracle_estimate(w, est, cfg, target);
  return w.str();
}

std::string construct_summary_json(const ConstructionSpec& spec, const SubspaceBasis& basis,
                                   const OracleEstimate& max_schmidt, const OracleConfig& cfg) {
  JsonWriter w;
  w.begin_object();
  w.key("spec");
  write_spec(w, spec);
  w.field("dimension", basis.dim());
  w.begin_array("ambientDims");
  for (int d : basis.ambient_dims) w.value(d);
  w.end_array();
  w.field("orthonormalityResidual", basis.orthonormality_residual());
  w.key("maxSchmidt");
  write_oracle_estimate(w, max_schmidt, cfg, "max-schmidt");
  w.end_object();
  return w.str();
}

std::string witness_report_json(const WitnessReport& rep) {
  JsonWriter w;
  w.begin_object();
  w.key("spec");
  write_spec(w, rep.spec);
  w.field("p", rep.p);
  w.key("analytic");
  write_bound_report(w, rep.analytic);
  w.key("numericSingleCopy");
  write_oracle_estimate(w, rep.numeric_single_copy, OracleConfig{}, "min-output-entropy");
  w.field("compositeWitnessEntropy", rep.composite_witness_entropy);
  w.field("compositeMu1Sq", rep.composite_mu1sq);
  w.begin_array("links");
  for (const ChainLink& link : rep.links) {
    w.begin_object();
    w.field("name", link.name);
    w.field("lhs", link.lhs);
    w.field("rhs", link.rhs);
    w.field("holds", link.holds);
    w.end_object();
  }
  w.end_array();
  w.field("violationCertified", rep.violation_certified);
  w.field("certification", rep.certification);
  w.field("cEffective2", rep.c_effective_2);
  if (rep.md_estimate) w.field("mdEstimate", *rep.md_estimate);
  if (rep.md_lower) w.field("mdLower", *rep.md_lower);
  w.end_object();
  return w.str();
}

std::string region_scan_json(const RegionScan& scan) {
  JsonWriter w;
  w.begin_object();
  w.field("family", family_name(scan.family));
  if (scan.family == Family::Parthasarathy) w.field("m", scan.m);
  if (!scan.d0_by_p.empty()) {
    w.begin_array("d0ByP");
    for (const auto& [p, d0] : scan.d0_by_p) {
      w.begin_object();
      w.field("p", p);
      w.field("d0", d0);
      w.end_object();
    }
    w.end_array();
  }
  w.begin_array("rows");
  for (const RegionScanRow& row : scan.rows) {
    w.begin_object();
    w.field("p", row.p);
    w.field("d", row.d);
    w.field("member", membership_name(row.member));
    if (row.n_or_x0)
      w.field("nOrX0", *row.n_or_x0);
    else
      w.null_field("nOrX0");
    auto opt = [&](const char* k, const std::optional<double>& v) {
      if (v)
        w.field(k, *v);
      else
        w.null_field(k);
    };
    opt("C", row.C);
    opt("c", row.c);
    opt("margin", row.margin);
    if (row.r) w.field("r", *row.r);
    if (row.bracket_a) w.field("bracketA", *row.bracket_a);
    if (row.bracket_b) w.field("bracketB", *row.bracket_b);
    if (row.all_f_nonpositive) w.field("allFNegative", *row.all_f_nonpositive);
    if (row.census_formula) w.field("censusFormula", *row.census_formula);
    if (row.census_strict) w.field("censusStrict", *row.census_strict);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string region_scan_csv(const RegionScan& scan) {
  std::string out;
  out += "# addlab region-scan\n";
  out += "# family=" + family_name(scan.family) + "\n";
  if (scan.family == Family::Parthasarathy) out += "# m=" + format_double(scan.m) + "\n";
  for (const auto& [p, d0] : scan.d0_by_p)
    out += "# d0[p=" + format_double(p) + "]=" + std::to_string(d0) + "\n";
  out += "family,p,d,member,n_or_x0,C,c,margin\n";
  const std::string fam = family_name(scan.family);
  for (const RegionScanRow& row : scan.rows) {
    out += fam + ',' + format_double(row.p) + ',' + std::to_string(row.d) + ',' +
           membership_name(row.member) + ',';
    auto cell = [&](const std::optional<double>& v) {
      if (v) out += format_double(*v);
    };
    cell(row.n_or_x0);
    out += ',';
    cell(row.C);
    out += ',';
    cell(row.c);
    out += ',';
    cell(row.margin);
    out += '\n';
  }
  return out;
}

ConstructionSpec construction_spec_from_json(const std::string& json) {
  const nlohmann::json j = nlohmann::json::parse(json);
  ConstructionSpec spec;
  const auto fam = family_from_name(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("construction spec: unknown family");
  spec.family = *fam;
  spec.d = j.at("d").get<int>();
  if (j.contains("n") && !j["n"].is_null()) spec.n = j["n"].get<int>();
  if (j.contains("lambdas") && !j["lambdas"].is_null()) {
    std::vector<Complex> lambdas;
    for (const auto& pair : j["lambdas"])
      lambdas.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    spec.lambdas = std::move(lambdas);
  }
  return spec;
}

}  // namespace addlab
