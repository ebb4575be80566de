#include "deagrs/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "deagrs/errors.hpp"
#include "deagrs/grs.hpp"

namespace deagrs {

namespace {

std::vector<std::size_t> selected_units(const AnalysisConfig& config, const Dataset& data) {
  std::vector<std::size_t> out;
  if (config.dmu_filter.empty()) {
    for (std::size_t j = 0; j < data.size(); ++j) out.push_back(j);
    return out;
  }
  std::vector<bool> keep(data.size(), false);
  for (const auto& name : config.dmu_filter) {
    const auto j = data.index_of(name);
    if (!j) throw DataError("unknown unit '" + name + "' in filter");
    keep[*j] = true;
  }
  for (std::size_t j = 0; j < data.size(); ++j) {
    if (keep[j]) out.push_back(j);
  }
  return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

DmuReport analyse_unit(const AnalysisConfig& config, const Dataset& data, const RamResult& ram,
                       const std::vector<std::size_t>& efficient, bool want_grs, bool want_rts) {
  DmuReport report;
  report.name = data.name(ram.dmu);
  report.scheme = ram.scheme;
  report.rho = ram.score;
  report.slack_sum = ram.slack_sum;
  report.efficient = ram.efficient;
  if (!want_grs) return report;

  const GrsResult grs = identify_grs(omega_system(data, ram, efficient), config.tol);
  GrsReport g;
  for (const std::size_t j : grs.members) g.members.push_back({data.name(j), grs.weight_of(j)});
  g.projected_inputs = to_std(grs.projected_inputs);
  g.projected_outputs = to_std(grs.projected_outputs);
  g.minimum_face_dimension = minimum_face(data, grs, config.tol).dimension;
  report.grs = std::move(g);
  if (!want_rts) return report;

  try {
    const InterceptBounds b = intercept_bounds(data, grs.projected_inputs, grs.projected_outputs, config.tol);
    report.rts = RtsReport{classify_rts(b.omega_min, b.omega_max, config.tol.rts), b.omega_min, b.omega_max};
  } catch (const NormalizationUnattainableError& e) {
    report.rts_unavailable = e.what();
  }
  return report;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (const char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_values(const std::vector<double>& a, const std::vector<double>& b, const char* sep) {
  std::string out;
  for (const auto* v : {&a, &b}) {
    for (const double x : *v) {
      if (!out.empty()) out += sep;
      out += fixed3(x);
    }
  }
  return out;
}

std::string render_json(const std::vector<DmuReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["dmu"] = r.name;
    o["scheme"] = to_string(r.scheme);
    o["rho"] = r.rho;
    o["slack_sum"] = r.slack_sum;
    o["efficient"] = r.efficient;
    if (r.grs) {
      auto members = nlohmann::ordered_json::array();
      for (const auto& m : r.grs->members) members.push_back({{"dmu", m.name}, {"weight", m.weight}});
      o["grs"] = std::move(members);
      o["projection"] = {{"inputs", r.grs->projected_inputs}, {"outputs", r.grs->projected_outputs}};
      o["minimum_face_dimension"] = r.grs->minimum_face_dimension;
    }
    if (r.rts) {
      o["rts"] = {{"class", to_string(r.rts->rts_class)}, {"omega_min", r.rts->omega_min},
                  {"omega_max", r.rts->omega_max}};
    } else if (r.rts_unavailable) {
      o["rts"] = nullptr;
      o["rts_note"] = *r.rts_unavailable;
    }
    doc.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<DmuReport>& reports) {
  std::ostringstream out;
  out << "dmu,rho,efficient,grs,projection,face_dim,rts,omega_min,omega_max\n";
  for (const auto& r : reports) {
    out << csv_escape(r.name) << ',' << fixed3(r.rho) << ',' << (r.efficient ? "yes" : "no") << ',';
    if (r.grs) {
      std::string cell;
      for (const auto& m : r.grs->members) {
        if (!cell.empty()) cell += ';';
        cell += m.name + ':' + fixed3(m.weight);
      }
      out << csv_escape(cell) << ',' << join_values(r.grs->projected_inputs, r.grs->projected_outputs, ";") << ','
          << r.grs->minimum_face_dimension;
    } else {
      out << ",,";
    }
    out << ',';
    if (r.rts) {
      out << to_string(r.rts->rts_class) << ',' << fixed3(r.rts->omega_min) << ',' << fixed3(r.rts->omega_max);
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

std::string render_table(const std::vector<DmuReport>& reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"DMU", "rho", "efficient", "Global Reference Set", "Projection", "dim", "omega_min", "omega_max",
                  "RTS"});
  for (const auto& r : reports) {
    std::vector<std::string> row{r.name, fixed3(r.rho), r.efficient ? "yes" : "no"};
    if (r.grs) {
      std::string set;
      for (const auto& m : r.grs->members) {
        if (!set.empty()) set += ' ';
        set += m.name + '(' + fixed3(m.weight) + ')';
      }
      row.push_back(set);
      row.push_back('(' + join_values(r.grs->projected_inputs, r.grs->projected_outputs, ",") + ')');
      row.push_back(std::to_string(r.grs->minimum_face_dimension));
    } else {
      row.insert(row.end(), {"", "", ""});
    }
    if (r.rts) {
      row.insert(row.end(), {fixed3(r.rts->omega_min), fixed3(r.rts->omega_max), to_string(r.rts->rts_class)});
    } else {
      row.insert(row.end(), {"", "", r.rts_unavailable ? "n/a" : ""});
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      line.append(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

std::vector<DmuReport> run_analysis(const AnalysisConfig& config, const Dataset& data) {
  const std::vector<std::size_t> units = selected_units(config, data);
  const bool want_rts = config.run_rts && config.regime == Regime::vrs;
  const bool want_grs = config.run_grs || want_rts;

  auto annotate = [&](std::size_t j, auto&& fn) {
    try {
      return fn();
    } catch (const SolverError& e) {
      throw SolverError("unit " + data.name(j) + ": " + e.what());
    } catch (const DataError& e) {
      throw DataError("unit " + data.name(j) + ": " + e.what());
    }
  };

  // The reference-set stage needs the efficient set over the whole dataset.
  std::vector<std::optional<RamResult>> ram(data.size());
  std::vector<std::size_t> efficient;
  if (want_grs) {
    for (std::size_t j = 0; j < data.size(); ++j) {
      ram[j] = annotate(j, [&] { return evaluate(data, j, config.scheme, config.regime, config.tol); });
      if (ram[j]->efficient) efficient.push_back(j);
    }
  } else {
    for (const std::size_t j : units) {
      ram[j] = annotate(j, [&] { return evaluate(data, j, config.scheme, config.regime, config.tol); });
    }
  }

  std::vector<DmuReport> reports;
  reports.reserve(units.size());
  for (const std::size_t j : units) {
    reports.push_back(annotate(j, [&] { return analyse_unit(config, data, *ram[j], efficient, want_grs, want_rts); }));
  }
  return reports;
}

std::string render_report(const std::vector<DmuReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return render_json(reports);
    case OutputFormat::csv: return render_csv(reports);
    case OutputFormat::table: return render_table(reports);
  }
  return {};
}

}  // namespace deagrs
