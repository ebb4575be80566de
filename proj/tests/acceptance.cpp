// Acceptance checks against the worked 8-unit example and the property
// suites.  Prints one PASS/FAIL line per criterion; exit status is the number
// of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "deagrs/analysis.hpp"
#include "deagrs/errors.hpp"
#include "deagrs/grs.hpp"
#include "deagrs/rts.hpp"
#include "support/oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using deagrs::Dataset;
using deagrs::Regime;
using deagrs::WeightScheme;
using Members = std::vector<std::size_t>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what();
  }
  if (!out.pass) ++failures;
  std::printf("%s  [%d] %s%s%s\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.str().empty() ? "" : " : ",
              out.detail.str().c_str());
  std::fflush(stdout);
}

Dataset example() { return deagrs::load_dataset(DEAGRS_DATA_DIR "/table1.csv"); }

deagrs::OmegaSystem omega_for(const Dataset& d, std::size_t o, Regime regime = Regime::vrs) {
  std::vector<deagrs::RamResult> all;
  for (std::size_t j = 0; j < d.size(); ++j) all.push_back(deagrs::evaluate(d, j, WeightScheme::ram, regime));
  return deagrs::omega_system(d, all[o], deagrs::efficient_set(all));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main() {
  const Dataset d = example();

  report(1, "efficiency scores of the 8-unit example within 5e-4, runtime < 1 s", [&](Outcome& out) {
    const double expected[] = {1, 1, 1, 1, 0.786, 0.714, 0.786, 0.643};
    const auto start = Clock::now();
    std::vector<double> rho;
    for (std::size_t j = 0; j < d.size(); ++j) rho.push_back(deagrs::evaluate(d, j).score);
    const double elapsed = seconds_since(start);
    for (std::size_t j = 0; j < d.size(); ++j) {
      out.require(std::abs(rho[j] - expected[j]) <= 5e-4, d.name(j) + " rho " + fmt(rho[j]));
    }
    out.require(elapsed < 1.0, "took " + fmt(elapsed) + " s");
    out.detail << (out.pass ? "elapsed " + fmt(elapsed) + " s" : "");
  });

  report(2, "reference sets equal {1},{2},{2,3,4},{4},{4},{2},{2,3,4},{2,3,4}; weights > 1e-7, sum 1, rows 1e-9",
         [&](Outcome& out) {
           const Members expected[] = {{0}, {1}, {1, 2, 3}, {3}, {3}, {1}, {1, 2, 3}, {1, 2, 3}};
           for (std::size_t o = 0; o < d.size(); ++o) {
             const auto om = omega_for(d, o);
             const auto g = deagrs::identify_grs(om);
             out.require(g.members == expected[o], d.name(o) + " members differ");
             for (const auto j : g.members) out.require(g.weight_of(j) > 1e-7, d.name(o) + " weight too small");
             out.require(std::abs(g.weights.sum() - 1.0) <= 1e-9, d.name(o) + " weights do not sum to 1");

             Eigen::VectorXd lam(static_cast<Eigen::Index>(om.efficient_indices.size()));
             for (std::size_t k = 0; k < om.efficient_indices.size(); ++k) {
               lam[static_cast<Eigen::Index>(k)] = g.weight_of(om.efficient_indices[k]);
             }
             const double r1 = (om.inputs * lam + g.input_slacks - om.target_inputs).cwiseAbs().maxCoeff();
             const double r2 = (om.outputs * lam - g.output_slacks - om.target_outputs).cwiseAbs().maxCoeff();
             const double r3 = std::abs(om.input_row_weights.dot(g.input_slacks) +
                                        om.output_row_weights.dot(g.output_slacks) - om.slack_budget);
             out.require(std::max({r1, r2, r3}) <= 1e-9, d.name(o) + " violates an optimal-set row");
             out.require(g.input_slacks.minCoeff() >= 0.0 && g.output_slacks.minCoeff() >= 0.0,
                         d.name(o) + " negative slack");
           }
         });

  report(3, "DMU8 interior projection lies strictly inside the (2,5)-(5,8) edge", [&](Outcome& out) {
    const auto g = deagrs::identify_grs(d, 7);
    const Eigen::Vector2d p(g.projected_inputs[0], g.projected_outputs[0]);
    const Eigen::Vector2d a(2, 5);
    const Eigen::Vector2d b(5, 8);
    const double t = (p - a).dot(b - a) / (b - a).squaredNorm();
    const double off_segment = (p - (a + std::clamp(t, 0.0, 1.0) * (b - a))).norm();
    out.require(off_segment <= 1e-7, "distance to segment " + fmt(off_segment));
    out.require((p - a).norm() > 1e-7 && (p - b).norm() > 1e-7, "projection sits on an endpoint");
    out.detail << "P = (" << fmt(p[0]) << ", " << fmt(p[1]) << ")";
  });

  report(4, "minimum faces: DMU7, DMU8 -> conv{DMU2,DMU3,DMU4} of dimension 1; DMU5, DMU6 -> dimension 0",
         [&](Outcome& out) {
           for (const std::size_t o : {6u, 7u}) {
             const auto face = deagrs::minimum_face(d, deagrs::identify_grs(d, o));
             out.require(face.vertex_indices == Members{1, 2, 3}, d.name(o) + " face vertices");
             out.require(face.dimension == 1, d.name(o) + " dimension " + std::to_string(face.dimension));
           }
           for (const std::size_t o : {4u, 5u}) {
             const auto face = deagrs::minimum_face(d, deagrs::identify_grs(d, o));
             out.require(face.dimension == 0, d.name(o) + " dimension " + std::to_string(face.dimension));
           }
         });

  report(5, "RTS classes IRS,CRS,DRS,DRS,DRS,CRS,DRS,DRS; intercepts 0.600, 1.500 (1e-6), -0.333 (5e-4)",
         [&](Outcome& out) {
           const char* expected[] = {"IRS", "CRS", "DRS", "DRS", "DRS", "CRS", "DRS", "DRS"};
           for (std::size_t o = 0; o < d.size(); ++o) {
             const auto r = deagrs::rts_of_dmu(d, o);
             out.require(std::string(deagrs::to_string(r.rts_class)) == expected[o], d.name(o) + " class");
           }
           const auto at = [&](double x, double y) {
             return deagrs::intercept_bounds(d, Eigen::VectorXd::Constant(1, x), Eigen::VectorXd::Constant(1, y));
           };
           const double w4 = at(5, 8).omega_min;
           const double w2 = at(2, 5).omega_max;
           const double w1 = at(1, 2).omega_max;
           out.require(std::abs(w4 - 0.6) <= 1e-6, "omega_min at DMU4 = " + fmt(w4));
           out.require(std::abs(w2 - 1.5) <= 1e-6, "omega_max at DMU2 = " + fmt(w2));
           out.require(std::abs(w1 - (-0.333)) <= 5e-4, "omega_max at DMU1 = " + fmt(w1));
         });

  report(6, "identify_grs = oracle_grs and slack-model support within the set, 100 + 20 random instances, < 60 s",
         [&](Outcome& out) {
           std::mt19937_64 rng(6006);
           std::uniform_int_distribution<std::size_t> units(2, 12);
           std::uniform_int_distribution<std::size_t> dims(1, 3);
           const auto start = Clock::now();
           std::size_t dmus = 0;
           for (int instance = 0; instance < 120; ++instance) {
             const bool negative = instance >= 100;
             const Dataset data = deagrs::testing::random_dataset(rng, units(rng), dims(rng), dims(rng),
                                                                  negative ? -5.0 : 1.0, 10.0);
             for (std::size_t o = 0; o < data.size(); ++o, ++dmus) {
               const auto om = omega_for(data, o);
               const auto g = deagrs::identify_grs(om);
               const auto oracle = deagrs::oracle_grs(om);
               out.require(g.members == oracle, "instance " + std::to_string(instance) + " unit " +
                                                    std::to_string(o) + " differs from oracle");
               const auto ram = deagrs::evaluate(data, o);
               for (std::size_t j = 0; j < data.size(); ++j) {
                 if (ram.lambda[static_cast<Eigen::Index>(j)] > 1e-7) {
                   out.require(std::binary_search(g.members.begin(), g.members.end(), j),
                               "instance " + std::to_string(instance) + ": slack-model support not covered");
                 }
               }
             }
           }
           const double elapsed = seconds_since(start);
           out.require(elapsed < 60.0, "took " + fmt(elapsed) + " s");
           if (out.pass) out.detail << dmus << " units, " << fmt(elapsed) << " s";
         });

  report(7, "maximal-support size equals brute-force enumeration on 200 random systems", [&](Outcome& out) {
    std::mt19937_64 rng(7007);
    std::uniform_int_distribution<int> rows(1, 4);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> pick(0, 3);
    deagrs::Tolerances tol;
    int homogeneous_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int p = rows(rng);
      const int q1 = std::uniform_int_distribution<int>(1, 6)(rng);
      const int q2 = std::uniform_int_distribution<int>(0, 6 - q1)(rng);
      Eigen::MatrixXd a(p, q1);
      Eigen::MatrixXd b(p, q2);
      for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = entry(rng);
      for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = entry(rng);
      const bool homogeneous = trial % 4 == 0;
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(p);
      if (homogeneous) {
        ++homogeneous_count;
      } else {
        Eigen::VectorXd z(q1 + q2);
        do {
          for (int j = 0; j < q1 + q2; ++j) z[j] = pick(rng) == 0 ? 0.0 : pick(rng);
          rhs = a * z.head(q1) + b * z.tail(q2);
        } while (rhs.isZero());
      }
      const auto sol = deagrs::max_support_solution(a, b, homogeneous ? std::nullopt : std::optional(rhs), tol);
      const auto expected = deagrs::testing::brute_force_max_support(a, b, rhs);
      out.require(sol.support_size(tol.support) == expected,
                  "trial " + std::to_string(trial) + ": " + std::to_string(sol.support_size(tol.support)) +
                      " vs " + std::to_string(expected));
      out.require((a * sol.u + b * sol.v - rhs).cwiseAbs().maxCoeff() <= 1e-7,
                  "trial " + std::to_string(trial) + ": point not feasible");
    }
    if (out.pass) out.detail << homogeneous_count << " homogeneous, " << 200 - homogeneous_count << " with rhs";
  });

  report(8, "5 random strict-interior points of each inefficient unit's face share its RTS class", [&](Outcome& out) {
    std::mt19937_64 rng(8008);
    std::uniform_real_distribution<double> weight(0.01, 1.0);
    for (std::size_t o = 0; o < d.size(); ++o) {
      if (deagrs::evaluate(d, o).efficient) continue;
      const auto g = deagrs::identify_grs(d, o);
      const auto base = deagrs::rts_of_dmu(d, o).rts_class;
      for (int k = 0; k < 5; ++k) {
        std::vector<double> w(g.members.size());
        double total = 0.0;
        for (auto& v : w) total += (v = weight(rng));
        Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d.num_inputs()));
        Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d.num_outputs()));
        for (std::size_t i = 0; i < g.members.size(); ++i) {
          const auto j = static_cast<Eigen::Index>(g.members[i]);
          x += w[i] / total * d.inputs().col(j);
          y += w[i] / total * d.outputs().col(j);
        }
        const auto b = deagrs::intercept_bounds(d, x, y);
        out.require(deagrs::classify_rts(b.omega_min, b.omega_max, 1e-6) == base,
                    d.name(o) + ": anchor changes the class");
      }
    }
  });

  report(9, "report on a 70-unit, 5-input, 3-output CSV completes in < 10 s", [&](Outcome& out) {
    std::mt19937_64 rng(9009);
    std::uniform_real_distribution<double> value(1.0, 100.0);
    const auto path = std::filesystem::temp_directory_path() / "deagrs_acceptance_70x8.csv";
    {
      std::ofstream f(path);
      f << "dmu,in:x1,in:x2,in:x3,in:x4,in:x5,out:y1,out:y2,out:y3\n";
      f.precision(10);
      for (int j = 1; j <= 70; ++j) {
        f << "S" << j;
        for (int c = 0; c < 8; ++c) f << ',' << value(rng);
        f << '\n';
      }
    }
    const auto start = Clock::now();
#ifdef DEAGRS_CLI_PATH
    const std::string cmd = std::string("\"") + DEAGRS_CLI_PATH + "\" report --data \"" + path.string() +
                            "\" --format json > \"" + path.string() + ".out\"";
    const int rc = std::system(cmd.c_str());
    out.require(rc == 0, "cli exit status " + std::to_string(rc));
    std::ifstream result(path.string() + ".out");
    const std::string text((std::istreambuf_iterator<char>(result)), std::istreambuf_iterator<char>());
    out.require(std::count(text.begin(), text.end(), '"') > 0 && text.find("\"S70\"") != std::string::npos,
                "report output incomplete");
    const char* via = "cli";
#else
    const auto reports = deagrs::run_analysis({}, deagrs::load_dataset(path));
    out.require(reports.size() == 70, "report incomplete");
    const char* via = "library";
#endif
    const double elapsed = seconds_since(start);
    out.require(elapsed < 10.0, "took " + fmt(elapsed) + " s");
    if (out.pass) out.detail << via << ", " << fmt(elapsed) << " s";
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".out");
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
