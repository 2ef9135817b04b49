// Copyright 2026 The symspace Authors
// SPDX-License-Identifier: Apache-2.0

#include "symspace/bench/convergence.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "symspace/quadrature.hpp"

namespace symspace::bench {

namespace {

constexpr double kKarcherFdStep = 1e-4;  // reference units

std::string signature_key(const Signature& s) {
  return "(" + std::to_string(s.num_positive) + "," + std::to_string(s.num_negative) + ")";
}

// The value rounded to 15 significant digits, so JSON dumps match the CSV.
double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

const sig::SigMatrix& lorentz_base() {
  static const sig::SigMatrix base(sig::SignatureForm::lorentzian().j(),
                                   sig::SignatureForm::lorentzian());
  return base;
}

struct QuadPoint {
  Eigen::Vector3d ref;
  double weight;
  ShapeEval shape;
};

std::vector<QuadPoint> quadrature_points(const ShapeSet& shapes, int q) {
  const GaussRule rule = gauss_legendre(q);
  std::vector<QuadPoint> out;
  out.reserve(static_cast<std::size_t>(q) * q * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const Eigen::Vector3d ref(rule.points[a], rule.points[b], rule.points[c]);
        out.push_back({ref, rule.weights[a] * rule.weights[b] * rule.weights[c], shapes.eval(ref)});
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Symspace: return "symspace";
    case Scheme::Componentwise: return "componentwise";
    case Scheme::Karcher: return "karcher";
  }
  return "unknown";
}

void validate(const GridSpec& spec) {
  if (spec.n < 1) throw Error(ErrorKind::Shape, "grid needs N >= 1");
  if (spec.degree < 1 || spec.degree > 2) throw Error(ErrorKind::Shape, "degree must be 1 or 2");
  if (spec.quad < 1) throw Error(ErrorKind::Shape, "quadrature needs at least one point per axis");
  for (int j = 0; j < 3; ++j) {
    if (!(spec.region.hi[j] > spec.region.lo[j])) {
      throw Error(ErrorKind::Shape, "region bounds must satisfy lo < hi");
    }
  }
}

int ConvergenceReport::failed_elements() const {
  int total = 0;
  for (const auto& block : blocks) {
    for (const auto& row : block.rows) total += row.failed_elements;
  }
  return total;
}

int CensusTable::total() const {
  int sum = 0;
  for (const auto& [key, value] : counts) sum += value;
  return sum;
}

int CensusTable::count(const std::string& key) const {
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

ElementInterpolant::ElementInterpolant(const GridSpec& spec, const MetricField& metric,
                                       std::array<int, 3> index)
    : spec_(spec), shapes_(ShapeSet::tensor_lagrange(3, spec.degree)) {
  for (int j = 0; j < 3; ++j) {
    size_[j] = (spec.region.hi[j] - spec.region.lo[j]) / spec.n;
    origin_[j] = spec.region.lo[j] + index[j] * size_[j];
  }
  nodal_.reserve(shapes_.size());
  for (const Eigen::VectorXd& node : shapes_.nodes()) {
    nodal_.push_back(metric.sample(physical(node.head<3>())));
  }
  if (spec_.scheme == Scheme::Symspace) {
    tangents_ = tangents_of<sig::SigChart>(nodal_, sig::SigChart(lorentz_base()));
  }
}

Point4 ElementInterpolant::physical(const Eigen::Vector3d& ref) const {
  return {spec_.region.t, origin_[0] + ref(0) * size_[0], origin_[1] + ref(1) * size_[1],
          origin_[2] + ref(2) * size_[2]};
}

sig::SigMatrix ElementInterpolant::karcher_point(
    const Eigen::VectorXd& weights, const std::optional<sig::SigMatrix>& initial) const {
  auto result = sig::interpolate_sig_karcher_weighted(nodal_, weights, initial, spec_.karcher);
  last_iterations_ = result.iterations;
  return std::move(result.point);
}

Mat ElementInterpolant::value(const Eigen::Vector3d& ref) const {
  const Eigen::VectorXd w = shapes_.values(ref);
  switch (spec_.scheme) {
    case Scheme::Symspace: {
      const sig::SigChart chart(lorentz_base());
      return chart.ambient_value(weighted_sum<Mat>(tangents_, w, chart.zero_tangent()));
    }
    case Scheme::Componentwise: {
      Mat sum = Mat::Zero(4, 4);
      for (std::size_t i = 0; i < nodal_.size(); ++i) sum += w(i) * nodal_[i].matrix();
      return sum;
    }
    case Scheme::Karcher: return karcher_point(w, std::nullopt).matrix();
  }
  return {};
}

InterpolantJet ElementInterpolant::jet(const Eigen::Vector3d& ref) const {
  return jet(ref, shapes_.eval(ref));
}

InterpolantJet ElementInterpolant::jet(const Eigen::Vector3d& ref, const ShapeEval& shape) const {
  InterpolantJet out;
  switch (spec_.scheme) {
    case Scheme::Symspace:
      out =
          jet_from_tangents<sig::SigChart>(tangents_, shape, sig::SigChart(lorentz_base()), false);
      break;
    case Scheme::Componentwise: {
      out.value = Mat::Zero(4, 4);
      out.first.assign(3, Mat::Zero(4, 4));
      for (std::size_t i = 0; i < nodal_.size(); ++i) {
        out.value += shape.values(i) * nodal_[i].matrix();
        for (int j = 0; j < 3; ++j) out.first[j] += shape.gradients(i, j) * nodal_[i].matrix();
      }
      break;
    }
    case Scheme::Karcher: {
      // Neighbouring solves start from the centre value.
      const sig::SigMatrix centre = karcher_point(shape.values, std::nullopt);
      out.value = centre.matrix();
      const int iterations = last_iterations_;
      for (int j = 0; j < 3; ++j) {
        Eigen::Vector3d plus = ref;
        Eigen::Vector3d minus = ref;
        plus(j) += kKarcherFdStep;
        minus(j) -= kKarcherFdStep;
        const Mat up = karcher_point(shapes_.values(plus), centre).matrix();
        const Mat down = karcher_point(shapes_.values(minus), centre).matrix();
        out.first.push_back((up - down) / (2.0 * kKarcherFdStep));
      }
      last_iterations_ = iterations;
      break;
    }
  }
  for (int j = 0; j < 3; ++j) out.first[j] /= size_[j];
  return out;
}

ConvergenceRow measure_errors(const GridSpec& spec, const MetricField& metric) {
  validate(spec);
  if (spec.quad < spec.degree + 1) {
    throw Error(ErrorKind::Shape, "error integrals need at least k + 1 quadrature points per axis");
  }
  const ShapeSet shapes = ShapeSet::tensor_lagrange(3, spec.degree);
  const std::vector<QuadPoint> points = quadrature_points(shapes, spec.quad);

  ConvergenceRow row;
  row.n = spec.n;
  double l2_sq = 0.0;
  double h1_sq = 0.0;
  for (int ix = 0; ix < spec.n; ++ix) {
    for (int iy = 0; iy < spec.n; ++iy) {
      for (int iz = 0; iz < spec.n; ++iz) {
        ElementDiagnostics diag;
        diag.index = {ix, iy, iz};
        try {
          const ElementInterpolant element(spec, metric, diag.index);
          double volume = 1.0;
          for (int j = 0; j < 3; ++j) {
            volume *= (spec.region.hi[j] - spec.region.lo[j]) / spec.n;
          }
          int iteration_sum = 0;
          for (const QuadPoint& qp : points) {
            const Point4 xi = element.physical(qp.ref);
            const Mat exact = metric.value(xi);
            const std::array<Mat, 4> exact_grad = metric.gradient(xi);
            const InterpolantJet jet = element.jet(qp.ref, qp.shape);
            const double w = qp.weight * volume;
            diag.l2_sq += w * (jet.value - exact).squaredNorm();
            // ξ = (t, x, y, z); the interpolant does not depend on t.
            double grad_sq = exact_grad[0].squaredNorm();
            for (int j = 0; j < 3; ++j) grad_sq += (jet.first[j] - exact_grad[j + 1]).squaredNorm();
            diag.h1_sq += w * grad_sq;
            if (spec.scheme == Scheme::Karcher) {
              iteration_sum += element.last_karcher_iterations();
              diag.karcher_iterations_max =
                  std::max(diag.karcher_iterations_max, element.last_karcher_iterations());
            }
          }
          if (spec.scheme == Scheme::Karcher) {
            diag.karcher_iterations_mean = static_cast<double>(iteration_sum) / points.size();
          }
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::Horizon) throw;
          diag = ElementDiagnostics{};
          diag.index = {ix, iy, iz};
          diag.failed = true;
          diag.error = e.what();
          ++row.failed_elements;
        }
        l2_sq += diag.l2_sq;
        h1_sq += diag.h1_sq;
        row.elements.push_back(std::move(diag));
      }
    }
  }
  row.l2_error = std::sqrt(l2_sq);
  row.h1_error = std::sqrt(h1_sq);
  return row;
}

ConvergenceReport run_convergence(const ConvergenceStudy& study, const MetricField& metric) {
  ConvergenceReport report;
  report.metric = metric.name();
  report.scheme = study.scheme;
  report.quad = study.quad;
  for (int k : study.degrees) {
    ConvergenceBlock block;
    block.degree = k;
    for (int n : study.ns) {
      GridSpec spec{study.region, n, k, study.scheme, study.quad, study.karcher};
      ConvergenceRow row = measure_errors(spec, metric);
      if (!block.rows.empty() && block.rows.back().n * 2 == n) {
        const ConvergenceRow& prev = block.rows.back();
        row.l2_order = std::log2(prev.l2_error / row.l2_error);
        row.h1_order = std::log2(prev.h1_error / row.h1_error);
      }
      block.rows.push_back(std::move(row));
    }
    report.blocks.push_back(std::move(block));
  }
  return report;
}

CensusTable run_signature_census(const GridSpec& spec, const MetricField& metric) {
  validate(spec);
  const GaussRule rule = gauss_legendre(spec.quad);
  CensusTable table;
  table.metric = metric.name();
  table.scheme = spec.scheme;
  table.n = spec.n;
  table.degree = spec.degree;
  table.quad = spec.quad;
  const int per_element = spec.quad * spec.quad * spec.quad;
  for (int ix = 0; ix < spec.n; ++ix) {
    for (int iy = 0; iy < spec.n; ++iy) {
      for (int iz = 0; iz < spec.n; ++iz) {
        std::optional<ElementInterpolant> element;
        try {
          element.emplace(spec, metric, std::array<int, 3>{ix, iy, iz});
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::Horizon) throw;
          table.counts["error:" + std::string(to_string(e.kind()))] += per_element;
          continue;
        }
        for (int a = 0; a < spec.quad; ++a) {
          for (int b = 0; b < spec.quad; ++b) {
            for (int c = 0; c < spec.quad; ++c) {
              const Eigen::Vector3d ref(rule.points[a], rule.points[b], rule.points[c]);
              std::string key;
              try {
                key = signature_key(sym_signature(element->value(ref)));
              } catch (const Error& e) {
                key = e.kind() == ErrorKind::DegenerateSignature
                          ? "degenerate"
                          : "error:" + std::string(to_string(e.kind()));
              }
              ++table.counts[key];
            }
          }
        }
      }
    }
  }
  return table;
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report) {
  const auto flags = out.flags();
  const auto precision = out.precision(15);
  bool first = true;
  for (const ConvergenceBlock& block : report.blocks) {
    if (!first) out << '\n';
    first = false;
    out << "# metric=" << report.metric << " scheme=" << to_string(report.scheme)
        << " degree=" << block.degree << " quad=" << report.quad << '\n';
    out << "N,L2_error,L2_order,H1_error,H1_order\n";
    for (const ConvergenceRow& row : block.rows) {
      out << row.n << ',' << row.l2_error << ',';
      if (row.l2_order) out << *row.l2_order;
      out << ',' << row.h1_error << ',';
      if (row.h1_order) out << *row.h1_order;
      out << '\n';
    }
  }
  out.precision(precision);
  out.flags(flags);
}

void write_convergence_json(std::ostream& out, const ConvergenceReport& report) {
  using nlohmann::json;
  json doc;
  doc["metric"] = report.metric;
  doc["scheme"] = std::string(to_string(report.scheme));
  doc["quad"] = report.quad;
  doc["failed_elements"] = report.failed_elements();
  json blocks = json::array();
  for (const ConvergenceBlock& block : report.blocks) {
    json rows = json::array();
    for (const ConvergenceRow& row : block.rows) {
      json r;
      r["N"] = row.n;
      r["L2_error"] = round15(row.l2_error);
      r["L2_order"] = row.l2_order ? json(round15(*row.l2_order)) : json(nullptr);
      r["H1_error"] = round15(row.h1_error);
      r["H1_order"] = row.h1_order ? json(round15(*row.h1_order)) : json(nullptr);
      r["failed_elements"] = row.failed_elements;
      json elements = json::array();
      for (const ElementDiagnostics& e : row.elements) {
        json je;
        je["index"] = e.index;
        je["L2_sq"] = round15(e.l2_sq);
        je["H1_sq"] = round15(e.h1_sq);
        je["failed"] = e.failed;
        if (e.failed) je["error"] = e.error;
        if (report.scheme == Scheme::Karcher) {
          je["karcher_iterations_max"] = e.karcher_iterations_max;
          je["karcher_iterations_mean"] = round15(e.karcher_iterations_mean);
        }
        elements.push_back(std::move(je));
      }
      r["elements"] = std::move(elements);
      rows.push_back(std::move(r));
    }
    blocks.push_back({{"degree", block.degree}, {"rows", std::move(rows)}});
  }
  doc["blocks"] = std::move(blocks);
  out << doc.dump(2) << '\n';
}

void write_census_csv(std::ostream& out, const std::vector<CensusTable>& tables) {
  bool first = true;
  for (const CensusTable& table : tables) {
    if (!first) out << '\n';
    first = false;
    out << "# metric=" << table.metric << " scheme=" << to_string(table.scheme) << " N=" << table.n
        << " degree=" << table.degree << " quad=" << table.quad << '\n';
    out << "signature,count\n";
    for (const auto& [key, value] : table.counts) out << key << ',' << value << '\n';
  }
}

void write_census_json(std::ostream& out, const std::vector<CensusTable>& tables) {
  using nlohmann::json;
  json doc = json::array();
  for (const CensusTable& table : tables) {
    doc.push_back({{"metric", table.metric},
                   {"scheme", std::string(to_string(table.scheme))},
                   {"N", table.n},
                   {"degree", table.degree},
                   {"quad", table.quad},
                   {"total", table.total()},
                   {"counts", table.counts}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace symspace::bench
