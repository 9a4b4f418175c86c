#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include <Eigen/Core>

namespace schnorr {

struct NelderMeadOptions {
  int max_iterations = 500;
  double tolerance = 1e-8;       // on the spread of simplex values
  double initial_step = 0.5;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill simplex with the usual coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2).
template <typename Objective>
NelderMeadResult nelder_mead(Objective&& f, const Eigen::VectorXd& start,
                             const NelderMeadOptions& options = {}) {
  const Eigen::Index dim = start.size();
  NelderMeadResult result;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return static_cast<double>(f(x));
  };
  if (dim == 0) {
    result.x = start;
    result.value = eval(start);
    result.converged = true;
    return result;
  }

  std::vector<Eigen::VectorXd> simplex(dim + 1, start);
  std::vector<double> values(dim + 1);
  for (Eigen::Index i = 0; i < dim; ++i) simplex[i + 1][i] += options.initial_step;
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Eigen::VectorXd> s;
    std::vector<double> v;
    for (auto i : order) {
      s.push_back(simplex[i]);
      v.push_back(values[i]);
    }
    simplex = std::move(s);
    values = std::move(v);
  };

  sort_simplex();
  while (result.iterations < options.max_iterations) {
    if (values.back() - values.front() <= options.tolerance) {
      result.converged = true;
      break;
    }
    ++result.iterations;
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i) centroid += simplex[i];
    centroid /= static_cast<double>(dim);

    const Eigen::VectorXd& worst = simplex.back();
    const Eigen::VectorXd reflected = centroid + (centroid - worst);
    const double fr = eval(reflected);
    if (fr < values.front()) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - worst);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex.back() = expanded;
        values.back() = fe;
      } else {
        simplex.back() = reflected;
        values.back() = fr;
      }
    } else if (fr < values[dim - 1]) {
      simplex.back() = reflected;
      values.back() = fr;
    } else {
      const bool outside = fr < values.back();
      const Eigen::VectorXd contracted =
          outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                  : Eigen::VectorXd(centroid + 0.5 * (worst - centroid));
      const double fc = eval(contracted);
      if (fc < (outside ? fr : values.back())) {
        simplex.back() = contracted;
        values.back() = fc;
      } else {
        for (Eigen::Index i = 1; i <= dim; ++i) {
          simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0]);
          values[i] = eval(simplex[i]);
        }
      }
    }
    sort_simplex();
  }
  if (!result.converged && values.back() - values.front() <= options.tolerance)
    result.converged = true;
  result.x = simplex.front();
  result.value = values.front();
  return result;
}

}  // namespace schnorr
