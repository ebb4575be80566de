#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace deagrs {

/**
 * Observed input/output data for n decision-making units.
 *
 * Inputs are stored m x n and outputs s x n, one column per unit, so that
 * `inputs().col(j)` is the input vector of unit j.  Negative entries are
 * allowed; non-finite ones are not.
 */
class Dataset {
 public:
  /// Labels default to x1..xm and y1..ys.
  Dataset(std::vector<std::string> names, Eigen::MatrixXd inputs, Eigen::MatrixXd outputs);

  Dataset(std::vector<std::string> names, std::vector<std::string> input_labels,
          std::vector<std::string> output_labels, Eigen::MatrixXd inputs, Eigen::MatrixXd outputs);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t num_inputs() const noexcept { return static_cast<std::size_t>(inputs_.rows()); }
  std::size_t num_outputs() const noexcept { return static_cast<std::size_t>(outputs_.rows()); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t j) const { return names_.at(j); }
  const std::vector<std::string>& input_labels() const noexcept { return input_labels_; }
  const std::vector<std::string>& output_labels() const noexcept { return output_labels_; }

  const Eigen::MatrixXd& inputs() const noexcept { return inputs_; }
  const Eigen::MatrixXd& outputs() const noexcept { return outputs_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Copy of this dataset with one more unit appended.
  Dataset with_unit(std::string name, const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

 private:
  void validate() const;

  std::vector<std::string> names_;
  std::vector<std::string> input_labels_;
  std::vector<std::string> output_labels_;
  Eigen::MatrixXd inputs_;
  Eigen::MatrixXd outputs_;
};

}  // namespace deagrs
