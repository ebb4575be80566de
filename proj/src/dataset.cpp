#include "deagrs/dataset.hpp"

#include <algorithm>
#include <unordered_set>

#include "deagrs/errors.hpp"

namespace deagrs {

namespace {

std::vector<std::string> default_labels(char prefix, Eigen::Index count) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return labels;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> names, Eigen::MatrixXd inputs, Eigen::MatrixXd outputs)
    : names_(std::move(names)),
      input_labels_(default_labels('x', inputs.rows())),
      output_labels_(default_labels('y', outputs.rows())),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  validate();
}

Dataset::Dataset(std::vector<std::string> names, std::vector<std::string> input_labels,
                 std::vector<std::string> output_labels, Eigen::MatrixXd inputs, Eigen::MatrixXd outputs)
    : names_(std::move(names)),
      input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  validate();
}

void Dataset::validate() const {
  const auto n = static_cast<Eigen::Index>(names_.size());
  if (n == 0) throw DataError("dataset has no units");
  if (inputs_.rows() == 0) throw DataError("dataset has no inputs");
  if (outputs_.rows() == 0) throw DataError("dataset has no outputs");
  if (inputs_.cols() != n || outputs_.cols() != n) {
    throw DimensionError("data matrices must have one column per unit (" + std::to_string(n) + ")");
  }
  if (input_labels_.size() != static_cast<std::size_t>(inputs_.rows()) ||
      output_labels_.size() != static_cast<std::size_t>(outputs_.rows())) {
    throw DimensionError("label count does not match data rows");
  }
  if (!inputs_.allFinite() || !outputs_.allFinite()) throw DataError("data contains non-finite values");

  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw DataError("duplicate unit name '" + name + "'");
  }
}

std::optional<std::size_t> Dataset::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Dataset Dataset::with_unit(std::string name, const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != inputs_.rows() || y.size() != outputs_.rows()) {
    throw DimensionError("appended unit has the wrong number of inputs or outputs");
  }
  auto names = names_;
  names.push_back(std::move(name));
  Eigen::MatrixXd in(inputs_.rows(), inputs_.cols() + 1);
  in << inputs_, x;
  Eigen::MatrixXd out(outputs_.rows(), outputs_.cols() + 1);
  out << outputs_, y;
  return Dataset(std::move(names), input_labels_, output_labels_, std::move(in), std::move(out));
}

}  // namespace deagrs
