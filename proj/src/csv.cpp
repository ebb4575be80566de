#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "deagrs/analysis.hpp"
#include "deagrs/errors.hpp"

namespace deagrs {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_real(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

enum class Role { input, output };

}  // namespace

Dataset parse_dataset(std::string_view text) {
  using Kind = ParseError::Kind;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Role> roles;  // per data column (after the name column)
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<std::string> names;
  std::vector<std::vector<double>> input_rows;
  std::vector<std::vector<double>> output_rows;
  std::unordered_set<std::string> seen;
  bool have_header = false;
  std::size_t header_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split_cells(line);

    if (!have_header) {
      header_line = line_no;
      if (cells.front() != "dmu") {
        throw ParseError(Kind::malformed_header, line_no, 1, "first header cell must be 'dmu'");
      }
      for (std::size_t c = 1; c < cells.size(); ++c) {
        const std::string_view cell = cells[c];
        if (cell.starts_with("in:") && cell.size() > 3) {
          roles.push_back(Role::input);
          input_labels.emplace_back(cell.substr(3));
        } else if (cell.starts_with("out:") && cell.size() > 4) {
          roles.push_back(Role::output);
          output_labels.emplace_back(cell.substr(4));
        } else {
          throw ParseError(Kind::malformed_header, line_no, c + 1,
                           "header cell '" + std::string(cell) + "' is not of the form in:<label> or out:<label>");
        }
      }
      if (input_labels.empty() || output_labels.empty()) {
        throw ParseError(Kind::malformed_header, line_no, 1, "header needs at least one in: and one out: column");
      }
      have_header = true;
      continue;
    }

    if (cells.size() != roles.size() + 1) {
      throw ParseError(Kind::ragged_row, line_no, std::min(cells.size(), roles.size() + 1) + 1,
                       "expected " + std::to_string(roles.size() + 1) + " cells, found " +
                           std::to_string(cells.size()));
    }
    std::string name(cells.front());
    if (name.empty()) throw ParseError(Kind::missing_name, line_no, 1, "unit name is empty");
    if (!seen.insert(name).second) {
      throw ParseError(Kind::duplicate_name, line_no, 1, "duplicate unit name '" + name + "'");
    }

    std::vector<double> in;
    std::vector<double> out;
    for (std::size_t c = 0; c < roles.size(); ++c) {
      const auto value = parse_real(cells[c + 1]);
      if (!value) {
        throw ParseError(Kind::non_numeric_cell, line_no, c + 2,
                         "cell '" + std::string(cells[c + 1]) + "' is not a finite decimal number");
      }
      (roles[c] == Role::input ? in : out).push_back(*value);
    }
    names.push_back(std::move(name));
    input_rows.push_back(std::move(in));
    output_rows.push_back(std::move(out));
  }

  if (!have_header) throw ParseError(Kind::malformed_header, line_no, 1, "no header line");
  if (names.empty()) throw ParseError(Kind::empty_dataset, header_line, 1, "dataset has no unit rows");

  const auto n = static_cast<Eigen::Index>(names.size());
  Eigen::MatrixXd inputs(static_cast<Eigen::Index>(input_labels.size()), n);
  Eigen::MatrixXd outputs(static_cast<Eigen::Index>(output_labels.size()), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& in = input_rows[static_cast<std::size_t>(j)];
    const auto& out = output_rows[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < inputs.rows(); ++i) inputs(i, j) = in[static_cast<std::size_t>(i)];
    for (Eigen::Index r = 0; r < outputs.rows(); ++r) outputs(r, j) = out[static_cast<std::size_t>(r)];
  }
  return Dataset(std::move(names), std::move(input_labels), std::move(output_labels), std::move(inputs),
                 std::move(outputs));
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str());
}

}  // namespace deagrs
