#include "cdpic/table.hpp"

#include <algorithm>
#include <sstream>

namespace cdpic {

std::string message_label(int message) { return "X_" + std::to_string(message); }

DecodingTable make_decoding_table(const ProblemInstance& p,
                                  const DecodingReport& report) {
  DecodingTable table;
  table.header = {"client", "side information"};
  for (int i = 1; i <= report.n_used; ++i) table.header.push_back("W_" + std::to_string(i));

  for (int client = 0; client < p.c; ++client) {
    std::vector<std::string> row;
    row.push_back("C_" + std::to_string(client));
    std::string window = "{";
    bool first = true;
    for (int msg : side_info(p, client)) {
      if (!first) window += ",";
      window += message_label(msg);
      first = false;
    }
    window += "}";
    row.push_back(std::move(window));
    for (int i = 0; i < report.n_used; ++i) {
      const int msg = report.cells[client][i];
      row.push_back(msg == DecodingReport::kNoDecode ? "-" : message_label(msg));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_table(const DecodingTable& table) {
  std::vector<size_t> widths(table.header.size(), 0);
  for (size_t col = 0; col < table.header.size(); ++col)
    widths[col] = table.header[col].size();
  for (const auto& row : table.rows)
    for (size_t col = 0; col < row.size(); ++col)
      widths[col] = std::max(widths[col], row[col].size());

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t col = 0; col < row.size(); ++col) {
      if (col) out << " | ";
      out << row[col];
      if (col + 1 < row.size())
        out << std::string(widths[col] - row[col].size(), ' ');
    }
    out << "\n";
  };
  emit(table.header);
  size_t total = 0;
  for (size_t col = 0; col < widths.size(); ++col)
    total += widths[col] + (col ? 3 : 0);
  out << std::string(total, '-') << "\n";
  for (const auto& row : table.rows) emit(row);
  return out.str();
}

}  // namespace cdpic
