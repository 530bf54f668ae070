#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace stieltjes::report {

using Cell = std::variant<std::string, double, long long>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

// Shortest representation that round-trips.
std::string format_double(double x);
std::string to_text(const Cell& c);

void write_csv(const Table& t, std::ostream& out);
void write_structured(const Table& t, std::ostream& out);

// Exit code from the `status` and `grade` columns only.
int exit_code(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows);
int exit_code(const Table& t);
// Reads either format back and recomputes the exit code.
int recheck(std::istream& in);

}  // namespace stieltjes::report
