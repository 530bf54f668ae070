#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace stieltjes::report {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::to_string(std::get<long long>(c));
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) {
    // JSON has no inf/nan; keep them as text.
    if (!std::isfinite(*d)) return format_double(*d);
    return *d;
  }
  return std::get<long long>(c);
}

std::vector<std::vector<std::string>> text_rows(const Table& t) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : t.rows) {
    std::vector<std::string> row;
    for (const auto& c : r) row.push_back(to_text(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_escape(t.columns[i]);
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(to_text(r[i]));
    out << '\n';
  }
}

void write_structured(const Table& t, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    auto obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < r.size() && i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(r[i]);
    rows.push_back(std::move(obj));
  }
  j["records"] = std::move(rows);
  if (!t.details.empty()) j["details"] = t.details;
  j["exit_code"] = exit_code(t);
  out << j.dump(2) << '\n';
}

int exit_code(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows) {
  auto col = [&](const char* name) {
    auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
  };
  const int status = col("status"), grade = col("grade");
  bool jump = false, diverged = false, fail = false, inconclusive = false;
  for (const auto& r : rows) {
    if (status >= 0 && status < static_cast<int>(r.size())) {
      const auto& s = r[status];
      jump = jump || s == "JumpAtEvaluationPoint";
      diverged = diverged || s == "Diverged";
      inconclusive = inconclusive || s == "Inconclusive";
    }
    if (grade >= 0 && grade < static_cast<int>(r.size())) fail = fail || r[grade] == "fail";
  }
  if (jump) return 4;
  if (diverged) return 2;
  if (fail) return 5;
  if (inconclusive) return 3;
  return 0;
}

int exit_code(const Table& t) { return exit_code(t.columns, text_rows(t)); }

int recheck(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> columns = j.at("columns").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> rows;
    for (const auto& rec : j.at("records")) {
      std::vector<std::string> row;
      for (const auto& c : columns) {
        const auto& v = rec.at(c);
        row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
      rows.push_back(std::move(row));
    }
    return exit_code(columns, rows);
  }
  std::istringstream lines(text);
  std::string line;
  if (!std::getline(lines, line)) throw std::runtime_error("empty report");
  auto columns = csv_split(line);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(lines, line))
    if (!line.empty()) rows.push_back(csv_split(line));
  return exit_code(columns, rows);
}

}  // namespace stieltjes::report
