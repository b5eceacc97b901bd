#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace fistab {

enum class OutputFormat { Plain, KeyValue };

/// FISTAB_FORMAT=kv selects key=value output; anything else is plain.
inline OutputFormat output_format_from_env() {
  const char* f = std::getenv("FISTAB_FORMAT");
  return f && std::string(f) == "kv" ? OutputFormat::KeyValue : OutputFormat::Plain;
}

/// One output row: ordered (key, value) pairs.
using Record = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline std::string kv_value(const std::string& v) {
  if (v.find_first_of(" \t=\"") == std::string::npos && !v.empty()) return v;
  std::string s = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') s += '\\';
    s += c;
  }
  return s + "\"";
}

}  // namespace detail

/// Rows sharing one key list render as an aligned table in plain mode; in
/// key=value mode every row is one line.
inline std::string render(const std::vector<Record>& rows, OutputFormat fmt) {
  std::string out;
  if (fmt == OutputFormat::KeyValue) {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        out += (i ? " " : "") + r[i].first + "=" + detail::kv_value(r[i].second);
      out += '\n';
    }
    return out;
  }
  if (rows.empty()) return out;
  const auto& head = rows.front();
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].first.size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].second.size());
  auto line = [&](auto cell) {
    std::string s;
    for (std::size_t i = 0; i < head.size(); ++i) {
      std::string c = cell(i);
      if (i + 1 < head.size()) c.resize(w[i] + 2, ' ');
      s += c;
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + '\n';
  };
  out += line([&](std::size_t i) { return head[i].first; });
  for (const auto& r : rows) out += line([&](std::size_t i) { return i < r.size() ? r[i].second : std::string(); });
  return out;
}

/// A single record in plain mode as "key: value" lines.
inline std::string render_one(const Record& r, OutputFormat fmt) {
  if (fmt == OutputFormat::KeyValue) return render({r}, fmt);
  std::size_t w = 0;
  for (const auto& [k, v] : r) w = std::max(w, k.size());
  std::string out;
  for (const auto& [k, v] : r) out += k + ":" + std::string(w - k.size() + 1, ' ') + v + '\n';
  return out;
}

}  // namespace fistab
