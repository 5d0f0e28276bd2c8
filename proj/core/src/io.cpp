#include "beliefkit/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "beliefkit/errors.hpp"

namespace beliefkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view token, int line_no) {
  std::string buf(token);
  char* end = nullptr;
  errno = 0;
  double value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                     buf + "'");
  }
  return value;
}

}  // namespace

std::string to_text(const MassFunction& m) {
  std::string out = "frame:";
  for (const auto& label : m.frame().labels()) {
    out += ' ';
    out += label;
  }
  out += '\n';
  for (const auto& [set, mass] : m.masses()) {
    out += m.frame().set_label(set);
    out += ": ";
    out += format_significant(mass);
    out += '\n';
  }
  return out;
}

std::pair<FrameOfDiscernment, std::map<FocalSet, double>> parse_mass_entries(
    std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  std::vector<std::string> labels;
  bool have_frame = false;
  std::map<FocalSet, double> masses;
  // Frame is only constructible after the header; keep entries raw until then.
  std::vector<std::pair<std::string, double>> records;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!have_frame) {
      if (!body.starts_with("frame:")) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'frame: <labels>' header");
      }
      std::istringstream header{std::string(body.substr(6))};
      std::string label;
      while (header >> label) labels.push_back(label);
      if (labels.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": empty frame header");
      }
      have_frame = true;
      continue;
    }
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<set>: <mass>' record");
    }
    std::string set_text(trim(body.substr(0, colon)));
    double mass = parse_double(trim(body.substr(colon + 1)), line_no);
    records.emplace_back(std::move(set_text), mass);
  }
  if (!have_frame) throw ParseError("missing 'frame:' header");

  FrameOfDiscernment frame(std::move(labels));
  for (const auto& [set_text, mass] : records) {
    FocalSet set = frame.parse_set_label(set_text);
    if (!masses.emplace(set, mass).second) {
      throw ParseError("duplicate focal element '" + set_text + "'");
    }
  }
  return {std::move(frame), std::move(masses)};
}

MassFunction mass_from_text(std::string_view text) {
  auto [frame, masses] = parse_mass_entries(text);
  return MassFunction(std::move(frame), std::move(masses));
}

MassFunction load_mass_file(const std::filesystem::path& path) {
  return mass_from_text(read_file(path));
}

void save_mass_file(const std::filesystem::path& path, const MassFunction& m) {
  write_file_atomic(path, to_text(m));
}

std::string to_compact_line(const MassFunction& m) {
  std::string out;
  for (const auto& [set, mass] : m.masses()) {
    if (!out.empty()) out += ' ';
    out += m.frame().set_label(set);
    out += ':';
    out += format_significant(mass);
  }
  return out;
}

std::vector<double> parse_decimal_list(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  int field = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    ++field;
    std::string_view token = trim(text.substr(start, end - start));
    if (token.empty()) {
      throw ParseError("empty field " + std::to_string(field) +
                       " in decimal list");
    }
    values.push_back(parse_double(token, field));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (values.empty()) throw ParseError("empty decimal list");
  return values;
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_fixed(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace beliefkit
