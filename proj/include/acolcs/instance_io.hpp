#pragma once

// Instance text format (UTF-8, LF line endings):
//
//   alphabet: abc
//   # comment lines start with '#'
//   bbbaaa
//   cbaab
//
// The first non-comment line declares the alphabet in tie-break order; every
// following nonempty, non-comment line is one string.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "acolcs/errors.hpp"
#include "acolcs/instance.hpp"

namespace acolcs {

inline Instance parse_instance(std::string_view text) {
  constexpr std::string_view kHeader = "alphabet:";
  std::optional<Alphabet> alphabet;
  std::vector<std::string> strings;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (!alphabet) {
      if (line.substr(0, kHeader.size()) != kHeader) throw ParseError("expected 'alphabet: <symbols>'", line_no, 1);
      std::string symbols;
      for (char c : line.substr(kHeader.size()))
        if (c != ' ' && c != '\t') symbols.push_back(c);
      try {
        alphabet.emplace(std::move(symbols));
      } catch (const InvalidInstance& e) {
        throw ParseError(e.what(), line_no, kHeader.size() + 1);
      }
      continue;
    }
    for (std::size_t col = 0; col < line.size(); ++col)
      if (!alphabet->contains(line[col]))
        throw UnknownSymbol(std::string("symbol '") + line[col] + "' is not in the alphabet", line_no, col + 1);
    strings.emplace_back(line);
  }
  if (!alphabet) throw ParseError("missing alphabet line", line_no + 1, 1);
  if (strings.empty()) throw ParseError("instance has no strings", line_no + 1, 1);
  return Instance(std::move(*alphabet), std::move(strings));
}

inline std::string serialize_instance(const Instance& inst) {
  std::string out = "alphabet: " + inst.alphabet().symbols() + "\n";
  for (const auto& s : inst.strings()) {
    out += s;
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return ss.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write '" + path + "'");
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

inline void save_instance(const std::string& path, const Instance& inst) {
  write_text_file(path, serialize_instance(inst));
}

}  // namespace acolcs
