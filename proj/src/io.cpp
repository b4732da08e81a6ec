#include "covseq/io.hpp"

#include <fstream>
#include <sstream>

namespace covseq {

TextDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  TextDocument doc;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!header_seen) {
        header_seen = true;
        std::istringstream ss(line.substr(1));
        std::string tok;
        while (ss >> tok) {
          auto eq = tok.find('=');
          if (eq != std::string::npos)
            doc.header[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
      }
      continue;
    }
    doc.lines.push_back(line);
  }
  return doc;
}

std::string format_header(const std::map<std::string, std::string>& header) {
  // fixed key order so identical invocations emit identical bytes
  static const char* order[] = {"kind", "m", "n", "r", "len", "rows", "cols", "seed"};
  std::string out = "#";
  for (const char* k : order) {
    auto it = header.find(k);
    if (it != header.end()) out += " " + it->first + "=" + it->second;
  }
  for (const auto& [k, v] : header) {
    bool listed = false;
    for (const char* o : order)
      if (k == o) listed = true;
    if (!listed) out += " " + k + "=" + v;
  }
  return out;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines,
                 const std::map<std::string, std::string>& header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (!header.empty()) out << format_header(header) << "\n";
  for (const auto& l : lines) out << l << "\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_sequence(const std::string& path, const CyclicSequence& s,
                    const std::map<std::string, std::string>& header) {
  write_lines(path, {s.to_string()}, header);
}

CyclicSequence document_sequence(const TextDocument& doc) {
  if (doc.lines.empty()) throw std::runtime_error("no sequence line in input");
  std::string joined;  // long sequences may be wrapped across lines
  for (const auto& l : doc.lines) joined += l;
  return CyclicSequence::from_string(joined);
}

SequenceCode document_code(const TextDocument& doc, int n, int radius) {
  if (doc.lines.empty()) throw std::runtime_error("no codeword lines in input");
  SequenceCode code;
  code.n = n;
  code.radius = radius;
  for (const auto& l : doc.lines)
    code.codewords.push_back(CyclicSequence::from_string(l));
  return code;
}

TorusArray document_array(const TextDocument& doc) {
  return TorusArray::from_rows(doc.lines);
}

}  // namespace covseq
