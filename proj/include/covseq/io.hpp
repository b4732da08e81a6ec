#pragma once

#include <map>

#include "covseq/core.hpp"

namespace covseq {

/// Text formats: one '0'/'1' sequence per line; '#' lines are headers or
/// comments. The first header line carries key=value pairs, e.g.
/// `# kind=cs n=16 r=1 len=4462`.
struct TextDocument {
  std::map<std::string, std::string> header;
  std::vector<std::string> lines;
};

TextDocument read_document(const std::string& path);

std::string format_header(const std::map<std::string, std::string>& header);
void write_sequence(const std::string& path, const CyclicSequence& s,
                    const std::map<std::string, std::string>& header);
void write_lines(const std::string& path, const std::vector<std::string>& lines,
                 const std::map<std::string, std::string>& header);

CyclicSequence document_sequence(const TextDocument& doc);
SequenceCode document_code(const TextDocument& doc, int n, int radius);
TorusArray document_array(const TextDocument& doc);

}  // namespace covseq
