// Copyright 2026 The biored-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biored/pubtator.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "biored/text.h"

namespace biored {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    const size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

std::optional<int64_t> ParseOffset(std::string_view s) {
  if (!IsDigits(s)) return std::nullopt;
  int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> SplitIds(std::string_view field) {
  std::vector<std::string> ids;
  if (field.empty()) return ids;
  size_t pos = 0;
  while (true) {
    const size_t comma = field.find(',', pos);
    if (comma == std::string_view::npos) {
      ids.emplace_back(field.substr(pos));
      break;
    }
    ids.emplace_back(field.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return ids;
}

// Recognizes "PMID|t|..." and "PMID|a|"; returns the kind character.
std::optional<char> TextLineKind(std::string_view line, std::string_view* id,
                                 std::string_view* body) {
  const size_t bar = line.find('|');
  if (bar == std::string_view::npos || bar == 0) return std::nullopt;
  if (line.substr(0, bar).find('\t') != std::string_view::npos) {
    return std::nullopt;
  }
  if (line.size() < bar + 3 || line[bar + 2] != '|') return std::nullopt;
  const char kind = line[bar + 1];
  if (kind != 't' && kind != 'a') return std::nullopt;
  *id = line.substr(0, bar);
  *body = line.substr(bar + 3);
  return kind;
}

class BlockBuilder {
 public:
  BlockBuilder(std::string source, const EntityTypeMap& types,
               std::vector<Document>* out)
      : source_(std::move(source)), types_(types), out_(out) {}

  void Title(int line_no, std::string_view id, std::string_view body) {
    if (open_) Flush(line_no);
    open_ = true;
    id_ = std::string(id);
    title_ = std::string(body);
    start_line_ = line_no;
  }

  void Abstract(int line_no, std::string_view id, std::string_view body) {
    if (!open_) Fail(line_no, "abstract line without a preceding title line");
    if (id != id_) {
      Fail(line_no, "abstract PMID '" + std::string(id) +
                        "' does not match title PMID '" + id_ + "'");
    }
    if (has_abstract_) Fail(line_no, "second abstract line for " + id_);
    has_abstract_ = true;
    abstract_ = std::string(body);
  }

  void Annotation(int line_no, std::string_view line) {
    const auto fields = SplitTabs(line);
    if (!open_) {
      Fail(line_no, "annotation line before any title line");
    }
    if (fields[0] != id_) {
      Fail(line_no, "annotation PMID '" + std::string(fields[0]) +
                        "' does not match document PMID '" + id_ + "'");
    }
    const auto start = fields.size() > 1 ? ParseOffset(fields[1])
                                         : std::optional<int64_t>();
    if (start) {
      if (fields.size() < 5) {
        Fail(line_no, "mention line needs at least 5 fields, got " +
                          std::to_string(fields.size()));
      }
      const auto end = ParseOffset(fields[2]);
      if (!end) Fail(line_no, "non-integer end offset '" +
                                  std::string(fields[2]) + "'");
      Mention m;
      m.start = *start;
      m.end = *end;
      m.surface = std::string(fields[3]);
      m.raw_type = std::string(fields[4]);
      m.core_type = types_.Map(m.raw_type);
      if (fields.size() >= 6) {
        m.has_id_field = true;
        m.concept_ids = SplitIds(fields[5]);
        for (size_t i = 6; i < fields.size(); ++i) {
          m.extras.emplace_back(fields[i]);
        }
      }
      mentions_.push_back(std::move(m));
      return;
    }
    if (fields.size() >= 6) {
      Fail(line_no, "non-integer start offset '" + std::string(fields[1]) +
                        "' in " + std::to_string(fields.size()) +
                        "-field mention line");
    }
    if (fields.size() < 4) {
      Fail(line_no, "wrong field count " + std::to_string(fields.size()) +
                        " for an annotation line");
    }
    if (fields[1].empty()) Fail(line_no, "empty relation label");
    RelationAnnotation r;
    r.raw_label = std::string(fields[1]);
    r.concept_a = std::string(fields[2]);
    r.concept_b = std::string(fields[3]);
    for (size_t i = 4; i < fields.size(); ++i) r.extras.emplace_back(fields[i]);
    relations_.push_back(std::move(r));
  }

  void Flush(int line_no) {
    if (!open_) return;
    if (!ids_.insert(id_).second) {
      Fail(start_line_, "duplicate document id '" + id_ + "'");
    }
    out_->emplace_back(std::move(id_), std::move(title_), std::move(abstract_),
                       std::move(mentions_), std::move(relations_));
    (void)line_no;
    open_ = false;
    has_abstract_ = false;
    id_.clear();
    title_.clear();
    abstract_.clear();
    mentions_.clear();
    relations_.clear();
  }

  [[noreturn]] void Fail(int line_no, const std::string& what) const {
    throw ParseError(source_, line_no, what);
  }

 private:
  std::string source_;
  const EntityTypeMap& types_;
  std::vector<Document>* out_;
  std::set<std::string> ids_;

  bool open_ = false;
  bool has_abstract_ = false;
  int start_line_ = 0;
  std::string id_;
  std::string title_;
  std::string abstract_;
  std::vector<Mention> mentions_;
  std::vector<RelationAnnotation> relations_;
};

}  // namespace

const Document* Corpus::Find(std::string_view doc_id) const {
  for (const auto& d : documents) {
    if (d.id() == doc_id) return &d;
  }
  return nullptr;
}

ParseError::ParseError(std::string source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

Corpus ParsePubtator(std::istream& in, std::string source_name,
                     const EntityTypeMap& types) {
  Corpus corpus;
  corpus.source_name = source_name;
  BlockBuilder block(std::move(source_name), types, &corpus.documents);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) {
      block.Flush(line_no);
      continue;
    }
    std::string_view id;
    std::string_view body;
    const auto kind = TextLineKind(line, &id, &body);
    if (kind == 't') {
      block.Title(line_no, id, body);
    } else if (kind == 'a') {
      block.Abstract(line_no, id, body);
    } else if (line.find('\t') != std::string::npos) {
      block.Annotation(line_no, line);
    } else {
      block.Fail(line_no, "unrecognized line");
    }
  }
  block.Flush(line_no);
  return corpus;
}

Corpus ParsePubtatorString(std::string_view text, std::string source_name,
                           const EntityTypeMap& types) {
  std::istringstream in{std::string(text)};
  return ParsePubtator(in, std::move(source_name), types);
}

Corpus LoadPubtatorFile(const std::string& path, const EntityTypeMap& types) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ParsePubtator(in, path, types);
}

std::string FormatMentionLine(const std::string& doc_id, const Mention& m) {
  std::string line = doc_id + '\t' + std::to_string(m.start) + '\t' +
                     std::to_string(m.end) + '\t' + m.surface + '\t' +
                     m.raw_type;
  if (m.has_id_field || !m.concept_ids.empty() || !m.extras.empty()) {
    line += '\t';
    for (size_t i = 0; i < m.concept_ids.size(); ++i) {
      if (i > 0) line += ',';
      line += m.concept_ids[i];
    }
    for (const auto& e : m.extras) line += '\t' + e;
  }
  return line;
}

std::string FormatRelationLine(const std::string& doc_id,
                               const RelationAnnotation& r) {
  std::string line =
      doc_id + '\t' + r.raw_label + '\t' + r.concept_a + '\t' + r.concept_b;
  for (const auto& e : r.extras) line += '\t' + e;
  return line;
}

void SerializeDocument(const Document& doc, std::ostream& out) {
  out << doc.id() << "|t|" << doc.title() << '\n';
  out << doc.id() << "|a|" << doc.abstract() << '\n';
  for (const auto& m : doc.mentions()) {
    out << FormatMentionLine(doc.id(), m) << '\n';
  }
  for (const auto& r : doc.relations()) {
    out << FormatRelationLine(doc.id(), r) << '\n';
  }
}

void SerializePubtator(const Corpus& corpus, std::ostream& out) {
  for (size_t i = 0; i < corpus.documents.size(); ++i) {
    if (i > 0) out << '\n';
    SerializeDocument(corpus.documents[i], out);
  }
}

std::string SerializePubtator(const Corpus& corpus) {
  std::ostringstream out;
  SerializePubtator(corpus, out);
  return out.str();
}

}  // namespace biored
