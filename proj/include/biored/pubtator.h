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

// PubTator standoff format.
//
//   PMID|t|Title text
//   PMID|a|Abstract text
//   PMID<TAB>start<TAB>end<TAB>surface<TAB>type[<TAB>ids[<TAB>extra...]]
//   PMID<TAB>label<TAB>concept_a<TAB>concept_b[<TAB>extra]
//   <blank line>
//
// An annotation line whose second field is an integer is a mention;
// otherwise it is a relation. Multiple concept ids are comma separated.

#ifndef BIORED_PUBTATOR_H_
#define BIORED_PUBTATOR_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biored/corpus.h"

namespace biored {

struct Corpus {
  std::vector<Document> documents;
  std::string source_name;

  const Document* Find(std::string_view doc_id) const;
  size_t size() const { return documents.size(); }

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.documents == b.documents;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& what);

  int line() const { return line_; }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  int line_;
};

// Throws ParseError (with 1-based line number) on malformed input.
Corpus ParsePubtator(std::istream& in, std::string source_name = "<input>",
                     const EntityTypeMap& types = EntityTypeMap::Default());
Corpus ParsePubtatorString(std::string_view text,
                           std::string source_name = "<input>",
                           const EntityTypeMap& types = EntityTypeMap::Default());
// Throws std::runtime_error if the file cannot be opened.
Corpus LoadPubtatorFile(const std::string& path,
                        const EntityTypeMap& types = EntityTypeMap::Default());

void SerializePubtator(const Corpus& corpus, std::ostream& out);
std::string SerializePubtator(const Corpus& corpus);
void SerializeDocument(const Document& doc, std::ostream& out);

// Annotation lines for one mention / relation, without trailing newline.
std::string FormatMentionLine(const std::string& doc_id, const Mention& m);
std::string FormatRelationLine(const std::string& doc_id,
                               const RelationAnnotation& r);

}  // namespace biored

#endif  // BIORED_PUBTATOR_H_
