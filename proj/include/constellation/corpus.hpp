#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constellation/complex.hpp"
#include "constellation/gale.hpp"
#include "constellation/io.hpp"
#include "constellation/polytope.hpp"

namespace constellation {

// One file of the bundled corpus. Any of the three objects may be present.
// "expected" maps a key to {"value": ..., "source": "published" | "trivial" |
// "derived"}; only derived values are rewritten by regeneration.
struct CorpusEntry {
  std::string name;
  std::string path;
  std::optional<Polytope> polytope;
  std::optional<PointConfiguration> configuration;
  std::optional<SimplicialComplex> complex;
  std::vector<std::string> tags;
  Json expected = Json::object();
  Json raw;

  bool has_tag(const std::string& tag) const;
  const Json* expectation(const std::string& key) const;
};

std::string default_corpus_dir();

CorpusEntry load_corpus_entry(const std::string& path);
// All *.json files of the directory, sorted by file name.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

// Writes raw with the current expected block back to path.
void save_corpus_entry(const CorpusEntry& entry);

}  // namespace constellation
