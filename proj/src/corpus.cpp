#include "constellation/corpus.hpp"

#include <algorithm>
#include <filesystem>

#include "constellation/error.hpp"

namespace constellation {

bool CorpusEntry::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

const Json* CorpusEntry::expectation(const std::string& key) const {
  const auto it = expected.find(key);
  if (it == expected.end()) return nullptr;
  return &(*it)["value"];
}

std::string default_corpus_dir() { return CONSTELLATION_CORPUS_DIR; }

CorpusEntry load_corpus_entry(const std::string& path) {
  CorpusEntry e;
  e.path = path;
  e.raw = read_json_file(path);
  try {
    e.name = e.raw.value("name", std::filesystem::path(path).stem().string());
    if (e.raw.contains("polytope")) e.polytope = polytope_from_json(e.raw["polytope"]);
    if (e.raw.contains("configuration")) e.configuration = configuration_from_json(e.raw["configuration"]);
    if (e.raw.contains("complex")) e.complex = complex_from_json(e.raw["complex"]);
    if (e.raw.contains("tags")) e.tags = e.raw["tags"].get<std::vector<std::string>>();
    if (e.raw.contains("expected")) {
      e.expected = e.raw["expected"];
      for (const auto& [key, item] : e.expected.items()) {
        if (!item.is_object() || !item.contains("value") || !item.contains("source"))
          throw Error("expected." + key + ": needs \"value\" and \"source\"");
        const std::string src = item["source"].get<std::string>();
        if (src != "published" && src != "trivial" && src != "derived")
          throw Error("expected." + key + ": unknown source \"" + src + "\"");
      }
    }
  } catch (const Error& err) {
    throw Error(path + ": " + err.what());
  } catch (const nlohmann::json::exception& err) {
    throw Error(path + ": " + err.what());
  }
  return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(dir + ": corpus directory not found");
  std::vector<std::string> files;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path().string());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back(load_corpus_entry(f));
  return out;
}

void save_corpus_entry(const CorpusEntry& entry) {
  Json j = entry.raw;
  j["expected"] = entry.expected;
  write_json_file(entry.path, j);
}

}  // namespace constellation
