#include "tropic/corpus.hpp"

#include "tropic/errors.hpp"
#include "tropic/json_io.hpp"

namespace tropic::corpus {

std::vector<Entry> list(const std::string& data_dir) {
  io::json idx = io::load_file(data_dir + "/corpus.json");
  std::vector<Entry> out;
  for (auto& je : idx.at("entries")) {
    Entry e;
    e.name = je.at("name").get<std::string>();
    e.file = je.at("file").get<std::string>();
    e.kind = je.at("kind").get<std::string>();
    e.note = je.value("note", "");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace tropic::corpus
