#ifndef TROPIC_CORPUS_HPP
#define TROPIC_CORPUS_HPP

#include <string>
#include <vector>

namespace tropic::corpus {

struct Entry {
  std::string name;
  std::string file;
  std::string kind;  // graph | morphism | divisor | function
  std::string note;
};

// Reads the shipped example index (corpus.json) from a data directory.
std::vector<Entry> list(const std::string& data_dir);

}  // namespace tropic::corpus

#endif
