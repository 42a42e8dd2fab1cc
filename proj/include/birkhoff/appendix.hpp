#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "birkhoff/bistoch.hpp"
#include "birkhoff/erdosenum.hpp"

namespace birkhoff {

// One record of the bundled 4x4 catalog: "# index i", "n 4", four rows.
struct AppendixEntry {
  int index = 0;
  BistochMatrix matrix;
};

struct AppendixReport {
  std::size_t total = 0;
  std::size_t enumeration_classes = 0;
  std::vector<int> not_erdos;                        // indices with delta > 0
  std::vector<std::pair<int, int>> equivalent_pairs;  // catalog redundancies
  bool matches_enumeration = false;  // catalog == enumerated classes as sets

  bool ok() const {
    return total == 41 && not_erdos.empty() && equivalent_pairs.empty() &&
           matches_enumeration;
  }
};

// Reads blank-line-separated records, picking each entry's index from the
// nearest preceding "# index i" comment (falling back to file order).
std::vector<AppendixEntry> parse_appendix(std::istream& in);

// The catalog compiled into the library.
std::vector<AppendixEntry> load_appendix();

// Checks every entry is Erdos, no two are equivalent, and the canonical forms
// coincide with the enumerated 4x4 classes.
AppendixReport verify_appendix(const std::vector<AppendixEntry>& entries,
                               const EnumResult& enumerated);

// Same, running the 4x4 enumeration internally.
AppendixReport verify_appendix(const std::vector<AppendixEntry>& entries);

}  // namespace birkhoff
