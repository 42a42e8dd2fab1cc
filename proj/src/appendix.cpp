#include "birkhoff/appendix.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "birkhoff/matrix_io.hpp"

#include "generated/appendix_data.inc"

namespace birkhoff {
namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// "# index 7" -> 7; anything else -> 0.
int index_of_comment(const std::string& line) {
    std::istringstream ss(line);
    std::string hash, word;
    long idx = 0;
    if (ss >> hash >> word >> idx && hash == "#" && word == "index" && idx > 0) {
        return static_cast<int>(idx);
    }
    return 0;
}

}  // namespace

std::vector<AppendixEntry> parse_appendix(std::istream& in) {
    std::vector<AppendixEntry> out;
    std::string line, chunk;
    int pending_index = 0;
    const auto flush = [&] {
        if (chunk.find_first_not_of(" \t\r\n#") == std::string::npos) {
            chunk.clear();
            return;  // comments or whitespace only
        }
        const int idx = pending_index != 0 ? pending_index : static_cast<int>(out.size()) + 1;
        out.push_back({idx, BistochMatrix(parse_matrix_text(chunk))});
        pending_index = 0;
        chunk.clear();
    };
    while (std::getline(in, line)) {
        if (blank(line)) {
            flush();
            continue;
        }
        if (const int idx = index_of_comment(line); idx != 0) pending_index = idx;
        chunk += line;
        chunk += '\n';
    }
    flush();
    return out;
}

std::vector<AppendixEntry> load_appendix() {
    std::istringstream in(kAppendixData);
    return parse_appendix(in);
}

AppendixReport verify_appendix(const std::vector<AppendixEntry>& entries,
                               const EnumResult& enumerated) {
    AppendixReport rep;
    rep.total = entries.size();
    rep.enumeration_classes = enumerated.classes.size();

    std::map<std::string, int> seen;  // canonical key -> first index
    std::vector<std::string> keys;
    keys.reserve(entries.size());
    for (const auto& e : entries) {
        if (!delta(e.matrix).erdos) rep.not_erdos.push_back(e.index);
        std::string key = canonical_form(e.matrix).matrix().key();
        if (auto [it, fresh] = seen.emplace(key, e.index); !fresh) {
            rep.equivalent_pairs.emplace_back(it->second, e.index);
        }
        keys.push_back(std::move(key));
    }

    std::sort(keys.begin(), keys.end());
    std::vector<std::string> enum_keys;
    enum_keys.reserve(enumerated.classes.size());
    for (const auto& c : enumerated.classes) enum_keys.push_back(c.matrix().key());
    rep.matches_enumeration = keys == enum_keys;
    return rep;
}

AppendixReport verify_appendix(const std::vector<AppendixEntry>& entries) {
    return verify_appendix(entries, enumerate_erdos(4));
}

}  // namespace birkhoff
