#ifndef SERRE_CACHE_HPP
#define SERRE_CACHE_HPP

#include <string>

#include "serre/theorems.hpp"

namespace serre {

struct CacheStats {
    long long lines_read = 0;
    long long lines_skipped = 0;  // corrupt or version-mismatched
    long long records_loaded = 0;
    long long records_appended = 0;
    int spot_checks = 0;
};

// Append-only JSON-lines store keyed by the canonical graph serialization
// plus a classifier version stamp. Later lines override earlier ones on load;
// corrupt lines are skipped with a warning on stderr.
CacheStats load_cache(const std::string& path, Session& session);

// Appends records computed or extended during this run.
long long flush_cache(const std::string& path, Session& session);

// Recomputes a couple of freshly loaded small records and compares their
// serialized form byte for byte. Throws on divergence.
int spot_check_cache(Session& session);

std::string cache_key(const CirculantGraph& g);

}  // namespace serre

#endif
