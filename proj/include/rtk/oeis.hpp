#ifndef RTK_OEIS_HPP
#define RTK_OEIS_HPP

#include <string>
#include <vector>

#include "rational.hpp"

namespace rtk {

struct OeisOptions {
    bool online = false;     // never touch the network unless set
    std::string cache_dir;   // empty -> $RTK_OEIS_CACHE or ".oeis-cache"
    std::size_t max_terms = 64;
};

std::string oeis_cache_dir(const OeisOptions& opts);

// Terms of the sequence's b-file.  Served from the cache when present;
// otherwise fetched over HTTPS (only with opts.online) and cached.
std::vector<Rational> oeis_terms(const std::string& id, const OeisOptions& opts);

// Compares bundled fixture terms against b-file terms over their common
// prefix; returns the number of terms compared (throws on mismatch).  With
// no cached b-file and fetching disabled, the bundled terms alone are
// checked for presence and the fixture length is returned.
std::size_t oeis_check(const std::string& id, const OeisOptions& opts);

} // namespace rtk

#endif
