#ifndef RTK_FIXTURES_HPP
#define RTK_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rtk {

// Bundled reference sequences, loaded once from the data file installed with
// the source tree (one line per sequence: "A005130: 1,1,2,7,42,...").
const std::map<std::string, std::vector<Rational>>& fixtures();

// Terms for one id; throws unknown_sequence if not bundled.
const std::vector<Rational>& fixture(const std::string& id);

bool has_fixture(const std::string& id);

} // namespace rtk

#endif
