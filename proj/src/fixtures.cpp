#include "rtk/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rtk/errors.hpp"

namespace rtk {

static std::map<std::string, std::vector<Rational>> load() {
    const char* env = std::getenv("RTK_FIXTURES");
    std::string path = env ? env : RTK_FIXTURE_FILE;
    std::ifstream in(path);
    if (!in) throw rtk_error("cannot open fixture file " + path);
    std::map<std::string, std::vector<Rational>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw parse_error("bad fixture line: " + line);
        std::string id = line.substr(0, colon);
        // strip whitespace around the id
        std::size_t b = id.find_first_not_of(" \t");
        std::size_t e = id.find_last_not_of(" \t");
        id = id.substr(b, e - b + 1);
        std::vector<Rational> terms;
        std::stringstream ss(line.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t tb = tok.find_first_not_of(" \t");
            if (tb == std::string::npos) continue;
            std::size_t te = tok.find_last_not_of(" \t");
            terms.push_back(Rational::parse(tok.substr(tb, te - tb + 1)));
        }
        out[id] = std::move(terms);
    }
    return out;
}

const std::map<std::string, std::vector<Rational>>& fixtures() {
    static const std::map<std::string, std::vector<Rational>> table = load();
    return table;
}

const std::vector<Rational>& fixture(const std::string& id) {
    auto it = fixtures().find(id);
    if (it == fixtures().end()) throw unknown_sequence(id);
    return it->second;
}

bool has_fixture(const std::string& id) { return fixtures().count(id) != 0; }

} // namespace rtk
