#pragma once

#include "exprimes/fixture.hpp"

#include <map>
#include <string>

namespace testing_support {

inline std::string fixture_path(const std::string& name) { return std::string(EXPRIMES_FIXTURE_DIR) + "/" + name; }

inline const exprimes::NewformFixture& fixture(const std::string& name) {
    static std::map<std::string, exprimes::NewformFixture> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, exprimes::load_fixture(fixture_path(name))).first;
    return it->second;
}

}  // namespace testing_support
