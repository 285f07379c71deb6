#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nsymkit/box_ops.hpp"
#include "nsymkit/element.hpp"
#include "oracles.hpp"

namespace testing {

using nsymkit::Basis;
using nsymkit::Composition;
using nsymkit::Element;

inline Element build(Basis b, std::initializer_list<std::pair<Composition, int>> terms) {
    Element e(b);
    for (const auto& [c, k] : terms) e.add(c, k);
    return e;
}

inline Element from_oracle(const std::map<oracle::Parts, long long>& m) {
    Element e(Basis::S);
    for (const auto& [p, c] : m) e.add(Composition(p), c);
    return e;
}

inline oracle::Parts parts(const Composition& c) { return c.parts(); }

}  // namespace testing
