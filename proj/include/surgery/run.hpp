#pragma once

#include "surgery/plan.hpp"

#include <string>
#include <vector>

namespace surgery {

// Ordered key=value emissions from executing a plan. Keys may repeat (e.g.
// manifold.e is re-emitted after every blowdown); `assert` statements and
// find_last() resolve to the most recent emission.
struct report {
    std::vector<std::pair<std::string, std::string>> kv;

    const std::string* find_last(const std::string& key) const;
};

report run_plan(const plan& p);

std::string render_kv(const report& r);     // key=value, one per line
std::string render_text(const report& r);   // aligned human-readable listing

} // namespace surgery
