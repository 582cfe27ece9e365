#pragma once

#include <stdexcept>
#include <string>

#include "lazcad/cad_model.hpp"
#include "lazcad/projection.hpp"

namespace lazcad {

struct SessionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything a later invocation needs to continue incrementally: the inputs,
// the full projection table, and the lifted tree, under one variable order
// and mode. Serialized as versioned structured text (JSON with all numbers
// as exact decimal strings).
struct SessionState {
    VarOrderPtr order;
    CadMode mode = CadMode::Open;
    PolySet inputs;
    ProjectionTable table;
    CadTree tree;
};

void save_session(const SessionState& s, const std::string& path);

// Throws SessionError on unreadable, unrecognized or inconsistent content.
SessionState load_session(const std::string& path);

}  // namespace lazcad
