#include "lazcad/varorder.hpp"

#include <set>
#include <stdexcept>

namespace lazcad {

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("variable order must be nonempty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable: " + n);
    }
}

std::optional<std::size_t> VarOrder::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarOrderPtr make_order(std::vector<std::string> names) {
    return std::make_shared<const VarOrder>(std::move(names));
}

}  // namespace lazcad
