#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lazcad {

// Immutable variable ordering. Position 0 holds the lowest variable x1, the
// last position the highest (first to be eliminated by projection).
class VarOrder {
public:
    explicit VarOrder(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const VarOrder& other) const { return names_ == other.names_; }
    bool operator!=(const VarOrder& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

VarOrderPtr make_order(std::vector<std::string> names);

}  // namespace lazcad
