#pragma once

#include <string>
#include <vector>

namespace nuclabel {

// Collector for non-fatal conditions (degenerate clustering, redraw
// saturation, infeasible packing). Callers that don't care pass nullptr.
class Warnings {
public:
    void add(std::string message) { messages_.push_back(std::move(message)); }

    const std::vector<std::string>& messages() const { return messages_; }
    std::size_t count() const { return messages_.size(); }
    bool empty() const { return messages_.empty(); }

private:
    std::vector<std::string> messages_;
};

inline void warn(Warnings* sink, std::string message) {
    if (sink) sink->add(std::move(message));
}

} // namespace nuclabel
