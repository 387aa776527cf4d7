#pragma once

#include <chrono>
#include <cstdint>

namespace hatg {

// Node/wall-clock cap shared by the exhaustive searches. Exceeding it is a
// distinct, inconclusive outcome, never folded into a negative answer.
struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 60.0;
};

class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // Call once per search node; cheap (clock consulted every 4096 nodes).
    bool expired(std::uint64_t nodes) {
        if (nodes > budget_.max_nodes) return true;
        if ((nodes & 0xFFF) != 0) return false;
        return elapsed() > budget_.max_seconds;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace hatg
