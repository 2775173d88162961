// One line per acceptance criterion; exit status 1 if any fails.

#include "bellmoves/acceptance.hpp"

#include <iostream>
#include <numeric>

int main() {
    std::vector<int> ids(static_cast<std::size_t>(bellmoves::criterion_count()));
    std::iota(ids.begin(), ids.end(), 1);
    bool all = true;
    for (const auto& r : bellmoves::run_criteria(ids, bellmoves::default_threads())) {
        std::cout << r.line() << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
