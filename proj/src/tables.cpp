#include "fatpoints/tables.hpp"

#include <algorithm>

namespace fatpoints {

const std::vector<QuasiHomSystem>& table4_exceptional() {
    static const std::vector<QuasiHomSystem> rows = [] {
        std::vector<QuasiHomSystem> t;
        for (Int a = 1; a <= 4; ++a) t.push_back({12, a, 5, 5});
        for (Int b = 0; b <= 4; ++b) t.push_back({12, b, 5, 6});
        for (Int a = 4; a <= 5; ++a) t.push_back({13, a, 5, 6});
        for (Int b = 0; b <= 1; ++b) t.push_back({13, b, 5, 7});
        t.push_back({14, 6, 5, 6});
        for (Int a = 4; a <= 6; ++a) t.push_back({14, a, 5, 7});
        for (Int b = 0; b <= 1; ++b) t.push_back({14, b, 5, 8});
        for (Int a = 5; a <= 6; ++a) t.push_back({16, a, 5, 9});
        for (Int b = 0; b <= 2; ++b) t.push_back({16, b, 5, 10});
        t.push_back({17, 8, 5, 9});
        t.push_back({18, 10, 5, 9});
        t.push_back({19, 11, 5, 10});
        t.push_back({19, 9, 5, 11});
        t.push_back({20, 11, 5, 10});
        t.push_back({20, 12, 5, 10});
        t.push_back({21, 13, 5, 11});
        t.push_back({23, 14, 5, 13});
        t.push_back({26, 18, 5, 14});
        t.push_back({28, 20, 5, 15});
        t.push_back({33, 25, 5, 18});
        std::sort(t.begin(), t.end());
        return t;
    }();
    return rows;
}

} // namespace fatpoints
