#include "qsym/composition.hpp"

#include <algorithm>

namespace qsym {

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int a = 1; a <= rest; ++a) {
            cur.push_back(a);
            self(self, rest - a);
            cur.pop_back();
        }
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qsym
