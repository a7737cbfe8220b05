#include <gerst/multi_index.hpp>

namespace gerst {

std::vector<NatIndex> sub_indices(const NatIndex& a) {
    std::vector<NatIndex> out;
    NatIndex b(a.dim());
    // Odometer over 0 <= b <= a, last coordinate fastest: lexicographic order.
    while (true) {
        out.push_back(b);
        int i = a.dim() - 1;
        while (i >= 0 && b[i] == a[i]) {
            b.set(i, 0);
            --i;
        }
        if (i < 0) break;
        b.set(i, b[i] + 1);
    }
    return out;
}

std::vector<std::vector<NatIndex>> compositions(const NatIndex& total, int parts) {
    if (parts < 1) {
        if (total.is_zero()) return {{}};
        return {};
    }
    if (parts == 1) return {{total}};
    std::vector<std::vector<NatIndex>> out;
    for (const auto& head : sub_indices(total)) {
        for (auto& tail : compositions(nat_difference(total, head), parts - 1)) {
            std::vector<NatIndex> row;
            row.reserve(parts);
            row.push_back(head);
            row.insert(row.end(), tail.begin(), tail.end());
            out.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace gerst
