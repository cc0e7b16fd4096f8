#include "slpfactor/series.hpp"

namespace slpfactor {

std::string serialize_bihom(const BiHomTable<Rat>& t,
                            const std::vector<std::string>& x_names) {
    std::ostringstream out;
    for (int i = 0; i <= t.y_bound(); ++i)
        for (int d = 0; d <= t.x_bound(); ++d) {
            const auto& e = t.entry(i, d);
            if (e.is_zero_poly()) continue;
            out << "bihom i=" << i << " delta=" << d << ": "
                << to_string(e, x_names) << "\n";
        }
    return out.str();
}

} // namespace slpfactor
