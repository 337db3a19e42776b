#include "preserver/operators.hpp"

namespace preserver {

std::vector<Rat> truncate_generator(const Formula& generator, int n) {
    if (n < 0)
        throw std::domain_error("truncate_generator: negative truncation degree");
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        out.push_back(generator.eval_at(Rat(i)));
    return out;
}

}  // namespace preserver
