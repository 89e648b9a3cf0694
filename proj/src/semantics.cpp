#include "sgeval/semantics.hpp"

#include "sgeval/abstract.hpp"
#include "sgeval/modular.hpp"
#include "sgeval/tnorm.hpp"

namespace sgeval {

const std::vector<Semantics>& all_semantics() {
    static const std::vector<Semantics> list = [] {
        auto tp = product_triple();
        auto tm = minimum_triple();
        auto d = dfquad();
        auto q = qem();
        return std::vector<Semantics>{
            {"tnorm-p", "Tp", true, [tp](const StatementGraph& g) { return eval_tnorm(g, tp); }},
            {"tnorm-m", "Tm", true, [tm](const StatementGraph& g) { return eval_tnorm(g, tm); }},
            {"dc-dfquad", "DC-D", true, [d](const StatementGraph& g) { return eval_dc(g, d); }},
            {"dc-qem", "DC-Q", true, [q](const StatementGraph& g) { return eval_dc(g, q); }},
            {"dfquad", "D", false, [d](const StatementGraph& g) { return apply_abstract_to_sg(g, d); }},
            {"qem", "Q", false, [q](const StatementGraph& g) { return apply_abstract_to_sg(g, q); }},
        };
    }();
    return list;
}

std::optional<Semantics> find_semantics(std::string_view name) {
    for (const Semantics& s : all_semantics())
        if (s.name == name) return s;
    return std::nullopt;
}

std::vector<std::string> semantics_names() {
    std::vector<std::string> out;
    for (const Semantics& s : all_semantics()) out.push_back(s.name);
    return out;
}

}  // namespace sgeval
