#include "qchar/cartan.hpp"

#include <cctype>

#include "qchar/errors.hpp"

namespace qchar {

int CartanDatum::num_positive_roots() const {
    switch (family) {
        case CartanFamily::A:
            return rank * (rank + 1) / 2;
        case CartanFamily::D:
            return rank * (rank - 1);
        case CartanFamily::E:
            if (rank == 6) return 36;
            if (rank == 7) return 63;
            return 120;
    }
    return 0;
}

namespace {

// Undirected edges of the diagram, per the numbering in the header.
std::vector<std::pair<int, int>> diagram_edges(CartanFamily family, int rank) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case CartanFamily::A:
            for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
            break;
        case CartanFamily::D:
            for (int i = 1; i < rank - 2; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(rank - 2, rank - 1);
            edges.emplace_back(rank - 2, rank);
            break;
        case CartanFamily::E:
            for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(3, rank);
            break;
    }
    return edges;
}

}  // namespace

CartanDatum make_cartan(const std::string& label) {
    if (label.size() < 2)
        throw UnknownType("unrecognized Cartan label '" + label + "'");
    CartanFamily family;
    switch (label[0]) {
        case 'A': family = CartanFamily::A; break;
        case 'D': family = CartanFamily::D; break;
        case 'E': family = CartanFamily::E; break;
        default:
            throw UnknownType("unrecognized Cartan label '" + label +
                              "' (simply-laced types A, D, E only)");
    }
    for (size_t k = 1; k < label.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(label[k])))
            throw UnknownType("unrecognized Cartan label '" + label + "'");
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (const std::out_of_range&) {
        throw RankOutOfRange("rank in '" + label + "' out of range");
    }

    bool ok = (family == CartanFamily::A && rank >= 1) ||
              (family == CartanFamily::D && rank >= 4) ||
              (family == CartanFamily::E && rank >= 6 && rank <= 8);
    if (!ok)
        throw RankOutOfRange("rank " + std::to_string(rank) +
                             " undefined for type " + label.substr(0, 1));

    CartanDatum c;
    c.family = family;
    c.rank = rank;
    c.label = label;
    c.matrix_.assign(rank, std::vector<int>(rank, 0));
    c.adj_.assign(rank, {});
    for (int i = 0; i < rank; ++i) c.matrix_[i][i] = 2;
    for (auto [a, b] : diagram_edges(family, rank)) {
        c.matrix_[a - 1][b - 1] = -1;
        c.matrix_[b - 1][a - 1] = -1;
        c.adj_[a - 1].push_back(b);
        c.adj_[b - 1].push_back(a);
    }
    return c;
}

}  // namespace qchar
