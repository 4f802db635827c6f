#pragma once

#include <string>
#include <vector>

namespace qchar {

enum class CartanFamily { A, D, E };

/// Symmetric Cartan matrix of a simply-laced type together with the
/// adjacency lists of its Dynkin diagram.  Nodes are numbered 1..rank:
///   A_n:  1 - 2 - ... - n
///   D_n:  1 - 2 - ... - (n-2) with both n-1 and n attached to n-2
///   E_n:  1 - 2 - ... - (n-1) with node n attached to node 3
struct CartanDatum {
    CartanFamily family;
    int rank = 0;
    std::string label;

    /// entry(i, j) with 1-based node indices: 2 on the diagonal, -1 for
    /// adjacent nodes, 0 otherwise.
    int entry(int i, int j) const { return matrix_[i - 1][j - 1]; }

    /// Nodes adjacent to i (1-based).
    const std::vector<int>& neighbors(int i) const { return adj_[i - 1]; }

    bool valid_node(int i) const { return i >= 1 && i <= rank; }

    int num_positive_roots() const;

    std::vector<std::vector<int>> matrix_;
    std::vector<std::vector<int>> adj_;
};

/// Build the datum for a label like "A3", "D5", "E8".
/// Throws UnknownType for families outside ADE, RankOutOfRange for
/// ranks where the diagram is not defined (A0, D3, E9, ...).
CartanDatum make_cartan(const std::string& label);

}  // namespace qchar
