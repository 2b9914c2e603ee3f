#pragma once

#include "toric/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Observed two-way contingency table of non-negative counts.
struct ContingencyTable {
    std::vector<IntVec> counts;
    std::vector<std::string> row_labels, col_labels;

    ContingencyTable(std::vector<IntVec> counts, std::vector<std::string> row_labels,
                     std::vector<std::string> col_labels);
    int rows() const { return static_cast<int>(counts.size()); }
    int cols() const { return static_cast<int>(counts[0].size()); }
    Int total() const;
};

/// Separate partitions of the row and the column labels; clusters never mix
/// axes. Members are sorted and clusters are ordered by smallest member, which
/// keeps cluster r aligned with model-matrix column 1+r (rows) or 1+R+c (cols).
struct Partition {
    std::vector<std::vector<int>> row_clusters, col_clusters;

    static Partition discrete(int I, int J);
    int cluster_count() const {
        return static_cast<int>(row_clusters.size() + col_clusters.size());
    }
};

/// One agglomeration step; `terminal` marks the final grand-cluster record,
/// which carries no matrix merge.
struct MergeStep {
    bool terminal = false;
    Axis axis = Axis::Rows;
    std::string label_a, label_b;  // cluster labels before merging
    Rat distance = 0;
    Partition partition;           // state after the step
    std::optional<ModelMatrix> model;
    std::optional<MergeReport> report;
};

struct MergeTrace {
    std::vector<MergeStep> steps;
};

/// Chi-squared distance between two same-axis clusters: the profile difference
/// weighted by the opposite-axis masses of the given table,
///   d2 = sum_m (x_im/x_i. - x_jm/x_j.)^2 / (n_.m / N),
/// computed exactly. Zero-count clusters or zero opposite margins are errors.
Rat chi2_distance(const ContingencyTable& t, Axis axis, const std::vector<int>& ci,
                  const std::vector<int>& cj);

std::string cluster_label(const ContingencyTable& t, Axis axis, const std::vector<int>& members);

/// Table whose cells are the partition-aggregated counts.
ContingencyTable aggregate(const ContingencyTable& t, const Partition& p);

/// Merges the closest same-axis cluster pair (ties: rows before columns, then
/// smallest member indices), sums its counts, merges the matching parameter
/// columns of `model` and attaches the algebraic report of that merge.
MergeStep agglomerate_step(const ContingencyTable& t, const Partition& p,
                           const ModelMatrix& model, const TermOrder& ord);

/// Runs the agglomeration from the discrete partition and the independence
/// model matrix down to one cluster per axis (I+J-2 steps), then records the
/// grand-cluster terminal marker.
MergeTrace full_dendrogram(const ContingencyTable& t);
MergeTrace full_dendrogram(const ContingencyTable& t, const TermOrder& ord, int max_steps = -1);

}  // namespace toric
