#include "toric/cluster.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace toric {

ContingencyTable::ContingencyTable(std::vector<IntVec> counts_in,
                                   std::vector<std::string> row_labels_in,
                                   std::vector<std::string> col_labels_in)
    : counts(std::move(counts_in)),
      row_labels(std::move(row_labels_in)),
      col_labels(std::move(col_labels_in)) {
    if (counts.empty() || counts[0].empty())
        throw std::invalid_argument("table needs at least one row and one column");
    for (const auto& r : counts) {
        if (r.size() != counts[0].size()) throw std::invalid_argument("ragged table");
        for (const Int& x : r)
            if (x < 0) throw std::invalid_argument("counts must be non-negative");
    }
    if (row_labels.size() != counts.size() || col_labels.size() != counts[0].size())
        throw std::invalid_argument("label count does not match table dimensions");
    if (total() < 1) throw std::invalid_argument("table must contain at least one observation");
}

Int ContingencyTable::total() const {
    Int t = 0;
    for (const auto& r : counts) t += vec_sum(r);
    return t;
}

Partition Partition::discrete(int I, int J) {
    Partition p;
    for (int i = 0; i < I; ++i) p.row_clusters.push_back({i});
    for (int j = 0; j < J; ++j) p.col_clusters.push_back({j});
    return p;
}

Rat chi2_distance(const ContingencyTable& t, Axis axis, const std::vector<int>& ci,
                  const std::vector<int>& cj) {
    const int m = axis == Axis::Rows ? t.cols() : t.rows();
    const int own = axis == Axis::Rows ? t.rows() : t.cols();
    auto cell = [&](int member, int cat) -> const Int& {
        return axis == Axis::Rows ? t.counts[member][cat] : t.counts[cat][member];
    };
    for (int x : ci)
        if (x < 0 || x >= own) throw std::invalid_argument("cluster member out of range");
    for (int x : cj)
        if (x < 0 || x >= own) throw std::invalid_argument("cluster member out of range");

    IntVec xi(m, 0), xj(m, 0);
    for (int member : ci)
        for (int c = 0; c < m; ++c) xi[c] += cell(member, c);
    for (int member : cj)
        for (int c = 0; c < m; ++c) xj[c] += cell(member, c);
    const Int si = vec_sum(xi), sj = vec_sum(xj);
    if (si == 0 || sj == 0) throw std::invalid_argument("cluster with zero total count");

    IntVec margin(m, 0);
    for (int o = 0; o < own; ++o)
        for (int c = 0; c < m; ++c) margin[c] += cell(o, c);
    const Int N = t.total();

    Rat d2 = 0;
    for (int c = 0; c < m; ++c) {
        if (margin[c] == 0) throw std::invalid_argument("category with zero margin");
        Rat diff = Rat(xi[c], si) - Rat(xj[c], sj);
        d2 += diff * diff * Rat(N, margin[c]);
    }
    return d2;
}

std::string cluster_label(const ContingencyTable& t, Axis axis, const std::vector<int>& members) {
    const auto& labels = axis == Axis::Rows ? t.row_labels : t.col_labels;
    std::string out;
    for (int m : members) {
        if (!out.empty()) out += "+";
        out += labels.at(m);
    }
    return out;
}

ContingencyTable aggregate(const ContingencyTable& t, const Partition& p) {
    std::vector<IntVec> counts(p.row_clusters.size(), IntVec(p.col_clusters.size(), 0));
    for (std::size_t r = 0; r < p.row_clusters.size(); ++r)
        for (std::size_t c = 0; c < p.col_clusters.size(); ++c)
            for (int i : p.row_clusters[r])
                for (int j : p.col_clusters[c]) counts[r][c] += t.counts[i][j];
    std::vector<std::string> rl, cl;
    for (const auto& cluster : p.row_clusters) rl.push_back(cluster_label(t, Axis::Rows, cluster));
    for (const auto& cluster : p.col_clusters)
        cl.push_back(cluster_label(t, Axis::Columns, cluster));
    return ContingencyTable(std::move(counts), std::move(rl), std::move(cl));
}

MergeStep agglomerate_step(const ContingencyTable& t, const Partition& p,
                           const ModelMatrix& model, const TermOrder& ord) {
    if (p.cluster_count() < 3) throw std::invalid_argument("no mergeable cluster pair left");
    ContingencyTable agg = aggregate(t, p);

    bool found = false;
    Axis best_axis = Axis::Rows;
    int bx = -1, by = -1;
    Rat best = 0;
    auto consider = [&](Axis axis, int count) {
        for (int x = 0; x < count; ++x)
            for (int y = x + 1; y < count; ++y) {
                Rat d = chi2_distance(agg, axis, {x}, {y});
                if (!found || d < best) {  // ties keep the earliest candidate
                    found = true;
                    best = d;
                    best_axis = axis;
                    bx = x;
                    by = y;
                }
            }
    };
    consider(Axis::Rows, static_cast<int>(p.row_clusters.size()));
    consider(Axis::Columns, static_cast<int>(p.col_clusters.size()));
    if (!found) throw std::invalid_argument("no mergeable cluster pair left");

    auto& clusters = best_axis == Axis::Rows ? p.row_clusters : p.col_clusters;
    MergeStep step;
    step.axis = best_axis;
    step.label_a = cluster_label(t, best_axis, clusters[bx]);
    step.label_b = cluster_label(t, best_axis, clusters[by]);
    step.distance = best;

    Partition next = p;
    auto& next_clusters = best_axis == Axis::Rows ? next.row_clusters : next.col_clusters;
    next_clusters[bx].insert(next_clusters[bx].end(), next_clusters[by].begin(),
                             next_clusters[by].end());
    std::sort(next_clusters[bx].begin(), next_clusters[bx].end());
    next_clusters.erase(next_clusters.begin() + by);
    step.partition = std::move(next);

    // cluster r of the row partition backs model column 1+r, cluster c of the
    // column partition backs column 1+R+c; merge_columns keeps the merged
    // column at the lower slot, matching the cluster ordering by smallest member
    const int base = best_axis == Axis::Rows ? 1 : 1 + static_cast<int>(p.row_clusters.size());
    const int colx = base + bx, coly = base + by;
    step.report = analyze_merge(model, colx, coly, ord);
    step.model = merge_columns(model, colx, coly);
    return step;
}

MergeTrace full_dendrogram(const ContingencyTable& t) {
    return full_dendrogram(t, TermOrder::degrevlex(t.rows() * t.cols()), -1);
}

MergeTrace full_dendrogram(const ContingencyTable& t, const TermOrder& ord, int max_steps) {
    Partition p = Partition::discrete(t.rows(), t.cols());
    ModelMatrix model = build_independence_matrix(t.rows(), t.cols());
    MergeTrace trace;
    int budget = max_steps < 0 ? std::numeric_limits<int>::max() : max_steps;
    while (p.cluster_count() > 2 && budget > 0) {
        MergeStep step = agglomerate_step(t, p, model, ord);
        p = step.partition;
        model = *step.model;
        trace.steps.push_back(std::move(step));
        --budget;
    }
    if (p.cluster_count() == 2) {
        // the grand cluster has no model matrix of its own; record a marker
        MergeStep marker;
        marker.terminal = true;
        marker.label_a = cluster_label(t, Axis::Rows, p.row_clusters[0]);
        marker.label_b = cluster_label(t, Axis::Columns, p.col_clusters[0]);
        marker.partition = p;
        trace.steps.push_back(std::move(marker));
    }
    return trace;
}

}  // namespace toric
