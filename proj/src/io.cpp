#include "toric/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace toric {

using nlohmann::json;

namespace {

Int parse_count(const std::string& tok, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw InputError(std::string("bad ") + what + ": '" + tok + "'");
    return Int(tok);
}

std::string rat_text(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

ModelMatrix read_matrix_text(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw InputError("empty matrix file");
    std::istringstream header(lines[0]);
    long k = 0, n = 0;
    if (!(header >> k >> n) || k < 1 || n < 1) throw InputError("bad matrix header, expected 'k n'");
    if (static_cast<long>(lines.size()) != k + 1)
        throw InputError("expected " + std::to_string(k) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));
    std::vector<IntVec> rows;
    for (long r = 1; r <= k; ++r) {
        std::istringstream ls(lines[r]);
        IntVec row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_count(tok, "matrix entry"));
        if (static_cast<long>(row.size()) != n)
            throw InputError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    return ModelMatrix::from_rows(std::move(rows));
}

std::string write_matrix_text(const ModelMatrix& A) {
    std::ostringstream out;
    out << A.rows() << " " << A.cols() << "\n";
    for (int r = 0; r < A.rows(); ++r) {
        for (int c = 0; c < A.cols(); ++c) out << (c ? " " : "") << A.at(r, c);
        out << "\n";
    }
    return out.str();
}

json matrix_to_json(const ModelMatrix& A) {
    json rows = json::array();
    for (int r = 0; r < A.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < A.cols(); ++c) row.push_back(A.at(r, c).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    json rl = json::array();
    for (const auto& l : A.row_labels()) rl.push_back(l.text());
    return json{{"rows", rows}, {"row_labels", rl}, {"col_labels", A.col_labels()}};
}

ModelMatrix matrix_from_json(const json& j) {
    try {
        std::vector<IntVec> rows;
        for (const auto& jr : j.at("rows")) {
            IntVec row;
            for (const auto& e : jr) {
                long long v = e.get<long long>();
                if (v < 0) throw InputError("matrix entries must be non-negative");
                row.push_back(Int(v));
            }
            rows.push_back(std::move(row));
        }
        std::vector<CellLabel> rl;
        for (const auto& l : j.at("row_labels")) rl.push_back(CellLabel::parse(l.get<std::string>()));
        std::vector<std::string> cl = j.at("col_labels").get<std::vector<std::string>>();
        return ModelMatrix(std::move(rows), std::move(rl), std::move(cl));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad matrix JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("bad matrix JSON: ") + e.what());
    }
}

ModelMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    char c = 0;
    while (in.get(c) && (c == ' ' || c == '\t' || c == '\n' || c == '\r')) {
    }
    in.unget();
    if (c == '{') {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw InputError(std::string("bad JSON in ") + path + ": " + e.what());
        }
        return matrix_from_json(j);
    }
    return read_matrix_text(in);
}

json binomial_to_json(const Binomial& b, const std::vector<std::string>& vars) {
    auto side = [&](const IntVec& m) {
        json o = json::object();
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) o[vars.at(i)] = m[i].convert_to<long long>();
        return o;
    };
    return json{{"plus", side(b.plus())}, {"minus", side(b.minus())}};
}

Binomial binomial_from_json(const json& j, const std::vector<std::string>& vars) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
    auto side = [&](const json& o) {
        IntVec m(vars.size(), 0);
        for (const auto& [name, exp] : o.items()) {
            auto it = index.find(name);
            if (it == index.end()) throw InputError("unknown variable " + name);
            m[it->second] = Int(exp.get<long long>());
        }
        return m;
    };
    try {
        return Binomial::from_parts(side(j.at("plus")), side(j.at("minus")));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad binomial JSON: ") + e.what());
    }
}

json ideal_to_json(const IdealPresentation& I, const std::vector<std::string>& vars) {
    json gens = json::array(), gb = json::array();
    for (const auto& g : I.generators) gens.push_back(binomial_to_json(g, vars));
    for (const auto& g : I.groebner) gb.push_back(binomial_to_json(g, vars));
    return json{{"order", I.order.name()}, {"generators", gens}, {"groebner", gb}};
}

IdealPresentation ideal_from_json(const json& j, const std::vector<std::string>& vars) {
    IdealPresentation I;
    I.ambient_dim = static_cast<int>(vars.size());
    try {
        I.order = TermOrder::parse(j.at("order").get<std::string>(), I.ambient_dim);
        for (const auto& g : j.at("generators")) I.generators.push_back(binomial_from_json(g, vars));
        for (const auto& g : j.at("groebner")) I.groebner.push_back(binomial_from_json(g, vars));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad ideal JSON: ") + e.what());
    }
    return I;
}

std::string ideal_text(const IdealPresentation& I, const std::vector<std::string>& vars) {
    if (I.groebner.empty()) return "<zero ideal>\n";
    std::string out;
    for (const auto& g : I.groebner) out += g.text(vars) + "\n";
    return out;
}

json merge_report_to_json(const MergeReport& r, const std::vector<std::string>& vars) {
    json lin = json::array(), high = json::array();
    for (const auto& g : r.added_linear) lin.push_back(binomial_to_json(g, vars));
    for (const auto& g : r.added_higher) high.push_back(binomial_to_json(g, vars));
    return json{{"identical", r.identical},
                {"added_linear", lin},
                {"added_higher", high},
                {"base_gb_size", r.base.groebner.size()},
                {"merged_gb_size", r.merged.groebner.size()},
                {"interpretable", r.interpretable}};
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    for (auto& f : out) {
        auto a = f.find_first_not_of(" \t");
        auto b = f.find_last_not_of(" \t");
        f = a == std::string::npos ? "" : f.substr(a, b - a + 1);
    }
    return out;
}

}  // namespace

ContingencyTable read_table_csv(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    if (lines.size() < 2) throw InputError("table CSV needs a header and at least one row");

    std::vector<std::string> header = split_csv_line(lines[0]);
    if (header.size() < 2) throw InputError("table CSV needs at least one column");
    std::vector<std::string> col_labels(header.begin() + 1, header.end());

    std::vector<IntVec> counts;
    std::vector<std::string> row_labels;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        std::vector<std::string> fields = split_csv_line(lines[r]);
        if (fields.size() != header.size())
            throw InputError("row " + std::to_string(r) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(header.size()));
        row_labels.push_back(fields[0]);
        IntVec row;
        for (std::size_t c = 1; c < fields.size(); ++c)
            row.push_back(parse_count(fields[c], "count"));
        counts.push_back(std::move(row));
    }
    try {
        return ContingencyTable(std::move(counts), std::move(row_labels), std::move(col_labels));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

ContingencyTable read_table_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_table_csv(in);
}

json trace_to_json(const MergeTrace& trace, const ContingencyTable& t) {
    ModelMatrix base = build_independence_matrix(t.rows(), t.cols());
    std::vector<std::string> vars = base.var_names();
    json steps = json::array();
    for (const auto& s : trace.steps) {
        if (s.terminal) {
            std::vector<std::string> all;
            for (const auto& c : s.partition.row_clusters)
                for (int m : c) all.push_back(t.row_labels.at(m));
            for (const auto& c : s.partition.col_clusters)
                for (int m : c) all.push_back(t.col_labels.at(m));
            steps.push_back(json{{"terminal", true},
                                 {"merged", json::array({s.label_a, s.label_b})},
                                 {"grand_cluster", all}});
            continue;
        }
        json clusters = json::array();
        for (const auto& c : s.partition.row_clusters) {
            json members = json::array();
            for (int m : c) members.push_back(t.row_labels.at(m));
            clusters.push_back(std::move(members));
        }
        for (const auto& c : s.partition.col_clusters) {
            json members = json::array();
            for (int m : c) members.push_back(t.col_labels.at(m));
            clusters.push_back(std::move(members));
        }
        steps.push_back(json{{"merged", json::array({s.label_a, s.label_b})},
                             {"distance", rat_text(s.distance)},
                             {"clusters", clusters},
                             {"report", merge_report_to_json(*s.report, vars)}});
    }
    return steps;
}

}  // namespace toric
