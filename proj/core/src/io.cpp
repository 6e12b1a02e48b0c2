#include "svdcent/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "svdcent/baselines.hpp"
#include "svdcent/errors.hpp"

namespace svdcent {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw io_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream content;
    content << stream.rdbuf();
    return content.str();
}

bool is_unsigned_integer(const std::string& token) {
    if (token.empty()) {
        return false;
    }
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

struct ParsedLine {
    int line_number = 0;
    std::vector<std::string> tokens;
};

// Splits the input into token lines, dropping blank lines and '#' comments.
std::vector<ParsedLine> tokenize(const std::string& text) {
    std::vector<ParsedLine> lines;
    std::istringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        ParsedLine parsed;
        parsed.line_number = line_number;
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            parsed.tokens.push_back(token);
        }
        lines.push_back(std::move(parsed));
    }
    return lines;
}

// Maps every token to a vertex id under the requested mode. auto_detect
// resolves to indices exactly when every token in the file is an unsigned
// integer.
class VertexInterner {
public:
    VertexInterner(const std::vector<ParsedLine>& lines, VertexIdMode mode) {
        bool all_integers = true;
        for (const ParsedLine& line : lines) {
            for (const std::string& token : line.tokens) {
                if (!is_unsigned_integer(token)) {
                    all_integers = false;
                }
            }
        }
        if (mode == VertexIdMode::auto_detect) {
            use_indices_ = all_integers;
        } else {
            use_indices_ = (mode == VertexIdMode::indices);
        }
    }

    int resolve(const std::string& token, int line_number) {
        if (use_indices_) {
            if (!is_unsigned_integer(token)) {
                throw io_error("line " + std::to_string(line_number) + ": token '" + token +
                               "' is not a vertex index");
            }
            int value = 0;
            try {
                value = std::stoi(token);
            } catch (const std::exception&) {
                throw io_error("line " + std::to_string(line_number) + ": vertex index '" +
                               token + "' is out of range");
            }
            max_index_ = std::max(max_index_, value);
            return value;
        }
        const auto [it, inserted] = label_ids_.emplace(token, static_cast<int>(labels_.size()));
        if (inserted) {
            labels_.push_back(token);
        }
        return it->second;
    }

    int vertex_count() const {
        return use_indices_ ? max_index_ + 1 : static_cast<int>(labels_.size());
    }

    bool uses_labels() const { return !use_indices_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    bool use_indices_ = true;
    int max_index_ = -1;
    std::map<std::string, int> label_ids_;
    std::vector<std::string> labels_;
};

std::string vertex_label(const DirectedGraph& g, int id) {
    if (!g.labels().empty()) {
        return g.labels()[static_cast<std::size_t>(id)];
    }
    return std::to_string(id);
}

ordered_json params_to_json(const RegularizationConfig& cfg) {
    ordered_json params;
    params["reg_mode"] = to_string(cfg.mode);
    params["lambda"] = cfg.lambda;
    params["tau"] = cfg.tau;
    return params;
}

ordered_json report_to_json(const CentralityReport& report) {
    ordered_json root;
    root["type"] = "centrality_report";
    root["params"] = params_to_json(report.params);
    if (report.alpha) {
        root["alpha"] = *report.alpha;
    }
    if (report.truncation_k) {
        root["rank_k"] = static_cast<std::int64_t>(*report.truncation_k);
    }
    return root;
}

// Blue-to-red HSV ramp over [0,1]; presentation only, so low precision.
std::string score_color(double score) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f 0.600 0.950", 0.661 * (1.0 - score));
    return buffer;
}

std::string report_to_csv(const CentralityReport& report, const DirectedGraph& g) {
    std::ostringstream out;
    out << "id,label,c_v,s_v,s_hub,s_auth\n";
    for (Eigen::Index i = 0; i < report.c_v.size(); ++i) {
        out << i << ',' << vertex_label(g, static_cast<int>(i)) << ','
            << format_double(report.c_v(i)) << ',' << format_double(report.s_v(i)) << ',';
        if (report.s_hub.size() > i) {
            out << format_double(report.s_hub(i));
        }
        out << ',';
        if (report.s_auth.size() > i) {
            out << format_double(report.s_auth(i));
        }
        out << '\n';
    }
    out << "\nid,tail,head,c_e,s_e\n";
    const auto& edges = g.edges();
    for (Eigen::Index e = 0; e < report.c_e.size(); ++e) {
        out << e << ',' << edges[static_cast<std::size_t>(e)].tail << ','
            << edges[static_cast<std::size_t>(e)].head << ',' << format_double(report.c_e(e))
            << ',' << format_double(report.s_e(e)) << '\n';
    }
    return out.str();
}

std::string report_to_csv(const CentralityReport& report, const Hypergraph& h) {
    std::ostringstream out;
    out << "id,label,c_v,s_v,s_hub,s_auth\n";
    for (Eigen::Index i = 0; i < report.c_v.size(); ++i) {
        out << i << ',' << i << ',' << format_double(report.c_v(i)) << ','
            << format_double(report.s_v(i)) << ",,\n";
    }
    out << "\nid,members,c_e,s_e\n";
    for (Eigen::Index e = 0; e < report.c_e.size(); ++e) {
        out << e << ',';
        const auto& members = h.hyperedges()[static_cast<std::size_t>(e)];
        for (std::size_t i = 0; i < members.size(); ++i) {
            out << (i == 0 ? "" : " ") << members[i];
        }
        out << ',' << format_double(report.c_e(e)) << ',' << format_double(report.s_e(e)) << '\n';
    }
    return out.str();
}

std::string report_to_dot(const CentralityReport& report, const DirectedGraph& g) {
    std::ostringstream out;
    out << "digraph centrality {\n  node [style=filled];\n";
    for (Eigen::Index i = 0; i < report.c_v.size(); ++i) {
        out << "  " << i << " [label=\"" << vertex_label(g, static_cast<int>(i))
            << "\", fillcolor=\"" << score_color(report.s_v(i)) << "\"];\n";
    }
    const auto& edges = g.edges();
    for (Eigen::Index e = 0; e < report.c_e.size(); ++e) {
        out << "  " << edges[static_cast<std::size_t>(e)].tail << " -> "
            << edges[static_cast<std::size_t>(e)].head << " [color=\""
            << score_color(report.s_e(e)) << "\", penwidth="
            << 1.0 + 2.0 * report.s_e(e) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string report_to_dot(const CentralityReport& report, const Hypergraph& h) {
    std::ostringstream out;
    out << "graph hypergraph_centrality {\n  node [style=filled];\n";
    for (Eigen::Index i = 0; i < report.c_v.size(); ++i) {
        out << "  v" << i << " [label=\"" << i << "\", shape=circle, fillcolor=\""
            << score_color(report.s_v(i)) << "\"];\n";
    }
    for (Eigen::Index e = 0; e < report.c_e.size(); ++e) {
        out << "  e" << e << " [label=\"e" << e << "\", shape=box, fillcolor=\""
            << score_color(report.s_e(e)) << "\"];\n";
    }
    for (std::size_t e = 0; e < h.hyperedges().size(); ++e) {
        for (int member : h.hyperedges()[e]) {
            out << "  v" << member << " -- e" << e << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

ordered_json report_vertices_json(const CentralityReport& report, const DirectedGraph* g) {
    ordered_json vertices = ordered_json::array();
    for (Eigen::Index i = 0; i < report.c_v.size(); ++i) {
        ordered_json row;
        row["id"] = i;
        row["label"] = g != nullptr ? vertex_label(*g, static_cast<int>(i)) : std::to_string(i);
        row["c_v"] = report.c_v(i);
        row["s_v"] = report.s_v(i);
        if (report.s_hub.size() > i) {
            row["s_hub"] = report.s_hub(i);
        }
        if (report.s_auth.size() > i) {
            row["s_auth"] = report.s_auth(i);
        }
        vertices.push_back(std::move(row));
    }
    return vertices;
}

} // namespace

DirectedGraph parse_edgelist_text(const std::string& text, VertexIdMode mode) {
    const std::vector<ParsedLine> lines = tokenize(text);
    VertexInterner interner(lines, mode);
    std::vector<Edge> edges;
    edges.reserve(lines.size());
    for (const ParsedLine& line : lines) {
        if (line.tokens.size() != 2) {
            throw io_error("line " + std::to_string(line.line_number) + ": expected 2 tokens, got " +
                           std::to_string(line.tokens.size()));
        }
        const int tail = interner.resolve(line.tokens[0], line.line_number);
        const int head = interner.resolve(line.tokens[1], line.line_number);
        if (tail == head) {
            throw io_error("line " + std::to_string(line.line_number) + ": self-loop at vertex '" +
                           line.tokens[0] + "'");
        }
        edges.push_back({tail, head});
    }
    if (interner.uses_labels()) {
        return DirectedGraph(interner.vertex_count(), std::move(edges), interner.labels());
    }
    return DirectedGraph(interner.vertex_count(), std::move(edges));
}

DirectedGraph parse_edgelist(const std::string& path, VertexIdMode mode) {
    return parse_edgelist_text(read_file(path), mode);
}

Hypergraph parse_hyperedgelist_text(const std::string& text, VertexIdMode mode) {
    const std::vector<ParsedLine> lines = tokenize(text);
    VertexInterner interner(lines, mode);
    std::vector<std::vector<int>> hyperedges;
    hyperedges.reserve(lines.size());
    for (const ParsedLine& line : lines) {
        if (line.tokens.empty()) {
            continue;
        }
        std::vector<int> members;
        members.reserve(line.tokens.size());
        for (const std::string& token : line.tokens) {
            members.push_back(interner.resolve(token, line.line_number));
        }
        hyperedges.push_back(std::move(members));
    }
    return Hypergraph(interner.vertex_count(), std::move(hyperedges));
}

Hypergraph parse_hyperedgelist(const std::string& path, VertexIdMode mode) {
    return parse_hyperedgelist_text(read_file(path), mode);
}

const char* to_string(OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::dot:
        return "dot";
    }
    return "unknown";
}

std::string export_report(const CentralityReport& report, const DirectedGraph& g,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::csv) {
        return report_to_csv(report, g);
    }
    if (fmt == OutputFormat::dot) {
        return report_to_dot(report, g);
    }
    ordered_json root = report_to_json(report);
    ordered_json graph;
    graph["kind"] = "directed";
    graph["n"] = g.vertex_count();
    ordered_json edge_list = ordered_json::array();
    for (const Edge& e : g.edges()) {
        edge_list.push_back(ordered_json::array({e.tail, e.head}));
    }
    graph["edges"] = std::move(edge_list);
    if (!g.labels().empty()) {
        graph["labels"] = g.labels();
    }
    root["graph"] = std::move(graph);
    root["vertices"] = report_vertices_json(report, &g);
    ordered_json edges = ordered_json::array();
    for (Eigen::Index e = 0; e < report.c_e.size(); ++e) {
        ordered_json row;
        row["id"] = e;
        row["tail"] = g.edges()[static_cast<std::size_t>(e)].tail;
        row["head"] = g.edges()[static_cast<std::size_t>(e)].head;
        row["c_e"] = report.c_e(e);
        row["s_e"] = report.s_e(e);
        edges.push_back(std::move(row));
    }
    root["edges"] = std::move(edges);
    return root.dump(2) + "\n";
}

std::string export_report(const CentralityReport& report, const Hypergraph& h, OutputFormat fmt) {
    if (fmt == OutputFormat::csv) {
        return report_to_csv(report, h);
    }
    if (fmt == OutputFormat::dot) {
        return report_to_dot(report, h);
    }
    ordered_json root = report_to_json(report);
    ordered_json graph;
    graph["kind"] = "hypergraph";
    graph["n"] = h.vertex_count();
    ordered_json hyperedges = ordered_json::array();
    for (const auto& members : h.hyperedges()) {
        hyperedges.push_back(members);
    }
    graph["hyperedges"] = std::move(hyperedges);
    root["graph"] = std::move(graph);
    root["vertices"] = report_vertices_json(report, nullptr);
    ordered_json edges = ordered_json::array();
    for (Eigen::Index e = 0; e < report.c_e.size(); ++e) {
        ordered_json row;
        row["id"] = e;
        row["members"] = h.hyperedges()[static_cast<std::size_t>(e)];
        row["c_e"] = report.c_e(e);
        row["s_e"] = report.s_e(e);
        edges.push_back(std::move(row));
    }
    root["edges"] = std::move(edges);
    return root.dump(2) + "\n";
}

CentralityReport import_report(const std::string& json_text) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("cannot parse report JSON: ") + e.what());
    }
    if (!root.is_object() || root.value("type", "") != "centrality_report") {
        throw io_error("JSON document is not a centrality report");
    }
    try {
        CentralityReport report;
        const auto& params = root.at("params");
        const std::string mode_name = params.at("reg_mode").get<std::string>();
        const auto mode = regularization_mode_from_string(mode_name);
        if (!mode) {
            throw io_error("report JSON carries an invalid reg_mode '" + mode_name + "'");
        }
        report.params.mode = *mode;
        report.params.lambda = params.at("lambda").get<double>();
        report.params.tau = params.at("tau").get<double>();
        if (root.contains("alpha")) {
            report.alpha = root.at("alpha").get<double>();
        }
        if (root.contains("rank_k")) {
            report.truncation_k = root.at("rank_k").get<std::int64_t>();
        }
        const auto& vertices = root.at("vertices");
        const Eigen::Index n = static_cast<Eigen::Index>(vertices.size());
        report.c_v.resize(n);
        report.s_v.resize(n);
        const bool has_hub = n > 0 && vertices.front().contains("s_hub");
        if (has_hub) {
            report.s_hub.resize(n);
            report.s_auth.resize(n);
        }
        Eigen::Index i = 0;
        for (const auto& row : vertices) {
            report.c_v(i) = row.at("c_v").get<double>();
            report.s_v(i) = row.at("s_v").get<double>();
            if (has_hub) {
                report.s_hub(i) = row.at("s_hub").get<double>();
                report.s_auth(i) = row.at("s_auth").get<double>();
            }
            ++i;
        }
        const auto& edges = root.at("edges");
        const Eigen::Index m = static_cast<Eigen::Index>(edges.size());
        report.c_e.resize(m);
        report.s_e.resize(m);
        Eigen::Index e = 0;
        for (const auto& row : edges) {
            report.c_e(e) = row.at("c_e").get<double>();
            report.s_e(e) = row.at("s_e").get<double>();
            ++e;
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("report JSON is missing required fields: ") + e.what());
    }
}

std::string export_experiment(const ExperimentResult& result, OutputFormat fmt) {
    if (fmt == OutputFormat::dot) {
        throw io_error("DOT output is not defined for experiment results");
    }
    if (fmt == OutputFormat::json) {
        ordered_json root;
        root["type"] = "experiment_result";
        root["name"] = result.name;
        root["params"] = params_to_json(result.params);
        if (result.alpha) {
            root["alpha"] = *result.alpha;
        }
        if (result.seed) {
            root["seed"] = *result.seed;
        }
        ordered_json metrics;
        for (const auto& [key, value] : result.metrics) {
            metrics[key] = value;
        }
        root["metrics"] = std::move(metrics);
        ordered_json tables;
        bool has_betweenness = false;
        for (const auto& [key, values] : result.tables) {
            tables[key] = values;
            has_betweenness = has_betweenness || key.rfind("betweenness", 0) == 0;
        }
        root["tables"] = std::move(tables);
        if (has_betweenness) {
            root["betweenness_convention"] = betweenness_convention;
        }
        return root.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "metric,value\n";
    out << "name," << result.name << '\n';
    out << "reg_mode," << to_string(result.params.mode) << '\n';
    out << "lambda," << format_double(result.params.lambda) << '\n';
    out << "tau," << format_double(result.params.tau) << '\n';
    if (result.alpha) {
        out << "alpha," << format_double(*result.alpha) << '\n';
    }
    if (result.seed) {
        out << "seed," << *result.seed << '\n';
    }
    for (const auto& [key, value] : result.metrics) {
        out << key << ',' << format_double(value) << '\n';
    }
    out << "\ntable,index,value\n";
    for (const auto& [key, values] : result.tables) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << key << ',' << i << ',' << format_double(values[i]) << '\n';
        }
    }
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    stream << content;
    if (!stream.good()) {
        throw io_error("write to '" + path + "' failed");
    }
}

} // namespace svdcent
