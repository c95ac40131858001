#include "simcube/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace simcube {
namespace io {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json embedding_to_json(const SimplexEmbedding& s) {
    json j;
    j["dim"] = s.dim;
    j["edge_length"] = s.edge_length;
    j["edge_ratio"] = edge_ratio(s);
    j["vertices"] = s.vertices;
    return j;
}

SimplexEmbedding embedding_from_json(const json& j) {
    SimplexEmbedding s;
    try {
        s.dim = j.at("dim").get<std::size_t>();
        s.edge_length = j.at("edge_length").get<double>();
        s.vertices = j.at("vertices").get<std::vector<std::vector<double>>>();
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad embedding JSON: ") + e.what());
    }
    if (s.vertices.size() != s.dim + 1)
        throw parse_error("embedding JSON: expected dim+1 vertices");
    for (const auto& v : s.vertices) {
        if (v.size() != s.dim) throw parse_error("embedding JSON: vertex dimension mismatch");
        for (double x : v)
            if (!std::isfinite(x)) throw parse_error("embedding JSON: non-finite coordinate");
    }
    return s;
}

std::string embedding_to_csv(const SimplexEmbedding& s) {
    std::string out;
    for (const auto& v : s.vertices) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out += ',';
            out += format_full(v[k]);
        }
        out += '\n';
    }
    return out;
}

SimplexEmbedding embedding_from_csv(std::istream& in) {
    SimplexEmbedding s;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> v;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t pos = 0;
            double x = 0.0;
            try {
                x = std::stod(cell, &pos);
            } catch (const std::exception&) {
                throw parse_error("CSV: bad number '" + cell + "'");
            }
            while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos])))
                ++pos;
            if (pos != cell.size() || !std::isfinite(x))
                throw parse_error("CSV: bad number '" + cell + "'");
            v.push_back(x);
        }
        if (!v.empty()) s.vertices.push_back(std::move(v));
    }
    if (s.vertices.size() < 2) throw parse_error("CSV: need at least two vertices");
    s.dim = s.vertices.front().size();
    for (const auto& v : s.vertices)
        if (v.size() != s.dim) throw parse_error("CSV: ragged rows");
    if (s.vertices.size() != s.dim + 1)
        throw parse_error("CSV: expected dim+1 vertices for dimension " + std::to_string(s.dim));
    // No stored edge length in CSV; use the mean pairwise distance.
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < s.dim; ++k) {
                const double d = s.vertices[i][k] - s.vertices[j][k];
                acc += d * d;
            }
            sum += std::sqrt(acc);
            ++count;
        }
    s.edge_length = sum / static_cast<double>(count);
    if (!(s.edge_length > 0.0)) throw parse_error("CSV: degenerate vertex set");
    return s;
}

SimplexEmbedding load_embedding(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    if (first == '{') {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw parse_error(std::string("bad JSON in ") + path + ": " + e.what());
        }
        return embedding_from_json(j);
    }
    return embedding_from_csv(in);
}

json plan_to_json(const ConstructionPlan& p) {
    json steps = json::array();
    for (const PlanStep& s : p.steps) {
        json step;
        switch (s.op) {
        case PlanStep::Op::hadamard:
            step["op"] = "hadamard";
            step["order"] = s.order;
            break;
        case PlanStep::Op::fourier:
            step["op"] = "fourier";
            step["size"] = s.size;
            step["phases"] = s.phases;
            break;
        case PlanStep::Op::doubled:
            step["op"] = "double";
            break;
        case PlanStep::Op::reduce:
            step["op"] = "reduce";
            step["pivot"] = s.pivot == PivotMode::exhaustive ? "exhaustive" : "heuristic";
            break;
        }
        steps.push_back(std::move(step));
    }
    json j;
    j["target_dim"] = p.target_dim;
    j["strategy"] = p.strategy;
    j["achieved_norm"] = p.achieved_norm;
    j["achieved_edge"] = p.achieved_edge;
    j["bound_predicted"] = p.bound_predicted;
    j["steps"] = std::move(steps);
    return j;
}

json report_to_json(const bounds::BoundReport& r) {
    json j;
    j["n"] = r.n;
    j["upper"] = r.upper;
    j["fourier_basic"] = r.fourier_basic;
    j["fourier_refined"] = r.fourier_refined;
    j["hadamard_k"] = r.hadamard_k ? json(*r.hadamard_k) : json(nullptr);
    j["hadamard_gap"] = r.hadamard_gap ? json(*r.hadamard_gap) : json(nullptr);
    j["chain"] = r.chain ? json(*r.chain) : json(nullptr);
    j["chain_intermediate"] = r.chain_intermediate ? json(*r.chain_intermediate) : json(nullptr);
    j["ratio_floor_times_sqrt_n"] = r.ratio_floor_times_sqrt_n;
    j["best_lower"] = r.best_lower;
    return j;
}

std::string report_csv_header() {
    return "n,upper,fourier_basic,fourier_refined,hadamard_k,hadamard_gap,chain,"
           "chain_intermediate,ratio_floor_times_sqrt_n,best_lower";
}

std::string report_to_csv_row(const bounds::BoundReport& r) {
    std::string row = std::to_string(r.n);
    row += ',' + format_full(r.upper);
    row += ',' + format_full(r.fourier_basic);
    row += ',' + format_full(r.fourier_refined);
    row += ',';
    if (r.hadamard_k) row += std::to_string(*r.hadamard_k);
    row += ',';
    if (r.hadamard_gap) row += format_full(*r.hadamard_gap);
    row += ',';
    if (r.chain) row += format_full(*r.chain);
    row += ',';
    if (r.chain_intermediate) row += format_full(*r.chain_intermediate);
    row += ',' + format_full(r.ratio_floor_times_sqrt_n);
    row += ',' + format_full(r.best_lower);
    return row;
}

json sweep_row_to_json(const SweepRow& r) {
    json j;
    j["n"] = r.n;
    j["edge_length"] = r.edge_length;
    j["edge_ratio"] = r.edge_ratio;
    j["best_lower"] = r.best_lower;
    j["upper"] = r.upper;
    j["strategy"] = r.strategy;
    return j;
}

std::string sweep_csv_header() { return "n,edge_length,edge_ratio,best_lower,upper,strategy"; }

std::string sweep_row_to_csv(const SweepRow& r) {
    return std::to_string(r.n) + ',' + format_full(r.edge_length) + ',' +
           format_full(r.edge_ratio) + ',' + format_full(r.best_lower) + ',' +
           format_full(r.upper) + ',' + r.strategy;
}

json hadamard_to_json(const HadamardMatrix& h, const std::string& recipe) {
    json rows = json::array();
    for (int i = 0; i < h.order; ++i) {
        json row = json::array();
        for (int j = 0; j < h.order; ++j) row.push_back(static_cast<int>(h.at(i, j)));
        rows.push_back(std::move(row));
    }
    json j;
    j["order"] = h.order;
    j["recipe"] = recipe;
    j["rows"] = std::move(rows);
    return j;
}

std::string hadamard_to_text(const HadamardMatrix& h) {
    std::string out;
    out.reserve(static_cast<std::size_t>(h.order) * (h.order + 1));
    for (int i = 0; i < h.order; ++i) {
        for (int j = 0; j < h.order; ++j) out += h.at(i, j) > 0 ? '+' : '-';
        out += '\n';
    }
    return out;
}

} // namespace io
} // namespace simcube
