#include "gcut/report.hpp"

#include <iomanip>
#include <sstream>

namespace gcut {

namespace {

nlohmann::ordered_json edges_json(const std::vector<Edge>& edges) {
    auto out = nlohmann::ordered_json::array();
    for (const Edge& e : edges) {
        for (std::uint32_t i = 0; i < e.multiplicity; ++i) out.push_back({e.u, e.v});
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string joined(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

std::string witness_text(const VertexSet& side) {
    std::string out;
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(side[i]);
    }
    return out;
}

std::string optional_count(const std::optional<ExtendedCount>& c) { return c ? c->to_string() : ""; }

}  // namespace

nlohmann::ordered_json count_json(ExtendedCount c) {
    if (c.is_infinite()) return "inf";
    return c.value();
}

nlohmann::ordered_json cut_record(std::string_view graph, int k, std::string_view method, const CutResult& cut,
                                  double runtime_ms) {
    nlohmann::ordered_json j;
    j["graph"] = graph;
    j["k"] = k;
    j["method"] = method;
    j["value"] = count_json(cut.value);
    j["witness"] = cut.witness_side;
    j["cut_edges"] = edges_json(cut.crossing_edges);
    j["runtime_ms"] = runtime_ms;
    return j;
}

nlohmann::ordered_json verdict_record(const TheoremVerdict& v) {
    nlohmann::ordered_json j;
    j["graph"] = v.graph_name;
    j["family"] = to_string(v.family);
    j["n"] = v.n;
    j["k"] = v.input.regularity ? nlohmann::ordered_json(*v.input.regularity) : nlohmann::ordered_json(nullptr);
    j["girth_class"] = to_string(v.input.girth_class);
    j["lambda2_G"] = count_json(v.input.lambda2);
    j["xi_G"] = count_json(v.input.xi);
    j["which"] = to_string(v.which);
    j["predicted"] = v.preconditions_met() ? count_json(v.prediction.value) : nlohmann::ordered_json(nullptr);
    j["computed"] = count_json(v.computed);
    j["method"] = to_string(v.method);
    j["match"] = v.match;
    j["preconditions"] = {{"met", v.preconditions_met()}, {"failed", v.prediction.failed_preconditions}};
    j["witness"] = {{"side", v.witness.witness_side}, {"cut_edges", edges_json(v.witness.crossing_edges)}};
    if (v.flow_value) j["flow_value"] = count_json(*v.flow_value);
    if (v.brute_value) j["brute_value"] = count_json(*v.brute_value);
    j["methods_agree"] = v.methods_agree;
    if (v.product_xi3) j["product_xi3"] = count_json(*v.product_xi3);
    if (v.reference) j["reference"] = count_json(*v.reference);
    j["runtime_ms"] = v.runtime_ms;
    return j;
}

nlohmann::ordered_json classification_record(std::string_view graph, const ClassificationReport& r) {
    auto flag = [](const ClassificationFlag& f) {
        nlohmann::ordered_json j = {{"verdict", to_string(f.verdict)}};
        if (!f.reason.empty()) j["reason"] = f.reason;
        return j;
    };
    nlohmann::ordered_json j;
    j["graph"] = graph;
    j["maximally_edge_connected"] = flag(r.maximally_edge_connected);
    j["super_edge_connected"] = flag(r.super_edge_connected);
    j["maximally_restricted"] = flag(r.maximally_restricted);
    j["super_restricted"] = flag(r.super_restricted);
    j["maximally_3_restricted"] = flag(r.maximally_3_restricted);
    j["super_3_restricted"] = flag(r.super_3_restricted);
    return j;
}

std::string verdict_csv_header() {
    return "graph,family,n,k,girth_class,lambda2_G,xi_G,which,predicted,computed,method,match,"
           "preconditions,product_xi3,reference,witness,runtime_ms";
}

std::string verdict_csv_row(const TheoremVerdict& v) {
    std::ostringstream out;
    out << csv_field(v.graph_name) << ',' << to_string(v.family) << ',' << v.n << ','
        << (v.input.regularity ? std::to_string(*v.input.regularity) : "") << ',' << to_string(v.input.girth_class)
        << ',' << v.input.lambda2 << ',' << v.input.xi << ',' << to_string(v.which) << ','
        << (v.preconditions_met() ? v.prediction.value.to_string() : "") << ',' << v.computed << ','
        << to_string(v.method) << ',' << (v.match ? "true" : "false") << ','
        << csv_field(v.preconditions_met() ? "met" : joined(v.prediction.failed_preconditions, "; ")) << ','
        << optional_count(v.product_xi3) << ',' << optional_count(v.reference) << ','
        << witness_text(v.witness.witness_side) << ',' << std::fixed << std::setprecision(3) << v.runtime_ms;
    return out.str();
}

std::string verdict_text(const TheoremVerdict& v) {
    std::ostringstream out;
    out << v.graph_name << " x " << to_string(v.family) << '(' << v.n << "), " << to_string(v.which) << " by "
        << to_string(v.method) << '\n';
    out << "  G: k=" << (v.input.regularity ? std::to_string(*v.input.regularity) : "-") << ' '
        << to_string(v.input.girth_class) << " lambda2=" << v.input.lambda2 << " xi=" << v.input.xi << '\n';
    if (v.preconditions_met()) {
        out << "  predicted " << v.prediction.value << " = min{" << v.prediction.layer_term << ", "
            << v.prediction.local_term << "}\n";
    } else {
        out << "  preconditions not met: " << joined(v.prediction.failed_preconditions, "; ") << '\n';
    }
    out << "  computed " << v.computed;
    if (v.flow_value && v.brute_value) {
        out << " (flow " << *v.flow_value << ", brute " << *v.brute_value << ')';
    }
    out << '\n';
    if (v.product_xi3) out << "  xi3(product) " << *v.product_xi3 << '\n';
    if (v.reference) out << "  K2 reference " << *v.reference << '\n';
    out << "  witness side {" << witness_text(v.witness.witness_side) << "}\n";
    out << "  match " << (v.match ? "yes" : "no") << '\n';
    return out.str();
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json record) {
    record.erase("runtime_ms");
    return record;
}

}  // namespace gcut
