#include "lrc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lrc {

using json = nlohmann::ordered_json;

namespace {

json parseOrThrow(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string(what) + ": not valid JSON");
    return j;
}

void expectFormat(const json& j, const std::string& tag, const char* what) {
    if (!j.is_object() || !j.contains("format") || j["format"] != tag)
        throw ParseError(std::string(what) + ": missing or wrong format tag, expected \"" +
                         tag + "\"");
}

} // namespace

std::string serializeInstance(const LayeredGraph& g) {
    json j;
    j["format"] = "layered-instance/1";
    json layers = json::array();
    for (const auto& layer : g.layers) {
        json row = json::array();
        for (const Vertex& v : layer) row.push_back({{"label", v.label}, {"width", v.width}});
        layers.push_back(row);
    }
    j["layers"] = layers;
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{e.first.layer, e.first.pos}, {e.second.layer, e.second.pos}});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

LayeredGraph parseInstance(const std::string& text) {
    json j = parseOrThrow(text, "instance");
    expectFormat(j, "layered-instance/1", "instance");
    if (!j.contains("layers") || !j["layers"].is_array())
        throw ParseError("instance: \"layers\" must be an array of arrays");
    LayeredGraph g;
    int li = 0;
    for (const json& row : j["layers"]) {
        li++;
        if (!row.is_array()) throw ParseError("instance: layer " + std::to_string(li) +
                                              " is not an array");
        for (const json& cell : row) {
            if (!cell.is_object() || !cell.contains("width") ||
                !cell["width"].is_number_integer())
                throw ParseError("instance: layer " + std::to_string(li) +
                                 " has a vertex without an integer width");
            g.addVertex(li, cell["width"].get<int>(),
                        cell.value("label", std::string{}));
        }
    }
    if (g.layerCount() == 0) g.layers.clear();
    if (j.contains("edges")) {
        int ei = 0;
        for (const json& e : j["edges"]) {
            ei++;
            if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2 ||
                !e[1].is_array() || e[1].size() != 2)
                throw ParseError("instance: edge " + std::to_string(ei) +
                                 " must be [[layer,pos],[layer,pos]]");
            VertexRef a{e[0][0].get<int>(), e[0][1].get<int>()};
            VertexRef b{e[1][0].get<int>(), e[1][1].get<int>()};
            if (!g.inRange(a) || !g.inRange(b))
                throw ParseError("instance: edge " + std::to_string(ei) +
                                 " references a vertex out of range");
            g.addEdge(a, b);
        }
    }
    return g;
}

std::string serializeRepresentation(const Representation& r) {
    json j;
    j["format"] = "layered-representation/1";
    j["model"] = r.model == CoordModel::Integer ? "integer" : "rational";
    json positions = json::array();
    for (size_t i = 0; i < r.positions.size(); i++) {
        for (size_t p = 0; p < r.positions[i].size(); p++) {
            const Rational& x = r.positions[i][p];
            json entry;
            entry["layer"] = static_cast<int>(i + 1);
            entry["pos"] = static_cast<int>(p + 1);
            if (x.isIntegral()) entry["x"] = x.num;
            else entry["x"] = {x.num, x.den};
            positions.push_back(entry);
        }
    }
    j["positions"] = positions;
    return j.dump(2) + "\n";
}

Representation parseRepresentation(const std::string& text) {
    json j = parseOrThrow(text, "representation");
    expectFormat(j, "layered-representation/1", "representation");
    Representation r;
    std::string model = j.value("model", "");
    if (model == "integer") r.model = CoordModel::Integer;
    else if (model == "rational") r.model = CoordModel::Rational;
    else throw ParseError("representation: model must be \"integer\" or \"rational\"");
    if (!j.contains("positions") || !j["positions"].is_array())
        throw ParseError("representation: \"positions\" must be an array");
    int idx = 0;
    for (const json& e : j["positions"]) {
        idx++;
        std::string at = "representation: positions[" + std::to_string(idx) + "]";
        if (!e.is_object() || !e.contains("layer") || !e.contains("pos") || !e.contains("x"))
            throw ParseError(at + ": need layer, pos, x");
        int layer = e["layer"].get<int>();
        int pos = e["pos"].get<int>();
        if (layer < 1 || pos < 1) throw ParseError(at + ": layer/pos must be >= 1");
        Rational x;
        if (e["x"].is_number_integer()) {
            x = Rational(e["x"].get<long long>());
        } else if (e["x"].is_array() && e["x"].size() == 2 && e["x"][0].is_number_integer() &&
                   e["x"][1].is_number_integer()) {
            if (r.model == CoordModel::Integer)
                throw ParseError(at + ": rational coordinate in an integer-model file");
            long long den = e["x"][1].get<long long>();
            if (den == 0) throw ParseError(at + ": zero denominator");
            x = Rational(e["x"][0].get<long long>(), den);
        } else {
            throw ParseError(at + ": x must be an integer or [num, den]");
        }
        while (static_cast<int>(r.positions.size()) < layer) r.positions.emplace_back();
        auto& row = r.positions[layer - 1];
        if (static_cast<int>(row.size()) + 1 != pos)
            throw ParseError(at + ": positions must be dense and ordered by (layer, pos)");
        row.push_back(x);
    }
    return r;
}

std::string serializeFormula(const RectilinearFormula& f) {
    json j;
    j["format"] = "monotone-formula/1";
    j["variables"] = f.variables;
    json clauses = json::array();
    for (const ClauseSpec& c : f.clauses) {
        clauses.push_back({{"literals", c.literals},
                           {"polarity", c.polarity == Polarity::Positive ? "positive" : "negative"},
                           {"depth", c.depth}});
    }
    j["clauses"] = clauses;
    return j.dump(2) + "\n";
}

RectilinearFormula parseFormula(const std::string& text) {
    json j = parseOrThrow(text, "formula");
    expectFormat(j, "monotone-formula/1", "formula");
    RectilinearFormula f;
    if (!j.contains("variables") || !j["variables"].is_array())
        throw ParseError("formula: \"variables\" must be an array of names");
    for (const json& v : j["variables"]) {
        if (!v.is_string()) throw ParseError("formula: variable names must be strings");
        f.variables.push_back(v.get<std::string>());
    }
    int ci = 0;
    for (const json& c : j.value("clauses", json::array())) {
        ci++;
        std::string at = "formula: clauses[" + std::to_string(ci) + "]";
        ClauseSpec spec;
        if (!c.is_object() || !c.contains("literals") || !c["literals"].is_array())
            throw ParseError(at + ": needs a literals array");
        for (const json& l : c["literals"]) spec.literals.push_back(l.get<std::string>());
        std::string pol = c.value("polarity", "positive");
        if (pol == "positive") spec.polarity = Polarity::Positive;
        else if (pol == "negative") spec.polarity = Polarity::Negative;
        else throw ParseError(at + ": polarity must be positive or negative");
        spec.depth = c.value("depth", 1);
        f.clauses.push_back(std::move(spec));
    }
    return f;
}

std::string serializeReport(const RunReport& r) {
    json j;
    j["format"] = "run-report/1";
    j["command"] = r.command;
    j["instanceDigest"] = r.instanceDigest;
    j["solver"] = r.solver;
    j["contacts"] = r.contacts;
    if (r.optReference) j["optReference"] = *r.optReference;
    if (r.ratio) j["ratio"] = {r.ratio->first, r.ratio->second};
    j["wallMs"] = r.wallMs;
    if (r.visitedStates) j["visitedStates"] = *r.visitedStates;
    if (r.stateBound) j["stateBound"] = *r.stateBound;
    return j.dump(2) + "\n";
}

RunReport parseReport(const std::string& text) {
    json j = parseOrThrow(text, "report");
    expectFormat(j, "run-report/1", "report");
    RunReport r;
    r.command = j.value("command", "");
    r.instanceDigest = j.value("instanceDigest", "");
    r.solver = j.value("solver", "");
    r.contacts = j.value("contacts", 0LL);
    if (j.contains("optReference")) r.optReference = j["optReference"].get<long long>();
    if (j.contains("ratio"))
        r.ratio = {j["ratio"][0].get<long long>(), j["ratio"][1].get<long long>()};
    r.wallMs = j.value("wallMs", 0.0);
    if (j.contains("visitedStates")) r.visitedStates = j["visitedStates"].get<long long>();
    if (j.contains("stateBound")) r.stateBound = j["stateBound"].get<long long>();
    return r;
}

std::string instanceDigest(const LayeredGraph& g) {
    std::string data = serializeInstance(g);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

} // namespace lrc
