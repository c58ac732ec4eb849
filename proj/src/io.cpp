#include "mingreedy/io.hpp"

#include <fstream>
#include <sstream>

namespace mingreedy {

namespace fs = std::filesystem;

Graph read_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw InvalidInputError("edge list header must be 'n m'");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw InvalidInputError("malformed edge line: " + line);
        if (!(0 <= u && u < v && v < n))
            throw InvalidInputError("edge must satisfy 0 <= u < v < n: " + line);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) throw InvalidInputError("edge list is missing the 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw InvalidInputError("edge list declares " + std::to_string(m) + " edges but has " +
                                std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edge_list();
    out << g.label_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

IntervalRepresentation intervals_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInputError("interval file must be a JSON array");
    IntervalRepresentation rep;
    rep.intervals.resize(j.size());
    std::vector<bool> seen(j.size(), false);
    for (const json& item : j) {
        int label = item.at("label").get<int>();
        if (label < 0 || label >= static_cast<int>(j.size()) || seen[label])
            throw InvalidInputError("interval labels must be 0..n-1 without repeats");
        seen[label] = true;
        long long lo_den = item.at("lo_den").get<long long>();
        long long hi_den = item.at("hi_den").get<long long>();
        if (lo_den == 0 || hi_den == 0) throw InvalidInputError("zero denominator");
        rep.intervals[label] = {Rational(item.at("lo_num").get<long long>(), lo_den),
                                Rational(item.at("hi_num").get<long long>(), hi_den)};
    }
    return rep;
}

json intervals_to_json(const IntervalRepresentation& rep) {
    json out = json::array();
    for (int v = 0; v < rep.size(); ++v) {
        const Interval& iv = rep.intervals[v];
        out.push_back({{"label", v},
                       {"lo_num", iv.lo.numerator()},
                       {"lo_den", iv.lo.denominator()},
                       {"hi_num", iv.hi.numerator()},
                       {"hi_den", iv.hi.denominator()}});
    }
    return out;
}

json tree_decomposition_to_json(const TreeDecomposition& td) {
    json bags = json::array();
    for (const VertexList& bag : td.bags) bags.push_back(bag);
    json edges = json::array();
    for (const auto& [a, b] : td.edges) edges.push_back(json::array({a, b}));
    return {{"bags", bags}, {"edges", edges}};
}

TreeDecomposition tree_decomposition_from_json(const json& j) {
    TreeDecomposition td;
    for (const json& bag : j.at("bags")) td.bags.push_back(bag.get<VertexList>());
    for (const json& e : j.at("edges")) td.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return td;
}

json trace_to_json(const GreedyTrace& t) {
    json picks = json::array();
    for (const GreedyPick& p : t.picks)
        picks.push_back({{"vertex", p.vertex},
                         {"degree", p.degree},
                         {"tie_set_size", p.tie_set_size},
                         {"components_before", p.components_before},
                         {"components_after", p.components_after}});
    return {{"picks", picks}, {"solution", t.solution}};
}

GreedyTrace trace_from_json(const json& j) {
    GreedyTrace t;
    for (const json& p : j.at("picks"))
        t.picks.push_back({p.at("vertex").get<int>(), p.at("degree").get<int>(),
                           p.at("tie_set_size").get<int>(), p.at("components_before").get<int>(),
                           p.at("components_after").get<int>()});
    t.solution = j.at("solution").get<VertexList>();
    return t;
}

json ledger_to_json(const MoveLedger& l) {
    json records = json::array();
    for (const MoveRecord& r : l.records)
        records.push_back({{"vertex", r.vertex},
                           {"j", r.j},
                           {"components_before", r.components_before},
                           {"components_after", r.components_after}});
    return {{"reference_set", l.reference_set}, {"records", records}, {"m", l.counts}};
}

namespace {

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write " + path.string());
    out << content;
}

std::string labels_to_lines(const VertexList& labels) {
    std::string out;
    for (Vertex v : labels) out += std::to_string(v) + "\n";
    return out;
}

VertexList labels_from_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot read " + path.string());
    VertexList out;
    long long v;
    while (in >> v) out.push_back(static_cast<Vertex>(v));
    return out;
}

json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot read " + path.string());
    json j;
    in >> j;
    return j;
}

} // namespace

void write_instance_dir(const fs::path& dir, const FamilyInstance& inst) {
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "edges.txt");
        if (!out) throw InvalidInputError("cannot write " + (dir / "edges.txt").string());
        write_edge_list(out, inst.graph);
    }
    json meta = {{"schema_version", 1},
                 {"family", inst.family},
                 {"parameter", inst.parameter},
                 {"n", inst.graph.label_count()}};
    if (inst.seed) meta["seed"] = *inst.seed;
    if (inst.expected_greedy) meta["expected_greedy"] = *inst.expected_greedy;
    if (inst.expected_opt) meta["expected_opt"] = *inst.expected_opt;
    write_text_file(dir / "meta.json", meta.dump(2) + "\n");
    if (inst.representation)
        write_text_file(dir / "intervals.json", intervals_to_json(*inst.representation).dump(2) + "\n");
    if (inst.track_representations) {
        write_text_file(dir / "intervals_track1.json",
                        intervals_to_json(inst.track_representations->first).dump(2) + "\n");
        write_text_file(dir / "intervals_track2.json",
                        intervals_to_json(inst.track_representations->second).dump(2) + "\n");
    }
    if (!inst.adversarial_script.empty())
        write_text_file(dir / "script.txt", labels_to_lines(inst.adversarial_script));
    if (!inst.optimum_certificate.empty())
        write_text_file(dir / "certificate.txt", labels_to_lines(inst.optimum_certificate));
}

FamilyInstance read_instance_dir(const fs::path& dir) {
    FamilyInstance inst;
    {
        std::ifstream in(dir / "edges.txt");
        if (!in) throw InvalidInputError("cannot read " + (dir / "edges.txt").string());
        inst.graph = read_edge_list(in);
    }
    json meta = read_json_file(dir / "meta.json");
    inst.family = meta.at("family").get<std::string>();
    inst.parameter = meta.at("parameter").get<long long>();
    if (meta.contains("seed")) inst.seed = meta["seed"].get<std::uint64_t>();
    if (meta.contains("expected_greedy")) inst.expected_greedy = meta["expected_greedy"].get<int>();
    if (meta.contains("expected_opt")) inst.expected_opt = meta["expected_opt"].get<int>();
    if (fs::exists(dir / "intervals.json"))
        inst.representation = intervals_from_json(read_json_file(dir / "intervals.json"));
    if (fs::exists(dir / "intervals_track1.json"))
        inst.track_representations = {
            intervals_from_json(read_json_file(dir / "intervals_track1.json")),
            intervals_from_json(read_json_file(dir / "intervals_track2.json"))};
    if (fs::exists(dir / "script.txt")) inst.adversarial_script = labels_from_file(dir / "script.txt");
    if (fs::exists(dir / "certificate.txt"))
        inst.optimum_certificate = labels_from_file(dir / "certificate.txt");
    return inst;
}

} // namespace mingreedy
