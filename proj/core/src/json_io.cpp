#include "wilf/json_io.hpp"

namespace wilf {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw domain_error(std::string("expected an array for ") + what);
    std::vector<int> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw domain_error(std::string("expected integers in ") + what);
        v.push_back(e.get<int>());
    }
    return v;
}

json bigint_json(const BigInt& v) {
    // Desk-scale values fit in 64 bits; anything larger is emitted as a string.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

}  // namespace

json to_json(const Permutation& p) { return json(p.word()); }

Permutation permutation_from_json(const json& j) { return Permutation(int_array(j, "permutation")); }

json to_json(const Partition& p) { return json(p.parts); }

Partition partition_from_json(const json& j) { return Partition(int_array(j, "partition")); }

json to_json(const StandardYoungTableau& t) { return json(t.rows()); }

StandardYoungTableau syt_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("expected an array of rows for a tableau");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) rows.push_back(int_array(r, "tableau row"));
    return StandardYoungTableau(std::move(rows));
}

json to_json(const Transversal& t) {
    json ones = json::array();
    for (int c = 1; c <= t.cols(); ++c) ones.push_back(json::array({c, t.one_in_column(c)}));
    return json{{"rows", t.diagram().row_lengths}, {"ones", ones}};
}

Transversal transversal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("ones"))
        throw domain_error("expected {\"rows\":[...],\"ones\":[[c,r],...]} for a transversal");
    YoungDiagram d(int_array(j["rows"], "diagram rows"));
    std::vector<int> ones(static_cast<size_t>(d.cols()), 0);
    for (const auto& cell : j["ones"]) {
        auto cr = int_array(cell, "transversal cell");
        if (cr.size() != 2) throw domain_error("transversal cells must be [column,row] pairs");
        if (cr[0] < 1 || cr[0] > d.cols() || ones[static_cast<size_t>(cr[0]) - 1])
            throw domain_error("transversal cells must name each column exactly once");
        ones[static_cast<size_t>(cr[0]) - 1] = cr[1];
    }
    return Transversal(std::move(d), std::move(ones));
}

json to_json(const Matching& m) {
    json arr = json::array();
    for (auto [i, j] : m.arcs()) arr.push_back(json::array({i, j}));
    return arr;
}

Matching matching_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("expected an array of arcs for a matching");
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : j) {
        auto ij = int_array(a, "arc");
        if (ij.size() != 2) throw domain_error("matching arcs must be [i,j] pairs");
        arcs.emplace_back(ij[0], ij[1]);
    }
    return Matching(std::move(arcs));
}

json to_json(const OscillatingTableau& o) {
    json arr = json::array();
    for (const auto& s : o.shapes()) arr.push_back(s.parts);
    return arr;
}

OscillatingTableau oscillating_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("expected an array of partitions for an oscillating tableau");
    std::vector<Partition> shapes;
    for (const auto& s : j) shapes.push_back(Partition(int_array(s, "shape")));
    return OscillatingTableau(std::move(shapes));
}

json to_json(const LatticePath& p) { return json{{"steps", p.word()}, {"start", p.y0()}}; }

LatticePath path_from_json(const json& j) {
    if (!j.is_object() || !j.contains("steps"))
        throw domain_error("expected {\"steps\":\"UD...\",\"start\":h} for a path");
    int start = j.value("start", 0);
    return LatticePath(0, start, j["steps"].get<std::string>());
}

json to_json(const DyckPair& pair) { return json{{"P", pair.p.word()}, {"Q", pair.q.word()}}; }

DyckPair pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
        throw domain_error("expected {\"P\":\"UU...\",\"Q\":\"UD...\"} for a path pair");
    return DyckPair(LatticePath(0, 0, j["P"].get<std::string>()),
                    LatticePath(0, 0, j["Q"].get<std::string>()));
}

json to_json(const PipelineTrace& trace) {
    return json{{"transversal", to_json(trace.transversal)},
                {"matching", to_json(trace.matching)},
                {"tableau", to_json(trace.tableau)},
                {"pair", to_json(trace.pair)},
                {"pair_prime", to_json(trace.pair_prime)},
                {"tableau_prime", to_json(trace.tableau_prime)},
                {"matching_prime", to_json(trace.matching_prime)},
                {"transversal_prime", to_json(trace.transversal_prime)}};
}

json to_json(const VerificationReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back(json{{"n", row.n},
                            {"label", row.label},
                            {"expected", bigint_json(row.expected)},
                            {"computed", bigint_json(row.computed)}});
    return json{{"name", rep.name},
                {"parameters", rep.parameters},
                {"rows", rows},
                {"pass", rep.pass},
                {"wall_seconds", rep.wall_seconds}};
}

}  // namespace wilf
