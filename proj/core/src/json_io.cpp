#include "schemelab/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace schemelab {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

OrdinalSet ordinal_set_from(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("expected an array of ordinals");
    OrdinalSet out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("expected an integer ordinal");
        out.push_back(x.get<Ordinal>());
    }
    return out;
}

}  // namespace

std::string scheme_to_json(const Scheme& s) {
    // Hand-rolled: one member set per line keeps large schemes readable and
    // the byte layout canonical.
    std::ostringstream os;
    os << "{\n  \"type_seq\": [";
    const auto entries = s.type_seq().entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << '[' << entries[i].m << ',' << entries[i].n << ',' << entries[i].r << ']';
    }
    os << "],\n  \"rank\": " << s.rank() << ",\n  \"levels\": [\n";
    for (int k = 0; k <= s.rank(); ++k) {
        os << "    [";
        const auto& lvl = s.level(k);
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            if (i) os << ',';
            os << '[';
            for (std::size_t t = 0; t < lvl[i].size(); ++t) {
                if (t) os << ',';
                os << lvl[i][t];
            }
            os << ']';
        }
        os << ']' << (k < s.rank() ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
    return os.str();
}

namespace {

Scheme scheme_from_json_impl(const std::string& text, long long domain_cap) {
    const auto j = parse(text);
    if (!j.is_object() || !j.contains("type_seq") || !j.contains("levels"))
        throw ParseError("scheme JSON needs 'type_seq' and 'levels'");

    std::vector<TypeEntry> entries;
    for (const auto& row : j.at("type_seq")) {
        if (!row.is_array() || row.size() != 3)
            throw ParseError("type_seq entries must be [m, n, r] triples");
        entries.push_back({row[0].get<long long>(), row[1].get<long long>(),
                           row[2].get<long long>()});
    }
    TypeSequence t = TypeSequence::from_entries(entries, domain_cap);

    if (j.contains("rank") && j.at("rank").get<int>() != t.rank())
        throw ParseError("rank field disagrees with type_seq length");

    std::vector<std::vector<OrdinalSet>> levels;
    for (const auto& lvl : j.at("levels")) {
        std::vector<OrdinalSet> sets;
        for (const auto& f : lvl) sets.push_back(ordinal_set_from(f));
        levels.push_back(std::move(sets));
    }
    return Scheme::from_levels(std::move(t), std::move(levels));
}

}  // namespace

Scheme scheme_from_json(const std::string& text, long long domain_cap) {
    try {
        return scheme_from_json_impl(text, domain_cap);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed scheme JSON: ") + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.parent_path().empty() ? fs::path(".") : target.parent_path();
    const fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out.good()) throw Error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename " + tmp.string() + " to " + path + ": " + ec.message());
    }
}

void save_scheme(const Scheme& s, const std::string& path) {
    write_text_file(path, scheme_to_json(s));
}

Scheme load_scheme(const std::string& path, long long domain_cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scheme_from_json(buf.str(), domain_cap);
}

std::string scheme_to_dot(const Scheme& s) {
    std::ostringstream os;
    os << "digraph scheme {\n  node [shape=box, fontname=\"monospace\"];\n";

    auto set_label = [](const OrdinalSet& f) {
        std::ostringstream l;
        l << '{';
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) l << ',';
            l << f[i];
        }
        l << '}';
        return l.str();
    };
    auto node_id = [&](int k, const OrdinalSet& f) {
        const auto& lvl = s.level(k);
        const auto it = std::lower_bound(lvl.begin(), lvl.end(), f);
        return "L" + std::to_string(k) + "_" + std::to_string(it - lvl.begin());
    };

    for (int k = s.rank(); k >= 0; --k) {
        for (const auto& f : s.level(k)) {
            os << "  " << node_id(k, f) << " [label=\"" << set_label(f);
            if (k >= 1) {
                const auto dec = s.decompose(k, f);
                os << "\\nR=" << set_label(dec.root);
            }
            os << "\"];\n";
        }
    }
    for (int k = s.rank(); k >= 1; --k) {
        for (const auto& f : s.level(k)) {
            const auto dec = s.decompose(k, f);
            for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
                if (!s.level_contains(k - 1, dec.pieces[i])) continue;
                os << "  " << node_id(k, f) << " -> " << node_id(k - 1, dec.pieces[i])
                   << " [label=\"" << i << "\"];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

namespace {

ordered_json witness_json(const CaptureWitness& w) {
    ordered_json j;
    j["level"] = w.level;
    j["kind"] = to_string(w.kind);
    j["root"] = w.root;
    j["family"] = ordered_json::array();
    for (const auto& d : w.family) j["family"].push_back(d);
    return j;
}

}  // namespace

std::string witness_to_json(const CaptureWitness& w) { return witness_json(w).dump(2) + "\n"; }

std::string witnesses_to_json(const std::vector<CaptureWitness>& ws) {
    ordered_json j = ordered_json::array();
    for (const auto& w : ws) j.push_back(witness_json(w));
    return j.dump(2) + "\n";
}

CaptureWitness witness_from_json(const std::string& text) {
    try {
        const auto j = parse(text);
        CaptureWitness w;
        w.level = j.at("level").get<int>();
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "captured")
            w.kind = CaptureKind::captured;
        else if (kind == "delta_captured")
            w.kind = CaptureKind::delta_captured;
        else
            throw ParseError("unknown capture kind '" + kind + "'");
        w.root = ordinal_set_from(j.at("root"));
        for (const auto& d : j.at("family")) w.family.push_back(ordinal_set_from(d));
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed witness JSON: ") + e.what());
    }
}

std::string report_to_json(const Report& r) {
    ordered_json j;
    j["title"] = r.title;
    j["header"] = r.header;
    j["passed"] = r.all_passed();
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["cases"] = c.cases;
        cj["violations"] = c.violation_count;
        cj["samples"] = c.violations;
        if (!c.note.empty()) cj["note"] = c.note;
        j["checks"].push_back(std::move(cj));
    }
    return j.dump(2) + "\n";
}

std::string tuple_to_json(const Tuple& t) {
    ordered_json j = ordered_json::array();
    for (const auto& q : t.points()) j.push_back(to_string(q));
    return j.dump();
}

Tuple tuple_from_json(const std::string& text) {
    try {
        const auto j = parse(text);
        std::vector<Rational> pts;
        for (const auto& q : j) {
            if (q.is_number_integer())
                pts.emplace_back(q.get<long long>(), 1);
            else
                pts.push_back(parse_rational(q.get<std::string>()));
        }
        return Tuple(std::move(pts));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed tuple JSON: ") + e.what());
    }
}

std::string config_type_to_json(const ConfigType& t) {
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i) j.push_back(t.bit(i));
    return j.dump();
}

std::string tuple_family_to_json(const OrdinalTupleFamily& fam) {
    ordered_json j;
    j["arity"] = fam.arity;
    j["members"] = ordered_json::array();
    for (const auto& m : fam.members) j["members"].push_back(m);
    return j.dump(2) + "\n";
}

OrdinalTupleFamily tuple_family_from_json(const std::string& text) {
    try {
        const auto j = parse(text);
        std::vector<OrdinalSet> members;
        const auto& src = j.is_object() ? j.at("members") : j;
        for (const auto& m : src) members.push_back(ordinal_set_from(m));
        int arity = 0;
        if (j.is_object() && j.contains("arity"))
            arity = j.at("arity").get<int>();
        else if (!members.empty())
            arity = static_cast<int>(members[0].size());
        return OrdinalTupleFamily::make(arity, std::move(members));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed family JSON: ") + e.what());
    }
}

std::string coded_points_to_csv(const std::vector<CodedPoint>& points) {
    std::ostringstream os;
    os << "alpha,kind,arity";
    if (!points.empty())
        for (std::size_t k = 0; k < points[0].seq.size(); ++k) os << ",s" << k;
    os << "\n";
    for (const auto& p : points) {
        os << p.alpha << ',' << to_string(p.kind) << ',' << p.arity;
        for (const auto v : p.seq) os << ',' << v;
        os << "\n";
    }
    return os.str();
}

std::string coded_points_to_json(const std::vector<CodedPoint>& points) {
    ordered_json j = ordered_json::array();
    for (const auto& p : points) {
        ordered_json pj;
        pj["alpha"] = p.alpha;
        pj["kind"] = to_string(p.kind);
        pj["arity"] = p.arity;
        pj["seq"] = p.seq;
        j.push_back(std::move(pj));
    }
    return j.dump(2) + "\n";
}

std::string spectrum_to_csv(const Coding& coding, const OrdinalTupleFamily& fam) {
    std::ostringstream os;
    os << "member";
    for (std::size_t j = 0; j < fam.members.size(); ++j) os << ',' << j;
    os << "\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        os << i;
        for (std::size_t j = 0; j < fam.members.size(); ++j) {
            os << ',';
            if (i != j) os << bar_type(coding, fam.members[i], fam.members[j]).to_string();
        }
        os << "\n";
    }
    return os.str();
}

std::string spectrum_to_json(const TypeSpectrum& sp) {
    ordered_json j;
    j["arity"] = sp.arity;
    j["classes"] = sp.class_universe();
    j["realized"] = ordered_json::array();
    for (const auto& [cls, pair] : sp.realized) {
        ordered_json e;
        e["class"] = cls.representative().to_string();
        e["witness"] = ordered_json::array({pair.first, pair.second});
        j["realized"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace schemelab
