// schemelab: build finite-rank construction schemes, verify their axioms and
// metric laws, search for captured families, realize the integer-sequence
// codings and run the entangledness kernels, all from one binary.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemelab/analyzer.hpp"
#include "schemelab/capture.hpp"
#include "schemelab/coding.hpp"
#include "schemelab/json_io.hpp"
#include "schemelab/metrics.hpp"
#include "schemelab/verify.hpp"

using namespace schemelab;

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitAxiomOrOverflow = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitPrecondition = 4;

struct SchemeSource {
    std::string in;        // scheme JSON file
    std::string type_seq;  // inline JSON [[m,n,r],...] or a file holding it
    bool minimal = false;
    int coding_arity = 0;
    int width_arity = 0;
    bool random_mode = false;
    int rank = 2;
    std::uint64_t seed = 0;
    long long domain_cap = kDefaultDomainCap;

    void add_flags(CLI::App* cmd, bool with_in = true) {
        if (with_in) cmd->add_option("--in", in, "scheme JSON file to load");
        cmd->add_option("-K,--rank", rank, "rank of the generated scheme");
        cmd->add_option("--type-seq", type_seq,
                        "type sequence: inline JSON [[m,n,r],...] or a file");
        cmd->add_flag("--minimal", minimal, "slowest-growth type sequence");
        cmd->add_option("--coding", coding_arity,
                        "coding-mode type sequence for this arity (with the "
                        "exponential branching condition)");
        cmd->add_option("--width", width_arity,
                        "width-mode type sequence for this arity (enumeration-"
                        "complete, without the exponential condition)");
        cmd->add_flag("--random", random_mode, "seeded random type sequence");
        cmd->add_option("--seed", seed, "seed for every randomized step");
        cmd->add_option("--domain-cap", domain_cap, "largest allowed domain m_K");
    }

    TypeSequence make_type_seq() const {
        if (!type_seq.empty()) {
            std::string text = type_seq;
            if (text.find('[') == std::string::npos) {
                std::ifstream in_file(text);
                if (!in_file) throw ParseError("cannot read type sequence file " + text);
                std::ostringstream buf;
                buf << in_file.rdbuf();
                text = buf.str();
            }
            std::vector<TypeEntry> entries;
            try {
                const auto j = nlohmann::json::parse(text);
                for (const auto& row : j) {
                    if (!row.is_array() || row.size() != 3)
                        throw ParseError("type sequence entries must be [m, n, r] triples");
                    entries.push_back({row[0].get<long long>(), row[1].get<long long>(),
                                       row[2].get<long long>()});
                }
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("malformed type sequence: ") + e.what());
            }
            return TypeSequence::from_entries(entries, domain_cap);
        }
        GrowthSpec spec;
        spec.seed = seed;
        spec.domain_cap = domain_cap;
        if (coding_arity > 0) {
            spec.mode = Growth::coding;
            spec.arity = coding_arity;
        } else if (width_arity > 0) {
            spec.mode = Growth::width;
            spec.arity = width_arity;
        } else if (random_mode) {
            spec.mode = Growth::random;
        } else {
            spec.mode = Growth::minimal;
        }
        return generate_type_seq(rank, spec);
    }

    Scheme make_scheme() const {
        if (!in.empty()) return load_scheme(in, domain_cap);
        return Scheme::build(make_type_seq());
    }
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

int report_exit(const Report& report, const std::string& format,
                const std::string& out_path) {
    emit(out_path, format == "json" ? report_to_json(report) : report.to_text());
    return report.all_passed() ? 0 : kExitChecksFailed;
}

long long env_search_cap() {
    if (const char* env = std::getenv("SCHEME_LAB_CAP")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw ParseError("SCHEME_LAB_CAP is not an integer");
        }
    }
    return 10000;
}

OrdinalTupleFamily family_from_options(const Scheme& s, const std::string& family_file,
                                       int intervals_width, bool singletons) {
    if (!family_file.empty()) {
        std::ifstream in(family_file);
        if (!in) throw ParseError("cannot read family file " + family_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return tuple_family_from_json(buf.str());
    }
    if (intervals_width > 0)
        return interval_family(s, spaced_gammas(s, intervals_width), intervals_width)
            .family;
    if (singletons) {
        std::vector<OrdinalSet> members;
        for (Ordinal a = 0; a < s.domain_size(); ++a) members.push_back({a});
        return OrdinalTupleFamily::make(1, std::move(members));
    }
    throw PreconditionError("no family given: use --family, --intervals or --singletons");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-rank construction-scheme laboratory"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    long long search_cap = 10000;

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a scheme and write it out");
    SchemeSource gen_src;
    gen_src.add_flags(gen, /*with_in=*/false);
    std::string gen_format = "json";
    gen->add_option("--format", gen_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    gen->add_option("--out", out_path, "output path (atomic write)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check scheme axioms and metric laws");
    SchemeSource verify_src;
    verify_src.add_flags(verify);
    std::string suite = "all";
    int verify_arity = 1;
    verify->add_option("--suite", suite, "all, axioms, om or transfer")
        ->check(CLI::IsMember({"all", "axioms", "om", "transfer"}));
    verify->add_option("--n", verify_arity, "enumeration arity for the transfer suite");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "output path");

    // ---- capture ----
    auto* capture = app.add_subcommand("capture", "search for (Delta-)captured families");
    SchemeSource capture_src;
    capture_src.add_flags(capture);
    std::vector<int> capture_levels;
    std::vector<int> capture_sizes;
    std::string pool_spec = "singletons";
    std::string capture_kind = "full";
    capture->add_option("--level", capture_levels, "levels to search (default: all)");
    capture->add_option("--size", capture_sizes,
                        "family sizes (default: 2 and the level branching n_l)");
    capture->add_option("--pool", pool_spec,
                        "singletons, blocks, or a tuple-family JSON file");
    capture->add_option("--capture-kind", capture_kind, "full (captured) or delta")
        ->check(CLI::IsMember({"full", "delta"}));
    capture->add_option("--cap", search_cap, "max combinations before sampling");
    capture->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    capture->add_option("--out", out_path, "output path");

    // ---- code ----
    auto* code = app.add_subcommand("code", "dump coded points");
    SchemeSource code_src;
    code_src.add_flags(code);
    std::string code_kind = "xi";
    int code_arity = 1;
    std::string code_order = "ordinal";
    std::string code_format = "csv";
    bool code_dump = false;
    code->add_option("--kind", code_kind, "e, o or xi")
        ->check(CLI::IsMember({"e", "o", "xi"}));
    code->add_option("--n", code_arity, "coding arity");
    code->add_flag("--dump", code_dump, "dump one row per ordinal (default action)");
    code->add_option("--order", code_order, "ordinal or lex")
        ->check(CLI::IsMember({"ordinal", "lex"}));
    code->add_option("--format", code_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    code->add_option("--out", out_path, "output path");

    // ---- spectrum ----
    auto* spectrum_cmd = app.add_subcommand("spectrum", "realized type classes of a family");
    SchemeSource spectrum_src;
    spectrum_src.add_flags(spectrum_cmd);
    std::string spectrum_kind = "e";
    int spectrum_arity = 1;
    std::string family_file;
    int intervals_width = 0;
    bool use_singletons = false;
    spectrum_cmd->add_option("--kind", spectrum_kind, "e, o or xi")
        ->check(CLI::IsMember({"e", "o", "xi"}));
    spectrum_cmd->add_option("--n", spectrum_arity, "coding arity");
    spectrum_cmd->add_option("--family", family_file, "tuple-family JSON file");
    spectrum_cmd->add_option("--intervals", intervals_width,
                             "use the matched interval family of this width");
    spectrum_cmd->add_flag("--singletons", use_singletons, "family of all singletons");
    spectrum_cmd->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    spectrum_cmd->add_option("--out", out_path, "output path");

    // ---- entangle ----
    auto* entangle = app.add_subcommand("entangle", "entangledness kernels");
    SchemeSource entangle_src;
    entangle_src.add_flags(entangle);
    std::string check_name;
    std::string entangle_kind = "e";
    int entangle_arity = 1;
    std::vector<int> entangle_levels;
    std::string entangle_family_file;
    int entangle_intervals = 0;
    bool entangle_singletons = false;
    entangle->add_option("--check", check_name, "realization, avoidance or increasing")
        ->required()
        ->check(CLI::IsMember({"realization", "avoidance", "increasing"}));
    entangle->add_option("--kind", entangle_kind, "e or o (increasing uses xi)")
        ->check(CLI::IsMember({"e", "o", "xi"}));
    entangle->add_option("--n", entangle_arity, "coding arity n");
    entangle->add_option("--level", entangle_levels, "levels for realization");
    entangle->add_option("--family", entangle_family_file, "family file for increasing");
    entangle->add_option("--intervals", entangle_intervals,
                         "interval width for increasing");
    entangle->add_flag("--singletons", entangle_singletons,
                       "singleton family for increasing (default)");
    entangle->add_option("--cap", search_cap, "max canonical families per level");
    entangle->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    entangle->add_option("--out", out_path, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!capture->count("--cap") && !entangle->count("--cap"))
            search_cap = env_search_cap();

        if (*gen) {
            const auto s = gen_src.make_scheme();
            std::ostringstream summary;
            summary << "rank " << s.rank() << ", domain " << s.domain_size()
                    << ", level sizes:";
            for (int k = 0; k <= s.rank(); ++k) summary << ' ' << s.level(k).size();
            summary << ", seed " << gen_src.seed << "\n";
            if (gen_format == "dot")
                emit(out_path, scheme_to_dot(s));
            else
                emit(out_path, scheme_to_json(s));
            if (!out_path.empty()) std::cout << summary.str();
            return 0;
        }

        if (*verify) {
            const auto s = verify_src.make_scheme();
            Report combined;
            combined.title = "verification";
            combined.header.push_back("rank=" + std::to_string(s.rank()) +
                                      " domain=" + std::to_string(s.domain_size()) +
                                      " seed=" + std::to_string(verify_src.seed));
            const bool explicit_suite = suite != "all";

            if (suite == "all" || suite == "axioms") {
                const auto r = verify_scheme_axioms(s, {.seed = verify_src.seed});
                for (const auto& c : r.checks) combined.checks.push_back(c);
            }
            if (suite == "all" || suite == "om") {
                if (s.domain_size() <= MetricProfile::kPairTableLimit) {
                    const auto r = verify_metric_lemmas(s);
                    for (const auto& c : r.checks) combined.checks.push_back(c);
                } else if (explicit_suite) {
                    throw PreconditionError("domain too large for the pairwise tables");
                } else {
                    auto& skip = combined.add("metric-lemmas");
                    skip.note = "skipped: domain too large for the pairwise tables";
                }
            }
            if (suite == "all" || suite == "transfer") {
                try {
                    const auto enu = SubsetEnumeration::build(s, verify_arity);
                    const auto r = delta_transfer_check(s, enu, verify_arity);
                    for (const auto& c : r.checks) combined.checks.push_back(c);
                } catch (const InsufficientWidthError& e) {
                    if (explicit_suite) throw;
                    auto& skip = combined.add("delta-transfer");
                    skip.note = std::string("skipped: ") + e.what();
                }
            }
            return report_exit(combined, format, out_path);
        }

        if (*capture) {
            const auto s = capture_src.make_scheme();
            const auto kind =
                capture_kind == "delta" ? CaptureKind::delta_captured : CaptureKind::captured;

            std::vector<OrdinalSet> pool;
            if (pool_spec == "singletons") {
                for (Ordinal a = 0; a < s.domain_size(); ++a) pool.push_back({a});
            } else if (pool_spec == "blocks") {
                for (int k = 1; k <= s.rank(); ++k)
                    for (const auto& f : s.level(k))
                        for (const auto& piece : s.decompose(k, f).pieces)
                            pool.push_back(piece);
                std::sort(pool.begin(), pool.end());
                pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
                // a pool must be equal-sized; keep the most common size
                std::map<std::size_t, long long> by_size;
                for (const auto& p : pool) ++by_size[p.size()];
                const auto best = std::max_element(
                    by_size.begin(), by_size.end(),
                    [](const auto& a, const auto& b) { return a.second < b.second; });
                std::erase_if(pool,
                              [&](const OrdinalSet& p) { return p.size() != best->first; });
            } else {
                const auto fam = family_from_options(s, pool_spec, 0, false);
                pool = fam.members;
            }

            std::vector<int> levels = capture_levels;
            if (levels.empty())
                for (int l = 1; l <= s.rank(); ++l) levels.push_back(l);

            std::vector<CaptureWitness> witnesses;
            SearchStats stats;
            for (const int l : levels) {
                std::vector<int> sizes = capture_sizes;
                if (sizes.empty()) {
                    sizes.push_back(2);
                    sizes.push_back(static_cast<int>(s.type_seq().n(l)));
                }
                SearchStats st;
                auto ws = find_captures(s, pool, sizes, {l}, kind,
                                        {.tuple_cap = search_cap, .seed = capture_src.seed},
                                        &st);
                stats.enumerated += st.enumerated;
                stats.total += st.total;
                stats.exhaustive = stats.exhaustive && st.exhaustive;
                witnesses.insert(witnesses.end(), ws.begin(), ws.end());
            }

            if (format == "json") {
                emit(out_path, witnesses_to_json(witnesses));
            } else {
                std::ostringstream os;
                os << "pool=" << pool.size() << " searched=" << stats.enumerated << "/"
                   << stats.total << (stats.exhaustive ? " (exhaustive)" : " (sampled)")
                   << " seed=" << capture_src.seed << "\n";
                for (const auto& w : witnesses) {
                    os << to_string(w.kind) << " @ level " << w.level << ": root={";
                    for (std::size_t i = 0; i < w.root.size(); ++i)
                        os << (i ? "," : "") << w.root[i];
                    os << "} family=";
                    for (const auto& d : w.family) {
                        os << "{";
                        for (std::size_t i = 0; i < d.size(); ++i)
                            os << (i ? "," : "") << d[i];
                        os << "}";
                    }
                    os << "\n";
                }
                os << witnesses.size() << " witnesses\n";
                emit(out_path, os.str());
            }
            return 0;
        }

        if (*code) {
            const auto s = code_src.make_scheme();
            const auto kind = coding_kind_from_string(code_kind);
            const Coding coding(s, kind, code_arity);
            std::vector<CodedPoint> pts;
            for (Ordinal a = 0; a < s.domain_size(); ++a) pts.push_back(coding.point(a));
            if (code_order == "lex")
                std::sort(pts.begin(), pts.end(),
                          [](const CodedPoint& p, const CodedPoint& q) {
                              return lex_compare(p, q).sign < 0;
                          });
            emit(out_path, code_format == "json" ? coded_points_to_json(pts)
                                                 : coded_points_to_csv(pts));
            return 0;
        }

        if (*spectrum_cmd) {
            const auto s = spectrum_src.make_scheme();
            const auto kind = coding_kind_from_string(spectrum_kind);
            const Coding coding(s, kind, spectrum_arity);
            const auto fam =
                family_from_options(s, family_file, intervals_width, use_singletons);
            if (format == "csv") {
                emit(out_path, spectrum_to_csv(coding, fam));
            } else {
                const auto sp = spectrum(coding, fam);
                if (format == "json") {
                    emit(out_path, spectrum_to_json(sp));
                } else {
                    std::ostringstream os;
                    os << "family of " << fam.members.size() << " members, arity "
                       << fam.arity << ": " << sp.realized.size() << " of "
                       << sp.class_universe() << " classes realized\n";
                    for (const auto& [cls, wit] : sp.realized)
                        os << "  class " << cls.representative().to_string() << "  witness ("
                           << wit.first << "," << wit.second << ")\n";
                    emit(out_path, os.str());
                }
            }
            return 0;
        }

        if (*entangle) {
            const auto s = entangle_src.make_scheme();
            if (check_name == "realization") {
                const auto kind = coding_kind_from_string(entangle_kind);
                const Coding coding(s, kind, entangle_arity);
                const int tuple_arity = kind == CodingKind::e ? 2 * entangle_arity
                                                              : 2 * entangle_arity + 1;
                std::vector<int> levels = entangle_levels;
                if (levels.empty())
                    for (int l = 1; l <= s.rank(); ++l)
                        if (s.type_seq().block(l) >= tuple_arity) levels.push_back(l);
                if (levels.empty())
                    throw PreconditionError("no level has blocks wide enough for arity " +
                                            std::to_string(tuple_arity));

                Report combined;
                combined.title = "realization kernel";
                combined.header.push_back("coding=" + entangle_kind + "^" +
                                          std::to_string(entangle_arity) +
                                          " seed=" + std::to_string(entangle_src.seed));
                long long families = 0;
                auto& all = combined.add("all-classes-realized");
                auto& revalidate = combined.add("witness-pairs-revalidate");
                for (const int l : levels) {
                    long long used = 0;
                    for (const auto& f : s.level(l)) {
                        if (used++ >= search_cap) break;
                        CaptureWitness w;
                        w.level = l;
                        w.kind = CaptureKind::delta_captured;
                        w.family = canonical_tuple_family(s, f, tuple_arity);
                        const auto r = verify_realization(coding, w);
                        ++families;
                        for (const auto& c : r.checks) {
                            if (c.name == "witness-revalidation") continue;
                            auto& target = c.name == "all-classes-realized" ? all : revalidate;
                            target.cases += c.cases;
                            for (const auto& v : c.violations) target.fail(v);
                            target.violation_count += c.violation_count -
                                                      static_cast<long long>(c.violations.size());
                        }
                    }
                }
                combined.header.push_back(std::to_string(families) +
                                          " canonical families checked");
                return report_exit(combined, format, out_path);
            }
            if (check_name == "avoidance") {
                const auto kind = coding_kind_from_string(entangle_kind);
                const int width =
                    kind == CodingKind::e ? 2 * entangle_arity + 1 : 2 * entangle_arity + 2;
                const Coding coding(s, kind, entangle_arity);
                const auto fam = interval_family(s, spaced_gammas(s, width), width);
                return report_exit(verify_avoidance(coding, fam), format, out_path);
            }
            // increasing
            const Coding xi(s, CodingKind::xi, 0);
            const bool default_singletons =
                entangle_family_file.empty() && entangle_intervals == 0;
            const auto fam = family_from_options(
                s, entangle_family_file, entangle_intervals,
                entangle_singletons || default_singletons);
            return report_exit(verify_increasing(xi, fam), format, out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const AxiomViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAxiomOrOverflow;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAxiomOrOverflow;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
