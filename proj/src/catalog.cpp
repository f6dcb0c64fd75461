#include "dg/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dg/blocks.hpp"
#include "dg/error.hpp"

namespace dg {

PermGroup group_of(const GroupRecord& rec, std::size_t cap) {
    return generate_group(rec.degree, rec.generators, cap);
}

std::string serialize_group(const GroupRecord& rec) {
    std::ostringstream out;
    if (!rec.name.empty()) out << "name: " << rec.name << "\n";
    out << "degree: " << rec.degree << "\n";
    for (const Perm& g : rec.generators) {
        out << "gen: [";
        for (int i = 0; i < g.degree(); ++i) {
            if (i) out << ",";
            out << g[i];
        }
        out << "]\n";
    }
    for (const auto& [k, v] : rec.tags) out << "tag: " << k << "=" << v << "\n";
    return out.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_image_list(const std::string& val, int lineno) {
    std::string s = strip(val);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError(lineno, "generator must be a bracketed list");
    std::vector<int> img;
    std::string num;
    auto flush_num = [&]() {
        if (num.empty()) throw ParseError(lineno, "empty entry in image list");
        img.push_back(std::stoi(num));
        num.clear();
    };
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char ch = s[i];
        if (ch == ',') flush_num();
        else if (ch >= '0' && ch <= '9') num.push_back(ch);
        else if (ch != ' ' && ch != '\t')
            throw ParseError(lineno, "bad character in image list");
    }
    if (!num.empty()) img.push_back(std::stoi(num));
    else if (s.size() > 2) throw ParseError(lineno, "trailing comma");
    return img;
}

}  // namespace

GroupRecord parse_group_file(std::istream& in) {
    GroupRecord rec;
    bool have_degree = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected 'key: value'");
        std::string key = strip(s.substr(0, colon));
        std::string val = strip(s.substr(colon + 1));
        try {
            if (key == "name") {
                rec.name = val;
            } else if (key == "degree") {
                rec.degree = std::stoi(val);
                if (rec.degree < 1) throw ParseError(lineno, "degree must be >= 1");
                have_degree = true;
            } else if (key == "gen") {
                if (!have_degree)
                    throw ParseError(lineno, "degree must precede generators");
                std::vector<int> img = parse_image_list(val, lineno);
                if (static_cast<int>(img.size()) != rec.degree)
                    throw ParseError(lineno, "generator has wrong length");
                rec.generators.emplace_back(std::move(img));
            } else if (key == "tag") {
                auto eq = val.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError(lineno, "tag must be 'key=value'");
                std::string tk = strip(val.substr(0, eq));
                std::string tv = strip(val.substr(eq + 1));
                for (const auto& [k, v] : rec.tags)
                    if (k == tk) throw ParseError(lineno, "duplicate tag '" + tk + "'");
                rec.tags.emplace_back(std::move(tk), std::move(tv));
            } else {
                throw ParseError(lineno, "unknown key '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidPermutation& e) {
            throw ParseError(lineno, e.what());
        } catch (const std::invalid_argument&) {
            throw ParseError(lineno, "bad number");
        } catch (const std::out_of_range&) {
            throw ParseError(lineno, "number out of range");
        }
    }
    if (!have_degree) throw ParseError(lineno, "missing degree");
    if (rec.generators.empty()) throw ParseError(lineno, "no generators");
    return rec;
}

GroupRecord load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open group file: " + path);
    return parse_group_file(in);
}

void save_group_file(const std::string& path, const GroupRecord& rec) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write group file: " + path);
    out << serialize_group(rec);
}

GroupFingerprint fingerprint_group(const PermGroup& g) {
    GroupFingerprint fp;
    fp.order = g.order();
    DerangementGraph graph(g);
    fp.derangement_count = graph.derangement_count();
    fp.omega = clique_number(graph).omega;
    for (const auto& [type, count] : cycle_type_census(g))
        fp.cycle_census.emplace_back(type, count);
    if (is_transitive(g)) {
        for (const BlockSystem& sys : minimal_block_systems(g))
            fp.block_profile.emplace_back(sys.block_count(), sys.block_size());
        std::sort(fp.block_profile.begin(), fp.block_profile.end());
    }
    return fp;
}

AnalyzeReport analyze(const GroupRecord& rec) {
    AnalyzeReport rep;
    rep.name = rec.name;
    rep.degree = rec.degree;
    PermGroup g = group_of(rec);
    rep.transitive = is_transitive(g);
    if (!rep.transitive) {
        rep.classification = "intransitive";
        rep.notes.push_back("group is intransitive; the dichotomy does not apply");
        return rep;
    }
    for (const BlockSystem& sys : minimal_block_systems(g))
        rep.block_profile.emplace_back(sys.block_count(), sys.block_size());
    std::sort(rep.block_profile.begin(), rep.block_profile.end());
    try {
        rep.order = g.order();
    } catch (const CapExceeded& e) {
        rep.notes.push_back(std::string("order: ") + e.what());
        rep.classification = "undecided";
        return rep;
    }
    DerangementGraph graph(g);
    rep.derangement_count = graph.derangement_count();
    try {
        std::optional<CliqueWitness> four = has_kclique(graph, 4);
        if (four) {
            rep.classification = "4-clique";
            rep.witness = *four;
            rep.omega = 4;
            rep.omega_exact = false;
        } else {
            rep.classification = "exception-candidate";
        }
    } catch (const CapExceeded& e) {
        rep.classification = "undecided";
        rep.notes.push_back(std::string("4-clique search: ") + e.what());
    }
    // exact clique number where affordable; mandatory on the exception side
    if (rep.classification == "exception-candidate" ||
        (rep.classification == "4-clique" && rep.order <= 2000)) {
        CliqueNumberResult res = clique_number(graph);
        rep.omega = res.omega;
        rep.omega_exact = true;
        rep.witness = res.witness;
    }
    if (rep.order <= 2000 && rep.omega_exact) {
        CliqueCocliqueReport cc = clique_coclique_check(g);
        rep.alpha_known = true;
        rep.alpha = cc.alpha;
        rep.stabilizer_order = cc.stabilizer_order;
        rep.rho = cc.rho;
        rep.rho_bound = cc.rho_bound;
        rep.product_bound_holds = cc.product_bound_holds;
        rep.product_bound_tight = cc.product_bound_tight;
        rep.density_bound_holds = cc.density_bound_holds;
        rep.density_bound_tight = cc.density_bound_tight;
    } else {
        rep.notes.push_back("coclique/density skipped (order cap 2000)");
    }
    return rep;
}

namespace {

bool tag_matches_count(const std::string& value, std::size_t actual,
                       std::string& msg, const std::string& key) {
    std::size_t expect = 0;
    try {
        expect = static_cast<std::size_t>(std::stoull(value));
    } catch (...) {
        msg = key + ": bad integer '" + value + "'";
        return false;
    }
    if (expect != actual) {
        msg = key + ": expected " + value + ", got " + std::to_string(actual);
        return false;
    }
    return true;
}

bool tag_matches_bool(const std::string& value, bool actual, std::string& msg,
                      const std::string& key) {
    if (value != "true" && value != "false") {
        msg = key + ": bad boolean '" + value + "'";
        return false;
    }
    bool expect = value == "true";
    if (expect != actual) {
        msg = key + ": expected " + value;
        return false;
    }
    return true;
}

bool informational_tag(const std::string& key) {
    return key == "seed" || key == "restart" || key == "source" ||
           key == "note";
}

RecordCheck check_record(const std::string& file, const GroupRecord& rec) {
    RecordCheck check;
    check.file = file;
    check.name = rec.name;
    check.pass = true;
    AnalyzeReport rep = analyze(rec);
    for (const auto& [key, value] : rec.tags) {
        std::string msg;
        bool ok = true;
        if (key == "transitive") {
            ok = tag_matches_bool(value, rep.transitive, msg, key);
        } else if (key == "order") {
            ok = tag_matches_count(value, rep.order, msg, key);
        } else if (key == "derangements") {
            ok = tag_matches_count(value, rep.derangement_count, msg, key);
        } else if (key == "omega") {
            if (!rep.omega_exact) {
                ok = false;
                msg = "omega: clique number not computed exactly";
            } else {
                ok = tag_matches_count(value, rep.omega, msg, key);
            }
        } else if (key == "exceptional") {
            if (rep.classification != "4-clique" &&
                rep.classification != "exception-candidate") {
                ok = false;
                msg = "exceptional: classification is " + rep.classification;
            } else {
                ok = tag_matches_bool(
                    value, rep.classification == "exception-candidate", msg, key);
            }
        } else if (!informational_tag(key)) {
            ok = false;
            msg = "unknown tag '" + key + "'";
        }
        if (!ok) {
            check.pass = false;
            check.messages.push_back(msg);
        }
    }
    return check;
}

}  // namespace

CatalogSummary verify_catalog(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".grp")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    CatalogSummary summary;
    for (const std::string& file : files) {
        RecordCheck check;
        try {
            GroupRecord rec = load_group_file(file);
            check = check_record(file, rec);
        } catch (const Error& e) {
            check.file = file;
            check.pass = false;
            check.messages.push_back(e.what());
        }
        if (!check.pass) ++summary.failures;
        summary.records.push_back(std::move(check));
    }
    return summary;
}

}  // namespace dg
