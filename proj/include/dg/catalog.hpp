#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dg/derangement.hpp"
#include "dg/group.hpp"
#include "dg/rational.hpp"

namespace dg {

// A named group given by generators, with machine-checkable expectation tags
// (e.g. order=324, exceptional=true). Round-trips bit-exact through
// serialize_group / parse_group_file.
struct GroupRecord {
    std::string name;
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<std::pair<std::string, std::string>> tags;

    bool operator==(const GroupRecord&) const = default;
};

// The group generated by the record's generators.
PermGroup group_of(const GroupRecord& rec,
                   std::size_t cap = PermGroup::kDefaultElementCap);

// Line-oriented text format:
//   # comment
//   name: <identifier>
//   degree: <n>
//   gen: [i0,i1,...]          (one line per generator, 0-indexed images)
//   tag: <key>=<value>
// `degree:` must precede the first `gen:`. Errors carry 1-based line numbers.
std::string serialize_group(const GroupRecord& rec);
GroupRecord parse_group_file(std::istream& in);
GroupRecord load_group_file(const std::string& path);
void save_group_file(const std::string& path, const GroupRecord& rec);

// Invariant fingerprint used to separate non-isomorphic search finds without
// a permutation-isomorphism test: order, derangement count, clique number,
// cycle-type census, and the (count, size) profile of the minimal block
// systems.
struct GroupFingerprint {
    std::size_t order = 0;
    std::size_t derangement_count = 0;
    std::size_t omega = 0;
    std::vector<std::pair<std::vector<int>, std::size_t>> cycle_census;
    std::vector<std::pair<std::size_t, std::size_t>> block_profile;

    auto operator<=>(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint_group(const PermGroup& g);

// Full report for one group: transitivity, order, block profile, derangement
// count, clique data, and (within the order cap) coclique/density data with
// the two bound checks. Cap overruns are recorded in `notes` per field, not
// thrown. classification: "4-clique" | "exception-candidate" |
// "intransitive" | "undecided".
struct AnalyzeReport {
    std::string name;
    int degree = 0;
    bool transitive = false;
    std::size_t order = 0;
    std::size_t derangement_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> block_profile;
    std::size_t omega = 0;  // exact iff omega_exact, else a lower bound
    bool omega_exact = false;
    CliqueWitness witness;  // a 4-clique when found, else a maximum clique
    bool alpha_known = false;
    std::size_t alpha = 0;
    std::size_t stabilizer_order = 0;
    Rational rho;
    Rational rho_bound;
    bool product_bound_holds = false;
    bool product_bound_tight = false;
    bool density_bound_holds = false;
    bool density_bound_tight = false;
    std::string classification;
    std::vector<std::string> notes;
};
AnalyzeReport analyze(const GroupRecord& rec);

// Checks every *.grp file in a directory against its expectation tags.
// Verifiable tags: transitive, order, derangements, omega (requires an
// exactly computed clique number), exceptional (true <=> classification
// "exception-candidate"). Informational tags (seed, restart, source, note)
// are ignored; any other key fails the record.
struct RecordCheck {
    std::string file;
    std::string name;
    bool pass = false;
    std::vector<std::string> messages;
};
struct CatalogSummary {
    std::vector<RecordCheck> records;
    std::size_t failures = 0;
};
CatalogSummary verify_catalog(const std::string& dir);

}  // namespace dg
