#ifndef REESKIT_DSL_HPP
#define REESKIT_DSL_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "reeskit/fpmod.hpp"
#include "reeskit/ideal.hpp"
#include "reeskit/modsyz.hpp"
#include "reeskit/ring.hpp"

namespace reeskit {
namespace dsl {

// One parsed statement; declarations bind names, commands produce output.
struct Statement {
    enum class Kind {
        RingDecl,
        IdealDecl,
        ModuleDecl,
        MapDecl,
        AssumeFlat,
        Gb,
        Sym,
        Rees,
        Tl,
        AlgTl,
        Blowup,
        Charts,
        Nash,
        Dense,
        Assof,
        Compare,
        Inject,
        Verify,
    };

    Kind kind;
    int line = 0, col = 0;
    std::string name;                           // declared name or command argument
    std::string via;                            // map name for via-commands
    std::string inner;                          // charts: "rees" or "sym"
    unsigned rank = 0;                          // nash
    // declaration payload (kept as source fragments, resolved at execution)
    Field field;
    std::vector<std::string> vars;
    bool lex_order = false;
    std::vector<std::string> poly_srcs;         // ideal generators / ring relations
    std::vector<std::vector<std::string>> matrix_srcs;
    std::vector<std::pair<std::string, std::string>> map_images;
    std::string module_kind;                    // "coker" or "free"
    unsigned free_rank = 0;
    std::string ring_name;                       // declaring ring for ideals/modules/matrices
    std::string target_ring;                     // maps
    std::vector<std::vector<std::string>> prime_srcs;  // assof
};

struct Script {
    std::vector<Statement> statements;
};

Script parse(const std::string& input);

// Polynomial expression parser against a ring's variables; used by the DSL
// and by tests for round-trips.
Poly parse_poly(const PolyRingPtr& ring, const std::string& text);

// Session state for script execution and the REPL.
struct Env {
    std::map<std::string, AffineRingPtr> rings;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, FPModule> modules;
    std::map<std::string, RingMap> maps;
    std::set<std::string> flat_maps;
    std::set<std::string> names;  // single assignment across all kinds

    const AffineRingPtr& ring(const std::string& name, int line, int col) const;
    const Ideal& ideal(const std::string& name, int line, int col) const;
    const FPModule& module(const std::string& name, int line, int col) const;
    const RingMap& map(const std::string& name, int line, int col) const;
};

// Executes statements against env, writing command blocks to out.
// Returns 0 on success, 1 on error, 2 on verify mismatch.
int execute(const Script& script, Env& env, std::ostream& out, std::ostream& err, bool json);

// Convenience: parse + execute with a fresh environment.
int run_script(const std::string& input, std::ostream& out, std::ostream& err, bool json);

} // namespace dsl
} // namespace reeskit

#endif
