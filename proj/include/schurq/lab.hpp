#pragma once

#include <string>
#include <vector>

#include "schurq/composition.hpp"
#include "schurq/omega.hpp"

namespace schurq::lab {

struct RunConfig {
    int max_n = 11;
    int variable_count = 6;
    int worker_count = 1;
    std::string output_path;
    enum class Format { Json, Csv } format = Format::Json;
};

struct ClassInfo {
    int id = 0;
    std::vector<Composition> members;  // enumeration order
    OmegaElem expansion;
};

enum class MoveKind { GlobalTranspose, GlobalRotate, BulletVariant, CircRotate };

struct MoveTrace {
    Composition source;
    Composition target;
    MoveKind kind;
    std::string detail;
};

struct ClassReport {
    int n = 0;
    std::vector<ClassInfo> classes;          // grouped by q-expansion
    std::vector<ClassInfo> closure_classes;  // grouped by move closure
    enum class Verdict { Match, Mismatch } verdict = Verdict::Match;
    bool hard_failure = false;  // some move connected two unequal ribbons
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
};

/// Group all 2^(n-1) ribbons of n by the canonical key of their q-expansion.
/// Class ids follow the lex-least member, members keep enumeration order.
std::vector<ClassInfo> classes(int n, int workers = 1);

/// Transitive closure of the equality moves: gamma -> gamma^t, gamma^o;
/// every bullet factorization with both factors replaced by any of their
/// four variants; every circ factorization with either factor rotated.
std::vector<std::vector<Composition>> closure_classes(int n, std::vector<MoveTrace>* traces = nullptr);

/// Match iff the move closure partition equals the equality partition.
/// Pairs connected by moves but not equal are a hard failure.
ClassReport conjecture_check(int n, int workers = 1);

struct SuiteResult {
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Even Euler forms, the ribbon multiplication rule, and the EE/EI/T/ET
/// families; max_n = 10 reproduces the stock bounds (Euler up to m = 8,
/// products up to |alpha|+|beta| = 10, families up to x = 5).
SuiteResult relation_suite(int max_n = 10);

/// Bullet-variant invariance for |alpha|*|D| <= max_n, the doubling identity
/// s_D^2 = 2 s_(2.D), both directions of the 2-bullet equivalence, and the
/// class-respecting action on the right.
SuiteResult theorem_suite(int max_n = 10);

/// Tableau enumeration vs the q-basis route on every shape up to max_cells
/// (ribbons one cell larger), plus classical h/e Jacobi-Trudi checks.
SuiteResult oracle_suite(int max_cells = 6);

struct WitnessResult {
    enum class Kind { Equal, Differs, Inconclusive } kind = Kind::Inconclusive;
    bool via_expansion = false;  // decided on full q-expansions
    int k = 0;                   // variable count that separated them, if any
    std::string describe() const;
};

/// Decides r_A vs r_B: by q-expansion when the ribbons are small enough,
/// otherwise by comparing k-variable images for k = 2..k_max. A difference
/// at any k certifies inequality; running out of budget is reported as
/// inconclusive, never as equality.
WitnessResult inequality_witness(const Composition& a, const Composition& b, int k_max);

void export_report(const ClassReport& report, const RunConfig& config);

int cli_main(int argc, const char* const* argv);

}  // namespace schurq::lab
