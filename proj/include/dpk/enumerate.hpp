#ifndef DPK_ENUMERATE_HPP
#define DPK_ENUMERATE_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dpk/alexander.hpp"
#include "dpk/params.hpp"

namespace dpk {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

// One catalog row: everything computed for a single valid triple.  Saito
// failures are flagged, never dropped.
struct CatalogRecord {
    std::int64_t p, q, k;
    std::int64_t saito_value;
    bool saito_pass;
    LaurentPoly delta;  // canonical; empty (zero) only if divisibility failed
    std::int64_t genus;
    bool formal_genus;  // true when the Saito condition fails
    std::vector<std::int64_t> n_seq;
    bool form_pass;
    bool w1_only;
    CheckStatus divisibility;
    CheckStatus cross_check;
    CheckStatus oracle;
    CheckStatus structure;
};

enum class SearchFilter { All, SaitoOnly };

struct SearchOptions {
    std::int64_t p_max = 2;
    SearchFilter filter = SearchFilter::All;
    std::int64_t oracle_limit = 60;  // fox-gcd oracle runs only for p <= this
    unsigned threads = 0;            // 0 = hardware concurrency
};

// Builds the record for one validated triple.
CatalogRecord make_record(const SurgeryTriple& triple, bool run_oracle);

// All valid triples with 2 <= p <= p_max in lexicographic (p, q, k) order.
// Work is partitioned across threads per p; the result order is
// deterministic.
std::vector<CatalogRecord> search(const SearchOptions& opts);

// Streaming variant: emit is called in lexicographic order.
void search(const SearchOptions& opts, const std::function<void(const CatalogRecord&)>& emit);

// One JSONL line per record (no trailing newline); schema in
// docs/catalog.schema.json.
std::string to_jsonl(const CatalogRecord& rec);

struct W1ScanReport {
    std::int64_t p_max;
    std::int64_t scanned;
    std::int64_t counterexample_count;  // triples with excess beyond W(1)
    // The conjecture concerns doubly primitive knots, so the Saito-passing
    // subset is tracked separately; only those counterexamples are listed.
    std::int64_t saito_scanned;
    std::int64_t saito_counterexample_count;
    std::vector<SurgeryTriple> counterexamples;  // Saito-passing, capped at max_listed
    std::int64_t max_listed = 100;
};

// Sweeps all valid triples for indices whose G_X term reaches exponent 2p,
// i.e. for triples with W(h) nonempty for some h >= 2.  A counterexample is
// reported, never asserted against.
W1ScanReport scan_w1(std::int64_t p_max, unsigned threads = 0);

}  // namespace dpk

#endif
