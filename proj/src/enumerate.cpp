#include "dpk/enumerate.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "dpk/fox.hpp"

namespace dpk {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

CatalogRecord make_record(const SurgeryTriple& triple, bool run_oracle) {
    CatalogRecord rec{};
    rec.p = triple.p;
    rec.q = triple.q;
    rec.k = triple.k;

    SequenceTables tables = compute_tables(triple);
    SaitoResult saito = saito_condition(tables);
    rec.saito_value = saito.value;
    rec.saito_pass = saito.passes;
    rec.formal_genus = !saito.passes;

    LaurentPoly fy = f_y_closed(tables);
    LaurentPoly fx = f_x_closed(tables);
    LaurentPoly via_y, via_x;
    bool div_y = try_divide_bracket(fy, triple.k, via_y);
    bool div_x = try_divide_bracket(fx, triple.p, via_x);
    rec.divisibility = div_y && div_x ? CheckStatus::Pass : CheckStatus::Fail;

    if (rec.divisibility == CheckStatus::Pass) {
        rec.delta = canonicalize(via_y);
        LaurentPoly via_f = canonicalize(divide_bracket(f_formula(tables), triple.k));
        rec.cross_check =
            rec.delta == canonicalize(via_x) && rec.delta == via_f ? CheckStatus::Pass : CheckStatus::Fail;
        rec.genus = genus(rec.delta);

        FormDecomposition form = form_decomposition(rec.delta);
        rec.form_pass = form.ok;
        if (form.ok) rec.n_seq = form.n_seq;

        try {
            StructureReport sr = structure_analysis(tables);
            rec.w1_only = sr.w1_only;
            rec.structure = CheckStatus::Pass;
        } catch (const IdentityViolation&) {
            rec.structure = CheckStatus::Fail;
        }

        if (run_oracle) {
            rec.oracle = oracle_alexander(tables) == rec.delta ? CheckStatus::Pass : CheckStatus::Fail;
        } else {
            rec.oracle = CheckStatus::Skipped;
        }
    } else {
        rec.cross_check = CheckStatus::Fail;
        rec.structure = CheckStatus::Skipped;
        rec.oracle = CheckStatus::Skipped;
        rec.genus = 0;
        rec.form_pass = false;
        rec.w1_only = false;
    }
    return rec;
}

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs body(p) for p in [2, p_max] across threads; results must be stored
// by the body into per-p slots so order stays deterministic.
void parallel_over_p(std::int64_t p_max, unsigned threads, const std::function<void(std::int64_t)>& body) {
    std::atomic<std::int64_t> next{2};
    auto worker = [&] {
        for (;;) {
            std::int64_t p = next.fetch_add(1);
            if (p > p_max) return;
            body(p);
        }
    };
    unsigned n = resolve_threads(threads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<CatalogRecord> search(const SearchOptions& opts) {
    if (opts.p_max < 2) return {};
    std::vector<std::vector<CatalogRecord>> per_p(opts.p_max + 1);
    parallel_over_p(opts.p_max, opts.threads, [&](std::int64_t p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t k = 1; k < p; ++k) {
                if (std::gcd(p, k) != 1) continue;
                CatalogRecord rec = make_record(SurgeryTriple{p, q, k}, p <= opts.oracle_limit);
                if (opts.filter == SearchFilter::SaitoOnly && !rec.saito_pass) continue;
                per_p[p].push_back(std::move(rec));
            }
        }
    });
    std::vector<CatalogRecord> out;
    for (auto& block : per_p)
        for (auto& rec : block) out.push_back(std::move(rec));
    return out;
}

void search(const SearchOptions& opts, const std::function<void(const CatalogRecord&)>& emit) {
    for (const auto& rec : search(opts)) emit(rec);
}

std::string to_jsonl(const CatalogRecord& rec) {
    nlohmann::json j;
    j["p"] = rec.p;
    j["q"] = rec.q;
    j["k"] = rec.k;
    j["saito_value"] = rec.saito_value;
    j["saito_pass"] = rec.saito_pass;
    nlohmann::json poly;
    if (rec.delta.is_zero()) {
        poly["min_exp"] = 0;
        poly["coeffs"] = nlohmann::json::array();
    } else {
        poly["min_exp"] = rec.delta.min_exp();
        std::vector<std::int64_t> coeffs;
        for (Exp e = rec.delta.min_exp(); e <= rec.delta.max_exp(); ++e)
            coeffs.push_back(static_cast<std::int64_t>(rec.delta.coeff(e)));
        poly["coeffs"] = coeffs;
    }
    poly["text"] = rec.delta.str();
    j["delta"] = poly;
    j["genus"] = rec.genus;
    j["formal_genus"] = rec.formal_genus;
    j["n_seq"] = rec.n_seq;
    j["form_pass"] = rec.form_pass;
    j["w1_only"] = rec.w1_only;
    j["checks"] = {{"divisibility", to_string(rec.divisibility)},
                   {"cross_check", to_string(rec.cross_check)},
                   {"oracle", to_string(rec.oracle)},
                   {"structure", to_string(rec.structure)}};
    return j.dump();
}

W1ScanReport scan_w1(std::int64_t p_max, unsigned threads) {
    W1ScanReport report{};
    report.p_max = p_max;
    if (p_max < 2) return report;

    struct PerP {
        std::int64_t scanned = 0, excess = 0, saito_scanned = 0, saito_excess = 0;
        std::vector<SurgeryTriple> saito_hits;
    };
    std::vector<PerP> per_p(p_max + 1);

    // Only the residue walk is needed: a counterexample is a triple whose
    // G_X exponent range reaches 2p, i.e. max c(i) - min c(i) >= 2p.  The
    // Saito value is picked up in the same pass.
    parallel_over_p(p_max, threads, [&](std::int64_t p) {
        PerP& slot = per_p[p];
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t k = 1; k < p; ++k) {
                if (std::gcd(p, k) != 1) continue;
                ++slot.scanned;
                std::int64_t c = 0, cmin = 0, cmax = 0;
                std::int64_t r = 0;           // i*q mod p
                std::int64_t psi_k = 0;       // position of k in the basic sequence
                std::int64_t small_seen = 0;  // residues 1..k-1 seen so far
                std::int64_t phi_k = 0;
                for (std::int64_t i = 1; i <= p; ++i) {
                    r += q;
                    if (r >= p) r -= p;
                    if (r == k) {
                        psi_k = i;
                        phi_k = small_seen;
                    }
                    if (r >= 1 && r < k) ++small_seen;
                    c += r < k ? p - k : -k;
                    cmin = std::min(cmin, c);
                    cmax = std::max(cmax, c);
                }
                std::int64_t saito = p * phi_k - k * psi_k;
                bool saito_pass = saito == 1 || saito == -1 || saito == 1 - p || saito == -1 - p;
                bool excess = cmax - cmin >= 2 * p;
                if (saito_pass) ++slot.saito_scanned;
                if (excess) {
                    ++slot.excess;
                    if (saito_pass) {
                        ++slot.saito_excess;
                        slot.saito_hits.push_back({p, q, k});
                    }
                }
            }
        }
    });

    for (std::int64_t p = 2; p <= p_max; ++p) {
        report.scanned += per_p[p].scanned;
        report.counterexample_count += per_p[p].excess;
        report.saito_scanned += per_p[p].saito_scanned;
        report.saito_counterexample_count += per_p[p].saito_excess;
        for (const auto& t : per_p[p].saito_hits)
            if (static_cast<std::int64_t>(report.counterexamples.size()) < report.max_listed)
                report.counterexamples.push_back(t);
    }
    return report;
}

}  // namespace dpk
