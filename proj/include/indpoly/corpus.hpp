#pragma once

/**
 * @file corpus.hpp
 * @brief Golden dataset of known independence polynomials and the runner
 * that recomputes every entry from its expression.
 *
 * The dataset is a diff-friendly text table, one entry per line,
 * pipe-separated:
 *
 *   id | status | expr | expected | locus
 *   id | discrepancy-noted | expr | expected | printed | locus
 *
 * where expected/printed are comma-separated decimal coefficients
 * (constant term first), expr is in the graph expression language, and
 * locus records where the value is published. Blank lines and lines
 * starting with '#' are skipped.
 *
 * The runner recomputes each entry symbolically, and additionally by
 * both concrete engines (subset enumeration and the deletion
 * recurrence) whenever the expression materializes to at most 20
 * vertices. Entries with status "exact" must match bit-for-bit; a
 * "discrepancy-noted" entry must match the engine-derived expected
 * value and reports how the published rendering differs.
 */

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "indpoly/count.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/parse.hpp"

namespace indpoly {

enum class GoldenStatus { exact, discrepancy_noted };

inline std::string to_string(GoldenStatus s) {
    return s == GoldenStatus::exact ? "exact" : "discrepancy-noted";
}

struct GoldenEntry {
    std::string id;
    GoldenStatus status = GoldenStatus::exact;
    std::string expr;
    std::vector<Int> expected;          // engine-derived truth
    std::optional<std::vector<Int>> printed;  // published rendering, when it differs
    std::string locus;
};

/// Compiled-in default location of the golden dataset.
inline std::string default_corpus_path() {
#ifdef INDPOLY_CORPUS_PATH
    return INDPOLY_CORPUS_PATH;
#else
    return "data/corpus.txt";
#endif
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

inline std::vector<Int> parse_coeffs(const std::string& field, const std::string& where) {
    std::vector<Int> out;
    for (const std::string& tok : split(field, ',')) {
        if (tok.empty()) throw std::runtime_error(where + ": empty coefficient");
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw std::runtime_error(where + ": bad coefficient '" + tok + "'");
        }
    }
    return out;
}

}  // namespace detail

/// Parse the golden dataset from a stream. Malformed lines, unparsable
/// expressions, and empty coefficient lists are load-time errors.
inline std::vector<GoldenEntry> load_corpus(std::istream& in, const std::string& name = "corpus") {
    std::vector<GoldenEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::string where = name + ":" + std::to_string(lineno);
        std::vector<std::string> f = detail::split(stripped, '|');
        if (f.size() != 5 && f.size() != 6)
            throw std::runtime_error(where + ": expected 5 or 6 pipe-separated fields, got " +
                                     std::to_string(f.size()));
        GoldenEntry e;
        e.id = f[0];
        if (e.id.empty()) throw std::runtime_error(where + ": empty id");
        if (f[1] == "exact") {
            e.status = GoldenStatus::exact;
        } else if (f[1] == "discrepancy-noted") {
            e.status = GoldenStatus::discrepancy_noted;
        } else {
            throw std::runtime_error(where + ": unknown status '" + f[1] + "'");
        }
        if ((f.size() == 6) != (e.status == GoldenStatus::discrepancy_noted))
            throw std::runtime_error(where +
                                     ": a printed-coefficients field is required exactly for "
                                     "discrepancy-noted entries");
        e.expr = f[2];
        try {
            parse(e.expr);
        } catch (const parse_error& err) {
            throw std::runtime_error(where + ": expression does not parse: " + err.what());
        }
        e.expected = detail::parse_coeffs(f[3], where);
        if (f.size() == 6) e.printed = detail::parse_coeffs(f[4], where);
        e.locus = f.back();
        entries.push_back(std::move(e));
    }
    return entries;
}

inline std::vector<GoldenEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_corpus: cannot open " + path);
    return load_corpus(in, path);
}

struct CorpusResult {
    std::string id;
    GoldenStatus status = GoldenStatus::exact;
    bool pass = false;
    bool concrete_checked = false;  // both concrete engines also recomputed it
    IntPoly computed;
    std::string note;
};

struct CorpusReport {
    std::vector<CorpusResult> results;  // ordered by id

    int total() const { return int(results.size()); }
    int passed() const {
        return int(std::count_if(results.begin(), results.end(),
                                 [](const CorpusResult& r) { return r.pass; }));
    }
    bool ok() const { return passed() == total(); }
};

/// Recompute every entry; any mismatch against the expected value is a
/// failure (pass=false), including for discrepancy-noted entries, whose
/// expected value is the engine-derived one.
inline CorpusReport run_corpus(const std::vector<GoldenEntry>& entries) {
    CorpusReport rep;
    for (const GoldenEntry& e : entries) {
        CorpusResult r;
        r.id = e.id;
        r.status = e.status;
        ExprPtr ex = parse(e.expr);
        r.computed = eval_expr(*ex).poly;
        const IntPoly expected(e.expected);

        bool concrete_ok = true;
        if (vertex_count(*ex) <= 20) {
            Graph g = materialize(*ex);
            r.concrete_checked = true;
            concrete_ok = enumerate_independence_poly(g) == r.computed &&
                          independence_poly(g) == r.computed;
        }

        r.pass = r.computed == expected && concrete_ok;
        if (r.computed != expected) {
            r.note = "computed " + to_string(r.computed) + " but expected " + to_string(expected);
        } else if (!concrete_ok) {
            r.note = "symbolic and concrete engines disagree";
        } else if (e.printed) {
            const IntPoly printed(*e.printed);
            std::string diff;
            for (int k = 0; k <= std::max(r.computed.degree(), printed.degree()); ++k)
                if (r.computed.coeff(k) != printed.coeff(k)) {
                    if (!diff.empty()) diff += ", ";
                    diff += "x^" + std::to_string(k) + " computed " + r.computed.coeff(k).str() +
                            " vs printed " + printed.coeff(k).str();
                }
            r.note = "published rendering differs (" + diff + "); unimodal: computed=" +
                     (unimodality(r.computed).unimodal ? "true" : "false") +
                     ", printed=" + (unimodality(printed).unimodal ? "true" : "false");
        }
        rep.results.push_back(std::move(r));
    }
    std::sort(rep.results.begin(), rep.results.end(),
              [](const CorpusResult& a, const CorpusResult& b) { return a.id < b.id; });
    return rep;
}

inline nlohmann::json to_json(const CorpusReport& rep) {
    nlohmann::json items = nlohmann::json::array();
    for (const CorpusResult& r : rep.results)
        items.push_back({{"id", r.id},
                         {"status", to_string(r.status)},
                         {"pass", r.pass},
                         {"concrete_checked", r.concrete_checked},
                         {"coeffs", coeff_strings(r.computed)},
                         {"note", r.note}});
    return {{"entries", items},
            {"passed", rep.passed()},
            {"total", rep.total()},
            {"ok", rep.ok()}};
}

/// Fixed-width pass/fail table with a summary line.
inline std::string to_text(const CorpusReport& rep) {
    std::size_t idw = 2;
    for (const CorpusResult& r : rep.results) idw = std::max(idw, r.id.size());
    std::ostringstream out;
    for (const CorpusResult& r : rep.results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id
            << std::string(idw - r.id.size() + 2, ' ')
            << (r.concrete_checked ? "symbolic+concrete" : "symbolic        ");
        if (r.status == GoldenStatus::discrepancy_noted) out << "  [discrepancy-noted]";
        if (!r.note.empty()) out << "  " << r.note;
        out << '\n';
    }
    int noted = int(std::count_if(rep.results.begin(), rep.results.end(), [](const CorpusResult& r) {
        return r.status == GoldenStatus::discrepancy_noted;
    }));
    out << rep.passed() << "/" << rep.total() << " entries pass (" << noted
        << " discrepancy-noted)\n";
    return std::move(out).str();
}

}  // namespace indpoly
