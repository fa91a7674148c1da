#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace satfeat {

// Internal literal encoding: code = 2 * var + (negative ? 1 : 0), var 0-based.
class Lit {
public:
    constexpr Lit() = default;
    constexpr Lit(uint32_t var, bool negative) : code_(2 * var + (negative ? 1u : 0u)) {}

    static constexpr Lit from_code(uint32_t code) {
        Lit l;
        l.code_ = code;
        return l;
    }
    static Lit from_dimacs(int64_t value) {
        return Lit(static_cast<uint32_t>(std::llabs(value) - 1), value < 0);
    }

    constexpr uint32_t code() const { return code_; }
    constexpr uint32_t var() const { return code_ >> 1; }
    constexpr bool negative() const { return (code_ & 1u) != 0; }
    constexpr Lit operator~() const { return from_code(code_ ^ 1u); }
    int64_t to_dimacs() const {
        const auto v = static_cast<int64_t>(var()) + 1;
        return negative() ? -v : v;
    }

    friend constexpr bool operator==(Lit a, Lit b) = default;
    friend constexpr auto operator<=>(Lit a, Lit b) = default;

private:
    uint32_t code_ = 0;
};

using Clause = std::vector<Lit>;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by the DIMACS reader. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct OccurrenceCount {
    uint32_t pos = 0;
    uint32_t neg = 0;
    friend bool operator==(const OccurrenceCount&, const OccurrenceCount&) = default;
};

/// An immutable CNF formula with a per-literal occurrence index.
///
/// Clauses keep file order; duplicate literals are removed on construction.
/// Tautological clauses and empty clauses are kept as given.
class Cnf {
public:
    Cnf() = default;
    /// Throws std::invalid_argument if a literal exceeds `num_vars`.
    Cnf(uint32_t num_vars, std::vector<Clause> clauses);

    uint32_t num_vars() const { return num_vars_; }
    std::size_t num_clauses() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }
    const Clause& clause(std::size_t i) const { return clauses_[i]; }
    std::size_t num_literals() const { return total_literals_; }

    /// Indices of clauses containing `l`, ascending.
    std::span<const uint32_t> occurrences(Lit l) const {
        return {occ_.data() + occ_begin_[l.code()], occ_.data() + occ_begin_[l.code() + 1]};
    }
    OccurrenceCount occurrence_count(uint32_t var) const {
        return {static_cast<uint32_t>(occurrences(Lit(var, false)).size()),
                static_cast<uint32_t>(occurrences(Lit(var, true)).size())};
    }

    friend bool operator==(const Cnf& a, const Cnf& b) {
        return a.num_vars_ == b.num_vars_ && a.clauses_ == b.clauses_;
    }

private:
    uint32_t num_vars_ = 0;
    std::vector<Clause> clauses_;
    std::size_t total_literals_ = 0;
    std::vector<uint32_t> occ_begin_ = {0};
    std::vector<uint32_t> occ_;
};

/// Parses DIMACS CNF text. Header/content clause-count mismatches are reported
/// through `warnings` (when given) rather than thrown.
Cnf parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
Cnf read_dimacs_file(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

std::string write_dimacs(const Cnf& cnf);

std::vector<OccurrenceCount> occurrence_counts(const Cnf& cnf);

bool is_tautology(const Clause& c);

}  // namespace satfeat
