#include "satfeat/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace satfeat {

Cnf::Cnf(uint32_t num_vars, std::vector<Clause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
    std::vector<uint32_t> counts(2 * static_cast<std::size_t>(num_vars_) + 1, 0);
    std::vector<uint32_t> seen(2 * static_cast<std::size_t>(num_vars_), UINT32_MAX);
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
        Clause& c = clauses_[ci];
        std::size_t kept = 0;
        for (Lit l : c) {
            if (l.var() >= num_vars_)
                throw std::invalid_argument("literal " + std::to_string(l.to_dimacs()) + " exceeds num_vars " +
                                            std::to_string(num_vars_));
            if (seen[l.code()] == ci) continue;
            seen[l.code()] = static_cast<uint32_t>(ci);
            c[kept++] = l;
            ++counts[l.code() + 1];
        }
        c.resize(kept);
        total_literals_ += kept;
    }
    occ_begin_.assign(counts.size(), 0);
    for (std::size_t i = 1; i < counts.size(); ++i) occ_begin_[i] = occ_begin_[i - 1] + counts[i];
    occ_.resize(total_literals_);
    std::vector<uint32_t> fill(occ_begin_.begin(), occ_begin_.end() - 1);
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci)
        for (Lit l : clauses_[ci]) occ_[fill[l.code()]++] = static_cast<uint32_t>(ci);
}

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v'; }

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

template <typename T>
bool parse_int(std::string_view word, T& out) {
    if (!word.empty() && word.front() == '+') word.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
    return ec == std::errc() && ptr == word.data() + word.size();
}

}  // namespace

Cnf parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
    bool have_header = false;
    uint64_t declared_vars = 0;
    uint64_t declared_clauses = 0;
    std::vector<Clause> clauses;
    Clause current;
    std::size_t clause_start_line = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first == line.size()) continue;
        const char lead = line[first];
        if (lead == 'c') continue;
        if (lead == '%') break;  // SATLIB end-of-data marker
        if (lead == 'p') {
            if (have_header) throw ParseError(line_no, "duplicate header");
            auto words = split_words(line);
            if (words.size() != 4 || words[0] != "p" || words[1] != "cnf" || !parse_int(words[2], declared_vars) ||
                !parse_int(words[3], declared_clauses))
                throw ParseError(line_no, "malformed header, expected 'p cnf <nvars> <nclauses>'");
            if (declared_vars > (UINT32_MAX >> 2)) throw ParseError(line_no, "variable count too large");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "clause data before 'p cnf' header");

        for (std::string_view word : split_words(line)) {
            int64_t value = 0;
            if (!parse_int(word, value)) throw ParseError(line_no, "invalid token '" + std::string(word) + "'");
            if (value == 0) {
                if (declared_clauses == 0) throw ParseError(line_no, "clause present but header declares 0 clauses");
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            const uint64_t mag = static_cast<uint64_t>(value < 0 ? -value : value);
            if (mag > declared_vars)
                throw ParseError(line_no, "literal " + std::to_string(value) + " out of range (num_vars " +
                                              std::to_string(declared_vars) + ")");
            if (current.empty()) clause_start_line = line_no;
            current.push_back(Lit::from_dimacs(value));
        }
    }

    if (!have_header) throw ParseError(0, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(clause_start_line, "last clause is missing its terminating 0");
    if (clauses.size() != declared_clauses && warnings) {
        std::ostringstream msg;
        msg << "header declares " << declared_clauses << " clauses, found " << clauses.size();
        warnings->push_back(msg.str());
    }
    return Cnf(static_cast<uint32_t>(declared_vars), std::move(clauses));
}

Cnf read_dimacs_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.string());
    return parse_dimacs(buf.str(), warnings);
}

std::string write_dimacs(const Cnf& cnf) {
    std::string out;
    out.reserve(32 + cnf.num_literals() * 7 + cnf.num_clauses() * 2);
    out += "p cnf " + std::to_string(cnf.num_vars()) + " " + std::to_string(cnf.num_clauses()) + "\n";
    char buf[24];
    for (const Clause& c : cnf.clauses()) {
        for (Lit l : c) {
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), l.to_dimacs());
            out.append(buf, end);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

std::vector<OccurrenceCount> occurrence_counts(const Cnf& cnf) {
    std::vector<OccurrenceCount> counts(cnf.num_vars());
    for (uint32_t v = 0; v < cnf.num_vars(); ++v) counts[v] = cnf.occurrence_count(v);
    return counts;
}

bool is_tautology(const Clause& c) {
    if (c.size() < 8) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[i] == ~c[j]) return true;
        return false;
    }
    Clause sorted = c;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].var() == sorted[i - 1].var()) return true;
    return false;
}

}  // namespace satfeat
