// SPDX-License-Identifier: Apache-2.0
#include "script.hpp"

#include "error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <optional>
#include <sstream>

namespace sublat {

PartialAlgebra Job::algebra() const
{
    return PartialAlgebra(Universe(elements, settings.op_symbols), constraints, settings.op_symbols);
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

struct Command {
    std::string word;
    std::string value;  // text after '=' or after the word
    bool has_equals = false;
};

/// `line` must start with a backslash after trimming.
Command split_command(std::string_view line)
{
    line.remove_prefix(1);
    std::size_t i = 0;
    while (i < line.size() && !is_space(line[i]) && line[i] != '=')
        ++i;
    Command cmd;
    cmd.word = std::string(line.substr(0, i));
    if (i < line.size() && line[i] == '=') {
        cmd.has_equals = true;
        ++i;
    }
    cmd.value = std::string(trim(line.substr(i)));
    return cmd;
}

enum class Field { None, Name, Size, Elements };

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Script run()
    {
        std::size_t pos = 0;
        while (pos <= text_.size() && !done_) {
            std::size_t eol = text_.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text_.size();
            std::string_view raw = text_.substr(pos, eol - pos);
            if (!raw.empty() && raw.back() == '\r')
                raw.remove_suffix(1);
            ++line_no_;
            handle_line(raw);
            if (eol == text_.size())
                break;
            pos = eol + 1;
        }
        if (job_)
            throw Error(ErrorKind::UnterminatedJob,
                        "job starting on line " + std::to_string(job_->first_line) + " has no \\endofjob",
                        job_->first_line);
        return std::move(script_);
    }

private:
    [[noreturn]] void fail(ErrorKind kind, const std::string& msg, std::size_t column = 0) const
    {
        throw Error(kind, msg, line_no_, column);
    }

    void handle_line(std::string_view raw)
    {
        if (raw.size() > kMaxLineLength)
            fail(ErrorKind::Syntax, "line longer than 250 characters");
        // '%' comments out the rest of any line.
        std::string_view line = raw.substr(0, raw.find('%'));
        const std::string_view t = trim(line);
        if (t.empty())
            return;
        if (t.starts_with("\\P"))
            return;
        if (job_ && in_constraints_) {
            constraint_line(line);
            return;
        }
        if (t.front() == '\\') {
            command(t, static_cast<std::size_t>(t.data() - raw.data()) + 1);
            return;
        }
        if (job_) {
            value_line(t);
            return;
        }
        // Free text between jobs carries no data.
    }

    void command(std::string_view t, std::size_t column)
    {
        const Command cmd = split_command(t);
        if (job_ && pending_ != Field::None)
            fail(ErrorKind::Syntax, "missing value after \\" + field_name(pending_), column);

        if (cmd.word == "verbose" || cmd.word == "subtrahend-in-exponent" || cmd.word == "operationsymbols") {
            if (job_)
                fail(ErrorKind::Syntax, "\\" + cmd.word + " is not allowed inside a job", column);
            setting(cmd, column);
            return;
        }
        if (cmd.word == "beginjob") {
            if (job_)
                throw Error(ErrorKind::UnterminatedJob,
                            "job starting on line " + std::to_string(job_->first_line) + " has no \\endofjob",
                            line_no_, column);
            job_.emplace();
            job_->first_line = line_no_;
            job_->settings = script_.settings;
            have_name_ = have_size_ = have_elements_ = false;
            return;
        }
        if (cmd.word == "enddata") {
            if (job_)
                throw Error(ErrorKind::UnterminatedJob,
                            "\\enddata inside the job starting on line " + std::to_string(job_->first_line),
                            line_no_, column);
            done_ = true;
            return;
        }
        if (!job_) {
            if (cmd.word == "name" || cmd.word == "size" || cmd.word == "elements" || cmd.word == "constraints" ||
                cmd.word == "endofjob")
                fail(ErrorKind::Syntax, "\\" + cmd.word + " outside \\beginjob ... \\endofjob", column);
            fail(ErrorKind::UnknownCommand, "unknown command \\" + cmd.word, column);
        }
        if (cmd.word == "name") {
            start_field(Field::Name, cmd.value);
        } else if (cmd.word == "size") {
            start_field(Field::Size, cmd.value);
        } else if (cmd.word == "elements") {
            start_field(Field::Elements, cmd.value);
        } else if (cmd.word == "constraints") {
            if (!have_elements_)
                fail(ErrorKind::Syntax, "\\constraints before \\elements", column);
            in_constraints_ = true;
            if (!cmd.value.empty())
                fail(ErrorKind::Syntax, "constraints must start on the line after \\constraints", column);
        } else if (cmd.word == "endofjob") {
            end_job(column);
        } else {
            fail(ErrorKind::UnknownCommand, "unknown command \\" + cmd.word, column);
        }
    }

    static std::string field_name(Field f)
    {
        switch (f) {
        case Field::Name: return "name";
        case Field::Size: return "size";
        case Field::Elements: return "elements";
        case Field::None: break;
        }
        return "";
    }

    void setting(const Command& cmd, std::size_t column)
    {
        if (!cmd.has_equals)
            fail(ErrorKind::Syntax, "expected \\" + cmd.word + "=<value>", column);
        Settings& s = script_.settings;
        if (cmd.word == "verbose") {
            const std::string v = lower(cmd.value);
            if (v == "true")
                s.verbose = true;
            else if (v == "false")
                s.verbose = false;
            else
                fail(ErrorKind::Syntax, "\\verbose expects true or false", column);
        } else if (cmd.word == "subtrahend-in-exponent") {
            try {
                std::size_t used = 0;
                const long long v = std::stoll(cmd.value, &used);
                if (used != cmd.value.size() || v < -1000 || v > 1000)
                    throw std::invalid_argument("range");
                s.subtrahend = v;
            } catch (const std::exception&) {
                fail(ErrorKind::Syntax, "\\subtrahend-in-exponent expects an integer", column);
            }
        } else {
            const std::string& ops = cmd.value;
            if (ops.empty())
                fail(ErrorKind::Syntax, "\\operationsymbols needs at least one symbol", column);
            for (std::size_t i = 0; i < ops.size(); ++i) {
                const char c = ops[i];
                const auto u = static_cast<unsigned char>(c);
                if (u <= 0x20 || u >= 0x7f || is_reserved_char(c) || ops.find(c) != i)
                    fail(ErrorKind::Syntax, std::string("bad operation symbol '") + c + "'", column);
            }
            s.op_symbols = ops;
        }
    }

    void start_field(Field f, const std::string& inline_value)
    {
        pending_ = f;
        if (!inline_value.empty())
            value_line(inline_value);
    }

    void value_line(std::string_view t)
    {
        switch (pending_) {
        case Field::None:
            fail(ErrorKind::Syntax, "unexpected text inside a job: '" + std::string(t) + "'");
        case Field::Name:
            job_->name = std::string(t);
            have_name_ = true;
            break;
        case Field::Size: {
            std::size_t v = 0;
            for (char c : t) {
                if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1000000)
                    fail(ErrorKind::Syntax, "\\size expects a nonnegative integer");
                v = v * 10 + static_cast<std::size_t>(c - '0');
            }
            job_->declared_size = v;
            size_line_ = line_no_;
            have_size_ = true;
            break;
        }
        case Field::Elements: {
            std::string labels;
            for (char c : t) {
                if (is_space(c) || c == ',')
                    continue;
                if (!is_valid_label(c, job_->settings.op_symbols))
                    fail(ErrorKind::Syntax, std::string("invalid element label '") + c + "'");
                if (labels.find(c) != std::string::npos)
                    fail(ErrorKind::Syntax, std::string("duplicate element label '") + c + "'");
                labels.push_back(c);
            }
            if (labels.size() > kMaxUniverse)
                fail(ErrorKind::UniverseTooLarge, "more than 64 elements");
            job_->elements = std::move(labels);
            have_elements_ = true;
            break;
        }
        }
        pending_ = Field::None;
    }

    void constraint_line(std::string_view line)
    {
        const std::string_view t = trim(line);
        if (t.starts_with("\\endofjob")) {
            in_constraints_ = false;
            command(t, static_cast<std::size_t>(t.data() - line.data()) + 1);
            return;
        }
        // `\w` and `;` start comments inside constraint blocks.
        std::size_t cut = line.size();
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == ';' || (line[i] == '\\' && i + 1 < line.size() && line[i + 1] == 'w')) {
                cut = i;
                break;
            }
            if (line[i] == '\\')
                fail(ErrorKind::UnknownCommand, "unexpected command inside \\constraints", i + 1);
        }
        line = line.substr(0, cut);

        const Settings& settings = job_->settings;
        std::size_t i = 0;
        while (i < line.size()) {
            const char c = line[i];
            if (is_space(c) || c == ',') {
                ++i;
                continue;
            }
            if (c == '(') {
                const std::size_t close = line.find(')', i);
                if (close == std::string_view::npos)
                    fail(ErrorKind::Syntax, "unclosed '(' in case label", i + 1);
                job_->case_labels.emplace_back(trim(line.substr(i + 1, close - i - 1)));
                i = close + 1;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j]) && line[j] != ',' && line[j] != '(')
                ++j;
            token(line.substr(i, j - i), i + 1, settings);
            i = j;
        }
    }

    void token(std::string_view tok, std::size_t column, const Settings& settings)
    {
        if (tok.size() != 5 || tok[3] != '=')
            fail(ErrorKind::MalformedConstraint, "constraint '" + std::string(tok) + "' is not of the form x*y=z",
                 column);
        if (settings.op_symbols.find(tok[1]) == std::string::npos)
            fail(ErrorKind::MalformedConstraint,
                 "constraint '" + std::string(tok) + "' uses undeclared operation symbol '" + tok[1] + "'", column);
        std::uint8_t idx[3] = {};
        const std::size_t pos[3] = {0, 2, 4};
        for (int k = 0; k < 3; ++k) {
            const auto p = job_->elements.find(tok[pos[k]]);
            if (p == std::string::npos)
                fail(ErrorKind::UnknownLabel,
                     "constraint '" + std::string(tok) + "' uses undeclared element '" + tok[pos[k]] + "'",
                     column + pos[k]);
            idx[k] = static_cast<std::uint8_t>(p);
        }
        job_->constraints.push_back({idx[0], tok[1], idx[1], idx[2]});
    }

    void end_job(std::size_t column)
    {
        if (!have_name_)
            fail(ErrorKind::Syntax, "job has no \\name", column);
        if (!have_size_)
            fail(ErrorKind::Syntax, "job '" + job_->name + "' has no \\size", column);
        if (!have_elements_)
            fail(ErrorKind::Syntax, "job '" + job_->name + "' has no \\elements", column);
        if (job_->declared_size != job_->elements.size())
            throw Error(ErrorKind::SizeMismatch,
                        "job '" + job_->name + "' declares size " + std::to_string(job_->declared_size) + " but lists " +
                            std::to_string(job_->elements.size()) + " elements",
                        size_line_);
        job_->last_line = line_no_;
        script_.jobs.push_back(std::move(*job_));
        job_.reset();
        in_constraints_ = false;
    }

    std::string_view text_;
    Script script_;
    std::optional<Job> job_;
    Field pending_ = Field::None;
    bool in_constraints_ = false;
    bool have_name_ = false;
    bool have_size_ = false;
    bool have_elements_ = false;
    bool done_ = false;
    std::size_t line_no_ = 0;
    std::size_t size_line_ = 0;
};

}  // namespace

Script parse_script(std::string_view text)
{
    return Parser(text).run();
}

std::string render_script(const Script& script)
{
    std::ostringstream out;
    auto settings_block = [&out](const Settings& s) {
        out << "\\verbose=" << (s.verbose ? "true" : "false") << "\n";
        out << "\\subtrahend-in-exponent=" << s.subtrahend << "\n";
        out << "\\operationsymbols=" << s.op_symbols << "\n";
    };
    const Settings* current = &script.settings;
    settings_block(*current);
    for (const Job& job : script.jobs) {
        const Settings& s = job.settings;
        if (s.verbose != current->verbose || s.subtrahend != current->subtrahend ||
            s.op_symbols != current->op_symbols) {
            out << "\n";
            settings_block(s);
        }
        current = &s;
        out << "\n\\beginjob\n\\name\n" << job.name << "\n\\size\n" << job.declared_size << "\n\\elements\n"
            << job.elements << "\n\\constraints\n";
        for (const std::string& label : job.case_labels)
            out << "(" << label << ")\n";
        std::size_t on_line = 0;
        for (const Constraint& c : job.constraints) {
            out << job.elements[c.x] << c.op << job.elements[c.y] << '=' << job.elements[c.z];
            out << (++on_line % 8 == 0 ? "\n" : " ");
        }
        if (on_line % 8 != 0)
            out << "\n";
        out << "\\endofjob\n";
    }
    out << "\n\\enddata\n";
    return out.str();
}

JobResult run_job(const Job& job, unsigned count_threads)
{
    const PartialAlgebra alg = job.algebra();
    JobResult r;
    r.job_name = job.name;
    r.n = alg.size();
    r.subtrahend = job.settings.subtrahend;
    try {
        r.sub_count = count_subuniverses(alg, CountOptions{count_threads});
    } catch (const Error& e) {
        throw Error(e.kind(), "job '" + job.name + "': " + e.what(), job.first_line);
    }
    r.sigma = sigma_from_count(r.sub_count, r.n, r.subtrahend);
    if (job.settings.verbose) {
        if (alg.size() <= kMaxEnumerated) {
            for (SubsetMask s : enumerate_subuniverses(alg))
                r.listing.push_back(format_subset(alg.universe(), s));
        } else {
            r.listing_skipped = true;
        }
    }
    return r;
}

std::vector<JobResult> run_script(const Script& script, RunOptions options)
{
    std::vector<JobResult> results(script.jobs.size());
    const unsigned workers = std::max(1u, options.job_threads);
    if (workers == 1 || script.jobs.size() < 2) {
        for (std::size_t i = 0; i < script.jobs.size(); ++i)
            results[i] = run_job(script.jobs[i], options.count_threads);
        return results;
    }
    // Strided assignment; each worker writes only its own slots.
    std::vector<std::future<void>> pending;
    for (unsigned w = 0; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < script.jobs.size(); i += workers)
                results[i] = run_job(script.jobs[i], options.count_threads);
        }));
    }
    for (auto& p : pending)
        p.get();
    return results;
}

std::string format_result(const JobResult& result, const Settings& settings)
{
    std::string out;
    if (settings.verbose) {
        if (result.listing_skipped) {
            out += "(closed subsets not listed: |A| > 24)\n";
        } else {
            for (const std::string& s : result.listing)
                out += s + "\n";
        }
    }
    out += "Result for A=" + result.job_name + ":  |Sub(A)| = " + result.sub_count.str() + ", that is,\n";
    out += "sigma(A) = |Sub(A)|*2^(" + std::to_string(result.subtrahend) + "-|A|) =  " + result.sigma.to_decimal(16) +
           " .\n";
    return out;
}

std::string format_report(const std::vector<JobResult>& results, const Settings& settings)
{
    std::string out;
    for (const JobResult& r : results) {
        Settings s = settings;
        s.verbose = settings.verbose || !r.listing.empty() || r.listing_skipped;
        out += format_result(r, s);
    }
    return out;
}

std::string format_json_lines(const std::vector<JobResult>& results)
{
    std::string out;
    for (const JobResult& r : results) {
        nlohmann::ordered_json j;
        j["name"] = r.job_name;
        j["n"] = r.n;
        j["sub_count"] = r.sub_count.str();
        j["sigma"] = r.sigma.to_power_form();
        j["sigma_decimal"] = r.sigma.to_string();
        out += j.dump() + "\n";
    }
    return out;
}

VerificationSummary summarize(const std::vector<JobResult>& results, const DyadicValue& threshold)
{
    VerificationSummary s;
    s.job_count = results.size();
    for (const JobResult& r : results) {
        if (r.sigma > s.max_sigma)
            s.max_sigma = r.sigma;
        if (r.sigma > threshold)
            s.offenders.push_back(r.job_name);
    }
    s.all_excluded = s.offenders.empty();
    return s;
}

VerificationSummary verify_script(const Script& script, const DyadicValue& threshold, RunOptions options)
{
    return summarize(run_script(script, options), threshold);
}

std::string format_summary(const VerificationSummary& summary, const DyadicValue& threshold)
{
    const std::string t = threshold.to_string();
    std::string out = std::to_string(summary.job_count) + (summary.job_count == 1 ? " job, " : " jobs, ");
    if (summary.all_excluded) {
        out += "all <= " + t + " (max sigma " + summary.max_sigma.to_string() + ")";
    } else {
        out += std::to_string(summary.offenders.size()) + " above " + t + " (max sigma " +
               summary.max_sigma.to_string() + "): ";
        for (std::size_t i = 0; i < summary.offenders.size(); ++i)
            out += (i ? ", " : "") + summary.offenders[i];
    }
    return out + "\n";
}

}  // namespace sublat
