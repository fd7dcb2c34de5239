// SPDX-License-Identifier: Apache-2.0
#include "sublat/sublat.h"

#include "catalog.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "planarity.hpp"
#include "script.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

struct sublat_script {
    sublat::Script script;
};

struct sublat_report {
    sublat::Settings settings;
    std::vector<sublat::JobResult> results;
};

struct sublat_verification {
    sublat::VerificationSummary summary;
    sublat::DyadicValue threshold;
};

struct sublat_lattice {
    sublat::FiniteLattice lattice;
};

struct sublat_algebra {
    sublat::PartialAlgebra algebra;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

sublat_status status_of(sublat::ErrorKind kind)
{
    using sublat::ErrorKind;
    switch (kind) {
    case ErrorKind::InvalidArgument: return SUBLAT_INVALID_ARGUMENT;
    case ErrorKind::UniverseTooLarge: return SUBLAT_UNIVERSE_TOO_LARGE;
    case ErrorKind::EmptySubset: return SUBLAT_EMPTY_SUBSET;
    case ErrorKind::SizeMismatch: return SUBLAT_SIZE_MISMATCH;
    case ErrorKind::UnknownLabel: return SUBLAT_UNKNOWN_LABEL;
    case ErrorKind::MalformedConstraint: return SUBLAT_MALFORMED_CONSTRAINT;
    case ErrorKind::UnterminatedJob: return SUBLAT_UNTERMINATED_JOB;
    case ErrorKind::UnknownCommand: return SUBLAT_UNKNOWN_COMMAND;
    case ErrorKind::Syntax: return SUBLAT_SYNTAX;
    case ErrorKind::NotALattice: return SUBLAT_NOT_A_LATTICE;
    case ErrorKind::CyclicCovers: return SUBLAT_CYCLIC_COVERS;
    case ErrorKind::NotTranscribed: return SUBLAT_NOT_TRANSCRIBED;
    case ErrorKind::CatalogIncomplete: return SUBLAT_CATALOG_INCOMPLETE;
    case ErrorKind::TooLarge: return SUBLAT_TOO_LARGE;
    }
    return SUBLAT_INTERNAL;
}

sublat_status fail(sublat_status s, std::string message, std::size_t line = 0, std::size_t column = 0)
{
    last_error = std::move(message);
    last_line = line;
    last_column = column;
    return s;
}

/// Runs `f`, translating exceptions into status codes.
template <class F>
sublat_status guarded(F&& f)
{
    try {
        last_error.clear();
        last_line = last_column = 0;
        f();
        return SUBLAT_OK;
    } catch (const sublat::Error& e) {
        return fail(status_of(e.kind()), e.what(), e.line(), e.column());
    } catch (const std::bad_alloc&) {
        return fail(SUBLAT_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SUBLAT_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define SUBLAT_REQUIRE(cond)                                                        \
    do {                                                                            \
        if (!(cond))                                                                \
            return fail(SUBLAT_INVALID_ARGUMENT, "invalid argument: " #cond);       \
    } while (0)

sublat::DyadicValue threshold_or_default(const char* threshold)
{
    return threshold ? sublat::DyadicValue::parse(threshold) : sublat::DyadicValue::from_integer(83);
}

std::string certificate_text(const sublat::PlanarityResult& r, const sublat::FiniteLattice& target)
{
    const sublat::FiniteLattice member = sublat::kr_lattice(*r.obstruction);
    std::string out = r.obstruction->to_string() + ":";
    for (std::size_t i = 0; i < r.certificate.map.size(); ++i) {
        out += ' ';
        out += member.label(i);
        out += "->";
        out += target.label(r.certificate.map[i]);
    }
    return out;
}

}  // namespace

extern "C" {

const char* sublat_status_name(sublat_status status)
{
    switch (status) {
    case SUBLAT_OK: return "OK";
    case SUBLAT_INVALID_ARGUMENT: return "InvalidArgument";
    case SUBLAT_SYNTAX: return "Syntax";
    case SUBLAT_SIZE_MISMATCH: return "SizeMismatch";
    case SUBLAT_UNKNOWN_LABEL: return "UnknownLabel";
    case SUBLAT_MALFORMED_CONSTRAINT: return "MalformedConstraint";
    case SUBLAT_UNTERMINATED_JOB: return "UnterminatedJob";
    case SUBLAT_UNKNOWN_COMMAND: return "UnknownCommand";
    case SUBLAT_EMPTY_SUBSET: return "EmptySubset";
    case SUBLAT_UNIVERSE_TOO_LARGE: return "UniverseTooLarge";
    case SUBLAT_TOO_LARGE: return "TooLarge";
    case SUBLAT_NOT_A_LATTICE: return "NotALattice";
    case SUBLAT_CYCLIC_COVERS: return "CyclicCovers";
    case SUBLAT_NOT_TRANSCRIBED: return "NotTranscribed";
    case SUBLAT_CATALOG_INCOMPLETE: return "CatalogIncomplete";
    case SUBLAT_IO: return "IO";
    case SUBLAT_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* sublat_last_error(void)
{
    return last_error.c_str();
}

void sublat_last_error_location(size_t* line, size_t* column)
{
    if (line)
        *line = last_line;
    if (column)
        *column = last_column;
}

void sublat_string_free(char* s)
{
    std::free(s);
}

const char* sublat_version(void)
{
    return "1.0.0";
}

sublat_status sublat_script_parse(const char* text, size_t length, sublat_script** out)
{
    SUBLAT_REQUIRE(out && (text || length == 0));
    return guarded([&] {
        auto s = std::make_unique<sublat_script>();
        s->script = sublat::parse_script(std::string_view(text ? text : "", length));
        *out = s.release();
    });
}

sublat_status sublat_script_parse_file(const char* path, sublat_script** out)
{
    SUBLAT_REQUIRE(path && out);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return fail(SUBLAT_IO, std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        return fail(SUBLAT_IO, std::string("cannot read '") + path + "'");
    const std::string text = buf.str();
    return sublat_script_parse(text.data(), text.size(), out);
}

size_t sublat_script_job_count(const sublat_script* script)
{
    return script ? script->script.jobs.size() : 0;
}

sublat_status sublat_script_job_name(const sublat_script* script, size_t index, char** out)
{
    SUBLAT_REQUIRE(script && out && index < script->script.jobs.size());
    return guarded([&] { *out = copy_string(script->script.jobs[index].name); });
}

sublat_status sublat_script_render(const sublat_script* script, char** out)
{
    SUBLAT_REQUIRE(script && out);
    return guarded([&] { *out = copy_string(sublat::render_script(script->script)); });
}

void sublat_script_free(sublat_script* script)
{
    delete script;
}

sublat_status sublat_script_run(const sublat_script* script, unsigned job_threads, unsigned count_threads,
                                sublat_report** out)
{
    SUBLAT_REQUIRE(script && out);
    return guarded([&] {
        auto r = std::make_unique<sublat_report>();
        r->settings = script->script.settings;
        r->results = sublat::run_script(script->script, sublat::RunOptions{job_threads, count_threads});
        *out = r.release();
    });
}

size_t sublat_report_job_count(const sublat_report* report)
{
    return report ? report->results.size() : 0;
}

sublat_status sublat_report_text(const sublat_report* report, char** out)
{
    SUBLAT_REQUIRE(report && out);
    return guarded([&] { *out = copy_string(sublat::format_report(report->results, report->settings)); });
}

sublat_status sublat_report_json(const sublat_report* report, char** out)
{
    SUBLAT_REQUIRE(report && out);
    return guarded([&] { *out = copy_string(sublat::format_json_lines(report->results)); });
}

sublat_status sublat_report_sub_count(const sublat_report* report, size_t index, char** out)
{
    SUBLAT_REQUIRE(report && out && index < report->results.size());
    return guarded([&] { *out = copy_string(report->results[index].sub_count.str()); });
}

sublat_status sublat_report_sigma(const sublat_report* report, size_t index, char** out)
{
    SUBLAT_REQUIRE(report && out && index < report->results.size());
    return guarded([&] { *out = copy_string(report->results[index].sigma.to_string()); });
}

void sublat_report_free(sublat_report* report)
{
    delete report;
}

sublat_status sublat_report_verify(const sublat_report* report, const char* threshold, sublat_verification** out)
{
    SUBLAT_REQUIRE(report && out);
    return guarded([&] {
        auto v = std::make_unique<sublat_verification>();
        v->threshold = threshold_or_default(threshold);
        v->summary = sublat::summarize(report->results, v->threshold);
        *out = v.release();
    });
}

size_t sublat_verification_job_count(const sublat_verification* v)
{
    return v ? v->summary.job_count : 0;
}

int sublat_verification_all_excluded(const sublat_verification* v)
{
    return v && v->summary.all_excluded ? 1 : 0;
}

size_t sublat_verification_offender_count(const sublat_verification* v)
{
    return v ? v->summary.offenders.size() : 0;
}

sublat_status sublat_verification_offender(const sublat_verification* v, size_t index, char** out)
{
    SUBLAT_REQUIRE(v && out && index < v->summary.offenders.size());
    return guarded([&] { *out = copy_string(v->summary.offenders[index]); });
}

sublat_status sublat_verification_max_sigma(const sublat_verification* v, char** out)
{
    SUBLAT_REQUIRE(v && out);
    return guarded([&] { *out = copy_string(v->summary.max_sigma.to_string()); });
}

sublat_status sublat_verification_summary(const sublat_verification* v, char** out)
{
    SUBLAT_REQUIRE(v && out);
    return guarded([&] {
        std::string s = sublat::format_summary(v->summary, v->threshold);
        if (!s.empty() && s.back() == '\n')
            s.pop_back();
        *out = copy_string(s);
    });
}

void sublat_verification_free(sublat_verification* v)
{
    delete v;
}

sublat_status sublat_algebra_create(const char* labels, const char* constraints, const char* op_symbols,
                                    sublat_algebra** out)
{
    SUBLAT_REQUIRE(labels && out);
    return guarded([&] {
        auto a = std::make_unique<sublat_algebra>();
        a->algebra = sublat::PartialAlgebra::from_text(labels, constraints ? constraints : "",
                                                       op_symbols ? op_symbols : sublat::kDefaultOpSymbols);
        *out = a.release();
    });
}

size_t sublat_algebra_size(const sublat_algebra* alg)
{
    return alg ? alg->algebra.size() : 0;
}

sublat_status sublat_algebra_count(const sublat_algebra* alg, unsigned threads, char** out)
{
    SUBLAT_REQUIRE(alg && out);
    return guarded([&] {
        *out = copy_string(sublat::count_subuniverses(alg->algebra, sublat::CountOptions{threads}).str());
    });
}

sublat_status sublat_algebra_sigma(const sublat_algebra* alg, int64_t subtrahend, char** out)
{
    SUBLAT_REQUIRE(alg && out);
    return guarded([&] { *out = copy_string(sublat::sigma(alg->algebra, subtrahend).to_string()); });
}

sublat_status sublat_algebra_is_closed(const sublat_algebra* alg, uint64_t mask, int* closed)
{
    SUBLAT_REQUIRE(alg && closed);
    SUBLAT_REQUIRE((mask & ~sublat::full_mask(alg->algebra.size())) == 0);
    return guarded([&] { *closed = sublat::is_closed(alg->algebra, sublat::SubsetMask{mask}) ? 1 : 0; });
}

void sublat_algebra_free(sublat_algebra* alg)
{
    delete alg;
}

sublat_status sublat_lattice_parse(const char* text, sublat_lattice** out)
{
    SUBLAT_REQUIRE(text && out);
    return guarded([&] { *out = new sublat_lattice{sublat::parse_lattice_text(text)}; });
}

sublat_status sublat_lattice_from_covers(const char* labels, const char* covers, sublat_lattice** out)
{
    SUBLAT_REQUIRE(labels && covers && out);
    return guarded([&] { *out = new sublat_lattice{sublat::lattice_from_covers(labels, covers)}; });
}

size_t sublat_lattice_size(const sublat_lattice* lattice)
{
    return lattice ? lattice->lattice.size() : 0;
}

sublat_status sublat_lattice_text(const sublat_lattice* lattice, char** out)
{
    SUBLAT_REQUIRE(lattice && out);
    return guarded([&] { *out = copy_string(sublat::format_lattice_text(lattice->lattice)); });
}

sublat_status sublat_lattice_full_algebra(const sublat_lattice* lattice, sublat_algebra** out)
{
    SUBLAT_REQUIRE(lattice && out);
    return guarded([&] { *out = new sublat_algebra{sublat::full_algebra(lattice->lattice)}; });
}

sublat_status sublat_lattice_count_sublattices(const sublat_lattice* lattice, char** out)
{
    SUBLAT_REQUIRE(lattice && out);
    return guarded([&] { *out = copy_string(sublat::count_sublattices(lattice->lattice).str()); });
}

sublat_status sublat_lattice_sigma(const sublat_lattice* lattice, char** out)
{
    SUBLAT_REQUIRE(lattice && out);
    return guarded([&] { *out = copy_string(sublat::lattice_sigma(lattice->lattice).to_string()); });
}

sublat_status sublat_lattice_sigma_exceeds(const sublat_lattice* lattice, const char* threshold, int* exceeds)
{
    SUBLAT_REQUIRE(lattice && exceeds);
    return guarded([&] {
        *exceeds = sublat::lattice_sigma(lattice->lattice) > threshold_or_default(threshold) ? 1 : 0;
    });
}

sublat_status sublat_lattice_is_planar(const sublat_lattice* lattice, int* planar, char** certificate)
{
    SUBLAT_REQUIRE(lattice && planar);
    return guarded([&] {
        const sublat::PlanarityResult r = sublat::is_planar(lattice->lattice);
        *planar = r.planar ? 1 : 0;
        if (certificate)
            *certificate = r.planar ? nullptr : copy_string(certificate_text(r, lattice->lattice));
    });
}

sublat_status sublat_lattice_dual(const sublat_lattice* lattice, sublat_lattice** out)
{
    SUBLAT_REQUIRE(lattice && out);
    return guarded([&] { *out = new sublat_lattice{sublat::dual(lattice->lattice)}; });
}

void sublat_lattice_free(sublat_lattice* lattice)
{
    delete lattice;
}

sublat_status sublat_kr_text(const char* name, char** out)
{
    SUBLAT_REQUIRE(name && out);
    return guarded([&] {
        const sublat::KRMember m = sublat::kr_member(sublat::KRName::parse(name));
        if (const auto* l = std::get_if<sublat::FiniteLattice>(&m))
            *out = copy_string(sublat::format_lattice_text(*l));
        else
            *out = copy_string(sublat::format_poset_text(std::get<sublat::PosetSpec>(m)));
    });
}

sublat_status sublat_kr_lattice(const char* name, sublat_lattice** out)
{
    SUBLAT_REQUIRE(name && out);
    return guarded([&] { *out = new sublat_lattice{sublat::kr_lattice(sublat::KRName::parse(name))}; });
}

sublat_status sublat_sharpness_witness(size_t n, sublat_lattice** out)
{
    SUBLAT_REQUIRE(out);
    return guarded([&] { *out = new sublat_lattice{sublat::sharpness_witness(n)}; });
}

sublat_status sublat_random_lattice(size_t n_hint, uint64_t seed, sublat_lattice** out)
{
    SUBLAT_REQUIRE(out);
    return guarded([&] { *out = new sublat_lattice{sublat::random_lattice(n_hint, seed)}; });
}

}  // extern "C"
