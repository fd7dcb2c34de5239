// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library only through sublat.h.

#include "sublat/sublat.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kResource = 3 };

struct StringDeleter {
    void operator()(char* s) const { sublat_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Deleter {
    void operator()(sublat_script* p) const { sublat_script_free(p); }
    void operator()(sublat_report* p) const { sublat_report_free(p); }
    void operator()(sublat_verification* p) const { sublat_verification_free(p); }
    void operator()(sublat_lattice* p) const { sublat_lattice_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

/// Thrown after the diagnostic has been printed.
struct Abort {
    int code;
};

int exit_code_for(sublat_status s)
{
    switch (s) {
    case SUBLAT_OK: return kOk;
    case SUBLAT_UNIVERSE_TOO_LARGE:
    case SUBLAT_TOO_LARGE:
    case SUBLAT_CATALOG_INCOMPLETE:
    case SUBLAT_INTERNAL: return kResource;
    default: return kInput;
    }
}

void check(sublat_status s, const std::string& context)
{
    if (s == SUBLAT_OK)
        return;
    std::cerr << "sublat: ";
    if (!context.empty())
        std::cerr << context << ": ";
    std::cerr << sublat_status_name(s) << ": " << sublat_last_error() << "\n";
    throw Abort{exit_code_for(s)};
}

std::string take(char* s)
{
    OwnedString owned(s);
    return s ? std::string(s) : std::string();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "sublat: cannot open '" << path << "'\n";
        throw Abort{kInput};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "sublat: cannot write '" << path << "'\n";
        throw Abort{kInput};
    }
}

Owned<sublat_report> run_file(const std::string& path, unsigned jobs, unsigned threads)
{
    const std::string text = read_file(path);
    sublat_script* script = nullptr;
    check(sublat_script_parse(text.data(), text.size(), &script), path);
    Owned<sublat_script> owned(script);
    sublat_report* report = nullptr;
    check(sublat_script_run(script, jobs, threads, &report), path);
    return Owned<sublat_report>(report);
}

Owned<sublat_lattice> load_lattice(const std::string& path)
{
    const std::string text = read_file(path);
    sublat_lattice* l = nullptr;
    check(sublat_lattice_parse(text.c_str(), &l), path);
    return Owned<sublat_lattice>(l);
}

std::string planarity_line(const sublat_lattice* l)
{
    int planar = 0;
    char* cert = nullptr;
    check(sublat_lattice_is_planar(l, &planar, &cert), "planar");
    const std::string c = take(cert);
    if (planar)
        return "planar (no Kelly-Rival subposet up to size " + std::to_string(sublat_lattice_size(l)) + ")";
    return "non-planar (certificate " + c + ")";
}

struct RunArgs {
    std::string input;
    std::string out;
    bool json = false;
    bool timing = false;
    unsigned jobs = 1;
    unsigned threads = 1;
};

int cmd_run(const RunArgs& a)
{
    const auto start = std::chrono::steady_clock::now();
    Owned<sublat_report> report = run_file(a.input, a.jobs, a.threads);
    char* text = nullptr;
    check(a.json ? sublat_report_json(report.get(), &text) : sublat_report_text(report.get(), &text), a.input);
    std::string out = take(text);
    if (a.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        out += "\nThe computation took " + std::to_string(ms.count()) + "/1000 seconds.\n";
    }
    std::cout << out;
    if (!a.out.empty())
        write_file(a.out, out);
    return kOk;
}

int cmd_verify(const std::string& input, const std::string& threshold, unsigned jobs, unsigned threads)
{
    Owned<sublat_report> report = run_file(input, jobs, threads);
    sublat_verification* v = nullptr;
    check(sublat_report_verify(report.get(), threshold.c_str(), &v), "threshold");
    Owned<sublat_verification> owned(v);
    char* line = nullptr;
    check(sublat_verification_summary(v, &line), input);
    std::cout << take(line) << "\n";
    return sublat_verification_all_excluded(v) ? kOk : kFailed;
}

int cmd_kr(const std::string& name, const std::optional<std::string>& index)
{
    const std::string full = index ? name + " " + *index : name;
    char* text = nullptr;
    check(sublat_kr_text(full.c_str(), &text), full);
    std::cout << take(text);
    return kOk;
}

int cmd_lattice(const std::string& what, const std::string& path)
{
    Owned<sublat_lattice> l = load_lattice(path);
    char* text = nullptr;
    if (what == "count") {
        check(sublat_lattice_count_sublattices(l.get(), &text), path);
        std::cout << take(text) << "\n";
    } else if (what == "sigma") {
        check(sublat_lattice_sigma(l.get(), &text), path);
        std::cout << take(text) << "\n";
    } else {
        std::cout << planarity_line(l.get()) << "\n";
    }
    return kOk;
}

int cmd_sharpness(std::size_t n)
{
    sublat_lattice* raw = nullptr;
    check(sublat_sharpness_witness(n, &raw), "sharpness");
    Owned<sublat_lattice> l(raw);
    char* count = nullptr;
    char* sigma = nullptr;
    check(sublat_lattice_count_sublattices(l.get(), &count), "sharpness");
    check(sublat_lattice_sigma(l.get(), &sigma), "sharpness");
    std::cout << "n = " << n << ": " << take(count) << " sublattices, sigma = " << take(sigma) << ", "
              << planarity_line(l.get()) << "\n";
    return kOk;
}

struct ScanArgs {
    std::size_t count = 0;
    std::size_t n_hint = 10;
    std::uint64_t seed = 0;
    std::string threshold = "83";
    std::string witness;
};

int cmd_scan(const ScanArgs& a)
{
    std::size_t above = 0;
    std::size_t undecided = 0;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < a.count; ++i) {
        sublat_lattice* raw = nullptr;
        check(sublat_random_lattice(a.n_hint, a.seed + i, &raw), "scan");
        Owned<sublat_lattice> l(raw);
        int exceeds = 0;
        check(sublat_lattice_sigma_exceeds(l.get(), a.threshold.c_str(), &exceeds), "scan");
        if (!exceeds)
            continue;
        ++above;
        int planar = 0;
        const sublat_status s = sublat_lattice_is_planar(l.get(), &planar, nullptr);
        if (s == SUBLAT_CATALOG_INCOMPLETE) {
            ++undecided;
            continue;
        }
        check(s, "scan");
        if (planar)
            continue;
        // sigma above the threshold yet not planar: keep the lattice.
        ++bad;
        char* text = nullptr;
        check(sublat_lattice_text(l.get(), &text), "scan");
        const std::string path =
            a.witness.empty() ? "scan-counterexample-" + std::to_string(a.seed + i) + ".txt" : a.witness;
        write_file(path, "# seed " + std::to_string(a.seed + i) + "\n" + take(text));
        std::cerr << "sublat: counterexample at seed " << a.seed + i << " written to " << path << "\n";
    }
    std::cout << "sampled " << a.count << " lattices (n_hint " << a.n_hint << ", seeds " << a.seed << ".."
              << a.seed + a.count - (a.count ? 1 : 0) << "): " << above << " with sigma > " << a.threshold << ", "
              << bad << " non-planar, " << undecided << " undecided\n";
    if (bad)
        return kFailed;
    return undecided ? kResource : kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Count subuniverses of partial algebras and check Kelly-Rival planarity"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sublat_version()));

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Run a batch file and print one result per job");
    run_cmd->add_option("input", run.input, "Batch file")->required();
    run_cmd->add_option("--out", run.out, "Also write the report to this file");
    run_cmd->add_flag("--json", run.json, "One JSON object per job instead of the text report");
    run_cmd->add_flag("--timing", run.timing, "Append the elapsed time");
    run_cmd->add_option("--jobs", run.jobs, "Jobs evaluated in parallel")->check(CLI::Range(1u, 256u));
    run_cmd->add_option("--threads", run.threads, "Threads per count (0 = all cores)");

    std::string verify_input;
    std::string threshold = "83";
    unsigned verify_jobs = 1;
    unsigned verify_threads = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Check that every job has sigma <= threshold");
    verify_cmd->add_option("input", verify_input, "Batch file")->required();
    verify_cmd->add_option("--threshold", threshold, "Dyadic bound such as 83, 82.5 or 331/4");
    verify_cmd->add_option("--jobs", verify_jobs, "Jobs evaluated in parallel")->check(CLI::Range(1u, 256u));
    verify_cmd->add_option("--threads", verify_threads, "Threads per count (0 = all cores)");

    std::string kr_name;
    std::optional<std::string> kr_index;
    auto* kr_cmd = app.add_subcommand("kr", "Print a catalog lattice or poset");
    kr_cmd->add_option("name", kr_name, "A, B, C, D, E, F, G, H, dualB, dualE, K5, fence8, crown8, ladder")
        ->required();
    kr_cmd->add_option("index", kr_index, "Index for A, E, F, G, H");

    std::string lattice_what;
    std::string lattice_path;
    auto* lattice_cmd = app.add_subcommand("lattice", "Sublattice count, sigma or planarity of a lattice file");
    lattice_cmd->add_option("what", lattice_what, "count, sigma or planar")
        ->required()
        ->check(CLI::IsMember({"count", "sigma", "planar"}));
    lattice_cmd->add_option("file", lattice_path, "Lattice text file")->required();

    std::size_t sharp_n = 9;
    auto* sharp_cmd = app.add_subcommand("sharpness", "F_0 plus a chain: count and planarity");
    sharp_cmd->add_option("n", sharp_n, "Number of elements, at least 9")->required();

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Sample lattices; those with sigma above the bound must be planar");
    scan_cmd->add_option("count", scan.count, "Number of samples")->required();
    scan_cmd->add_option("n_hint", scan.n_hint, "Target size, 1..16")->check(CLI::Range(1, 16));
    scan_cmd->add_option("seed,--seed", scan.seed, "First seed; sample i uses seed + i");
    scan_cmd->add_option("--threshold", scan.threshold, "Dyadic bound, default 83");
    scan_cmd->add_option("--witness-out", scan.witness, "File for a counterexample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*run_cmd)
            return cmd_run(run);
        if (*verify_cmd)
            return cmd_verify(verify_input, threshold, verify_jobs, verify_threads);
        if (*kr_cmd)
            return cmd_kr(kr_name, kr_index);
        if (*lattice_cmd)
            return cmd_lattice(lattice_what, lattice_path);
        if (*sharp_cmd)
            return cmd_sharpness(sharp_n);
        if (*scan_cmd)
            return cmd_scan(scan);
    } catch (const Abort& a) {
        return a.code;
    }
    return kInput;
}
