#include "bpal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "bpal/enumerate.hpp"
#include "bpal/lce.hpp"
#include "bpal/oracle.hpp"

namespace bpal::cli {

namespace {

Text read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty()) {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw CLI::ValidationError("input", "cannot open file: " + path);
        buf << file.rdbuf();
    }
    return Text(std::move(buf).str());
}

// TSV columns: center2, span_begin, span_end, center_begin, center_end,
// size, arms (comma-joined innermost-first, empty when no arms).
void write_record_tsv(std::ostream& out, const BlockPalindrome& bp) {
    out << bp.center2 << '\t' << bp.span.begin << '\t' << bp.span.end << '\t'
        << bp.center_block.begin << '\t' << bp.center_block.end << '\t' << bp.size() << '\t';
    for (std::size_t i = 0; i < bp.arms.size(); ++i) {
        if (i) out << ',';
        out << bp.arms[i];
    }
    out << '\n';
}

void write_record_jsonl(std::ostream& out, const BlockPalindrome& bp) {
    out << "{\"center2\":" << bp.center2 << ",\"span\":[" << bp.span.begin << ','
        << bp.span.end << "],\"center\":";
    if (bp.center_block.empty()) {
        out << "null";
    } else {
        out << '[' << bp.center_block.begin << ',' << bp.center_block.end << ']';
    }
    out << ",\"size\":" << bp.size() << ",\"arms\":[";
    for (std::size_t i = 0; i < bp.arms.size(); ++i) {
        if (i) out << ',';
        out << bp.arms[i];
    }
    out << "]}\n";
}

int cmd_factorize(const std::string& path, bool pretty, std::istream& in, std::ostream& out) {
    const Text text = read_input(path, in);
    const BlockPalindrome bp = largest_block_palindrome(text);
    write_record_tsv(out, bp);
    if (pretty) out << factorization_to_string(bp, text) << '\n';
    return 0;
}

int cmd_enumerate(const std::string& path, int min_size, const std::string& format, bool stats,
                  std::istream& in, std::ostream& out) {
    const Text text = read_input(path, in);
    const bool jsonl = format == "jsonl";
    std::uint64_t items = 0;
    std::uint64_t total = 0;
    enumerate_mbp(text, min_size, [&](const BlockPalindrome& bp) {
        ++items;
        total += bp.size();
        if (jsonl) {
            write_record_jsonl(out, bp);
        } else {
            write_record_tsv(out, bp);
        }
    });
    if (stats) out << "N=" << text.size() << " items=" << items << " total=" << total << '\n';
    return 0;
}

int cmd_count(const std::string& path, bool by_size, std::istream& in, std::ostream& out) {
    const Text text = read_input(path, in);
    std::uint64_t items = 0;
    std::uint64_t total = 0;
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    std::map<std::uint32_t, std::uint64_t> histogram;
    enumerate_mbp(text, 1, [&](const BlockPalindrome& bp) {
        ++items;
        total += bp.size();
        (bp.size() % 2 == 0 ? even : odd) += 1;
        if (by_size) ++histogram[bp.size()];
    });
    out << "items=" << items << " total=" << total << " even=" << even << " odd=" << odd << '\n';
    if (by_size) {
        for (const auto& [size, count] : histogram) {
            out << "size=" << size << " count=" << count << '\n';
        }
    }
    return 0;
}

std::string printable(const Text& text) {
    std::string s;
    for (Pos i = 1; i <= text.size(); ++i) {
        unsigned char c = text.at(i);
        if (c >= 0x20 && c < 0x7f) {
            s += static_cast<char>(c);
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", c);
            s += buf;
        }
    }
    return s;
}

void dump_report(std::ostream& out, const char* label, const MbpReport& report) {
    out << label << " (" << report.items.size() << " items, total " << report.total_size << ")\n";
    for (const auto& bp : report.items) write_record_tsv(out, bp);
}

int cmd_selftest(Pos max_len, unsigned alphabet, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
    std::uint64_t tested = 0;
    std::mt19937_64 rng(seed);
    std::string scratch;

    for (Pos len = 0; len <= max_len; ++len) {
        // Exhaustive while the alphabet^len census stays small, sampled after.
        double census = 1;
        for (Pos i = 0; i < len; ++i) census *= alphabet;
        if (census <= 32768.0) {
            scratch.assign(len, 'a');
            std::vector<unsigned> digits(len, 0);
            while (true) {
                if (!selftest_check_text(Text(scratch), err)) return 1;
                ++tested;
                Pos pos = 0;
                while (pos < len) {
                    if (++digits[pos] < alphabet) {
                        scratch[pos] = static_cast<char>('a' + digits[pos]);
                        break;
                    }
                    digits[pos] = 0;
                    scratch[pos] = 'a';
                    ++pos;
                }
                if (pos == len) break;
            }
        } else {
            for (int s = 0; s < 200; ++s) {
                scratch.clear();
                for (Pos i = 0; i < len; ++i) {
                    scratch += static_cast<char>('a' + rng() % alphabet);
                }
                if (!selftest_check_text(Text(scratch), err)) return 1;
                ++tested;
            }
        }
    }
    out << "selftest passed: " << tested << " texts, max length " << max_len << ", alphabet "
        << alphabet << '\n';
    return 0;
}

std::uint64_t available_memory_bytes() {
    std::ifstream meminfo("/proc/meminfo");
    std::string key;
    std::uint64_t kb = 0;
    while (meminfo >> key >> kb) {
        if (key == "MemAvailable:") return kb * 1024;
        meminfo.ignore(256, '\n');
    }
    return 8ull << 30;
}

Text make_family(const std::string& family, std::uint64_t size, unsigned alphabet,
                 std::uint64_t seed) {
    std::string s;
    if (family == "random") {
        std::mt19937_64 rng(seed + size);
        s.reserve(size);
        for (std::uint64_t i = 0; i < size; ++i) {
            s += static_cast<char>('a' + rng() % alphabet);
        }
    } else if (family == "example1") {
        // size is the run parameter n; the text is a^n b^n a b a^n b^n.
        const std::string a(size, 'a');
        const std::string b(size, 'b');
        s = a + b + "ab" + a + b;
    } else if (family == "unary") {
        s.assign(size, 'a');
    } else if (family == "distinct") {
        if (size > 256) throw CLI::ValidationError("--sizes", "distinct family needs N <= 256");
        for (std::uint64_t i = 0; i < size; ++i) s += static_cast<char>(i);
    } else {
        throw CLI::ValidationError("--family", "unknown family: " + family);
    }
    return Text(std::move(s));
}

struct BenchRow {
    std::uint64_t n = 0;
    std::uint64_t items = 0;
    std::uint64_t total_size = 0;
    double build_ms = 0;
    double enum_ms = 0;
};

double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
        .count();
}

BenchRow bench_once(const Text& text, int min_size) {
    BenchRow row;
    row.n = text.size();
    auto t0 = std::chrono::steady_clock::now();
    LceIndex index(text);
    row.build_ms = elapsed_ms(t0);

    t0 = std::chrono::steady_clock::now();
    if (!text.empty()) {
        std::vector<PairTriple> triples = enumerate_pairs(text, index);
        sort_triples(triples, text.size());
        PropagationArray arr(text.size());
        assemble(text, triples, arr, min_size, [&](const BlockPalindrome& bp) {
            ++row.items;
            row.total_size += bp.size();
        });
    }
    row.enum_ms = elapsed_ms(t0);
    return row;
}

int cmd_bench(const std::vector<std::uint64_t>& sizes, unsigned alphabet,
              const std::string& family, std::uint64_t seed, int min_size, std::ostream& out,
              std::ostream& err) {
    out << "N,items,total_size,build_ms,enum_ms\n";
    for (std::uint64_t size : sizes) {
        const Text text = make_family(family, size, alphabet, seed);
        // Every same-symbol occurrence pair yields at least one triple, so
        // this lower-bounds the run's footprint before committing to it.
        const std::uint64_t pair_bytes = 2 * sizeof(PairTriple) * count_symbol_pairs(text);
        const std::uint64_t budget = available_memory_bytes() * 3 / 4;
        if (pair_bytes > budget) {
            err << "bench: skipping N=" << text.size() << ": >= " << (pair_bytes >> 20)
                << " MiB of pairing blocks, budget " << (budget >> 20) << " MiB\n";
            continue;
        }
        bench_once(text, min_size);  // warm-up, discarded
        const BenchRow row = bench_once(text, min_size);
        out << row.n << ',' << row.items << ',' << row.total_size << ',';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f\n", row.build_ms, row.enum_ms);
        out << buf;
    }
    return 0;
}

}  // namespace

bool reports_match(const MbpReport& actual, const MbpReport& expected) {
    return actual.items == expected.items && actual.total_size == expected.total_size;
}

bool selftest_check_text(const Text& text, std::ostream& diag) {
    const BlockPalindrome fast = largest_block_palindrome(text);
    const BlockPalindrome slow = oracle::oracle_largest(text);
    if (fast != slow) {
        diag << "largest factorization mismatch on \"" << printable(text) << "\"\n";
        write_record_tsv(diag, fast);
        write_record_tsv(diag, slow);
        return false;
    }
    const auto violations = validate(fast, text);
    if (!violations.empty()) {
        diag << "largest factorization of \"" << printable(text) << "\" violates invariants:\n";
        for (const auto& v : violations) diag << "  " << v << '\n';
        return false;
    }
    for (int min_size : {1, 2}) {
        const MbpReport fast_report = enumerate_mbp(text, min_size);
        const MbpReport slow_report = oracle::oracle_mbp(text, min_size);
        if (!reports_match(fast_report, slow_report)) {
            diag << "enumeration mismatch (min size " << min_size << ") on \"" << printable(text)
                 << "\"\n";
            dump_report(diag, "enumerated", fast_report);
            dump_report(diag, "oracle", slow_report);
            return false;
        }
    }
    if (!text.empty()) {
        LceIndex index(text);
        std::vector<PairTriple> fast_pairs = enumerate_pairs(text, index);
        std::vector<PairTriple> slow_pairs = oracle::oracle_pairs(text);
        std::sort(fast_pairs.begin(), fast_pairs.end());
        std::sort(slow_pairs.begin(), slow_pairs.end());
        if (fast_pairs != slow_pairs) {
            diag << "pairing-block mismatch on \"" << printable(text) << "\" (" << fast_pairs.size()
                 << " vs " << slow_pairs.size() << ")\n";
            return false;
        }
    }
    return true;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"block palindrome factorization and enumeration"};
    app.require_subcommand(1);

    std::string path;
    bool pretty = false;
    auto* factorize = app.add_subcommand("factorize", "largest block palindrome of the input");
    factorize->add_option("input", path, "input file (stdin when absent)");
    factorize->add_flag("--pretty", pretty, "also print the block rendering");

    int min_size = 1;
    std::string format = "tsv";
    bool stats = false;
    auto* enumerate = app.add_subcommand("enumerate", "all maximal block palindromes");
    enumerate->add_option("input", path, "input file (stdin when absent)");
    enumerate->add_option("--min-size", min_size, "smallest size to report (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    enumerate->add_option("--format", format, "record format")
        ->check(CLI::IsMember({"tsv", "jsonl"}));
    enumerate->add_flag("--stats", stats, "append a summary line");

    bool by_size = false;
    auto* count = app.add_subcommand("count", "count maximal block palindromes");
    count->add_option("input", path, "input file (stdin when absent)");
    count->add_flag("--by-size", by_size, "print a size histogram");

    Pos max_len = 10;
    unsigned alphabet = 2;
    std::uint64_t seed = 1;
    auto* selftest = app.add_subcommand("selftest", "compare fast paths against the oracles");
    selftest->add_option("--max-len", max_len, "largest text length tested")
        ->check(CLI::Range(0, 64));
    selftest->add_option("--alphabet", alphabet, "alphabet size")->check(CLI::Range(1, 256));
    selftest->add_option("--seed", seed, "seed for the sampled lengths");

    std::vector<std::uint64_t> sizes{256, 1024, 4096};
    std::string family = "random";
    unsigned bench_alphabet = 26;
    std::uint64_t bench_seed = 1;
    int bench_min_size = 1;
    auto* bench = app.add_subcommand("bench", "time the enumeration pipeline");
    bench->add_option("--sizes", sizes, "text sizes (run parameter n for example1)")
        ->delimiter(',');
    bench->add_option("--alphabet", bench_alphabet, "alphabet size for the random family")
        ->check(CLI::Range(1, 256));
    bench->add_option("--family", family, "random | example1 | unary | distinct");
    bench->add_option("--seed", bench_seed, "seed for the random family");
    bench->add_option("--min-size", bench_min_size, "smallest size to enumerate (1 or 2)")
        ->check(CLI::IsMember({1, 2}));

    try {
        // CLI11 consumes the argument vector back to front.
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        if (factorize->parsed()) return cmd_factorize(path, pretty, in, out);
        if (enumerate->parsed()) return cmd_enumerate(path, min_size, format, stats, in, out);
        if (count->parsed()) return cmd_count(path, by_size, in, out);
        if (selftest->parsed()) return cmd_selftest(max_len, alphabet, seed, out, err);
        if (bench->parsed()) return cmd_bench(sizes, bench_alphabet, family, bench_seed,
                                              bench_min_size, out, err);
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace bpal::cli
