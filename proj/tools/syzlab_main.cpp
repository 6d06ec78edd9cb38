// Command line front end: runs session files and fixture corpora, prints the
// human report to stdout, and writes the machine report when asked.

#include <cstring>
#include <fstream>
#include <iostream>

#include "syzlab/runner.hpp"

namespace {

void usage()
{
    std::cerr << "usage:\n"
              << "  syzlab run <session.syz> [flags]\n"
              << "  syzlab corpus <directory> [flags]\n"
              << "flags:\n"
              << "  --report <path>     write the machine-readable report here\n"
              << "  --cache-dir <dir>   resolution cache directory (env SYZLAB_CACHE)\n"
              << "  --bound <n>         override the session bound\n"
              << "  --char <p>          override the coefficient characteristic\n"
              << "  --jobs <n>          corpus worker count (default 1)\n";
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        usage();
        return 2;
    }
    std::string mode = argv[1];
    std::string target = argv[2];
    std::string report_path;
    syzlab::RunOptions opt;
    if (const char* env = std::getenv("SYZLAB_CACHE")) opt.cache_dir = env;

    for (int i = 3; i < argc; ++i) {
        std::string flag = argv[i];
        auto need_value = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "flag " << flag << " needs a value\n";
                exit(2);
            }
            return argv[++i];
        };
        if (flag == "--report") {
            report_path = need_value();
        } else if (flag == "--cache-dir") {
            opt.cache_dir = need_value();
        } else if (flag == "--bound") {
            opt.bound_override = std::stoull(need_value());
        } else if (flag == "--char") {
            opt.char_override = static_cast<std::uint32_t>(std::stoul(need_value()));
        } else if (flag == "--jobs") {
            opt.jobs = std::stoull(need_value());
        } else {
            std::cerr << "unknown flag " << flag << "\n";
            usage();
            return 2;
        }
    }

    try {
        syzlab::RunResult res;
        if (mode == "run") {
            res = syzlab::run_session_file(target, opt);
        } else if (mode == "corpus") {
            res = syzlab::run_corpus(target, opt);
        } else {
            usage();
            return 2;
        }
        std::cout << res.human;
        if (!report_path.empty()) {
            std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "cannot write report to " << report_path << "\n";
                return 2;
            }
            out << res.machine;
        }
        return res.any_fail() ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
