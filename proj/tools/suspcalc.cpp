#include "suspcalc/query.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

namespace {

// shell-like split honoring double quotes
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false, have = false;
    for (char ch : line) {
        if (ch == '"') {
            in_quotes = !in_quotes;
            have = true;
            continue;
        }
        if (!in_quotes && (ch == ' ' || ch == '\t')) {
            if (have) out.push_back(cur);
            cur.clear();
            have = false;
            continue;
        }
        cur.push_back(ch);
        have = true;
    }
    if (have) out.push_back(cur);
    return out;
}

int run_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open batch file " << path << "\n";
        return 2;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    // evaluate in parallel, print in input order
    std::vector<std::future<suspcalc::QueryResult>> futs;
    for (const auto& line : lines)
        futs.push_back(std::async(std::launch::async, [line] {
            std::vector<std::string> args = tokenize(line);
            if (args.empty()) return suspcalc::QueryResult{0, ""};
            return suspcalc::run_query(args);
        }));
    int code = 0;
    for (auto& f : futs) {
        suspcalc::QueryResult r = f.get();
        std::cout << r.text;
        code = std::max(code, r.code);
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() == 2 && args[0] == "--batch") return run_batch(args[1]);

    suspcalc::QueryResult r = suspcalc::run_query(args);
    if (r.code == 2) std::cerr << r.text;
    else std::cout << r.text;
    return r.code;
}
