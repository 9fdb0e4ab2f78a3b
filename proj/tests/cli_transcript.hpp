#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli_transcript {

/// The fixed command script exercised byte-for-byte: every subcommand,
/// both error exit classes included.
inline std::vector<std::vector<std::string>> script() {
    return {
        {"bracket", "dy - x dx", "dx"},
        {"bracket", "x dy", "y dx"},
        {"bracket", "--", "dx", "-x^2 dx"},
        {"apply", "dx", "x^2y"},
        {"apply", "2y dy - x dx", "y^3"},
        {"apply", "dx", "y/x"},
        {"closure", "dx; y dx; dy"},
        {"closure", "x dy; y dx", "--json"},
        {"closure", "dx; x^3 dx", "--cap", "10"},
        {"classify", "dx; y dx; dy", "--json"},
        {"classify", "dx; x dx; x^2 dx"},
        {"classify", "x dx + y dy; x^2 dx + x y dy"},
        {"classify", "dx; dy; x dy - y dx"},
        {"series", "dx; -x dx"},
        {"series", "dx; y dx; dy", "--kind", "lower-central"},
        {"killing", "dx; -x^2 dx; -2x dx"},
        {"radical", "x dy; y dx; x dx - y dy; x^2 dx + x y dy; x y dx + y^2 dy"},
        {"ideals", "dx; dy - x dx"},
        {"ideals", "dx; dy"},
        {"ideals", "dx; dy; x dy - y dx"},
        {"rmul", "dx; y dx; dy", "dx"},
        {"rmul", "dx; y dx; dy", "x dy"},
        {"catalog", "--type", "T3", "--n", "1", "--lambda", "0"},
        {"catalog", "--type", "T5", "--n", "0", "--beta", "1", "--gamma", "1", "--verify"},
        {"catalog", "--type", "T4", "--n", "1", "--beta", "1", "--m-list", "0,2", "--json"},
        {"catalog", "--type", "T8", "--n", "1", "--alpha", "1", "--beta", "0", "--json"},
        {"catalog", "--type", "T9", "--variant", "sl2sl2"},
        {"catalog", "--type", "T1", "--n", "0"},
        {"ratlemma-decompose", "t^4(t+1)^2", "t^6(t+1)^3"},
        {"ratlemma-decompose", "t^3", "t^2", "--json"},
        {"ratlemma-decompose", "t", "t+1"},
        {"ratlemma-obstruct", "t^2"},
        {"ratlemma-obstruct", "(t+1)/t", "--json"},
        {"ratlemma-obstruct", "5"},
        {"bracket", "x dz", "dx"},
        {"frobnicate"},
    };
}

inline std::string shell_quote(const std::string& s) {
    return "'" + s + "'"; // script arguments contain no single quotes
}

/// Run the script against the binary; stdout+stderr and exit codes are folded
/// into one deterministic transcript.
inline std::string run(const std::string& binary) {
    std::ostringstream out;
    for (const auto& cmd : script()) {
        std::string shown = "planar-lie";
        std::string full = shell_quote(binary);
        for (const auto& a : cmd) {
            shown += " " + shell_quote(a);
            full += " " + shell_quote(a);
        }
        out << "$ " << shown << "\n";
        full += " 2>&1";
        FILE* p = popen(full.c_str(), "r");
        if (!p) {
            out << "<failed to start>\n";
            continue;
        }
        std::array<char, 4096> buf{};
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out << std::string(buf.data(), n);
        int rc = pclose(p);
        out << "exit " << (rc >= 256 ? rc / 256 : rc) << "\n";
    }
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace cli_transcript
