// Byte-exact comparison of the CLI transcript against the golden file.
// Usage: golden_cli <planar-lie binary> <golden file> [--write]

#include <cstring>
#include <fstream>
#include <iostream>

#include "cli_transcript.hpp"

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: golden_cli <binary> <golden> [--write]\n";
        return 2;
    }
    std::string got = cli_transcript::run(argv[1]);
    if (argc > 3 && std::strcmp(argv[3], "--write") == 0) {
        std::ofstream out(argv[2], std::ios::binary);
        out << got;
        std::cout << "wrote " << got.size() << " bytes\n";
        return 0;
    }
    std::string want = cli_transcript::read_file(argv[2]);
    if (got == want) {
        std::cout << "transcript matches (" << got.size() << " bytes)\n";
        return 0;
    }
    std::size_t i = 0;
    while (i < got.size() && i < want.size() && got[i] == want[i]) ++i;
    std::cerr << "transcript mismatch at byte " << i << "\n";
    std::cerr << "--- got -----------------\n" << got.substr(i, 400) << "\n";
    std::cerr << "--- want ----------------\n" << want.substr(i, 400) << "\n";
    return 1;
}
