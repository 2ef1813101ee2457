#include "sr/acceptance.hpp"
#include "sr/error.hpp"

#include <iostream>

int main(int argc, char **argv) {
    std::string dir = argc > 1 ? argv[1] : SR_CORPUS_DIR;
    int failed = 0;
    try {
        for (int n = 1; n <= 10; ++n) {
            auto r = sr::run_criterion(n, dir);
            failed += !r.pass;
            std::cout << sr::format_row(r) << std::endl;
        }
    } catch (const sr::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << 10 - failed << "/10 criteria pass\n";
    return failed ? 1 : 0;
}
