#include <vector>

#include "sboxkit/cli.hpp"

int main(int argc, char** argv) {
    return sboxkit::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
