#include <CLI11.hpp>
#include <cstdio>

int main(int argc, char** argv) {
    CLI::App app{"onetris"};
    CLI11_PARSE(app, argc, argv);
    std::puts("onetris: no subcommand given");
    return 3;
}
